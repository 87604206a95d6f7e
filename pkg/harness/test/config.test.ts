import { describe, expect, it } from 'vitest';

import { parseConfig, schemeLabel } from '../src/config.js';

const base = {
  workDir: '/tmp/x',
  data: {
    trainSource: 'a',
    trainTarget: 'b',
    devSource: 'c',
    devTarget: 'd',
    testSource: 'e',
    testTarget: 'f',
  },
  schemes: [{ kind: 'character' }, { kind: 'bpe', merges: 50 }],
  plans: [{ base: 'character', additions: ['bpe50'] }],
  devScheme: 'bpe50',
  sourceBpeMerges: 40,
};

describe('config parsing', () => {
  it('applies trainer defaults', () => {
    const config = parseConfig(base);
    expect(config.cli).toBe('segcomb');
    expect(config.trainer.epochs).toBe(4);
    expect(config.trainer.seed).toBe(1);
    expect(config.trainer.deterministic).toBe(true);
    expect(config.trainer.learningRate).toBeCloseTo(0.01);
  });

  it('derives scheme labels', () => {
    expect(schemeLabel({ kind: 'character' })).toBe('character');
    expect(schemeLabel({ kind: 'bpe', merges: 100 })).toBe('bpe100');
    expect(schemeLabel({ kind: 'external', command: 'deepcut-wrap --x' })).toBe(
      'external:deepcut-wrap',
    );
    expect(schemeLabel({ kind: 'bpe', merges: 5, label: 'mine' })).toBe('mine');
  });

  it('rejects duplicate scheme labels', () => {
    const bad = { ...base, schemes: [{ kind: 'bpe', merges: 50 }, { kind: 'bpe', merges: 50 }] };
    expect(() => parseConfig(bad)).toThrow(/duplicate scheme label/);
  });

  it('rejects an accumulation plan that repeats a scheme', () => {
    const bad = { ...base, plans: [{ base: 'character', additions: ['character'] }] };
    expect(() => parseConfig(bad)).toThrow(/repeats a scheme/);
  });

  it('rejects unknown labels in plans and devScheme', () => {
    expect(() => parseConfig({ ...base, devScheme: 'nope' })).toThrow(/unknown scheme/);
    expect(() =>
      parseConfig({ ...base, plans: [{ base: 'character', additions: ['nope'] }] }),
    ).toThrow(/unknown scheme/);
    expect(() => parseConfig({ ...base, plans: [{ base: 'nope', additions: [] }] })).toThrow(
      /unknown scheme/,
    );
  });

  it('requires a dev scheme and positive source merges', () => {
    const { devScheme, ...withoutDev } = base;
    expect(() => parseConfig(withoutDev)).toThrow();
    expect(() => parseConfig({ ...base, sourceBpeMerges: 0 })).toThrow();
  });

  it('rejects non-positive bpe merge counts in schemes', () => {
    const bad = { ...base, schemes: [{ kind: 'bpe', merges: 0 }] };
    expect(() => parseConfig(bad)).toThrow();
  });
});
