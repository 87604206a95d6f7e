import { describe, expect, it } from 'vitest';

import { generateCorpus, mulberry32 } from '../src/synthetic.js';

describe('synthetic corpus', () => {
  it('is deterministic for a fixed seed', () => {
    const opts = { seed: 42, trainPairs: 30, devPairs: 5, testPairs: 5 };
    expect(generateCorpus(opts)).toEqual(generateCorpus(opts));
  });

  it('differs across seeds', () => {
    const a = generateCorpus({ seed: 1, trainPairs: 10, devPairs: 2, testPairs: 2 });
    const b = generateCorpus({ seed: 2, trainPairs: 10, devPairs: 2, testPairs: 2 });
    expect(a.trainTarget).not.toEqual(b.trainTarget);
  });

  it('produces aligned sides of the requested sizes', () => {
    const corpus = generateCorpus({ seed: 3, trainPairs: 25, devPairs: 4, testPairs: 6 });
    expect(corpus.trainSource).toHaveLength(25);
    expect(corpus.trainTarget).toHaveLength(25);
    expect(corpus.devSource).toHaveLength(4);
    expect(corpus.testSource).toHaveLength(6);
  });

  it('builds unsegmented Thai-script targets from spaced sources', () => {
    const corpus = generateCorpus({ seed: 5, trainPairs: 20, devPairs: 2, testPairs: 2 });
    for (const line of corpus.trainTarget) {
      expect(line).not.toContain(' ');
      expect(line.length).toBeGreaterThan(0);
    }
    for (const line of corpus.trainSource) {
      expect(line).toMatch(/^[a-z]+( [a-z]+)*$/);
    }
  });

  it('maps source words to targets consistently (word-for-word language)', () => {
    const corpus = generateCorpus({
      seed: 9,
      trainPairs: 200,
      devPairs: 1,
      testPairs: 1,
      minWords: 1,
      maxWords: 1,
    });
    const mapping = new Map<string, string>();
    corpus.trainSource.forEach((src, i) => {
      const tgt = corpus.trainTarget[i];
      if (mapping.has(src)) expect(mapping.get(src)).toBe(tgt);
      mapping.set(src, tgt);
    });
    expect(mapping.size).toBeGreaterThan(5);
  });

  it('mulberry32 streams are reproducible and in [0, 1)', () => {
    const a = mulberry32(7);
    const b = mulberry32(7);
    for (let i = 0; i < 100; i++) {
      const x = a();
      expect(x).toBe(b());
      expect(x).toBeGreaterThanOrEqual(0);
      expect(x).toBeLessThan(1);
    }
  });
});
