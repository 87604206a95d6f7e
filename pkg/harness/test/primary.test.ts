import fs from 'node:fs';
import os from 'node:os';
import path from 'node:path';

import { describe, expect, it } from 'vitest';

import * as primary from '../src/primary.js';

const CLI = process.env.SEGCOMB_CLI ?? 'segcomb';

function tmpdir(): string {
  return fs.mkdtempSync(path.join(os.tmpdir(), 'primary-'));
}

describe('primary CLI wrappers', () => {
  it('segments, detokenizes and scores through the real CLI', () => {
    const dir = tmpdir();
    const input = path.join(dir, 'in.txt');
    fs.writeFileSync(input, 'รถไฟมา\nมากที่\n', 'utf-8');
    const seg = path.join(dir, 'out.seg');
    primary.segmentChar(CLI, { input, output: seg });
    expect(fs.readFileSync(seg, 'utf-8')).toBe('ร ถ ไ ฟ ม า\nม า ก ท ี ่\n');

    const detok = path.join(dir, 'detok.txt');
    primary.detokenize(CLI, { input: seg, output: detok });
    expect(fs.readFileSync(detok, 'utf-8')).toBe('รถไฟมา\nมากที่\n');

    expect(primary.chrf(CLI, { hyp: detok, ref: input })).toBe(100);
  });

  it('learns and applies BPE through the real CLI', () => {
    const dir = tmpdir();
    const input = path.join(dir, 'in.txt');
    fs.writeFileSync(input, 'abab\nabab\nabab\n', 'utf-8');
    const merges = path.join(dir, 't.merges');
    primary.learnBpe(CLI, { input, merges: 5, output: merges });
    const header = fs.readFileSync(merges, 'utf-8').split('\n')[0];
    expect(header).toBe('#segcomb merges v1 mode=line requested=5');
    const seg = path.join(dir, 'out.seg');
    primary.applyBpe(CLI, { merges, input, output: seg });
    expect(fs.readFileSync(seg, 'utf-8')).toBe('abab\nabab\nabab\n');
  });

  it('combines with one repeated source block per target', () => {
    const dir = tmpdir();
    const src = path.join(dir, 'src.seg');
    fs.writeFileSync(src, 'a b\nc d\n', 'utf-8');
    const t1 = path.join(dir, 't1.seg');
    fs.writeFileSync(t1, 'x\ny\n', 'utf-8');
    const t2 = path.join(dir, 't2.seg');
    fs.writeFileSync(t2, 'x x\ny y\n', 'utf-8');
    const outSource = path.join(dir, 'out.src');
    const outTarget = path.join(dir, 'out.tgt');
    primary.combine(CLI, { source: src, targets: [t1, t2], outSource, outTarget });
    expect(fs.readFileSync(outSource, 'utf-8')).toBe('a b\nc d\na b\nc d\n');
    expect(fs.readFileSync(outTarget, 'utf-8')).toBe('x\ny\nx x\ny y\n');
  });

  it('propagates CLI diagnostics on failure', () => {
    const dir = tmpdir();
    const input = path.join(dir, 'in.txt');
    fs.writeFileSync(input, 'ab\n', 'utf-8');
    expect(() =>
      primary.learnBpe(CLI, { input, merges: 0, output: path.join(dir, 'x.merges') }),
    ).toThrow(primary.PrimaryCliError);
    try {
      primary.learnBpe(CLI, { input, merges: 0, output: path.join(dir, 'x.merges') });
    } catch (err) {
      expect((err as primary.PrimaryCliError).exitCode).toBe(1);
      expect((err as Error).message).toMatch(/positive/);
    }
  });

  it('fails clearly when the binary is missing', () => {
    expect(() => primary.chrf('definitely-not-a-real-cli', { hyp: 'x', ref: 'y' })).toThrow(
      /cannot run/,
    );
  });
});
