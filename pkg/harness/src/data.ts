/**
 * Token vocabularies and tensor encoding for the toy trainer.
 *
 * Segmented corpus files (tokens joined by single spaces, one sentence
 * per line) are read into id sequences over a frequency-capped
 * vocabulary with pad/bos/eos/unk specials.
 */
import fs from 'node:fs';

export const PAD = 0;
export const BOS = 1;
export const EOS = 2;
export const UNK = 3;
export const SPECIALS = ['<pad>', '<s>', '</s>', '<unk>'];

export interface Vocab {
  tokenToId: Map<string, number>;
  idToToken: string[];
}

export function readSegmented(file: string): string[][] {
  const text = fs.readFileSync(file, 'utf-8');
  const lines = text.split('\n');
  if (lines.length > 0 && lines[lines.length - 1] === '') lines.pop();
  return lines.map((line) => (line === '' ? [] : line.split(' ')));
}

export function readRaw(file: string): string[] {
  const text = fs.readFileSync(file, 'utf-8');
  const lines = text.split('\n');
  if (lines.length > 0 && lines[lines.length - 1] === '') lines.pop();
  return lines;
}

export function buildVocab(corpus: string[][], maxVocab: number): Vocab {
  const counts = new Map<string, number>();
  for (const tokens of corpus) {
    for (const token of tokens) {
      counts.set(token, (counts.get(token) ?? 0) + 1);
    }
  }
  // highest frequency first; ties by token for determinism
  const ranked = [...counts.entries()].sort((a, b) => b[1] - a[1] || (a[0] < b[0] ? -1 : 1));
  const kept = ranked.slice(0, Math.max(0, maxVocab - SPECIALS.length)).map(([t]) => t);
  const idToToken = [...SPECIALS, ...kept];
  const tokenToId = new Map(idToToken.map((t, i) => [t, i]));
  return { tokenToId, idToToken };
}

export function encode(tokens: string[], vocab: Vocab): number[] {
  return tokens.map((t) => vocab.tokenToId.get(t) ?? UNK);
}

/** Pad or truncate to length, right-padded with PAD. */
export function fit(ids: number[], length: number): number[] {
  const out = ids.slice(0, length);
  while (out.length < length) out.push(PAD);
  return out;
}

export interface EncodedPairs {
  /** [n, srcLen] source ids */
  source: number[][];
  /** [n, tgtLen+1] decoder input: BOS + target ids */
  decoderInput: number[][];
  /** [n, tgtLen+1] decoder labels: target ids + EOS */
  decoderTarget: number[][];
}

export function encodePairs(
  sources: string[][],
  targets: string[][],
  sourceVocab: Vocab,
  targetVocab: Vocab,
  maxSourceLen: number,
  maxTargetLen: number,
): EncodedPairs {
  const source: number[][] = [];
  const decoderInput: number[][] = [];
  const decoderTarget: number[][] = [];
  for (let i = 0; i < sources.length; i++) {
    const src = fit(encode(sources[i], sourceVocab), maxSourceLen);
    const tgt = encode(targets[i], targetVocab).slice(0, maxTargetLen);
    source.push(src);
    decoderInput.push(fit([BOS, ...tgt], maxTargetLen + 1));
    decoderTarget.push(fit([...tgt, EOS], maxTargetLen + 1));
  }
  return { source, decoderInput, decoderTarget };
}
