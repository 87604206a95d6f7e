import fs from 'node:fs';
import os from 'node:os';
import path from 'node:path';

import * as tf from '@tensorflow/tfjs';
import { describe, expect, it } from 'vitest';

import { trainerSchema } from '../src/config.js';
import { buildVocab, encodePairs, fit, readSegmented } from '../src/data.js';
import { buildModel, setupBackend, trainModel } from '../src/model.js';
import { renderTable } from '../src/report.js';

describe('data encoding', () => {
  it('caps the vocabulary and falls back to unk', () => {
    const vocab = buildVocab([['a', 'a', 'b'], ['c']], 5);
    // 4 specials + the single highest-frequency token
    expect(vocab.idToToken).toHaveLength(5);
    expect(vocab.idToToken.slice(0, 4)).toEqual(['<pad>', '<s>', '</s>', '<unk>']);
    expect(vocab.tokenToId.get('a')).toBe(4);
    expect(vocab.tokenToId.has('b')).toBe(false);
  });

  it('pads, truncates and frames decoder sequences', () => {
    expect(fit([7, 8], 4)).toEqual([7, 8, 0, 0]);
    expect(fit([7, 8, 9], 2)).toEqual([7, 8]);
    const vocab = buildVocab([['x'], ['y']], 10);
    const enc = encodePairs([['x']], [['y']], vocab, vocab, 3, 3);
    expect(enc.decoderInput[0][0]).toBe(1); // <s>
    expect(enc.decoderTarget[0]).toContain(2); // </s>
  });

  it('reads segmented files with empty lines as empty sentences', () => {
    const dir = fs.mkdtempSync(path.join(os.tmpdir(), 'data-'));
    const f = path.join(dir, 's.seg');
    fs.writeFileSync(f, 'a b\n\nc\n', 'utf-8');
    expect(readSegmented(f)).toEqual([['a', 'b'], [], ['c']]);
  });
});

describe('divergence handling', () => {
  it('detects non-finite training loss', async () => {
    await setupBackend();
    const trainer = trainerSchema.parse({
      hiddenSize: 8,
      embeddingSize: 4,
      epochs: 2,
      batchSize: 2,
      seed: 2,
      maxSourceLen: 4,
      maxTargetLen: 4,
    });
    const model = buildModel(8, 8, trainer);
    const emb = model.train.getLayer('sourceEmbedding');
    emb.setWeights([tf.fill([8, 4], NaN)]);
    const losses = await trainModel(model, [[4, 5, 0, 0]], [[1, 4, 0, 0]], [[4, 2, 0, 0]]);
    expect(losses.some((l) => !Number.isFinite(l))).toBe(true);
    expect(model.diverged).toBe(true);
  }, 60_000);

  it('renders a failed row as such in the table', () => {
    const text = renderTable({
      subtables: [[{ label: 'bpe10', score: null }, { label: '+ bpe20', score: 12.3 }]],
    });
    expect(text).toBe('dataset CHRF3\nbpe10 failed\n+ bpe20 12.30\n');
  });
});
