/**
 * A small LSTM encoder-decoder with greedy decoding.
 *
 * Training uses teacher forcing over padded id tensors; inference reuses
 * the trained layers in step-wise encoder/decoder models so decoding is
 * O(steps) rather than O(steps^2). All weight initializers are seeded
 * and fitting never shuffles, so a deterministic run reproduces weights
 * (and therefore scores) exactly.
 */
import * as tf from '@tensorflow/tfjs';

import { BOS, EOS, PAD, Vocab, fit as fitLength } from './data.js';
import type { TrainerConfig } from './config.js';

export interface Seq2SeqModel {
  train: tf.LayersModel;
  encoder: tf.LayersModel;
  decoderStep: tf.LayersModel;
  trainer: TrainerConfig;
  diverged: boolean;
}

export async function setupBackend(): Promise<void> {
  await tf.setBackend('cpu');
  await tf.ready();
}

export function buildModel(
  sourceVocabSize: number,
  targetVocabSize: number,
  trainer: TrainerConfig,
): Seq2SeqModel {
  const seed = trainer.deterministic ? trainer.seed : undefined;
  const init = (offset: number) =>
    tf.initializers.glorotUniform(seed === undefined ? {} : { seed: seed + offset });
  const orth = (offset: number) =>
    tf.initializers.orthogonal(seed === undefined ? {} : { seed: seed + offset, gain: 1 });

  // No maskZero anywhere: executing a multi-output RNN node under masks
  // trips kwargs sharing inside the layers executor (initialState from one
  // execution leaks into the next). Padded steps are simply learned.
  const encoderInput = tf.input({ shape: [null], dtype: 'int32', name: 'encoderTokens' });
  const sourceEmbedding = tf.layers.embedding({
    inputDim: sourceVocabSize,
    outputDim: trainer.embeddingSize,
    embeddingsInitializer: init(11),
    name: 'sourceEmbedding',
  });
  let encoderSeq = sourceEmbedding.apply(encoderInput) as tf.SymbolicTensor;
  let stateH: tf.SymbolicTensor | undefined;
  let stateC: tf.SymbolicTensor | undefined;
  for (let layer = 0; layer < trainer.layers; layer++) {
    const lstm = tf.layers.lstm({
      units: trainer.hiddenSize,
      returnSequences: layer < trainer.layers - 1,
      returnState: true,
      kernelInitializer: init(23 + layer),
      recurrentInitializer: orth(37 + layer),
      name: `encoderLstm${layer}`,
    });
    const applied = lstm.apply(encoderSeq) as tf.SymbolicTensor[];
    [encoderSeq, stateH, stateC] = applied;
  }

  const decoderInput = tf.input({ shape: [null], dtype: 'int32', name: 'decoderTokens' });
  const targetEmbedding = tf.layers.embedding({
    inputDim: targetVocabSize,
    outputDim: trainer.embeddingSize,
    embeddingsInitializer: init(53),
    name: 'targetEmbedding',
  });
  const decoderLstm = tf.layers.lstm({
    units: trainer.hiddenSize,
    returnSequences: true,
    returnState: true,
    kernelInitializer: init(67),
    recurrentInitializer: orth(71),
    name: 'decoderLstm',
  });
  const output = tf.layers.dense({
    units: targetVocabSize,
    activation: 'softmax',
    kernelInitializer: init(83),
    name: 'tokenProbabilities',
  });

  // passing states inside the inputs array (not via initialState kwargs)
  // lets the same layer be re-applied for the step-wise inference model
  const decoderEmbedded = targetEmbedding.apply(decoderInput) as tf.SymbolicTensor;
  const [decoderSeq] = decoderLstm.apply([
    decoderEmbedded,
    stateH!,
    stateC!,
  ]) as tf.SymbolicTensor[];
  const probs = output.apply(decoderSeq) as tf.SymbolicTensor;

  const train = tf.model({
    inputs: [encoderInput, decoderInput],
    outputs: probs,
    name: 'seq2seqTrain',
  });
  train.compile({
    optimizer: tf.train.adam(trainer.learningRate),
    loss: 'sparseCategoricalCrossentropy',
  });

  const encoder = tf.model({
    inputs: encoderInput,
    outputs: [stateH!, stateC!],
    name: 'seq2seqEncoder',
  });

  const stepToken = tf.input({ shape: [1], dtype: 'int32', name: 'stepToken' });
  const stepH = tf.input({ shape: [trainer.hiddenSize], name: 'stepH' });
  const stepC = tf.input({ shape: [trainer.hiddenSize], name: 'stepC' });
  const stepEmbedded = targetEmbedding.apply(stepToken) as tf.SymbolicTensor;
  const [stepSeq, nextH, nextC] = decoderLstm.apply([
    stepEmbedded,
    stepH,
    stepC,
  ]) as tf.SymbolicTensor[];
  const stepProbs = output.apply(stepSeq) as tf.SymbolicTensor;
  const decoderStep = tf.model({
    inputs: [stepToken, stepH, stepC],
    outputs: [stepProbs, nextH, nextC],
    name: 'seq2seqDecoderStep',
  });

  return { train, encoder, decoderStep, trainer, diverged: false };
}

export async function trainModel(
  model: Seq2SeqModel,
  source: number[][],
  decoderInput: number[][],
  decoderTarget: number[][],
  validation?: { source: number[][]; decoderInput: number[][]; decoderTarget: number[][] },
): Promise<number[]> {
  if (model.trainer.epochs === 0 || source.length === 0) return [];
  const xs = tf.tensor2d(source, undefined, 'int32');
  const xd = tf.tensor2d(decoderInput, undefined, 'int32');
  // the sparse crossentropy kernel expects float labels
  const y = tf.tensor2d(decoderTarget, undefined, 'float32').expandDims(2);
  const valTensors = validation
    ? ([
        [
          tf.tensor2d(validation.source, undefined, 'int32'),
          tf.tensor2d(validation.decoderInput, undefined, 'int32'),
        ],
        tf.tensor2d(validation.decoderTarget, undefined, 'float32').expandDims(2),
      ] as [tf.Tensor[], tf.Tensor])
    : undefined;
  try {
    const history = await model.train.fit([xs, xd], y, {
      epochs: model.trainer.epochs,
      batchSize: model.trainer.batchSize,
      shuffle: !model.trainer.deterministic,
      verbose: 0,
      validationData: valTensors,
    });
    const losses = (history.history.loss as number[]).map(Number);
    model.diverged = losses.some((l) => !Number.isFinite(l));
    return losses;
  } finally {
    xs.dispose();
    xd.dispose();
    y.dispose();
    if (valTensors) {
      valTensors[0].forEach((t) => t.dispose());
      valTensors[1].dispose();
    }
  }
}

/** Greedy decode one source id sequence into target token ids (no specials). */
export function greedyDecode(model: Seq2SeqModel, sourceIds: number[], maxLen: number): number[] {
  return tf.tidy(() => {
    const enc = tf.tensor2d([sourceIds], undefined, 'int32');
    let [h, c] = model.encoder.predict(enc) as tf.Tensor[];
    let token = BOS;
    const out: number[] = [];
    for (let step = 0; step < maxLen; step++) {
      const [probs, nh, nc] = model.decoderStep.predict([
        tf.tensor2d([[token]], [1, 1], 'int32'),
        h,
        c,
      ]) as tf.Tensor[];
      const flat = probs.reshape([-1]) as tf.Tensor1D;
      token = flat.argMax().dataSync()[0];
      h = nh;
      c = nc;
      if (token === EOS || token === PAD) break;
      out.push(token);
    }
    return out;
  });
}

export function decodeCorpus(
  model: Seq2SeqModel,
  sources: string[][],
  sourceVocab: Vocab,
  targetVocab: Vocab,
): string[][] {
  const maxSrc = model.trainer.maxSourceLen;
  const maxTgt = model.trainer.maxTargetLen;
  const hyps: string[][] = [];
  for (const tokens of sources) {
    const ids = fitLength(
      tokens.map((t) => sourceVocab.tokenToId.get(t) ?? 3),
      maxSrc,
    );
    const decoded = greedyDecode(model, ids, maxTgt + 1);
    hyps.push(decoded.map((id) => targetVocab.idToToken[id] ?? '<unk>'));
  }
  return hyps;
}

export function disposeModel(model: Seq2SeqModel): void {
  model.train.dispose();
}
