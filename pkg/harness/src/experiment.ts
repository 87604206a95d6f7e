/**
 * Run the full pipeline for every configured row: materialize the
 * segmented datasets through the primary CLI, combine accumulated
 * variants, train one toy model per row, translate the test set,
 * detokenize, and score with the CLI's chrf subcommand.
 *
 * Scores are never computed here: chrF comes exclusively from the
 * primary tool. Rows whose training diverges (non-finite loss) are
 * marked failed instead of aborting the run.
 */
import fs from 'node:fs';
import path from 'node:path';

import {
  ExperimentConfig,
  PlanSpec,
  SchemeSpec,
  schemeByLabel,
  schemeLabel,
} from './config.js';
import * as primary from './primary.js';
import { buildVocab, encodePairs, readRaw, readSegmented } from './data.js';
import {
  buildModel,
  decodeCorpus,
  disposeModel,
  setupBackend,
  trainModel,
} from './model.js';
import { ResultRow, ResultTable } from './report.js';

interface MaterializedScheme {
  train: string;
  dev: string;
}

function sanitize(label: string): string {
  return label.toLowerCase().replace(/[^a-z0-9]+/g, '-').replace(/^-|-$/g, '') || 'row';
}

/** Segment the target-side train and dev corpora under one scheme. */
function materializeScheme(
  config: ExperimentConfig,
  scheme: SchemeSpec,
  dir: string,
): MaterializedScheme {
  fs.mkdirSync(dir, { recursive: true });
  const out = {
    train: path.join(dir, 'train.tgt.seg'),
    dev: path.join(dir, 'dev.tgt.seg'),
  };
  const cli = config.cli;
  switch (scheme.kind) {
    case 'character':
      primary.segmentChar(cli, { input: config.data.trainTarget, output: out.train });
      primary.segmentChar(cli, { input: config.data.devTarget, output: out.dev });
      break;
    case 'bpe': {
      const table = path.join(dir, `bpe${scheme.merges}.merges`);
      primary.learnBpe(cli, {
        input: config.data.trainTarget,
        merges: scheme.merges,
        output: table,
      });
      primary.applyBpe(cli, { merges: table, input: config.data.trainTarget, output: out.train });
      primary.applyBpe(cli, { merges: table, input: config.data.devTarget, output: out.dev });
      break;
    }
    case 'external':
      primary.segmentExternal(cli, {
        command: scheme.command,
        input: config.data.trainTarget,
        output: out.train,
      });
      primary.segmentExternal(cli, {
        command: scheme.command,
        input: config.data.devTarget,
        output: out.dev,
      });
      break;
  }
  return out;
}

interface SourceSide {
  train: string;
  dev: string;
  test: string;
}

/** Fixed source-side preprocessing: word-mode BPE at the configured count. */
function materializeSource(config: ExperimentConfig, dir: string): SourceSide {
  fs.mkdirSync(dir, { recursive: true });
  const table = path.join(dir, 'source.merges');
  primary.learnBpe(config.cli, {
    input: config.data.trainSource,
    merges: config.sourceBpeMerges,
    mode: 'word',
    output: table,
  });
  const out = {
    train: path.join(dir, 'train.src.seg'),
    dev: path.join(dir, 'dev.src.seg'),
    test: path.join(dir, 'test.src.seg'),
  };
  primary.applyBpe(config.cli, { merges: table, input: config.data.trainSource, output: out.train });
  primary.applyBpe(config.cli, { merges: table, input: config.data.devSource, output: out.dev });
  primary.applyBpe(config.cli, { merges: table, input: config.data.testSource, output: out.test });
  return out;
}

async function runRow(
  config: ExperimentConfig,
  rowDir: string,
  label: string,
  source: SourceSide,
  variantTrainFiles: string[],
  devTargetFile: string,
): Promise<ResultRow> {
  fs.mkdirSync(rowDir, { recursive: true });
  const combinedSource = path.join(rowDir, 'train.src');
  const combinedTarget = path.join(rowDir, 'train.tgt');
  primary.combine(config.cli, {
    source: source.train,
    targets: variantTrainFiles,
    outSource: combinedSource,
    outTarget: combinedTarget,
    manifest: path.join(rowDir, 'manifest.tsv'),
  });

  const sourceTokens = readSegmented(combinedSource);
  const targetTokens = readSegmented(combinedTarget);
  const sourceVocab = buildVocab(sourceTokens, config.trainer.maxVocab);
  const targetVocab = buildVocab(targetTokens, config.trainer.maxVocab);
  const trainData = encodePairs(
    sourceTokens,
    targetTokens,
    sourceVocab,
    targetVocab,
    config.trainer.maxSourceLen,
    config.trainer.maxTargetLen,
  );
  const devData = encodePairs(
    readSegmented(source.dev),
    readSegmented(devTargetFile),
    sourceVocab,
    targetVocab,
    config.trainer.maxSourceLen,
    config.trainer.maxTargetLen,
  );

  const model = buildModel(sourceVocab.idToToken.length, targetVocab.idToToken.length, config.trainer);
  try {
    const losses = await trainModel(
      model,
      trainData.source,
      trainData.decoderInput,
      trainData.decoderTarget,
      devData.source.length > 0 ? devData : undefined,
    );
    if (model.diverged) {
      console.error(`row ${label}: training diverged (non-finite loss), marking failed`);
      return { label, score: null };
    }
    if (losses.length > 0) {
      console.error(
        `row ${label}: ${trainData.source.length} pairs, ` +
          `loss ${losses[0].toFixed(3)} -> ${losses[losses.length - 1].toFixed(3)}`,
      );
    }

    const testSources = readSegmented(source.test);
    const hyps = decodeCorpus(model, testSources, sourceVocab, targetVocab);
    const hypSegmented = path.join(rowDir, 'test.hyp.seg');
    fs.writeFileSync(hypSegmented, hyps.map((t) => t.join(' ') + '\n').join(''), 'utf-8');
    const hypText = path.join(rowDir, 'test.hyp.txt');
    primary.detokenize(config.cli, { input: hypSegmented, output: hypText });
    const score = primary.chrf(config.cli, { hyp: hypText, ref: config.data.testTarget });
    return { label, score };
  } finally {
    disposeModel(model);
  }
}

export async function runExperiment(config: ExperimentConfig): Promise<ResultTable> {
  await setupBackend();
  fs.mkdirSync(config.workDir, { recursive: true });

  const source = materializeSource(config, path.join(config.workDir, 'source'));
  const materialized = new Map<string, MaterializedScheme>();
  for (const scheme of config.schemes) {
    const label = schemeLabel(scheme);
    materialized.set(
      label,
      materializeScheme(config, scheme, path.join(config.workDir, 'schemes', sanitize(label))),
    );
  }
  const devTargetFile = materialized.get(config.devScheme)!.dev;

  const subtables: ResultRow[][] = [];
  for (let p = 0; p < config.plans.length; p++) {
    const plan: PlanSpec = config.plans[p];
    const rows: ResultRow[] = [];
    const accumulation = [plan.base, ...plan.additions];
    for (let k = 1; k <= accumulation.length; k++) {
      const active = accumulation.slice(0, k);
      const label = k === 1 ? plan.base : `+ ${accumulation[k - 1]}`;
      const rowDir = path.join(config.workDir, 'rows', `plan${p}-${k}-${sanitize(label)}`);
      const variantFiles = active.map((l) => {
        schemeByLabel(config, l); // validates
        return materialized.get(l)!.train;
      });
      rows.push(await runRow(config, rowDir, label, source, variantFiles, devTargetFile));
    }
    subtables.push(rows);
  }
  return { subtables };
}
