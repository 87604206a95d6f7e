#!/usr/bin/env node
/**
 * Harness entry point.
 *
 *   segcomb-harness synth --out DIR [--pairs 500] [--dev 50] [--test 60] [--seed 7]
 *       write a deterministic synthetic parallel corpus plus a ready-to-run
 *       config.json into DIR
 *
 *   segcomb-harness run --config CONFIG [--report out.txt] [--tsv out.tsv]
 *       run every configured row and print/write the result table
 */
import fs from 'node:fs';
import path from 'node:path';
import { parseArgs } from 'node:util';

import { loadConfig } from './config.js';
import { runExperiment } from './experiment.js';
import { renderTable, writeReport } from './report.js';
import { generateCorpus, writeCorpus } from './synthetic.js';

function synthMain(argv: string[]): number {
  const { values } = parseArgs({
    args: argv,
    options: {
      out: { type: 'string' },
      pairs: { type: 'string', default: '500' },
      dev: { type: 'string', default: '50' },
      test: { type: 'string', default: '60' },
      seed: { type: 'string', default: '7' },
    },
  });
  if (!values.out) {
    console.error('synth: --out DIR is required');
    return 1;
  }
  const dir = values.out;
  const corpus = generateCorpus({
    seed: Number(values.seed),
    trainPairs: Number(values.pairs),
    devPairs: Number(values.dev),
    testPairs: Number(values.test),
  });
  const files = writeCorpus(corpus, path.join(dir, 'data'));
  const config = {
    workDir: path.join(dir, 'work'),
    data: files,
    schemes: [{ kind: 'character' }, { kind: 'bpe', merges: 50 }, { kind: 'bpe', merges: 100 }],
    plans: [{ base: 'character', additions: ['bpe50', 'bpe100'] }],
    devScheme: 'bpe50',
    sourceBpeMerges: 40,
    trainer: { epochs: 3, seed: Number(values.seed) },
  };
  const configPath = path.join(dir, 'config.json');
  fs.writeFileSync(configPath, JSON.stringify(config, null, 2) + '\n', 'utf-8');
  console.log(`wrote corpus under ${dir}/data and config ${configPath}`);
  return 0;
}

async function runMain(argv: string[]): Promise<number> {
  const { values } = parseArgs({
    args: argv,
    options: {
      config: { type: 'string' },
      report: { type: 'string' },
      tsv: { type: 'string' },
    },
  });
  if (!values.config) {
    console.error('run: --config FILE is required');
    return 1;
  }
  const config = loadConfig(values.config);
  const table = await runExperiment(config);
  process.stdout.write(renderTable(table));
  const reportPath = values.report ?? path.join(config.workDir, 'report.txt');
  const tsvPath = values.tsv ?? path.join(config.workDir, 'report.tsv');
  writeReport(table, reportPath, tsvPath);
  console.error(`report written to ${reportPath} and ${tsvPath}`);
  return 0;
}

async function main(): Promise<number> {
  const [command, ...rest] = process.argv.slice(2);
  switch (command) {
    case 'synth':
      return synthMain(rest);
    case 'run':
      return runMain(rest);
    default:
      console.error('usage: segcomb-harness <synth|run> [options]');
      return 1;
  }
}

main().then(
  (code) => process.exit(code),
  (err) => {
    console.error(err instanceof Error ? err.message : err);
    process.exit(1);
  },
);
