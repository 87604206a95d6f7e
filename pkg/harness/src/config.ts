/**
 * Experiment configuration: a JSON file validated with zod.
 *
 * A config names the raw train/dev/test corpora, the target-side
 * segmentation schemes to materialize, one or more accumulation plans
 * (base scheme plus ordered additions, each prefix of which becomes a
 * table row), the scheme used for the dev set during combined training
 * (dev and test are never combined), the source-side BPE merge count,
 * and the toy trainer hyperparameters.
 */
import fs from 'node:fs';

import { z } from 'zod';

export const schemeSchema = z.discriminatedUnion('kind', [
  z.object({ kind: z.literal('character'), label: z.string().optional() }),
  z.object({
    kind: z.literal('bpe'),
    merges: z.number().int().positive(),
    label: z.string().optional(),
  }),
  z.object({
    kind: z.literal('external'),
    command: z.string().min(1),
    label: z.string().optional(),
  }),
]);

export type SchemeSpec = z.infer<typeof schemeSchema>;

export function schemeLabel(scheme: SchemeSpec): string {
  if (scheme.label) return scheme.label;
  switch (scheme.kind) {
    case 'character':
      return 'character';
    case 'bpe':
      return `bpe${scheme.merges}`;
    case 'external':
      return `external:${scheme.command.split(/\s+/)[0]}`;
  }
}

export const planSchema = z.object({
  base: z.string(),
  additions: z.array(z.string()).default([]),
});

export const trainerSchema = z.object({
  layers: z.number().int().min(1).max(2).default(1),
  hiddenSize: z.number().int().positive().default(48),
  embeddingSize: z.number().int().positive().default(24),
  epochs: z.number().int().min(0).default(4),
  batchSize: z.number().int().positive().default(64),
  learningRate: z.number().positive().default(0.01),
  seed: z.number().int().default(1),
  deterministic: z.boolean().default(true),
  maxVocab: z.number().int().positive().default(2000),
  maxSourceLen: z.number().int().positive().default(24),
  maxTargetLen: z.number().int().positive().default(24),
});

export const configSchema = z
  .object({
    cli: z.string().default('segcomb'),
    workDir: z.string(),
    data: z.object({
      trainSource: z.string(),
      trainTarget: z.string(),
      devSource: z.string(),
      devTarget: z.string(),
      testSource: z.string(),
      testTarget: z.string(),
    }),
    schemes: z.array(schemeSchema).min(1),
    plans: z.array(planSchema).min(1),
    devScheme: z.string(),
    sourceBpeMerges: z.number().int().positive(),
    trainer: trainerSchema.prefault({}),
  })
  .superRefine((config, ctx) => {
    const labels = config.schemes.map(schemeLabel);
    const seen = new Set<string>();
    for (const label of labels) {
      if (seen.has(label)) {
        ctx.addIssue({ code: 'custom', message: `duplicate scheme label: ${label}` });
      }
      seen.add(label);
    }
    const known = (label: string, where: string) => {
      if (!seen.has(label)) {
        ctx.addIssue({ code: 'custom', message: `${where} names unknown scheme: ${label}` });
      }
    };
    known(config.devScheme, 'devScheme');
    for (const plan of config.plans) {
      known(plan.base, 'plan base');
      plan.additions.forEach((a) => known(a, 'plan addition'));
      const inPlan = [plan.base, ...plan.additions];
      if (new Set(inPlan).size !== inPlan.length) {
        ctx.addIssue({
          code: 'custom',
          message: `accumulation plan repeats a scheme: ${inPlan.join(', ')}`,
        });
      }
    }
  });

export type ExperimentConfig = z.infer<typeof configSchema>;
export type PlanSpec = z.infer<typeof planSchema>;
export type TrainerConfig = z.infer<typeof trainerSchema>;

export function parseConfig(raw: unknown): ExperimentConfig {
  return configSchema.parse(raw);
}

export function loadConfig(path: string): ExperimentConfig {
  return parseConfig(JSON.parse(fs.readFileSync(path, 'utf-8')));
}

export function schemeByLabel(config: ExperimentConfig, label: string): SchemeSpec {
  const found = config.schemes.find((s) => schemeLabel(s) === label);
  if (!found) throw new Error(`unknown scheme label: ${label}`);
  return found;
}
