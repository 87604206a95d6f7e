/**
 * Thin subprocess wrappers over the segcomb CLI.
 *
 * The harness consumes the primary toolkit exclusively through these:
 * file formats in, file formats out, plus the one-line chrF report. If a
 * subcommand fails its stderr diagnostics are propagated verbatim.
 */
import { spawnSync } from 'node:child_process';

export class PrimaryCliError extends Error {
  constructor(
    message: string,
    public readonly exitCode: number | null,
  ) {
    super(message);
  }
}

export function runCli(cli: string, args: string[]): string {
  const proc = spawnSync(cli, args, { encoding: 'utf-8', maxBuffer: 1 << 28 });
  if (proc.error) {
    throw new PrimaryCliError(`cannot run ${cli}: ${proc.error.message}`, null);
  }
  if (proc.status !== 0) {
    const diag = (proc.stderr ?? '').trim();
    throw new PrimaryCliError(
      `${cli} ${args.join(' ')} exited ${proc.status}${diag ? `: ${diag}` : ''}`,
      proc.status,
    );
  }
  return proc.stdout ?? '';
}

export function learnBpe(
  cli: string,
  opts: { input: string; merges: number; output: string; mode?: 'line' | 'word' },
): void {
  const args = ['learn-bpe', '--input', opts.input, '--merges', String(opts.merges), '--output', opts.output];
  if (opts.mode) args.push('--mode', opts.mode);
  runCli(cli, args);
}

export function applyBpe(cli: string, opts: { merges: string; input: string; output: string }): void {
  runCli(cli, ['apply-bpe', '--merges', opts.merges, '--input', opts.input, '--output', opts.output]);
}

export function segmentChar(cli: string, opts: { input: string; output: string }): void {
  runCli(cli, ['segment', '--method', 'char', '--input', opts.input, '--output', opts.output]);
}

export function segmentExternal(
  cli: string,
  opts: { command: string; input: string; output: string },
): void {
  runCli(cli, [
    'segment', '--method', 'external', '--cmd', opts.command,
    '--input', opts.input, '--output', opts.output,
  ]);
}

export function combine(
  cli: string,
  opts: { source: string; targets: string[]; outSource: string; outTarget: string; manifest?: string },
): void {
  const args = ['combine', '--source', opts.source];
  for (const target of opts.targets) args.push('--target', target);
  args.push('--out-source', opts.outSource, '--out-target', opts.outTarget);
  if (opts.manifest) args.push('--manifest', opts.manifest);
  runCli(cli, args);
}

export function detokenize(cli: string, opts: { input: string; output: string }): void {
  runCli(cli, ['detokenize', '--input', opts.input, '--output', opts.output]);
}

/** Corpus-level chrF as reported by the primary CLI's single output line. */
export function chrf(cli: string, opts: { hyp: string; ref: string }): number {
  const out = runCli(cli, ['chrf', '--hyp', opts.hyp, '--ref', opts.ref]);
  const match = out.match(/^chrf\S*\s*=\s*([0-9.]+)\s*$/m);
  if (!match) {
    throw new PrimaryCliError(`unparseable chrf output: ${JSON.stringify(out)}`, 0);
  }
  return Number(match[1]);
}
