/**
 * Result tables: one row per trained configuration, grouped into
 * accumulation subtables, mirroring the two-column (dataset, CHRF3)
 * layout of the reference experiment write-ups.
 */
import fs from 'node:fs';

export interface ResultRow {
  label: string;
  /** Corpus chrF in [0, 100]; null when the row failed (diverged training). */
  score: number | null;
}

export interface ResultTable {
  subtables: ResultRow[][];
}

const HEADER = ['dataset', 'CHRF3'];

function formatScore(score: number | null): string {
  return score === null ? 'failed' : score.toFixed(2);
}

export function renderTable(table: ResultTable, separator = ' '): string {
  const lines = [HEADER.join(separator)];
  table.subtables.forEach((rows, i) => {
    if (i > 0) lines.push('');
    for (const row of rows) {
      lines.push(`${row.label}${separator}${formatScore(row.score)}`);
    }
  });
  return lines.join('\n') + '\n';
}

export function renderTsv(table: ResultTable): string {
  return renderTable(table, '\t');
}

export function writeReport(table: ResultTable, textPath: string, tsvPath?: string): void {
  fs.writeFileSync(textPath, renderTable(table), 'utf-8');
  if (tsvPath) fs.writeFileSync(tsvPath, renderTsv(table), 'utf-8');
}
