/**
 * Deterministic toy parallel corpus for pipeline tests and demos.
 *
 * The "language" is a word-for-word monotone mapping: each source word
 * corresponds to one short Thai-script word, and target sentences are
 * the mapped words concatenated without separators (scriptio continua),
 * so segmentation genuinely matters downstream while translation itself
 * stays learnable by a very small model.
 */
import fs from 'node:fs';
import path from 'node:path';

export interface SyntheticCorpus {
  trainSource: string[];
  trainTarget: string[];
  devSource: string[];
  devTarget: string[];
  testSource: string[];
  testTarget: string[];
}

/** mulberry32: tiny seeded PRNG, enough for corpus generation. */
export function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

const SOURCE_WORDS = [
  'nam', 'rot', 'fai', 'ma', 'mak', 'mee', 'chan', 'mai', 'dee', 'tee',
  'pai', 'yoo', 'nee', 'laew', 'gin', 'bin', 'rak', 'lek', 'yai', 'suay',
  'ron', 'yen', 'wan', 'keun',
];

const THAI_CONSONANTS = 'กขคงจฉชซญดตถทนบปผพฟมยรลวศสหอ';
const THAI_VOWELS = 'ะาิีึืุูเแโไ';

function buildLexicon(rand: () => number): Map<string, string> {
  const lexicon = new Map<string, string>();
  const used = new Set<string>();
  for (const word of SOURCE_WORDS) {
    let target = '';
    do {
      const len = 2 + Math.floor(rand() * 2);
      let t = '';
      for (let i = 0; i < len; i++) {
        t += THAI_CONSONANTS[Math.floor(rand() * THAI_CONSONANTS.length)];
        if (rand() < 0.6) t += THAI_VOWELS[Math.floor(rand() * THAI_VOWELS.length)];
      }
      target = t;
    } while (used.has(target));
    used.add(target);
    lexicon.set(word, target);
  }
  return lexicon;
}

export function generateCorpus(opts: {
  seed: number;
  trainPairs: number;
  devPairs: number;
  testPairs: number;
  minWords?: number;
  maxWords?: number;
}): SyntheticCorpus {
  const rand = mulberry32(opts.seed);
  const lexicon = buildLexicon(rand);
  const minWords = opts.minWords ?? 2;
  const maxWords = opts.maxWords ?? 6;

  const pair = (): [string, string] => {
    const n = minWords + Math.floor(rand() * (maxWords - minWords + 1));
    const words: string[] = [];
    for (let i = 0; i < n; i++) {
      words.push(SOURCE_WORDS[Math.floor(rand() * SOURCE_WORDS.length)]);
    }
    return [words.join(' '), words.map((w) => lexicon.get(w)!).join('')];
  };

  const take = (count: number) => {
    const sources: string[] = [];
    const targets: string[] = [];
    for (let i = 0; i < count; i++) {
      const [s, t] = pair();
      sources.push(s);
      targets.push(t);
    }
    return { sources, targets };
  };

  const train = take(opts.trainPairs);
  const dev = take(opts.devPairs);
  const test = take(opts.testPairs);
  return {
    trainSource: train.sources,
    trainTarget: train.targets,
    devSource: dev.sources,
    devTarget: dev.targets,
    testSource: test.sources,
    testTarget: test.targets,
  };
}

export function writeCorpus(corpus: SyntheticCorpus, dir: string): Record<string, string> {
  fs.mkdirSync(dir, { recursive: true });
  const paths: Record<string, string> = {};
  for (const [key, lines] of Object.entries(corpus)) {
    const file = path.join(dir, `${key}.txt`);
    fs.writeFileSync(file, lines.map((l: string) => l + '\n').join(''), 'utf-8');
    paths[key] = file;
  }
  return paths;
}
