import { defineConfig } from 'vitest/config';

export default defineConfig({
  test: {
    include: ['test/**/*.test.ts'],
    testTimeout: 870_000, // the end-to-end smoke budget is 15 minutes
    hookTimeout: 120_000,
    pool: 'forks',
    fileParallelism: false, // rows share the CPU; keep timings honest
  },
});
