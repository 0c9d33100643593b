/** Seed-aggregation helpers: median with interquartile range, or mean. */

export interface Aggregate {
  center: number;
  lo: number;
  hi: number;
}

function quantile(sorted: number[], q: number): number {
  if (sorted.length === 0) return NaN;
  const pos = (sorted.length - 1) * q;
  const base = Math.floor(pos);
  const rest = pos - base;
  if (base + 1 < sorted.length) {
    return sorted[base] + rest * (sorted[base + 1] - sorted[base]);
  }
  return sorted[base];
}

/** Median + interquartile band across seeds. */
export function medianIqr(values: number[]): Aggregate {
  const sorted = [...values].sort((a, b) => a - b);
  return {
    center: quantile(sorted, 0.5),
    lo: quantile(sorted, 0.25),
    hi: quantile(sorted, 0.75),
  };
}

/** Mean +/- one standard deviation, for parity with mean-based figures. */
export function meanStd(values: number[]): Aggregate {
  const n = values.length;
  const mean = values.reduce((a, b) => a + b, 0) / n;
  const varSum = values.reduce((a, b) => a + (b - mean) ** 2, 0);
  const std = n > 1 ? Math.sqrt(varSum / (n - 1)) : 0;
  return { center: mean, lo: mean - std, hi: mean + std };
}

/** Group rows by a key function, preserving first-seen order. */
export function groupBy<T>(items: T[], key: (t: T) => string): Map<string, T[]> {
  const out = new Map<string, T[]>();
  for (const item of items) {
    const k = key(item);
    const bucket = out.get(k);
    if (bucket) bucket.push(item);
    else out.set(k, [item]);
  }
  return out;
}
