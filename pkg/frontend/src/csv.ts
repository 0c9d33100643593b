/** Minimal CSV/JSONL readers for the workbench's summary and trace files. */

export class SchemaError extends Error {}

export interface Table {
  columns: string[];
  rows: Record<string, string>[];
}

/**
 * Parse CSV text into a header-keyed table.
 *
 * The workbench writes plain comma-separated values with no embedded commas
 * (list-valued cells are semicolon-joined), so a split-based parser with
 * optional double-quote stripping is sufficient.
 */
export function parseCsv(text: string): Table {
  const lines = text.split(/\r?\n/).filter((ln) => ln.trim() !== "");
  if (lines.length === 0) {
    throw new SchemaError("no rows: input CSV is empty");
  }
  const columns = splitLine(lines[0]);
  const rows = lines.slice(1).map((ln) => {
    const cells = splitLine(ln);
    const row: Record<string, string> = {};
    columns.forEach((c, i) => {
      row[c] = cells[i] ?? "";
    });
    return row;
  });
  if (rows.length === 0) {
    throw new SchemaError("no rows: CSV has a header but no data rows");
  }
  return { columns, rows };
}

function splitLine(line: string): string[] {
  return line.split(",").map((cell) => {
    const t = cell.trim();
    return t.startsWith('"') && t.endsWith('"') ? t.slice(1, -1) : t;
  });
}

/** Assert that every required column is present, naming the first missing one. */
export function requireColumns(table: Table, required: string[]): void {
  for (const col of required) {
    if (!table.columns.includes(col)) {
      throw new SchemaError(`schema mismatch: missing column "${col}"`);
    }
  }
}

export interface TracePoint {
  stage: string;
  iter: number;
  energy: number;
  grad_norm: number;
}

/** Parse a trace file: one JSON object per line with stage/iter/energy keys. */
export function parseTraceJsonl(text: string): TracePoint[] {
  const lines = text.split(/\r?\n/).filter((ln) => ln.trim() !== "");
  if (lines.length === 0) {
    throw new SchemaError("no rows: trace file is empty");
  }
  return lines.map((ln, i) => {
    let obj: Record<string, unknown>;
    try {
      obj = JSON.parse(ln);
    } catch {
      throw new SchemaError(`trace line ${i + 1} is not valid JSON`);
    }
    for (const key of ["stage", "iter", "energy"]) {
      if (!(key in obj)) {
        throw new SchemaError(`schema mismatch: missing column "${key}"`);
      }
    }
    return {
      stage: String(obj.stage),
      iter: Number(obj.iter),
      energy: Number(obj.energy),
      grad_norm: Number(obj.grad_norm ?? NaN),
    };
  });
}
