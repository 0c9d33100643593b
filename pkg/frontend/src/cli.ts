#!/usr/bin/env node
/**
 * Figure renderer for the workbench's CSV/JSONL outputs.
 *
 * Usage:
 *   render --kind depth-sweep --in summary.csv --out fig.svg [--mean]
 *   render --kind m-sweep     --in summary.csv --out fig.svg [--mean]
 *   render --kind trajectory  --in trace-0-enhanced.jsonl --out fig.svg
 *
 * Exits nonzero (naming the missing column) on a schema mismatch.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { FigureKind, render } from "./render.js";
import { SchemaError } from "./csv.js";

const KINDS: FigureKind[] = ["depth-sweep", "trajectory", "m-sweep"];

interface Args {
  kind: FigureKind;
  input: string;
  output: string;
  useMean: boolean;
}

function usage(message: string): never {
  process.stderr.write(
    `error: ${message}\n` +
      `usage: render --kind <${KINDS.join("|")}> --in <file> --out <file.svg> [--mean]\n`,
  );
  process.exit(2);
}

export function parseArgs(argv: string[]): Args {
  let kind: string | undefined;
  let input: string | undefined;
  let output: string | undefined;
  let useMean = false;
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    if (a === "--kind") kind = argv[++i];
    else if (a === "--in") input = argv[++i];
    else if (a === "--out") output = argv[++i];
    else if (a === "--mean") useMean = true;
    else usage(`unknown argument "${a}"`);
  }
  if (!kind || !KINDS.includes(kind as FigureKind)) {
    usage(`--kind must be one of ${KINDS.join(", ")}`);
  }
  if (!input) usage("--in is required");
  if (!output) usage("--out is required");
  return { kind: kind as FigureKind, input, output, useMean };
}

export function main(argv: string[]): number {
  const args = parseArgs(argv);
  let text: string;
  try {
    text = readFileSync(args.input, "utf8");
  } catch {
    process.stderr.write(`error: cannot read input file "${args.input}"\n`);
    return 1;
  }
  try {
    const svg = render({ kind: args.kind, input: text, useMean: args.useMean });
    writeFileSync(args.output, svg);
  } catch (err) {
    if (err instanceof SchemaError) {
      process.stderr.write(`error: ${err.message}\n`);
      return 1;
    }
    throw err;
  }
  return 0;
}

const isDirect =
  process.argv[1] !== undefined &&
  import.meta.url.endsWith(process.argv[1].split("/").pop() ?? "");
if (isDirect) {
  process.exit(main(process.argv.slice(2)));
}
