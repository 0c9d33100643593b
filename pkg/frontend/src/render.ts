/** The three figure kinds: depth-sweep, trajectory, and m-sweep. */

import {
  parseCsv,
  parseTraceJsonl,
  requireColumns,
  SchemaError,
  Table,
} from "./csv.js";
import { Aggregate, groupBy, meanStd, medianIqr } from "./stats.js";
import { renderChart, Series } from "./svg.js";

export type FigureKind = "depth-sweep" | "trajectory" | "m-sweep";

export interface FigureSpec {
  kind: FigureKind;
  input: string; // file contents (CSV for sweeps, JSONL for trajectories)
  useMean?: boolean;
}

const ARM_COLORS: Record<string, string> = {
  baseline: "#1f77b4",
  enhanced: "#ff7f0e",
};

function aggregate(values: number[], useMean: boolean | undefined): Aggregate {
  return useMean ? meanStd(values) : medianIqr(values);
}

function armSeries(
  table: Table,
  xColumn: string,
  yColumn: string,
  useMean: boolean | undefined,
): Series[] {
  const byArm = groupBy(table.rows, (r) => r.arm);
  const series: Series[] = [];
  for (const [arm, rows] of byArm) {
    const byX = groupBy(rows, (r) => r[xColumn]);
    const points: { x: number; y: number }[] = [];
    const band: { x: number; lo: number; hi: number }[] = [];
    const xs = [...byX.keys()].map(Number).sort((a, b) => a - b);
    for (const x of xs) {
      const vals = byX.get(String(x))!.map((r) => Number(r[yColumn]));
      const agg = aggregate(vals, useMean);
      points.push({ x, y: agg.center });
      band.push({ x, lo: agg.lo, hi: agg.hi });
    }
    series.push({
      label: arm,
      color: ARM_COLORS[arm] ?? "#2ca02c",
      points,
      band,
    });
  }
  return series;
}

function renderDepthSweep(spec: FigureSpec): string {
  const table = parseCsv(spec.input);
  requireColumns(table, ["arm", "depth", "fidelity", "seed"]);
  const stat = spec.useMean ? "mean" : "median";
  return renderChart({
    title: `Fidelity vs circuit depth (${stat} across seeds)`,
    xLabel: "circuit depth p",
    yLabel: "ground-state fidelity",
    series: armSeries(table, "depth", "fidelity", spec.useMean),
  });
}

function renderMSweep(spec: FigureSpec): string {
  const table = parseCsv(spec.input);
  requireColumns(table, ["arm", "selected_states", "infidelity", "seed"]);
  // The CSV stores the selected basis states, not m itself; m is the count.
  for (const row of table.rows) {
    const states = row.selected_states.split(";").filter((s) => s !== "");
    row.m = String(states.length);
  }
  const stat = spec.useMean ? "mean" : "median";
  return renderChart({
    title: `Infidelity vs superposition size (${stat} across seeds)`,
    xLabel: "number of encoded basis states m",
    yLabel: "1 - F",
    yLog: true,
    series: armSeries(table, "m", "infidelity", spec.useMean),
  });
}

function renderTrajectory(spec: FigureSpec): string {
  const points = parseTraceJsonl(spec.input);
  const pretrain = points.filter((p) => p.stage === "pretrain");
  const joint = points.filter((p) => p.stage === "joint");
  const offset = pretrain.length > 0 ? pretrain[pretrain.length - 1].iter : 0;
  const series: Series[] = [];
  if (pretrain.length > 0) {
    series.push({
      label: "pre-training",
      color: ARM_COLORS.baseline,
      points: pretrain.map((p) => ({ x: p.iter, y: p.energy })),
    });
  }
  if (joint.length > 0) {
    series.push({
      label: "joint (with encoder)",
      color: ARM_COLORS.enhanced,
      points: joint.map((p) => ({ x: offset + p.iter, y: p.energy })),
    });
  }
  if (series.length === 0) {
    throw new SchemaError("no rows: trace contains no optimization stages");
  }
  return renderChart({
    title: "Optimization trajectory",
    xLabel: "iteration",
    yLabel: "energy",
    series,
    vline:
      joint.length > 0
        ? { x: offset, label: "encoder introduced" }
        : undefined,
  });
}

/** Render one figure to an SVG document string. */
export function render(spec: FigureSpec): string {
  switch (spec.kind) {
    case "depth-sweep":
      return renderDepthSweep(spec);
    case "m-sweep":
      return renderMSweep(spec);
    case "trajectory":
      return renderTrajectory(spec);
  }
}
