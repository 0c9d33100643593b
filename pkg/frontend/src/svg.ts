/** Deterministic, dependency-free SVG chart builder. */

export interface Series {
  label: string;
  color: string;
  points: { x: number; y: number }[];
  band?: { x: number; lo: number; hi: number }[];
  dashed?: boolean;
}

export interface ChartSpec {
  title: string;
  xLabel: string;
  yLabel: string;
  series: Series[];
  /** Vertical dashed rule, e.g. the encoder-introduction iteration. */
  vline?: { x: number; label: string };
  yLog?: boolean;
  width?: number;
  height?: number;
}

const MARGIN = { top: 36, right: 24, bottom: 46, left: 64 };

function fmt(v: number): string {
  if (!Number.isFinite(v)) return "0";
  return Number(v.toFixed(4)).toString();
}

function niceTicks(lo: number, hi: number, n = 5): number[] {
  if (lo === hi) {
    return [lo - 1, lo, lo + 1];
  }
  const span = hi - lo;
  const step = Math.pow(10, Math.floor(Math.log10(span / n)));
  const err = span / (n * step);
  const mult = err >= 7.5 ? 10 : err >= 3.5 ? 5 : err >= 1.5 ? 2 : 1;
  const s = mult * step;
  const ticks: number[] = [];
  for (let v = Math.ceil(lo / s) * s; v <= hi + 1e-12 * span; v += s) {
    ticks.push(Math.abs(v) < 1e-12 * span ? 0 : v);
  }
  return ticks;
}

function logTicks(lo: number, hi: number): number[] {
  const ticks: number[] = [];
  for (let e = Math.floor(Math.log10(lo)); e <= Math.ceil(Math.log10(hi)); e++) {
    const v = Math.pow(10, e);
    if (v >= lo / 1.001 && v <= hi * 1.001) ticks.push(v);
  }
  return ticks.length >= 2 ? ticks : [lo, hi];
}

function esc(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Render the chart spec to a standalone SVG document string. */
export function renderChart(spec: ChartSpec): string {
  const width = spec.width ?? 640;
  const height = spec.height ?? 420;
  const plotW = width - MARGIN.left - MARGIN.right;
  const plotH = height - MARGIN.top - MARGIN.bottom;

  const xs: number[] = [];
  const ys: number[] = [];
  for (const s of spec.series) {
    for (const p of s.points) {
      xs.push(p.x);
      ys.push(p.y);
    }
    for (const b of s.band ?? []) {
      ys.push(b.lo, b.hi);
    }
  }
  if (spec.vline) xs.push(spec.vline.x);

  let xLo = Math.min(...xs);
  let xHi = Math.max(...xs);
  if (xLo === xHi) {
    xLo -= 1;
    xHi += 1;
  }
  let yLo = Math.min(...ys);
  let yHi = Math.max(...ys);
  if (spec.yLog) {
    const floor = 1e-12;
    yLo = Math.max(yLo, floor);
    yHi = Math.max(yHi, yLo * 10);
  } else if (yLo === yHi) {
    yLo -= 1;
    yHi += 1;
  } else {
    const pad = 0.05 * (yHi - yLo);
    yLo -= pad;
    yHi += pad;
  }

  const sx = (v: number) => MARGIN.left + ((v - xLo) / (xHi - xLo)) * plotW;
  const sy = (v: number) => {
    const t = spec.yLog
      ? (Math.log10(Math.max(v, yLo)) - Math.log10(yLo)) /
        (Math.log10(yHi) - Math.log10(yLo))
      : (v - yLo) / (yHi - yLo);
    return MARGIN.top + (1 - t) * plotH;
  };

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" ` +
      `viewBox="0 0 ${width} ${height}" font-family="Helvetica, Arial, sans-serif">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<text x="${width / 2}" y="20" text-anchor="middle" font-size="14">` +
      `${esc(spec.title)}</text>`,
  );

  const xTicks = niceTicks(xLo, xHi);
  const yTicks = spec.yLog ? logTicks(yLo, yHi) : niceTicks(yLo, yHi);
  for (const t of xTicks) {
    const x = sx(t);
    parts.push(
      `<line x1="${fmt(x)}" y1="${MARGIN.top}" x2="${fmt(x)}" ` +
        `y2="${MARGIN.top + plotH}" stroke="#eee"/>`,
      `<text x="${fmt(x)}" y="${MARGIN.top + plotH + 18}" text-anchor="middle" ` +
        `font-size="11">${fmt(t)}</text>`,
    );
  }
  for (const t of yTicks) {
    const y = sy(t);
    const label = spec.yLog ? t.toExponential(0) : fmt(t);
    parts.push(
      `<line x1="${MARGIN.left}" y1="${fmt(y)}" x2="${MARGIN.left + plotW}" ` +
        `y2="${fmt(y)}" stroke="#eee"/>`,
      `<text x="${MARGIN.left - 6}" y="${fmt(y + 4)}" text-anchor="end" ` +
        `font-size="11">${label}</text>`,
    );
  }
  parts.push(
    `<rect x="${MARGIN.left}" y="${MARGIN.top}" width="${plotW}" ` +
      `height="${plotH}" fill="none" stroke="#333"/>`,
  );

  for (const s of spec.series) {
    if (s.band && s.band.length > 1) {
      const fwd = s.band.map((b) => `${fmt(sx(b.x))},${fmt(sy(b.hi))}`);
      const back = [...s.band]
        .reverse()
        .map((b) => `${fmt(sx(b.x))},${fmt(sy(b.lo))}`);
      parts.push(
        `<polygon points="${fwd.concat(back).join(" ")}" fill="${s.color}" ` +
          `opacity="0.15"/>`,
      );
    }
    const pts = s.points.map((p) => `${fmt(sx(p.x))},${fmt(sy(p.y))}`);
    const dash = s.dashed ? ` stroke-dasharray="6 4"` : "";
    parts.push(
      `<polyline points="${pts.join(" ")}" fill="none" stroke="${s.color}" ` +
        `stroke-width="1.8"${dash}/>`,
    );
    if (s.points.length <= 40) {
      for (const p of s.points) {
        parts.push(
          `<circle cx="${fmt(sx(p.x))}" cy="${fmt(sy(p.y))}" r="3" ` +
            `fill="${s.color}"/>`,
        );
      }
    }
  }

  if (spec.vline) {
    const x = sx(spec.vline.x);
    parts.push(
      `<line class="phase-boundary" x1="${fmt(x)}" y1="${MARGIN.top}" ` +
        `x2="${fmt(x)}" y2="${MARGIN.top + plotH}" stroke="#888" ` +
        `stroke-dasharray="5 5" stroke-width="1.5"/>`,
      `<text x="${fmt(x + 4)}" y="${MARGIN.top + 14}" font-size="11" ` +
        `fill="#555">${esc(spec.vline.label)}</text>`,
    );
  }

  let ly = MARGIN.top + 10;
  for (const s of spec.series) {
    const lx = MARGIN.left + plotW - 150;
    parts.push(
      `<line x1="${lx}" y1="${ly}" x2="${lx + 22}" y2="${ly}" ` +
        `stroke="${s.color}" stroke-width="2"/>`,
      `<text x="${lx + 28}" y="${ly + 4}" font-size="11">${esc(s.label)}</text>`,
    );
    ly += 16;
  }

  parts.push(
    `<text x="${MARGIN.left + plotW / 2}" y="${height - 10}" ` +
      `text-anchor="middle" font-size="12">${esc(spec.xLabel)}</text>`,
    `<text x="16" y="${MARGIN.top + plotH / 2}" text-anchor="middle" ` +
      `font-size="12" transform="rotate(-90 16 ${MARGIN.top + plotH / 2})">` +
      `${esc(spec.yLabel)}</text>`,
  );
  parts.push("</svg>");
  return parts.join("\n");
}
