import { RootPoint } from './csv.js';

export interface RenderOptions {
  width?: number;
  height?: number;
  xlim?: [number, number];
  ylim?: [number, number];
  baseRadius?: number;
  /** marker radius shrinks by this factor for each later series */
  radiusRatio?: number;
}

interface Series {
  name: string;
  points: RootPoint[];
}

const PALETTE = ['#1f77b4', '#d62728', '#2ca02c', '#9467bd', '#ff7f0e', '#8c564b'];
const MARGIN = 50;

/** Group points by series label, preserving first-appearance order. */
export function groupSeries(points: RootPoint[]): Series[] {
  const order: string[] = [];
  const bucket = new Map<string, RootPoint[]>();
  for (const p of points) {
    let list = bucket.get(p.series);
    if (list === undefined) {
      list = [];
      bucket.set(p.series, list);
      order.push(p.series);
    }
    list.push(p);
  }
  return order.map((name) => ({ name, points: bucket.get(name)! }));
}

function dataBounds(points: RootPoint[], opts: RenderOptions): { x: [number, number]; y: [number, number] } {
  let x: [number, number];
  let y: [number, number];
  if (points.length === 0) {
    x = [-1, 1];
    y = [-1, 1];
  } else {
    const res = points.map((p) => p.re);
    const ims = points.map((p) => p.im);
    x = [Math.min(...res), Math.max(...res)];
    y = [Math.min(...ims), Math.max(...ims)];
  }
  if (opts.xlim) x = [...opts.xlim];
  if (opts.ylim) y = [...opts.ylim];
  // pad degenerate ranges, then 5% breathing room on free axes
  for (const range of [x, y]) {
    if (range[0] === range[1]) {
      range[0] -= 1;
      range[1] += 1;
    }
  }
  const padAxis = (range: [number, number], fixed: boolean) => {
    if (fixed) return;
    const pad = 0.05 * (range[1] - range[0]);
    range[0] -= pad;
    range[1] += pad;
  };
  padAxis(x, Boolean(opts.xlim));
  padAxis(y, Boolean(opts.ylim));
  return { x, y };
}

function fmt(v: number): string {
  return Number(v.toPrecision(6)).toString();
}

/**
 * Render one equal-aspect scatter per series into a standalone SVG string.
 * Marker radii decrease geometrically across series in input order, so the
 * first series is drawn largest.
 */
export function renderScatterSvg(points: RootPoint[], opts: RenderOptions = {}): string {
  const width = opts.width ?? 720;
  const height = opts.height ?? 540;
  const baseRadius = opts.baseRadius ?? 6;
  const ratio = opts.radiusRatio ?? 0.7;
  const series = groupSeries(points);
  const { x, y } = dataBounds(points, opts);

  const plotW = width - 2 * MARGIN;
  const plotH = height - 2 * MARGIN;
  // equal aspect: one common scale, centered in the plot box
  const scale = Math.min(plotW / (x[1] - x[0]), plotH / (y[1] - y[0]));
  const xMid = (x[0] + x[1]) / 2;
  const yMid = (y[0] + y[1]) / 2;
  const px = (re: number) => MARGIN + plotW / 2 + (re - xMid) * scale;
  const py = (im: number) => MARGIN + plotH / 2 - (im - yMid) * scale;

  const parts: string[] = [];
  parts.push(
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}" viewBox="0 0 ${width} ${height}">`,
  );
  parts.push(`<rect width="${width}" height="${height}" fill="white"/>`);
  parts.push(
    `<rect x="${MARGIN}" y="${MARGIN}" width="${plotW}" height="${plotH}" fill="none" stroke="#333"/>`,
  );
  // axis lines through zero when zero is inside the view
  if (x[0] < 0 && x[1] > 0) {
    parts.push(
      `<line x1="${fmt(px(0))}" y1="${MARGIN}" x2="${fmt(px(0))}" y2="${MARGIN + plotH}" stroke="#ccc"/>`,
    );
  }
  if (y[0] < 0 && y[1] > 0) {
    parts.push(
      `<line x1="${MARGIN}" y1="${fmt(py(0))}" x2="${MARGIN + plotW}" y2="${fmt(py(0))}" stroke="#ccc"/>`,
    );
  }
  series.forEach((s, i) => {
    const r = baseRadius * Math.pow(ratio, i);
    const color = PALETTE[i % PALETTE.length];
    parts.push(`<g data-series="${escapeXml(s.name)}" data-radius="${fmt(r)}" fill="${color}" fill-opacity="0.8">`);
    for (const p of s.points) {
      parts.push(`<circle cx="${fmt(px(p.re))}" cy="${fmt(py(p.im))}" r="${fmt(r)}"/>`);
    }
    parts.push('</g>');
    // legend entry
    const ly = MARGIN + 16 + 18 * i;
    parts.push(`<circle cx="${width - MARGIN - 90}" cy="${ly}" r="${fmt(r)}" fill="${color}"/>`);
    parts.push(
      `<text x="${width - MARGIN - 78}" y="${ly + 4}" font-size="12" font-family="sans-serif">${escapeXml(s.name)}</text>`,
    );
  });
  // corner coordinate labels
  parts.push(
    `<text x="${MARGIN}" y="${height - MARGIN + 16}" font-size="11" font-family="sans-serif">${fmt(x[0])}</text>`,
    `<text x="${MARGIN + plotW}" y="${height - MARGIN + 16}" font-size="11" font-family="sans-serif" text-anchor="end">${fmt(x[1])}</text>`,
    `<text x="${MARGIN - 4}" y="${MARGIN + plotH}" font-size="11" font-family="sans-serif" text-anchor="end">${fmt(y[0])}</text>`,
    `<text x="${MARGIN - 4}" y="${MARGIN + 10}" font-size="11" font-family="sans-serif" text-anchor="end">${fmt(y[1])}</text>`,
  );
  parts.push('</svg>');
  return parts.join('\n') + '\n';
}

function escapeXml(s: string): string {
  return s
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}
