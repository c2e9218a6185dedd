import { describe, expect, it } from 'vitest';

import { parseRootsCsv } from '../src/csv.js';
import { groupSeries, renderScatterSvg } from '../src/render.js';

const THREE_SERIES_CSV = [
  're,im,series',
  '0.1,0.5,l=2',
  '0.1,-0.5,l=2',
  '0.2,0.6,l=4',
  '0.2,-0.6,l=4',
  '0.3,0.7,l=6',
  '0.3,-0.7,l=6',
].join('\n');

function markerRadii(svg: string): number[] {
  return [...svg.matchAll(/data-radius="([^"]+)"/g)].map((m) => Number(m[1]));
}

describe('parseRootsCsv', () => {
  it('parses points with series labels', () => {
    const pts = parseRootsCsv(THREE_SERIES_CSV);
    expect(pts).toHaveLength(6);
    expect(pts[0]).toEqual({ re: 0.1, im: 0.5, series: 'l=2' });
  });

  it('accepts a header-only file', () => {
    expect(parseRootsCsv('re,im,series\n')).toEqual([]);
  });

  it('rejects a wrong header', () => {
    expect(() => parseRootsCsv('x,y,label\n1,2,a')).toThrow(/header/);
  });

  it('rejects short rows and non-numeric coordinates', () => {
    expect(() => parseRootsCsv('re,im,series\n1,2')).toThrow(/3 fields/);
    expect(() => parseRootsCsv('re,im,series\nfoo,2,a')).toThrow(/non-numeric/);
  });

  it('round-trips full-precision doubles', () => {
    const v = '0.10000000000000001';
    const pts = parseRootsCsv(`re,im,series\n${v},0,l=2`);
    expect(pts[0].re).toBe(Number(v));
  });
});

describe('groupSeries', () => {
  it('preserves first-appearance order', () => {
    const pts = parseRootsCsv(THREE_SERIES_CSV);
    expect(groupSeries(pts).map((s) => s.name)).toEqual(['l=2', 'l=4', 'l=6']);
  });
});

describe('renderScatterSvg', () => {
  it('renders three series with strictly decreasing marker sizes', () => {
    const svg = renderScatterSvg(parseRootsCsv(THREE_SERIES_CSV));
    const radii = markerRadii(svg);
    expect(radii).toHaveLength(3);
    expect(radii[0]).toBeGreaterThan(radii[1]);
    expect(radii[1]).toBeGreaterThan(radii[2]);
    expect((svg.match(/<circle /g) ?? []).length).toBe(6 + 3); // points + legend
    expect(svg).toContain('data-series="l=2"');
  });

  it('renders an empty CSV to a valid empty image', () => {
    const svg = renderScatterSvg(parseRootsCsv('re,im,series\n'));
    expect(svg.startsWith('<svg')).toBe(true);
    expect(svg).toContain('</svg>');
    expect(svg).not.toContain('data-series');
  });

  it('keeps the aspect ratio equal', () => {
    const csv = 're,im,series\n-10,-1,a\n10,1,a';
    const svg = renderScatterSvg(parseRootsCsv(csv), { width: 400, height: 400 });
    const xs = [...svg.matchAll(/<circle cx="([^"]+)" cy="([^"]+)"/g)].map((m) => [
      Number(m[1]),
      Number(m[2]),
    ]);
    const dx = Math.abs(xs[1][0] - xs[0][0]);
    const dy = Math.abs(xs[1][1] - xs[0][1]);
    // 20 data units horizontally vs 2 vertically: same pixel scale
    expect(dx / dy).toBeCloseTo(10, 2);
  });

  it('honors axis limits', () => {
    const csv = 're,im,series\n0,0,a';
    const svg = renderScatterSvg(parseRootsCsv(csv), { xlim: [-2, 2], ylim: [-2, 2] });
    expect(svg).toContain('>-2</text>');
    expect(svg).toContain('>2</text>');
  });

  it('is deterministic', () => {
    const pts = parseRootsCsv(THREE_SERIES_CSV);
    expect(renderScatterSvg(pts)).toBe(renderScatterSvg(pts));
  });
});
