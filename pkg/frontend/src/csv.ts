import Papa from 'papaparse';

export interface RootPoint {
  re: number;
  im: number;
  series: string;
}

/**
 * Parse a root-export CSV with the exact header `re,im,series`.
 * An empty data section is fine; a missing/wrong header, a short row, or a
 * non-numeric coordinate is an error.
 */
export function parseRootsCsv(text: string): RootPoint[] {
  const result = Papa.parse<string[]>(text.trim(), { skipEmptyLines: true });
  if (result.errors.length > 0) {
    throw new Error(`malformed CSV: ${result.errors[0].message}`);
  }
  const rows = result.data;
  if (rows.length === 0) {
    throw new Error('malformed CSV: missing header re,im,series');
  }
  const header = rows[0].map((h) => h.trim());
  if (header.length !== 3 || header[0] !== 're' || header[1] !== 'im' || header[2] !== 'series') {
    throw new Error(`malformed CSV: expected header re,im,series, got ${rows[0].join(',')}`);
  }
  const points: RootPoint[] = [];
  for (const row of rows.slice(1)) {
    if (row.length !== 3) {
      throw new Error(`malformed CSV: expected 3 fields, got ${row.length}`);
    }
    const re = Number(row[0]);
    const im = Number(row[1]);
    if (!Number.isFinite(re) || !Number.isFinite(im)) {
      throw new Error(`malformed CSV: non-numeric coordinates in row ${row.join(',')}`);
    }
    points.push({ re, im, series: row[2] });
  }
  return points;
}
