#!/usr/bin/env node
import { readFileSync, writeFileSync } from 'node:fs';

import { parseRootsCsv } from './csv.js';
import { renderScatterSvg, RenderOptions } from './render.js';

function usage(): never {
  process.stderr.write('usage: plotview render <in.csv> <out.svg> [--xlim a b] [--ylim a b]\n');
  process.exit(2);
}

export function main(argv: string[]): number {
  if (argv.length < 3 || argv[0] !== 'render') usage();
  const [, input, output, ...rest] = argv;
  const opts: RenderOptions = {};
  for (let i = 0; i < rest.length; ) {
    const flag = rest[i];
    if (flag === '--xlim' || flag === '--ylim') {
      const a = Number(rest[i + 1]);
      const b = Number(rest[i + 2]);
      if (!Number.isFinite(a) || !Number.isFinite(b) || a >= b) usage();
      if (flag === '--xlim') opts.xlim = [a, b];
      else opts.ylim = [a, b];
      i += 3;
    } else {
      usage();
    }
  }
  let text: string;
  try {
    text = readFileSync(input, 'utf8');
  } catch (e) {
    process.stderr.write(`error: cannot read ${input}: ${(e as Error).message}\n`);
    return 1;
  }
  let svg: string;
  try {
    svg = renderScatterSvg(parseRootsCsv(text), opts);
  } catch (e) {
    process.stderr.write(`error: ${(e as Error).message}\n`);
    return 1;
  }
  writeFileSync(output, svg);
  return 0;
}

process.exit(main(process.argv.slice(2)));
