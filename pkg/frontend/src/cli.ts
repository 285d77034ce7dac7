/**
 * render --in profiles.csv --out fig.svg   (also accepts .png)
 *
 * Exit codes: 0 rendered, 1 usage error, 2 bad input (missing file,
 * schema mismatch, empty or corrupt table).
 */

import { readFileSync, writeFileSync } from "node:fs";

import { buildFigure } from "./figure.js";
import { figureToPng } from "./png.js";
import { parseProfilesCsv, ProfileError, toSeries } from "./profiles.js";
import { figureToSvg } from "./svg.js";

interface Args {
  input: string;
  output: string;
}

function parseArgs(argv: string[]): Args {
  let input: string | undefined;
  let output: string | undefined;
  for (let i = 0; i < argv.length; i++) {
    const arg = argv[i];
    if (arg === "--in") {
      input = argv[++i];
    } else if (arg === "--out") {
      output = argv[++i];
    } else if (arg === "--help" || arg === "-h") {
      throw new UsageError("");
    } else {
      throw new UsageError(`unknown argument: ${arg}`);
    }
  }
  if (!input || !output) {
    throw new UsageError("--in and --out are required");
  }
  if (!output.endsWith(".svg") && !output.endsWith(".png")) {
    throw new UsageError("--out must end in .svg or .png");
  }
  return { input, output };
}

class UsageError extends Error {}

const USAGE = "usage: render --in profiles.csv --out figure.svg|figure.png";

export function main(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
  } catch (err) {
    if (err instanceof UsageError) {
      if (err.message) console.error(`error: ${err.message}`);
      console.error(USAGE);
      return 1;
    }
    throw err;
  }
  let text: string;
  try {
    text = readFileSync(args.input, "utf-8");
  } catch (err) {
    console.error(`error: cannot read ${args.input}: ${(err as Error).message}`);
    return 2;
  }
  try {
    const figure = buildFigure(toSeries(parseProfilesCsv(text)));
    if (args.output.endsWith(".png")) {
      writeFileSync(args.output, figureToPng(figure));
    } else {
      writeFileSync(args.output, figureToSvg(figure), "utf-8");
    }
  } catch (err) {
    if (err instanceof ProfileError) {
      console.error(`error: ${args.input}: ${err.message}`);
      return 2;
    }
    throw err;
  }
  console.error(`wrote ${args.output}`);
  return 0;
}

if (process.argv[1] && process.argv[1].endsWith("cli.js")) {
  process.exit(main(process.argv.slice(2)));
}
