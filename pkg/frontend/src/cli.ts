import path from "node:path";
import { pathToFileURL } from "node:url";
import yargs from "yargs";
import { hideBin } from "yargs/helpers";
import { EmptyCsvError, MissingColumnError } from "./csv.js";
import { FigureKind, render } from "./figure.js";

const KINDS = ["lines", "scatter", "difference"] as const;

function defaultOut(csv: string, kind: FigureKind): string {
  const parsed = path.parse(csv);
  return path.join(parsed.dir, `${parsed.name}_${kind}.svg`);
}

/** Parse flags, render one figure, and report the output path. */
export function main(argv: string[]): number {
  let args;
  try {
    args = yargs(argv)
      .scriptName("qmaeur-figures")
      .usage("$0 --csv <file> --kind <lines|scatter|difference> [--out <file>]")
      .option("csv", {
        type: "string",
        demandOption: true,
        describe: "scenario CSV to plot",
      })
      .option("kind", {
        choices: KINDS,
        demandOption: true,
        describe: "figure kind",
      })
      .option("out", {
        type: "string",
        describe: "output SVG path (default: <csv stem>_<kind>.svg)",
      })
      .strict()
      .exitProcess(false)
      .parseSync();
  } catch (err) {
    console.error(`error: ${(err as Error).message}`);
    return 2;
  }
  if (args.help || args.version) return 0;
  const out = args.out ?? defaultOut(args.csv, args.kind);
  try {
    render({ csv: args.csv, kind: args.kind, out });
  } catch (err) {
    if (
      err instanceof EmptyCsvError ||
      err instanceof MissingColumnError ||
      (err as NodeJS.ErrnoException).code === "ENOENT"
    ) {
      console.error(`error: ${(err as Error).message}`);
      return 1;
    }
    throw err;
  }
  console.log(`wrote ${out}`);
  return 0;
}

const invokedAsScript =
  typeof process.argv[1] === "string" &&
  import.meta.url === pathToFileURL(process.argv[1]).href;

if (invokedAsScript) {
  process.exit(main(hideBin(process.argv)));
}
