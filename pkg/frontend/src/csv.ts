import { readFileSync } from "node:fs";
import Papa from "papaparse";

/** A parsed sweep CSV: header names in file order plus numeric row records. */
export interface Table {
  path: string;
  columns: string[];
  rows: Array<Record<string, number>>;
}

/** Raised when a CSV has no data rows (or no header at all). */
export class EmptyCsvError extends Error {
  constructor(path: string) {
    super(`empty csv: ${path} has no data rows`);
    this.name = "EmptyCsvError";
  }
}

/** Raised when a figure kind needs a column the CSV does not provide. */
export class MissingColumnError extends Error {
  readonly column: string;

  constructor(path: string, column: string) {
    super(`missing column: ${path} lacks "${column}"`);
    this.name = "MissingColumnError";
    this.column = column;
  }
}

/** Read a scenario CSV into numeric records, or fail on an empty file. */
export function loadTable(path: string): Table {
  const text = readFileSync(path, "utf8");
  const parsed = Papa.parse<Record<string, number>>(text, {
    header: true,
    dynamicTyping: true,
    skipEmptyLines: true,
  });
  const columns = parsed.meta.fields ?? [];
  if (columns.length === 0 || parsed.data.length === 0) {
    throw new EmptyCsvError(path);
  }
  return { path, columns, rows: parsed.data };
}

/** Extract one column as numbers, or fail if it is absent. */
export function column(table: Table, name: string): number[] {
  if (!table.columns.includes(name)) {
    throw new MissingColumnError(table.path, name);
  }
  return table.rows.map((row) => Number(row[name]));
}
