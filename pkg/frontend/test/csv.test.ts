import { mkdtempSync, rmSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import {
  column,
  EmptyCsvError,
  loadTable,
  MissingColumnError,
} from "../src/csv.js";

let dir: string;

beforeAll(() => {
  dir = mkdtempSync(join(tmpdir(), "qmaeur-csv-"));
});

afterAll(() => {
  rmSync(dir, { recursive: true, force: true });
});

function writeCsv(name: string, text: string): string {
  const path = join(dir, name);
  writeFileSync(path, text);
  return path;
}

describe("loadTable", () => {
  it("parses numeric records and keeps column order", () => {
    const path = writeCsv("small.csv", "p,alpha,lhs\n0,0.5,3\n1,0.25,0\n");
    const table = loadTable(path);
    expect(table.columns).toEqual(["p", "alpha", "lhs"]);
    expect(table.rows).toHaveLength(2);
    expect(table.rows[0].lhs).toBe(3);
    expect(typeof table.rows[1].alpha).toBe("number");
  });

  it("rejects a file with a header but no data rows", () => {
    const path = writeCsv("header_only.csv", "p,alpha,lhs\n");
    expect(() => loadTable(path)).toThrow(EmptyCsvError);
  });

  it("rejects a zero-byte file", () => {
    const path = writeCsv("blank.csv", "");
    expect(() => loadTable(path)).toThrow(EmptyCsvError);
  });
});

describe("column", () => {
  it("extracts one column as numbers", () => {
    const path = writeCsv("cols.csv", "x,y\n1,2\n3,4\n");
    const table = loadTable(path);
    expect(column(table, "y")).toEqual([2, 4]);
  });

  it("names the missing column in the error", () => {
    const path = writeCsv("cols2.csv", "x,y\n1,2\n");
    const table = loadTable(path);
    expect(() => column(table, "wu")).toThrow(MissingColumnError);
    expect(() => column(table, "wu")).toThrow(/"wu"/);
  });
});
