import { writeFileSync } from "node:fs";
import * as echarts from "echarts";
import { column, loadTable, MissingColumnError, Table } from "./csv.js";

export type FigureKind = "lines" | "scatter" | "difference";

/** What to draw: source CSV, figure kind, axis labels, and output image path. */
export interface FigureSpec {
  csv: string;
  kind: FigureKind;
  out: string;
  xLabel?: string;
  yLabel?: string;
  width?: number;
  height?: number;
}

function points(xs: number[], ys: number[]): Array<[number, number]> {
  return xs.map((x, i) => [x, ys[i]]);
}

function extent(values: number[]): [number, number] {
  let lo = Infinity;
  let hi = -Infinity;
  for (const v of values) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return [lo, hi];
}

/**
 * The parameter column that varies across rows. Scenario CSVs put their
 * parameter columns (swept or held fixed) before the "lhs" column.
 */
function sweptAxis(table: Table): string {
  const k = table.columns.indexOf("lhs");
  if (k < 0) {
    throw new MissingColumnError(table.path, "lhs");
  }
  const candidates = table.columns.slice(0, k);
  if (candidates.length === 0) {
    throw new MissingColumnError(table.path, "a parameter column before lhs");
  }
  for (const name of candidates) {
    const values = column(table, name);
    if (values.some((v) => v !== values[0])) return name;
  }
  return candidates[0];
}

function baseOption(
  spec: FigureSpec,
  xLabel: string,
  yLabel: string,
  series: echarts.SeriesOption[]
): echarts.EChartsOption {
  return {
    animation: false,
    legend: { top: 8 },
    grid: { left: 64, right: 24, top: 44, bottom: 52 },
    xAxis: {
      type: "value",
      name: spec.xLabel ?? xLabel,
      nameLocation: "middle",
      nameGap: 30,
    },
    yAxis: {
      type: "value",
      name: spec.yLabel ?? yLabel,
      nameLocation: "middle",
      nameGap: 44,
      scale: true,
    },
    series,
  };
}

/** Uncertainty and its bounds against the swept parameter. */
function linesOption(spec: FigureSpec, table: Table): echarts.EChartsOption {
  const axis = sweptAxis(table);
  const xs = column(table, axis);
  const series: echarts.SeriesOption[] = ["lhs", "thm1", "thm2", "scb"].map(
    (name) => ({
      name,
      type: "line",
      showSymbol: false,
      data: points(xs, column(table, name)),
    })
  );
  return baseOption(spec, axis, "bits", series);
}

/** Bound values against the wu bound, with the diagonal for reference. */
function scatterOption(spec: FigureSpec, table: Table): echarts.EChartsOption {
  const wu = column(table, "wu");
  const thm1 = column(table, "thm1");
  const thm2 = column(table, "thm2");
  const [lo, hi] = extent(wu);
  const series: echarts.SeriesOption[] = [
    { name: "thm1", type: "scatter", symbolSize: 4, data: points(wu, thm1) },
    { name: "thm2", type: "scatter", symbolSize: 4, data: points(wu, thm2) },
    {
      name: "diagonal",
      type: "line",
      showSymbol: false,
      lineStyle: { type: "dashed" },
      data: [
        [lo, lo],
        [hi, hi],
      ],
    },
  ];
  return baseOption(spec, "wu", "bound (bits)", series);
}

/** Bound improvements over the wu bound against the sample index. */
function differenceOption(
  spec: FigureSpec,
  table: Table
): echarts.EChartsOption {
  const idx = column(table, "sample_index");
  const d1 = column(table, "thm1_minus_wu");
  const d2 = column(table, "thm2_minus_wu");
  const [lo, hi] = extent(idx);
  const series: echarts.SeriesOption[] = [
    { name: "thm1 - wu", type: "scatter", symbolSize: 3, data: points(idx, d1) },
    { name: "thm2 - wu", type: "scatter", symbolSize: 3, data: points(idx, d2) },
    {
      name: "zero",
      type: "line",
      showSymbol: false,
      lineStyle: { type: "dashed" },
      data: [
        [lo, 0],
        [hi, 0],
      ],
    },
  ];
  return baseOption(spec, "sample index", "difference (bits)", series);
}

/** Build the chart option for a spec without rendering it. */
export function buildOption(
  spec: FigureSpec,
  table: Table
): echarts.EChartsOption {
  switch (spec.kind) {
    case "lines":
      return linesOption(spec, table);
    case "scatter":
      return scatterOption(spec, table);
    case "difference":
      return differenceOption(spec, table);
  }
}

/**
 * Render one figure from a scenario CSV to an SVG file.
 *
 * The CSV is parsed and validated first, so nothing is written when it is
 * empty or lacks a column the kind needs.
 */
export function render(spec: FigureSpec): string {
  const table = loadTable(spec.csv);
  const option = buildOption(spec, table);
  const chart = echarts.init(null, null, {
    renderer: "svg",
    ssr: true,
    width: spec.width ?? 800,
    height: spec.height ?? 520,
  });
  try {
    chart.setOption(option);
    writeFileSync(spec.out, chart.renderToSVGString());
  } finally {
    chart.dispose();
  }
  return spec.out;
}
