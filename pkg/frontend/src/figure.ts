/**
 * Figure construction: turn profile series into a backend-agnostic draw
 * list for the 2x2 panel layout (runtime/accuracy x median/mean). Step
 * curves are drawn right-continuous: horizontal to each breakpoint, then
 * the vertical rise at it. Runtime panels use a log tau axis, accuracy
 * panels a linear one.
 */

import { Basis, Kind, Series } from "./profiles.js";

export type Shape =
  | { kind: "rect"; x: number; y: number; w: number; h: number; fill: string }
  | { kind: "polyline"; points: Array<[number, number]>; color: string; width: number }
  | {
      kind: "text";
      x: number;
      y: number;
      text: string;
      size: number;
      color: string;
      anchor: "start" | "middle" | "end";
    };

export interface Figure {
  width: number;
  height: number;
  shapes: Shape[];
}

export const PALETTE: Record<string, string> = {
  sphere: "#1b7837",
  corridor: "#d95f02",
  louvain: "#7570b3",
  dijkstra: "#636363",
};

const EXTRA_COLORS = ["#e7298a", "#66a61e", "#e6ab02", "#a6761d"];

export function colorOf(method: string, index: number): string {
  return PALETTE[method] ?? EXTRA_COLORS[index % EXTRA_COLORS.length];
}

const PANELS: Array<{ kind: Kind; basis: Basis; title: string }> = [
  { kind: "runtime", basis: "median", title: "runtime profile (median)" },
  { kind: "accuracy", basis: "median", title: "accuracy profile (median)" },
  { kind: "runtime", basis: "mean", title: "runtime profile (mean)" },
  { kind: "accuracy", basis: "mean", title: "accuracy profile (mean)" },
];

const FIG_W = 980;
const FIG_H = 760;
const MARGIN = { left: 70, right: 24, top: 40, bottom: 56 };
const GAP_X = 46;
const GAP_Y = 54;

function niceTicksLinear(max: number): number[] {
  if (max <= 0) return [0, 1];
  const raw = max / 4;
  const mag = Math.pow(10, Math.floor(Math.log10(raw)));
  const step = [1, 2, 2.5, 5, 10].map((m) => m * mag).find((s) => max / s <= 5) ?? mag * 10;
  const ticks: number[] = [];
  for (let v = 0; v <= max * 1.0001; v += step) ticks.push(Number(v.toFixed(10)));
  return ticks;
}

function logTicks(max: number): number[] {
  const ticks = [1];
  let v = 1;
  const factor = max > 1000 ? 10 : max > 30 ? 4 : 2;
  while (v < max) {
    v *= factor;
    ticks.push(v);
  }
  return ticks;
}

function fmtTick(v: number): string {
  if (v === 0) return "0";
  if (Number.isInteger(v)) return String(v);
  if (v >= 0.01) return v.toFixed(2).replace(/0+$/, "").replace(/\.$/, "");
  return v.toExponential(0);
}

export function buildFigure(series: Series[]): Figure {
  const shapes: Shape[] = [];
  shapes.push({ kind: "rect", x: 0, y: 0, w: FIG_W, h: FIG_H, fill: "#ffffff" });

  const methods = [...new Set(series.map((s) => s.method))].sort();
  const panelW = (FIG_W - MARGIN.left - MARGIN.right - GAP_X) / 2;
  const panelH = (FIG_H - MARGIN.top - MARGIN.bottom - GAP_Y) / 2;

  PANELS.forEach((panel, pi) => {
    const col = pi % 2;
    const row = Math.floor(pi / 2);
    const x0 = MARGIN.left + col * (panelW + GAP_X);
    const y0 = MARGIN.top + row * (panelH + GAP_Y);
    const inPanel = series.filter((s) => s.kind === panel.kind && s.basis === panel.basis);

    const log = panel.kind === "runtime";
    const tauMax = Math.max(
      log ? 2 : 0.05,
      ...inPanel.flatMap((s) => s.points.map((p) => p.tau)),
    );
    const domainMax = log ? tauMax * 1.3 : tauMax * 1.08 || 1;

    const xOf = (tau: number): number => {
      if (log) {
        const t = Math.log(Math.max(tau, 1)) / Math.log(domainMax);
        return x0 + t * panelW;
      }
      return x0 + (domainMax === 0 ? 0 : tau / domainMax) * panelW;
    };
    const yOf = (fraction: number): number => y0 + panelH - fraction * panelH;

    // frame and gridlines
    for (const f of [0, 0.25, 0.5, 0.75, 1]) {
      shapes.push({
        kind: "polyline",
        points: [
          [x0, yOf(f)],
          [x0 + panelW, yOf(f)],
        ],
        color: f === 0 ? "#333333" : "#dddddd",
        width: 1,
      });
      shapes.push({
        kind: "text",
        x: x0 - 8,
        y: yOf(f) + 3,
        text: fmtTick(f),
        size: 11,
        color: "#333333",
        anchor: "end",
      });
    }
    shapes.push({
      kind: "polyline",
      points: [
        [x0, y0],
        [x0, y0 + panelH],
      ],
      color: "#333333",
      width: 1,
    });
    const ticks = log ? logTicks(domainMax) : niceTicksLinear(domainMax);
    for (const t of ticks) {
      const tx = xOf(t);
      shapes.push({
        kind: "polyline",
        points: [
          [tx, y0 + panelH],
          [tx, y0 + panelH + 4],
        ],
        color: "#333333",
        width: 1,
      });
      shapes.push({
        kind: "text",
        x: tx,
        y: y0 + panelH + 16,
        text: fmtTick(t),
        size: 11,
        color: "#333333",
        anchor: "middle",
      });
    }
    shapes.push({
      kind: "text",
      x: x0 + panelW / 2,
      y: y0 - 10,
      text: panel.title,
      size: 13,
      color: "#000000",
      anchor: "middle",
    });
    shapes.push({
      kind: "text",
      x: x0 + panelW / 2,
      y: y0 + panelH + 32,
      text: "tau",
      size: 11,
      color: "#333333",
      anchor: "middle",
    });
    shapes.push({
      kind: "text",
      x: x0 - 44,
      y: y0 + panelH / 2,
      text: "fraction",
      size: 11,
      color: "#333333",
      anchor: "middle",
    });

    // right-continuous step per series
    inPanel
      .sort((a, b) => a.method.localeCompare(b.method))
      .forEach((s) => {
        const color = colorOf(s.method, methods.indexOf(s.method));
        const pts: Array<[number, number]> = [];
        const startTau = log ? 1 : 0;
        let level = 0;
        pts.push([xOf(startTau), yOf(level)]);
        for (const p of s.points) {
          const px = xOf(p.tau);
          pts.push([px, yOf(level)]);
          pts.push([px, yOf(p.fraction)]);
          level = p.fraction;
        }
        pts.push([x0 + panelW, yOf(level)]);
        shapes.push({ kind: "polyline", points: pts, color, width: 2 });
      });
  });

  // shared legend along the bottom
  const legendY = FIG_H - 18;
  let lx = MARGIN.left;
  methods.forEach((m, i) => {
    const color = colorOf(m, i);
    shapes.push({
      kind: "polyline",
      points: [
        [lx, legendY - 4],
        [lx + 26, legendY - 4],
      ],
      color,
      width: 3,
    });
    shapes.push({
      kind: "text",
      x: lx + 32,
      y: legendY,
      text: m,
      size: 12,
      color: "#000000",
      anchor: "start",
    });
    lx += 40 + 8 * m.length + 24;
  });

  return { width: FIG_W, height: FIG_H, shapes };
}
