import { createHash } from "node:crypto";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";

import { describe, expect, it } from "vitest";

import { main } from "../src/cli.js";
import { buildFigure, Shape } from "../src/figure.js";
import { parseProfilesCsv, toSeries } from "../src/profiles.js";
import { figureToSvg } from "../src/svg.js";

const FIXTURE = join(__dirname, "fixtures", "profiles.csv");

function tmp(name: string): string {
  return join(mkdtempSync(join(tmpdir(), "plots-")), name);
}

describe("buildFigure on the grid benchmark profiles", () => {
  const text = readFileSync(FIXTURE, "utf-8");
  const series = toSeries(parseProfilesCsv(text));

  it("covers all four panels", () => {
    const panels = new Set(series.map((s) => `${s.kind}/${s.basis}`));
    expect(panels).toEqual(
      new Set(["runtime/median", "runtime/mean", "accuracy/median", "accuracy/mean"]),
    );
  });

  it("draws every series as a nondecreasing step reaching 1.0", () => {
    const figure = buildFigure(series);
    const curves = figure.shapes.filter(
      (s): s is Extract<Shape, { kind: "polyline" }> =>
        s.kind === "polyline" && s.width === 2,
    );
    // 4 panels x one curve per method present in each
    expect(curves.length).toBe(series.length);
    for (const curve of curves) {
      const ys = curve.points.map(([, y]) => y);
      for (let i = 1; i < ys.length; i++) {
        expect(ys[i]).toBeLessThanOrEqual(ys[i - 1] + 1e-9); // y axis points down
      }
      const xs = curve.points.map(([x]) => x);
      for (let i = 1; i < xs.length; i++) {
        expect(xs[i]).toBeGreaterThanOrEqual(xs[i - 1] - 1e-9);
      }
    }
    // every emitted series ends at fraction 1.0, so each curve's last y
    // sits on its panel's top gridline (one of the two panel rows)
    const topLevels = new Set(curves.map((c) => Math.round(c.points[c.points.length - 1][1])));
    expect(topLevels.size).toBeLessThanOrEqual(2);
  });

  it("labels all four panels", () => {
    const figure = buildFigure(series);
    const texts = figure.shapes.filter((s) => s.kind === "text").map((s) => (s as any).text);
    for (const title of [
      "runtime profile (median)",
      "accuracy profile (median)",
      "runtime profile (mean)",
      "accuracy profile (mean)",
    ]) {
      expect(texts).toContain(title);
    }
  });
});

describe("cli", () => {
  it("renders the fixture to svg with exit 0 and leaves the input unchanged", () => {
    const before = createHash("sha256").update(readFileSync(FIXTURE)).digest("hex");
    const out = tmp("fig.svg");
    expect(main(["--in", FIXTURE, "--out", out])).toBe(0);
    const svg = readFileSync(out, "utf-8");
    expect(svg).toContain("<svg");
    expect(svg).toContain("runtime profile (median)");
    expect(svg).toContain("accuracy profile (mean)");
    const after = createHash("sha256").update(readFileSync(FIXTURE)).digest("hex");
    expect(after).toBe(before);
  });

  it("renders png with a valid signature", () => {
    const out = tmp("fig.png");
    expect(main(["--in", FIXTURE, "--out", out])).toBe(0);
    const buf = readFileSync(out);
    expect([...buf.subarray(0, 8)]).toEqual([0x89, 0x50, 0x4e, 0x47, 0x0d, 0x0a, 0x1a, 0x0a]);
    expect(buf.includes("IHDR")).toBe(true);
    expect(buf.includes("IEND")).toBe(true);
  });

  it("fails with exit 2 on a schema mismatch", () => {
    const bad = tmp("bad.csv");
    writeFileSync(bad, "schema=2,kind,basis,method,tau,fraction\n");
    expect(main(["--in", bad, "--out", tmp("x.svg")])).toBe(2);
  });

  it("fails with exit 2 on an empty table", () => {
    const empty = tmp("empty.csv");
    writeFileSync(empty, "schema=1,kind,basis,method,tau,fraction\n");
    expect(main(["--in", empty, "--out", tmp("x.svg")])).toBe(2);
  });

  it("fails with exit 2 on a missing file", () => {
    expect(main(["--in", "/does/not/exist.csv", "--out", tmp("x.svg")])).toBe(2);
  });

  it("fails with exit 1 on usage errors", () => {
    expect(main(["--in", FIXTURE])).toBe(1);
    expect(main(["--in", FIXTURE, "--out", "fig.txt"])).toBe(1);
    expect(main(["--bogus"])).toBe(1);
  });

  it("step semantics: accuracy curves are right-continuous", () => {
    const csv = [
      "schema=1,kind,basis,method,tau,fraction",
      "1,accuracy,median,sphere,0.0,0.5",
      "1,accuracy,median,sphere,0.2,1.0",
      "1,runtime,median,sphere,1.0,1.0",
      "1,accuracy,mean,sphere,0.0,1.0",
      "1,runtime,mean,sphere,1.0,1.0",
    ].join("\n");
    const series = toSeries(parseProfilesCsv(csv));
    const svg = figureToSvg(buildFigure(series));
    expect(svg).toContain("polyline");
  });
});
