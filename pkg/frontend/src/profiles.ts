/**
 * Profiles CSV parsing and validation.
 *
 * Expected layout: optional `#`-prefixed metadata lines, then the exact
 * header `schema=1,kind,basis,method,tau,fraction`, then one row per
 * emitted breakpoint. Per (kind, basis, method) the rows must be sorted
 * by tau with nondecreasing fractions in [0, 1].
 */

export const PROFILES_HEADER = "schema=1,kind,basis,method,tau,fraction";

export type Kind = "runtime" | "accuracy";
export type Basis = "median" | "mean";

export interface ProfileRow {
  kind: Kind;
  basis: Basis;
  method: string;
  tau: number;
  fraction: number;
}

export interface Series {
  kind: Kind;
  basis: Basis;
  method: string;
  points: Array<{ tau: number; fraction: number }>;
}

export class ProfileError extends Error {}

const KINDS = new Set(["runtime", "accuracy"]);
const BASES = new Set(["median", "mean"]);

export function parseProfilesCsv(text: string): ProfileRow[] {
  const lines = text.split(/\r?\n/);
  let headerSeen = false;
  const rows: ProfileRow[] = [];
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i].trim();
    if (line === "" || line.startsWith("#")) continue;
    if (!headerSeen) {
      if (line !== PROFILES_HEADER) {
        throw new ProfileError(
          `schema mismatch at line ${i + 1}: expected "${PROFILES_HEADER}", got "${line}"`,
        );
      }
      headerSeen = true;
      continue;
    }
    const parts = line.split(",");
    if (parts.length !== 6 || parts[0] !== "1") {
      throw new ProfileError(`bad row at line ${i + 1}: "${line}"`);
    }
    const [, kind, basis, method, tauText, fracText] = parts;
    if (!KINDS.has(kind)) {
      throw new ProfileError(`unknown kind "${kind}" at line ${i + 1}`);
    }
    if (!BASES.has(basis)) {
      throw new ProfileError(`unknown basis "${basis}" at line ${i + 1}`);
    }
    const tau = Number(tauText);
    const fraction = Number(fracText);
    if (!Number.isFinite(tau) || !Number.isFinite(fraction)) {
      throw new ProfileError(`non-numeric tau/fraction at line ${i + 1}`);
    }
    if (fraction < 0 || fraction > 1) {
      throw new ProfileError(`fraction ${fraction} outside [0, 1] at line ${i + 1}`);
    }
    rows.push({ kind: kind as Kind, basis: basis as Basis, method, tau, fraction });
  }
  if (!headerSeen) {
    throw new ProfileError("schema mismatch: header line not found");
  }
  if (rows.length === 0) {
    throw new ProfileError("no rows");
  }
  return rows;
}

/** Group rows into series and enforce step-function monotonicity. */
export function toSeries(rows: ProfileRow[]): Series[] {
  const byKey = new Map<string, Series>();
  for (const row of rows) {
    const key = `${row.kind}/${row.basis}/${row.method}`;
    let series = byKey.get(key);
    if (!series) {
      series = { kind: row.kind, basis: row.basis, method: row.method, points: [] };
      byKey.set(key, series);
    }
    series.points.push({ tau: row.tau, fraction: row.fraction });
  }
  for (const [key, series] of byKey) {
    const pts = series.points;
    for (let i = 1; i < pts.length; i++) {
      if (pts[i].tau <= pts[i - 1].tau) {
        throw new ProfileError(`series ${key}: tau values not increasing at index ${i}`);
      }
      if (pts[i].fraction < pts[i - 1].fraction) {
        throw new ProfileError(`series ${key}: fraction decreases at index ${i}`);
      }
    }
    if (series.kind === "runtime" && pts[0].tau < 1) {
      throw new ProfileError(`series ${key}: runtime ratio below 1`);
    }
  }
  return [...byKey.values()];
}
