/**
 * Canonical serialization, byte-compatible with the service: compact
 * separators, fixed key order, vertices and edges sorted by id.
 */

import type { EdgeJson, GraphJson, Label, VertexJson } from "./types.js";

function compareIds(a: string, b: string): number {
  return a < b ? -1 : a > b ? 1 : 0;
}

export function canonicalGraph(g: GraphJson): GraphJson {
  return {
    m: g.m,
    n: g.n,
    vertices: [...g.vertices]
      .sort((a, b) => compareIds(a.id, b.id))
      .map((v) => ({ id: v.id, label: v.label })),
    edges: [...g.edges]
      .sort((a, b) => compareIds(a.id, b.id))
      .map((e) => ({ id: e.id, src: e.src, dst: e.dst })),
  };
}

export function graphToText(g: GraphJson): string {
  return JSON.stringify(canonicalGraph(g));
}

function isLabel(value: unknown): value is Label {
  return value === "inf" || (typeof value === "number" && Number.isInteger(value) && value >= 1);
}

/** Strict parse: wrong shapes, unknown fields and duplicate ids all throw. */
export function parseGraphText(text: string): GraphJson {
  const raw: unknown = JSON.parse(text);
  if (typeof raw !== "object" || raw === null || Array.isArray(raw)) {
    throw new Error("graph JSON must be an object");
  }
  const obj = raw as Record<string, unknown>;
  const allowed = ["m", "n", "vertices", "edges"];
  for (const key of Object.keys(obj)) {
    if (!allowed.includes(key)) throw new Error(`unknown graph field: ${key}`);
  }
  for (const key of allowed) {
    if (!(key in obj)) throw new Error(`missing graph field: ${key}`);
  }
  const m = obj.m;
  const n = obj.n;
  if (typeof m !== "number" || !Number.isInteger(m) || m === 0) throw new Error("bad m");
  if (typeof n !== "number" || !Number.isInteger(n) || n === 0) throw new Error("bad n");
  if (!Array.isArray(obj.vertices) || !Array.isArray(obj.edges)) {
    throw new Error("vertices and edges must be arrays");
  }
  const vertices: VertexJson[] = [];
  const seenV = new Set<string>();
  for (const item of obj.vertices as unknown[]) {
    const v = item as Record<string, unknown>;
    if (typeof v !== "object" || v === null) throw new Error("bad vertex entry");
    const keys = Object.keys(v).sort();
    if (keys.join(",") !== "id,label") throw new Error("bad vertex entry");
    if (typeof v.id !== "string" || seenV.has(v.id)) throw new Error(`bad vertex id ${String(v.id)}`);
    if (!isLabel(v.label)) throw new Error(`bad label at ${v.id}`);
    seenV.add(v.id);
    vertices.push({ id: v.id, label: v.label });
  }
  const edges: EdgeJson[] = [];
  const seenE = new Set<string>();
  for (const item of obj.edges as unknown[]) {
    const e = item as Record<string, unknown>;
    if (typeof e !== "object" || e === null) throw new Error("bad edge entry");
    const keys = Object.keys(e).sort();
    if (keys.join(",") !== "dst,id,src") throw new Error("bad edge entry");
    if (typeof e.id !== "string" || seenE.has(e.id)) throw new Error(`bad edge id ${String(e.id)}`);
    if (typeof e.src !== "string" || !seenV.has(e.src)) throw new Error(`unknown src on ${e.id}`);
    if (typeof e.dst !== "string" || !seenV.has(e.dst)) throw new Error(`unknown dst on ${e.id}`);
    seenE.add(e.id);
    edges.push({ id: e.id, src: e.src, dst: e.dst });
  }
  return { m, n, vertices, edges };
}
