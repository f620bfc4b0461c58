/**
 * Canvas rendering with a small force layout.  Pure presentation: vertex
 * labels (infinity drawn as the symbol), directed edges with the derived
 * edge label, selection and deficit badges.
 */

import type { GraphJson, Label, ValidationPayload } from "./types.js";
import { labelGcd } from "./session.js";

export interface LayoutNode {
  id: string;
  x: number;
  y: number;
  vx: number;
  vy: number;
}

export class ForceLayout {
  nodes = new Map<string, LayoutNode>();

  constructor(
    private width: number,
    private height: number,
  ) {}

  sync(graph: GraphJson): void {
    const present = new Set(graph.vertices.map((v) => v.id));
    for (const id of [...this.nodes.keys()]) {
      if (!present.has(id)) this.nodes.delete(id);
    }
    let k = this.nodes.size;
    for (const v of graph.vertices) {
      if (!this.nodes.has(v.id)) {
        const angle = (k * 2.399963) % (2 * Math.PI); // golden angle spiral
        const radius = 40 + 14 * Math.sqrt(k);
        this.nodes.set(v.id, {
          id: v.id,
          x: this.width / 2 + radius * Math.cos(angle),
          y: this.height / 2 + radius * Math.sin(angle),
          vx: 0,
          vy: 0,
        });
        k += 1;
      }
    }
  }

  step(graph: GraphJson): void {
    const nodes = [...this.nodes.values()];
    for (const a of nodes) {
      for (const b of nodes) {
        if (a.id >= b.id) continue;
        const dx = b.x - a.x;
        const dy = b.y - a.y;
        const d2 = Math.max(dx * dx + dy * dy, 25);
        const force = 2400 / d2;
        const d = Math.sqrt(d2);
        a.vx -= (force * dx) / d;
        a.vy -= (force * dy) / d;
        b.vx += (force * dx) / d;
        b.vy += (force * dy) / d;
      }
    }
    for (const e of graph.edges) {
      const a = this.nodes.get(e.src);
      const b = this.nodes.get(e.dst);
      if (!a || !b || a === b) continue;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
      const pull = (d - 90) * 0.01;
      a.vx += (pull * dx) / d;
      a.vy += (pull * dy) / d;
      b.vx -= (pull * dx) / d;
      b.vy -= (pull * dy) / d;
    }
    for (const node of nodes) {
      node.vx += (this.width / 2 - node.x) * 0.002;
      node.vy += (this.height / 2 - node.y) * 0.002;
      node.x += node.vx * 0.6;
      node.y += node.vy * 0.6;
      node.vx *= 0.82;
      node.vy *= 0.82;
      node.x = Math.min(Math.max(node.x, 24), this.width - 24);
      node.y = Math.min(Math.max(node.y, 24), this.height - 24);
    }
  }
}

function labelText(label: Label): string {
  return label === "inf" ? "∞" : String(label);
}

/** Derived edge label, shown only: source label over gcd with n. */
function edgeLabel(graph: GraphJson, src: string): string {
  const v = graph.vertices.find((u) => u.id === src);
  if (!v) return "?";
  if (v.label === "inf") return "∞";
  return String(v.label / labelGcd(v.label, graph.n));
}

export function draw(
  ctx: CanvasRenderingContext2D,
  graph: GraphJson,
  layout: ForceLayout,
  selection: string | null,
  validation: ValidationPayload | null,
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);

  ctx.strokeStyle = "#5b7a9d";
  ctx.fillStyle = "#5b7a9d";
  ctx.lineWidth = 1.4;
  ctx.font = "11px sans-serif";
  const parallel = new Map<string, number>();
  for (const e of graph.edges) {
    const a = layout.nodes.get(e.src);
    const b = layout.nodes.get(e.dst);
    if (!a || !b) continue;
    const key = `${e.src}->${e.dst}`;
    const nth = parallel.get(key) ?? 0;
    parallel.set(key, nth + 1);
    drawEdge(ctx, a, b, nth, edgeLabel(graph, e.src));
  }

  for (const v of graph.vertices) {
    const node = layout.nodes.get(v.id);
    if (!node) continue;
    const deficit = validation?.deficits?.[v.id];
    const unsaturated = deficit !== undefined && (deficit[0] > 0 || deficit[1] > 0);
    ctx.beginPath();
    ctx.arc(node.x, node.y, 16, 0, 2 * Math.PI);
    ctx.fillStyle = v.id === selection ? "#ffd166" : unsaturated ? "#eef3f8" : "#cdeac0";
    ctx.fill();
    ctx.strokeStyle = v.id === selection ? "#b8860b" : "#34495e";
    ctx.stroke();
    ctx.fillStyle = "#1c2833";
    ctx.font = "13px sans-serif";
    ctx.textAlign = "center";
    ctx.textBaseline = "middle";
    ctx.fillText(labelText(v.label), node.x, node.y);
    if (deficit) {
      ctx.font = "9px sans-serif";
      ctx.fillStyle = unsaturated ? "#c0392b" : "#7f8c8d";
      ctx.fillText(`${deficit[0]}/${deficit[1]}`, node.x, node.y + 24);
    }
  }
}

function drawEdge(
  ctx: CanvasRenderingContext2D,
  a: LayoutNode,
  b: LayoutNode,
  nth: number,
  label: string,
): void {
  ctx.strokeStyle = "#5b7a9d";
  ctx.fillStyle = "#5b7a9d";
  if (a === b) {
    const r = 14 + 8 * nth;
    ctx.beginPath();
    ctx.arc(a.x + 16 + r, a.y - 8, r, 0.6 * Math.PI, 2.6 * Math.PI);
    ctx.stroke();
    ctx.font = "10px sans-serif";
    ctx.fillText(label, a.x + 16 + r, a.y - 14 - r);
    return;
  }
  const dx = b.x - a.x;
  const dy = b.y - a.y;
  const d = Math.max(Math.sqrt(dx * dx + dy * dy), 1);
  const ux = dx / d;
  const uy = dy / d;
  const bend = (nth - 0) * 10;
  const mx = (a.x + b.x) / 2 - uy * bend;
  const my = (a.y + b.y) / 2 + ux * bend;
  const sx = a.x + ux * 16;
  const sy = a.y + uy * 16;
  const tx = b.x - ux * 18;
  const ty = b.y - uy * 18;
  ctx.beginPath();
  ctx.moveTo(sx, sy);
  ctx.quadraticCurveTo(mx, my, tx, ty);
  ctx.stroke();
  const angle = Math.atan2(ty - my, tx - mx);
  ctx.beginPath();
  ctx.moveTo(tx, ty);
  ctx.lineTo(tx - 8 * Math.cos(angle - 0.4), ty - 8 * Math.sin(angle - 0.4));
  ctx.lineTo(tx - 8 * Math.cos(angle + 0.4), ty - 8 * Math.sin(angle + 0.4));
  ctx.closePath();
  ctx.fill();
  ctx.font = "10px sans-serif";
  ctx.fillText(label, mx, my - 4);
}
