/**
 * The builder session: one working graph, a selection, an undo stack,
 * and live status from the service.  Moves are only ever offered when
 * they keep the graph valid, so the working graph never leaves the
 * axioms; applying a move re-validates through the service anyway.
 *
 * The only graph arithmetic done locally is the welding precondition
 * (equal labels, summed degrees within the gcd bounds) and degree
 * counting for it; admissible labels, deficits, phenotypes and kernel
 * verdicts all come from the service.
 */

import type { ServiceClient } from "./client.js";
import type {
  GraphJson,
  KernelVerdictPayload,
  Label,
  Move,
  ValidationPayload,
} from "./types.js";
import { canonicalGraph } from "./json.js";

export interface SessionStatus {
  validation: ValidationPayload;
  kernel: KernelVerdictPayload;
}

export interface OfferedMoves {
  addOut: Label[];
  addIn: Label[];
  weldPartners: string[];
  deficit: [number, number];
}

function gcdInt(a: number, b: number): number {
  a = Math.abs(a);
  b = Math.abs(b);
  while (b !== 0) {
    [a, b] = [b, a % b];
  }
  return a;
}

/** gcd against a label, with gcd(inf, k) = |k|. */
export function labelGcd(label: Label, k: number): number {
  return label === "inf" ? Math.abs(k) : gcdInt(label, k);
}

export function degrees(graph: GraphJson, vertex: string): [number, number] {
  let out = 0;
  let inc = 0;
  for (const e of graph.edges) {
    if (e.src === vertex) out += 1;
    if (e.dst === vertex) inc += 1;
  }
  return [out, inc];
}

function labelsEqual(a: Label, b: Label): boolean {
  return a === b;
}

/**
 * Vertices that can be welded onto `vertex` by the welding rule: same
 * label, and the summed out/in degrees stay within gcd(label, n) and
 * gcd(label, m).
 */
export function weldPartners(graph: GraphJson, vertex: string): string[] {
  const me = graph.vertices.find((v) => v.id === vertex);
  if (!me) return [];
  const [myOut, myIn] = degrees(graph, vertex);
  const partners: string[] = [];
  for (const other of graph.vertices) {
    if (other.id === vertex || !labelsEqual(other.label, me.label)) continue;
    const [oOut, oIn] = degrees(graph, other.id);
    if (
      myOut + oOut <= labelGcd(me.label, graph.n) &&
      myIn + oIn <= labelGcd(me.label, graph.m)
    ) {
      partners.push(other.id);
    }
  }
  return partners.sort();
}

export class BuilderSession {
  graph: GraphJson;
  selection: string | null = null;
  status: SessionStatus | null = null;
  private undoStack: GraphJson[] = [];
  private counter = 0;

  constructor(
    private client: ServiceClient,
    m: number,
    n: number,
  ) {
    this.graph = { m, n, vertices: [], edges: [] };
  }

  async refresh(): Promise<SessionStatus> {
    const validation = await this.client.validate(this.graph);
    const kernel =
      this.graph.vertices.length > 0
        ? await this.client.classify(this.graph)
        : ({ verdict: "unknown" } as KernelVerdictPayload);
    this.status = { validation, kernel };
    return this.status;
  }

  private freshId(prefix: string): string {
    const taken = new Set([
      ...this.graph.vertices.map((v) => v.id),
      ...this.graph.edges.map((e) => e.id),
    ]);
    for (;;) {
      const candidate = `${prefix}${this.counter++}`;
      if (!taken.has(candidate)) return candidate;
    }
  }

  private push(next: GraphJson): void {
    this.undoStack.push(this.graph);
    this.graph = canonicalGraph(next);
  }

  undo(): boolean {
    const prev = this.undoStack.pop();
    if (!prev) return false;
    this.graph = prev;
    return true;
  }

  /** Seed vertex; any label is admissible in an empty neighborhood. */
  addFreeVertex(label: Label): string {
    const id = this.freshId("v");
    this.push({
      ...this.graph,
      vertices: [...this.graph.vertices, { id, label }],
    });
    return id;
  }

  /**
   * The move menu for the selected vertex: admissible new-neighbor labels
   * in both directions (service truth), locally evaluated weld partners,
   * and the vertex's saturation deficit badge.
   */
  async offerMoves(vertex: string): Promise<OfferedMoves> {
    const me = this.graph.vertices.find((v) => v.id === vertex);
    if (!me) throw new Error(`no such vertex: ${vertex}`);
    const [myOut, myIn] = degrees(this.graph, vertex);
    const outSlots = labelGcd(me.label, this.graph.n) - myOut;
    const inSlots = labelGcd(me.label, this.graph.m) - myIn;
    const addOut =
      outSlots > 0
        ? (await this.client.admissibleTargets(this.graph.m, this.graph.n, me.label, "out")).labels
        : [];
    const addIn =
      inSlots > 0
        ? (await this.client.admissibleTargets(this.graph.m, this.graph.n, me.label, "in")).labels
        : [];
    return {
      addOut,
      addIn,
      weldPartners: weldPartners(this.graph, vertex),
      deficit: [outSlots, inSlots],
    };
  }

  async applyMove(move: Move): Promise<SessionStatus> {
    if (move.kind === "add-edge") {
      const newId = this.freshId("v");
      const edgeId = this.freshId("e");
      const vertices = [...this.graph.vertices, { id: newId, label: move.newLabel }];
      const edge =
        move.direction === "out"
          ? { id: edgeId, src: move.vertex, dst: newId }
          : { id: edgeId, src: newId, dst: move.vertex };
      this.push({ ...this.graph, vertices, edges: [...this.graph.edges, edge] });
    } else if (move.kind === "weld") {
      const welded = await this.client.weld(this.graph, move.keep, move.remove);
      this.push(welded);
      if (this.selection === move.remove) this.selection = move.keep;
    } else {
      const grown = await this.client.saturate(this.graph, move.rounds);
      this.push(grown.graph);
    }
    return this.refresh();
  }
}
