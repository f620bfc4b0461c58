/**
 * Wire types shared with the service.  The canonical graph JSON carries
 * m, n, vertices and edges only; labels are positive integers or "inf";
 * edge labels are derived, never serialized.
 */

export type Label = number | "inf";

export interface VertexJson {
  id: string;
  label: Label;
}

export interface EdgeJson {
  id: string;
  src: string;
  dst: string;
}

export interface GraphJson {
  m: number;
  n: number;
  vertices: VertexJson[];
  edges: EdgeJson[];
}

export interface Violation {
  kind: string;
  location: string;
}

export interface ComponentPhenotype {
  vertices: string[];
  phenotype: Label;
}

export interface ValidationPayload {
  ok: boolean;
  violations: Violation[];
  saturated: boolean;
  deficits?: Record<string, [number, number]>;
  phenotypes?: ComponentPhenotype[];
}

export interface KernelVerdictPayload {
  verdict: "in_kernel" | "not_in_kernel" | "unknown";
  certificate?: { kind: string; vertex: string; prime: number };
  reason?: string;
}

/** A move the builder may offer; every offered move keeps /validate green. */
export type Move =
  | { kind: "add-edge"; direction: "out" | "in"; vertex: string; newLabel: Label }
  | { kind: "weld"; keep: string; remove: string }
  | { kind: "saturate"; rounds: number };
