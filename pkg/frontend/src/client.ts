/**
 * Thin fetch wrapper over the local computation service.  All graph math
 * happens on the other side; this file only moves JSON.
 */

import type { GraphJson, KernelVerdictPayload, Label, ValidationPayload } from "./types.js";

export class ServiceError extends Error {
  constructor(
    public status: number,
    public payload: { error?: string; detail?: string } & Record<string, unknown>,
  ) {
    super(`${payload.error ?? "ServiceError"}: ${payload.detail ?? status}`);
  }
}

export class ServiceClient {
  constructor(public baseUrl: string) {}

  private async post<T>(path: string, body: unknown): Promise<T> {
    const response = await fetch(this.baseUrl + path, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    const payload = (await response.json()) as Record<string, unknown>;
    if (!response.ok) {
      throw new ServiceError(response.status, payload);
    }
    return payload as T;
  }

  validate(graph: GraphJson): Promise<ValidationPayload> {
    return this.post("/validate", { graph });
  }

  admissibleTargets(m: number, n: number, label: Label, dir: "out" | "in"): Promise<{ labels: Label[] }> {
    return this.post("/admissible-targets", { m, n, label, dir });
  }

  weld(graph: GraphJson, v: string, w: string): Promise<GraphJson> {
    return this.post("/weld", { graph, v, w });
  }

  saturate(graph: GraphJson, rounds: number): Promise<{ graph: GraphJson; frontier: string[] }> {
    return this.post("/saturate", { graph, rounds });
  }

  classify(graph: GraphJson): Promise<KernelVerdictPayload> {
    return this.post("/classify", { graph });
  }

  phenotype(m: number, n: number, k: Label): Promise<{ phenotype: Label }> {
    return this.post("/phenotype", { m, n, k });
  }
}
