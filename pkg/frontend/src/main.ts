/**
 * Wiring: parameter picker, canvas, move menu, status panel, undo,
 * import/export.  The working graph lives in the session; every change
 * round-trips through the service before it is shown as valid.
 */

import { ServiceClient, ServiceError } from "./client.js";
import { graphToText, parseGraphText } from "./json.js";
import { draw, ForceLayout } from "./render.js";
import { BuilderSession } from "./session.js";
import type { Label, Move } from "./types.js";

const SERVICE_URL = "http://127.0.0.1:8471";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const canvas = el<HTMLCanvasElement>("canvas");
const ctx = canvas.getContext("2d");
if (!ctx) throw new Error("no 2d context");

const client = new ServiceClient(SERVICE_URL);
let session = new BuilderSession(client, 2, 3);
const layout = new ForceLayout(canvas.width, canvas.height);
let offline = false;

function setBanner(text: string, bad: boolean): void {
  const banner = el<HTMLDivElement>("banner");
  banner.textContent = text;
  banner.className = bad ? "banner bad" : "banner";
}

async function refresh(): Promise<void> {
  try {
    await session.refresh();
    offline = false;
    renderStatus();
    await renderMoves();
  } catch (err) {
    if (err instanceof ServiceError) {
      setBanner(`service rejected the move: ${err.message}`, true);
    } else {
      offline = true;
      setBanner("service unreachable; read-only until it returns", true);
    }
  }
}

function renderStatus(): void {
  const status = session.status;
  if (!status) return;
  const v = status.validation;
  const bits = [
    v.ok ? "valid" : `INVALID (${v.violations.map((x) => x.kind).join(", ")})`,
    v.saturated ? "saturated" : "not saturated",
  ];
  if (v.phenotypes) {
    for (const comp of v.phenotypes) {
      bits.push(`phenotype ${comp.phenotype === "inf" ? "∞" : comp.phenotype} on {${comp.vertices.join(" ")}}`);
    }
  }
  bits.push(`kernel: ${status.kernel.verdict}`);
  if (status.kernel.certificate) {
    bits.push(`witness ${status.kernel.certificate.vertex} @ p=${status.kernel.certificate.prime}`);
  }
  setBanner(bits.join(" | "), !v.ok);
}

async function renderMoves(): Promise<void> {
  const menu = el<HTMLDivElement>("moves");
  menu.innerHTML = "";
  if (offline || !session.selection) return;
  const offered = await session.offerMoves(session.selection);
  const title = document.createElement("div");
  title.textContent = `moves at ${session.selection} (deficit ${offered.deficit[0]}/${offered.deficit[1]})`;
  menu.appendChild(title);
  const addButton = (text: string, move: Move) => {
    const button = document.createElement("button");
    button.textContent = text;
    button.addEventListener("click", () => {
      void session.applyMove(move).then(() => refresh());
    });
    menu.appendChild(button);
  };
  if (offered.deficit[0] > 0) {
    for (const label of offered.addOut) {
      addButton(`edge out to new ${label}`, {
        kind: "add-edge",
        direction: "out",
        vertex: session.selection,
        newLabel: label,
      });
    }
  }
  if (offered.deficit[1] > 0) {
    for (const label of offered.addIn) {
      addButton(`edge in from new ${label}`, {
        kind: "add-edge",
        direction: "in",
        vertex: session.selection,
        newLabel: label,
      });
    }
  }
  for (const partner of offered.weldPartners) {
    addButton(`weld with ${partner}`, { kind: "weld", keep: session.selection, remove: partner });
  }
}

el<HTMLButtonElement>("new-session").addEventListener("click", () => {
  const m = parseInt(el<HTMLInputElement>("param-m").value, 10);
  const n = parseInt(el<HTMLInputElement>("param-n").value, 10);
  if (!m || !n) {
    setBanner("parameters must be non-zero integers", true);
    return;
  }
  session = new BuilderSession(client, m, n);
  session.selection = null;
  void refresh();
});

el<HTMLButtonElement>("add-vertex").addEventListener("click", () => {
  const raw = el<HTMLInputElement>("seed-label").value.trim();
  const label: Label = raw === "inf" ? "inf" : parseInt(raw, 10);
  if (label !== "inf" && (!Number.isInteger(label) || label < 1)) {
    setBanner("label must be a positive integer or inf", true);
    return;
  }
  session.selection = session.addFreeVertex(label);
  void refresh();
});

el<HTMLButtonElement>("saturate").addEventListener("click", () => {
  void session.applyMove({ kind: "saturate", rounds: 1 }).then(() => refresh());
});

el<HTMLButtonElement>("undo").addEventListener("click", () => {
  if (session.undo()) void refresh();
});

el<HTMLButtonElement>("export").addEventListener("click", () => {
  el<HTMLTextAreaElement>("io").value = graphToText(session.graph);
});

el<HTMLButtonElement>("import").addEventListener("click", () => {
  try {
    const graph = parseGraphText(el<HTMLTextAreaElement>("io").value);
    session = new BuilderSession(client, graph.m, graph.n);
    session.graph = graph;
    void refresh();
  } catch (err) {
    setBanner(`import failed: ${(err as Error).message}`, true);
  }
});

canvas.addEventListener("click", (event) => {
  const rect = canvas.getBoundingClientRect();
  const x = event.clientX - rect.left;
  const y = event.clientY - rect.top;
  let hit: string | null = null;
  for (const node of layout.nodes.values()) {
    if ((node.x - x) ** 2 + (node.y - y) ** 2 <= 18 * 18) hit = node.id;
  }
  session.selection = hit;
  void renderMoves();
});

function tick(): void {
  layout.sync(session.graph);
  layout.step(session.graph);
  draw(ctx!, session.graph, layout, session.selection, session.status?.validation ?? null);
  requestAnimationFrame(tick);
}

void refresh();
tick();
