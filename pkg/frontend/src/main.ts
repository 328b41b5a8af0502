import { HttpClient } from "./api.js";
import { buildScene, panelToHtml, sceneToSvg } from "./render.js";
import { Explorer, replay, validateLog } from "./state.js";
import { DivisorJson, Splitting } from "./types.js";

const client = new HttpClient("");

let explorer: Explorer | null = null;
let overlayK: number | null = null;

async function refresh(): Promise<void> {
  if (!explorer) return;
  const id = explorer.state.id;
  const divisor: DivisorJson = await client.divisor(id);
  const splitting: Splitting | null =
    overlayK !== null && explorer.state.n === 5
      ? await client.splitting(id, overlayK)
      : null;
  const scene = buildScene(
    explorer.state,
    explorer.legal,
    divisor,
    splitting,
    explorer.lastDeltas,
    explorer.stepError,
  );
  const graph = document.getElementById("graph")!;
  graph.innerHTML = sceneToSvg(scene);
  document.getElementById("panel")!.innerHTML = panelToHtml(scene);
  document.getElementById("degree")!.textContent =
    `divisor degree ${divisor.degree}, moves ${explorer.log.length}`;

  for (const el of graph.querySelectorAll<SVGCircleElement>("[data-vertex]")) {
    el.addEventListener("click", () => {
      void onClick(Number(el.dataset.vertex));
    });
  }
}

async function onClick(vertex: number): Promise<void> {
  if (!explorer) return;
  const result = await explorer.click(vertex);
  if (result === "inert") {
    document.getElementById("degree")!.textContent =
      `vertex ${vertex} is not a legal raise or lower target`;
    return;
  }
  await refresh();
}

async function start(): Promise<void> {
  explorer = await Explorer.start(client, 5, "fully_extended");
  await refresh();
}

function wireControls(): void {
  document.getElementById("restart")!.addEventListener("click", () => {
    void start();
  });
  document.getElementById("undo")!.addEventListener("click", async () => {
    if (!explorer) return;
    await explorer.undo();
    await refresh();
  });
  document.getElementById("export")!.addEventListener("click", () => {
    if (!explorer) return;
    const blob = new Blob([explorer.exportLog()], { type: "application/json" });
    const a = document.createElement("a");
    a.href = URL.createObjectURL(blob);
    a.download = "moves.json";
    a.click();
  });
  document
    .getElementById("replay-file")!
    .addEventListener("change", async (ev) => {
      const input = ev.target as HTMLInputElement;
      const file = input.files?.[0];
      if (!file) return;
      try {
        const log = validateLog(await file.text());
        explorer = await replay(client, log);
        await refresh();
      } catch (err) {
        document.getElementById("degree")!.textContent = String(err);
      }
    });
  const overlay = document.getElementById("overlay") as HTMLSelectElement;
  overlay.addEventListener("change", async () => {
    overlayK = overlay.value === "off" ? null : Number(overlay.value);
    await refresh();
  });
}

wireControls();
void start();
