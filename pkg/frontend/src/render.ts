import { Layout, layout } from "./layout.js";
import {
  CurveImage,
  DivisorJson,
  LegalMoves,
  SessionState,
  Splitting,
} from "./types.js";

export const EDGE_COLORS = [
  "#d62728", // color 1
  "#ff7f0e", // color 2
  "#2ca02c", // color 3
  "#1f77b4", // color 4
  "#9467bd", // color 5
];

export interface SceneVertex {
  vertex: number;
  x: number;
  y: number;
  height: number;
  canLower: boolean;
  canRaise: boolean;
  splitSign: number | null; // ±1 when an overlay is active
}

export interface SceneEdge {
  from: number;
  to: number;
  color: number; // 1-based edge color
  stroke: string;
}

export interface SceneBadge {
  // bow-tie face marker, drawn at the midpoint of the face's vertices
  colors: number[];
  basepoint: number;
  x: number;
  y: number;
}

export interface PanelEntry {
  k: number;
  a: number;
  b4: number;
  c2: number;
  delta: number | null;
}

export interface Scene {
  layout: Layout;
  vertices: SceneVertex[];
  edges: SceneEdge[];
  badges: SceneBadge[];
  panel: PanelEntry[];
  error: boolean;
}

function faceVertices(n: number, colors: number[], basepoint: number): number[] {
  const [j1, j2] = colors as [number, number];
  const e1 = 1 << (j1 - 1);
  const e2 = 1 << (j2 - 1);
  return [basepoint, basepoint ^ e1, basepoint ^ e1 ^ e2, basepoint ^ e2];
}

/** Pure scene description from server-confirmed state; rendering to SVG is a
 * separate, DOM-only step so this part stays testable. */
export function buildScene(
  state: SessionState,
  legal: LegalMoves,
  divisor: DivisorJson | null,
  splitting: Splitting | null,
  lastDeltas: number[] = [],
  stepError = false,
): Scene {
  const lay = layout(state.height);
  const byVertex = new Map(lay.positions.map((p) => [p.vertex, p]));

  const vertices: SceneVertex[] = lay.positions.map((p) => ({
    vertex: p.vertex,
    x: p.x,
    y: p.y,
    height: p.height,
    canLower: legal.lower.includes(p.vertex),
    canRaise: legal.raise.includes(p.vertex),
    splitSign: splitting ? (splitting.signs[p.vertex] ?? null) : null,
  }));

  const edges: SceneEdge[] = [];
  const n = state.n;
  for (let v = 0; v < 1 << n; v++) {
    for (let j = 1; j <= n; j++) {
      const u = v ^ (1 << (j - 1));
      if (u > v) {
        edges.push({ from: v, to: u, color: j, stroke: EDGE_COLORS[j - 1]! });
      }
    }
  }

  const badges: SceneBadge[] = [];
  if (divisor) {
    for (const p of divisor.points) {
      if (p.type !== "face" || !p.colors || p.basepoint === undefined) continue;
      const members = faceVertices(n, p.colors, p.basepoint);
      const pts = members.map((v) => byVertex.get(v)!);
      badges.push({
        colors: p.colors,
        basepoint: p.basepoint,
        x: pts.reduce((s, q) => s + q.x, 0) / 4,
        y: pts.reduce((s, q) => s + q.y, 0) / 4,
      });
    }
  }

  const panel: PanelEntry[] = (state.image?.curves ?? []).map(
    (c: CurveImage, i) => ({
      k: c.k,
      a: c.a,
      b4: c.b4,
      c2: c.c2,
      delta: lastDeltas.length ? (lastDeltas[i] ?? null) : null,
    }),
  );

  return { layout: lay, vertices, edges, badges, panel, error: stepError };
}

/** Serialize a scene to an SVG string; the browser entry point injects this
 * into the page and attaches click handlers by vertex id. */
export function sceneToSvg(scene: Scene): string {
  const parts: string[] = [
    `<svg xmlns="http://www.w3.org/2000/svg" width="${scene.layout.width}" height="${scene.layout.heightPx}">`,
  ];
  const pos = new Map(scene.vertices.map((v) => [v.vertex, v]));
  for (const e of scene.edges) {
    const a = pos.get(e.from)!;
    const b = pos.get(e.to)!;
    parts.push(
      `<line x1="${a.x}" y1="${a.y}" x2="${b.x}" y2="${b.y}" stroke="${e.stroke}" stroke-width="1.5" opacity="0.6"/>`,
    );
  }
  for (const badge of scene.badges) {
    parts.push(
      `<rect x="${badge.x - 5}" y="${badge.y - 5}" width="10" height="10" fill="none" stroke="#333" transform="rotate(45 ${badge.x} ${badge.y})"/>`,
    );
  }
  for (const v of scene.vertices) {
    const fill =
      v.splitSign === 1 ? "#ffd700" : v.splitSign === -1 ? "#444" : "#fff";
    const ring = v.canLower ? "#d62728" : v.canRaise ? "#2ca02c" : "#888";
    parts.push(
      `<circle data-vertex="${v.vertex}" cx="${v.x}" cy="${v.y}" r="12" fill="${fill}" stroke="${ring}" stroke-width="${v.canLower || v.canRaise ? 3 : 1}"/>`,
      `<text x="${v.x}" y="${v.y + 4}" text-anchor="middle" font-size="9">${v.vertex}</text>`,
    );
  }
  parts.push("</svg>");
  return parts.join("");
}

export function panelToHtml(scene: Scene): string {
  if (scene.error) {
    return `<div class="panel error">step-law violation: server image moved by more than one generator</div>`;
  }
  const cells = scene.panel
    .map(
      (p) =>
        `<div class="curve"><b>E<sub>${p.k}</sub></b> (${p.a}, ${p.b4}, ${p.c2})` +
        (p.delta !== null
          ? ` <span class="delta">${p.delta > 0 ? "+1" : "−1"}</span>`
          : "") +
        `</div>`,
    )
    .join("");
  return `<div class="panel">${cells}</div>`;
}
