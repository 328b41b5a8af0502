import { HeightJson } from "./types.js";

export interface VertexPosition {
  vertex: number;
  x: number;
  y: number;
  height: number;
}

export interface Layout {
  positions: VertexPosition[];
  layers: number[][]; // layers[h] = vertices at height h, in drawing order
  width: number;
  heightPx: number;
}

export const LAYER_GAP = 90;
export const COLUMN_GAP = 60;
export const MARGIN = 40;

/** Rank of a vertex in the Gray-code walk of the n-cube: the binary number
 * whose reflected-Gray encoding is the vertex bitmask. Used as a fixed
 * within-layer ordering so the picture never reshuffles between moves. */
export function grayRank(v: number): number {
  let rank = 0;
  for (let g = v; g > 0; g >>= 1) rank ^= g;
  return rank;
}

/** Layered drawing: y descends with the height value (high vertices on top),
 * x orders each layer by Gray-code rank, centered. */
export function layout(height: HeightJson): Layout {
  const maxH = Math.max(...height.values);
  const layers: number[][] = Array.from({ length: maxH + 1 }, () => []);
  height.values.forEach((h, v) => layers[h]!.push(v));
  for (const layer of layers) layer.sort((a, b) => grayRank(a) - grayRank(b));

  const widest = Math.max(...layers.map((l) => l.length));
  const width = 2 * MARGIN + (widest - 1) * COLUMN_GAP;
  const positions: VertexPosition[] = [];
  layers.forEach((layer, h) => {
    const x0 = MARGIN + ((widest - layer.length) * COLUMN_GAP) / 2;
    layer.forEach((v, i) => {
      positions.push({
        vertex: v,
        x: x0 + i * COLUMN_GAP,
        y: MARGIN + (maxH - h) * LAYER_GAP,
        height: h,
      });
    });
  });
  positions.sort((a, b) => a.vertex - b.vertex);
  return { positions, layers, width, heightPx: 2 * MARGIN + maxH * LAYER_GAP };
}
