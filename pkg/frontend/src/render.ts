/** Scene -> drawable primitives, and a canvas rasterizer with pan/zoom.
 *
 * World coordinates are y-up; the view transform owns the flip to screen
 * space. Everything drawable is first flattened into a DrawList so tests can
 * assert on element counts without a DOM.
 */

import type { Mode, Overlay, Scene } from "./types.js";

export interface DrawRect {
  kind: "rect";
  xmin: number;
  xmax: number;
  ymin: number;
  ymax: number;
  depth: number;
}

export interface DrawCircle {
  kind: "circle";
  cx: number;
  cy: number;
  r: number;
}

export interface DrawSegment {
  kind: "segment";
  x1: number;
  y1: number;
  x2: number;
  y2: number;
  emphasis: "pair-line" | "edge" | "highlight";
}

export interface DrawArrow {
  kind: "arrow";
  x1: number;
  y1: number;
  x2: number;
  y2: number;
}

export interface DrawPoint {
  kind: "point";
  x: number;
  y: number;
  id: number;
  highlighted: boolean;
}

export type DrawElement = DrawRect | DrawCircle | DrawSegment | DrawArrow | DrawPoint;

function segment(
  scene: Scene,
  i: number,
  j: number,
  emphasis: DrawSegment["emphasis"],
): DrawSegment {
  const p = scene.points[i];
  const q = scene.points[j];
  return { kind: "segment", x1: p.x, y1: p.y, x2: q.x, y2: q.y, emphasis };
}

export function computeDrawList(scene: Scene | null, mode: Mode, overlays: Set<Overlay>): DrawElement[] {
  if (scene === null) return [];
  const out: DrawElement[] = [];
  const highlighted = new Set<number>();
  const results = scene.results ?? {};

  if (overlays.has("rects") && scene.split_rects) {
    for (const r of scene.split_rects) {
      out.push({ kind: "rect", xmin: r.xmin, xmax: r.xmax, ymin: r.ymin, ymax: r.ymax, depth: r.depth });
    }
  }
  if (scene.wspd && mode === "wspd") {
    for (const pair of scene.wspd.pairs) {
      if (overlays.has("balls")) {
        out.push({ kind: "circle", cx: pair.ball_a.cx, cy: pair.ball_a.cy, r: pair.ball_a.r });
        out.push({ kind: "circle", cx: pair.ball_b.cx, cy: pair.ball_b.cy, r: pair.ball_b.r });
      }
      if (overlays.has("pair-lines")) {
        out.push({
          kind: "segment",
          x1: pair.ball_a.cx,
          y1: pair.ball_a.cy,
          x2: pair.ball_b.cx,
          y2: pair.ball_b.cy,
          emphasis: "pair-line",
        });
      }
    }
  }
  if (overlays.has("edges") && scene.spanner && (mode === "spanner" || mode === "closest-pair")) {
    for (const [i, j] of scene.spanner.edges) out.push(segment(scene, i, j, "edge"));
  }
  if (overlays.has("edges") && results.amst && mode === "amst") {
    for (const [i, j] of results.amst.edges) out.push(segment(scene, i, j, "edge"));
  }
  if (overlays.has("highlights")) {
    if (results.closest_pair && mode === "closest-pair") {
      const { i, j } = results.closest_pair;
      out.push(segment(scene, i, j, "highlight"));
      highlighted.add(i).add(j);
    }
    if (results.k_closest && mode === "k-closest") {
      for (const { i, j } of results.k_closest.pairs) {
        out.push(segment(scene, i, j, "highlight"));
        highlighted.add(i).add(j);
      }
    }
    if (results.ann && mode === "ann") {
      results.ann.forEach((nn, i) => {
        const p = scene.points[i];
        const q = scene.points[nn];
        out.push({ kind: "arrow", x1: p.x, y1: p.y, x2: q.x, y2: q.y });
      });
    }
  }
  for (const p of scene.points) {
    out.push({ kind: "point", x: p.x, y: p.y, id: p.id, highlighted: highlighted.has(p.id) });
  }
  return out;
}

/** World <-> screen mapping: uniform scale, y flipped. */
export class Viewport {
  scale = 50; // pixels per world unit
  originX = 60; // screen x of world (0, 0)
  originY = 0; // screen y of world (0, 0); set on first resize

  toScreen(x: number, y: number, height: number): [number, number] {
    return [this.originX + x * this.scale, height - (this.originY + y * this.scale)];
  }

  toWorld(sx: number, sy: number, height: number): [number, number] {
    return [(sx - this.originX) / this.scale, (height - sy - this.originY) / this.scale];
  }

  pan(dxPixels: number, dyPixels: number): void {
    this.originX += dxPixels;
    this.originY -= dyPixels; // screen y grows downward
  }

  zoom(factor: number, anchorSx: number, anchorSy: number, height: number): void {
    const [wx, wy] = this.toWorld(anchorSx, anchorSy, height);
    this.scale = Math.min(2000, Math.max(2, this.scale * factor));
    const [sx, sy] = this.toScreen(wx, wy, height);
    this.originX += anchorSx - sx;
    this.originY -= anchorSy - sy;
  }
}

const DEPTH_COLORS = ["#4e79a7", "#f28e2b", "#59a14f", "#e15759", "#b07aa1", "#76b7b2"];

export class CanvasRenderer {
  readonly viewport = new Viewport();

  constructor(private canvas: HTMLCanvasElement) {}

  render(elements: DrawElement[], pending: boolean): void {
    const ctx = this.canvas.getContext("2d");
    if (!ctx) return;
    const { width, height } = this.canvas;
    ctx.clearRect(0, 0, width, height);
    ctx.save();
    if (pending) ctx.globalAlpha = 0.55; // stale scene is visually dimmed

    const s = (x: number, y: number) => this.viewport.toScreen(x, y, height);

    for (const el of elements) {
      if (el.kind === "rect") {
        const [x1, y1] = s(el.xmin, el.ymax);
        const [x2, y2] = s(el.xmax, el.ymin);
        ctx.strokeStyle = DEPTH_COLORS[el.depth % DEPTH_COLORS.length];
        ctx.lineWidth = 1;
        ctx.strokeRect(x1, y1, Math.max(x2 - x1, 1), Math.max(y2 - y1, 1));
      } else if (el.kind === "circle") {
        const [cx, cy] = s(el.cx, el.cy);
        const r = Math.max(el.r * this.viewport.scale, 2.5);
        ctx.strokeStyle = "rgba(89, 161, 79, 0.8)";
        ctx.lineWidth = 1;
        ctx.beginPath();
        ctx.arc(cx, cy, r, 0, Math.PI * 2);
        ctx.stroke();
      } else if (el.kind === "segment") {
        const [x1, y1] = s(el.x1, el.y1);
        const [x2, y2] = s(el.x2, el.y2);
        ctx.strokeStyle =
          el.emphasis === "highlight"
            ? "#e15759"
            : el.emphasis === "edge"
              ? "#4e79a7"
              : "rgba(120, 120, 120, 0.6)";
        ctx.lineWidth = el.emphasis === "highlight" ? 2.5 : 1.2;
        ctx.beginPath();
        ctx.moveTo(x1, y1);
        ctx.lineTo(x2, y2);
        ctx.stroke();
      } else if (el.kind === "arrow") {
        const [x1, y1] = s(el.x1, el.y1);
        const [x2, y2] = s(el.x2, el.y2);
        ctx.strokeStyle = "#b07aa1";
        ctx.fillStyle = "#b07aa1";
        ctx.lineWidth = 1.5;
        ctx.beginPath();
        ctx.moveTo(x1, y1);
        ctx.lineTo(x2, y2);
        ctx.stroke();
        const angle = Math.atan2(y2 - y1, x2 - x1);
        const headLength = 8;
        ctx.beginPath();
        ctx.moveTo(x2, y2);
        ctx.lineTo(
          x2 - headLength * Math.cos(angle - 0.4),
          y2 - headLength * Math.sin(angle - 0.4),
        );
        ctx.lineTo(
          x2 - headLength * Math.cos(angle + 0.4),
          y2 - headLength * Math.sin(angle + 0.4),
        );
        ctx.closePath();
        ctx.fill();
      } else {
        const [x, y] = s(el.x, el.y);
        ctx.fillStyle = el.highlighted ? "#e15759" : "#202124";
        ctx.beginPath();
        ctx.arc(x, y, el.highlighted ? 6 : 4.5, 0, Math.PI * 2);
        ctx.fill();
      }
    }
    ctx.restore();
  }

  /** Smallest point id within pick radius of a screen position, or null. */
  pick(elements: DrawElement[], sx: number, sy: number): number | null {
    const height = this.canvas.height;
    let best: number | null = null;
    let bestDist = 10; // pixels
    for (const el of elements) {
      if (el.kind !== "point") continue;
      const [x, y] = this.viewport.toScreen(el.x, el.y, height);
      const d = Math.hypot(x - sx, y - sy);
      if (d < bestDist || (d === bestDist && best !== null && el.id < best)) {
        bestDist = d;
        best = el.id;
      }
    }
    return best;
  }
}
