/** Scene schema (version 1) as emitted by the core, plus UI-side state types. */

export const SCHEMA_VERSION = 1;

export interface ScenePoint {
  id: number;
  x: number;
  y: number;
}

export interface SceneRect {
  node_id: number;
  depth: number;
  xmin: number;
  xmax: number;
  ymin: number;
  ymax: number;
}

export interface SceneBall {
  cx: number;
  cy: number;
  r: number;
}

export interface ScenePair {
  a_ids: number[];
  b_ids: number[];
  ball_a: SceneBall;
  ball_b: SceneBall;
  gap: number;
}

export interface SceneWspd {
  s: number;
  pairs: ScenePair[];
}

export interface SceneSpanner {
  t: number;
  edges: [number, number][];
}

export interface SceneResults {
  closest_pair?: { i: number; j: number; d: number };
  k_closest?: { k: number; pairs: { i: number; j: number; d: number }[] };
  ann?: number[];
  amst?: { edges: [number, number][]; weight: number };
}

export interface Scene {
  schema: number;
  points: ScenePoint[];
  split_rects?: SceneRect[];
  wspd?: SceneWspd;
  spanner?: SceneSpanner;
  results?: SceneResults;
}

export const MODES = [
  "split-tree",
  "wspd",
  "spanner",
  "closest-pair",
  "k-closest",
  "ann",
  "amst",
] as const;

export type Mode = (typeof MODES)[number];

export const OVERLAYS = ["rects", "balls", "pair-lines", "edges", "highlights"] as const;

export type Overlay = (typeof OVERLAYS)[number];

/** Parameter widget ranges; the store clamps writes to these. */
export const PARAM_RANGES = {
  s: { min: 0.1, max: 20, default: 2 },
  t: { min: 1.1, max: 10, default: 2 },
} as const;

export interface UiPoint {
  id: number;
  x: number;
  y: number;
}

export interface ComputeRequest {
  points: [number, number][];
  mode: Mode;
  s?: number;
  t?: number;
  k?: number;
}

/** Boundary to the core; implementations must never do geometry themselves. */
export interface CoreBinding {
  compute(request: ComputeRequest): Promise<Scene>;
}
