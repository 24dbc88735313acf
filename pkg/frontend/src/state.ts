/** UI state store: editable points, parameters, and the recompute loop.
 *
 * Every mutation schedules a recompute through the core binding, debounced at
 * 50 ms so dragging stays smooth. Requests carry a monotonically increasing
 * id; a response is applied only if it is the latest one issued, so slow
 * (stale) responses can never overwrite newer state. The board is never
 * blocked: edits during a recompute just queue the next one.
 */

import {
  MODES,
  PARAM_RANGES,
  type ComputeRequest,
  type CoreBinding,
  type Mode,
  type Overlay,
  type Scene,
  type UiPoint,
} from "./types.js";

const MIN_POINTS: Record<Mode, number> = {
  "split-tree": 1,
  wspd: 1,
  spanner: 1,
  amst: 1,
  "closest-pair": 2,
  "k-closest": 2,
  ann: 2,
};

export type Listener = () => void;

export class UiStore {
  points: UiPoint[] = [];
  s: number = PARAM_RANGES.s.default;
  t: number = PARAM_RANGES.t.default;
  k = 1;
  mode: Mode = "wspd";
  overlays: Set<Overlay> = new Set(["rects", "balls", "pair-lines", "edges", "highlights"]);
  scene: Scene | null = null;
  /** True while the displayed scene is stale (a recompute is scheduled or in flight). */
  pending = false;
  /** Dismissible banner text for core errors; null when healthy. */
  error: string | null = null;
  /** Inline warning for rejected edits (duplicate coordinates). */
  warning: string | null = null;

  private nextPointId = 0;
  private issuedRequestId = 0;
  private debounceTimer: ReturnType<typeof setTimeout> | null = null;
  private listeners: Listener[] = [];

  constructor(
    private binding: CoreBinding,
    private debounceMs = 50,
  ) {}

  subscribe(listener: Listener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  // --- point editing -----------------------------------------------------

  private hasCoordinate(x: number, y: number, ignoreId?: number): boolean {
    return this.points.some((p) => p.x === x && p.y === y && p.id !== ignoreId);
  }

  addPoint(x: number, y: number): UiPoint | null {
    if (this.hasCoordinate(x, y)) {
      this.warning = `point (${x}, ${y}) already exists`;
      this.notify();
      return null;
    }
    const point = { id: this.nextPointId++, x, y };
    this.points.push(point);
    this.warning = null;
    this.scheduleRecompute();
    return point;
  }

  movePoint(id: number, x: number, y: number): boolean {
    const point = this.points.find((p) => p.id === id);
    if (!point) throw new Error(`no point with id ${id}`);
    if (this.hasCoordinate(x, y, id)) {
      this.warning = `point (${x}, ${y}) already exists`;
      this.notify();
      return false;
    }
    point.x = x;
    point.y = y;
    this.warning = null;
    this.scheduleRecompute();
    return true;
  }

  deletePoint(id: number): void {
    const before = this.points.length;
    this.points = this.points.filter((p) => p.id !== id);
    if (this.points.length === before) throw new Error(`no point with id ${id}`);
    this.scheduleRecompute();
  }

  clear(): void {
    this.points = [];
    this.scheduleRecompute();
  }

  loadPoints(coords: [number, number][]): void {
    const seen = new Set<string>();
    const loaded: UiPoint[] = [];
    for (const [x, y] of coords) {
      const key = `${x},${y}`;
      if (seen.has(key)) {
        this.warning = `duplicate point (${x}, ${y}) in file`;
        this.notify();
        return;
      }
      seen.add(key);
      loaded.push({ id: this.nextPointId++, x, y });
    }
    this.points = loaded;
    this.warning = null;
    this.scheduleRecompute();
  }

  // --- parameters and mode ------------------------------------------------

  setS(value: number): void {
    this.s = Math.min(PARAM_RANGES.s.max, Math.max(PARAM_RANGES.s.min, value));
    this.scheduleRecompute();
  }

  setT(value: number): void {
    this.t = Math.min(PARAM_RANGES.t.max, Math.max(PARAM_RANGES.t.min, value));
    this.scheduleRecompute();
  }

  setK(value: number): void {
    const total = (this.points.length * (this.points.length - 1)) / 2;
    this.k = Math.max(1, Math.min(Math.round(value), Math.max(1, total)));
    this.scheduleRecompute();
  }

  setMode(mode: Mode): void {
    if (!MODES.includes(mode)) throw new Error(`unknown mode ${mode}`);
    this.mode = mode;
    if (mode === "ann" && this.s <= 2) {
      this.s = 4; // neighbor search needs s > 2; move the visible widget too
    }
    this.scheduleRecompute();
  }

  toggleOverlay(overlay: Overlay): void {
    if (this.overlays.has(overlay)) this.overlays.delete(overlay);
    else this.overlays.add(overlay);
    this.notify(); // redraw only, never a recompute
  }

  // --- recompute loop ------------------------------------------------------

  buildRequest(): ComputeRequest {
    const request: ComputeRequest = {
      points: this.points.map((p) => [p.x, p.y]),
      mode: this.mode,
    };
    if (this.mode === "wspd" || this.mode === "k-closest" || this.mode === "ann") {
      request.s = this.s;
    }
    if (this.mode === "spanner" || this.mode === "amst") request.t = this.t;
    if (this.mode === "k-closest") request.k = this.k;
    return request;
  }

  scheduleRecompute(): void {
    this.pending = true;
    this.notify();
    if (this.debounceTimer !== null) clearTimeout(this.debounceTimer);
    this.debounceTimer = setTimeout(() => {
      this.debounceTimer = null;
      void this.issueRecompute();
    }, this.debounceMs);
  }

  /** Fire the debounced recompute immediately (used by tests and file loads). */
  flush(): Promise<void> {
    if (this.debounceTimer !== null) {
      clearTimeout(this.debounceTimer);
      this.debounceTimer = null;
    }
    return this.issueRecompute();
  }

  private async issueRecompute(): Promise<void> {
    const id = ++this.issuedRequestId;
    if (this.points.length < MIN_POINTS[this.mode]) {
      this.scene = { schema: 1, points: this.points.map((p, i) => ({ id: i, x: p.x, y: p.y })) };
      this.pending = false;
      this.error = null;
      this.notify();
      return;
    }
    const request = this.buildRequest();
    try {
      const scene = await this.binding.compute(request);
      if (id !== this.issuedRequestId) return; // stale response, a newer request exists
      this.scene = scene;
      this.pending = false;
      this.error = null;
    } catch (err) {
      if (id !== this.issuedRequestId) return;
      this.pending = false;
      this.error = err instanceof Error ? err.message : String(err);
    }
    this.notify();
  }

  dismissError(): void {
    this.error = null;
    this.notify();
  }
}
