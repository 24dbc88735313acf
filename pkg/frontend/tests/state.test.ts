import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { UiStore } from "../src/state.js";
import type { ComputeRequest, CoreBinding, Scene } from "../src/types.js";

function echoScene(request: ComputeRequest, tag: string): Scene {
  // encode the request into the scene so tests can trace which inputs produced it
  return {
    schema: 1,
    points: request.points.map(([x, y], i) => ({ id: i, x, y })),
    results: { k_closest: { k: request.k ?? -1, pairs: [] } },
    wspd: { s: request.s ?? -1, pairs: [] },
    spanner: { t: request.t ?? -1, edges: [] },
    ...({ tag } as object),
  } as Scene;
}

class FakeBinding implements CoreBinding {
  requests: ComputeRequest[] = [];
  private pending: { request: ComputeRequest; resolve: (s: Scene) => void }[] = [];
  manual = false;

  compute(request: ComputeRequest): Promise<Scene> {
    const copy = JSON.parse(JSON.stringify(request)) as ComputeRequest;
    this.requests.push(copy);
    if (!this.manual) {
      return Promise.resolve(echoScene(copy, `auto-${this.requests.length - 1}`));
    }
    return new Promise((resolve) => this.pending.push({ request: copy, resolve }));
  }

  /** Resolve the queued request at `index` (order of arrival). */
  release(index: number, tag: string): void {
    const entry = this.pending[index];
    if (!entry) throw new Error(`no pending request ${index}`);
    entry.resolve(echoScene(entry.request, tag));
  }
}

describe("UiStore editing", () => {
  let binding: FakeBinding;
  let store: UiStore;

  beforeEach(() => {
    vi.useFakeTimers();
    binding = new FakeBinding();
    store = new UiStore(binding);
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it("adds points and recomputes after the debounce window", async () => {
    const added = store.addPoint(1, 1);
    expect(added).not.toBeNull();
    expect(store.pending).toBe(true);
    await vi.advanceTimersByTimeAsync(60);
    expect(binding.requests).toHaveLength(1);
    expect(store.scene?.points).toEqual([{ id: 0, x: 1, y: 1 }]);
    expect(store.pending).toBe(false);
  });

  it("a single point in wspd mode yields empty structures", async () => {
    store.addPoint(1, 1);
    await vi.advanceTimersByTimeAsync(60);
    expect(store.scene?.wspd?.pairs).toEqual([]);
  });

  it("rejects duplicate coordinates with a warning and no state change", async () => {
    store.addPoint(1, 1);
    await vi.advanceTimersByTimeAsync(60);
    const before = binding.requests.length;
    expect(store.addPoint(1, 1)).toBeNull();
    expect(store.warning).toMatch(/already exists/);
    expect(store.points).toHaveLength(1);
    await vi.advanceTimersByTimeAsync(100);
    expect(binding.requests.length).toBe(before); // rejected edit schedules nothing
  });

  it("coalesces rapid edits into one request", async () => {
    store.addPoint(0, 0);
    await vi.advanceTimersByTimeAsync(10);
    store.addPoint(1, 0);
    await vi.advanceTimersByTimeAsync(10);
    store.addPoint(2, 0);
    await vi.advanceTimersByTimeAsync(80);
    expect(binding.requests).toHaveLength(1);
    expect(binding.requests[0].points).toHaveLength(3);
  });

  it("move must reference an existing id", () => {
    expect(() => store.movePoint(99, 0, 0)).toThrow(/no point/);
  });

  it("deleting the only point clears the board and the scene", async () => {
    const p = store.addPoint(2, 3)!;
    await vi.advanceTimersByTimeAsync(60);
    store.deletePoint(p.id);
    await vi.advanceTimersByTimeAsync(60);
    expect(store.points).toHaveLength(0);
    expect(store.scene).toEqual({ schema: 1, points: [] });
  });

  it("mode switches preserve points", async () => {
    store.addPoint(0, 0);
    store.addPoint(5, 5);
    store.setMode("spanner");
    await vi.advanceTimersByTimeAsync(60);
    expect(store.points).toHaveLength(2);
    expect(binding.requests.at(-1)?.mode).toBe("spanner");
    expect(binding.requests.at(-1)?.t).toBe(store.t);
  });

  it("clamps parameters to widget ranges", () => {
    store.setS(500);
    expect(store.s).toBe(20);
    store.setS(0);
    expect(store.s).toBe(0.1);
    store.setT(1);
    expect(store.t).toBe(1.1);
    store.addPoint(0, 0);
    store.addPoint(1, 0);
    store.addPoint(2, 0);
    store.setK(0);
    expect(store.k).toBe(1);
    store.setK(99);
    expect(store.k).toBe(3); // C(3, 2)
  });

  it("switching to ann mode lifts s above the validity threshold", () => {
    store.setS(1);
    store.setMode("ann");
    expect(store.s).toBe(4);
  });

  it("overlay toggles redraw without recomputing", async () => {
    store.addPoint(0, 0);
    await vi.advanceTimersByTimeAsync(60);
    const before = binding.requests.length;
    let notified = 0;
    store.subscribe(() => notified++);
    store.toggleOverlay("balls");
    expect(store.overlays.has("balls")).toBe(false);
    expect(notified).toBe(1);
    await vi.advanceTimersByTimeAsync(100);
    expect(binding.requests.length).toBe(before);
  });

  it("core errors surface as a dismissible banner and leave the board editable", async () => {
    binding.compute = () => Promise.reject(new Error("k must be in 1..1"));
    store.addPoint(0, 0);
    store.addPoint(1, 1);
    await vi.advanceTimersByTimeAsync(60);
    expect(store.error).toMatch(/k must be/);
    store.dismissError();
    expect(store.error).toBeNull();
    expect(() => store.addPoint(2, 2)).not.toThrow();
  });
});

describe("UiStore recompute loop", () => {
  let binding: FakeBinding;
  let store: UiStore;

  beforeEach(() => {
    vi.useFakeTimers();
    binding = new FakeBinding();
    store = new UiStore(binding);
  });

  afterEach(() => {
    vi.useRealTimers();
  });

  it("a scripted edit sequence ends with a scene matching the final inputs", async () => {
    store.addPoint(0, 0);
    store.addPoint(10, 0);
    store.addPoint(10, 10);
    await vi.advanceTimersByTimeAsync(60);
    const moved = store.points[2].id;
    store.movePoint(moved, 4, 4);
    await vi.advanceTimersByTimeAsync(60);
    store.deletePoint(store.points[0].id);
    store.setMode("k-closest");
    store.setK(1);
    store.setS(3);
    await vi.advanceTimersByTimeAsync(60);

    const last = binding.requests.at(-1)!;
    expect(last.points).toEqual([[10, 0], [4, 4]]);
    expect(last.mode).toBe("k-closest");
    expect(last.s).toBe(3);
    expect(last.k).toBe(1);
    // the applied scene is the one computed from exactly those inputs
    expect(store.scene?.points).toEqual([
      { id: 0, x: 10, y: 0 },
      { id: 1, x: 4, y: 4 },
    ]);
    expect(store.scene?.wspd?.s).toBe(3);
    expect(store.pending).toBe(false);
  });

  it("discards stale responses: the latest request always wins", async () => {
    binding.manual = true;
    store.addPoint(0, 0);
    store.addPoint(1, 1);
    await vi.advanceTimersByTimeAsync(60); // request 0 in flight
    store.setS(9);
    await vi.advanceTimersByTimeAsync(60); // request 1 in flight
    expect(binding.requests).toHaveLength(2);

    binding.release(1, "fresh"); // newest answer lands first
    await vi.advanceTimersByTimeAsync(0);
    expect((store.scene as { tag?: string }).tag).toBe("fresh");
    expect(store.pending).toBe(false);

    binding.release(0, "stale"); // delayed answer for the outdated inputs
    await vi.advanceTimersByTimeAsync(0);
    expect((store.scene as { tag?: string }).tag).toBe("fresh");
    expect(store.scene?.wspd?.s).toBe(9);
  });

  it("edits made during an in-flight recompute queue a fresh request", async () => {
    binding.manual = true;
    store.addPoint(0, 0);
    await vi.advanceTimersByTimeAsync(60);
    store.addPoint(7, 7); // not blocked by the pending compute
    expect(store.points).toHaveLength(2);
    await vi.advanceTimersByTimeAsync(60);
    expect(binding.requests).toHaveLength(2);
    binding.release(0, "old");
    binding.release(1, "new");
    await vi.advanceTimersByTimeAsync(0);
    expect((store.scene as { tag?: string }).tag).toBe("new");
    expect(store.scene?.points).toHaveLength(2);
  });
});
