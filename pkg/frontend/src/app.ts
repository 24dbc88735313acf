/** Browser entry point: wires the store, renderer, and controls together. */

import { HttpBinding } from "./binding.js";
import { parsePointsFile, serializePointsCsv, serializePointsJson } from "./pointsio.js";
import { CanvasRenderer, computeDrawList } from "./render.js";
import { UiStore } from "./state.js";
import { MODES, OVERLAYS, type Mode } from "./types.js";

const canvas = document.getElementById("board") as HTMLCanvasElement;
const modeSelect = document.getElementById("mode") as HTMLSelectElement;
const sSlider = document.getElementById("s") as HTMLInputElement;
const tSlider = document.getElementById("t") as HTMLInputElement;
const kInput = document.getElementById("k") as HTMLInputElement;
const sValue = document.getElementById("s-value") as HTMLSpanElement;
const tValue = document.getElementById("t-value") as HTMLSpanElement;
const statusBar = document.getElementById("status") as HTMLDivElement;
const banner = document.getElementById("banner") as HTMLDivElement;
const warningBox = document.getElementById("warning") as HTMLDivElement;
const overlayBox = document.getElementById("overlays") as HTMLDivElement;
const clearButton = document.getElementById("clear") as HTMLButtonElement;
const loadInput = document.getElementById("load") as HTMLInputElement;
const saveJsonButton = document.getElementById("save-json") as HTMLButtonElement;
const saveCsvButton = document.getElementById("save-csv") as HTMLButtonElement;

const store = new UiStore(new HttpBinding());
const renderer = new CanvasRenderer(canvas);

for (const mode of MODES) {
  const option = document.createElement("option");
  option.value = mode;
  option.textContent = mode;
  modeSelect.appendChild(option);
}
modeSelect.value = store.mode;

for (const overlay of OVERLAYS) {
  const label = document.createElement("label");
  const box = document.createElement("input");
  box.type = "checkbox";
  box.checked = store.overlays.has(overlay);
  box.addEventListener("change", () => store.toggleOverlay(overlay));
  label.appendChild(box);
  label.appendChild(document.createTextNode(overlay));
  overlayBox.appendChild(label);
}

function resizeCanvas(): void {
  const rect = canvas.parentElement!.getBoundingClientRect();
  canvas.width = rect.width;
  canvas.height = Math.max(rect.height, 420);
  redraw();
}

function describeScene(): string {
  const scene = store.scene;
  const bits = [`${store.points.length} points`, `mode ${store.mode}`];
  if (scene?.wspd) bits.push(`s = ${scene.wspd.s}`, `m = ${scene.wspd.pairs.length} pairs`);
  if (scene?.spanner) bits.push(`t = ${scene.spanner.t}`, `${scene.spanner.edges.length} edges`);
  const results = scene?.results;
  if (results?.closest_pair) {
    const { i, j, d } = results.closest_pair;
    bits.push(`closest (${i}, ${j}) at ${d.toPrecision(6)}`);
  }
  if (results?.amst) bits.push(`tree weight ${results.amst.weight.toPrecision(6)}`);
  if (store.pending) bits.push("recomputing...");
  return bits.join("  |  ");
}

function redraw(): void {
  const elements = computeDrawList(store.scene, store.mode, store.overlays);
  renderer.render(elements, store.pending);
  statusBar.textContent = describeScene();
  banner.hidden = store.error === null;
  banner.textContent = store.error ? `core error: ${store.error} (click to dismiss)` : "";
  warningBox.hidden = store.warning === null;
  warningBox.textContent = store.warning ?? "";
  sValue.textContent = Number(store.s).toFixed(1);
  tValue.textContent = Number(store.t).toFixed(1);
  sSlider.value = String(store.s);
  tSlider.value = String(store.t);
  kInput.value = String(store.k);
}

store.subscribe(redraw);
banner.addEventListener("click", () => store.dismissError());

modeSelect.addEventListener("change", () => store.setMode(modeSelect.value as Mode));
sSlider.addEventListener("input", () => store.setS(Number(sSlider.value)));
tSlider.addEventListener("input", () => store.setT(Number(tSlider.value)));
kInput.addEventListener("change", () => store.setK(Number(kInput.value)));
clearButton.addEventListener("click", () => store.clear());

loadInput.addEventListener("change", async () => {
  const file = loadInput.files?.[0];
  if (!file) return;
  try {
    store.loadPoints(parsePointsFile(await file.text()));
  } catch (err) {
    store.error = err instanceof Error ? err.message : String(err);
  }
  loadInput.value = "";
  redraw();
});

function download(name: string, text: string): void {
  const blob = new Blob([text], { type: "text/plain" });
  const a = document.createElement("a");
  a.href = URL.createObjectURL(blob);
  a.download = name;
  a.click();
  URL.revokeObjectURL(a.href);
}

saveJsonButton.addEventListener("click", () =>
  download("points.json", serializePointsJson(store.points.map((p) => [p.x, p.y]))),
);
saveCsvButton.addEventListener("click", () =>
  download("points.csv", serializePointsCsv(store.points.map((p) => [p.x, p.y]))),
);

// --- canvas interaction: click adds, drag moves, alt/right-click deletes ---

let dragId: number | null = null;
let panning = false;
let lastX = 0;
let lastY = 0;

function canvasPos(ev: MouseEvent): [number, number] {
  const rect = canvas.getBoundingClientRect();
  return [ev.clientX - rect.left, ev.clientY - rect.top];
}

canvas.addEventListener("mousedown", (ev) => {
  const [sx, sy] = canvasPos(ev);
  const elements = computeDrawList(store.scene, store.mode, store.overlays);
  const hitIndex = renderer.pick(elements, sx, sy);
  const hitId = hitIndex === null ? null : store.points[hitIndex]?.id ?? null;
  if (ev.button === 2 || ev.altKey) {
    if (hitId !== null) store.deletePoint(hitId);
    ev.preventDefault();
    return;
  }
  if (hitId !== null) {
    dragId = hitId;
  } else if (ev.shiftKey || ev.button === 1) {
    panning = true;
  }
  lastX = sx;
  lastY = sy;
});

canvas.addEventListener("mousemove", (ev) => {
  const [sx, sy] = canvasPos(ev);
  if (dragId !== null) {
    const [wx, wy] = renderer.viewport.toWorld(sx, sy, canvas.height);
    store.movePoint(dragId, wx, wy);
  } else if (panning) {
    renderer.viewport.pan(sx - lastX, sy - lastY);
    redraw();
  }
  lastX = sx;
  lastY = sy;
});

window.addEventListener("mouseup", (ev) => {
  if (dragId === null && !panning && ev.target === canvas && ev.button === 0 && !ev.altKey) {
    const [sx, sy] = canvasPos(ev);
    const [wx, wy] = renderer.viewport.toWorld(sx, sy, canvas.height);
    store.addPoint(wx, wy);
  }
  dragId = null;
  panning = false;
});

canvas.addEventListener("contextmenu", (ev) => ev.preventDefault());

canvas.addEventListener("wheel", (ev) => {
  ev.preventDefault();
  const [sx, sy] = canvasPos(ev);
  renderer.viewport.zoom(ev.deltaY < 0 ? 1.15 : 1 / 1.15, sx, sy, canvas.height);
  redraw();
});

window.addEventListener("resize", resizeCanvas);
resizeCanvas();
renderer.viewport.originY = canvas.height - 60; // put world origin near the lower left
store.scheduleRecompute();
