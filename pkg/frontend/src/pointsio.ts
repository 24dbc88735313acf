/** Point-file parsing and serialization in the CLI's CSV/JSON formats. */

export function parsePointsFile(text: string): [number, number][] {
  const trimmed = text.trimStart();
  if (trimmed.startsWith("{")) {
    const obj = JSON.parse(text);
    if (!Array.isArray(obj.points)) {
      throw new Error("expected a JSON object with a 'points' list");
    }
    return obj.points.map((row: unknown, idx: number) => {
      if (!Array.isArray(row) || row.length < 2) {
        throw new Error(`points[${idx}] is not an [x, y] pair`);
      }
      return [Number(row[0]), Number(row[1])];
    });
  }
  const out: [number, number][] = [];
  const lines = text.split(/\r?\n/);
  lines.forEach((line, idx) => {
    const cleaned = line.trim();
    if (!cleaned) return;
    const parts = cleaned.split(",").map((p) => p.trim());
    if (parts.length < 2) throw new Error(`line ${idx + 1}: expected 'x,y'`);
    const x = Number(parts[0]);
    const y = Number(parts[1]);
    if (Number.isNaN(x) || Number.isNaN(y)) {
      if (out.length === 0 && idx === 0) return; // header row
      throw new Error(`line ${idx + 1}: could not parse '${cleaned}'`);
    }
    out.push([x, y]);
  });
  if (out.length === 0) throw new Error("no points found");
  return out;
}

export function serializePointsJson(points: [number, number][]): string {
  return JSON.stringify({ points }, null, 2) + "\n";
}

export function serializePointsCsv(points: [number, number][]): string {
  return "x,y\n" + points.map(([x, y]) => `${x},${y}`).join("\n") + "\n";
}
