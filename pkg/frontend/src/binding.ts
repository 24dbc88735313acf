/** HTTP binding: ships (points, params) to the core bridge, gets a Scene back. */

import type { ComputeRequest, CoreBinding, Scene } from "./types.js";

export class HttpBinding implements CoreBinding {
  constructor(private baseUrl: string = "") {}

  async compute(request: ComputeRequest): Promise<Scene> {
    const response = await fetch(`${this.baseUrl}/api/compute`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    const body = await response.json();
    if (!response.ok) {
      throw new Error(body.error ?? `core returned status ${response.status}`);
    }
    return body as Scene;
  }
}
