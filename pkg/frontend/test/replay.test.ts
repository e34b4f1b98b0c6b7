// Integration: run the real backend and replay the scripted click sequence
// [2, 2, 1, 3] on the A3 matrix through the client-side view logic.

import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { buildViewState } from "../src/state.js";
import { renderDiagramSvg } from "../src/render.js";

const PORT = 8455;
const BASE = `http://127.0.0.1:${PORT}`;
const A3 = { n: 3, B: [[0, 1, 0], [-1, 0, 1], [0, -1, 0]], indexing: 1 };

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  for (let i = 0; i < 100; i++) {
    try {
      const resp = await fetch(`${BASE}/sessions/none`);
      if (resp.status === 404) return;
    } catch {
      // not up yet
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  throw new Error("backend did not come up");
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "mutlab.cli", "serve", "--port", String(PORT)],
    { cwd: "..", stdio: "ignore" },
  );
  await waitForServer();
}, 20000);

afterAll(() => {
  server.kill();
});

describe("scripted click replay", () => {
  it("clicks [2,2,1,3] and matches the server's replayed state", async () => {
    const api = new ApiClient(BASE);
    const handle = await api.createSession(A3);
    let view = buildViewState(handle.id, handle.state);

    for (const k of [2, 2, 1, 3]) {
      const state = await api.mutate(handle.id, k);
      view = buildViewState(handle.id, state);
      // dashed rendering must mirror positive_edges exactly, step by step
      const svg = renderDiagramSvg(view);
      const dashedCount = (svg.match(/stroke-dasharray/g) ?? []).length;
      expect(dashedCount).toBe(state.positive_edges.length);
      for (const [a, b] of state.positive_edges) {
        expect(
          view.edges.some(
            (e) =>
              e.positive &&
              Math.min(e.from, e.to) === Math.min(a, b) &&
              Math.max(e.from, e.to) === Math.max(a, b),
          ),
        ).toBe(true);
      }
    }

    expect(view.word).toEqual([2, 2, 1, 3]);

    // replay the same word on a fresh session; states must be identical
    const replay = await api.createSession(A3);
    let replayed = replay.state;
    for (const k of [2, 2, 1, 3]) {
      replayed = await api.mutate(replay.id, k);
    }
    const replayedView = buildViewState(handle.id, replayed);
    expect(view).toEqual(replayedView);

    // re-fetching the original session reproduces the identical view
    const refreshed = buildViewState(handle.id, await api.getState(handle.id));
    expect(refreshed).toEqual(view);
  });

  it("surfaces the 422 for a non-acyclic matrix", async () => {
    const api = new ApiClient(BASE);
    const triangle = { n: 3, B: [[0, -1, 1], [1, 0, -1], [-1, 1, 0]], indexing: 1 };
    await expect(api.createSession(triangle)).rejects.toMatchObject({
      status: 422,
    });
  });

  it("undo pops the word", async () => {
    const api = new ApiClient(BASE);
    const handle = await api.createSession(A3);
    await api.mutate(handle.id, 2);
    await api.mutate(handle.id, 1);
    const state = await api.undo(handle.id);
    expect(state.word).toEqual([2]);
  });
});
