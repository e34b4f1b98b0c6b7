// ViewState is a pure function of the last API payload. Edges are read off
// the B matrix the server sent (an edge v -> w exists iff B[w][v] > 0);
// whether an edge is positive/dashed comes verbatim from positive_edges.

import type { ApiState } from "./api.js";

export interface ViewEdge {
  from: number; // 1-based vertex ids, matching the wire format
  to: number;
  weight: number;
  positive: boolean;
}

export interface ViewRow {
  vertex: number;
  coords: number[];
  sign: 1 | -1;
}

export interface ViewState {
  sessionId: string;
  n: number;
  edges: ViewEdge[];
  rows: ViewRow[];
  word: number[];
  admissible: boolean;
}

function edgeKey(a: number, b: number): string {
  return a < b ? `${a}-${b}` : `${b}-${a}`;
}

export function buildViewState(sessionId: string, state: ApiState): ViewState {
  const positives = new Set(state.positive_edges.map(([a, b]) => edgeKey(a, b)));
  const edges: ViewEdge[] = [];
  for (let v = 1; v <= state.n; v++) {
    for (let w = 1; w <= state.n; w++) {
      if (state.B[w - 1][v - 1] > 0) {
        edges.push({
          from: v,
          to: w,
          weight: Math.abs(state.B[v - 1][w - 1] * state.B[w - 1][v - 1]),
          positive: positives.has(edgeKey(v, w)),
        });
      }
    }
  }
  edges.sort((a, b) => a.from - b.from || a.to - b.to);
  const rows: ViewRow[] = state.c.map((coords, i) => ({
    vertex: i + 1,
    coords,
    sign: coords.some((x) => x < 0) ? -1 : 1,
  }));
  return {
    sessionId,
    n: state.n,
    edges,
    rows,
    word: [...state.word],
    admissible: state.admissible,
  };
}
