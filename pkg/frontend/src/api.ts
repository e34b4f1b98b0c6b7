// Thin client for the mutation server. All indices on the wire are 1-based
// and every number displayed by the UI originates here; the client does no
// cluster-algebra math of its own.

export interface ApiState {
  n: number;
  B: number[][];
  c: number[][];
  A: number[][];
  positive_edges: number[][];
  admissible: boolean;
  word: number[];
  indexing: number;
}

export interface SessionHandle {
  id: string;
  state: ApiState;
}

export class ApiError extends Error {
  constructor(readonly status: number, detail: string) {
    super(detail);
  }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const resp = await fetch(url, init);
  if (!resp.ok) {
    let detail = resp.statusText;
    try {
      const body = await resp.json();
      if (typeof body.detail === "string") detail = body.detail;
    } catch {
      // non-JSON error body; keep the status text
    }
    throw new ApiError(resp.status, detail);
  }
  return (await resp.json()) as T;
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  createSession(matrix: unknown): Promise<SessionHandle> {
    return request(`${this.baseUrl}/sessions`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(matrix),
    });
  }

  getState(id: string): Promise<ApiState> {
    return request(`${this.baseUrl}/sessions/${id}`);
  }

  mutate(id: string, k: number): Promise<ApiState> {
    return request(`${this.baseUrl}/sessions/${id}/mutate`, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ k }),
    });
  }

  undo(id: string): Promise<ApiState> {
    return request(`${this.baseUrl}/sessions/${id}/undo`, { method: "POST" });
  }

  async dot(id: string): Promise<string> {
    const resp = await fetch(`${this.baseUrl}/sessions/${id}/dot`);
    if (!resp.ok) throw new ApiError(resp.status, resp.statusText);
    return resp.text();
  }
}
