import {
  ApiError,
  Client,
  DivisorJson,
  InitSpec,
  LegalMoves,
  Move,
  SessionState,
  Splitting,
} from "./types.js";

async function request<T>(url: string, init?: RequestInit): Promise<T> {
  const res = await fetch(url, {
    headers: { "content-type": "application/json" },
    ...init,
  });
  if (!res.ok) {
    let detail = res.statusText;
    try {
      detail = (await res.json()).detail ?? detail;
    } catch {
      /* non-JSON error body */
    }
    throw new ApiError(res.status, detail);
  }
  return (await res.json()) as T;
}

/** HTTP client for the session service. */
export class HttpClient implements Client {
  constructor(readonly base: string = "") {}

  createSession(n: number, init: InitSpec): Promise<SessionState> {
    return request(`${this.base}/session`, {
      method: "POST",
      body: JSON.stringify({ n, init }),
    });
  }

  getSession(id: string): Promise<SessionState> {
    return request(`${this.base}/session/${id}`);
  }

  move(id: string, op: Move["op"], vertex: number): Promise<SessionState> {
    return request(`${this.base}/session/${id}/${op}`, {
      method: "POST",
      body: JSON.stringify({ vertex }),
    });
  }

  legalMoves(id: string): Promise<LegalMoves> {
    return request(`${this.base}/session/${id}/moves`);
  }

  divisor(id: string): Promise<DivisorJson> {
    return request(`${this.base}/session/${id}/divisor`);
  }

  splitting(id: string, k: number): Promise<Splitting> {
    return request(`${this.base}/session/${id}/splitting?k=${k}`);
  }
}
