/**
 * HTTP client for the edit-session service.
 *
 * At most one request is in flight per client: `dispatch` and `undo`
 * return null immediately while an earlier request is pending, so a
 * burst of key presses cannot reorder edits on the server.
 */
import {
  RejectionSchema,
  SessionCreatedSchema,
  WireStateSchema,
  type Action,
  type Rejection,
  type Typ,
  type WireState,
} from "./wire.js";

export type Fetcher = typeof fetch;

export type DispatchResult =
  | { ok: true; state: WireState }
  | { ok: false; rejection: Rejection };

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
  }
}

export class EditorClient {
  private sessionId: string | null = null;
  private inFlight = false;
  private readonly fetcher: Fetcher;

  constructor(
    private readonly baseUrl: string,
    fetcher?: Fetcher,
  ) {
    this.fetcher = fetcher ?? fetch.bind(globalThis);
  }

  get busy(): boolean {
    return this.inFlight;
  }

  get id(): string | null {
    return this.sessionId;
  }

  private async request(
    path: string,
    init?: RequestInit,
  ): Promise<{ status: number; body: unknown }> {
    const res = await this.fetcher(`${this.baseUrl}${path}`, {
      headers: { "content-type": "application/json" },
      ...init,
    });
    const body = res.status === 204 ? null : await res.json();
    return { status: res.status, body };
  }

  /** Create a session; `ctx` maps free-variable names to type JSON. */
  async createSession(ctx?: Record<string, Typ>): Promise<WireState> {
    const { status, body } = await this.request("/sessions", {
      method: "POST",
      body: JSON.stringify(ctx ? { ctx } : {}),
    });
    if (status !== 201) throw new ApiError(status, "session creation failed");
    const created = SessionCreatedSchema.parse(body);
    this.sessionId = created.id;
    return created.state;
  }

  async getState(): Promise<WireState> {
    if (this.sessionId === null) throw new Error("no session");
    const { status, body } = await this.request(`/sessions/${this.sessionId}`);
    if (status !== 200) throw new ApiError(status, "state fetch failed");
    return WireStateSchema.parse(body);
  }

  /** Apply one action. Null means a request was already in flight. */
  async dispatch(action: Action): Promise<DispatchResult | null> {
    if (this.sessionId === null) throw new Error("no session");
    if (this.inFlight) return null;
    this.inFlight = true;
    try {
      const { status, body } = await this.request(
        `/sessions/${this.sessionId}/actions`,
        { method: "POST", body: JSON.stringify({ action }) },
      );
      if (status === 200) return { ok: true, state: WireStateSchema.parse(body) };
      if (status === 409) return { ok: false, rejection: RejectionSchema.parse(body) };
      throw new ApiError(status, "action dispatch failed");
    } finally {
      this.inFlight = false;
    }
  }

  /** Step back one action. Null while busy; ok:false at the initial state. */
  async undo(): Promise<DispatchResult | null> {
    if (this.sessionId === null) throw new Error("no session");
    if (this.inFlight) return null;
    this.inFlight = true;
    try {
      const { status, body } = await this.request(
        `/sessions/${this.sessionId}/undo`,
        { method: "POST" },
      );
      if (status === 200) return { ok: true, state: WireStateSchema.parse(body) };
      if (status === 409)
        return { ok: false, rejection: { error: "AtInitialState", action: null } };
      throw new ApiError(status, "undo failed");
    } finally {
      this.inFlight = false;
    }
  }
}
