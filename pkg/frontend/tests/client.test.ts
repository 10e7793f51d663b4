import { describe, expect, it } from "vitest";
import { EditorClient, type Fetcher } from "../src/client.js";
import type { WireState } from "../src/wire.js";

const INITIAL: WireState = {
  zexp: { k: "cursor_e", e: { k: "empty_hole" } },
  text: ">|{}|<",
  typ: { k: "hole" },
  typ_text: "{}",
  enabled: [],
};

function jsonResponse(status: number, body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

function fakeServer(
  handler: (url: string, init?: RequestInit) => Response | Promise<Response>,
): Fetcher {
  return (input, init) => Promise.resolve(handler(String(input), init));
}

describe("session lifecycle", () => {
  it("creates a session and validates the reply", async () => {
    const client = new EditorClient(
      "http://x",
      fakeServer((url, init) => {
        expect(url).toBe("http://x/sessions");
        expect(init?.method).toBe("POST");
        return jsonResponse(201, { id: "s1", state: INITIAL });
      }),
    );
    const state = await client.createSession();
    expect(state.text).toBe(">|{}|<");
    expect(client.id).toBe("s1");
  });

  it("rejects malformed server replies", async () => {
    const client = new EditorClient(
      "http://x",
      fakeServer(() => jsonResponse(201, { id: "s1", state: { bogus: true } })),
    );
    await expect(client.createSession()).rejects.toThrow();
  });
});

describe("dispatch", () => {
  it("reports engine rejections without throwing", async () => {
    const client = new EditorClient(
      "http://x",
      fakeServer((url) =>
        url.endsWith("/actions")
          ? jsonResponse(409, { error: "AtRoot", action: { k: "move" } })
          : jsonResponse(201, { id: "s1", state: INITIAL }),
      ),
    );
    await client.createSession();
    const r = await client.dispatch({ k: "move", d: { k: "parent" } });
    expect(r).toEqual({
      ok: false,
      rejection: { error: "AtRoot", action: { k: "move" } },
    });
  });

  it("allows only one request in flight", async () => {
    let release!: () => void;
    const gate = new Promise<void>((res) => {
      release = res;
    });
    let actionCalls = 0;
    const client = new EditorClient(
      "http://x",
      fakeServer(async (url) => {
        if (url.endsWith("/actions")) {
          actionCalls += 1;
          await gate;
          return jsonResponse(200, INITIAL);
        }
        return jsonResponse(201, { id: "s1", state: INITIAL });
      }),
    );
    await client.createSession();
    const first = client.dispatch({ k: "del" });
    expect(client.busy).toBe(true);
    // both overlapping calls are dropped, not queued
    expect(await client.dispatch({ k: "del" })).toBeNull();
    expect(await client.undo()).toBeNull();
    release();
    const r = await first;
    expect(r?.ok).toBe(true);
    expect(actionCalls).toBe(1);
    expect(client.busy).toBe(false);
  });

  it("requires a session", async () => {
    const client = new EditorClient("http://x", fakeServer(() => jsonResponse(500, {})));
    await expect(client.dispatch({ k: "del" })).rejects.toThrow("no session");
  });
});
