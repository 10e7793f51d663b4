/**
 * End-to-end: spawn the real Python service and drive a full editing
 * session through EditorClient over HTTP.
 */
import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";
import { EditorClient } from "../src/client.js";
import { renderZExp, textOf } from "../src/render.js";
import type { Action, Shape } from "../src/wire.js";

const PORT = 8931;
const BASE = `http://127.0.0.1:${PORT}`;

let server: ChildProcess;

async function waitForServer(): Promise<void> {
  for (let i = 0; i < 100; i++) {
    try {
      const res = await fetch(`${BASE}/sessions/probe`);
      if (res.status === 404) return;
    } catch {
      // not accepting connections yet
    }
    await new Promise((r) => setTimeout(r, 100));
  }
  throw new Error("server did not come up");
}

beforeAll(async () => {
  server = spawn("hz", ["serve", "--port", String(PORT)], {
    stdio: "ignore",
  });
  await waitForServer();
}, 20_000);

afterAll(() => {
  server.kill();
});

const mv = (d: { k: "child"; n: number } | { k: "parent" }): Action => ({
  k: "move",
  d,
});
const con = (shape: Shape): Action => ({ k: "construct", shape });

// builds \x.x + 1 : num -> num from the initial empty hole
const SCRIPT: Action[] = [
  con({ k: "lam", x: "x" }),
  con({ k: "num" }),
  mv({ k: "parent" }),
  mv({ k: "child", n: 2 }),
  con({ k: "num" }),
  mv({ k: "parent" }),
  mv({ k: "parent" }),
  mv({ k: "child", n: 1 }),
  mv({ k: "child", n: 1 }),
  con({ k: "var", x: "x" }),
  con({ k: "plus" }),
  con({ k: "lit", n: 1 }),
];

const EXPECTED_TEXTS = [
  "\\x.{} : >|{}|< -> {}",
  "\\x.{} : >|num|< -> {}",
  "\\x.{} : >|num -> {}|<",
  "\\x.{} : num -> >|{}|<",
  "\\x.{} : num -> >|num|<",
  "\\x.{} : >|num -> num|<",
  ">|\\x.{} : num -> num|<",
  ">|\\x.{}|< : num -> num",
  "\\x.>|{}|< : num -> num",
  "\\x.>|x|< : num -> num",
  "\\x.x + >|{}|< : num -> num",
  "\\x.x + >|1|< : num -> num",
];

describe("full editing session over HTTP", () => {
  it("replays the golden session and renders every state", async () => {
    const client = new EditorClient(BASE);
    const initial = await client.createSession();
    expect(initial.text).toBe(">|{}|<");
    expect(textOf(renderZExp(initial.zexp))).toBe(">|{}|<");

    for (let i = 0; i < SCRIPT.length; i++) {
      const r = await client.dispatch(SCRIPT[i]);
      expect(r).not.toBeNull();
      if (!r || !r.ok) throw new Error(`step ${i} rejected`);
      expect(r.state.text).toBe(EXPECTED_TEXTS[i]);
      // the client-side renderer agrees with the server's printer
      expect(textOf(renderZExp(r.state.zexp))).toBe(EXPECTED_TEXTS[i]);
    }
    const final = await client.getState();
    expect(final.typ_text).toBe("num -> num");
  });

  it("surfaces rejections and keeps state; undo steps back", async () => {
    const client = new EditorClient(BASE);
    await client.createSession();
    const bad = await client.dispatch(mv({ k: "parent" }));
    expect(bad).toEqual({
      ok: false,
      rejection: { error: "AtRoot", action: { k: "move", d: { k: "parent" } } },
    });
    expect((await client.getState()).text).toBe(">|{}|<");

    const step = await client.dispatch(con({ k: "lit", n: 5 }));
    if (!step || !step.ok) throw new Error("construct rejected");
    expect(step.state.text).toBe(">|5|<");
    const undone = await client.undo();
    if (!undone || !undone.ok) throw new Error("undo rejected");
    expect(undone.state.text).toBe(">|{}|<");
    const atInitial = await client.undo();
    expect(atInitial).toEqual({
      ok: false,
      rejection: { error: "AtInitialState", action: null },
    });
  });

  it("honours a session context", async () => {
    const client = new EditorClient(BASE);
    const state = await client.createSession({
      incr: { k: "arrow", dom: { k: "num" }, cod: { k: "num" } },
    });
    const palette = state.enabled.find((e) => e.text === "construct var incr");
    expect(palette?.enabled).toBe(true);
    const r = await client.dispatch(con({ k: "var", x: "incr" }));
    if (!r || !r.ok) throw new Error("var rejected");
    expect(r.state.typ_text).toBe("num -> num");
  });
});
