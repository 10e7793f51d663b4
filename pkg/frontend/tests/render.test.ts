import { describe, expect, it } from "vitest";
import { eraseZExp, htmlOf, renderTyp, renderZExp, textOf } from "../src/render.js";
import { TypSchema, ZExpSchema, type ZExp } from "../src/wire.js";
import fixtures from "./fixtures/states.json";

interface Fixture {
  zexp: unknown;
  text: string;
  typ: unknown;
  typ_text: string;
}

const cases = fixtures as Fixture[];

describe("renderer against server-printed fixtures", () => {
  it("covers the golden sessions plus generated states", () => {
    expect(cases.length).toBeGreaterThan(100);
  });

  it("reproduces the server text for every fixture state", () => {
    for (const c of cases) {
      const z = ZExpSchema.parse(c.zexp);
      expect(textOf(renderZExp(z))).toBe(c.text);
      const t = TypSchema.parse(c.typ);
      expect(textOf(renderTyp(t))).toBe(c.typ_text);
    }
  });
});

describe("erasure", () => {
  it("computes the cursor path through an ascribed type", () => {
    const z: ZExp = {
      k: "asc_r",
      e: { k: "lam", x: "x", body: { k: "empty_hole" } },
      zt: { k: "arrow_l", z: { k: "cursor_t", t: { k: "num" } }, cod: { k: "hole" } },
    };
    const { node, path } = eraseZExp(z);
    expect(path).toEqual([2, 1]);
    expect(node.k).toBe("asc");
  });
});

describe("html output", () => {
  it("wraps the cursor in a span and escapes markup", () => {
    const z: ZExp = {
      k: "plus_r",
      l: { k: "num_lit", n: 1 },
      z: { k: "cursor_e", e: { k: "empty_hole" } },
    };
    expect(htmlOf(renderZExp(z))).toBe('1 + <span class="cursor">{}</span>');
    const t = renderTyp({ k: "arrow", dom: { k: "num" }, cod: { k: "num" } });
    expect(htmlOf(t)).toBe("num -&gt; num");
  });

  it("nests the highlight around a whole subtree", () => {
    const z: ZExp = {
      k: "cursor_e",
      e: {
        k: "ap",
        fun: { k: "var", name: "f" },
        arg: { k: "num_lit", n: 3 },
      },
    };
    expect(htmlOf(renderZExp(z))).toBe('<span class="cursor">f(3)</span>');
    expect(textOf(renderZExp(z))).toBe(">|f(3)|<");
  });
});
