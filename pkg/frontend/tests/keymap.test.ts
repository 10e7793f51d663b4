import { describe, expect, it } from "vitest";
import { keyToAction, type Asker } from "../src/keymap.js";

const noAsk: Asker = () => {
  throw new Error("should not prompt");
};

describe("movement keys", () => {
  it("maps arrows to cursor moves", () => {
    expect(keyToAction({ key: "ArrowUp" }, noAsk)).toEqual({
      k: "move",
      d: { k: "parent" },
    });
    expect(keyToAction({ key: "ArrowDown" }, noAsk)).toEqual({
      k: "move",
      d: { k: "child", n: 1 },
    });
    expect(keyToAction({ key: "ArrowRight" }, noAsk)).toEqual({
      k: "move",
      d: { k: "child", n: 2 },
    });
    expect(keyToAction({ key: "ArrowRight", altKey: true }, noAsk)).toEqual({
      k: "move",
      d: { k: "child", n: 3 },
    });
  });
});

describe("edit keys", () => {
  it("maps Enter and Backspace", () => {
    expect(keyToAction({ key: "Enter" }, noAsk)).toEqual({ k: "finish" });
    expect(keyToAction({ key: "Backspace" }, noAsk)).toEqual({ k: "del" });
    expect(keyToAction({ key: "Delete" }, noAsk)).toEqual({ k: "del" });
  });

  it("maps digits to literals and symbols to shapes", () => {
    expect(keyToAction({ key: "7" }, noAsk)).toEqual({
      k: "construct",
      shape: { k: "lit", n: 7 },
    });
    expect(keyToAction({ key: "+" }, noAsk)).toEqual({
      k: "construct",
      shape: { k: "plus" },
    });
    expect(keyToAction({ key: ">" }, noAsk)).toEqual({
      k: "construct",
      shape: { k: "arrow" },
    });
    expect(keyToAction({ key: "l" }, noAsk)).toEqual({
      k: "construct",
      shape: { k: "inj", side: "L" },
    });
  });

  it("prompts for names where a shape needs one", () => {
    expect(keyToAction({ key: "v" }, () => "incr")).toEqual({
      k: "construct",
      shape: { k: "var", x: "incr" },
    });
    expect(keyToAction({ key: "\\" }, () => "x")).toEqual({
      k: "construct",
      shape: { k: "lam", x: "x" },
    });
    const names = ["a", "b"];
    expect(keyToAction({ key: "c" }, () => names.shift() ?? null)).toEqual({
      k: "construct",
      shape: { k: "case", x: "a", y: "b" },
    });
  });

  it("returns null on cancelled prompts and unbound keys", () => {
    expect(keyToAction({ key: "v" }, () => null)).toBeNull();
    expect(keyToAction({ key: "q" }, noAsk)).toBeNull();
    expect(keyToAction({ key: "n", ctrlKey: true }, noAsk)).toBeNull();
  });
});
