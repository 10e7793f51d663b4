/**
 * Keyboard bindings: translate a key event into an edit action.
 *
 * Shapes that need a name (variables, lambdas, case binders) ask for it
 * through the injected `ask` callback, so the mapping itself stays pure
 * and testable. Returns null for keys we do not handle, so the event
 * should propagate normally.
 */
import type { Action, Direction, Shape } from "./wire.js";

export interface KeyStroke {
  key: string;
  altKey?: boolean;
  ctrlKey?: boolean;
  metaKey?: boolean;
}

export type Asker = (label: string) => string | null;

const move = (d: Direction): Action => ({ k: "move", d });

const construct = (shape: Shape): Action => ({ k: "construct", shape });

export function keyToAction(ev: KeyStroke, ask: Asker): Action | null {
  if (ev.ctrlKey || ev.metaKey) return null;
  switch (ev.key) {
    case "ArrowUp":
      return move({ k: "parent" });
    case "ArrowDown":
    case "ArrowLeft":
      return move({ k: "child", n: 1 });
    case "ArrowRight":
      return move({ k: "child", n: ev.altKey ? 3 : 2 });
    case "Enter":
      return { k: "finish" };
    case "Backspace":
    case "Delete":
      return { k: "del" };
  }
  if (ev.altKey) return null;
  if (/^[0-9]$/.test(ev.key)) {
    return construct({ k: "lit", n: Number(ev.key) });
  }
  switch (ev.key) {
    case "n":
      return construct({ k: "num" });
    case ">":
      return construct({ k: "arrow" });
    case "s":
      return construct({ k: "sum" });
    case ":":
      return construct({ k: "asc" });
    case "(":
      return construct({ k: "ap" });
    case "+":
      return construct({ k: "plus" });
    case "h":
      return construct({ k: "nehole" });
    case "l":
      return construct({ k: "inj", side: "L" });
    case "r":
      return construct({ k: "inj", side: "R" });
    case "v": {
      const x = ask("variable name");
      return x ? construct({ k: "var", x }) : null;
    }
    case "\\": {
      const x = ask("binder name");
      return x ? construct({ k: "lam", x }) : null;
    }
    case "c": {
      const x = ask("left binder");
      if (!x) return null;
      const y = ask("right binder");
      return y ? construct({ k: "case", x, y }) : null;
    }
  }
  return null;
}
