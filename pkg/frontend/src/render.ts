/**
 * Pure rendering of cursor-bearing trees.
 *
 * A ZExp is first split into its cursor-free erasure plus a 1-based
 * child path to the cursor, then printed with minimal parentheses. The
 * printer emits a list of pieces; the subtree under the cursor is
 * wrapped in a cursor piece, so the same walk yields both the plain
 * text form (`>|...|<` markers, identical to the server's `text` field)
 * and highlighted HTML.
 */
import type { Exp, Typ, ZExp, ZTyp } from "./wire.js";

export type Piece = string | { cursor: Piece[] };

export interface Erased<T> {
  node: T;
  path: number[];
}

export function eraseZTyp(zt: ZTyp): Erased<Typ> {
  switch (zt.k) {
    case "cursor_t":
      return { node: zt.t, path: [] };
    case "arrow_l": {
      const s = eraseZTyp(zt.z);
      return { node: { k: "arrow", dom: s.node, cod: zt.cod }, path: [1, ...s.path] };
    }
    case "arrow_r": {
      const s = eraseZTyp(zt.z);
      return { node: { k: "arrow", dom: zt.dom, cod: s.node }, path: [2, ...s.path] };
    }
    case "sum_l": {
      const s = eraseZTyp(zt.z);
      return { node: { k: "sum", left: s.node, right: zt.right }, path: [1, ...s.path] };
    }
    case "sum_r": {
      const s = eraseZTyp(zt.z);
      return { node: { k: "sum", left: zt.left, right: s.node }, path: [2, ...s.path] };
    }
  }
}

export function eraseZExp(z: ZExp): Erased<Exp> {
  switch (z.k) {
    case "cursor_e":
      return { node: z.e, path: [] };
    case "lam_z": {
      const s = eraseZExp(z.z);
      return { node: { k: "lam", x: z.x, body: s.node }, path: [1, ...s.path] };
    }
    case "ap_l": {
      const s = eraseZExp(z.z);
      return { node: { k: "ap", fun: s.node, arg: z.arg }, path: [1, ...s.path] };
    }
    case "ap_r": {
      const s = eraseZExp(z.z);
      return { node: { k: "ap", fun: z.fun, arg: s.node }, path: [2, ...s.path] };
    }
    case "plus_l": {
      const s = eraseZExp(z.z);
      return { node: { k: "plus", l: s.node, r: z.r }, path: [1, ...s.path] };
    }
    case "plus_r": {
      const s = eraseZExp(z.z);
      return { node: { k: "plus", l: z.l, r: s.node }, path: [2, ...s.path] };
    }
    case "asc_l": {
      const s = eraseZExp(z.z);
      return { node: { k: "asc", e: s.node, t: z.t }, path: [1, ...s.path] };
    }
    case "asc_r": {
      const s = eraseZTyp(z.zt);
      return { node: { k: "asc", e: z.e, t: s.node }, path: [2, ...s.path] };
    }
    case "nonempty_hole_z": {
      const s = eraseZExp(z.z);
      return { node: { k: "nonempty_hole", e: s.node }, path: [1, ...s.path] };
    }
    case "inj_z": {
      const s = eraseZExp(z.z);
      return { node: { k: "inj", side: z.side, e: s.node }, path: [1, ...s.path] };
    }
    case "case_scrut": {
      const s = eraseZExp(z.z);
      return {
        node: { k: "case", scrut: s.node, x: z.x, l: z.l, y: z.y, r: z.r },
        path: [1, ...s.path],
      };
    }
    case "case_l": {
      const s = eraseZExp(z.z);
      return {
        node: { k: "case", scrut: z.scrut, x: z.x, l: s.node, y: z.y, r: z.r },
        path: [2, ...s.path],
      };
    }
    case "case_r": {
      const s = eraseZExp(z.z);
      return {
        node: { k: "case", scrut: z.scrut, x: z.x, l: z.l, y: z.y, r: s.node },
        path: [3, ...s.path],
      };
    }
  }
}

// Precedence levels; a node parenthesizes itself when printed at a
// tighter level than its own.
const T_ARROW = 0;
const T_SUM = 1;
const T_ATOM = 2;
const E_ASC = 0;
const E_LAM = 1;
const E_PLUS = 2;
const E_APP = 3;

type Mark = number[] | null;

function at(mark: Mark, idx: number): Mark {
  return mark !== null && mark[0] === idx ? mark.slice(1) : null;
}

function wrap(pieces: Piece[], paren: boolean): Piece[] {
  return paren ? ["(", ...pieces, ")"] : pieces;
}

function pt(t: Typ, level: number, mark: Mark): Piece[] {
  if (mark !== null && mark.length === 0) {
    return [{ cursor: pt(t, T_ARROW, null) }];
  }
  switch (t.k) {
    case "num":
      return ["num"];
    case "hole":
      return ["{}"];
    case "arrow":
      return wrap(
        [...pt(t.dom, T_SUM, at(mark, 1)), " -> ", ...pt(t.cod, T_ARROW, at(mark, 2))],
        level > T_ARROW,
      );
    case "sum":
      return wrap(
        [...pt(t.left, T_ATOM, at(mark, 1)), " + ", ...pt(t.right, T_SUM, at(mark, 2))],
        level > T_SUM,
      );
  }
}

function pe(e: Exp, level: number, mark: Mark): Piece[] {
  if (mark !== null && mark.length === 0) {
    return [{ cursor: pe(e, E_ASC, null) }];
  }
  switch (e.k) {
    case "var":
      return [e.name];
    case "num_lit":
      return [String(e.n)];
    case "empty_hole":
      return ["{}"];
    case "nonempty_hole":
      return ["{ ", ...pe(e.e, E_ASC, at(mark, 1)), " }"];
    case "inj":
      return [e.side === "L" ? "inl(" : "inr(", ...pe(e.e, E_ASC, at(mark, 1)), ")"];
    case "case":
      return [
        "case(",
        ...pe(e.scrut, E_ASC, at(mark, 1)),
        "; ",
        `${e.x}.`,
        ...pe(e.l, E_ASC, at(mark, 2)),
        "; ",
        `${e.y}.`,
        ...pe(e.r, E_ASC, at(mark, 3)),
        ")",
      ];
    case "asc":
      return wrap(
        [...pe(e.e, E_LAM, at(mark, 1)), " : ", ...pt(e.t, T_ARROW, at(mark, 2))],
        level > E_ASC,
      );
    case "lam":
      return wrap([`\\${e.x}.`, ...pe(e.body, E_LAM, at(mark, 1))], level > E_LAM);
    case "plus":
      return wrap(
        [...pe(e.l, E_APP, at(mark, 1)), " + ", ...pe(e.r, E_PLUS, at(mark, 2))],
        level > E_PLUS,
      );
    case "ap":
      return wrap(
        [...pe(e.fun, E_APP, at(mark, 1)), "(", ...pe(e.arg, E_ASC, at(mark, 2)), ")"],
        level > E_APP,
      );
  }
}

export function renderZExp(z: ZExp): Piece[] {
  const { node, path } = eraseZExp(z);
  return pe(node, E_ASC, path);
}

export function renderTyp(t: Typ): Piece[] {
  return pt(t, T_ARROW, null);
}

/** Plain-text form; matches the server's `text` field exactly. */
export function textOf(pieces: Piece[]): string {
  return pieces
    .map((p) => (typeof p === "string" ? p : ">|" + textOf(p.cursor) + "|<"))
    .join("");
}

function escapeHtml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** HTML form; the subtree under the cursor gets a highlight span. */
export function htmlOf(pieces: Piece[]): string {
  return pieces
    .map((p) =>
      typeof p === "string"
        ? escapeHtml(p)
        : `<span class="cursor">${htmlOf(p.cursor)}</span>`,
    )
    .join("");
}
