"""Surface syntax: parser and printer for types, expressions, one-cursor
trees, contexts and action scripts, plus the canonical JSON tree encoding.

Grammar (ASCII only):
  types        num | {} | t -> t | t + t | ( t )     (+ binds tighter; both right-assoc)
  expressions  x | \\x.e | e1(e2) | numeral | e + e | e : t | {} | { e }
               | inl(e) | inr(e) | case(e; x.e1; y.e2) | ( e )
               (application tightest, then +, then : which is non-associative)
  cursor       >|t|< or >|e|< around exactly one subterm
  ctx files    one `x : t` per line
  scripts      one action per line; `#` starts a comment

Parse failures are ParseError values (1-based positions), not exceptions.
JSON uses a tagged-tree schema: every node is an object with a "k" kind
field and child fields by name; unknown kinds are rejected with the JSON
path of the offending node.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from .actions import (
    Action,
    ApShape,
    ArrowShape,
    AscShape,
    CaseShape,
    Child,
    Construct,
    Del,
    Finish,
    InjShape,
    LamShape,
    LitShape,
    Move,
    NEHoleShape,
    NumShape,
    Parent,
    PlusShape,
    Shape,
    SumShape,
    VarShape,
)
from .lang import (
    HOLE,
    MAX_NUMERAL,
    NUM,
    Ap,
    Arrow,
    Asc,
    Case,
    Ctx,
    EmptyHole,
    HExp,
    Hole,
    HTyp,
    Inj,
    Lam,
    NonEmptyHole,
    Num,
    NumLit,
    Plus,
    Sum,
    Var,
    is_var_name,
)
from .zipper import (
    CursorPath,
    ZExp,
    ZTyp,
    cursor_path,
    cursor_path_typ,
    erase_exp,
    erase_typ,
    place_cursor,
    place_cursor_typ,
)

# ---------------------------------------------------------------------------
# Errors

@dataclass(frozen=True, slots=True)
class ParseError:
    line: int  # 1-based
    col: int  # 1-based
    expected: Tuple[str, ...]
    found: str

    def __str__(self) -> str:
        exp = " or ".join(self.expected)
        return f"{self.line}:{self.col}: expected {exp}, found {self.found}"


class _Bail(Exception):
    def __init__(self, err: ParseError) -> None:
        self.err = err


@dataclass(frozen=True, slots=True)
class DecodeError:
    path: str  # JSON path, e.g. "$.fun.arg"
    message: str

    def __str__(self) -> str:
        return f"{self.path}: {self.message}"


class _JBail(Exception):
    def __init__(self, err: DecodeError) -> None:
        self.err = err


# ---------------------------------------------------------------------------
# Lexer

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+)
  | (?P<ident>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<punct>->|>\||\|<|[+:(){}\\.;])
    """,
    re.VERBOSE,
)


@dataclass(frozen=True, slots=True)
class _Tok:
    kind: str  # "num" | "ident" | punct literal | "eof"
    text: str
    line: int
    col: int


def _lex(text: str) -> Union[List[_Tok], ParseError]:
    toks: List[_Tok] = []
    line, col, i = 1, 1, 0
    while i < len(text):
        m = _TOKEN_RE.match(text, i)
        if m is None:
            return ParseError(line, col, ("a token",), repr(text[i]))
        lexeme = m.group(0)
        if m.lastgroup == "num":
            toks.append(_Tok("num", lexeme, line, col))
        elif m.lastgroup == "ident":
            toks.append(_Tok("ident", lexeme, line, col))
        elif m.lastgroup == "punct":
            toks.append(_Tok(lexeme, lexeme, line, col))
        nl = lexeme.count("\n")
        if nl:
            line += nl
            col = len(lexeme) - lexeme.rfind("\n")
        else:
            col += len(lexeme)
        i = m.end()
    toks.append(_Tok("eof", "<end of input>", line, col))
    return toks


class _P:
    """Recursive-descent parser over the token stream. Cursor markers are
    collected as relative paths so the same productions serve plain terms
    and one-cursor terms."""

    def __init__(self, toks: List[_Tok]) -> None:
        self.toks = toks
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, *expected: str) -> "_Bail":
        t = self.peek()
        found = t.text if t.kind != "eof" else "<end of input>"
        return _Bail(ParseError(t.line, t.col, expected, found))

    def expect(self, kind: str, what: Optional[str] = None) -> _Tok:
        if self.peek().kind != kind:
            raise self.fail(what or f"'{kind}'")
        return self.next()

    def at_eof(self) -> None:
        if self.peek().kind != "eof":
            raise self.fail("end of input")

    # -- types --------------------------------------------------------------

    def typ(self) -> Tuple[HTyp, List[CursorPath]]:
        # arrow level, right-associative
        left, lp = self.typ_sum()
        if self.peek().kind == "->":
            self.next()
            right, rp = self.typ()
            return (
                Arrow(left, right),
                [(1,) + p for p in lp] + [(2,) + p for p in rp],
            )
        return left, lp

    def typ_sum(self) -> Tuple[HTyp, List[CursorPath]]:
        left, lp = self.typ_atom()
        if self.peek().kind == "+":
            self.next()
            right, rp = self.typ_sum()
            return (
                Sum(left, right),
                [(1,) + p for p in lp] + [(2,) + p for p in rp],
            )
        return left, lp

    def typ_atom(self) -> Tuple[HTyp, List[CursorPath]]:
        t = self.peek()
        if t.kind == "ident" and t.text == "num":
            self.next()
            return NUM, []
        if t.kind == "{":
            self.next()
            self.expect("}")
            return HOLE, []
        if t.kind == "(":
            self.next()
            inner = self.typ()
            self.expect(")")
            return inner
        if t.kind == ">|":
            self.next()
            node, paths = self.typ()
            self.expect("|<")
            return node, [()] + paths
        raise self.fail("a type")

    # -- expressions --------------------------------------------------------

    def exp(self) -> Tuple[HExp, List[CursorPath]]:
        # ascription level: non-associative
        e, ep = self.exp_lam()
        if self.peek().kind == ":":
            self.next()
            t, tp = self.typ()
            return (
                Asc(e, t),
                [(1,) + p for p in ep] + [(2,) + p for p in tp],
            )
        return e, ep

    def exp_lam(self) -> Tuple[HExp, List[CursorPath]]:
        if self.peek().kind == "\\":
            self.next()
            x = self.binder()
            self.expect(".")
            body, bp = self.exp_lam()
            return Lam(x, body), [(1,) + p for p in bp]
        return self.exp_plus()

    def exp_plus(self) -> Tuple[HExp, List[CursorPath]]:
        left, lp = self.exp_app()
        if self.peek().kind == "+":
            self.next()
            right, rp = self.exp_plus()
            return (
                Plus(left, right),
                [(1,) + p for p in lp] + [(2,) + p for p in rp],
            )
        return left, lp

    def exp_app(self) -> Tuple[HExp, List[CursorPath]]:
        e, ep = self.exp_atom()
        while self.peek().kind == "(":
            self.next()
            arg, ap = self.exp()
            self.expect(")")
            e, ep = Ap(e, arg), [(1,) + p for p in ep] + [(2,) + p for p in ap]
        return e, ep

    def exp_atom(self) -> Tuple[HExp, List[CursorPath]]:
        t = self.peek()
        if t.kind == "num":
            self.next()
            n = int(t.text)
            if n > MAX_NUMERAL:
                raise _Bail(
                    ParseError(t.line, t.col, ("a numeral in range",), t.text)
                )
            return NumLit(n), []
        if t.kind == "ident":
            if t.text in ("inl", "inr"):
                self.next()
                self.expect("(")
                inner, ip = self.exp()
                self.expect(")")
                side = "L" if t.text == "inl" else "R"
                return Inj(side, inner), [(1,) + p for p in ip]
            if t.text == "case":
                return self.exp_case()
            if not is_var_name(t.text):
                raise self.fail("an expression")
            self.next()
            return Var(t.text), []
        if t.kind == "{":
            self.next()
            if self.peek().kind == "}":
                self.next()
                return EmptyHole(), []
            inner, ip = self.exp()
            self.expect("}")
            return NonEmptyHole(inner), [(1,) + p for p in ip]
        if t.kind == "(":
            self.next()
            inner = self.exp()
            self.expect(")")
            return inner
        if t.kind == ">|":
            self.next()
            node, paths = self.exp()
            self.expect("|<")
            return node, [()] + paths
        raise self.fail("an expression")

    def exp_case(self) -> Tuple[HExp, List[CursorPath]]:
        self.next()  # 'case'
        self.expect("(")
        scrut, sp = self.exp()
        self.expect(";")
        x = self.binder()
        self.expect(".")
        l, lp = self.exp()
        self.expect(";")
        y = self.binder()
        self.expect(".")
        r, rp = self.exp()
        self.expect(")")
        paths = (
            [(1,) + p for p in sp]
            + [(2,) + p for p in lp]
            + [(3,) + p for p in rp]
        )
        return Case(scrut, x, l, y, r), paths

    def binder(self) -> str:
        t = self.peek()
        if t.kind != "ident" or not is_var_name(t.text):
            raise self.fail("a variable name")
        self.next()
        return t.text


def _parse(text: str, production: str):
    toks = _lex(text)
    if isinstance(toks, ParseError):
        return toks
    p = _P(toks)
    try:
        result = getattr(p, production)()
        p.at_eof()
    except _Bail as b:
        return b.err
    return result


def parse_htyp(text: str) -> Union[HTyp, ParseError]:
    r = _parse(text, "typ")
    if isinstance(r, ParseError):
        return r
    t, paths = r
    if paths:
        return ParseError(1, 1, ("a cursor-free type",), ">|")
    return t


def parse_hexp(text: str) -> Union[HExp, ParseError]:
    r = _parse(text, "exp")
    if isinstance(r, ParseError):
        return r
    e, paths = r
    if paths:
        return ParseError(1, 1, ("a cursor-free expression",), ">|")
    return e


def parse_zexp(text: str) -> Union[ZExp, ParseError]:
    r = _parse(text, "exp")
    if isinstance(r, ParseError):
        return r
    e, paths = r
    if len(paths) != 1:
        return ParseError(
            1, 1, ("exactly one cursor",), f"{len(paths)} cursors"
        )
    z = place_cursor(e, paths[0])
    assert z is not None  # the path came from the same parse
    return z


def parse_ztyp(text: str) -> Union[ZTyp, ParseError]:
    r = _parse(text, "typ")
    if isinstance(r, ParseError):
        return r
    t, paths = r
    if len(paths) != 1:
        return ParseError(
            1, 1, ("exactly one cursor",), f"{len(paths)} cursors"
        )
    zt = place_cursor_typ(t, paths[0])
    assert zt is not None
    return zt


def parse_ctx(text: str) -> Union[Ctx, ParseError]:
    """Context files: one `x : t` binding per line; blank lines and `#`
    comments allowed."""
    ctx: Dict[str, HTyp] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, rhs = line.partition(":")
        name = name.strip()
        if not sep or not is_var_name(name):
            return ParseError(lineno, 1, ("a `name : type` binding",), raw.strip())
        t = parse_htyp(rhs.strip())
        if isinstance(t, ParseError):
            return ParseError(lineno, t.col, t.expected, t.found)
        ctx[name] = t
    return ctx


# ---------------------------------------------------------------------------
# Action scripts

_SHAPE_WORDS = {
    "arrow": ArrowShape(),
    "num": NumShape(),
    "sum": SumShape(),
    "asc": AscShape(),
    "ap": ApShape(),
    "plus": PlusShape(),
    "nehole": NEHoleShape(),
    "inl": InjShape("L"),
    "inr": InjShape("R"),
}


def parse_script(text: str) -> Union[List[Action], ParseError]:
    """One action per line: move child 1|2|3, move parent, del, finish,
    construct <shape>. `#` starts a comment."""
    actions: List[Action] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()

        def err(*expected: str) -> ParseError:
            return ParseError(lineno, 1, expected, line)

        head = words[0]
        if head == "del" and len(words) == 1:
            actions.append(Del())
        elif head == "finish" and len(words) == 1:
            actions.append(Finish())
        elif head == "move":
            if words[1:] == ["parent"]:
                actions.append(Move(Parent()))
            elif len(words) == 3 and words[1] == "child" and words[2] in "123":
                actions.append(Move(Child(int(words[2]))))
            else:
                return err("move child 1|2|3", "move parent")
        elif head == "construct" and len(words) >= 2:
            kind = words[1]
            args = words[2:]
            if kind in _SHAPE_WORDS and not args:
                actions.append(Construct(_SHAPE_WORDS[kind]))
            elif kind == "var" and len(args) == 1 and is_var_name(args[0]):
                actions.append(Construct(VarShape(args[0])))
            elif kind == "lam" and len(args) == 1 and is_var_name(args[0]):
                actions.append(Construct(LamShape(args[0])))
            elif kind == "lit" and len(args) == 1 and args[0].isdigit():
                n = int(args[0])
                if n > MAX_NUMERAL:
                    return err("a numeral in range")
                actions.append(Construct(LitShape(n)))
            elif (
                kind == "case"
                and len(args) == 2
                and all(is_var_name(a) for a in args)
            ):
                actions.append(Construct(CaseShape(args[0], args[1])))
            else:
                return err("a construct form")
        else:
            return err("an action")
    return actions


def print_action(a: Action) -> str:
    if isinstance(a, Move):
        return "move parent" if isinstance(a.d, Parent) else f"move child {a.d.n}"
    if isinstance(a, Del):
        return "del"
    if isinstance(a, Finish):
        return "finish"
    s = a.s
    if isinstance(s, ArrowShape):
        return "construct arrow"
    if isinstance(s, NumShape):
        return "construct num"
    if isinstance(s, SumShape):
        return "construct sum"
    if isinstance(s, AscShape):
        return "construct asc"
    if isinstance(s, ApShape):
        return "construct ap"
    if isinstance(s, PlusShape):
        return "construct plus"
    if isinstance(s, NEHoleShape):
        return "construct nehole"
    if isinstance(s, InjShape):
        return "construct inl" if s.side == "L" else "construct inr"
    if isinstance(s, VarShape):
        return f"construct var {s.x}"
    if isinstance(s, LamShape):
        return f"construct lam {s.x}"
    if isinstance(s, LitShape):
        return f"construct lit {s.n}"
    return f"construct case {s.x} {s.y}"


def print_script(actions: Sequence[Action]) -> str:
    return "".join(print_action(a) + "\n" for a in actions)


# ---------------------------------------------------------------------------
# Printers (minimal parenthesization; optional cursor mark path)

_T_ARROW, _T_SUM, _T_ATOM = 0, 1, 2
_E_ASC, _E_LAM, _E_PLUS, _E_APP, _E_ATOM = 0, 1, 2, 3, 4

_NO_MARK: object = object()


def _pt(t: HTyp, level: int, mark) -> str:
    if mark == ():
        return ">|" + _pt(t, _T_ARROW, _NO_MARK) + "|<"

    def sub(child: HTyp, lvl: int, idx: int) -> str:
        m = mark[1:] if mark is not _NO_MARK and mark[0] == idx else _NO_MARK
        return _pt(child, lvl, m)

    if isinstance(t, Num):
        return "num"
    if isinstance(t, Hole):
        return "{}"
    if isinstance(t, Arrow):
        s = sub(t.dom, _T_SUM, 1) + " -> " + sub(t.cod, _T_ARROW, 2)
        return "(" + s + ")" if level > _T_ARROW else s
    s = sub(t.left, _T_ATOM, 1) + " + " + sub(t.right, _T_SUM, 2)
    return "(" + s + ")" if level > _T_SUM else s


def print_htyp(t: HTyp) -> str:
    return _pt(t, _T_ARROW, _NO_MARK)


def print_ztyp(zt: ZTyp) -> str:
    return _pt(erase_typ(zt), _T_ARROW, cursor_path_typ(zt))


def _pe(e: HExp, level: int, mark) -> str:
    if mark == ():
        return ">|" + _pe(e, _E_ASC, _NO_MARK) + "|<"

    def sub(child: HExp, lvl: int, idx: int) -> str:
        m = mark[1:] if mark is not _NO_MARK and mark[0] == idx else _NO_MARK
        return _pe(child, lvl, m)

    if isinstance(e, Var):
        return e.name
    if isinstance(e, NumLit):
        return str(e.n)
    if isinstance(e, EmptyHole):
        return "{}"
    if isinstance(e, NonEmptyHole):
        return "{ " + sub(e.e, _E_ASC, 1) + " }"
    if isinstance(e, Inj):
        kw = "inl" if e.side == "L" else "inr"
        return kw + "(" + sub(e.e, _E_ASC, 1) + ")"
    if isinstance(e, Case):
        return (
            "case("
            + sub(e.scrut, _E_ASC, 1)
            + "; "
            + e.x
            + "."
            + sub(e.l, _E_ASC, 2)
            + "; "
            + e.y
            + "."
            + sub(e.r, _E_ASC, 3)
            + ")"
        )
    if isinstance(e, Asc):
        tm = mark[1:] if mark is not _NO_MARK and mark[0] == 2 else _NO_MARK
        s = sub(e.e, _E_LAM, 1) + " : " + _pt(e.t, _T_ARROW, tm)
        return "(" + s + ")" if level > _E_ASC else s
    if isinstance(e, Lam):
        s = "\\" + e.x + "." + sub(e.body, _E_LAM, 1)
        return "(" + s + ")" if level > _E_LAM else s
    if isinstance(e, Plus):
        s = sub(e.l, _E_APP, 1) + " + " + sub(e.r, _E_PLUS, 2)
        return "(" + s + ")" if level > _E_PLUS else s
    # Ap
    s = sub(e.fun, _E_APP, 1) + "(" + sub(e.arg, _E_ASC, 2) + ")"
    return "(" + s + ")" if level > _E_APP else s


def print_hexp(e: HExp) -> str:
    return _pe(e, _E_ASC, _NO_MARK)


def print_zexp(z: ZExp) -> str:
    return _pe(erase_exp(z), _E_ASC, cursor_path(z))


# ---------------------------------------------------------------------------
# JSON encoding

def to_json(v: Any) -> Any:
    """Tagged-tree encoding; kinds are constructor names in lower snake
    case. Works on types, expressions, one-cursor trees, actions and fuzz
    reports."""
    # types
    if isinstance(v, Num):
        return {"k": "num"}
    if isinstance(v, Hole):
        return {"k": "hole"}
    if isinstance(v, Arrow):
        return {"k": "arrow", "dom": to_json(v.dom), "cod": to_json(v.cod)}
    if isinstance(v, Sum):
        return {"k": "sum", "left": to_json(v.left), "right": to_json(v.right)}
    # expressions
    if isinstance(v, Var):
        return {"k": "var", "name": v.name}
    if isinstance(v, Lam):
        return {"k": "lam", "x": v.x, "body": to_json(v.body)}
    if isinstance(v, Ap):
        return {"k": "ap", "fun": to_json(v.fun), "arg": to_json(v.arg)}
    if isinstance(v, NumLit):
        return {"k": "num_lit", "n": v.n}
    if isinstance(v, Plus):
        return {"k": "plus", "l": to_json(v.l), "r": to_json(v.r)}
    if isinstance(v, Asc):
        return {"k": "asc", "e": to_json(v.e), "t": to_json(v.t)}
    if isinstance(v, EmptyHole):
        return {"k": "empty_hole"}
    if isinstance(v, NonEmptyHole):
        return {"k": "nonempty_hole", "e": to_json(v.e)}
    if isinstance(v, Inj):
        return {"k": "inj", "side": v.side, "e": to_json(v.e)}
    if isinstance(v, Case):
        return {
            "k": "case",
            "scrut": to_json(v.scrut),
            "x": v.x,
            "l": to_json(v.l),
            "y": v.y,
            "r": to_json(v.r),
        }
    # one-cursor trees: one kind per constructor
    from . import zipper as _z

    if isinstance(v, _z.CursorT):
        return {"k": "cursor_t", "t": to_json(v.t)}
    if isinstance(v, _z.ArrowL):
        return {"k": "arrow_l", "z": to_json(v.z), "cod": to_json(v.cod)}
    if isinstance(v, _z.ArrowR):
        return {"k": "arrow_r", "dom": to_json(v.dom), "z": to_json(v.z)}
    if isinstance(v, _z.SumL):
        return {"k": "sum_l", "z": to_json(v.z), "right": to_json(v.right)}
    if isinstance(v, _z.SumR):
        return {"k": "sum_r", "left": to_json(v.left), "z": to_json(v.z)}
    if isinstance(v, _z.CursorE):
        return {"k": "cursor_e", "e": to_json(v.e)}
    if isinstance(v, _z.LamZ):
        return {"k": "lam_z", "x": v.x, "z": to_json(v.z)}
    if isinstance(v, _z.ApL):
        return {"k": "ap_l", "z": to_json(v.z), "arg": to_json(v.arg)}
    if isinstance(v, _z.ApR):
        return {"k": "ap_r", "fun": to_json(v.fun), "z": to_json(v.z)}
    if isinstance(v, _z.PlusL):
        return {"k": "plus_l", "z": to_json(v.z), "r": to_json(v.r)}
    if isinstance(v, _z.PlusR):
        return {"k": "plus_r", "l": to_json(v.l), "z": to_json(v.z)}
    if isinstance(v, _z.AscL):
        return {"k": "asc_l", "z": to_json(v.z), "t": to_json(v.t)}
    if isinstance(v, _z.AscR):
        return {"k": "asc_r", "e": to_json(v.e), "zt": to_json(v.zt)}
    if isinstance(v, _z.NonEmptyHoleZ):
        return {"k": "nonempty_hole_z", "z": to_json(v.z)}
    if isinstance(v, _z.InjZ):
        return {"k": "inj_z", "side": v.side, "z": to_json(v.z)}
    if isinstance(v, _z.CaseScrut):
        return {
            "k": "case_scrut",
            "z": to_json(v.z),
            "x": v.x,
            "l": to_json(v.l),
            "y": v.y,
            "r": to_json(v.r),
        }
    if isinstance(v, _z.CaseL):
        return {
            "k": "case_l",
            "scrut": to_json(v.scrut),
            "x": v.x,
            "z": to_json(v.z),
            "y": v.y,
            "r": to_json(v.r),
        }
    if isinstance(v, _z.CaseR):
        return {
            "k": "case_r",
            "scrut": to_json(v.scrut),
            "x": v.x,
            "l": to_json(v.l),
            "y": v.y,
            "z": to_json(v.z),
        }
    # actions
    if isinstance(v, Move):
        d = (
            {"k": "parent"}
            if isinstance(v.d, Parent)
            else {"k": "child", "n": v.d.n}
        )
        return {"k": "move", "d": d}
    if isinstance(v, Del):
        return {"k": "del"}
    if isinstance(v, Finish):
        return {"k": "finish"}
    if isinstance(v, Construct):
        return {"k": "construct", "shape": _shape_to_json(v.s)}
    # fuzz reports
    from .metatheory import FuzzReport

    if isinstance(v, FuzzReport):
        return {
            "k": "fuzz_report",
            "kind": v.kind,
            "seed": v.seed,
            "cases_run": v.cases_run,
            "failures": list(v.failures),
        }
    raise TypeError(f"no JSON encoding for {type(v).__name__}")


def _shape_to_json(s: Shape) -> Any:
    if isinstance(s, ArrowShape):
        return {"k": "arrow"}
    if isinstance(s, NumShape):
        return {"k": "num"}
    if isinstance(s, SumShape):
        return {"k": "sum"}
    if isinstance(s, AscShape):
        return {"k": "asc"}
    if isinstance(s, ApShape):
        return {"k": "ap"}
    if isinstance(s, PlusShape):
        return {"k": "plus"}
    if isinstance(s, NEHoleShape):
        return {"k": "nehole"}
    if isinstance(s, VarShape):
        return {"k": "var", "x": s.x}
    if isinstance(s, LamShape):
        return {"k": "lam", "x": s.x}
    if isinstance(s, LitShape):
        return {"k": "lit", "n": s.n}
    if isinstance(s, InjShape):
        return {"k": "inj", "side": s.side}
    return {"k": "case", "x": s.x, "y": s.y}


def _want(j: Any, path: str) -> Dict[str, Any]:
    if not isinstance(j, dict) or "k" not in j:
        raise _JBail(DecodeError(path, "expected an object with a 'k' field"))
    return j


def _field(j: Dict[str, Any], name: str, path: str) -> Any:
    if name not in j:
        raise _JBail(DecodeError(path, f"missing field '{name}'"))
    return j[name]


def _str_field(j: Dict[str, Any], name: str, path: str) -> str:
    v = _field(j, name, path)
    if not isinstance(v, str):
        raise _JBail(DecodeError(f"{path}.{name}", "expected a string"))
    return v


def _int_field(j: Dict[str, Any], name: str, path: str) -> int:
    v = _field(j, name, path)
    if not isinstance(v, int) or isinstance(v, bool):
        raise _JBail(DecodeError(f"{path}.{name}", "expected an integer"))
    return v


def _typ_from(j: Any, path: str) -> HTyp:
    o = _want(j, path)
    k = o["k"]
    if k == "num":
        return NUM
    if k == "hole":
        return HOLE
    if k == "arrow":
        return Arrow(
            _typ_from(_field(o, "dom", path), f"{path}.dom"),
            _typ_from(_field(o, "cod", path), f"{path}.cod"),
        )
    if k == "sum":
        return Sum(
            _typ_from(_field(o, "left", path), f"{path}.left"),
            _typ_from(_field(o, "right", path), f"{path}.right"),
        )
    raise _JBail(DecodeError(path, f"unknown type kind {k!r}"))


def _exp_from(j: Any, path: str) -> HExp:
    o = _want(j, path)
    k = o["k"]
    if k == "var":
        name = _str_field(o, "name", path)
        if not is_var_name(name):
            raise _JBail(DecodeError(f"{path}.name", f"bad variable name {name!r}"))
        return Var(name)
    if k == "lam":
        return Lam(
            _str_field(o, "x", path),
            _exp_from(_field(o, "body", path), f"{path}.body"),
        )
    if k == "ap":
        return Ap(
            _exp_from(_field(o, "fun", path), f"{path}.fun"),
            _exp_from(_field(o, "arg", path), f"{path}.arg"),
        )
    if k == "num_lit":
        n = _int_field(o, "n", path)
        if not 0 <= n <= MAX_NUMERAL:
            raise _JBail(DecodeError(f"{path}.n", "numeral out of range"))
        return NumLit(n)
    if k == "plus":
        return Plus(
            _exp_from(_field(o, "l", path), f"{path}.l"),
            _exp_from(_field(o, "r", path), f"{path}.r"),
        )
    if k == "asc":
        return Asc(
            _exp_from(_field(o, "e", path), f"{path}.e"),
            _typ_from(_field(o, "t", path), f"{path}.t"),
        )
    if k == "empty_hole":
        return EmptyHole()
    if k == "nonempty_hole":
        return NonEmptyHole(_exp_from(_field(o, "e", path), f"{path}.e"))
    if k == "inj":
        side = _str_field(o, "side", path)
        if side not in ("L", "R"):
            raise _JBail(DecodeError(f"{path}.side", "expected 'L' or 'R'"))
        return Inj(side, _exp_from(_field(o, "e", path), f"{path}.e"))
    if k == "case":
        return Case(
            _exp_from(_field(o, "scrut", path), f"{path}.scrut"),
            _str_field(o, "x", path),
            _exp_from(_field(o, "l", path), f"{path}.l"),
            _str_field(o, "y", path),
            _exp_from(_field(o, "r", path), f"{path}.r"),
        )
    raise _JBail(DecodeError(path, f"unknown expression kind {k!r}"))


def _shape_from(j: Any, path: str) -> Shape:
    o = _want(j, path)
    k = o["k"]
    simple = {
        "arrow": ArrowShape,
        "num": NumShape,
        "sum": SumShape,
        "asc": AscShape,
        "ap": ApShape,
        "plus": PlusShape,
        "nehole": NEHoleShape,
    }
    if k in simple:
        return simple[k]()
    if k == "var":
        return VarShape(_str_field(o, "x", path))
    if k == "lam":
        return LamShape(_str_field(o, "x", path))
    if k == "lit":
        n = _int_field(o, "n", path)
        if not 0 <= n <= MAX_NUMERAL:
            raise _JBail(DecodeError(f"{path}.n", "numeral out of range"))
        return LitShape(n)
    if k == "inj":
        side = _str_field(o, "side", path)
        if side not in ("L", "R"):
            raise _JBail(DecodeError(f"{path}.side", "expected 'L' or 'R'"))
        return InjShape(side)
    if k == "case":
        return CaseShape(_str_field(o, "x", path), _str_field(o, "y", path))
    raise _JBail(DecodeError(path, f"unknown shape kind {k!r}"))


def _action_from(j: Any, path: str) -> Action:
    o = _want(j, path)
    k = o["k"]
    if k == "move":
        d = _want(_field(o, "d", path), f"{path}.d")
        if d["k"] == "parent":
            return Move(Parent())
        if d["k"] == "child":
            n = _int_field(d, "n", f"{path}.d")
            if n not in (1, 2, 3):
                raise _JBail(DecodeError(f"{path}.d.n", "expected 1, 2 or 3"))
            return Move(Child(n))
        raise _JBail(DecodeError(f"{path}.d", f"unknown direction kind {d['k']!r}"))
    if k == "del":
        return Del()
    if k == "finish":
        return Finish()
    if k == "construct":
        return Construct(_shape_from(_field(o, "shape", path), f"{path}.shape"))
    raise _JBail(DecodeError(path, f"unknown action kind {k!r}"))


_ZEXP_KINDS = frozenset(
    {
        "cursor_e",
        "lam_z",
        "ap_l",
        "ap_r",
        "plus_l",
        "plus_r",
        "asc_l",
        "asc_r",
        "nonempty_hole_z",
        "inj_z",
        "case_scrut",
        "case_l",
        "case_r",
    }
)

_ZTYP_KINDS = frozenset({"cursor_t", "arrow_l", "arrow_r", "sum_l", "sum_r"})


def _ztyp_from(j: Any, path: str) -> ZTyp:
    from . import zipper as _z

    o = _want(j, path)
    k = o["k"]
    if k == "cursor_t":
        return _z.CursorT(_typ_from(_field(o, "t", path), f"{path}.t"))
    if k == "arrow_l":
        return _z.ArrowL(
            _ztyp_from(_field(o, "z", path), f"{path}.z"),
            _typ_from(_field(o, "cod", path), f"{path}.cod"),
        )
    if k == "arrow_r":
        return _z.ArrowR(
            _typ_from(_field(o, "dom", path), f"{path}.dom"),
            _ztyp_from(_field(o, "z", path), f"{path}.z"),
        )
    if k == "sum_l":
        return _z.SumL(
            _ztyp_from(_field(o, "z", path), f"{path}.z"),
            _typ_from(_field(o, "right", path), f"{path}.right"),
        )
    if k == "sum_r":
        return _z.SumR(
            _typ_from(_field(o, "left", path), f"{path}.left"),
            _ztyp_from(_field(o, "z", path), f"{path}.z"),
        )
    raise _JBail(DecodeError(path, f"unknown cursor-type kind {k!r}"))


def _zexp_from(j: Any, path: str) -> ZExp:
    from . import zipper as _z

    o = _want(j, path)
    k = o["k"]

    def z(field: str = "z") -> ZExp:
        return _zexp_from(_field(o, field, path), f"{path}.{field}")

    def e(field: str) -> HExp:
        return _exp_from(_field(o, field, path), f"{path}.{field}")

    if k == "cursor_e":
        return _z.CursorE(e("e"))
    if k == "lam_z":
        return _z.LamZ(_str_field(o, "x", path), z())
    if k == "ap_l":
        return _z.ApL(z(), e("arg"))
    if k == "ap_r":
        return _z.ApR(e("fun"), z())
    if k == "plus_l":
        return _z.PlusL(z(), e("r"))
    if k == "plus_r":
        return _z.PlusR(e("l"), z())
    if k == "asc_l":
        return _z.AscL(z(), _typ_from(_field(o, "t", path), f"{path}.t"))
    if k == "asc_r":
        return _z.AscR(e("e"), _ztyp_from(_field(o, "zt", path), f"{path}.zt"))
    if k == "nonempty_hole_z":
        return _z.NonEmptyHoleZ(z())
    if k == "inj_z":
        side = _str_field(o, "side", path)
        if side not in ("L", "R"):
            raise _JBail(DecodeError(f"{path}.side", "expected 'L' or 'R'"))
        return _z.InjZ(side, z())
    if k == "case_scrut":
        return _z.CaseScrut(
            z(), _str_field(o, "x", path), e("l"), _str_field(o, "y", path), e("r")
        )
    if k == "case_l":
        return _z.CaseL(
            e("scrut"), _str_field(o, "x", path), z(), _str_field(o, "y", path), e("r")
        )
    if k == "case_r":
        return _z.CaseR(
            e("scrut"), _str_field(o, "x", path), e("l"), _str_field(o, "y", path), z()
        )
    raise _JBail(DecodeError(path, f"unknown cursor-expression kind {k!r}"))


def typ_from_json(j: Any) -> Union[HTyp, DecodeError]:
    try:
        return _typ_from(j, "$")
    except _JBail as b:
        return b.err


def exp_from_json(j: Any) -> Union[HExp, DecodeError]:
    try:
        return _exp_from(j, "$")
    except _JBail as b:
        return b.err


def zexp_from_json(j: Any) -> Union[ZExp, DecodeError]:
    try:
        return _zexp_from(j, "$")
    except _JBail as b:
        return b.err


def ztyp_from_json(j: Any) -> Union[ZTyp, DecodeError]:
    try:
        return _ztyp_from(j, "$")
    except _JBail as b:
        return b.err


def action_from_json(j: Any) -> Union[Action, DecodeError]:
    try:
        return _action_from(j, "$")
    except _JBail as b:
        return b.err


def from_json(j: Any) -> Union[HTyp, HExp, ZExp, Action, DecodeError]:
    """Generic decoder: dispatches on the top-level kind."""
    try:
        o = _want(j, "$")
        k = o["k"]
        if k in ("num", "hole", "arrow", "sum"):
            return _typ_from(j, "$")
        if k in ("move", "del", "finish", "construct"):
            return _action_from(j, "$")
        if k in _ZEXP_KINDS:
            return _zexp_from(j, "$")
        if k in _ZTYP_KINDS:
            return _ztyp_from(j, "$")
        return _exp_from(j, "$")
    except _JBail as b:
        return b.err
