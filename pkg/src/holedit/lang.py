"""Hole-bearing types and expressions, and their bidirectional statics.

Types may contain the unknown type (written ``{}`` in the surface syntax);
expressions may contain empty holes and non-empty holes (holes wrapping an
expression whose type does not fit its context). Type consistency treats the
unknown type as compatible with everything, so incomplete programs still
typecheck.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping, Optional, Tuple, Union

# ---------------------------------------------------------------------------
# Types

@dataclass(frozen=True, slots=True)
class Num:
    pass


@dataclass(frozen=True, slots=True)
class Hole:
    pass


@dataclass(frozen=True, slots=True)
class Arrow:
    dom: "HTyp"
    cod: "HTyp"


@dataclass(frozen=True, slots=True)
class Sum:
    left: "HTyp"
    right: "HTyp"


HTyp = Union[Num, Hole, Arrow, Sum]

NUM = Num()
HOLE = Hole()

# ---------------------------------------------------------------------------
# Expressions

_VAR_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
KEYWORDS = frozenset({"num", "inl", "inr", "case"})

MAX_NUMERAL = 2**64 - 1


def is_var_name(name: str) -> bool:
    return bool(_VAR_RE.match(name)) and name not in KEYWORDS


@dataclass(frozen=True, slots=True)
class Var:
    name: str


@dataclass(frozen=True, slots=True)
class Lam:
    x: str
    body: "HExp"


@dataclass(frozen=True, slots=True)
class Ap:
    fun: "HExp"
    arg: "HExp"


@dataclass(frozen=True, slots=True)
class NumLit:
    n: int

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_NUMERAL:
            raise ValueError(f"numeral out of range: {self.n}")


@dataclass(frozen=True, slots=True)
class Plus:
    l: "HExp"
    r: "HExp"


@dataclass(frozen=True, slots=True)
class Asc:
    e: "HExp"
    t: HTyp


@dataclass(frozen=True, slots=True)
class EmptyHole:
    pass


@dataclass(frozen=True, slots=True)
class NonEmptyHole:
    e: "HExp"


@dataclass(frozen=True, slots=True)
class Inj:
    side: str  # "L" or "R"
    e: "HExp"

    def __post_init__(self) -> None:
        if self.side not in ("L", "R"):
            raise ValueError(f"bad injection side: {self.side}")


@dataclass(frozen=True, slots=True)
class Case:
    scrut: "HExp"
    x: str
    l: "HExp"
    y: str
    r: "HExp"


HExp = Union[Var, Lam, Ap, NumLit, Plus, Asc, EmptyHole, NonEmptyHole, Inj, Case]

EMPTY_HOLE = EmptyHole()

# ---------------------------------------------------------------------------
# Contexts

Ctx = Mapping[str, HTyp]

EMPTY_CTX: Ctx = {}


def extend(ctx: Ctx, x: str, t: HTyp) -> Ctx:
    """Bind x to t; an existing binding for x is replaced."""
    new = dict(ctx)
    new[x] = t
    return new


# ---------------------------------------------------------------------------
# Consistency and its judgemental complement

def consistent(t1: HTyp, t2: HTyp) -> bool:
    """True iff t1 ~ t2: reflexive, symmetric, not transitive; the unknown
    type is consistent with every type; arrows and sums are covariant in
    both positions."""
    if isinstance(t1, Hole) or isinstance(t2, Hole):
        return True
    if isinstance(t1, Num):
        return isinstance(t2, Num)
    if isinstance(t1, Arrow):
        return (
            isinstance(t2, Arrow)
            and consistent(t1.dom, t2.dom)
            and consistent(t1.cod, t2.cod)
        )
    return (
        isinstance(t2, Sum)
        and consistent(t1.left, t2.left)
        and consistent(t1.right, t2.right)
    )


def inconsistent(t1: HTyp, t2: HTyp) -> bool:
    """Inductive inconsistency judgement, deliberately not defined as
    ``not consistent``: base clashes between num, arrow and sum
    constructors, propagated componentwise."""
    if isinstance(t1, Num) and isinstance(t2, (Arrow, Sum)):
        return True
    if isinstance(t2, Num) and isinstance(t1, (Arrow, Sum)):
        return True
    if isinstance(t1, Arrow) and isinstance(t2, Sum):
        return True
    if isinstance(t1, Sum) and isinstance(t2, Arrow):
        return True
    if isinstance(t1, Arrow) and isinstance(t2, Arrow):
        return inconsistent(t1.dom, t2.dom) or inconsistent(t1.cod, t2.cod)
    if isinstance(t1, Sum) and isinstance(t2, Sum):
        return inconsistent(t1.left, t2.left) or inconsistent(t1.right, t2.right)
    return False


def matched_arrow(t: HTyp) -> Optional[Tuple[HTyp, HTyp]]:
    """The matched arrow type of t, if any: the unknown type matches
    ``{} -> {}``; arrows match themselves."""
    if isinstance(t, Hole):
        return (HOLE, HOLE)
    if isinstance(t, Arrow):
        return (t.dom, t.cod)
    return None


def matched_sum(t: HTyp) -> Optional[Tuple[HTyp, HTyp]]:
    if isinstance(t, Hole):
        return (HOLE, HOLE)
    if isinstance(t, Sum):
        return (t.left, t.right)
    return None


# ---------------------------------------------------------------------------
# Bidirectional statics

def synthesize(ctx: Ctx, e: HExp) -> Optional[HTyp]:
    """The type synthesized by e under ctx, or None if e does not
    synthesize (lambdas, injections, case forms, unbound variables)."""
    if isinstance(e, Var):
        return ctx.get(e.name)
    if isinstance(e, Ap):
        t1 = synthesize(ctx, e.fun)
        if t1 is None:
            return None
        m = matched_arrow(t1)
        if m is None:
            return None
        dom, cod = m
        return cod if analyze(ctx, e.arg, dom) else None
    if isinstance(e, NumLit):
        return NUM
    if isinstance(e, Plus):
        if analyze(ctx, e.l, NUM) and analyze(ctx, e.r, NUM):
            return NUM
        return None
    if isinstance(e, Asc):
        return e.t if analyze(ctx, e.e, e.t) else None
    if isinstance(e, EmptyHole):
        return HOLE
    if isinstance(e, NonEmptyHole):
        return HOLE if synthesize(ctx, e.e) is not None else None
    return None  # Lam, Inj, Case only analyze


def analyze(ctx: Ctx, e: HExp, t: HTyp) -> bool:
    """True iff e analyzes against t under ctx. The forms with specific
    analytic rules (lambda, injection, case) are handled directly;
    everything else goes through synthesis plus consistency."""
    if isinstance(e, Lam):
        m = matched_arrow(t)
        if m is None:
            return False
        dom, cod = m
        return analyze(extend(ctx, e.x, dom), e.body, cod)
    if isinstance(e, Inj):
        m = matched_sum(t)
        if m is None:
            return False
        return analyze(ctx, e.e, m[0] if e.side == "L" else m[1])
    if isinstance(e, Case):
        tp = synthesize(ctx, e.scrut)
        if tp is None:
            return False
        m = matched_sum(tp)
        if m is None:
            return False
        tl, tr = m
        return analyze(extend(ctx, e.x, tl), e.l, t) and analyze(
            extend(ctx, e.y, tr), e.r, t
        )
    s = synthesize(ctx, e)
    return s is not None and consistent(t, s)


# ---------------------------------------------------------------------------
# Completeness

def is_complete_typ(t: HTyp) -> bool:
    if isinstance(t, Hole):
        return False
    if isinstance(t, Arrow):
        return is_complete_typ(t.dom) and is_complete_typ(t.cod)
    if isinstance(t, Sum):
        return is_complete_typ(t.left) and is_complete_typ(t.right)
    return True


def is_complete_exp(e: HExp) -> bool:
    if isinstance(e, (EmptyHole, NonEmptyHole)):
        return False
    if isinstance(e, Lam):
        return is_complete_exp(e.body)
    if isinstance(e, Ap):
        return is_complete_exp(e.fun) and is_complete_exp(e.arg)
    if isinstance(e, Plus):
        return is_complete_exp(e.l) and is_complete_exp(e.r)
    if isinstance(e, Asc):
        return is_complete_exp(e.e) and is_complete_typ(e.t)
    if isinstance(e, Inj):
        return is_complete_exp(e.e)
    if isinstance(e, Case):
        return (
            is_complete_exp(e.scrut)
            and is_complete_exp(e.l)
            and is_complete_exp(e.r)
        )
    return True
