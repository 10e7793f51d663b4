"""One-cursor trees over types and expressions, plus cursor-path utilities.

Every Z-type / Z-expression is the underlying tree with exactly one cursor
superimposed; each recursive form has exactly one Z-child, so the one-cursor
property holds by construction (a Huet zipper). ``erase_*`` strips the
cursor; ``cursor_path`` / ``place_cursor`` convert between zippers and
1-based child-index paths.

Child numbering: arrow/sum types 1-2; ascription 1 = expression, 2 = type;
lambda/injection/non-empty hole 1; application/plus 1-2; case 1 = scrutinee,
2 = left branch, 3 = right branch. A path may cross from an expression into
the ascribed type via index 2 at an ascription.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple, Union

from .lang import (
    Ap,
    Arrow,
    Asc,
    Case,
    EmptyHole,
    HExp,
    HTyp,
    Inj,
    Lam,
    NonEmptyHole,
    Plus,
    Sum,
)

# ---------------------------------------------------------------------------
# Z-types

@dataclass(frozen=True, slots=True)
class CursorT:
    t: HTyp


@dataclass(frozen=True, slots=True)
class ArrowL:
    z: "ZTyp"
    cod: HTyp


@dataclass(frozen=True, slots=True)
class ArrowR:
    dom: HTyp
    z: "ZTyp"


@dataclass(frozen=True, slots=True)
class SumL:
    z: "ZTyp"
    right: HTyp


@dataclass(frozen=True, slots=True)
class SumR:
    left: HTyp
    z: "ZTyp"


ZTyp = Union[CursorT, ArrowL, ArrowR, SumL, SumR]

# ---------------------------------------------------------------------------
# Z-expressions

@dataclass(frozen=True, slots=True)
class CursorE:
    e: HExp


@dataclass(frozen=True, slots=True)
class LamZ:
    x: str
    z: "ZExp"


@dataclass(frozen=True, slots=True)
class ApL:
    z: "ZExp"
    arg: HExp


@dataclass(frozen=True, slots=True)
class ApR:
    fun: HExp
    z: "ZExp"


@dataclass(frozen=True, slots=True)
class PlusL:
    z: "ZExp"
    r: HExp


@dataclass(frozen=True, slots=True)
class PlusR:
    l: HExp
    z: "ZExp"


@dataclass(frozen=True, slots=True)
class AscL:
    z: "ZExp"
    t: HTyp


@dataclass(frozen=True, slots=True)
class AscR:
    e: HExp
    zt: ZTyp


@dataclass(frozen=True, slots=True)
class NonEmptyHoleZ:
    z: "ZExp"


@dataclass(frozen=True, slots=True)
class InjZ:
    side: str
    z: "ZExp"


@dataclass(frozen=True, slots=True)
class CaseScrut:
    z: "ZExp"
    x: str
    l: HExp
    y: str
    r: HExp


@dataclass(frozen=True, slots=True)
class CaseL:
    scrut: HExp
    x: str
    z: "ZExp"
    y: str
    r: HExp


@dataclass(frozen=True, slots=True)
class CaseR:
    scrut: HExp
    x: str
    l: HExp
    y: str
    z: "ZExp"


ZExp = Union[
    CursorE,
    LamZ,
    ApL,
    ApR,
    PlusL,
    PlusR,
    AscL,
    AscR,
    NonEmptyHoleZ,
    InjZ,
    CaseScrut,
    CaseL,
    CaseR,
]

CursorPath = Tuple[int, ...]

# ---------------------------------------------------------------------------
# Cursor erasure

def erase_typ(z: ZTyp) -> HTyp:
    if isinstance(z, CursorT):
        return z.t
    if isinstance(z, ArrowL):
        return Arrow(erase_typ(z.z), z.cod)
    if isinstance(z, ArrowR):
        return Arrow(z.dom, erase_typ(z.z))
    if isinstance(z, SumL):
        return Sum(erase_typ(z.z), z.right)
    return Sum(z.left, erase_typ(z.z))


def erase_exp(z: ZExp) -> HExp:
    if isinstance(z, CursorE):
        return z.e
    if isinstance(z, LamZ):
        return Lam(z.x, erase_exp(z.z))
    if isinstance(z, ApL):
        return Ap(erase_exp(z.z), z.arg)
    if isinstance(z, ApR):
        return Ap(z.fun, erase_exp(z.z))
    if isinstance(z, PlusL):
        return Plus(erase_exp(z.z), z.r)
    if isinstance(z, PlusR):
        return Plus(z.l, erase_exp(z.z))
    if isinstance(z, AscL):
        return Asc(erase_exp(z.z), z.t)
    if isinstance(z, AscR):
        return Asc(z.e, erase_typ(z.zt))
    if isinstance(z, NonEmptyHoleZ):
        return NonEmptyHole(erase_exp(z.z))
    if isinstance(z, InjZ):
        return Inj(z.side, erase_exp(z.z))
    if isinstance(z, CaseScrut):
        return Case(erase_exp(z.z), z.x, z.l, z.y, z.r)
    if isinstance(z, CaseL):
        return Case(z.scrut, z.x, erase_exp(z.z), z.y, z.r)
    return Case(z.scrut, z.x, z.l, z.y, erase_exp(z.z))


def root_cursor(e: HExp) -> ZExp:
    """The initial edit state: cursor on e itself."""
    return CursorE(e)


# ---------------------------------------------------------------------------
# Paths

def cursor_path_typ(z: ZTyp) -> CursorPath:
    if isinstance(z, CursorT):
        return ()
    if isinstance(z, (ArrowL, SumL)):
        return (1,) + cursor_path_typ(z.z)
    return (2,) + cursor_path_typ(z.z)


def cursor_path(z: ZExp) -> CursorPath:
    if isinstance(z, CursorE):
        return ()
    if isinstance(z, (LamZ, ApL, PlusL, AscL, NonEmptyHoleZ, InjZ, CaseScrut)):
        return (1,) + cursor_path(z.z)
    if isinstance(z, (ApR, PlusR, CaseL)):
        return (2,) + cursor_path(z.z)
    if isinstance(z, AscR):
        return (2,) + cursor_path_typ(z.zt)
    return (3,) + cursor_path(z.z)  # CaseR


def place_cursor_typ(t: HTyp, path: Sequence[int]) -> Optional[ZTyp]:
    if not path:
        return CursorT(t)
    n, rest = path[0], path[1:]
    if isinstance(t, Arrow):
        if n == 1:
            sub = place_cursor_typ(t.dom, rest)
            return None if sub is None else ArrowL(sub, t.cod)
        if n == 2:
            sub = place_cursor_typ(t.cod, rest)
            return None if sub is None else ArrowR(t.dom, sub)
    if isinstance(t, Sum):
        if n == 1:
            sub = place_cursor_typ(t.left, rest)
            return None if sub is None else SumL(sub, t.right)
        if n == 2:
            sub = place_cursor_typ(t.right, rest)
            return None if sub is None else SumR(t.left, sub)
    return None


def place_cursor(e: HExp, path: Sequence[int]) -> Optional[ZExp]:
    """Reattach a cursor at the given path, or None if the path does not
    exist in e. Inverse of cursor_path on the erased tree."""
    if not path:
        return CursorE(e)
    n, rest = path[0], path[1:]
    if isinstance(e, Lam) and n == 1:
        sub = place_cursor(e.body, rest)
        return None if sub is None else LamZ(e.x, sub)
    if isinstance(e, Ap):
        if n == 1:
            sub = place_cursor(e.fun, rest)
            return None if sub is None else ApL(sub, e.arg)
        if n == 2:
            sub = place_cursor(e.arg, rest)
            return None if sub is None else ApR(e.fun, sub)
    if isinstance(e, Plus):
        if n == 1:
            sub = place_cursor(e.l, rest)
            return None if sub is None else PlusL(sub, e.r)
        if n == 2:
            sub = place_cursor(e.r, rest)
            return None if sub is None else PlusR(e.l, sub)
    if isinstance(e, Asc):
        if n == 1:
            sub = place_cursor(e.e, rest)
            return None if sub is None else AscL(sub, e.t)
        if n == 2:
            subt = place_cursor_typ(e.t, rest)
            return None if subt is None else AscR(e.e, subt)
    if isinstance(e, NonEmptyHole) and n == 1:
        sub = place_cursor(e.e, rest)
        return None if sub is None else NonEmptyHoleZ(sub)
    if isinstance(e, Inj) and n == 1:
        sub = place_cursor(e.e, rest)
        return None if sub is None else InjZ(e.side, sub)
    if isinstance(e, Case):
        if n == 1:
            sub = place_cursor(e.scrut, rest)
            return None if sub is None else CaseScrut(sub, e.x, e.l, e.y, e.r)
        if n == 2:
            sub = place_cursor(e.l, rest)
            return None if sub is None else CaseL(e.scrut, e.x, sub, e.y, e.r)
        if n == 3:
            sub = place_cursor(e.r, rest)
            return None if sub is None else CaseR(e.scrut, e.x, e.l, e.y, sub)
    return None


# ---------------------------------------------------------------------------
# Structural audit

def cursor_count(z: Union[ZExp, ZTyp]) -> int:
    """Number of cursors in z; 1 for every value built from the
    constructors above."""
    if isinstance(z, (CursorE, CursorT)):
        return 1
    if isinstance(z, AscR):
        return cursor_count(z.zt)
    return cursor_count(z.z)


def all_paths(e: HExp) -> list[CursorPath]:
    """Every valid cursor path into e, including paths into ascribed types."""
    paths: list[CursorPath] = [()]
    children: list[tuple[int, HExp]] = []
    if isinstance(e, Lam):
        children = [(1, e.body)]
    elif isinstance(e, Ap):
        children = [(1, e.fun), (2, e.arg)]
    elif isinstance(e, Plus):
        children = [(1, e.l), (2, e.r)]
    elif isinstance(e, Asc):
        children = [(1, e.e)]
        for p in all_paths_typ(e.t):
            paths.append((2,) + p)
    elif isinstance(e, NonEmptyHole):
        children = [(1, e.e)]
    elif isinstance(e, Inj):
        children = [(1, e.e)]
    elif isinstance(e, Case):
        children = [(1, e.scrut), (2, e.l), (3, e.r)]
    for n, child in children:
        for p in all_paths(child):
            paths.append((n,) + p)
    return paths


def all_paths_typ(t: HTyp) -> list[CursorPath]:
    paths: list[CursorPath] = [()]
    if isinstance(t, Arrow):
        pairs = [(1, t.dom), (2, t.cod)]
    elif isinstance(t, Sum):
        pairs = [(1, t.left), (2, t.right)]
    else:
        pairs = []
    for n, child in pairs:
        for p in all_paths_typ(child):
            paths.append((n,) + p)
    return paths
