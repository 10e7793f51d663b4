"""The bidirectional action semantics: movement, construction, deletion and
finishing over edit states, in the deterministic subsumption-minimal form.

Every perform_* function is total and pure: failure is reported as an
ActionError value, never an exception, so probing whether an action is
enabled is just a call that gets thrown away.

Dispatch order encodes subsumption-minimality: in analytic position the
specific rules are tried first and the subsumption route (re-synthesize,
act synthetically, check consistency) is the rule of last resort. The
metatheory module checks this dispatch against an exhaustive per-rule
enumeration.

``_MUTATION`` is a test hook used by the mutation harness to break one
named rule at a time; it is always None in normal operation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .lang import (
    HOLE,
    NUM,
    Ap,
    Arrow,
    Asc,
    Case,
    Ctx,
    EmptyHole,
    HExp,
    HTyp,
    Inj,
    Lam,
    NonEmptyHole,
    NumLit,
    Plus,
    Sum,
    Var,
    analyze,
    consistent,
    extend,
    inconsistent,
    matched_arrow,
    matched_sum,
    synthesize,
)
from .zipper import (
    ArrowL,
    ArrowR,
    AscL,
    AscR,
    ApL,
    ApR,
    CaseL,
    CaseR,
    CaseScrut,
    CursorE,
    CursorT,
    InjZ,
    LamZ,
    NonEmptyHoleZ,
    PlusL,
    PlusR,
    SumL,
    SumR,
    ZExp,
    ZTyp,
    erase_exp,
    erase_typ,
)

_MUTATION: Optional[str] = None

# ---------------------------------------------------------------------------
# Actions

@dataclass(frozen=True, slots=True)
class Child:
    n: int


@dataclass(frozen=True, slots=True)
class Parent:
    pass


Direction = Union[Child, Parent]

PARENT = Parent()


@dataclass(frozen=True, slots=True)
class ArrowShape:
    pass


@dataclass(frozen=True, slots=True)
class NumShape:
    pass


@dataclass(frozen=True, slots=True)
class SumShape:
    pass


@dataclass(frozen=True, slots=True)
class AscShape:
    pass


@dataclass(frozen=True, slots=True)
class VarShape:
    x: str


@dataclass(frozen=True, slots=True)
class LamShape:
    x: str


@dataclass(frozen=True, slots=True)
class ApShape:
    pass


@dataclass(frozen=True, slots=True)
class LitShape:
    n: int


@dataclass(frozen=True, slots=True)
class PlusShape:
    pass


@dataclass(frozen=True, slots=True)
class InjShape:
    side: str  # "L" or "R"


@dataclass(frozen=True, slots=True)
class CaseShape:
    x: str
    y: str


@dataclass(frozen=True, slots=True)
class NEHoleShape:
    pass


Shape = Union[
    ArrowShape,
    NumShape,
    SumShape,
    AscShape,
    VarShape,
    LamShape,
    ApShape,
    LitShape,
    PlusShape,
    InjShape,
    CaseShape,
    NEHoleShape,
]

# Shapes that act on types rather than expressions.
TYPE_SHAPES = (ArrowShape, NumShape, SumShape)


@dataclass(frozen=True, slots=True)
class Move:
    d: Direction


@dataclass(frozen=True, slots=True)
class Construct:
    s: Shape


@dataclass(frozen=True, slots=True)
class Del:
    pass


@dataclass(frozen=True, slots=True)
class Finish:
    pass


Action = Union[Move, Construct, Del, Finish]
ActionList = Sequence[Action]

DEL = Del()
FINISH = Finish()

# ---------------------------------------------------------------------------
# Errors (values, not exceptions)

@dataclass(frozen=True, slots=True)
class NoRuleApplies:
    action: Action


@dataclass(frozen=True, slots=True)
class UnboundVariable:
    action: Action
    name: str


@dataclass(frozen=True, slots=True)
class InvalidChild:
    action: Action
    n: int


@dataclass(frozen=True, slots=True)
class AtRoot:
    action: Action


@dataclass(frozen=True, slots=True)
class TypeInconsistentFinish:
    action: Action


@dataclass(frozen=True, slots=True)
class CursorInType:
    action: Action


ActionError = Union[
    NoRuleApplies,
    UnboundVariable,
    InvalidChild,
    AtRoot,
    TypeInconsistentFinish,
    CursorInType,
]

_ERRORS = (
    NoRuleApplies,
    UnboundVariable,
    InvalidChild,
    AtRoot,
    TypeInconsistentFinish,
    CursorInType,
)


def is_error(x: object) -> bool:
    return isinstance(x, _ERRORS)


# ---------------------------------------------------------------------------
# Type actions

def perform_typ(z: ZTyp, a: Action) -> Union[ZTyp, ActionError]:
    if isinstance(z, CursorT):
        t = z.t
        if isinstance(a, Move):
            d = a.d
            if isinstance(d, Parent):
                return AtRoot(a)
            if isinstance(t, Arrow):
                if d.n == 1:
                    return ArrowL(CursorT(t.dom), t.cod)
                if d.n == 2:
                    mutant = _MUTATION == "arrow_child2_goes_left"
                    if mutant:
                        return ArrowL(CursorT(t.dom), t.cod)
                    return ArrowR(t.dom, CursorT(t.cod))
            if isinstance(t, Sum):
                if d.n == 1:
                    return SumL(CursorT(t.left), t.right)
                if d.n == 2:
                    return SumR(t.left, CursorT(t.right))
            return InvalidChild(a, d.n)
        if isinstance(a, Del):
            return CursorT(HOLE)
        if isinstance(a, Construct):
            s = a.s
            if isinstance(s, ArrowShape):
                return ArrowR(t, CursorT(HOLE))
            if isinstance(s, SumShape):
                return SumR(t, CursorT(HOLE))
            if isinstance(s, NumShape):
                if isinstance(t, type(HOLE)):
                    return CursorT(NUM)
                return NoRuleApplies(a)
            return CursorInType(a)
        return NoRuleApplies(a)  # finish has no type rule
    # Zipper recursion; Move parent collapses when the cursor sits on the
    # immediate Z-child.
    inner = z.z
    if isinstance(a, Move) and isinstance(a.d, Parent) and isinstance(inner, CursorT):
        return CursorT(erase_typ(z))
    sub = perform_typ(inner, a)
    if is_error(sub):
        return sub
    if isinstance(z, ArrowL):
        return ArrowL(sub, z.cod)
    if isinstance(z, ArrowR):
        return ArrowR(z.dom, sub)
    if isinstance(z, SumL):
        return SumL(sub, z.right)
    return SumR(z.left, sub)


# ---------------------------------------------------------------------------
# Expression movement

def _move_into(e: HExp, a: Move, n: int) -> Union[ZExp, ActionError]:
    """Move the cursor from e onto its n-th child."""
    if isinstance(e, Lam) and n == 1:
        return LamZ(e.x, CursorE(e.body))
    if isinstance(e, Ap):
        if n == 1:
            return ApL(CursorE(e.fun), e.arg)
        if n == 2:
            return ApR(e.fun, CursorE(e.arg))
    if isinstance(e, Plus):
        if n == 1:
            return PlusL(CursorE(e.l), e.r)
        if n == 2:
            return PlusR(e.l, CursorE(e.r))
    if isinstance(e, Asc):
        if n == 1:
            return AscL(CursorE(e.e), e.t)
        if n == 2:
            return AscR(e.e, CursorT(e.t))
    if isinstance(e, NonEmptyHole) and n == 1:
        return NonEmptyHoleZ(CursorE(e.e))
    if isinstance(e, Inj) and n == 1:
        return InjZ(e.side, CursorE(e.e))
    if isinstance(e, Case):
        if n == 1:
            return CaseScrut(CursorE(e.scrut), e.x, e.l, e.y, e.r)
        if n == 2:
            return CaseL(e.scrut, e.x, CursorE(e.l), e.y, e.r)
        if n == 3:
            return CaseR(e.scrut, e.x, e.l, e.y, CursorE(e.r))
    return InvalidChild(a, n)


def perform_move(z: ZExp, d: Direction) -> Union[ZExp, ActionError]:
    """Relative movement, recursing through the zipper to the cursor.
    Movement into and within ascribed types is included."""
    a = Move(d)
    if isinstance(z, CursorE):
        if isinstance(d, Parent):
            return AtRoot(a)
        return _move_into(z.e, a, d.n)
    if isinstance(z, AscR):
        if isinstance(d, Parent) and isinstance(z.zt, CursorT):
            return CursorE(Asc(z.e, z.zt.t))
        sub = perform_typ(z.zt, a)
        if is_error(sub):
            return sub
        return AscR(z.e, sub)
    inner = z.z
    if isinstance(d, Parent) and isinstance(inner, CursorE):
        return CursorE(erase_exp(z))
    sub = perform_move(inner, d)
    if is_error(sub):
        return sub
    return _rebuild(z, sub)


def _rebuild(z: ZExp, sub: ZExp) -> ZExp:
    """z with its Z-child replaced by sub (AscR handled by callers)."""
    if isinstance(z, LamZ):
        return LamZ(z.x, sub)
    if isinstance(z, ApL):
        return ApL(sub, z.arg)
    if isinstance(z, ApR):
        return ApR(z.fun, sub)
    if isinstance(z, PlusL):
        return PlusL(sub, z.r)
    if isinstance(z, PlusR):
        return PlusR(z.l, sub)
    if isinstance(z, AscL):
        return AscL(sub, z.t)
    if isinstance(z, NonEmptyHoleZ):
        return NonEmptyHoleZ(sub)
    if isinstance(z, InjZ):
        return InjZ(z.side, sub)
    if isinstance(z, CaseScrut):
        return CaseScrut(sub, z.x, z.l, z.y, z.r)
    if isinstance(z, CaseL):
        return CaseL(z.scrut, z.x, sub, z.y, z.r)
    if isinstance(z, CaseR):
        return CaseR(z.scrut, z.x, z.l, z.y, sub)
    raise AssertionError(f"not a zipper form: {z!r}")


# ---------------------------------------------------------------------------
# Synthetic expression actions

SynResult = Union[Tuple[ZExp, HTyp], ActionError]


def perform_syn(ctx: Ctx, z: ZExp, t: HTyp, a: Action) -> SynResult:
    """Perform a in synthetic position: the cursor erasure of z synthesizes
    t, and the result is the new state with its synthesized type."""
    if isinstance(a, Move):
        moved = perform_move(z, a.d)
        if is_error(moved):
            return moved
        return (moved, t)

    if isinstance(z, CursorE):
        return _syn_at_cursor(ctx, z.e, t, a)

    # Zipper cases.
    if isinstance(z, AscL):
        sub = perform_ana(ctx, z.z, z.t, a)
        if is_error(sub):
            return sub
        return (AscL(sub, z.t), z.t)
    if isinstance(z, AscR):
        subt = perform_typ(z.zt, a)
        if is_error(subt):
            return subt
        new_t = erase_typ(subt)
        if _MUTATION != "asc_no_recheck" and not analyze(ctx, z.e, new_t):
            return NoRuleApplies(a)
        return (AscR(z.e, subt), new_t)
    if isinstance(z, ApL):
        t_fun = synthesize(ctx, erase_exp(z.z))
        if t_fun is None:
            return NoRuleApplies(a)
        sub = perform_syn(ctx, z.z, t_fun, a)
        if is_error(sub):
            return sub
        sub_z, t_fun2 = sub
        m = matched_arrow(t_fun2)
        if m is None or not analyze(ctx, z.arg, m[0]):
            return NoRuleApplies(a)
        return (ApL(sub_z, z.arg), m[1])
    if isinstance(z, ApR):
        t_fun = synthesize(ctx, z.fun)
        if t_fun is None:
            return NoRuleApplies(a)
        m = matched_arrow(t_fun)
        if m is None:
            return NoRuleApplies(a)
        sub = perform_ana(ctx, z.z, m[0], a)
        if is_error(sub):
            return sub
        return (ApR(z.fun, sub), m[1])
    if isinstance(z, PlusL):
        sub = perform_ana(ctx, z.z, NUM, a)
        if is_error(sub):
            return sub
        return (PlusL(sub, z.r), NUM)
    if isinstance(z, PlusR):
        sub = perform_ana(ctx, z.z, NUM, a)
        if is_error(sub):
            return sub
        return (PlusR(z.l, sub), NUM)
    if isinstance(z, NonEmptyHoleZ):
        t_in = synthesize(ctx, erase_exp(z.z))
        if t_in is None:
            return NoRuleApplies(a)
        sub = perform_syn(ctx, z.z, t_in, a)
        if is_error(sub):
            return sub
        return (NonEmptyHoleZ(sub[0]), HOLE)
    # LamZ / InjZ / CaseScrut / CaseL / CaseR erasures never synthesize.
    return NoRuleApplies(a)


def _syn_at_cursor(ctx: Ctx, e: HExp, t: HTyp, a: Action) -> SynResult:
    if isinstance(a, Del):
        return (CursorE(EmptyHole()), HOLE)
    if isinstance(a, Finish):
        if isinstance(e, NonEmptyHole):
            t_in = synthesize(ctx, e.e)
            if t_in is not None:
                return (CursorE(e.e), t_in)
        return NoRuleApplies(a)
    if not isinstance(a, Construct):
        return NoRuleApplies(a)
    s = a.s
    if isinstance(s, AscShape):
        return (AscR(e, CursorT(t)), t)
    if isinstance(s, NEHoleShape):
        return (NonEmptyHoleZ(CursorE(e)), HOLE)
    if isinstance(s, ApShape):
        m = matched_arrow(t)
        if m is not None:
            return (ApR(e, CursorE(EmptyHole())), m[1])
        if inconsistent(t, Arrow(HOLE, HOLE)):
            return (ApR(NonEmptyHole(e), CursorE(EmptyHole())), HOLE)
        return NoRuleApplies(a)
    if isinstance(s, PlusShape):
        if _MUTATION == "plus_no_consistency" or consistent(t, NUM):
            return (PlusR(e, CursorE(EmptyHole())), NUM)
        if inconsistent(t, NUM):
            return (PlusR(NonEmptyHole(e), CursorE(EmptyHole())), NUM)
        return NoRuleApplies(a)
    if isinstance(s, CaseShape):
        m = matched_sum(t)
        if m is not None:
            return (
                AscL(
                    CaseL(e, s.x, CursorE(EmptyHole()), s.y, EmptyHole()),
                    HOLE,
                ),
                HOLE,
            )
        if inconsistent(t, Sum(HOLE, HOLE)):
            return (
                AscL(
                    CaseScrut(
                        NonEmptyHoleZ(CursorE(e)), s.x, EmptyHole(), s.y, EmptyHole()
                    ),
                    HOLE,
                ),
                HOLE,
            )
        return NoRuleApplies(a)
    # The remaining shapes require the cursor on an empty hole.
    if not isinstance(e, EmptyHole):
        return NoRuleApplies(a)
    if isinstance(s, VarShape):
        if s.x not in ctx:
            return UnboundVariable(a, s.x)
        return (CursorE(Var(s.x)), ctx[s.x])
    if isinstance(s, LamShape):
        return (
            AscR(Lam(s.x, EmptyHole()), ArrowL(CursorT(HOLE), HOLE)),
            Arrow(HOLE, HOLE),
        )
    if isinstance(s, LitShape):
        return (CursorE(NumLit(s.n)), NUM)
    if isinstance(s, InjShape):
        return (
            AscR(Inj(s.side, EmptyHole()), SumL(CursorT(HOLE), HOLE)),
            Sum(HOLE, HOLE),
        )
    return NoRuleApplies(a)  # type shapes need the cursor in a type


# ---------------------------------------------------------------------------
# Analytic expression actions (subsumption-minimal dispatch)

AnaResult = Union[ZExp, ActionError]


def perform_ana(ctx: Ctx, z: ZExp, t: HTyp, a: Action) -> AnaResult:
    """Perform a in analytic position (cursor erasure analyzes against t).
    Specific rules first; subsumption last."""
    if _MUTATION == "subsume_first":
        r = _ana_subsume(ctx, z, t, a)
        if not is_error(r):
            return r
    r = _ana_specific(ctx, z, t, a)
    if r is not None:
        return r
    return _ana_subsume(ctx, z, t, a)


def _ana_specific(ctx: Ctx, z: ZExp, t: HTyp, a: Action) -> Optional[AnaResult]:
    """The non-subsumption analytic rules. None means no specific rule
    fired (fall through to subsumption); an ActionError is definitive."""
    if isinstance(a, Move):
        moved = perform_move(z, a.d)
        if is_error(moved):
            return moved
        return moved

    if isinstance(z, CursorE):
        e = z.e
        if isinstance(a, Del):
            return CursorE(EmptyHole())
        if isinstance(a, Finish):
            if isinstance(e, NonEmptyHole):
                if _MUTATION == "finish_no_typecheck" or analyze(ctx, e.e, t):
                    return CursorE(e.e)
                return TypeInconsistentFinish(a)
            return None
        if isinstance(a, Construct):
            s = a.s
            if isinstance(s, AscShape):
                return AscR(e, CursorT(t))
            if isinstance(s, VarShape) and isinstance(e, EmptyHole):
                if s.x not in ctx:
                    return UnboundVariable(a, s.x)
                if inconsistent(t, ctx[s.x]):
                    return NonEmptyHoleZ(CursorE(Var(s.x)))
                return None  # consistent: subsumption route
            if isinstance(s, LamShape) and isinstance(e, EmptyHole):
                if matched_arrow(t) is not None:
                    return LamZ(s.x, CursorE(EmptyHole()))
                if inconsistent(t, Arrow(HOLE, HOLE)):
                    return NonEmptyHoleZ(
                        AscR(Lam(s.x, EmptyHole()), ArrowL(CursorT(HOLE), HOLE))
                    )
                return None
            if isinstance(s, LitShape) and isinstance(e, EmptyHole):
                if inconsistent(t, NUM):
                    return NonEmptyHoleZ(CursorE(NumLit(s.n)))
                return None  # consistent: subsumption route
            if isinstance(s, InjShape) and isinstance(e, EmptyHole):
                if matched_sum(t) is not None:
                    return InjZ(s.side, CursorE(EmptyHole()))
                if inconsistent(t, Sum(HOLE, HOLE)):
                    return NonEmptyHoleZ(
                        AscR(Inj(s.side, EmptyHole()), SumL(CursorT(HOLE), HOLE))
                    )
                return None
            if isinstance(s, CaseShape) and isinstance(e, EmptyHole):
                return CaseScrut(
                    CursorE(EmptyHole()), s.x, EmptyHole(), s.y, EmptyHole()
                )
            return None
        return None

    # Analytic zipper cases.
    if isinstance(z, LamZ):
        m = matched_arrow(t)
        if m is None:
            return None
        sub = perform_ana(extend(ctx, z.x, m[0]), z.z, m[1], a)
        if is_error(sub):
            return sub
        return LamZ(z.x, sub)
    if isinstance(z, InjZ):
        m = matched_sum(t)
        if m is None:
            return None
        sub = perform_ana(ctx, z.z, m[0] if z.side == "L" else m[1], a)
        if is_error(sub):
            return sub
        return InjZ(z.side, sub)
    if isinstance(z, CaseScrut):
        t0 = synthesize(ctx, erase_exp(z.z))
        if t0 is None:
            return None
        sub = perform_syn(ctx, z.z, t0, a)
        if is_error(sub):
            return sub
        sub_z, t_plus = sub
        m = matched_sum(t_plus)
        if m is None:
            return None
        if not (
            analyze(extend(ctx, z.x, m[0]), z.l, t)
            and analyze(extend(ctx, z.y, m[1]), z.r, t)
        ):
            return None
        return CaseScrut(sub_z, z.x, z.l, z.y, z.r)
    if isinstance(z, (CaseL, CaseR)):
        t_plus = synthesize(ctx, z.scrut)
        if t_plus is None:
            return None
        m = matched_sum(t_plus)
        if m is None:
            return None
        if isinstance(z, CaseL):
            sub = perform_ana(extend(ctx, z.x, m[0]), z.z, t, a)
            if is_error(sub):
                return sub
            return CaseL(z.scrut, z.x, sub, z.y, z.r)
        sub = perform_ana(extend(ctx, z.y, m[1]), z.z, t, a)
        if is_error(sub):
            return sub
        return CaseR(z.scrut, z.x, z.l, z.y, sub)
    return None


def _ana_subsume(ctx: Ctx, z: ZExp, t: HTyp, a: Action) -> AnaResult:
    t_syn = synthesize(ctx, erase_exp(z))
    if t_syn is None:
        return NoRuleApplies(a)
    sub = perform_syn(ctx, z, t_syn, a)
    if is_error(sub):
        return sub
    sub_z, t_new = sub
    if not consistent(t, t_new):
        return NoRuleApplies(a)
    return sub_z


# ---------------------------------------------------------------------------
# Iterated actions

IterSynResult = Union[Tuple[ZExp, HTyp], Tuple[ActionError, int]]


def perform_syn_iter(
    ctx: Ctx, z: ZExp, t: HTyp, actions: ActionList
) -> IterSynResult:
    """Left-to-right fold of perform_syn; the empty list is the identity.
    On failure returns (error, index of the failing action)."""
    for i, a in enumerate(actions):
        r = perform_syn(ctx, z, t, a)
        if is_error(r):
            return (r, i)
        z, t = r
    return (z, t)


def perform_ana_iter(
    ctx: Ctx, z: ZExp, t: HTyp, actions: ActionList
) -> Union[ZExp, Tuple[ActionError, int]]:
    for i, a in enumerate(actions):
        r = perform_ana(ctx, z, t, a)
        if is_error(r):
            return (r, i)
        z = r
    return z


def perform_typ_iter(
    z: ZTyp, actions: ActionList
) -> Union[ZTyp, Tuple[ActionError, int]]:
    for i, a in enumerate(actions):
        r = perform_typ(z, a)
        if is_error(r):
            return (r, i)
        z = r
    return z


# ---------------------------------------------------------------------------
# Enabled-action computation

def enabled_actions(
    ctx: Ctx, z: ZExp, t: HTyp, candidates: Sequence[Action]
) -> List[Tuple[Action, bool]]:
    """For each candidate, whether perform_syn would succeed. Pure: the
    probe results are discarded."""
    return [(a, not is_error(perform_syn(ctx, z, t, a))) for a in candidates]


def binders_on_path(z: ZExp) -> List[str]:
    """Variable binders in scope at the cursor (lambda and case binders
    crossed on the way down)."""
    out: List[str] = []
    while not isinstance(z, (CursorE, AscR)):
        if isinstance(z, LamZ):
            out.append(z.x)
        elif isinstance(z, CaseL):
            out.append(z.x)
        elif isinstance(z, CaseR):
            out.append(z.y)
        z = z.z
    return out


def standard_candidates(ctx: Ctx, z: ZExp) -> List[Action]:
    """The palette candidate set: every movement, del, finish, every
    argument-free shape, one representative numeral, and variables drawn
    from the context plus in-scope binders."""
    acts: List[Action] = [Move(Child(n)) for n in (1, 2, 3)]
    acts.append(Move(PARENT))
    acts.append(DEL)
    acts.append(FINISH)
    for shape in (
        ArrowShape(),
        NumShape(),
        SumShape(),
        AscShape(),
        ApShape(),
        PlusShape(),
        NEHoleShape(),
        InjShape("L"),
        InjShape("R"),
        LitShape(0),
        LamShape("x"),
        CaseShape("x", "y"),
    ):
        acts.append(Construct(shape))
    names = sorted(set(ctx) | set(binders_on_path(z)))
    acts.extend(Construct(VarShape(x)) for x in names)
    return acts
