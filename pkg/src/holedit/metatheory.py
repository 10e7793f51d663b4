"""Executable metatheory: random well-typed term generators, constructive
witnesses for the reachability and constructability theorems, and fuzzers
for sensibility, movement erasure invariance and determinism.

The determinism fuzzer carries its own oracle: an exhaustive per-rule
enumeration of the action semantics (subsumption only when no specific
analytic rule fires) that is compared against the dispatching engine on
every enabled action.

A small mutation harness can break one named rule at a time so the test
suite can demonstrate that each fuzzer actually has teeth.
"""

from __future__ import annotations

import random
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from . import actions as _actions
from .actions import (
    DEL,
    FINISH,
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
    PARENT,
    Parent,
    PlusShape,
    SumShape,
    VarShape,
    is_error,
    perform_ana,
    perform_move,
    perform_syn,
    perform_syn_iter,
    perform_typ,
    standard_candidates,
)
from .lang import (
    EMPTY_CTX,
    HOLE,
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
    CursorPath,
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
    all_paths,
    cursor_count,
    cursor_path,
    cursor_path_typ,
    erase_exp,
    erase_typ,
    place_cursor,
)

# ---------------------------------------------------------------------------
# Configuration and reports

@dataclass(frozen=True, slots=True)
class GenConfig:
    seed: int
    max_depth: int = 4
    var_pool: Tuple[str, ...] = ("x", "y", "z", "f", "g")
    numeral_bound: int = 100

    def __post_init__(self) -> None:
        if self.max_depth < 1:
            raise ValueError("max_depth must be >= 1")
        if not self.var_pool:
            raise ValueError("var_pool must be nonempty")


@dataclass(frozen=True, slots=True)
class FuzzFailure:
    initial: ZExp
    initial_typ: HTyp
    actions: Tuple[Action, ...]
    prop: str
    index: int


@dataclass(frozen=True, slots=True)
class FuzzReport:
    kind: str
    seed: int
    cases_run: int
    failures: Tuple[FuzzFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


# ---------------------------------------------------------------------------
# Generators

def _gen_typ(rng: random.Random, depth: int) -> HTyp:
    r = rng.random()
    if depth <= 0 or r < 0.45:
        return HOLE if r < 0.2 else NUM
    if r < 0.75:
        return Arrow(_gen_typ(rng, depth - 1), _gen_typ(rng, depth - 1))
    return Sum(_gen_typ(rng, depth - 1), _gen_typ(rng, depth - 1))


def _gen_syn(
    rng: random.Random, cfg: GenConfig, ctx: Ctx, depth: int
) -> Tuple[HExp, HTyp]:
    leafy = depth <= 0 or rng.random() < 0.25
    if leafy:
        opts = ["hole", "lit"]
        if ctx:
            opts.append("var")
        pick = rng.choice(opts)
        if pick == "hole":
            return EmptyHole(), HOLE
        if pick == "lit":
            return NumLit(rng.randrange(cfg.numeral_bound)), NUM
        x = rng.choice(sorted(ctx))
        return Var(x), ctx[x]
    pick = rng.choice(["asc", "ap", "plus", "nehole", "asc"])
    if pick == "asc":
        t = _gen_typ(rng, depth - 1)
        return Asc(_gen_ana(rng, cfg, ctx, t, depth - 1), t), t
    if pick == "ap":
        fun, t1 = _gen_syn(rng, cfg, ctx, depth - 1)
        m = matched_arrow(t1)
        if m is None:
            fun, m = NonEmptyHole(fun), (HOLE, HOLE)
        arg = _gen_ana(rng, cfg, ctx, m[0], depth - 1)
        return Ap(fun, arg), m[1]
    if pick == "plus":
        return (
            Plus(
                _gen_ana(rng, cfg, ctx, NUM, depth - 1),
                _gen_ana(rng, cfg, ctx, NUM, depth - 1),
            ),
            NUM,
        )
    inner, _ = _gen_syn(rng, cfg, ctx, depth - 1)
    return NonEmptyHole(inner), HOLE


def _gen_ana(
    rng: random.Random, cfg: GenConfig, ctx: Ctx, t: HTyp, depth: int
) -> HExp:
    if depth <= 0:
        return EmptyHole()
    opts = ["hole", "subsume", "case"]
    if matched_arrow(t) is not None:
        opts += ["lam", "lam"]
    if matched_sum(t) is not None:
        opts += ["inj", "inj"]
    pick = rng.choice(opts)
    if pick == "hole":
        return EmptyHole()
    if pick == "lam":
        dom, cod = matched_arrow(t)
        x = rng.choice(cfg.var_pool)
        return Lam(x, _gen_ana(rng, cfg, extend(ctx, x, dom), cod, depth - 1))
    if pick == "inj":
        tl, tr = matched_sum(t)
        side = rng.choice("LR")
        return Inj(side, _gen_ana(rng, cfg, ctx, tl if side == "L" else tr, depth - 1))
    if pick == "case":
        ts = Sum(_gen_typ(rng, depth - 1), _gen_typ(rng, depth - 1))
        if rng.random() < 0.5:
            scrut: HExp = Asc(_gen_ana(rng, cfg, ctx, ts, depth - 1), ts)
        else:
            scrut, ts = EmptyHole(), Sum(HOLE, HOLE)
        x = rng.choice(cfg.var_pool)
        y = rng.choice(cfg.var_pool)
        return Case(
            scrut,
            x,
            _gen_ana(rng, cfg, extend(ctx, x, ts.left), t, depth - 1),
            y,
            _gen_ana(rng, cfg, extend(ctx, y, ts.right), t, depth - 1),
        )
    e, t2 = _gen_syn(rng, cfg, ctx, depth - 1)
    return e if consistent(t, t2) else NonEmptyHole(e)


def gen_htyp(cfg: GenConfig) -> HTyp:
    return _gen_typ(random.Random(cfg.seed), cfg.max_depth)


def gen_welltyped_syn(cfg: GenConfig, ctx: Ctx = EMPTY_CTX) -> Tuple[HExp, HTyp]:
    """A random expression that synthesizes, with its type. Self-checked."""
    e, t = _gen_syn(random.Random(cfg.seed), cfg, ctx, cfg.max_depth)
    assert synthesize(ctx, e) == t
    return e, t


def gen_welltyped_ana(cfg: GenConfig, ctx: Ctx, t: HTyp) -> HExp:
    """A random expression analyzing against t. Self-checked."""
    e = _gen_ana(random.Random(cfg.seed), cfg, ctx, t, cfg.max_depth)
    assert analyze(ctx, e, t)
    return e


def gen_ctx(rng: random.Random, cfg: GenConfig) -> Ctx:
    return {
        x: _gen_typ(rng, 2)
        for x in cfg.var_pool
        if rng.random() < 0.4
    }


# ---------------------------------------------------------------------------
# Reachability witnesses

def reach_up_witness(z: ZExp) -> List[Action]:
    """Move Parent repeated until the cursor is at the root."""
    return [Move(PARENT)] * len(cursor_path(z))


def reach_up_witness_typ(zt: ZTyp) -> List[Action]:
    return [Move(PARENT)] * len(cursor_path_typ(zt))


def reach_down_witness(
    e: HExp, p: Sequence[int]
) -> Union[List[Action], _actions.InvalidChild]:
    """Move Child steps mirroring the path p; from CursorE(e) this replays
    to place_cursor(e, p)."""
    if place_cursor(e, p) is None:
        bad = p[0] if p else 0
        return _actions.InvalidChild(Move(Child(bad or 1)), bad)
    return [Move(Child(n)) for n in p]


def reachability_witness(frm: ZExp, to: ZExp) -> Optional[List[Action]]:
    """Movement-only script turning frm into to, or None when the two
    states are not cursors into the same term."""
    e = erase_exp(frm)
    if e != erase_exp(to):
        return None
    down = reach_down_witness(e, cursor_path(to))
    assert isinstance(down, list)
    return reach_up_witness(frm) + down


# ---------------------------------------------------------------------------
# Constructability witnesses

def _witness_typ(t: HTyp) -> List[Action]:
    """From a cursor on a type hole, build t, ending on t's root."""
    if isinstance(t, Hole):
        return []
    if isinstance(t, Num):
        return [Construct(NumShape())]
    if isinstance(t, Arrow):
        return (
            _witness_typ(t.dom)
            + [Construct(ArrowShape())]
            + _witness_typ(t.cod)
            + [Move(PARENT)]
        )
    return (
        _witness_typ(t.left)
        + [Construct(SumShape())]
        + _witness_typ(t.right)
        + [Move(PARENT)]
    )


def construct_witness_syn(ctx: Ctx, e: HExp) -> List[Action]:
    """Script replaying from the empty hole (synthetic position) to
    CursorE(e). Requires that e synthesizes under ctx."""
    if synthesize(ctx, e) is None:
        raise ValueError("term does not synthesize")
    return _witness_syn(ctx, e)


def construct_witness_ana(ctx: Ctx, e: HExp, t: HTyp) -> List[Action]:
    """Script replaying from the empty hole (analyzing against t) to
    CursorE(e). Requires that e analyzes against t under ctx."""
    if not analyze(ctx, e, t):
        raise ValueError("term does not analyze against the goal type")
    return _witness_ana(ctx, e, t)


def _witness_syn(ctx: Ctx, e: HExp) -> List[Action]:
    if isinstance(e, EmptyHole):
        return []
    if isinstance(e, Var):
        return [Construct(VarShape(e.name))]
    if isinstance(e, NumLit):
        return [Construct(LitShape(e.n))]
    if isinstance(e, Asc):
        return (
            [Construct(AscShape())]
            + _witness_typ(e.t)
            + [Move(PARENT), Move(Child(1))]
            + _witness_ana(ctx, e.e, e.t)
            + [Move(PARENT)]
        )
    if isinstance(e, Ap):
        t_fun = synthesize(ctx, e.fun)
        dom, _ = matched_arrow(t_fun)
        return (
            _witness_syn(ctx, e.fun)
            + [Construct(ApShape())]
            + _witness_ana(ctx, e.arg, dom)
            + [Move(PARENT)]
        )
    if isinstance(e, Plus):
        return (
            [Construct(PlusShape())]
            + _witness_ana(ctx, e.r, NUM)
            + [Move(PARENT), Move(Child(1))]
            + _witness_ana(ctx, e.l, NUM)
            + [Move(PARENT)]
        )
    if isinstance(e, NonEmptyHole):
        return (
            _witness_syn(ctx, e.e)
            + [Construct(NEHoleShape()), Move(PARENT)]
        )
    raise ValueError(f"form never synthesizes: {type(e).__name__}")


def _witness_ana(ctx: Ctx, e: HExp, t: HTyp) -> List[Action]:
    if isinstance(e, EmptyHole):
        return []
    if isinstance(e, Lam):
        dom, cod = matched_arrow(t)
        return (
            [Construct(LamShape(e.x))]
            + _witness_ana(extend(ctx, e.x, dom), e.body, cod)
            + [Move(PARENT)]
        )
    if isinstance(e, Inj):
        tl, tr = matched_sum(t)
        return (
            [Construct(InjShape(e.side))]
            + _witness_ana(ctx, e.e, tl if e.side == "L" else tr)
            + [Move(PARENT)]
        )
    if isinstance(e, Case):
        # Build the scrutinee inside a non-empty hole so its type stays the
        # hole type (whose matched sum exists) at every intermediate step,
        # then finish once the scrutinee is whole.
        t_scrut = synthesize(ctx, e.scrut)
        tl, tr = matched_sum(t_scrut)
        return (
            [Construct(CaseShape(e.x, e.y)), Construct(NEHoleShape())]
            + _witness_syn(ctx, e.scrut)
            + [Move(PARENT), FINISH, Move(PARENT), Move(Child(2))]
            + _witness_ana(extend(ctx, e.x, tl), e.l, t)
            + [Move(PARENT), Move(Child(3))]
            + _witness_ana(extend(ctx, e.y, tr), e.r, t)
            + [Move(PARENT)]
        )
    if isinstance(e, Var):
        return [Construct(VarShape(e.name))]
    if isinstance(e, NumLit):
        return [Construct(LitShape(e.n))]
    if isinstance(e, NonEmptyHole):
        return (
            [Construct(NEHoleShape())]
            + _witness_syn(ctx, e.e)
            + [Move(PARENT)]
        )
    # Asc / Ap / Plus in analytic position: build synthetically inside a
    # non-empty hole (insulating the goal type), then finish.
    return (
        [Construct(NEHoleShape())]
        + _witness_syn(ctx, e)
        + [Move(PARENT), FINISH]
    )


# ---------------------------------------------------------------------------
# Exhaustive rule enumeration (determinism oracle)

def enum_typ(z: ZTyp, a: Action) -> List[ZTyp]:
    out: List[ZTyp] = []
    if isinstance(z, CursorT):
        t = z.t
        if isinstance(a, Move) and isinstance(a.d, Child):
            n = a.d.n
            if isinstance(t, Arrow):
                if n == 1:
                    out.append(ArrowL(CursorT(t.dom), t.cod))
                if n == 2:
                    out.append(ArrowR(t.dom, CursorT(t.cod)))
            if isinstance(t, Sum):
                if n == 1:
                    out.append(SumL(CursorT(t.left), t.right))
                if n == 2:
                    out.append(SumR(t.left, CursorT(t.right)))
        if isinstance(a, Del):
            out.append(CursorT(HOLE))
        if isinstance(a, Construct):
            s = a.s
            if isinstance(s, ArrowShape):
                out.append(ArrowR(t, CursorT(HOLE)))
            if isinstance(s, SumShape):
                out.append(SumR(t, CursorT(HOLE)))
            if isinstance(s, NumShape) and isinstance(t, Hole):
                out.append(CursorT(NUM))
        return _dedup(out)
    if isinstance(a, Move) and isinstance(a.d, Parent) and isinstance(z.z, CursorT):
        out.append(CursorT(erase_typ(z)))
    for sub in enum_typ(z.z, a):
        if isinstance(z, ArrowL):
            out.append(ArrowL(sub, z.cod))
        elif isinstance(z, ArrowR):
            out.append(ArrowR(z.dom, sub))
        elif isinstance(z, SumL):
            out.append(SumL(sub, z.right))
        else:
            out.append(SumR(z.left, sub))
    return _dedup(out)


def _dedup(xs: List) -> List:
    seen = []
    for x in xs:
        if x not in seen:
            seen.append(x)
    return seen


def enum_syn(ctx: Ctx, z: ZExp, t: HTyp, a: Action) -> List[Tuple[ZExp, HTyp]]:
    """Every result derivable for a in synthetic position, one per
    applicable rule, duplicates removed."""
    out: List[Tuple[ZExp, HTyp]] = []
    if isinstance(a, Move):
        m = perform_move(z, a.d)
        if not is_error(m):
            out.append((m, t))
    if isinstance(z, CursorE):
        e = z.e
        if isinstance(a, Del):
            out.append((CursorE(EmptyHole()), HOLE))
        if isinstance(a, Finish) and isinstance(e, NonEmptyHole):
            t_in = synthesize(ctx, e.e)
            if t_in is not None:
                out.append((CursorE(e.e), t_in))
        if isinstance(a, Construct):
            s = a.s
            if isinstance(s, AscShape):
                out.append((AscR(e, CursorT(t)), t))
            if isinstance(s, NEHoleShape):
                out.append((NonEmptyHoleZ(CursorE(e)), HOLE))
            if isinstance(s, ApShape):
                m = matched_arrow(t)
                if m is not None:
                    out.append((ApR(e, CursorE(EmptyHole())), m[1]))
                if inconsistent(t, Arrow(HOLE, HOLE)):
                    out.append((ApR(NonEmptyHole(e), CursorE(EmptyHole())), HOLE))
            if isinstance(s, PlusShape):
                if consistent(t, NUM):
                    out.append((PlusR(e, CursorE(EmptyHole())), NUM))
                if inconsistent(t, NUM):
                    out.append((PlusR(NonEmptyHole(e), CursorE(EmptyHole())), NUM))
            if isinstance(s, CaseShape):
                if matched_sum(t) is not None:
                    out.append(
                        (
                            AscL(
                                CaseL(e, s.x, CursorE(EmptyHole()), s.y, EmptyHole()),
                                HOLE,
                            ),
                            HOLE,
                        )
                    )
                if inconsistent(t, Sum(HOLE, HOLE)):
                    out.append(
                        (
                            AscL(
                                CaseScrut(
                                    NonEmptyHoleZ(CursorE(e)),
                                    s.x,
                                    EmptyHole(),
                                    s.y,
                                    EmptyHole(),
                                ),
                                HOLE,
                            ),
                            HOLE,
                        )
                    )
            if isinstance(e, EmptyHole):
                if isinstance(s, VarShape) and s.x in ctx:
                    out.append((CursorE(Var(s.x)), ctx[s.x]))
                if isinstance(s, LamShape):
                    out.append(
                        (
                            AscR(Lam(s.x, EmptyHole()), ArrowL(CursorT(HOLE), HOLE)),
                            Arrow(HOLE, HOLE),
                        )
                    )
                if isinstance(s, LitShape):
                    out.append((CursorE(NumLit(s.n)), NUM))
                if isinstance(s, InjShape):
                    out.append(
                        (
                            AscR(
                                Inj(s.side, EmptyHole()),
                                SumL(CursorT(HOLE), HOLE),
                            ),
                            Sum(HOLE, HOLE),
                        )
                    )
        return _dedup(out)

    # Zipper rules (any action, so move-rule overlap is checked too).
    if isinstance(z, AscL):
        for sub in enum_ana(ctx, z.z, z.t, a):
            out.append((AscL(sub, z.t), z.t))
    elif isinstance(z, AscR):
        for subt in enum_typ(z.zt, a):
            t2 = erase_typ(subt)
            if analyze(ctx, z.e, t2):
                out.append((AscR(z.e, subt), t2))
    elif isinstance(z, ApL):
        t_fun = synthesize(ctx, erase_exp(z.z))
        if t_fun is not None:
            for sub, t2 in enum_syn(ctx, z.z, t_fun, a):
                m = matched_arrow(t2)
                if m is not None and analyze(ctx, z.arg, m[0]):
                    out.append((ApL(sub, z.arg), m[1]))
    elif isinstance(z, ApR):
        t_fun = synthesize(ctx, z.fun)
        if t_fun is not None:
            m = matched_arrow(t_fun)
            if m is not None:
                for sub in enum_ana(ctx, z.z, m[0], a):
                    out.append((ApR(z.fun, sub), m[1]))
    elif isinstance(z, PlusL):
        for sub in enum_ana(ctx, z.z, NUM, a):
            out.append((PlusL(sub, z.r), NUM))
    elif isinstance(z, PlusR):
        for sub in enum_ana(ctx, z.z, NUM, a):
            out.append((PlusR(z.l, sub), NUM))
    elif isinstance(z, NonEmptyHoleZ):
        t_in = synthesize(ctx, erase_exp(z.z))
        if t_in is not None:
            for sub, _t2 in enum_syn(ctx, z.z, t_in, a):
                out.append((NonEmptyHoleZ(sub), HOLE))
    return _dedup(out)


def enum_ana(ctx: Ctx, z: ZExp, t: HTyp, a: Action) -> List[ZExp]:
    """Every result derivable for a in analytic position under the
    subsumption-minimal discipline: the subsumption rule contributes only
    when no specific rule does."""
    specific: List[ZExp] = []
    if isinstance(a, Move):
        m = perform_move(z, a.d)
        if not is_error(m):
            specific.append(m)
    if isinstance(z, CursorE):
        e = z.e
        if isinstance(a, Del):
            specific.append(CursorE(EmptyHole()))
        if isinstance(a, Finish) and isinstance(e, NonEmptyHole):
            if analyze(ctx, e.e, t):
                specific.append(CursorE(e.e))
        if isinstance(a, Construct):
            s = a.s
            if isinstance(s, AscShape):
                specific.append(AscR(e, CursorT(t)))
            if isinstance(e, EmptyHole):
                if (
                    isinstance(s, VarShape)
                    and s.x in ctx
                    and inconsistent(t, ctx[s.x])
                ):
                    specific.append(NonEmptyHoleZ(CursorE(Var(s.x))))
                if isinstance(s, LamShape):
                    if matched_arrow(t) is not None:
                        specific.append(LamZ(s.x, CursorE(EmptyHole())))
                    if inconsistent(t, Arrow(HOLE, HOLE)):
                        specific.append(
                            NonEmptyHoleZ(
                                AscR(
                                    Lam(s.x, EmptyHole()),
                                    ArrowL(CursorT(HOLE), HOLE),
                                )
                            )
                        )
                if isinstance(s, LitShape) and inconsistent(t, NUM):
                    specific.append(NonEmptyHoleZ(CursorE(NumLit(s.n))))
                if isinstance(s, InjShape):
                    if matched_sum(t) is not None:
                        specific.append(InjZ(s.side, CursorE(EmptyHole())))
                    if inconsistent(t, Sum(HOLE, HOLE)):
                        specific.append(
                            NonEmptyHoleZ(
                                AscR(
                                    Inj(s.side, EmptyHole()),
                                    SumL(CursorT(HOLE), HOLE),
                                )
                            )
                        )
                if isinstance(s, CaseShape):
                    specific.append(
                        CaseScrut(
                            CursorE(EmptyHole()), s.x, EmptyHole(), s.y, EmptyHole()
                        )
                    )
    elif isinstance(z, LamZ):
        m = matched_arrow(t)
        if m is not None:
            for sub in enum_ana(extend(ctx, z.x, m[0]), z.z, m[1], a):
                specific.append(LamZ(z.x, sub))
    elif isinstance(z, InjZ):
        m = matched_sum(t)
        if m is not None:
            for sub in enum_ana(ctx, z.z, m[0] if z.side == "L" else m[1], a):
                specific.append(InjZ(z.side, sub))
    elif isinstance(z, CaseScrut):
        t0 = synthesize(ctx, erase_exp(z.z))
        if t0 is not None:
            for sub, t_plus in enum_syn(ctx, z.z, t0, a):
                m = matched_sum(t_plus)
                if (
                    m is not None
                    and analyze(extend(ctx, z.x, m[0]), z.l, t)
                    and analyze(extend(ctx, z.y, m[1]), z.r, t)
                ):
                    specific.append(CaseScrut(sub, z.x, z.l, z.y, z.r))
    elif isinstance(z, (CaseL, CaseR)):
        t_plus = synthesize(ctx, z.scrut)
        m = matched_sum(t_plus) if t_plus is not None else None
        if m is not None:
            if isinstance(z, CaseL):
                for sub in enum_ana(extend(ctx, z.x, m[0]), z.z, t, a):
                    specific.append(CaseL(z.scrut, z.x, sub, z.y, z.r))
            else:
                for sub in enum_ana(extend(ctx, z.y, m[1]), z.z, t, a):
                    specific.append(CaseR(z.scrut, z.x, z.l, z.y, sub))
    if specific:
        return _dedup(specific)
    # Subsumption, the rule of last resort.
    t_syn = synthesize(ctx, erase_exp(z))
    if t_syn is None:
        return []
    return _dedup(
        [sub for sub, t2 in enum_syn(ctx, z, t_syn, a) if consistent(t, t2)]
    )


# ---------------------------------------------------------------------------
# Fuzzers

def _random_step(
    rng: random.Random, ctx: Ctx, z: ZExp, t: HTyp
) -> Optional[Tuple[Action, ZExp, HTyp]]:
    """One random applicable action, or None if nothing applied in the
    sampled candidates."""
    cands = standard_candidates(ctx, z)
    rng.shuffle(cands)
    for a in cands:
        if isinstance(a, Construct) and isinstance(a.s, LitShape):
            a = Construct(LitShape(rng.randrange(100)))
        r = perform_syn(ctx, z, t, a)
        if not is_error(r):
            return (a, r[0], r[1])
    return None


def _seed_state(
    rng: random.Random, cfg: GenConfig
) -> Tuple[Ctx, ZExp, HTyp]:
    ctx = gen_ctx(rng, cfg)
    e, t = _gen_syn(rng, cfg, ctx, rng.randrange(cfg.max_depth + 1))
    z = place_cursor(e, rng.choice(all_paths(e)))
    assert z is not None
    return ctx, z, t


def fuzz_sensibility(
    cfg: GenConfig, n_cases: int, max_len: int = 50
) -> FuzzReport:
    """Theorem check: every applicable action maps well-typed edit states
    to well-typed edit states (and preserves the one-cursor invariant)."""
    rng = random.Random(cfg.seed)
    failures: List[FuzzFailure] = []
    for _ in range(n_cases):
        ctx, z, t = _seed_state(rng, cfg)
        z0, t0 = z, t
        trace: List[Action] = []
        for i in range(rng.randrange(max_len + 1)):
            step = _random_step(rng, ctx, z, t)
            if step is None:
                break
            a, z, t = step
            trace.append(a)
            if synthesize(ctx, erase_exp(z)) != t or cursor_count(z) != 1:
                failures.append(
                    FuzzFailure(z0, t0, tuple(trace), "sensibility", i)
                )
                break
    return FuzzReport("sensibility", cfg.seed, n_cases, tuple(failures))


def fuzz_move_invariance(cfg: GenConfig, n_cases: int) -> FuzzReport:
    """Theorem check: movement never changes the cursor erasure or the
    synthesized type. Each case is one checked Move action."""
    rng = random.Random(cfg.seed)
    failures: List[FuzzFailure] = []
    checks = 0
    ctx: Ctx = EMPTY_CTX
    z, t = CursorE(EmptyHole()), HOLE
    moves = [Move(Child(n)) for n in (1, 2, 3)] + [Move(PARENT)]
    while checks < n_cases:
        if checks % 16 == 0:
            ctx, z, t = _seed_state(rng, cfg)
        a = rng.choice(moves)
        r = perform_syn(ctx, z, t, a)
        checks += 1
        if not is_error(r):
            z2, t2 = r
            if erase_exp(z2) != erase_exp(z) or t2 != t:
                failures.append(
                    FuzzFailure(z, t, (a,), "move-erasure-invariance", 0)
                )
            z, t = z2, t2
    return FuzzReport("movement", cfg.seed, n_cases, tuple(failures))


def fuzz_determinism(
    cfg: GenConfig, n_cases: int, walk_len: int = 6
) -> FuzzReport:
    """Theorem check: at every reachable state and for every candidate
    action, the engine agrees with the exhaustive rule enumeration and the
    enumeration never derives two distinct results."""
    rng = random.Random(cfg.seed)
    failures: List[FuzzFailure] = []
    for _ in range(n_cases):
        ctx, z, t = _seed_state(rng, cfg)
        for _ in range(rng.randrange(walk_len + 1)):
            step = _random_step(rng, ctx, z, t)
            if step is None:
                break
            _, z, t = step
        for a in standard_candidates(ctx, z):
            r = perform_syn(ctx, z, t, a)
            derivable = enum_syn(ctx, z, t, a)
            expect = [] if is_error(r) else [r]
            if derivable != expect:
                failures.append(FuzzFailure(z, t, (a,), "determinism-syn", 0))
                continue
            ra = perform_ana(ctx, z, t, a)
            derivable_a = enum_ana(ctx, z, t, a)
            expect_a = [] if is_error(ra) else [ra]
            if derivable_a != expect_a:
                failures.append(FuzzFailure(z, t, (a,), "determinism-ana", 0))
    return FuzzReport("determinism", cfg.seed, n_cases, tuple(failures))


def fuzz_reachability(cfg: GenConfig, n_cases: int) -> FuzzReport:
    """Witness check: between any two cursor positions in the same term the
    movement-only witness replays exactly."""
    rng = random.Random(cfg.seed)
    failures: List[FuzzFailure] = []
    for _ in range(n_cases):
        ctx, z0, t = _seed_state(rng, cfg)
        e = erase_exp(z0)
        paths = all_paths(e)
        p1, p2 = rng.choice(paths), rng.choice(paths)
        frm = place_cursor(e, p1)
        to = place_cursor(e, p2)
        w = reachability_witness(frm, to)
        ok = (
            w is not None
            and all(isinstance(a, Move) for a in w)
            and _replay_to(ctx, frm, t, w) == to
        )
        if not ok:
            failures.append(
                FuzzFailure(frm, t, tuple(w or ()), "reachability", 0)
            )
    return FuzzReport("reachability", cfg.seed, n_cases, tuple(failures))


def _replay_to(
    ctx: Ctx, z: ZExp, t: HTyp, actions: Sequence[Action]
) -> Optional[ZExp]:
    r = perform_syn_iter(ctx, z, t, actions)
    if isinstance(r[0], tuple(_actions._ERRORS)):
        return None
    return r[0]


def fuzz_constructability(cfg: GenConfig, n_cases: int) -> FuzzReport:
    """Witness check: the construction script replays from the empty hole
    to the generated term with the same synthesized type."""
    rng = random.Random(cfg.seed)
    failures: List[FuzzFailure] = []
    for _ in range(n_cases):
        ctx = gen_ctx(rng, cfg)
        e, t = _gen_syn(rng, cfg, ctx, rng.randrange(1, cfg.max_depth + 1))
        w = construct_witness_syn(ctx, e)
        r = perform_syn_iter(ctx, CursorE(EmptyHole()), HOLE, w)
        ok = (
            not isinstance(r[0], tuple(_actions._ERRORS))
            and r[0] == CursorE(e)
            and r[1] == t
        )
        if not ok:
            failures.append(
                FuzzFailure(CursorE(EmptyHole()), HOLE, tuple(w), "constructability", 0)
            )
    return FuzzReport("constructability", cfg.seed, n_cases, tuple(failures))


FUZZERS = {
    "sensibility": fuzz_sensibility,
    "movement": fuzz_move_invariance,
    "determinism": fuzz_determinism,
    "reachability": fuzz_reachability,
    "constructability": fuzz_constructability,
}

# ---------------------------------------------------------------------------
# Mutation harness

MUTATIONS = (
    "plus_no_consistency",
    "subsume_first",
    "arrow_child2_goes_left",
    "finish_no_typecheck",
    "asc_no_recheck",
)


@contextmanager
def mutation(name: str) -> Iterator[None]:
    """Temporarily break one named rule of the action engine."""
    if name not in MUTATIONS:
        raise ValueError(f"unknown mutation: {name}")
    _actions._MUTATION = name
    try:
        yield
    finally:
        _actions._MUTATION = None
