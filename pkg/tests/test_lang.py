"""Statics: consistency, matched types, synthesis/analysis, completeness."""

import itertools
import random

import pytest

from holedit.lang import (
    EMPTY_CTX,
    HOLE,
    NUM,
    Ap,
    Arrow,
    Asc,
    EmptyHole,
    Hole,
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
    is_complete_exp,
    is_complete_typ,
    is_var_name,
    matched_arrow,
    matched_sum,
    synthesize,
)
from holedit.metatheory import GenConfig, gen_welltyped_syn


def types_up_to(height):
    """All types of height <= height over {num, hole, arrow, sum}."""
    layer = [NUM, HOLE]
    for _ in range(height - 1):
        layer = [NUM, HOLE] + [
            c(a, b) for c in (Arrow, Sum) for a in layer for b in layer
        ]
    return layer


ALL_T3 = types_up_to(3)


def test_consistency_examples():
    assert consistent(HOLE, Arrow(NUM, NUM))
    assert consistent(NUM, NUM)
    assert not consistent(Arrow(NUM, NUM), NUM)


def test_inconsistency_examples():
    assert inconsistent(NUM, Arrow(NUM, NUM))
    for t in ALL_T3[:50]:
        assert not inconsistent(HOLE, t)
    assert not inconsistent(Arrow(NUM, HOLE), Arrow(NUM, NUM))


def test_consistency_reflexive_symmetric():
    for t in ALL_T3:
        assert consistent(t, t)
    rng = random.Random(0)
    for _ in range(5000):
        a, b = rng.choice(ALL_T3), rng.choice(ALL_T3)
        assert consistent(a, b) == consistent(b, a)


def test_inconsistency_is_complement_of_consistency():
    for a, b in itertools.product(ALL_T3, ALL_T3):
        assert inconsistent(a, b) == (not consistent(a, b))


def test_consistency_not_transitive():
    mid = HOLE
    assert consistent(NUM, mid)
    assert consistent(mid, Arrow(NUM, NUM))
    assert not consistent(NUM, Arrow(NUM, NUM))


def test_consistency_is_equality_on_complete_types():
    complete = [t for t in ALL_T3 if is_complete_typ(t)]
    for a, b in itertools.product(complete, complete):
        assert consistent(a, b) == (a == b)


def test_matched_arrow():
    assert matched_arrow(HOLE) == (HOLE, HOLE)
    assert matched_arrow(Arrow(NUM, NUM)) == (NUM, NUM)
    assert matched_arrow(NUM) is None
    assert matched_arrow(Sum(NUM, NUM)) is None


def test_matched_sum():
    assert matched_sum(HOLE) == (HOLE, HOLE)
    assert matched_sum(Sum(NUM, HOLE)) == (NUM, HOLE)
    assert matched_sum(Arrow(NUM, NUM)) is None


def test_synthesize_examples():
    assert synthesize(EMPTY_CTX, EmptyHole()) == HOLE
    assert synthesize({"x": NUM}, Var("x")) == NUM
    assert synthesize(
        EMPTY_CTX, Asc(Lam("x", EmptyHole()), Arrow(NUM, NUM))
    ) == Arrow(NUM, NUM)
    assert synthesize(EMPTY_CTX, Lam("x", Var("x"))) is None
    assert synthesize(EMPTY_CTX, Var("nope")) is None


def test_synthesize_ap_plus_nehole():
    incr = {"incr": Arrow(NUM, NUM)}
    assert synthesize(incr, Ap(Var("incr"), NumLit(3))) == NUM
    assert synthesize(EMPTY_CTX, Plus(NumLit(1), NumLit(2))) == NUM
    assert synthesize(EMPTY_CTX, NonEmptyHole(NumLit(3))) == HOLE
    # a non-empty hole over a non-synthesizing term does not synthesize
    assert synthesize(EMPTY_CTX, NonEmptyHole(Lam("x", Var("x")))) is None
    # a non-empty hole directly around an empty hole is legal
    assert synthesize(EMPTY_CTX, NonEmptyHole(EmptyHole())) == HOLE


def test_analyze_examples():
    incr = {"incr": Arrow(NUM, NUM)}
    assert analyze(incr, NonEmptyHole(Var("incr")), NUM)
    assert analyze(EMPTY_CTX, Lam("x", Var("x")), Arrow(NUM, NUM))
    assert not analyze(EMPTY_CTX, NumLit(3), Arrow(NUM, NUM))


def test_analyze_sums():
    t = Sum(NUM, Arrow(NUM, NUM))
    assert analyze(EMPTY_CTX, Inj("L", NumLit(1)), t)
    assert analyze(EMPTY_CTX, Inj("R", Lam("x", Var("x"))), t)
    assert not analyze(EMPTY_CTX, Inj("L", Lam("x", Var("x"))), t)


def test_completeness():
    assert is_complete_typ(Arrow(NUM, NUM))
    assert not is_complete_typ(Arrow(NUM, HOLE))
    assert not is_complete_exp(NonEmptyHole(NumLit(3)))
    assert is_complete_exp(
        Asc(Lam("x", Plus(Var("x"), NumLit(1))), Arrow(NUM, NUM))
    )
    assert not is_complete_exp(Lam("x", EmptyHole()))


def test_subsumption_admissibility():
    rng = random.Random(1)
    for seed in range(200):
        e, t = gen_welltyped_syn(GenConfig(seed=seed, max_depth=3))
        assert analyze(EMPTY_CTX, e, t)
        assert analyze(EMPTY_CTX, e, HOLE)
        other = rng.choice(ALL_T3)
        if consistent(other, t):
            assert analyze(EMPTY_CTX, e, other)


def test_weakening():
    for seed in range(100):
        e, t = gen_welltyped_syn(GenConfig(seed=seed, max_depth=3))
        widened = extend(EMPTY_CTX, "totally_fresh", Arrow(NUM, NUM))
        assert synthesize(widened, e) == t


def test_context_extension_replaces():
    ctx = extend(extend(EMPTY_CTX, "x", NUM), "x", HOLE)
    assert ctx["x"] == HOLE and len(ctx) == 1


def test_var_names():
    assert is_var_name("x") and is_var_name("_f9")
    assert not is_var_name("9x")
    assert not is_var_name("")
    for kw in ("num", "inl", "inr", "case"):
        assert not is_var_name(kw)


def test_numlit_range():
    NumLit(0)
    NumLit(2**64 - 1)
    with pytest.raises(ValueError):
        NumLit(-1)
    with pytest.raises(ValueError):
        NumLit(2**64)


def test_inj_side_validated():
    with pytest.raises(ValueError):
        Inj("X", EmptyHole())
