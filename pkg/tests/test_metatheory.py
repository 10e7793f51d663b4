"""Generators, witnesses, fuzzers, oracle, and mutation sensitivity."""

import random

import pytest

from holedit.actions import (
    Child,
    Construct,
    FINISH,
    LamShape,
    Move,
    PARENT,
    is_error,
    perform_syn,
    perform_syn_iter,
)
from holedit.lang import (
    EMPTY_CTX,
    HOLE,
    NUM,
    Arrow,
    Asc,
    EmptyHole,
    Lam,
    NumLit,
    Plus,
    Sum,
    Var,
    analyze,
    synthesize,
)
from holedit.metatheory import (
    MUTATIONS,
    FuzzReport,
    GenConfig,
    construct_witness_ana,
    construct_witness_syn,
    enum_ana,
    enum_syn,
    fuzz_constructability,
    fuzz_determinism,
    fuzz_move_invariance,
    fuzz_reachability,
    fuzz_sensibility,
    gen_welltyped_ana,
    gen_welltyped_syn,
    mutation,
    reach_down_witness,
    reach_up_witness,
    reachability_witness,
)
from holedit.zipper import (
    ApR,
    CursorE,
    LamZ,
    PlusL,
    erase_exp,
    place_cursor,
)


# -- generators -------------------------------------------------------------

def test_generated_syn_terms_are_welltyped():
    for seed in range(300):
        e, t = gen_welltyped_syn(GenConfig(seed=seed))
        assert synthesize(EMPTY_CTX, e) == t


def test_generated_ana_terms_analyze():
    goals = [NUM, Arrow(NUM, NUM), Sum(NUM, HOLE), HOLE]
    for seed in range(200):
        t = goals[seed % len(goals)]
        e = gen_welltyped_ana(GenConfig(seed=seed), EMPTY_CTX, t)
        assert analyze(EMPTY_CTX, e, t)


def test_gen_config_validation():
    with pytest.raises(ValueError):
        GenConfig(seed=0, max_depth=0)
    with pytest.raises(ValueError):
        GenConfig(seed=0, var_pool=())


# -- reachability witnesses -------------------------------------------------

def test_reach_up_witness():
    assert reach_up_witness(CursorE(NumLit(1))) == []
    assert reach_up_witness(LamZ("x", CursorE(EmptyHole()))) == [Move(PARENT)]
    z = ApR(Var("f"), PlusL(CursorE(NumLit(1)), NumLit(2)))
    assert reach_up_witness(z) == [Move(PARENT), Move(PARENT)]


def test_reach_down_witness():
    e = Asc(Lam("x", EmptyHole()), Arrow(NUM, NUM))
    assert reach_down_witness(e, ()) == []
    assert reach_down_witness(e, (1, 1)) == [Move(Child(1)), Move(Child(1))]
    assert is_error(reach_down_witness(NumLit(3), (1,)))


def test_reachability_witness_fig1_lines_7_to_10():
    e = Asc(Lam("x", EmptyHole()), Arrow(NUM, NUM))
    frm = place_cursor(e, ())  # line 8 state: cursor at root
    to = place_cursor(e, (1, 1))  # line 10: cursor on the lambda body
    w = reachability_witness(frm, to)
    assert w == [Move(Child(1)), Move(Child(1))]
    line7 = place_cursor(e, (2,))  # cursor on the ascribed type
    w2 = reachability_witness(line7, to)
    assert w2 == [Move(PARENT), Move(Child(1)), Move(Child(1))]
    t = synthesize(EMPTY_CTX, e)
    r = perform_syn_iter(EMPTY_CTX, line7, t, w2)
    assert r == (to, t)


def test_reachability_witness_absent_on_different_terms():
    assert reachability_witness(CursorE(NumLit(1)), CursorE(NumLit(2))) is None


def test_reachability_identity():
    z = CursorE(Plus(NumLit(1), NumLit(2)))
    w = reachability_witness(z, z)
    assert w == []


# -- constructability witnesses ---------------------------------------------

def test_construct_witness_trivial():
    assert construct_witness_syn(EMPTY_CTX, EmptyHole()) == []


def test_construct_witness_fig1_erasure():
    e = Asc(Lam("x", Plus(Var("x"), NumLit(1))), Arrow(NUM, NUM))
    w = construct_witness_syn(EMPTY_CTX, e)
    r = perform_syn_iter(EMPTY_CTX, CursorE(EmptyHole()), HOLE, w)
    assert r == (CursorE(e), Arrow(NUM, NUM))


def test_construct_witness_precondition_checked():
    with pytest.raises(ValueError):
        construct_witness_syn(EMPTY_CTX, Lam("x", Var("x")))
    with pytest.raises(ValueError):
        construct_witness_ana(EMPTY_CTX, NumLit(1), Arrow(NUM, NUM))


def test_construct_witness_ana_lambda():
    e = Lam("x", Plus(Var("x"), NumLit(1)))
    t = Arrow(NUM, NUM)
    w = construct_witness_ana(EMPTY_CTX, e, t)
    from holedit.actions import perform_ana_iter

    r = perform_ana_iter(EMPTY_CTX, CursorE(EmptyHole()), t, w)
    assert r == CursorE(e)


# -- fuzz suites ------------------------------------------------------------

def test_fuzz_zero_cases_is_empty_report():
    r = fuzz_sensibility(GenConfig(seed=0), 0)
    assert isinstance(r, FuzzReport)
    assert r.cases_run == 0 and r.failures == ()


def test_fuzz_suites_clean_on_correct_engine():
    assert fuzz_sensibility(GenConfig(seed=3), 300).ok
    assert fuzz_move_invariance(GenConfig(seed=4), 2000).ok
    assert fuzz_determinism(GenConfig(seed=5), 120).ok
    assert fuzz_reachability(GenConfig(seed=6), 300).ok
    assert fuzz_constructability(GenConfig(seed=7), 300).ok


def test_fuzz_reproducible_per_seed():
    a = fuzz_sensibility(GenConfig(seed=42), 50)
    b = fuzz_sensibility(GenConfig(seed=42), 50)
    assert a == b
    c = fuzz_determinism(GenConfig(seed=42), 20)
    d = fuzz_determinism(GenConfig(seed=42), 20)
    assert c == d


# -- oracle spot checks ------------------------------------------------------

def test_enum_matches_engine_on_empty_hole():
    z, t = CursorE(EmptyHole()), HOLE
    a = Construct(LamShape("x"))
    r = perform_syn(EMPTY_CTX, z, t, a)
    assert enum_syn(EMPTY_CTX, z, t, a) == [r]
    # analytic against a matched arrow: the specific rule wins
    goal = Arrow(NUM, NUM)
    assert enum_ana(EMPTY_CTX, z, goal, a) == [LamZ("x", CursorE(EmptyHole()))]


def test_enum_empty_when_engine_rejects():
    z, t = CursorE(NumLit(3)), NUM
    assert enum_syn(EMPTY_CTX, z, t, FINISH) == []
    assert is_error(perform_syn(EMPTY_CTX, z, t, FINISH))


# -- mutation sensitivity ----------------------------------------------------

def _suite_results(seed):
    cfg = GenConfig(seed=seed)
    out = {}
    for name, report in [
        ("sensibility", fuzz_sensibility(cfg, 400)),
        ("movement", fuzz_move_invariance(cfg, 3000)),
        ("determinism", fuzz_determinism(cfg, 150)),
        ("reachability", fuzz_reachability(cfg, 400)),
        ("constructability", fuzz_constructability(cfg, 400)),
    ]:
        out[name] = report.ok
    return out


@pytest.mark.parametrize("name", MUTATIONS)
def test_each_mutation_is_caught(name):
    with mutation(name):
        results = _suite_results(11)
    assert not all(results.values()), f"mutation {name} went undetected: {results}"


def test_mutation_harness_restores_engine():
    with mutation(MUTATIONS[0]):
        pass
    assert fuzz_sensibility(GenConfig(seed=1), 50).ok


def test_unknown_mutation_rejected():
    with pytest.raises(ValueError):
        with mutation("not_a_mutation"):
            pass
