"""One-cursor trees: erasure, paths, placement, structural audit."""

import random

from holedit.lang import (
    HOLE,
    NUM,
    Ap,
    Arrow,
    Asc,
    Case,
    EmptyHole,
    Inj,
    Lam,
    NonEmptyHole,
    NumLit,
    Plus,
    Sum,
    Var,
)
from holedit.metatheory import GenConfig, gen_welltyped_syn
from holedit.zipper import (
    ApR,
    ArrowL,
    AscR,
    CaseR,
    CursorE,
    CursorT,
    InjZ,
    LamZ,
    NonEmptyHoleZ,
    PlusL,
    SumR,
    all_paths,
    cursor_count,
    cursor_path,
    erase_exp,
    erase_typ,
    place_cursor,
    root_cursor,
)


def test_erase_typ_examples():
    assert erase_typ(CursorT(NUM)) == NUM
    assert erase_typ(ArrowL(CursorT(NUM), HOLE)) == Arrow(NUM, HOLE)
    assert erase_typ(SumR(NUM, CursorT(HOLE))) == Sum(NUM, HOLE)


def test_erase_exp_examples():
    assert erase_exp(CursorE(EmptyHole())) == EmptyHole()
    line2 = AscR(Lam("x", EmptyHole()), ArrowL(CursorT(HOLE), HOLE))
    assert erase_exp(line2) == Asc(Lam("x", EmptyHole()), Arrow(HOLE, HOLE))
    line17 = ApR(Var("incr"), CursorE(NonEmptyHole(Var("incr"))))
    assert erase_exp(line17) == Ap(Var("incr"), NonEmptyHole(Var("incr")))


def test_erasure_covers_every_constructor():
    scrut = Asc(EmptyHole(), Sum(NUM, NUM))
    everything = Asc(
        Lam(
            "x",
            Plus(
                Case(scrut, "a", Var("a"), "b", NumLit(0)),
                Ap(NonEmptyHole(Inj("L", EmptyHole())), NumLit(1)),
            ),
        ),
        Arrow(Sum(HOLE, NUM), NUM),
    )
    for p in all_paths(everything):
        z = place_cursor(everything, p)
        assert z is not None
        assert erase_exp(z) == everything
        assert cursor_count(z) == 1
        assert cursor_path(z) == p


def test_root_cursor():
    assert root_cursor(EmptyHole()) == CursorE(EmptyHole())
    assert root_cursor(NumLit(3)) == CursorE(NumLit(3))
    e = Plus(NumLit(1), NumLit(2))
    assert erase_exp(root_cursor(e)) == e


def test_cursor_path_examples():
    assert cursor_path(CursorE(NumLit(3))) == ()
    assert place_cursor(Ap(Var("f"), NumLit(3)), (2,)) == ApR(
        Var("f"), CursorE(NumLit(3))
    )
    assert place_cursor(NumLit(3), (1,)) is None
    assert place_cursor(Plus(NumLit(1), NumLit(2)), (3,)) is None


def test_path_into_ascribed_type():
    e = Asc(EmptyHole(), Arrow(NUM, HOLE))
    z = place_cursor(e, (2, 1))
    assert isinstance(z, AscR)
    assert cursor_path(z) == (2, 1)
    assert erase_exp(z) == e


def test_place_cursor_round_trip_generated():
    rng = random.Random(5)
    for seed in range(300):
        e, _t = gen_welltyped_syn(GenConfig(seed=seed, max_depth=4))
        paths = all_paths(e)
        for p in rng.sample(paths, min(5, len(paths))):
            z = place_cursor(e, p)
            assert z is not None
            assert cursor_path(z) == p
            assert erase_exp(z) == e
            assert cursor_count(z) == 1


def test_case_child_numbering():
    e = Case(EmptyHole(), "x", NumLit(1), "y", NumLit(2))
    z3 = place_cursor(e, (3,))
    assert isinstance(z3, CaseR)
    assert z3.z == CursorE(NumLit(2))


def test_single_child_forms():
    assert isinstance(place_cursor(Lam("x", EmptyHole()), (1,)), LamZ)
    assert isinstance(place_cursor(NonEmptyHole(NumLit(1)), (1,)), NonEmptyHoleZ)
    assert isinstance(place_cursor(Inj("R", NumLit(1)), (1,)), InjZ)
    assert place_cursor(Lam("x", EmptyHole()), (2,)) is None


def test_all_paths_counts():
    # plus node: root, two leaves
    assert len(all_paths(Plus(NumLit(1), NumLit(2)))) == 3
    # ascription includes its type's positions
    assert len(all_paths(Asc(EmptyHole(), Arrow(NUM, NUM)))) == 5
    assert isinstance(place_cursor(Plus(NumLit(1), NumLit(2)), (1,)), PlusL)
