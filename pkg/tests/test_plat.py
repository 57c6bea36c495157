import json

import pytest
from hypothesis import given, strategies as st

from knotfourier.braid_core import BraidWord, braids_equal, identity, is_pure, permutation_of
from knotfourier.diagram import determinant, jones, pd_from_closure, pd_from_plat
from knotfourier.plat import (
    CheckerboardDiagram,
    HildenMove,
    Plat,
    PlatError,
    apply_hilden_move,
    checkerboard_from_plat,
    checkerboard_word,
    closure_to_plat,
    normalize_plat,
    pi0,
    plat_components,
)
from knotfourier.braid_core import Permutation
from knotfourier.rosette import RosetteBraid, RosetteCache


def plat(*letters, b=2):
    return Plat(BraidWord(2 * b, letters))


@st.composite
def knot_plats(draw, max_b=3, max_len=10):
    b = draw(st.integers(1, max_b))
    gens = st.integers(1, 2 * b - 1).flatmap(lambda g: st.sampled_from([g, -g]))
    p = Plat(BraidWord(2 * b, tuple(draw(st.lists(gens, max_size=max_len)))))
    if plat_components(p) != 1:
        # sigma_2 sigma_4 ... joins every cap into one component
        p = Plat(p.braid * BraidWord(2 * b, tuple(range(2, 2 * b - 1, 2))))
    if plat_components(p) != 1:
        p = Plat(BraidWord(2 * b, tuple(range(2, 2 * b - 1, 2))))
    return p


def test_plat_validation():
    with pytest.raises(PlatError):
        Plat(BraidWord(3, ()))
    assert plat(2).b == 2


def test_plat_json_roundtrip():
    p = plat(1, -2, 3)
    assert Plat.from_json(json.loads(json.dumps(p.to_json()))) == p


def test_components_examples():
    assert plat_components(Plat(identity(4))) == 2
    assert plat_components(plat(2)) == 1
    assert plat_components(plat(2, 2, 2)) == 1


def test_pi0_examples():
    assert pi0(1).is_identity()
    assert pi0(2) == Permutation.from_cycles(4, [(2, 3)])
    assert pi0(3) == Permutation.from_cycles(6, [(2, 3), (4, 5)])


def test_move_validation():
    with pytest.raises(PlatError):
        HildenMove("spin", 1)
    with pytest.raises(PlatError):
        HildenMove("top_cap_swap", 2).word(2)
    with pytest.raises(PlatError):
        HildenMove("top_twist", 1, sign=2)


def test_move_examples():
    q = apply_hilden_move(plat(2), HildenMove("top_twist", 1, 1))
    assert q.braid.letters == (1, 2) and plat_components(q) == 1
    q = apply_hilden_move(Plat(identity(4)), HildenMove("bottom_twist", 2, -1))
    assert q.braid.letters == (-3,) and plat_components(q) == 2
    q = apply_hilden_move(plat(2, 2, 2), HildenMove("top_cap_swap", 1))
    assert determinant(pd_from_plat(q)) == 3


@given(knot_plats(), st.lists(st.tuples(
    st.sampled_from(["top_twist", "top_cap_swap", "bottom_twist", "bottom_cap_swap"]),
    st.integers(1, 3), st.sampled_from([1, -1])), max_size=4))
def test_moves_preserve_the_closure(p, moves):
    before = pd_from_plat(p)
    q = p
    for kind, pos, sign in moves:
        limit = q.b if kind.endswith("twist") else q.b - 1
        if pos > limit:
            continue
        q = apply_hilden_move(q, HildenMove(kind, pos, sign))
    assert plat_components(q) == 1
    after = pd_from_plat(q)
    assert determinant(after) == determinant(before)
    assert jones(after) == jones(before)


def test_normalize_examples():
    q, moves = normalize_plat(plat(2, 2, 2))
    assert q == plat(2, 2, 2) and moves == []
    q, moves = normalize_plat(plat(2))
    assert q == plat(2) and moves == []
    p = plat(1, -2)
    q, moves = normalize_plat(p)
    assert permutation_of(q.braid) == pi0(2)
    assert determinant(pd_from_plat(q)) == determinant(pd_from_plat(p))
    with pytest.raises(PlatError, match="not a knot"):
        normalize_plat(Plat(identity(4)))


@given(knot_plats())
def test_normalize_reaches_pi0(p):
    q, moves = normalize_plat(p)
    assert permutation_of(q.braid) == pi0(p.b)
    assert determinant(pd_from_plat(q)) == determinant(pd_from_plat(p))
    evens = BraidWord(2 * p.b, tuple(range(2, 2 * p.b - 1, 2)))
    assert is_pure(evens * q.braid)
    # replaying the moves gives the same plat
    r = p
    for m in moves:
        r = apply_hilden_move(r, m)
    assert r == q


def test_closure_to_plat_examples():
    for w, det in [(BraidWord(2, (1, 1, 1)), 3), (BraidWord(2, (1,)), 1),
                   (BraidWord(3, (1, -2, 1, -2)), 5)]:
        p = closure_to_plat(w)
        assert p.braid.width == 2 * w.width
        assert plat_components(p) == 1
        assert determinant(pd_from_plat(p)) == det
    with pytest.raises(PlatError, match="not a knot"):
        closure_to_plat(BraidWord(2, (1, 1)))


@given(st.integers(2, 4), st.data())
def test_closure_to_plat_preserves_jones(s, data):
    gens = st.integers(1, s - 1).flatmap(lambda g: st.sampled_from([g, -g]))
    w = BraidWord(s, tuple(data.draw(st.lists(gens, max_size=7))) + tuple(range(1, s)))
    from knotfourier.braid_core import cycle_count
    if cycle_count(permutation_of(w)) != 1:
        return
    assert jones(pd_from_plat(closure_to_plat(w))) == jones(pd_from_closure(w))


# --- checkerboard ---------------------------------------------------------------


def test_checkerboard_examples(tmp_cache):
    d = checkerboard_from_plat(plat(2, 2, 2), tmp_cache)
    assert d.b == 2 and d.epsilons == (-1,) and d.type == (4, 8)
    assert braids_equal(checkerboard_word(d), BraidWord(4, (2, 2, 2)))
    assert determinant(pd_from_plat(Plat(checkerboard_word(d)))) == 3
    d = checkerboard_from_plat(plat(2), tmp_cache)
    assert d.type == (4, 4)
    with pytest.raises(PlatError, match="not normalized"):
        checkerboard_from_plat(plat(1, -2), tmp_cache)


def test_width_two_plats_normalize_first(tmp_cache):
    # odd powers of sigma_1 are not normalized; one twist makes them pure
    p = Plat(BraidWord(2, (1, 1, 1)))
    q, moves = normalize_plat(p)
    d = checkerboard_from_plat(q, tmp_cache)
    assert d.epsilons == () and d.rosette.n % 2 == 0
    assert braids_equal(checkerboard_word(d), q.braid)


def test_checkerboard_word_examples():
    assert checkerboard_word(CheckerboardDiagram(2, (1,), RosetteBraid(4, 0, ()))).letters == (2,)
    assert checkerboard_word(CheckerboardDiagram(1, (), RosetteBraid.from_rows(2, [(1,)]))).letters == (1,)
    d = CheckerboardDiagram(2, (-1,), RosetteBraid.from_rows(4, [(1, 1, 1)]))
    assert checkerboard_word(d).letters == (-2, 1, 3, 2)


def test_checkerboard_validation():
    with pytest.raises(PlatError):
        CheckerboardDiagram(2, (), RosetteBraid(4, 0, ()))
    with pytest.raises(PlatError):
        CheckerboardDiagram(2, (1,), RosetteBraid(3, 0, ()))


@given(knot_plats(max_b=3, max_len=8))
def test_checkerboard_of_normalized_plats(p):
    q, _ = normalize_plat(p)
    d = checkerboard_from_plat(q, RosetteCache())
    assert d.rosette.n % (2 * p.b) == 0
    assert braids_equal(checkerboard_word(d), q.braid)
    assert determinant(pd_from_plat(Plat(checkerboard_word(d)))) == determinant(pd_from_plat(p))


def test_checkerboard_json_roundtrip(tmp_cache):
    d = checkerboard_from_plat(plat(2, 2, 2), tmp_cache)
    assert CheckerboardDiagram.from_json(json.loads(json.dumps(d.to_json()))) == d
