import numpy as np
import pytest
from hypothesis import given, strategies as st

from knotfourier.braid_core import (
    BraidError,
    BraidWord,
    FreeGroupWord,
    Permutation,
    artin_action,
    braids_equal,
    comb,
    cycle_count,
    identity,
    is_identity_braid,
    is_pure,
    lift_permutation,
    linking_matrix,
    permutation_of,
    pure_generator_word,
    uncomb,
)

from oracles import burau, strand_tracking


def words(max_width=6, max_len=20, min_width=2):
    @st.composite
    def build(draw):
        s = draw(st.integers(min_width, max_width))
        gens = st.integers(1, s - 1).flatmap(lambda g: st.sampled_from([g, -g]))
        return BraidWord(s, tuple(draw(st.lists(gens, max_size=max_len))))
    return build()


@st.composite
def pure_words(draw, max_width=5, max_factors=8):
    s = draw(st.integers(2, max_width))
    out = identity(s)
    for _ in range(draw(st.integers(0, max_factors))):
        i = draw(st.integers(1, s - 1))
        j = draw(st.integers(i + 1, s))
        out = out * pure_generator_word(s, i, j) ** draw(st.sampled_from([1, -1]))
    return out


# --- types --------------------------------------------------------------------


def test_braid_word_validation():
    with pytest.raises(BraidError):
        BraidWord(2, (2,))
    with pytest.raises(BraidError):
        BraidWord(3, (0,))
    assert len(identity(4)) == 0


def test_free_group_word_is_reduced():
    assert FreeGroupWord((1, 2, -2, -1, 3)).letters == (3,)
    assert FreeGroupWord((1, -1)).letters == ()


def test_to_text_roundtrip():
    w = BraidWord(3, (1, -2, 2, 1))
    assert w.to_text() == "1 -2 2 1"


# --- permutations ---------------------------------------------------------------


def test_permutation_examples():
    assert permutation_of(BraidWord(2, (1,))) == Permutation.from_cycles(2, [(1, 2)])
    assert permutation_of(identity(4)).is_identity()
    p = permutation_of(BraidWord(3, (1, 2)))
    assert (p(1), p(2), p(3)) == (2, 3, 1)


def test_cycle_count_examples():
    assert cycle_count(Permutation.identity(4)) == 4
    assert cycle_count(Permutation.from_cycles(2, [(1, 2)])) == 1
    assert cycle_count(permutation_of(BraidWord(3, (1, 2)))) == 1


@given(words())
def test_permutation_matches_strand_tracking(w):
    images, _ = strand_tracking(w.width, w.letters)
    assert list(permutation_of(w).images) == images


@given(words(), words())
def test_permutation_is_a_homomorphism(u, v):
    s = max(u.width, v.width)
    u, v = u.widened(s), v.widened(s)
    assert permutation_of(u * v) == permutation_of(u) * permutation_of(v)


def test_permutation_inverse_and_composition():
    p = Permutation.from_cycles(4, [(1, 3, 4)])
    assert (p * p.inverse()).is_identity()
    assert Permutation.from_cycles(4, [(1, 2)]) * Permutation.from_cycles(4, [(2, 3)]) == \
        Permutation.from_cycles(4, [(1, 2, 3)])


# --- Artin action ---------------------------------------------------------------


def test_artin_action_examples():
    assert [x.letters for x in artin_action(BraidWord(2, (1,)))] == [(1, 2, -1), (1,)]
    assert [x.letters for x in artin_action(identity(3))] == [(1,), (2,), (3,)]
    assert [x.letters for x in artin_action(BraidWord(2, (1, -1)))] == [(1,), (2,)]


def test_braids_equal_examples():
    assert braids_equal(BraidWord(3, (1, 2, 1)), BraidWord(3, (2, 1, 2)))
    assert not braids_equal(BraidWord(2, (1,)), BraidWord(2, (-1,)))
    assert braids_equal(BraidWord(3, (1, 2, 1, -2, -1, -2)), identity(3))


@given(words())
def test_word_times_inverse_is_trivial(w):
    assert permutation_of(w * w.inverse()).is_identity()
    assert braids_equal(w * w.inverse(), identity(w.width))


def _substitute(images, word):
    out = []
    for g in word:
        img = images[abs(g) - 1].letters
        out.extend(img if g > 0 else tuple(-x for x in reversed(img)))
    return FreeGroupWord(tuple(out))


@given(words(max_len=30), words(max_len=30))
def test_artin_action_respects_composition(u, v):
    s = max(u.width, v.width)
    u, v = u.widened(s), v.widened(s)
    au, av, auv = artin_action(u), artin_action(v), artin_action(u * v)
    # the action of u*v is: apply v's images, then rewrite through u
    assert auv == [_substitute(au, x.letters) for x in av]


@given(words())
def test_artin_action_abelianizes_to_the_permutation(w):
    images = artin_action(w)
    p = permutation_of(w)
    for k, x in enumerate(images, start=1):
        counts = {}
        for g in x.letters:
            counts[abs(g)] = counts.get(abs(g), 0) + (1 if g > 0 else -1)
        nonzero = {g: c for g, c in counts.items() if c}
        # x_k goes to a conjugate of a single generator
        assert list(nonzero.values()) == [1]
        (gen,) = nonzero
        assert p.inverse()(gen) == k or p(k) == gen


@given(words(max_width=3, max_len=12), words(max_width=3, max_len=12))
def test_braids_equal_agrees_with_burau_on_b3(u, v):
    u, v = u.widened(3), v.widened(3)
    assert braids_equal(u, v) == (burau(3, u.letters) == burau(3, v.letters))


@given(words(max_width=6, max_len=14))
def test_equal_braids_have_equal_burau(w):
    # rewrite with a braid relation and a far commutation where possible
    s = w.width
    rewritten = list(w.letters)
    mid = len(rewritten) // 2
    if s >= 3:
        # sigma1 sigma2 sigma1 (sigma2 sigma1 sigma2)^-1 is trivial
        rewritten[mid:mid] = [1, 2, 1, -2, -1, -2]
    if s >= 4:
        rewritten[:0] = [1, 3, -1, -3]
    v = BraidWord(s, tuple(rewritten))
    assert braids_equal(w, v)
    assert burau(s, w.letters) == burau(s, v.letters)


# --- pure braids ----------------------------------------------------------------


def test_is_pure_examples():
    assert is_pure(BraidWord(2, (1, 1)))
    assert not is_pure(BraidWord(2, (1,)))
    assert not is_pure(BraidWord(3, (1, -2, 1, -2)))


def test_pure_generator_word_examples():
    assert pure_generator_word(2, 1, 2).letters == (1, 1)
    assert pure_generator_word(3, 1, 3).letters == (2, 1, 1, -2)
    assert pure_generator_word(4, 2, 4).letters == (3, 2, 2, -3)
    with pytest.raises(BraidError):
        pure_generator_word(3, 2, 2)


def test_linking_matrix_examples():
    assert linking_matrix(BraidWord(2, (1, 1))).tolist() == [[0, 2], [2, 0]]
    assert not linking_matrix(identity(3)).any()
    m = linking_matrix(pure_generator_word(3, 1, 3))
    assert m.tolist() == [[0, 0, 2], [0, 0, 0], [2, 0, 0]]
    with pytest.raises(BraidError):
        linking_matrix(BraidWord(2, (1,)), require_pure=True)


@given(words())
def test_linking_matrix_matches_strand_tracking(w):
    _, lk = strand_tracking(w.width, w.letters)
    assert linking_matrix(w).tolist() == lk


@given(pure_words(), st.integers(0, 40), st.integers(1, 4))
def test_linking_matrix_ignores_cancelling_pairs(w, pos, g):
    g = min(g, w.width - 1)
    pos = min(pos, len(w))
    letters = w.letters[:pos] + (g, -g) + w.letters[pos:]
    assert np.array_equal(linking_matrix(w), linking_matrix(BraidWord(w.width, letters)))


def test_comb_examples():
    assert comb(BraidWord(2, (1, 1))) == [(1, 2, 1)]
    assert comb(identity(3)) == []
    w = BraidWord(3, (2, 1, 1, -2))
    assert braids_equal(uncomb(3, comb(w)), w)
    assert comb(w) == [(1, 3, 1)]
    with pytest.raises(BraidError, match="not a pure braid"):
        comb(BraidWord(2, (1,)))


@given(pure_words())
def test_comb_recombines_to_input(w):
    factors = comb(w)
    assert all(1 <= i < j <= w.width and e in (1, -1) for i, j, e in factors)
    assert braids_equal(uncomb(w.width, factors), w)


@given(pure_words())
def test_comb_is_deterministic(w):
    assert comb(w) == comb(BraidWord(w.width, w.letters))


@given(st.permutations(range(1, 7)))
def test_lift_permutation_is_positive(images):
    p = Permutation(tuple(images))
    w = lift_permutation(p)
    assert all(g > 0 for g in w.letters)
    assert permutation_of(w) == p


def test_is_identity_braid():
    commutator = BraidWord(3, (1, 2, -1, -2))
    assert not is_identity_braid(commutator)
    # [s1, s2]^2 [s2, s1]^2 cancels
    assert is_identity_braid(commutator ** 2 * BraidWord(3, (2, 1, -2, -1)) ** 2)
    assert is_identity_braid(BraidWord(3, (1, 2, 1, -2, -1, -2)))
