"""Exact arithmetic in the braid group B_s.

Conventions used throughout the package:

* A braid word is a tuple of signed generator indices: ``k`` is sigma_k and
  ``-k`` is its inverse.  Letters are read left to right, top to bottom.
* ``permutation_of`` is the homomorphism B_s -> S_s sending sigma_i to the
  transposition (i i+1), with ``p * q`` meaning "apply q, then p".  Entry k of
  the result is the start position of the strand that ends at position k.
* The Artin action sends sigma_i to x_i -> x_i x_{i+1} x_i^-1,
  x_{i+1} -> x_i and composes like the permutation, so abelianising the
  images recovers ``permutation_of``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _accel


class BraidError(ValueError):
    """Raised for malformed braids or violated preconditions."""


class BraidLetter(NamedTuple):
    index: int
    sign: int


@dataclass(frozen=True)
class BraidWord:
    width: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.width < 1:
            raise BraidError(f"width must be >= 1, got {self.width}")
        letters = tuple(int(g) for g in self.letters)
        for g in letters:
            if g == 0 or abs(g) >= self.width:
                raise BraidError(
                    f"generator {g} out of range for width {self.width}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def from_letters(cls, width: int, letters: Iterable[BraidLetter]) -> BraidWord:
        return cls(width, tuple(l.index * l.sign for l in letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return (BraidLetter(abs(g), 1 if g > 0 else -1) for g in self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.width != self.width:
            raise BraidError("incompatible widths")
        return BraidWord(self.width, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.width, base.letters * abs(k))

    def inverse(self) -> BraidWord:
        return BraidWord(self.width, tuple(-g for g in reversed(self.letters)))

    def widened(self, width: int) -> BraidWord:
        """The same word viewed in B_width (extra strands on the right)."""
        if width < self.width:
            raise BraidError("cannot narrow a braid word")
        return BraidWord(width, self.letters)

    def shifted(self, offset: int, width: int) -> BraidWord:
        """The word acting on strands offset+1 .. offset+self.width of B_width."""
        return BraidWord(width, tuple(g + offset if g > 0 else g - offset
                                      for g in self.letters))

    def to_text(self) -> str:
        return " ".join(str(g) for g in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return f"<id in B_{self.width}>"
        parts = [f"s{abs(g)}" + ("" if g > 0 else "^-1") for g in self.letters]
        return " ".join(parts)


def identity(width: int) -> BraidWord:
    return BraidWord(width, ())


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1..n}; ``images[k-1]`` is the image of k."""

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise BraidError(f"not a permutation: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> Permutation:
        images = list(range(1, n + 1))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __mul__(self, other: Permutation) -> Permutation:
        # (p * q)(k) = p(q(k))
        if other.size != self.size:
            raise BraidError("incompatible widths")
        return Permutation(tuple(self.images[q - 1] for q in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * self.size
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(v == k for k, v in enumerate(self.images, start=1))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, self.size + 1):
            if start in seen:
                continue
            cyc = []
            k = start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)


@dataclass(frozen=True)
class FreeGroupWord:
    """Freely reduced word in x_1..x_s; letters are signed generator indices."""

    letters: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", _accel.free_reduce(tuple(self.letters)))

    def __mul__(self, other: FreeGroupWord) -> FreeGroupWord:
        return FreeGroupWord(self.letters + other.letters)

    def inverse(self) -> FreeGroupWord:
        return FreeGroupWord(tuple(-g for g in reversed(self.letters)))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"x{abs(g)}" + ("" if g > 0 else "^-1")
                        for g in self.letters)


def permutation_of(w: BraidWord) -> Permutation:
    images = list(range(1, w.width + 1))
    for g in w.letters:
        i = abs(g) - 1
        images[i], images[i + 1] = images[i + 1], images[i]
    return Permutation(tuple(images))


def cycle_count(p: Permutation) -> int:
    return len(p.cycles())


def artin_action(w: BraidWord) -> list[FreeGroupWord]:
    return [FreeGroupWord(im) for im in _accel.artin_images(w.width, w.letters)]


def braids_equal(a: BraidWord, b: BraidWord) -> bool:
    if a.width != b.width:
        raise BraidError("incompatible widths")
    # a == b iff a b^-1 acts trivially; one action evaluation is cheaper
    # than two when the words share structure.
    images = _accel.artin_images(a.width, a.letters + b.inverse().letters)
    return all(im == (k,) for k, im in enumerate(images, start=1))


def is_identity_braid(w: BraidWord) -> bool:
    return braids_equal(w, identity(w.width))


def is_pure(w: BraidWord) -> bool:
    return permutation_of(w).is_identity()


def pure_generator_word(s: int, i: int, j: int) -> BraidWord:
    """Band generator A_{i,j} = (s_{j-1}..s_{i+1}) s_i^2 (s_{i+1}^-1..s_{j-1}^-1)."""
    if not (1 <= i < j <= s):
        raise BraidError(f"need 1 <= i < j <= s, got s={s}, i={i}, j={j}")
    down = tuple(range(j - 1, i, -1))
    return BraidWord(s, down + (i, i) + tuple(-g for g in reversed(down)))


def linking_matrix(w: BraidWord, require_pure: bool = False) -> np.ndarray:
    """Signed crossing counts between strands, indexed by start position."""
    if require_pure and not is_pure(w):
        raise BraidError("not a pure braid")
    s = w.width
    lk = np.zeros((s, s), dtype=np.int64)
    strands = list(range(s))
    for g in w.letters:
        i = abs(g) - 1
        a, b = strands[i], strands[i + 1]
        sign = 1 if g > 0 else -1
        lk[a, b] += sign
        lk[b, a] += sign
        strands[i], strands[i + 1] = b, a
    return lk


# --- combing -----------------------------------------------------------------
#
# A pure braid on n strands is split as u * v with u in the free subgroup U_n
# generated by a_k = A_{k,n} (k < n) and v a pure braid on n-1 strands.
# Moving strand n with the transport braids T_q = s_{n-1} ... s_q rewrites
# every letter as either a letter on strands 1..n-1 or some a_k^{+-1}; the a's
# are then pushed left through the remaining letters using the conjugation
# action of s_j (j <= n-2) on U_n, which is a free-group automorphism.


def _conj_image(j: int, e: int, k: int) -> tuple[int, ...]:
    """s_j^e a_k s_j^-e as a word in the a's (signed indices k)."""
    if k == j:
        return (j + 1,) if e > 0 else (j, j + 1, -j)
    if k == j + 1:
        return (-(j + 1), j, j + 1) if e > 0 else (j,)
    return (k,)


def _conjugate_free(j: int, e: int, word: Sequence[int]) -> list[int]:
    out: list[int] = []
    for g in word:
        img = _conj_image(j, e, abs(g))
        if g < 0:
            img = tuple(-h for h in reversed(img))
        out.extend(img)
    return list(_accel.free_reduce(tuple(out)))


def _split_last_strand(n: int, letters: Sequence[int]) -> tuple[list[int], list[int]]:
    """Write a pure braid on n strands as (word in a_k) * (letters on n-1 strands)."""
    q = n
    tokens: list[tuple[str, int]] = []
    for g in letters:
        i, e = abs(g), (1 if g > 0 else -1)
        if i + 1 < q:
            tokens.append(("s", g))
        elif i > q:
            tokens.append(("s", (i - 1) * e))
        elif i + 1 == q:
            if e < 0:
                tokens.append(("a", -(q - 1)))
            q -= 1
        else:
            if e > 0:
                tokens.append(("a", q))
            q += 1
    if q != n:
        raise BraidError("not a pure braid")
    free: list[int] = []
    rest: list[int] = []
    for kind, val in tokens:
        if kind == "s":
            rest.append(val)
            continue
        word = [val]
        for g in reversed(rest):
            word = _conjugate_free(abs(g), 1 if g > 0 else -1, word)
        free = list(_accel.free_reduce(tuple(free + word)))
    return free, rest


def comb(w: BraidWord) -> list[tuple[int, int, int]]:
    """Factor a pure braid as a product of band generators A_{i,j}^{+-1}.

    Returns ``[(i, j, sign), ...]`` whose product, in order, equals ``w``.
    Factors with j = s come first, then j = s-1, and so on.
    """
    if not is_pure(w):
        raise BraidError("not a pure braid")
    out: list[tuple[int, int, int]] = []
    letters = list(w.letters)
    for n in range(w.width, 1, -1):
        free, letters = _split_last_strand(n, letters)
        out.extend((abs(g), n, 1 if g > 0 else -1) for g in free)
    return out


def uncomb(s: int, factors: Iterable[tuple[int, int, int]]) -> BraidWord:
    """Concatenate band generator words; inverse of ``comb`` up to equality."""
    letters: list[int] = []
    for i, j, sign in factors:
        letters.extend((pure_generator_word(s, i, j) ** sign).letters)
    return BraidWord(s, tuple(letters))


def lift_permutation(p: Permutation) -> BraidWord:
    """Positive braid word with ``permutation_of(word) == p``.

    Bubble sort on the array of ``p``'s images; each swap appends one
    positive generator.
    """
    arr = list(p.images)
    n = len(arr)
    swaps: list[int] = []
    # permutation_of swaps entries i, i+1 per letter starting from identity;
    # sort p down to the identity and replay the swaps in reverse.
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if arr[i] > arr[i + 1]:
                arr[i], arr[i + 1] = arr[i + 1], arr[i]
                swaps.append(i + 1)
                changed = True
    return BraidWord(n, tuple(reversed(swaps)))
