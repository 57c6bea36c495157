"""Rosette braids.

A rosette braid of type (s, n) is a product of n rows; each row applies every
odd generator and then every even generator of B_s, each with its own sign.
The sign matrix has one row per braid row and one column per generator.
"""
from __future__ import annotations

import itertools
import json
import logging
import os
import tempfile
import threading
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Sequence

from .braid_core import (
    BraidError,
    BraidWord,
    Permutation,
    braids_equal,
    comb,
    cycle_count,
    identity,
    is_identity_braid,
    is_pure,
    lift_permutation,
    permutation_of,
    pure_generator_word,
)

log = logging.getLogger(__name__)


class RosetteError(BraidError):
    pass


class InternalConsistencyError(AssertionError):
    """A proven identity failed to hold; always an implementation bug."""


@dataclass(frozen=True)
class RosetteBraid:
    s: int
    n: int
    signs: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.s < 2:
            raise RosetteError(f"rosette braids need s >= 2, got {self.s}")
        signs = tuple(tuple(int(e) for e in row) for row in self.signs)
        if len(signs) != self.n:
            raise RosetteError(f"expected {self.n} rows, got {len(signs)}")
        for row in signs:
            if len(row) != self.s - 1 or any(e not in (1, -1) for e in row):
                raise RosetteError(f"bad row {row} for s={self.s}")
        object.__setattr__(self, "signs", signs)

    @classmethod
    def from_rows(cls, s: int, rows: Sequence[Sequence[int]]) -> RosetteBraid:
        return cls(s, len(rows), tuple(tuple(r) for r in rows))

    def __add__(self, other: RosetteBraid) -> RosetteBraid:
        if other.s != self.s:
            raise RosetteError("incompatible widths")
        return RosetteBraid(self.s, self.n + other.n, self.signs + other.signs)

    def to_json(self) -> dict:
        return {"s": self.s, "n": self.n, "signs": [list(r) for r in self.signs]}

    @classmethod
    def from_json(cls, data: dict) -> RosetteBraid:
        return cls(int(data["s"]), int(data["n"]),
                   tuple(tuple(r) for r in data["signs"]))


def row_generators(s: int) -> list[int]:
    """Generator indices of one row in serialization order."""
    return list(range(1, s, 2)) + list(range(2, s, 2))


def rosette_word(r: RosetteBraid) -> BraidWord:
    order = row_generators(r.s)
    letters = []
    for row in r.signs:
        for j in order:
            letters.append(j * row[j - 1])
    return BraidWord(r.s, tuple(letters))


def row_permutation(s: int) -> Permutation:
    return permutation_of(BraidWord(s, tuple(row_generators(s))))


@dataclass(frozen=True)
class Lemma1Report:
    cycle_count: int
    is_pure: bool
    classified_case: str


def check_lemma1(r: RosetteBraid) -> Lemma1Report:
    """Permutation data of a rosette braid, checked against the known cases."""
    perm = permutation_of(rosette_word(r))
    k = cycle_count(perm)
    pure = perm.is_identity()
    if r.n == 1:
        case = "(s,1)"
        ok = k == 1
    elif r.n > 0 and r.n % r.s == 0:
        case = "(s,ns)"
        ok = pure
    elif r.n % r.s == 1:
        case = "(s,ns+1)"
        ok = k == 1
    else:
        case = "unclassified"
        ok = True
    if not ok:
        raise InternalConsistencyError(
            f"rosette of type ({r.s},{r.n}) has permutation {perm}")
    return Lemma1Report(k, pure, case)


# --- crossing structure -------------------------------------------------------


def crossing_pairs(s: int, n: int) -> list[tuple[int, int, int, int]]:
    """(row, generator, right strand, left strand) for every crossing, in word order.

    Strands are named by start position.  The "right" strand is the one at
    position j+1 just before the crossing.
    """
    strands = list(range(1, s + 1))
    out = []
    order = row_generators(s)
    for row in range(n):
        for j in order:
            left, right = strands[j - 1], strands[j]
            out.append((row, j, right, left))
            strands[j - 1], strands[j] = right, left
    return out


def _layered_signs(s: int, n: int, height: dict[int, float],
                   pair_sign: dict[frozenset, int] | None = None) -> RosetteBraid:
    rows = [[0] * (s - 1) for _ in range(n)]
    for row, j, right, left in crossing_pairs(s, n):
        key = frozenset((right, left))
        if pair_sign and key in pair_sign:
            e = pair_sign[key]
        else:
            e = 1 if height[right] > height[left] else -1
        rows[row][j - 1] = e
    return RosetteBraid.from_rows(s, rows)


# --- cache --------------------------------------------------------------------


class RosetteCache:
    """Verified rosette lookups, in memory and optionally as JSON files.

    Files are written atomically (temp file + rename), so concurrent readers
    never see partial data.  Every entry loaded from disk is re-verified.
    """

    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory else None
        self._mem: dict[str, RosetteBraid] = {}
        self._lock = threading.Lock()

    def _path(self, key: str) -> Path:
        assert self.directory is not None
        return self.directory / f"rosette_{key}.json"

    def get(self, key: str, target: BraidWord) -> RosetteBraid | None:
        r = self._mem.get(key)
        if r is not None:
            return r
        if self.directory is None:
            return None
        path = self._path(key)
        try:
            r = RosetteBraid.from_json(json.loads(path.read_text()))
        except FileNotFoundError:
            return None
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("discarding unreadable cache file %s: %s", path, exc)
            return None
        if r.s != target.width or not braids_equal(rosette_word(r), target):
            log.warning("discarding cache entry %s: failed verification", key)
            return None
        with self._lock:
            self._mem[key] = r
        return r

    def put(self, key: str, r: RosetteBraid) -> None:
        with self._lock:
            self._mem[key] = r
            if self.directory is None:
                return
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
            with os.fdopen(fd, "w") as fh:
                json.dump(r.to_json(), fh)
            os.replace(tmp, self._path(key))


_default_cache = RosetteCache(os.environ.get("KNOTFOURIER_CACHE_DIR") or None)


def default_cache() -> RosetteCache:
    return _default_cache


def set_default_cache(cache: RosetteCache) -> None:
    global _default_cache
    _default_cache = cache


# --- generator rosettes -------------------------------------------------------


def _generator_candidates(s: int, i: int, j: int, sign: int) -> Iterator[RosetteBraid]:
    # Strands i and j twist around each other in a layer above (or below)
    # all other strands, which are stacked in index order.
    others = [k for k in range(1, s + 1) if k not in (i, j)]
    for side in (1, -1):
        height = {k: float(pos) for pos, k in enumerate(others)}
        height[i] = height[j] = side * (s + 1)
        for e in (sign, -sign):
            yield _layered_signs(s, s, height, {frozenset((i, j)): e})


def _enumerate_by_linking(s: int, n: int, target: dict[frozenset, int],
                          budget: int) -> Iterator[RosetteBraid]:
    """Sign matrices whose pairwise linking numbers match ``target``."""
    slots = crossing_pairs(s, n)
    by_pair: dict[frozenset, list[int]] = {}
    for idx, (_, _, a, b) in enumerate(slots):
        by_pair.setdefault(frozenset((a, b)), []).append(idx)
    pairs = sorted(by_pair, key=sorted)
    choices = []
    for p in pairs:
        c = len(by_pair[p])
        want = target.get(p, 0)
        opts = [v for v in itertools.product((1, -1), repeat=c) if sum(v) == want]
        if not opts:
            return
        choices.append(opts)
    for count, combo in enumerate(itertools.product(*choices)):
        if count >= budget:
            return
        flat = [0] * len(slots)
        for p, vals in zip(pairs, combo):
            for idx, v in zip(by_pair[p], vals):
                flat[idx] = v
        rows = [[0] * (s - 1) for _ in range(n)]
        for (row, g, _, _), v in zip(slots, flat):
            rows[row][g - 1] = v
        yield RosetteBraid.from_rows(s, rows)


def rosette_for_generator(s: int, i: int, j: int, sign: int,
                          cache: RosetteCache | None = None,
                          budget: int | None = None) -> RosetteBraid:
    """A type (s, s) rosette braid equal to A_{i,j}^sign."""
    if sign not in (1, -1):
        raise RosetteError("sign must be +1 or -1")
    target = pure_generator_word(s, i, j) ** sign
    cache = cache if cache is not None else _default_cache
    key = f"gen_{s}_{i}_{j}_{'p' if sign > 0 else 'm'}"
    hit = cache.get(key, target)
    if hit is not None:
        return hit
    if budget is None:
        budget = 2 ** ((s - 1) * s)
    for cand in itertools.chain(
            _generator_candidates(s, i, j, sign),
            _enumerate_by_linking(s, s, {frozenset((i, j)): 2 * sign}, budget)):
        if braids_equal(rosette_word(cand), target):
            cache.put(key, cand)
            return cand
    raise RosetteError("no rosette found within budget")


def identity_rosette(s: int, cache: RosetteCache | None = None,
                     max_blocks: int = 1) -> RosetteBraid:
    """A rosette of type (s, m*s) equal to the identity braid."""
    cache = cache if cache is not None else _default_cache
    key = f"id_{s}"
    hit = cache.get(key, identity(s))
    if hit is not None:
        return hit
    for m in range(1, max_blocks + 1):
        # every strand on its own level: a pure layered braid is trivial
        cand = _layered_signs(s, m * s, {k: float(k) for k in range(1, s + 1)})
        if is_identity_braid(rosette_word(cand)):
            cache.put(key, cand)
            return cand
    raise RosetteError(f"unsupported width {s}: no identity rosette found")


def pure_to_rosette(w: BraidWord, cache: RosetteCache | None = None) -> RosetteBraid:
    """Rewrite a pure braid as a rosette braid of type (s, k*s)."""
    if w.width < 2:
        raise RosetteError("rosette braids need width >= 2")
    factors = comb(w)
    rows: list[tuple[int, ...]] = []
    for i, j, sign in factors:
        rows.extend(rosette_for_generator(w.width, i, j, sign, cache).signs)
    return RosetteBraid.from_rows(w.width, rows)


# --- conjugation to rosette form ----------------------------------------------


@dataclass(frozen=True)
class ConjugationCertificate:
    alpha: BraidWord
    beta: BraidWord
    rosette: RosetteBraid

    def verify(self) -> bool:
        lhs = self.beta.inverse() * self.alpha * self.beta
        return braids_equal(lhs, rosette_word(self.rosette))

    @property
    def rows_per_block(self) -> int:
        return (self.rosette.n - 1) // self.rosette.s

    def to_json(self) -> dict:
        return {
            "width": self.alpha.width,
            "alpha": self.alpha.to_text(),
            "beta": self.beta.to_text(),
            "rosette": self.rosette.to_json(),
            "type": [self.rosette.s, self.rosette.n],
        }

    @classmethod
    def from_json(cls, data: dict) -> ConjugationCertificate:
        s = int(data["width"])
        parse = lambda t: BraidWord(s, tuple(int(x) for x in t.split()))
        return cls(parse(data["alpha"]), parse(data["beta"]),
                   RosetteBraid.from_json(data["rosette"]))


def aligning_permutation(a: Permutation, c: Permutation) -> Permutation:
    """p with p^-1 a p == c, for two full cycles a and c."""
    n = a.size
    if cycle_count(a) != 1 or cycle_count(c) != 1:
        raise BraidError("both permutations must be single cycles")
    images = [0] * n
    x, y = 1, 1
    for _ in range(n):
        images[x - 1] = y
        x, y = c(x), a(y)
    return Permutation(tuple(images))


def conjugate_to_rosette(alpha: BraidWord,
                         cache: RosetteCache | None = None) -> ConjugationCertificate:
    s = alpha.width
    if cycle_count(permutation_of(alpha)) != 1:
        raise BraidError("closure is not a knot")
    if s < 2:
        raise RosetteError("rosette braids need width >= 2")
    delta_row = RosetteBraid.from_rows(s, [[1] * (s - 1)])
    delta = rosette_word(delta_row)
    p = aligning_permutation(permutation_of(alpha), row_permutation(s))
    beta = lift_permutation(p)
    pure = delta.inverse() * beta.inverse() * alpha * beta
    if not is_pure(pure):
        raise InternalConsistencyError("delta^-1 beta^-1 alpha beta is not pure")
    rosette = delta_row + pure_to_rosette(pure, cache)
    cert = ConjugationCertificate(alpha, beta, rosette)
    if not cert.verify():
        raise InternalConsistencyError("conjugation certificate failed verification")
    return cert
