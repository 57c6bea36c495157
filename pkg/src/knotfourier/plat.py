"""Plat closures, cap moves and checkerboard diagrams.

A plat on 2b strands closes a braid with caps joining positions (2i-1, 2i)
at the top and at the bottom.  Cap moves change the braid without changing
the knot type of the closure:

* twist at cap i: the generator sigma_{2i-1}^{+-1} next to the cap;
* cap swap at i: sigma_{2i} sigma_{2i-1} sigma_{2i+1} sigma_{2i}, which slides
  cap i across cap i+1.

Top moves are prepended to the braid, bottom moves appended.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .braid_core import (
    BraidError,
    BraidWord,
    Permutation,
    is_pure,
    lift_permutation,
    permutation_of,
)
from .rosette import (
    InternalConsistencyError,
    RosetteBraid,
    RosetteCache,
    pure_to_rosette,
    rosette_word,
)

MOVE_KINDS = ("top_twist", "top_cap_swap", "bottom_twist", "bottom_cap_swap")


class PlatError(BraidError):
    pass


@dataclass(frozen=True)
class Plat:
    braid: BraidWord

    def __post_init__(self):
        if self.braid.width % 2:
            raise PlatError(f"plat needs an even width, got {self.braid.width}")

    @property
    def b(self) -> int:
        return self.braid.width // 2

    @classmethod
    def from_letters(cls, b: int, letters: Sequence[int]) -> Plat:
        return cls(BraidWord(2 * b, tuple(letters)))

    def to_json(self) -> dict:
        return {"b": self.b, "word": self.braid.to_text()}

    @classmethod
    def from_json(cls, data: dict) -> Plat:
        b = int(data["b"])
        return cls(BraidWord(2 * b, tuple(int(t) for t in str(data["word"]).split())))


@dataclass(frozen=True)
class HildenMove:
    kind: str
    position: int
    sign: int = 1

    def __post_init__(self):
        if self.kind not in MOVE_KINDS:
            raise PlatError(f"unknown move {self.kind!r}")
        if self.sign not in (1, -1):
            raise PlatError("move sign must be +1 or -1")

    def word(self, b: int) -> BraidWord:
        i = self.position
        if self.kind.endswith("twist"):
            if not 1 <= i <= b:
                raise PlatError(f"twist cap index {i} out of range 1..{b}")
            return BraidWord(2 * b, ((2 * i - 1) * self.sign,))
        if not 1 <= i <= b - 1:
            raise PlatError(f"cap swap index {i} out of range 1..{b - 1}")
        if self.kind == "top_cap_swap":
            return BraidWord(2 * b, (2 * i, 2 * i - 1, 2 * i + 1, 2 * i))
        return BraidWord(2 * b, (2 * i, 2 * i + 1, 2 * i - 1, 2 * i))

    def to_json(self) -> dict:
        return {"kind": self.kind, "position": self.position, "sign": self.sign}


@dataclass(frozen=True)
class CheckerboardDiagram:
    b: int
    epsilons: tuple[int, ...]
    rosette: RosetteBraid

    def __post_init__(self):
        eps = tuple(int(e) for e in self.epsilons)
        if len(eps) != self.b - 1 or any(e not in (1, -1) for e in eps):
            raise PlatError(f"need {self.b - 1} signs in {{+1,-1}}, got {eps}")
        if self.rosette.s != 2 * self.b:
            raise PlatError("rosette width must be 2b")
        object.__setattr__(self, "epsilons", eps)

    @property
    def type(self) -> tuple[int, int]:
        return (2 * self.b, self.rosette.n)

    def to_json(self) -> dict:
        return {"b": self.b, "epsilons": list(self.epsilons),
                "rosette": self.rosette.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> CheckerboardDiagram:
        return cls(int(data["b"]), tuple(data["epsilons"]),
                   RosetteBraid.from_json(data["rosette"]))


def _cap_partner(p: int) -> int:
    return p + 1 if p % 2 else p - 1


def _strand_ends(w: BraidWord) -> list[int]:
    """ends[p-1] = bottom position of the strand starting at top position p."""
    return list(permutation_of(w).inverse().images)


def plat_components(p: Plat) -> int:
    ends = _strand_ends(p.braid)
    starts = {e: s for s, e in enumerate(ends, start=1)}
    seen: set[int] = set()
    count = 0
    for top in range(1, 2 * p.b + 1):
        if top in seen:
            continue
        count += 1
        cur = top
        while cur not in seen:
            seen.add(cur)
            seen.add(_cap_partner(cur))
            bottom = _cap_partner(ends[_cap_partner(cur) - 1])
            cur = starts[bottom]
    return count


def pi0(b: int) -> Permutation:
    """Permutation of sigma_2 sigma_4 ... sigma_{2b-2}."""
    return Permutation.from_cycles(2 * b, [(k, k + 1) for k in range(2, 2 * b - 1, 2)])


def apply_hilden_move(p: Plat, m: HildenMove) -> Plat:
    w = m.word(p.b)
    if m.kind.startswith("top"):
        return Plat(w * p.braid)
    return Plat(p.braid * w)


def _cap_blocks(target: Sequence[int], b: int) -> list[tuple[str, int]]:
    """Twist/swap blocks, top to bottom, moving strand at p to target[p-1].

    ``target`` must map caps onto caps.
    """
    cur = list(target)
    blocks: list[tuple[str, int]] = []

    def apply(kind: str, i: int) -> None:
        a = 2 * i - 2
        if kind == "twist":
            cur[a], cur[a + 1] = cur[a + 1], cur[a]
        else:
            cur[a], cur[a + 1], cur[a + 2], cur[a + 3] = cur[a + 2], cur[a + 3], cur[a], cur[a + 1]
        blocks.append((kind, i))

    for _ in range(b):
        for i in range(1, b):
            if min(cur[2 * i - 2:2 * i]) > min(cur[2 * i:2 * i + 2]):
                apply("swap", i)
    for i in range(1, b + 1):
        if cur[2 * i - 2] > cur[2 * i - 1]:
            apply("twist", i)
    if cur != list(range(1, 2 * b + 1)):
        raise PlatError("target does not preserve the cap pairing")
    return blocks


def normalize_plat(p: Plat) -> tuple[Plat, list[HildenMove]]:
    """Cap moves bringing the braid permutation to ``pi0(b)``.

    Walks the knot from top position 1 in the given plat and in the model
    plat of sigma_2 ... sigma_{2b-2} simultaneously; matching the positions
    visited gives the cap relabelling needed at the top and at the bottom.
    """
    if plat_components(p) != 1:
        raise PlatError("plat closure is not a knot")
    b = p.b
    target_perm = pi0(b)
    if permutation_of(p.braid) == target_perm:
        return p, []
    ends = _strand_ends(p.braid)
    starts = {e: s for s, e in enumerate(ends, start=1)}
    model_ends = list(target_perm.inverse().images)
    model_starts = {e: s for s, e in enumerate(model_ends, start=1)}
    top_map: dict[int, int] = {}
    bot_map: dict[int, int] = {}
    cur, mcur = 1, 1
    for _ in range(b):
        bot, mbot = ends[cur - 1], model_ends[mcur - 1]
        top_map[cur] = mcur
        bot_map[bot] = mbot
        bot, mbot = _cap_partner(bot), _cap_partner(mbot)
        bot_map[bot] = mbot
        up, mup = starts[bot], model_starts[mbot]
        top_map[up] = mup
        cur, mcur = _cap_partner(up), _cap_partner(mup)
    # new braid t * braid * u, with t moving top_map^-1 and u moving bot_map
    inv_top = {v: k for k, v in top_map.items()}
    t_blocks = _cap_blocks([inv_top[k] for k in range(1, 2 * b + 1)], b)
    u_blocks = _cap_blocks([bot_map[k] for k in range(1, 2 * b + 1)], b)
    moves = [HildenMove("top_" + ("twist" if k == "twist" else "cap_swap"), i)
             for k, i in reversed(t_blocks)]
    moves += [HildenMove("bottom_" + ("twist" if k == "twist" else "cap_swap"), i)
              for k, i in u_blocks]
    q = p
    for m in moves:
        q = apply_hilden_move(q, m)
    if permutation_of(q.braid) != target_perm:
        raise InternalConsistencyError("cap moves did not reach pi0")
    return q, moves


def closure_to_plat(w: BraidWord) -> Plat:
    """A plat on 2s strands whose closure is the closure of ``w``.

    The braid runs on the right half of the strands and the return strands
    on the left half, under nested caps (s+1-k, s+k).  A positive braid
    re-wires the standard caps into the nested ones at the top, and its
    inverse does the same at the bottom.
    """
    from .braid_core import cycle_count

    if cycle_count(permutation_of(w)) != 1:
        raise PlatError("closure is not a knot")
    s = w.width
    dest = [0] * (2 * s)
    for k in range(1, s + 1):
        dest[2 * k - 2] = s + 1 - k
        dest[2 * k - 1] = s + k
    r = lift_permutation(Permutation(tuple(dest)).inverse())
    inner = w.shifted(s, 2 * s)
    return Plat(r * inner * r.inverse())


def checkerboard_from_plat(p: Plat, cache: RosetteCache | None = None) -> CheckerboardDiagram:
    b = p.b
    if permutation_of(p.braid) != pi0(b):
        raise PlatError("plat not normalized")
    evens = BraidWord(2 * b, tuple(range(2, 2 * b - 1, 2)))
    beta = evens * p.braid
    if not is_pure(beta):
        raise InternalConsistencyError("sigma_2 ... sigma_{2b-2} * braid is not pure")
    rosette = pure_to_rosette(beta, cache)
    return CheckerboardDiagram(b, (-1,) * (b - 1), rosette)


def checkerboard_word(d: CheckerboardDiagram) -> BraidWord:
    head = BraidWord(2 * d.b, tuple(e * (2 * k) for k, e in enumerate(d.epsilons, start=1)))
    return head * rosette_word(d.rosette)
