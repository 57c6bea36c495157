"""Planar diagram codes and the invariants used to check constructions.

PD convention
-------------
A crossing is ``(a, b, c, d)``: arc labels listed counterclockwise starting
from the incoming under-strand, so ``a -> c`` is the under-strand.  The
crossing is positive when the over-strand runs from ``d`` to ``b``.
Crossingless components are not representable by crossings and are counted
in ``PDCode.loops``.  A code with no crossings and ``loops == 0`` is read as
the unknot.

Braid diagrams are drawn with strand positions increasing to the right and
the word read top to bottom; in sigma_i^{+1} the strand moving from position
i+1 to position i passes over.  With strands oriented downward this is a
positive crossing, so the closure of sigma_1^3 has writhe +3.

Jones convention
----------------
``kauffman_bracket`` returns <D> in A with <O> = 1 and
<X> = A <smoothing (a,b)(c,d)> + A^-1 <smoothing (a,d)(b,c)>.  ``jones``
returns V(t) = (-A^3)^-w <D> with A = t^(-1/4); the closure of sigma_1^3
gives t + t^3 - t^4.
"""
from __future__ import annotations

import math

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _accel
from .braid_core import BraidWord

DEFAULT_MAX_CROSSINGS = 20


class DiagramError(ValueError):
    pass


# --- Laurent polynomials --------------------------------------------------------


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in one variable; zero terms never stored."""

    terms: tuple[tuple[int, int], ...] = ()
    var: str = "A"

    def __post_init__(self):
        acc: dict[int, int] = {}
        for e, c in self.terms:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        object.__setattr__(
            self, "terms", tuple(sorted((e, c) for e, c in acc.items() if c)))

    @classmethod
    def from_dict(cls, d: dict[int, int], var: str = "A") -> LaurentPoly:
        return cls(tuple(d.items()), var)

    @classmethod
    def monomial(cls, e: int, c: int = 1, var: str = "A") -> LaurentPoly:
        return cls(((e, c),), var)

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        return LaurentPoly(self.terms + other.terms, self.var)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms), self.var)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly(tuple((e, c * other) for e, c in self.terms), self.var)
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(acc, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        out = LaurentPoly.monomial(0, 1, self.var)
        for _ in range(k):
            out = out * self
        return out

    def substitute_power(self, factor: int, var: str) -> LaurentPoly:
        """Rewrite in a new variable u with old = u^factor (exponents scaled)."""
        return LaurentPoly(tuple((e * factor, c) for e, c in self.terms), var)

    def rescale(self, divisor: int, var: str) -> LaurentPoly:
        if any(e % divisor for e, _ in self.terms):
            raise ValueError(f"exponents not divisible by {divisor}")
        return LaurentPoly(tuple((e // divisor, c) for e, c in self.terms), var)

    def mirror(self) -> LaurentPoly:
        return LaurentPoly(tuple((-e, c) for e, c in self.terms), self.var)

    def __call__(self, x: complex) -> complex:
        return sum(c * x ** e for e, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        half = self.var == "t^(1/2)"
        for e, c in sorted(self.terms, reverse=True):
            if half:
                mono = "" if e == 0 else ("t" if e == 2 else (f"t^{e // 2}" if e % 2 == 0 else f"t^({e}/2)"))
            else:
                mono = "" if e == 0 else (self.var if e == 1 else f"{self.var}^{e}")
            coef = str(c) if (abs(c) != 1 or e == 0) else ("-" if c < 0 else "")
            parts.append(f"{coef}{'*' if coef not in ('', '-') and mono else ''}{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"var": self.var, "terms": [[e, c] for e, c in self.terms]}


# --- PD codes -------------------------------------------------------------------


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...] = ()
    loops: int = 0
    # optional planar position per crossing, used only to order the DP sweep
    positions: tuple[tuple[float, float], ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        xs = tuple(tuple(int(v) for v in x) for x in self.crossings)
        if any(len(x) != 4 for x in xs):
            raise DiagramError("each crossing needs four arc labels")
        object.__setattr__(self, "crossings", xs)

    def __len__(self) -> int:
        return len(self.crossings)

    def labels(self) -> list[int]:
        return sorted({v for x in self.crossings for v in x})

    def validate(self) -> None:
        counts: dict[int, int] = {}
        for x in self.crossings:
            for v in x:
                counts[v] = counts.get(v, 0) + 1
        bad = [v for v, k in counts.items() if k != 2]
        if bad:
            raise DiagramError(f"malformed PD: labels {bad[:5]} do not appear exactly twice")
        _orientation(self)

    def to_json(self) -> dict:
        out: dict = {"crossings": [list(x) for x in self.crossings]}
        if self.loops:
            out["loops"] = self.loops
        return out

    @classmethod
    def from_json(cls, data: dict) -> PDCode:
        pd = cls(tuple(tuple(x) for x in data["crossings"]), int(data.get("loops", 0)))
        pd.validate()
        return pd


def pd_from_crossing_data(records: Sequence[tuple[int, int, int, int, int]],
                          loops: int = 0,
                          positions=None) -> PDCode:
    """Build a PD code from (under_in, under_out, over_in, over_out, sign) records."""
    xs = []
    for u_in, u_out, o_in, o_out, sign in records:
        if sign > 0:
            xs.append((u_in, o_out, u_out, o_in))
        else:
            xs.append((u_in, o_in, u_out, o_out))
    return PDCode(tuple(xs), loops, positions)


def _orientation(pd: PDCode) -> list[int]:
    """Crossing signs, deduced by walking each component along its arcs."""
    where: dict[int, list[tuple[int, int]]] = {}
    for ci, x in enumerate(pd.crossings):
        for slot, v in enumerate(x):
            where.setdefault(v, []).append((ci, slot))
    over_in: dict[int, int] = {}
    # tail_of[label] is known once we know where the arc starts
    visited_arcs: set[int] = set()

    def walk(label: int, tail: tuple[int, int]) -> None:
        while label not in visited_arcs:
            visited_arcs.add(label)
            occ = where[label]
            head = occ[1] if occ[0] == tail else occ[0]
            ci, slot = head
            if slot == 2:
                raise DiagramError(f"malformed PD: arc {label} enters an outgoing under slot")
            if slot == 0:
                nxt = (ci, 2)
            else:
                if ci in over_in and over_in[ci] != slot:
                    raise DiagramError(f"malformed PD: inconsistent over-strand at crossing {ci}")
                over_in[ci] = slot
                nxt = (ci, 4 - slot)
            label, tail = pd.crossings[ci][nxt[1]], nxt

    for ci, x in enumerate(pd.crossings):
        if x[2] not in visited_arcs:
            walk(x[2], (ci, 2))
    # components running only over other strands: orient them arbitrarily
    for ci, x in enumerate(pd.crossings):
        if ci not in over_in:
            over_in[ci] = 3
            walk(x[1], (ci, 1))
    return [1 if over_in[ci] == 3 else -1 for ci in range(len(pd.crossings))]


def crossing_signs(pd: PDCode) -> list[int]:
    return _orientation(pd)


def writhe(pd: PDCode) -> int:
    return sum(_orientation(pd))


def _crossing_components(pd: PDCode) -> int:
    labels = pd.labels()
    parent = {v: v for v in labels}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b, c, d in pd.crossings:
        parent[find(a)] = find(c)
        parent[find(b)] = find(d)
    return len({find(v) for v in labels})


def component_count(pd: PDCode) -> int:
    pd.validate()
    n = _crossing_components(pd) + pd.loops if pd.crossings else pd.loops
    return max(n, 1)


# --- diagrams from braids ---------------------------------------------------------

_SLOT_XY = {"NW": (-1, 1), "NE": (1, 1), "SW": (-1, -1), "SE": (1, -1)}
_THROUGH = {"NW": "SE", "SE": "NW", "NE": "SW", "SW": "NE"}


def _braid_network(w: BraidWord, closing: str) -> PDCode:
    adj: dict[tuple, list[tuple]] = {}

    def connect(u, v):
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)

    s = w.width
    cur: list[tuple] = [("top", p) for p in range(s)]
    for c, g in enumerate(w.letters):
        i = abs(g) - 1
        connect(cur[i], ("x", c, "NW"))
        connect(cur[i + 1], ("x", c, "NE"))
        cur[i], cur[i + 1] = ("x", c, "SW"), ("x", c, "SE")
    for p in range(s):
        connect(cur[p], ("bot", p))
    if closing == "trace":
        for p in range(s):
            connect(("bot", p), ("top", p))
    elif closing == "plat":
        if s % 2:
            raise DiagramError("plat closure needs an even number of strands")
        for p in range(0, s, 2):
            connect(("top", p), ("top", p + 1))
            connect(("bot", p), ("bot", p + 1))
    else:
        raise ValueError(closing)

    def follow(start):
        """From a crossing slot, walk the segment to the next crossing slot."""
        prev, node = start, adj[start][0]
        while node[0] != "x":
            a, b = adj[node]
            prev, node = node, (b if a == prev else a)
        return node

    n = len(w.letters)
    label_in: dict[tuple, int] = {}
    label_out: dict[tuple, int] = {}
    visited: set[tuple] = set()
    next_label = 1
    for c in range(n):
        for slot in ("SW", "SE", "NW", "NE"):
            start = ("x", c, slot)
            if start in visited:
                continue
            exit_slot = start
            while exit_slot not in visited:
                entry = follow(exit_slot)
                visited.add(exit_slot)
                visited.add(entry)
                label_out[exit_slot] = next_label
                label_in[entry] = next_label
                next_label += 1
                exit_slot = ("x", entry[1], _THROUGH[entry[2]])
    # crossingless components: cycles through junction nodes only
    loops = 0
    seen: set[tuple] = set()
    for node in adj:
        if node[0] == "x" or node in seen:
            continue
        stack, has_x = [node], False
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            for v in adj[u]:
                if v[0] == "x":
                    has_x = True
                elif v not in seen:
                    stack.append(v)
        if not has_x:
            loops += 1

    records = []
    for c, g in enumerate(w.letters):
        over_pair = ("NE", "SW") if g > 0 else ("NW", "SE")
        under_pair = ("NW", "SE") if g > 0 else ("NE", "SW")

        def strand(pair):
            a, b = pair
            if ("x", c, a) in label_in:
                ent, ext = a, b
            else:
                ent, ext = b, a
            vec = (_SLOT_XY[ext][0] - _SLOT_XY[ent][0], _SLOT_XY[ext][1] - _SLOT_XY[ent][1])
            return label_in[("x", c, ent)], label_out[("x", c, ext)], vec

        o_in, o_out, ov = strand(over_pair)
        u_in, u_out, uv = strand(under_pair)
        sign = 1 if ov[0] * uv[1] - ov[1] * uv[0] > 0 else -1
        records.append((u_in, u_out, o_in, o_out, sign))
    return pd_from_crossing_data(records, loops)


def pd_from_closure(w: BraidWord) -> PDCode:
    """PD code of the closure of a braid (strands oriented downward)."""
    return _braid_network(w, "trace")


def pd_from_plat(p) -> PDCode:
    """PD code of the plat closure of a ``Plat`` (or an even-width braid word)."""
    w = p.braid if hasattr(p, "braid") else p
    return _braid_network(w, "plat")


# --- Kauffman bracket ---------------------------------------------------------------

_LOOP = LaurentPoly(((2, -1), (-2, -1)))


def _smoothing_pairs(pd: PDCode):
    index = {v: k for k, v in enumerate(pd.labels())}
    pa, pb = [], []
    for a, b, c, d in pd.crossings:
        a, b, c, d = index[a], index[b], index[c], index[d]
        pa.append(((a, b), (c, d)))
        pb.append(((a, d), (b, c)))
    return len(index), pa, pb


def _bracket_from_counts(hist: np.ndarray, n: int) -> LaurentPoly:
    total = LaurentPoly()
    powers = [LaurentPoly.monomial(0)]
    for a_count in range(hist.shape[0]):
        for loops in range(hist.shape[1]):
            k = int(hist[a_count, loops])
            if not k:
                continue
            while len(powers) < loops:
                powers.append(powers[-1] * _LOOP)
            term = powers[loops - 1] * LaurentPoly.monomial(2 * a_count - n, k)
            total = total + term
    return total


def kauffman_bracket(pd: PDCode, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """Kauffman bracket by the full state sum over 2^n smoothings."""
    n = len(pd.crossings)
    if n > max_crossings:
        raise DiagramError("diagram too large for exact bracket")
    if n == 0:
        return _LOOP ** (max(pd.loops, 1) - 1)
    n_labels, pa, pb = _smoothing_pairs(pd)
    hist = _accel.bracket_state_counts(n_labels, pa, pb, pd.loops)
    return _bracket_from_counts(hist, n)


def default_order(pd: PDCode) -> list[int]:
    """Crossing order for the frontier sweep: by x position when known."""
    if pd.positions is not None:
        return sorted(range(len(pd.crossings)), key=lambda k: (pd.positions[k][0], pd.positions[k][1]))
    return list(range(len(pd.crossings)))


def kauffman_bracket_sweep(pd: PDCode, order: Sequence[int] | None = None) -> LaurentPoly:
    """Kauffman bracket by a frontier sweep over the crossings.

    Crossings are added one at a time; the state is the pairing of open arc
    ends induced by the smoothings chosen so far, with a polynomial in
    (A, closed loops) per pairing.  Exact, and far cheaper than the state sum
    when the frontier stays narrow.
    """
    n = len(pd.crossings)
    if n == 0:
        return _LOOP ** (max(pd.loops, 1) - 1)
    if order is None:
        order = default_order(pd)
    # arc ends: end id = 2*label_index + k; each crossing slot gets one end
    index = {v: k for k, v in enumerate(pd.labels())}
    seen_count: dict[int, int] = {}
    slot_end: list[list[int]] = []
    for ci in order:
        ends = []
        for v in pd.crossings[ci]:
            k = seen_count.get(v, 0)
            seen_count[v] = k + 1
            ends.append(2 * index[v] + k)
        slot_end.append(ends)
    processed: set[int] = set()
    # polynomials in A as {exponent: coefficient}; closed loops are multiplied in
    states: dict[tuple, dict[int, int]] = {(): {0: 1}}
    for step, ci in enumerate(order):
        e = slot_end[step]
        now = processed | set(e)
        smooth = ((e[0], e[1], e[2], e[3]), (e[0], e[3], e[1], e[2]))
        new_states: dict[tuple, dict[int, int]] = {}
        for matching, poly in states.items():
            for kind, (p, q, r, t) in enumerate(smooth):
                parent: dict[int, int] = {}

                def find(x):
                    parent.setdefault(x, x)
                    while parent[x] != x:
                        parent[x] = parent[parent[x]]
                        x = parent[x]
                    return x

                def union(x, y):
                    rx, ry = find(x), find(y)
                    if rx != ry:
                        parent[rx] = ry

                for u, v in matching:
                    union(u, v)
                union(p, q)
                union(r, t)
                frontier_new = []
                for end in set(e):
                    partner = end ^ 1
                    if partner in now:
                        union(end, partner)
                    else:
                        frontier_new.append(end)
                for u, v in matching:
                    for end in (u, v):
                        if (end ^ 1) not in now:
                            frontier_new.append(end)
                groups: dict[int, list[int]] = {}
                for end in frontier_new:
                    groups.setdefault(find(end), []).append(end)
                roots = {find(x) for x in list(parent)}
                closed = len(roots) - len(groups)
                new_match = tuple(sorted(tuple(sorted(g)) for g in groups.values()))
                a_shift = 1 if kind == 0 else -1
                bucket = new_states.setdefault(new_match, {})
                for ae, coef in _times_loops(poly, closed).items():
                    bucket[ae + a_shift] = bucket.get(ae + a_shift, 0) + coef
        states = new_states
        processed = now
    final = _times_loops(states.get((), {}), pd.loops)
    # every state closes at least one loop, so the sum divides by one loop factor
    return _divide_by_loop(LaurentPoly(tuple(final.items())))


def _times_loops(poly: dict[int, int], k: int) -> dict[int, int]:
    for _ in range(k):
        out: dict[int, int] = {}
        for e, c in poly.items():
            out[e + 2] = out.get(e + 2, 0) - c
            out[e - 2] = out.get(e - 2, 0) - c
        poly = out
    return poly


def _divide_by_loop(p: LaurentPoly) -> LaurentPoly:
    """Exact quotient by -A^2 - A^-2, cancelling from the top exponent down."""
    rem = {e: c for e, c in p.terms}
    low = min(rem, default=0)
    quo: dict[int, int] = {}
    while rem:
        top = max(rem)
        if top - 4 < low:
            raise DiagramError("bracket sum not divisible by the loop value")
        c = rem.pop(top)
        # (-c A^(top-2)) * (-A^2 - A^-2) = c A^top + c A^(top-4)
        quo[top - 2] = -c
        rest = rem.get(top - 4, 0) - c
        if rest:
            rem[top - 4] = rest
        else:
            rem.pop(top - 4, None)
    return LaurentPoly(tuple(quo.items()))


def bracket(pd: PDCode, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """State sum for small diagrams, frontier sweep beyond ``max_crossings``."""
    if len(pd.crossings) <= max_crossings:
        return kauffman_bracket(pd, max_crossings)
    return kauffman_bracket_sweep(pd)


def jones(pd: PDCode, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> LaurentPoly:
    """Jones polynomial; variable ``t`` for knots, ``t^(1/2)`` when needed."""
    w = writhe(pd) if pd.crossings else 0
    b = bracket(pd, max_crossings)
    sign = -1 if w % 2 else 1
    v = b * LaurentPoly.monomial(-3 * w, sign)
    # A = t^(-1/4)
    if all(e % 4 == 0 for e, _ in v.terms):
        return LaurentPoly(tuple((-e // 4, c) for e, c in v.terms), "t")
    return LaurentPoly(tuple((-e // 2, c) for e, c in v.terms), "t^(1/2)")


def jones_equal_up_to_mirror(v1: LaurentPoly, v2: LaurentPoly) -> bool:
    return v1 == v2 or v1 == v2.mirror()


# --- determinant -----------------------------------------------------------------


def _bareiss_det(m: list[list[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def coloring_matrix(pd: PDCode) -> list[list[int]]:
    """Fox coloring matrix: one row per crossing, one column per over-arc."""
    labels = pd.labels()
    parent = {v: v for v in labels}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for _, b, _, d in pd.crossings:
        parent[find(b)] = find(d)
    arcs = sorted({find(v) for v in labels})
    col = {r: k for k, r in enumerate(arcs)}
    rows = []
    for a, b, c, _ in pd.crossings:
        row = [0] * len(arcs)
        row[col[find(b)]] += 2
        row[col[find(a)]] -= 1
        row[col[find(c)]] -= 1
        rows.append(row)
    return rows


def _primes_below(limit: int):
    n = limit - 1
    while True:
        if n % 2 and all(n % d for d in range(3, int(n ** 0.5) + 1, 2)):
            yield n
        n -= 1


def _det_mod(m: np.ndarray, p: int) -> int:
    a = m % p
    n = a.shape[0]
    det = 1
    for k in range(n):
        nz = np.nonzero(a[k:, k])[0]
        if len(nz) == 0:
            return 0
        r = k + int(nz[0])
        if r != k:
            a[[k, r]] = a[[r, k]]
            det = -det
        piv = int(a[k, k])
        det = det * piv % p
        inv = pow(piv, p - 2, p)
        rows = k + 1 + np.nonzero(a[k + 1:, k])[0]
        if len(rows):
            f = (a[rows, k] * inv) % p
            a[rows, k:] = (a[rows, k:] - (f[:, None] * a[k, k:]) % p) % p
    return det % p


def _modular_det(rows: list[list[int]]) -> int:
    """Exact determinant by elimination modulo primes and CRT.

    Enough primes are used to exceed twice the Hadamard bound, so the
    symmetric residue is the true value.
    """
    m = np.array(rows, dtype=np.int64)
    bound_bits = sum(0.5 * math.log2(max(1, int((r * r).sum()))) for r in m) + 2
    modulus, value, bits = 1, 0, 0.0
    for p in _primes_below(2 ** 31):
        d = _det_mod(m.copy(), p)
        # combine value mod modulus with d mod p
        t = (d - value) * pow(modulus, -1, p) % p
        value += modulus * t
        modulus *= p
        bits += math.log2(p)
        if bits > bound_bits:
            break
    if value > modulus // 2:
        value -= modulus
    return value


def determinant(pd: PDCode) -> int:
    """Knot determinant from any first minor of the coloring matrix."""
    if component_count(pd) != 1:
        raise DiagramError("determinant needs a knot diagram (1 component)")
    if not pd.crossings:
        return 1
    m = coloring_matrix(pd)
    minor = [row[1:] for row in m[1:]]
    if len(minor) <= 40:
        return abs(_bareiss_det(minor))
    return abs(_modular_det(minor))


def determinant_from_bracket(b: LaurentPoly) -> int:
    """|<D>| at A = exp(i pi/4), computed exactly in Z[zeta_8]."""
    coeffs = [0, 0, 0, 0]  # basis 1, z, z^2, z^3 with z^4 = -1
    for e, c in b.terms:
        k = e % 8
        coeffs[k % 4] += c if k < 4 else -c
    c0, c1, c2, c3 = coeffs
    # |x|^2 for x = c0 + c1 z + c2 i + c3 z^3, z = (1+i)/sqrt2
    # real part = c0 + (c1 - c3)/sqrt2, imag = c2 + (c1 + c3)/sqrt2
    re2 = c0 * c0 + (c1 - c3) ** 2 / 2
    im2 = c2 * c2 + (c1 + c3) ** 2 / 2
    cross = (c0 * (c1 - c3) + c2 * (c1 + c3))
    mod2 = re2 + im2 + cross * 2 ** 0.5
    val = round(mod2 ** 0.5)
    if abs(val * val - mod2) > 1e-6 * max(1.0, mod2):
        raise DiagramError("bracket value at exp(i pi/4) is not an integer modulus")
    return val


def invariants(pd: PDCode, max_crossings: int = DEFAULT_MAX_CROSSINGS) -> dict:
    comps = component_count(pd)
    out = {
        "crossings": len(pd.crossings),
        "components": comps,
        "writhe": writhe(pd) if pd.crossings else 0,
        "jones": str(jones(pd, max_crossings)),
    }
    if comps == 1:
        out["determinant"] = determinant(pd)
    return out


def iter_crossing_components(pd: PDCode) -> Iterable[int]:
    return range(_crossing_components(pd))
