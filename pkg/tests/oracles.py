"""Independent reference computations used by the tests.

These deliberately avoid the package's own algorithms: Burau matrices over
exact rationals for braid equality, strand tracking for permutations and
linking numbers, and a naive state sum for the Kauffman bracket.
"""
from fractions import Fraction
from itertools import product

BURAU_T = Fraction(3, 7)


def burau(width, letters, t=BURAU_T):
    """Unreduced Burau matrix of a braid word (faithful on B_3, a necessary check beyond)."""
    m = [[Fraction(int(r == c)) for c in range(width)] for r in range(width)]
    for g in letters:
        i = abs(g) - 1
        if g > 0:
            block = [[1 - t, t], [Fraction(1), Fraction(0)]]
        else:
            block = [[Fraction(0), Fraction(1)], [1 / t, 1 - 1 / t]]
        # m <- m * B, with B acting on columns i, i+1
        for row in m:
            a, b = row[i], row[i + 1]
            row[i] = a * block[0][0] + b * block[1][0]
            row[i + 1] = a * block[0][1] + b * block[1][1]
    return m


def strand_tracking(width, letters):
    """(images, linking) by following strands through the crossings.

    images[k-1] is the starting position of the strand that ends at k, and
    linking[a][b] is the signed number of crossings between strands a, b.
    """
    at = list(range(1, width + 1))
    lk = [[0] * width for _ in range(width)]
    for g in letters:
        i = abs(g) - 1
        a, b = at[i], at[i + 1]
        sgn = 1 if g > 0 else -1
        lk[a - 1][b - 1] += sgn
        lk[b - 1][a - 1] += sgn
        at[i], at[i + 1] = b, a
    return at, lk


def naive_bracket(crossings, loops=0):
    """{A-exponent: coefficient} of the Kauffman bracket by the 2^n state sum.

    Labels (a, b, c, d) counterclockwise; A-smoothing joins a-b and c-d.
    """
    if not crossings:
        poly = {0: 1}
        for _ in range(max(loops, 1) - 1):
            poly = _times_loop(poly)
        return poly
    total = {}
    for state in product((0, 1), repeat=len(crossings)):
        parent = {}

        def find(x):
            parent.setdefault(x, x)
            while parent[x] != x:
                x = parent[x]
            return x

        for (a, b, c, d), s in zip(crossings, state):
            pairs = ((a, b), (c, d)) if s == 0 else ((a, d), (b, c))
            for u, v in pairs:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
        labels = {v for x in crossings for v in x}
        n_loops = len({find(v) for v in labels}) + loops
        poly = {state.count(0) - state.count(1): 1}
        for _ in range(n_loops - 1):
            poly = _times_loop(poly)
        for e, c in poly.items():
            total[e] = total.get(e, 0) + c
    return {e: c for e, c in total.items() if c}


def _times_loop(poly):
    out = {}
    for e, c in poly.items():
        out[e + 2] = out.get(e + 2, 0) - c
        out[e - 2] = out.get(e - 2, 0) - c
    return out


def random_word(rng, width, length):
    return tuple(int(rng.choice([1, -1])) * int(rng.integers(1, width)) for _ in range(length))
