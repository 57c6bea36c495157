"""Pure-Python reference versions of the hot kernels.

The compiled module ``_kernels`` exposes the same four functions with the
same signatures; ``knotfourier._accel`` picks one at import time.
"""
from __future__ import annotations

import numpy as np


def free_reduce(word):
    """Freely reduce a word given as signed generator indices."""
    out = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def _inverse(word):
    return [-g for g in reversed(word)]


def artin_images(width, letters):
    """Images of x_1..x_width under the automorphism of the braid word.

    ``letters`` are signed generator indices.  The automorphism of a word
    l_1 ... l_m is phi(l_1) o ... o phi(l_m), so only the two images touched
    by each letter change when it is appended on the right.
    """
    images = [[k] for k in range(1, width + 1)]
    for letter in letters:
        i = abs(letter) - 1
        a, b = images[i], images[i + 1]
        if letter > 0:
            new_i = list(free_reduce(a + b + _inverse(a)))
            images[i], images[i + 1] = new_i, a
        else:
            new_j = list(free_reduce(_inverse(b) + a + b))
            images[i], images[i + 1] = b, new_j
    return [tuple(im) for im in images]


def bracket_state_counts(n_labels, pairs_a, pairs_b, extra_loops):
    """Histogram of (A-count, loop-count) over all 2^n smoothing states.

    ``pairs_a[c]`` / ``pairs_b[c]`` are the two label pairs joined by the A-
    and B-smoothing of crossing c (labels 0-based).  Returns an integer array
    ``h[a, loops]``.
    """
    n = len(pairs_a)
    hist = np.zeros((n + 1, n_labels + extra_loops + 2), dtype=np.int64)
    parent = list(range(n_labels))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for state in range(1 << n):
        for k in range(n_labels):
            parent[k] = k
        comps = n_labels
        a_count = 0
        for c in range(n):
            if (state >> c) & 1:
                pr = pairs_b[c]
            else:
                pr = pairs_a[c]
                a_count += 1
            for u, v in pr:
                ru, rv = find(u), find(v)
                if ru != rv:
                    parent[ru] = rv
                    comps -= 1
        hist[a_count, comps + extra_loops] += 1
    return hist


def grid_candidates(x, y):
    """Grid cells (i, j), i < j, where both coordinate differences change sign.

    ``x`` and ``y`` are samples of a closed curve at t_k = k/N.  Cell (i, j)
    spans [t_i, t_{i+1}] x [t_j, t_{j+1}] (indices mod N).  Cells touching
    the diagonal are skipped.
    """
    n = len(x)
    xn = np.append(x, x[0])
    yn = np.append(y, y[0])
    out = []
    idx = np.arange(n)
    for i in range(n - 2):
        j = idx[i + 2:]
        if i == 0:
            j = j[:-1]
        if len(j) == 0:
            continue
        dx00 = xn[i] - xn[j]
        dx01 = xn[i] - xn[j + 1]
        dx10 = xn[i + 1] - xn[j]
        dx11 = xn[i + 1] - xn[j + 1]
        lo = np.minimum(np.minimum(dx00, dx01), np.minimum(dx10, dx11))
        hi = np.maximum(np.maximum(dx00, dx01), np.maximum(dx10, dx11))
        okx = (lo <= 0) & (hi >= 0)
        if not okx.any():
            continue
        j = j[okx]
        dy00 = yn[i] - yn[j]
        dy01 = yn[i] - yn[j + 1]
        dy10 = yn[i + 1] - yn[j]
        dy11 = yn[i + 1] - yn[j + 1]
        lo = np.minimum(np.minimum(dy00, dy01), np.minimum(dy10, dy11))
        hi = np.maximum(np.maximum(dy00, dy01), np.maximum(dy10, dy11))
        oky = (lo <= 0) & (hi >= 0)
        for jj in j[oky]:
            out.append((i, int(jj)))
    return np.array(out, dtype=np.int64).reshape(-1, 2)
