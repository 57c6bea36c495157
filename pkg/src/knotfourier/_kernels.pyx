# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_kernels_py``."""
from libcpp.vector cimport vector

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef void _push_reduced(vector[int]& out, int g) noexcept nogil:
    if out.size() > 0 and out.back() == -g:
        out.pop_back()
    else:
        out.push_back(g)


def free_reduce(word):
    cdef vector[int] out
    cdef int g
    for g in word:
        _push_reduced(out, g)
    return tuple(out)


cdef vector[int] _conj(const vector[int]& a, const vector[int]& b, bint left) noexcept nogil:
    # left:  a b a^-1     else:  b^-1 a b
    cdef vector[int] out
    cdef Py_ssize_t k
    out.reserve(2 * a.size() + b.size())
    if left:
        for k in range(<Py_ssize_t>a.size()):
            _push_reduced(out, a[k])
        for k in range(<Py_ssize_t>b.size()):
            _push_reduced(out, b[k])
        for k in range(<Py_ssize_t>a.size() - 1, -1, -1):
            _push_reduced(out, -a[k])
    else:
        for k in range(<Py_ssize_t>b.size() - 1, -1, -1):
            _push_reduced(out, -b[k])
        for k in range(<Py_ssize_t>a.size()):
            _push_reduced(out, a[k])
        for k in range(<Py_ssize_t>b.size()):
            _push_reduced(out, b[k])
    return out


def artin_images(int width, letters):
    cdef vector[vector[int]] images
    cdef vector[int] tmp
    cdef int k, g, i
    images.resize(width)
    for k in range(width):
        images[k].push_back(k + 1)
    for g in letters:
        i = (g if g > 0 else -g) - 1
        if g > 0:
            tmp = _conj(images[i], images[i + 1], True)
            images[i + 1] = images[i]
            images[i] = tmp
        else:
            tmp = _conj(images[i], images[i + 1], False)
            images[i] = images[i + 1]
            images[i + 1] = tmp
    return [tuple(images[k]) for k in range(width)]


cdef inline int _find(int* parent, int x) noexcept nogil:
    while parent[x] != x:
        parent[x] = parent[parent[x]]
        x = parent[x]
    return x


def bracket_state_counts(int n_labels, pairs_a, pairs_b, int extra_loops):
    cdef int n = len(pairs_a)
    cdef cnp.ndarray[cnp.int64_t, ndim=2] hist = np.zeros(
        (n + 1, n_labels + extra_loops + 2), dtype=np.int64)
    cdef vector[int] pa, pb
    cdef vector[int] parent
    cdef long long state, total = (<long long>1) << n
    cdef int c, k, comps, a_count, u, v, ru, rv, m
    for c in range(n):
        for (u, v) in pairs_a[c]:
            pa.push_back(u); pa.push_back(v)
        for (u, v) in pairs_b[c]:
            pb.push_back(u); pb.push_back(v)
    parent.resize(n_labels + 1)
    with nogil:
        for state in range(total):
            for k in range(n_labels):
                parent[k] = k
            comps = n_labels
            a_count = 0
            for c in range(n):
                for m in range(2):
                    if (state >> c) & 1:
                        u = pb[4 * c + 2 * m]
                        v = pb[4 * c + 2 * m + 1]
                    else:
                        u = pa[4 * c + 2 * m]
                        v = pa[4 * c + 2 * m + 1]
                    ru = _find(&parent[0], u)
                    rv = _find(&parent[0], v)
                    if ru != rv:
                        parent[ru] = rv
                        comps -= 1
                if not ((state >> c) & 1):
                    a_count += 1
            hist[a_count, comps + extra_loops] += 1
    return hist


cdef inline double _min4(double a, double b, double c, double d) noexcept nogil:
    return min(min(a, b), min(c, d))


cdef inline double _max4(double a, double b, double c, double d) noexcept nogil:
    return max(max(a, b), max(c, d))


def grid_candidates(x_in, y_in):
    cdef cnp.ndarray[cnp.float64_t, ndim=1] xs = np.ascontiguousarray(x_in, dtype=np.float64)
    cdef cnp.ndarray[cnp.float64_t, ndim=1] ys = np.ascontiguousarray(y_in, dtype=np.float64)
    cdef Py_ssize_t n = xs.shape[0]
    cdef Py_ssize_t i, j, i1, j1, jmax
    cdef double a, b, c, d
    cdef vector[long long] out
    with nogil:
        for i in range(n - 2):
            i1 = i + 1
            jmax = n - 1 if i == 0 else n
            for j in range(i + 2, jmax):
                j1 = j + 1
                if j1 == n:
                    j1 = 0
                a = xs[i] - xs[j]
                b = xs[i] - xs[j1]
                c = xs[i1] - xs[j]
                d = xs[i1] - xs[j1]
                if _min4(a, b, c, d) > 0 or _max4(a, b, c, d) < 0:
                    continue
                a = ys[i] - ys[j]
                b = ys[i] - ys[j1]
                c = ys[i1] - ys[j]
                d = ys[i1] - ys[j1]
                if _min4(a, b, c, d) > 0 or _max4(a, b, c, d) < 0:
                    continue
                out.push_back(i)
                out.push_back(j)
    arr = np.array(out, dtype=np.int64)
    return arr.reshape(-1, 2)
