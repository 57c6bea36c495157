"""The compiled kernels and the pure-Python fallback must agree exactly."""
import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, strategies as st

from knotfourier import _accel, _kernels_py
from knotfourier.diagram import _smoothing_pairs, pd_from_closure
from knotfourier.braid_core import BraidWord

compiled = pytest.importorskip("knotfourier._kernels")

letters = st.lists(st.integers(1, 5).flatmap(lambda g: st.sampled_from([g, -g])), max_size=40)


@given(letters)
def test_free_reduce(word):
    assert compiled.free_reduce(tuple(word)) == _kernels_py.free_reduce(tuple(word))


@given(letters)
def test_artin_images(word):
    assert compiled.artin_images(6, word) == _kernels_py.artin_images(6, word)


@given(st.integers(2, 4), st.data())
def test_bracket_state_counts(s, data):
    gens = st.integers(1, s - 1).flatmap(lambda g: st.sampled_from([g, -g]))
    w = BraidWord(s, tuple(data.draw(st.lists(gens, max_size=9))))
    pd = pd_from_closure(w)
    if not pd.crossings:
        return
    n, pa, pb = _smoothing_pairs(pd)
    a = compiled.bracket_state_counts(n, pa, pb, pd.loops)
    b = _kernels_py.bracket_state_counts(n, pa, pb, pd.loops)
    assert np.array_equal(a, b)


@given(st.integers(1, 4), st.integers(1, 5), st.floats(0, 6), st.floats(0, 6))
def test_grid_candidates(a, b, p, q):
    t = np.arange(300) / 300
    x = np.cos(2 * np.pi * a * t + p)
    y = np.cos(2 * np.pi * b * t + q)
    assert np.array_equal(compiled.grid_candidates(x, y), _kernels_py.grid_candidates(x, y))


def test_backend_selection():
    assert _accel.BACKEND in ("compiled", "python")
    env = dict(os.environ, KNOTFOURIER_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", "import knotfourier; print(knotfourier.BACKEND)"],
                         env=env, capture_output=True, text=True, check=True).stdout.strip()
    assert out == "python"


def test_pure_python_pipeline_agrees():
    # run a small end-to-end computation on the fallback in a subprocess
    code = (
        "from knotfourier.braid_core import BraidWord\n"
        "from knotfourier.rosette import conjugate_to_rosette, RosetteCache\n"
        "from knotfourier.diagram import jones, pd_from_closure\n"
        "c = conjugate_to_rosette(BraidWord(3, (1, -2, 1, -2)), RosetteCache())\n"
        "print(c.rosette.signs, jones(pd_from_closure(BraidWord(3, (1, -2, 1, -2)))))\n"
    )
    env = dict(os.environ, KNOTFOURIER_PURE_PYTHON="1")
    slow = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    fast = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    assert slow.stdout == fast.stdout
