"""Fourier knots: curves whose coordinates are finite cosine series.

Internally every coordinate is ``sum_i amp_i * cos(2 pi m_i t + phase_i)`` on
the parameter interval [0, 1).

Shadow/braid correspondence used by ``fourier_index_upper_bound``: the
x-axis is braid time (left to right = top to bottom of the braid word) and
braid positions increase with y.  This identification preserves the
orientation of the plane, so a crossing where the branch of negative slope
lies on top is sigma_p^{+1}.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np
from scipy.optimize import linprog

from . import _accel
from .braid_core import BraidError, BraidWord, cycle_count, permutation_of
from .diagram import (
    DiagramError,
    PDCode,
    determinant,
    jones,
    pd_from_closure,
    pd_from_crossing_data,
)

log = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


class FourierError(ValueError):
    pass


class NonGenericProjection(FourierError):
    pass


class HeightDegenerate(FourierError):
    pass


class StageFailure(FourierError):
    def __init__(self, stage: str, message: str, diagnostics: dict | None = None):
        super().__init__(f"[{stage}] {message}")
        self.stage = stage
        self.diagnostics = diagnostics or {}


# --- series -----------------------------------------------------------------------


@dataclass(frozen=True)
class FourierTerm:
    amplitude: float
    frequency: int
    phase: float

    def __post_init__(self):
        if int(self.frequency) != self.frequency or self.frequency < 1:
            raise FourierError(f"frequency must be a positive integer, got {self.frequency}")
        if self.amplitude == 0:
            raise FourierError("amplitude must be nonzero")
        object.__setattr__(self, "frequency", int(self.frequency))


@dataclass(frozen=True)
class FourierSeries:
    terms: tuple[FourierTerm, ...]

    def __post_init__(self):
        terms = tuple(t if isinstance(t, FourierTerm) else FourierTerm(*t) for t in self.terms)
        freqs = [t.frequency for t in terms]
        if len(set(freqs)) != len(freqs):
            terms = _merge_terms(terms)
        if not terms:
            raise FourierError("a Fourier series needs at least one term")
        object.__setattr__(self, "terms", terms)

    @classmethod
    def single(cls, amplitude: float, frequency: int, phase: float = 0.0) -> FourierSeries:
        return cls((FourierTerm(amplitude, frequency, phase),))

    def __len__(self) -> int:
        return len(self.terms)

    @property
    def frequencies(self) -> list[int]:
        return [t.frequency for t in self.terms]

    def __call__(self, t):
        return evaluate(self, t)

    def derivative(self, t):
        t = np.asarray(t, dtype=float)
        out = np.zeros_like(t)
        for term in self.terms:
            w = TWO_PI * term.frequency
            out = out - term.amplitude * w * np.sin(w * t + term.phase)
        return out

    def to_json(self) -> list:
        return [[t.amplitude, t.frequency, t.phase] for t in self.terms]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[float]]) -> FourierSeries:
        return cls(tuple(FourierTerm(float(a), int(m), float(p)) for a, m, p in data))


def _merge_terms(terms: Sequence[FourierTerm]) -> tuple[FourierTerm, ...]:
    acc: dict[int, complex] = {}
    for t in terms:
        acc[t.frequency] = acc.get(t.frequency, 0j) + t.amplitude * complex(math.cos(t.phase), math.sin(t.phase))
    out = []
    for m in sorted(acc):
        z = acc[m]
        if abs(z) > 1e-15:
            out.append(FourierTerm(abs(z), m, math.atan2(z.imag, z.real)))
    return tuple(out)


def evaluate(f: FourierSeries, t):
    """Pointwise value; terms are summed in stored order."""
    scalar = np.isscalar(t)
    # reduce to [0, 1) first so large parameters keep full accuracy
    t = np.mod(np.asarray(t, dtype=float), 1.0)
    out = np.zeros_like(t)
    for term in f.terms:
        out = out + term.amplitude * np.cos(TWO_PI * term.frequency * t + term.phase)
    return float(out) if scalar else out


@dataclass(frozen=True)
class FourierKnot:
    x1: FourierSeries
    x2: FourierSeries
    x3: FourierSeries

    def __post_init__(self):
        if not len(self.x1) <= len(self.x2) <= len(self.x3):
            raise FourierError(
                f"series lengths must satisfy n1 <= n2 <= n3, got {self.type}")

    @property
    def type(self) -> tuple[int, int, int]:
        return (len(self.x1), len(self.x2), len(self.x3))

    @property
    def max_frequency(self) -> int:
        return max(max(s.frequencies) for s in (self.x1, self.x2, self.x3))

    def to_json(self) -> dict:
        return {"x1": self.x1.to_json(), "x2": self.x2.to_json(), "x3": self.x3.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> FourierKnot:
        return cls(*(FourierSeries.from_json(data[k]) for k in ("x1", "x2", "x3")))


def sample(k: FourierKnot, n: int) -> np.ndarray:
    if n < 1:
        raise FourierError("need at least one sample")
    t = np.arange(n) / n
    return np.column_stack([evaluate(k.x1, t), evaluate(k.x2, t), evaluate(k.x3, t)])


def convert_paper_parametrization(x1, x2, x3) -> FourierKnot:
    """Series given as (amp, angular frequency, phase) over t in [0, 2 pi].

    cos(k t + phi) on [0, 2 pi] becomes cos(2 pi k u + phi) on [0, 1); when
    every frequency shares a factor g the curve is traced g times, so all
    frequencies are divided by g.
    """
    coords = []
    for terms in (x1, x2, x3):
        conv = []
        for amp, k, phi in terms:
            if abs(k - round(k)) > 1e-12 or round(k) < 1:
                raise FourierError(f"angular frequency {k} does not close the curve")
            conv.append((float(amp), int(round(k)), float(phi)))
        coords.append(conv)
    g = 0
    for conv in coords:
        for _, k, _ in conv:
            g = math.gcd(g, k)
    return FourierKnot(*(FourierSeries(tuple(FourierTerm(a, k // g, p) for a, k, p in conv))
                         for conv in coords))


# published example curves, t in [0, 2 pi]
EXAMPLE_TREFOIL = (
    [(1.0, 2, 6.0)],
    [(1.0, 3, 0.15)],
    [(1.0, 4, 1.0), (1.0, 5, 0.0)],
)
EXAMPLE_FIGURE_EIGHT = (
    [(1.0, 2, 0.8)],
    [(1.0, 3, 0.15)],
    [(1.0, 4, 1.0), (1.0, 5, 0.0)],
)


# --- crossings --------------------------------------------------------------------


@dataclass(frozen=True)
class CrossingConfig:
    grid: int = 2048
    newton_tol: float = 1e-12
    dedup: float = 1e-6
    height_sep: float = 1e-6
    max_newton: int = 60
    # smallest |sin(angle)| between the two branches at a crossing
    min_angle: float = 1e-7
    # grid cells per period of the fastest coordinate
    min_cells_per_period: int = 32

    def effective_grid(self, max_freq: int) -> int:
        return max(self.grid, self.min_cells_per_period * max_freq)


@dataclass(frozen=True)
class CrossingRecord:
    s: float
    t: float
    point: tuple[float, float]
    sign: int = 0
    over: str = ""

    @property
    def over_param(self) -> float:
        return self.s if self.over == "s" else self.t

    @property
    def under_param(self) -> float:
        return self.t if self.over == "s" else self.s

    def to_json(self) -> dict:
        return {"s": self.s, "t": self.t, "point": list(self.point),
                "sign": self.sign, "over": self.over}


def _cyc_dist(a, b):
    d = np.abs(a - b) % 1.0
    return np.minimum(d, 1.0 - d)


def shadow_crossings(x1: FourierSeries, x2: FourierSeries,
                     config: CrossingConfig = CrossingConfig()) -> list[CrossingRecord]:
    """Transverse double points of the plane curve (x1, x2), without heights."""
    max_freq = max(max(x1.frequencies), max(x2.frequencies))
    n = config.effective_grid(max_freq)
    grid_t = np.arange(n) / n
    xs, ys = evaluate(x1, grid_t), evaluate(x2, grid_t)
    cells = _accel.grid_candidates(xs, ys)
    if len(cells) == 0:
        return []
    s = (cells[:, 0] + 0.5) / n
    t = (cells[:, 1] + 0.5) / n
    ok = np.ones(len(s), dtype=bool)
    for _ in range(config.max_newton):
        f1 = evaluate(x1, s) - evaluate(x1, t)
        f2 = evaluate(x2, s) - evaluate(x2, t)
        a, b = x1.derivative(s), -x1.derivative(t)
        c, d = x2.derivative(s), -x2.derivative(t)
        det = a * d - b * c
        safe = np.abs(det) > 1e-300
        det = np.where(safe, det, 1.0)
        ds = (d * f1 - b * f2) / det
        dt = (-c * f1 + a * f2) / det
        # damp steps larger than a few cells
        lim = 4.0 / n
        scale = np.minimum(1.0, lim / np.maximum(np.abs(ds), np.abs(dt)).clip(1e-300))
        s = s - ds * scale
        t = t - dt * scale
        ok &= safe
        if np.all(np.maximum(np.abs(ds), np.abs(dt))[ok] < config.newton_tol):
            break
    s %= 1.0
    t %= 1.0
    f1 = evaluate(x1, s) - evaluate(x1, t)
    f2 = evaluate(x2, s) - evaluate(x2, t)
    resid = np.hypot(f1, f2)
    keep = ok & (resid < 1e-9) & (_cyc_dist(s, t) > 1.0 / n)
    s, t = s[keep], t[keep]
    lo, hi = np.minimum(s, t), np.maximum(s, t)
    order = np.lexsort((hi, lo))
    found: list[tuple[float, float]] = []
    for k in order:
        pair = (float(lo[k]), float(hi[k]))
        if found and abs(found[-1][0] - pair[0]) < config.dedup and abs(found[-1][1] - pair[1]) < config.dedup:
            continue
        dup = any(_cyc_dist(pair[0], q[0]) < config.dedup and _cyc_dist(pair[1], q[1]) < config.dedup
                  for q in found[-8:])
        if not dup:
            found.append(pair)
    records = []
    for a, b in found:
        pa = (float(evaluate(x1, a)), float(evaluate(x2, a)))
        ta = np.array([x1.derivative(a), x2.derivative(a)], dtype=float)
        tb = np.array([x1.derivative(b), x2.derivative(b)], dtype=float)
        cross = ta[0] * tb[1] - ta[1] * tb[0]
        if abs(cross) <= config.min_angle * np.linalg.norm(ta) * np.linalg.norm(tb):
            raise NonGenericProjection("non-generic projection: tangency at a double point")
        records.append(CrossingRecord(a, b, pa))
    pts = np.array([r.point for r in records])
    if len(pts) > 1:
        # three branches through one point show up as three close pairs
        diff = np.hypot(pts[:, None, 0] - pts[None, :, 0], pts[:, None, 1] - pts[None, :, 1])
        np.fill_diagonal(diff, np.inf)
        if np.min(diff) < 1e-7:
            raise NonGenericProjection("non-generic projection: suspected triple point")
    return records


def _tangent(k: FourierKnot, t: float) -> np.ndarray:
    return np.array([float(k.x1.derivative(t)), float(k.x2.derivative(t))])


def crossing_sign(over_tangent, under_tangent) -> int:
    c = over_tangent[0] * under_tangent[1] - over_tangent[1] * under_tangent[0]
    return 1 if c > 0 else -1


def find_crossings(k: FourierKnot, config: CrossingConfig = CrossingConfig()) -> list[CrossingRecord]:
    """Double points of the (x1, x2) projection with over/under and sign."""
    out = []
    for r in shadow_crossings(k.x1, k.x2, config):
        zs, zt = evaluate(k.x3, r.s), evaluate(k.x3, r.t)
        if abs(zs - zt) < config.height_sep:
            raise HeightDegenerate("height degenerate at crossing "
                                   f"(s={r.s:.9f}, t={r.t:.9f})")
        over = "s" if zs > zt else "t"
        o, u = (r.s, r.t) if over == "s" else (r.t, r.s)
        sign = crossing_sign(_tangent(k, o), _tangent(k, u))
        out.append(CrossingRecord(r.s, r.t, r.point, sign, over))
    return out


def diagram_from_crossings(records: Sequence[CrossingRecord]) -> PDCode:
    """PD code from the Gauss sequence of the crossings along the parameter."""
    if not records:
        return PDCode((), loops=1)
    visits = []
    for ci, r in enumerate(records):
        visits.append((r.s, ci, r.over == "s"))
        visits.append((r.t, ci, r.over == "t"))
    visits.sort()
    m = len(visits)
    slots: dict[tuple[int, bool], tuple[int, int]] = {}
    for v, (_, ci, is_over) in enumerate(visits):
        incoming = (v - 1) % m + 1
        outgoing = v + 1
        slots[(ci, is_over)] = (incoming, outgoing)
    data = []
    for ci, r in enumerate(records):
        u_in, u_out = slots[(ci, False)]
        o_in, o_out = slots[(ci, True)]
        data.append((u_in, u_out, o_in, o_out, r.sign))
    return pd_from_crossing_data(data, positions=tuple(r.point for r in records))


def diagram_of(k: FourierKnot, config: CrossingConfig = CrossingConfig()) -> PDCode:
    return diagram_from_crossings(find_crossings(k, config))


# --- Lissajous shadows --------------------------------------------------------------


@dataclass(frozen=True)
class ShadowReport:
    generic: bool
    reason: str = ""
    strands: int = 0
    rows: int = 0
    columns: int = 0
    crossings: tuple[CrossingRecord, ...] = ()
    # (layer, position) per crossing, same order as ``crossings``
    grid: tuple[tuple[int, int], ...] = ()

    @property
    def checkerboard_type(self) -> tuple[int, int]:
        return (self.strands, self.rows)

    def to_json(self) -> dict:
        return {"generic": self.generic, "reason": self.reason, "strands": self.strands,
                "rows": self.rows, "columns": self.columns,
                "crossings": len(self.crossings), "grid": [list(g) for g in self.grid]}


def _branches_at(x1: FourierSeries, x2: FourierSeries, c: float) -> np.ndarray:
    """y-values of the curve on the vertical line x = c (x1 has one term)."""
    term = x1.terms[0]
    a, m, phi = term.amplitude, term.frequency, term.phase
    base = math.acos(max(-1.0, min(1.0, c / a)))
    ts = []
    for k in range(m):
        for sgn in (1, -1):
            ts.append((sgn * base - phi + TWO_PI * k) / (TWO_PI * m))
    return evaluate(x2, np.array(ts) % 1.0)


def classify_shadow(x1: FourierSeries, x2: FourierSeries,
                    config: CrossingConfig = CrossingConfig()) -> ShadowReport:
    """Read a Lissajous projection as a checkerboard diagram.

    With x as braid time, a shadow with frequencies (a, b) should have 2a
    strands and 2(b-1)+1 crossing layers: even layers (crossings at
    positions 2, 4, ...) alternate with odd ones (1, 3, ...).  Anything else
    is reported as not generic.
    """
    if len(x1) != 1 or len(x2) != 1:
        raise FourierError("classify_shadow needs single-term series")
    a, b = x1.terms[0].frequency, x2.terms[0].frequency
    if math.gcd(a, b) != 1:
        return ShadowReport(False, "non-coprime frequencies")
    try:
        records = shadow_crossings(x1, x2, config)
    except NonGenericProjection as exc:
        return ShadowReport(False, str(exc))
    strands, rows = 2 * a, b - 1
    expected = (a - 1) + rows * (2 * a - 1)
    if len(records) != expected:
        return ShadowReport(False, f"expected {expected} crossings, found {len(records)}",
                            strands, rows, crossings=tuple(records))
    if not records:
        return ShadowReport(True, "", strands, rows, 2 * rows + 1, (), ())
    positions = []
    for r in records:
        ys = _branches_at(x1, x2, r.point[0])
        tol = 1e-6
        if int(np.sum(np.abs(ys - r.point[1]) <= tol)) != 2:
            return ShadowReport(False, f"crossing at x={r.point[0]:.6f} is not a simple double point",
                                strands, rows, crossings=tuple(records))
        positions.append(int(np.sum(ys < r.point[1] - tol)) + 1)
    # runs of equal position parity along x; crossings inside a run commute
    order = np.argsort([r.point[0] for r in records], kind="stable")
    runs: list[list[int]] = []
    for idx in order:
        odd = positions[idx] % 2 == 1
        if a > 1 and runs and (positions[runs[-1][-1]] % 2 == 1) == odd:
            runs[-1].append(int(idx))
        else:
            runs.append([int(idx)])
    if a > 1:
        layers = list(range(len(runs)))
    else:
        layers = [2 * k + 1 for k in range(len(runs))]
    if (a > 1 and len(runs) != 2 * rows + 1) or (a == 1 and len(runs) != rows):
        return ShadowReport(False, f"expected {2 * rows + 1} crossing layers, found {len(runs)}",
                            strands, rows, len(runs), tuple(records))
    grid: list[tuple[int, int]] = [(0, 0)] * len(records)
    for layer, members in zip(layers, runs):
        want = list(range(1 if layer % 2 else 2, strands, 2))
        got = sorted(positions[idx] for idx in members)
        if got != want:
            return ShadowReport(False, f"layer {layer} has crossings at {got}, expected {want}",
                                strands, rows, len(runs), tuple(records))
        for idx in members:
            grid[idx] = (layer, positions[idx])
    return ShadowReport(True, "", strands, rows, 2 * rows + 1, tuple(records), tuple(grid))


# --- height synthesis --------------------------------------------------------------


@dataclass(frozen=True)
class HeightConfig:
    margin: float = 0.05
    max_frequency: int = 512
    # sup-norm bound enforced on a grid of this many points per unit frequency
    bound_samples: int = 6
    drop_tol: float = 1e-9
    prune: bool = True


def _height_lp(over: np.ndarray, under: np.ndarray, freqs: Sequence[int],
               cfg: HeightConfig) -> np.ndarray | None:
    ks = np.asarray(freqs, dtype=float)

    def basis(t):
        ang = TWO_PI * np.outer(t, ks)
        return np.hstack([np.cos(ang), np.sin(ang)])

    diff = basis(over) - basis(under)
    m = max(64, cfg.bound_samples * int(max(freqs)) * 2)
    grid = basis(np.arange(m) / m)
    nv = 2 * len(ks)
    # variables: coefficients split as p - q with p, q >= 0; minimize L1
    c = np.ones(2 * nv)
    a_ub = np.vstack([
        -np.hstack([diff, -diff]),
        np.hstack([grid, -grid]),
        -np.hstack([grid, -grid]),
    ])
    b_ub = np.concatenate([-cfg.margin * np.ones(len(over)), np.ones(m), np.ones(m)])
    res = linprog(c, A_ub=a_ub, b_ub=b_ub, bounds=(0, None), method="highs")
    if res.status != 0:
        return None
    x = res.x
    return x[:nv] - x[nv:]


def _coeffs_to_series(coef: np.ndarray, freqs: Sequence[int], drop_tol: float) -> FourierSeries:
    terms = []
    big = float(np.max(np.abs(coef))) if len(coef) else 0.0
    n = len(freqs)
    for idx, k in enumerate(freqs):
        ca, cb = coef[idx], coef[n + idx]
        r = math.hypot(ca, cb)
        if r > drop_tol * max(big, 1.0):
            # ca cos(w t) + cb sin(w t) = r cos(w t - atan2(cb, ca))
            terms.append(FourierTerm(r, int(k), -math.atan2(cb, ca)))
    return FourierSeries(tuple(terms))


def height_margin(z: FourierSeries, over: Sequence[float], under: Sequence[float]) -> float:
    """Smallest z(over) - z(under), relative to max |z| on a fine grid."""
    kmax = max(z.frequencies)
    t = np.arange(64 * kmax) / (64 * kmax)
    scale = float(np.max(np.abs(evaluate(z, t))))
    d = evaluate(z, np.asarray(over, dtype=float)) - evaluate(z, np.asarray(under, dtype=float))
    return float(np.min(d)) / scale if len(d) else math.inf


def synthesize_height(shadow: ShadowReport | Sequence[CrossingRecord],
                      assignment: Sequence[str | int],
                      margin: float | None = None,
                      config: HeightConfig = HeightConfig()) -> FourierSeries:
    """Cosine series z with z(over) - z(under) >= margin at every crossing.

    ``assignment[c]`` names the parameter on top at crossing c: ``"s"`` or
    ``+1`` for the crossing's s parameter, ``"t"`` or ``-1`` for t.  The
    margin is relative to max |z|.  Basis sizes are searched by doubling and
    bisection; the smallest feasible maximal frequency is used, and the
    number of nonzero terms is returned as the series length.
    """
    records = shadow.crossings if isinstance(shadow, ShadowReport) else tuple(shadow)
    if len(assignment) != len(records):
        raise FourierError("assignment must cover every shadow crossing")
    if margin is None:
        margin = config.margin
    cfg = HeightConfig(margin, config.max_frequency, config.bound_samples, config.drop_tol,
                       config.prune)
    if not records:
        return FourierSeries.single(1.0, 1, 0.0)
    over, under = [], []
    for r, a in zip(records, assignment):
        s_on_top = a in ("s", 1, True)
        if a not in ("s", "t", 1, -1, True, False):
            raise FourierError(f"bad assignment entry {a!r}")
        over.append(r.s if s_on_top else r.t)
        under.append(r.t if s_on_top else r.s)
    over_a, under_a = np.array(over), np.array(under)

    def attempt(freqs):
        coef = _height_lp(over_a, under_a, freqs, cfg)
        if coef is None:
            return None
        z = _coeffs_to_series(coef, freqs, cfg.drop_tol)
        # the LP bounds |z| only on its grid; check the true margin
        if height_margin(z, over, under) < margin * (1 - 1e-6):
            return None
        return z

    def upto(k):
        return list(range(1, k + 1))

    lo, hi, best = 0, 1, None
    while hi <= cfg.max_frequency:
        best = attempt(upto(hi))
        if best is not None:
            break
        lo, hi = hi, hi * 2
    if best is None:
        if lo < cfg.max_frequency:
            best = attempt(upto(cfg.max_frequency))
            hi = cfg.max_frequency
        if best is None:
            raise FourierError("height synthesis budget exceeded")
    while hi - lo > 1:
        mid = (lo + hi) // 2
        z = attempt(upto(mid))
        if z is not None:
            hi, best = mid, z
        else:
            lo = mid
    if cfg.prune:
        best = _prune(best, attempt)
    return best


def _prune(z: FourierSeries, attempt) -> FourierSeries:
    """Greedily drop frequencies, weakest first, while the LP stays feasible."""
    changed = True
    while changed and len(z) > 1:
        changed = False
        for term in sorted(z.terms, key=lambda t: t.amplitude):
            rest = [f for f in z.frequencies if f != term.frequency]
            cand = attempt(rest)
            if cand is not None and len(cand) < len(z):
                z, changed = cand, True
                break
    return z


# --- the full pipeline -----------------------------------------------------------


@dataclass(frozen=True)
class FourierizeConfig:
    crossing: CrossingConfig = CrossingConfig()
    height: HeightConfig = HeightConfig()
    # identity-row paddings tried when frequencies are not coprime
    max_padding: int = 8
    phases: tuple[tuple[float, float], ...] = (
        (0.1, 0.7), (0.37, 1.21), (0.05, 0.3), (1.3, 0.2), (0.61, 2.9))


@dataclass
class FourierizeResult:
    knot: FourierKnot
    n: int
    verification: dict
    stages: dict = field(default_factory=dict)

    @property
    def type(self) -> tuple[int, int, int]:
        return self.knot.type

    def to_json(self) -> dict:
        return {"type": list(self.type), "n": self.n, "fourier_knot": self.knot.to_json(),
                "verification": self.verification, "stages": self.stages}


def destabilizes_to_unknot(w: BraidWord) -> bool:
    """True when free reduction and Markov destabilization empty the braid."""
    letters, width = list(w.letters), w.width
    while True:
        letters = list(_accel.free_reduce(tuple(letters)))
        while len(letters) > 1 and letters[0] == -letters[-1]:
            letters = letters[1:-1]
        if width == 1:
            return True
        top = width - 1
        hits = [k for k, g in enumerate(letters) if abs(g) == top]
        if len(hits) != 1:
            return False
        # cyclically rotate so the only sigma_top^{+-1} is last, then drop it
        k = hits[0]
        letters = letters[k + 1:] + letters[:k]
        width -= 1


def ellipse_knot() -> FourierKnot:
    return FourierKnot(FourierSeries.single(1.0, 1, 0.0),
                       FourierSeries.single(1.0, 1, -math.pi / 2),
                       FourierSeries.single(1.0, 1, 0.0))


def _compare(pd_in: PDCode, pd_out: PDCode) -> dict:
    det_in, det_out = determinant(pd_in), determinant(pd_out)
    j_in, j_out = jones(pd_in), jones(pd_out)
    return {
        "determinant_input": det_in,
        "determinant_output": det_out,
        "jones_input": str(j_in),
        "jones_output": str(j_out),
        "jones_match": j_in == j_out,
        "pass": det_in == det_out and j_in == j_out,
    }


def checkerboard_assignment(report: ShadowReport, letters_by_layer: Sequence[dict[int, int]],
                            x1: FourierSeries, x2: FourierSeries) -> list[str]:
    """Over-parameter choice per shadow crossing from the braid letter signs."""
    out = []
    for r, (layer, pos) in zip(report.crossings, report.grid):
        try:
            eps = letters_by_layer[layer][pos]
        except (IndexError, KeyError):
            raise StageFailure("transfer", f"no letter for layer {layer}, position {pos}")
        slope_s = float(x2.derivative(r.s)) / float(x1.derivative(r.s))
        slope_t = float(x2.derivative(r.t)) / float(x1.derivative(r.t))
        if (slope_s < 0) == (slope_t < 0):
            raise StageFailure("transfer", "both branches have the same slope direction")
        falling = "s" if slope_s < 0 else "t"
        rising = "t" if falling == "s" else "s"
        out.append(falling if eps > 0 else rising)
    return out


def fourier_index_upper_bound(w: BraidWord, config: FourierizeConfig = FourierizeConfig(),
                              cache=None) -> FourierizeResult:
    """Build and verify a type (1, 1, n) parametrization of the closure of ``w``."""
    from .plat import checkerboard_from_plat, checkerboard_word, closure_to_plat, normalize_plat
    from .rosette import identity_rosette

    if cycle_count(permutation_of(w)) != 1:
        raise StageFailure("input", "closure is not a knot")
    pd_in = pd_from_closure(w)
    stages: dict = {"input": {"width": w.width, "length": len(w)}}

    if destabilizes_to_unknot(w):
        knot = ellipse_knot()
        pd_out = diagram_of(knot, config.crossing)
        ver = _compare(pd_in, pd_out)
        ver["over_under_match"] = True
        stages["shadow"] = {"frequencies": [1, 1], "crossings": 0}
        if not ver["pass"]:
            raise StageFailure("verify", "invariants differ", ver)
        return FourierizeResult(knot, 1, ver, stages)

    try:
        plat = closure_to_plat(w)
        plat, moves = normalize_plat(plat)
        board = checkerboard_from_plat(plat, cache)
    except BraidError as exc:
        raise StageFailure("checkerboard", str(exc)) from exc
    b = board.b
    stages["checkerboard"] = {"type": list(board.type), "moves": len(moves)}

    a = b
    rows = board.rosette.n
    padding = 0
    pad_rows = identity_rosette(2 * b, cache)
    report = None
    chosen = None
    for padding in range(config.max_padding + 1):
        freq_y = rows + padding * pad_rows.n + 1
        if math.gcd(a, freq_y) != 1:
            continue
        for phx, phy in config.phases:
            x1 = FourierSeries.single(1.0, a, phx)
            x2 = FourierSeries.single(1.0, freq_y, phy)
            rep = classify_shadow(x1, x2, config.crossing)
            if rep.generic and rep.checkerboard_type == (2 * b, freq_y - 1):
                report, chosen = rep, (x1, x2)
                break
        if report is not None:
            break
    if report is None:
        raise StageFailure("shadow", "no matching Lissajous shadow within budget",
                           {"strands": 2 * b, "rows": rows})
    for _ in range(padding):
        board = type(board)(board.b, board.epsilons, board.rosette + pad_rows)
    x1, x2 = chosen
    stages["shadow"] = {"frequencies": [a, x2.terms[0].frequency],
                        "phases": [x1.terms[0].phase, x2.terms[0].phase],
                        "crossings": len(report.crossings), "padding_blocks": padding}

    word = checkerboard_word(board)
    layers: list[dict[int, int]] = [dict() for _ in range(report.columns)]
    layers[0] = {abs(g): (1 if g > 0 else -1) for g in word.letters[: b - 1]}
    per_row = 2 * b - 1
    body = word.letters[b - 1:]
    for r in range(board.rosette.n):
        row = body[r * per_row:(r + 1) * per_row]
        odd = {abs(g): (1 if g > 0 else -1) for g in row if abs(g) % 2 == 1}
        even = {abs(g): (1 if g > 0 else -1) for g in row if abs(g) % 2 == 0}
        layers[2 * r + 1] = odd
        layers[2 * r + 2] = even
    assignment = checkerboard_assignment(report, layers, x1, x2)

    try:
        z = synthesize_height(report, assignment, config.height.margin, config.height)
    except FourierError as exc:
        raise StageFailure("height", str(exc)) from exc
    knot = FourierKnot(x1, x2, z)
    stages["height"] = {"terms": len(z), "max_frequency": max(z.frequencies),
                        "margin": height_margin(z, [r.s if a_ == "s" else r.t for r, a_ in zip(report.crossings, assignment)],
                                                [r.t if a_ == "s" else r.s for r, a_ in zip(report.crossings, assignment)])}

    try:
        records = find_crossings(knot, config.crossing)
    except FourierError as exc:
        raise StageFailure("extract", str(exc)) from exc
    pd_out = diagram_from_crossings(records)
    over_ok = _same_over_under(report.crossings, assignment, records, config.crossing.dedup)
    try:
        ver = _compare(pd_in, pd_out)
    except DiagramError as exc:
        raise StageFailure("verify", str(exc)) from exc
    ver["over_under_match"] = over_ok
    ver["pass"] = ver["pass"] and over_ok
    if not ver["pass"]:
        raise StageFailure("verify", "re-extracted diagram does not match the input", ver)
    return FourierizeResult(knot, len(z), ver, stages)


def _same_over_under(shadow: Sequence[CrossingRecord], assignment: Sequence[str],
                     records: Sequence[CrossingRecord], tol: float) -> bool:
    if len(shadow) != len(records):
        return False
    for r, a in zip(shadow, assignment):
        match = [q for q in records if abs(q.s - r.s) < 10 * tol and abs(q.t - r.t) < 10 * tol]
        if len(match) != 1 or match[0].over != a:
            return False
    return True
