"""Lower and upper bounds on the A_alpha-energy, the auxiliary inequalities
they rest on, and classification of equality cases by spectral shape.

Every bound is a plain function of ``(g, alpha)``; pass ``sp`` to reuse an
already computed :class:`~alphaspec.spectra.Spectrum`.  A bound whose
hypotheses fail raises :class:`BoundNotApplicable`; :func:`full_report`
turns that into data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from .closed_forms import balanced_bipartite_alpha_spectrum, complete_alpha_spectrum, expand
from .graph import Graph, is_connected
from .spectra import Spectrum, build_alpha_matrix, cluster_tolerance, distinct_eigenvalues, spectrum

TOL = 1e-8


class BoundNotApplicable(ValueError):
    """The hypotheses of a bound do not hold for this graph / alpha."""


# --- scalar ingredients ---------------------------------------------------------

def moment_y(g: Graph, alpha: float) -> float:
    """Sum of squared auxiliary eigenvalues, from n, m and the Zagreb index."""
    a = alpha
    return a * a * g.zagreb + (1 - a) ** 2 * 2 * g.m - 4 * a * a * g.m * g.m / g.n


def c_threshold(g: Graph, alpha: float) -> float:
    a, n, m = alpha, g.n, g.m
    return m * (a * a * n**3 + n * n * (2 - 4 * a - a * a) + n * (4 * a - 2 - 2 * a * a * m) + 4 * a * a * m)


def degree_term(g: Graph, alpha: float) -> float:
    """(1-alpha)^2 2m + (alpha^2 / 2)(Delta - delta)^2, a lower estimate of y."""
    spread = g.max_degree - g.min_degree
    return (1 - alpha) ** 2 * 2 * g.m + alpha * alpha * spread * spread / 2


def _spec(g: Graph, alpha: float, sp: Spectrum | None) -> Spectrum:
    return spectrum(g, alpha) if sp is None else sp


def _require(cond: bool, reason: str) -> None:
    if not cond:
        raise BoundNotApplicable(reason)


def _require_alpha(alpha: float) -> None:
    _require(0.0 <= alpha < 1.0, "needs 0 <= alpha < 1")


def _require_connected(g: Graph) -> None:
    _require(is_connected(g), "graph is disconnected")


# --- spectral shape -------------------------------------------------------------

class Shape(str, Enum):
    TWO_LEVEL_EQUAL = "TwoLevelEqual"
    COMPLETE_GRAPH = "CompleteGraph"
    MATCHING_UNION = "MatchingUnion"
    BALANCED_BIPARTITE = "BalancedBipartite"
    FOUR_VALUE_I = "FourValueCase_i"
    FOUR_VALUE_II = "FourValueCase_ii"
    THREE_VALUE_ZERO = "ThreeValueZeroCase"
    NONE = "None"

    def __str__(self) -> str:
        return self.value


# equality shapes of the two-level bound and of the s_n = 0 bound
TWO_LEVEL_SHAPES = frozenset(
    {Shape.COMPLETE_GRAPH, Shape.MATCHING_UNION, Shape.TWO_LEVEL_EQUAL, Shape.FOUR_VALUE_I, Shape.FOUR_VALUE_II}
)
ZERO_SHAPES = frozenset({Shape.BALANCED_BIPARTITE, Shape.THREE_VALUE_ZERO})


@dataclass(frozen=True)
class SpectrumShape:
    """Deviation levels of a spectrum: ``h`` = s_1, ``k`` = s_n and ``t`` the
    number of deviations at level ``h``.  ``levels`` counts distinct s values."""

    clusters: list[tuple[float, int]]
    h: float
    k: float
    t: int
    levels: int
    classification: Shape


def _matches(values: np.ndarray, template: list[float], tol: float) -> bool:
    return len(template) == len(values) and bool(np.all(np.abs(values - np.asarray(template)) <= tol))


def _subset_of(clusters, targets, tol: float) -> bool:
    return all(any(abs(v - t) <= tol for t in targets) for v, _ in clusters)


def classify_equality_shape(sp: Spectrum, g: Graph) -> SpectrumShape:
    n, m, a = g.n, g.m, sp.alpha
    tol = cluster_tolerance(sp.p)
    clusters = distinct_eigenvalues(sp.p, tol)
    s_levels = distinct_eigenvalues(sp.s, tol)
    h, k = float(sp.s[0]), float(sp.s[-1])
    t = s_levels[0][1]
    shape = SpectrumShape(clusters, h, k, t, len(s_levels), Shape.NONE)

    def named(kind: Shape) -> SpectrumShape:
        return SpectrumShape(clusters, h, k, t, len(s_levels), kind)

    if len(s_levels) > 2 or m == 0:
        return shape
    if n >= 2 and 2 * m == n * (n - 1) and _matches(sp.p, expand(complete_alpha_spectrum(n, a)), tol):
        return named(Shape.COMPLETE_GRAPH)
    if n % 2 == 0 and 2 * m == n and _matches(sp.p, [1.0] * (n // 2) + [2 * a - 1.0] * (n // 2), tol):
        return named(Shape.MATCHING_UNION)
    if n % 2 == 0 and _matches(sp.p, expand(balanced_bipartite_alpha_spectrum(n // 2, a)), tol):
        return named(Shape.BALANCED_BIPARTITE)

    mu = sp.mean_shift
    regular_level = 2 * m * (1 - a) / n  # s_1 of a regular graph
    if n >= 3 and k <= tol and t == 2:
        positive = int(np.sum(sp.eta > tol))
        if positive == 1 and h > regular_level + tol:
            return named(Shape.THREE_VALUE_ZERO)
        return shape

    y = moment_y(g, a)
    if k <= tol or (math.sqrt(max(y, 0.0)) - math.sqrt(n * h * k)) ** 2 > TOL * (h + k):
        return shape
    if h - k <= tol:
        return named(Shape.TWO_LEVEL_EQUAL)
    if abs(h - regular_level) <= tol:
        r = 2 * m / n
        targets = (r, r * (2 * a - 1), mu + (1 - a), mu - (1 - a))
        return named(Shape.FOUR_VALUE_I) if _subset_of(clusters, targets, tol) else shape
    if h > regular_level + tol:
        return named(Shape.FOUR_VALUE_II)
    return shape


# --- auxiliary inequalities -------------------------------------------------------

def zagreb_bounds(g: Graph) -> tuple[float, float, float]:
    """``(lower, upper_a, upper_b)`` for the first Zagreb index of a connected graph.

    lower   = 4m^2/n + (Delta - delta)^2 / 2
    upper_a = m (2m/(n-1) + n - 2)
    upper_b = 4m^2/n + (n/4)(Delta - delta)^2
    """
    _require(g.n >= 2, "needs n >= 2")
    _require_connected(g)
    n, m = g.n, g.m
    spread = (g.max_degree - g.min_degree) ** 2
    base = 4 * m * m / n
    return base + spread / 2, m * (2 * m / (n - 1) + n - 2), base + n * spread / 4


def trace_radius_bound(B) -> float:
    """Upper bound on the largest eigenvalue of a non-negative matrix from tr(B), tr(B^2)."""
    B = np.asarray(B, dtype=float)
    n = B.shape[0]
    _require(n >= 3, "needs order >= 3")
    _require(bool((B >= 0).all()), "matrix has negative entries")
    a = float(np.trace(B))
    b = float(np.einsum("ij,ji->", B, B))
    return a / n + math.sqrt(max((n - 1) / n * (b - a * a / n), 0.0))


def ordered_sum_inequality(a) -> bool:
    """Check sum a_i (a_1 + a_n) >= sum a_i^2 + n a_1 a_n for descending non-negative a."""
    a = [float(x) for x in np.ravel(a)]
    if not a:
        raise ValueError("expected a non-empty sequence")
    if min(a) < 0:
        raise ValueError("entries must be non-negative")
    if any(x < y for x, y in zip(a, a[1:])):
        raise ValueError("entries must be sorted in descending order")
    lhs = sum(a) * (a[0] + a[-1])
    rhs = sum(x * x for x in a) + len(a) * a[0] * a[-1]
    return lhs >= rhs - 1e-12 * max(1.0, abs(lhs))


# --- energy bounds ----------------------------------------------------------------

def lower_bound_strict(g: Graph, alpha: float, sp: Spectrum | None = None) -> float:
    """sqrt(2y); strictly below the energy of a connected graph except when
    exactly two auxiliary eigenvalues are non-zero (see verify)."""
    _require_alpha(alpha)
    _require(g.n >= 2 and g.m >= 1, "needs n >= 2 and m >= 1")
    _require_connected(g)
    return math.sqrt(max(2 * moment_y(g, alpha), 0.0))


def lower_bound_two_level(g: Graph, alpha: float, sp: Spectrum | None = None) -> float:
    _require_alpha(alpha)
    _require(g.n >= 2 and g.m >= 1, "needs n >= 2 and m >= 1")
    sp = _spec(g, alpha, sp)
    s1, sn = float(sp.s[0]), float(sp.s[-1])
    _require(s1 + sn > 1e-12, "s_1 + s_n vanishes")
    y = max(moment_y(g, alpha), 0.0)
    return 2 * math.sqrt(y * g.n) * math.sqrt(s1 * sn) / (s1 + sn)


def _threshold_corollary(g, alpha, sp, divisor, factor) -> tuple[bool, float]:
    _require_alpha(alpha)
    _require(g.n >= 3 and g.m >= 2, "needs n >= 3 and m >= 2")
    _require_connected(g)
    sp = _spec(g, alpha, sp)
    c = c_threshold(g, alpha)
    applicable = c >= 0 and float(sp.s[-1]) >= math.sqrt(c) / divisor - TOL
    return applicable, factor * math.sqrt(degree_term(g, alpha) * g.n)


def lower_bound_threshold_cor1(g: Graph, alpha: float, sp: Spectrum | None = None) -> tuple[bool, float]:
    """Applies when s_n >= sqrt(c)/(2n); bound (2 sqrt 2 / 3) sqrt(degree_term * n)."""
    return _threshold_corollary(g, alpha, sp, 2 * g.n, 2 * math.sqrt(2) / 3)


def lower_bound_threshold_cor2(g: Graph, alpha: float, sp: Spectrum | None = None) -> tuple[bool, float]:
    """Applies when s_n >= sqrt(c)/n^3; strict bound 2n/(1+n^2) sqrt(degree_term * n)."""
    n = g.n
    return _threshold_corollary(g, alpha, sp, n**3, 2 * n / (1 + n * n))


def _sn_is_zero(sp: Spectrum) -> bool:
    return float(sp.s[-1]) <= cluster_tolerance(sp.p)


def lower_bound_sn_zero(g: Graph, alpha: float, sp: Spectrum | None = None) -> tuple[bool, float]:
    _require_alpha(alpha)
    _require(g.m >= 1, "needs m >= 1")
    _require_connected(g)
    sp = _spec(g, alpha, sp)
    s1 = float(sp.s[0])
    return _sn_is_zero(sp), moment_y(g, alpha) / s1


def lower_bound_piecewise(g: Graph, alpha: float, sp: Spectrum | None = None) -> tuple[bool, float]:
    """``(regular_branch, bound)`` for connected graphs with s_n = 0.

    The non-regular branch is strict and carries alpha^2 on the degree-spread term.
    """
    _require_alpha(alpha)
    _require(g.m >= 1, "needs m >= 1")
    _require_connected(g)
    sp = _spec(g, alpha, sp)
    _require(_sn_is_zero(sp), "s_n is not zero")
    if g.is_regular:
        return True, (1 - alpha) * g.n
    return False, degree_term(g, alpha) / (g.max_degree - 2 * alpha * g.m / g.n)


def lower_bound_regular(g: Graph, alpha: float, sp: Spectrum | None = None) -> float:
    _require_alpha(alpha)
    _require(g.m >= 1, "needs m >= 1")
    _require(g.is_regular, "graph is not regular")
    _require_connected(g)
    sp = _spec(g, alpha, sp)
    if _sn_is_zero(sp):
        return (1 - alpha) * g.n
    r, sn = g.max_degree, float(sp.s[-1])
    return 2 * (1 - alpha) * g.n * r * math.sqrt(sn) / (r + sn)


def upper_bound_main(g: Graph, alpha: float, sp: Spectrum | None = None) -> float:
    _require_alpha(alpha)
    _require(g.m >= 1, "needs m >= 1")
    y = max(moment_y(g, alpha), 0.0)
    n = g.n
    return math.sqrt(y / n) + math.sqrt(max((n - 1) * (y - y / n), 0.0))


def upper_bound_zagreb(g: Graph, alpha: float, sp: Spectrum | None = None) -> float:
    _require_alpha(alpha)
    _require(g.n >= 2, "needs n >= 2")
    _require_connected(g)
    spread = g.max_degree - g.min_degree
    n = g.n
    return n * math.sqrt(2 * g.m * (1 - alpha) ** 2 / n + alpha * alpha * spread * spread / 4)


def upper_bound_regular(g: Graph, alpha: float, sp: Spectrum | None = None) -> float:
    _require_alpha(alpha)
    _require(g.m >= 1, "needs m >= 1")
    _require(g.is_regular, "graph is not regular")
    return g.n * (1 - alpha) * math.sqrt(2 * g.m / g.n)


# --- aggregate report -------------------------------------------------------------

@dataclass(frozen=True)
class BoundRecord:
    name: str
    kind: str  # "lower" | "upper"
    strict: bool  # the bound is claimed to be strict
    applicable: bool
    value: float | None = None
    satisfied: bool | None = None
    slack: float | None = None  # energy - value
    equality: bool = False
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "value": self.value,
            "applicable": self.applicable,
            "satisfied": self.satisfied,
            "slack": self.slack,
            "equality": self.equality,
            "reason": self.reason,
        }


@dataclass(frozen=True)
class BoundReport:
    alpha: float
    n: int
    m: int
    y: float
    c: float
    energy: float
    shape: SpectrumShape
    bounds: list[BoundRecord] = field(default_factory=list)

    def __getitem__(self, name: str) -> BoundRecord:
        for b in self.bounds:
            if b.name == name:
                return b
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "n": self.n,
            "m": self.m,
            "y": self.y,
            "c": self.c,
            "energy": self.energy,
            "classification": str(self.shape.classification),
            "bounds": [b.to_dict() for b in self.bounds],
        }


def _single(fn):
    def run(g, alpha, sp):
        return True, fn(g, alpha, sp), ""
    return run


def _pair(fn, note_true="", note_false="premise fails"):
    def run(g, alpha, sp):
        flag, value = fn(g, alpha, sp)
        return flag, value, note_true if flag else note_false
    return run


def _piecewise(g, alpha, sp):
    regular, value = lower_bound_piecewise(g, alpha, sp)
    return True, value, "regular branch" if regular else "non-regular branch"


# name -> (kind, claimed strict, evaluator returning (applicable, value, note))
BOUNDS = {
    "lower_strict": ("lower", True, _single(lower_bound_strict)),
    "lower_two_level": ("lower", False, _single(lower_bound_two_level)),
    "lower_cor1": ("lower", False, _pair(lower_bound_threshold_cor1, note_false="s_n below sqrt(c)/(2n)")),
    "lower_cor2": ("lower", True, _pair(lower_bound_threshold_cor2, note_false="s_n below sqrt(c)/n^3")),
    "lower_sn_zero": ("lower", False, _pair(lower_bound_sn_zero, note_false="s_n is not zero")),
    "lower_piecewise": ("lower", False, _piecewise),
    "lower_regular": ("lower", False, _single(lower_bound_regular)),
    "upper_main": ("upper", False, _single(upper_bound_main)),
    "upper_zagreb": ("upper", False, _single(upper_bound_zagreb)),
    "upper_regular": ("upper", False, _single(upper_bound_regular)),
}


def full_report(g: Graph, alpha: float, sp: Spectrum | None = None) -> BoundReport:
    """Evaluate every energy bound with applicability flags and the spectral shape."""
    sp = _spec(g, alpha, sp)
    shape = classify_equality_shape(sp, g)
    energy = sp.energy
    records = []
    for name, (kind, strict, run) in BOUNDS.items():
        try:
            applicable, value, note = run(g, alpha, sp)
        except BoundNotApplicable as exc:
            records.append(BoundRecord(name, kind, strict, False, reason=str(exc)))
            continue
        if not applicable:
            records.append(BoundRecord(name, kind, strict, False, value=value, reason=note))
            continue
        slack = energy - value
        satisfied = slack >= -TOL if kind == "lower" else slack <= TOL
        equality = abs(slack) <= TOL and shape.classification is not Shape.NONE
        records.append(BoundRecord(name, kind, strict, True, value, satisfied, slack, equality, note))
    return BoundReport(alpha, g.n, g.m, moment_y(g, alpha), c_threshold(g, alpha), energy, shape, records)


def largest_eigenvalue_check(g: Graph, alpha: float, sp: Spectrum | None = None) -> tuple[float, float]:
    """``(rho, bound)`` for the trace bound applied to A_alpha(G)."""
    sp = _spec(g, alpha, sp)
    return sp.radius, trace_radius_bound(build_alpha_matrix(g, alpha))
