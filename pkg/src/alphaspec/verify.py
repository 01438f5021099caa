"""Exhaustive verification over all labeled graphs of small order.

Every registered check is evaluated on each ``(graph, alpha)`` pair under
its own hypotheses.  Graphs are enumerated as edge-set bitmasks in graph6
bit order, so a sweep is deterministic and every record can be replayed
from its graph6 string.

Some claims are known to fail on precisely characterised families; those
pairs are collected under ``known_exceptions`` (with the reason) instead
of ``violations``, so that any failure outside the characterisation still
counts.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Callable, Iterator

import numpy as np

from . import bounds as bd
from .eigen import jacobi
from .graph import (
    Graph,
    is_balanced_complete_bipartite,
    is_complete,
    is_connected,
    is_perfect_matching,
)
from .graph6 import write_graph6
from .spectra import (
    MOMENT_TOL,
    Spectrum,
    alpha_matrices,
    build_alpha_matrix,
    cluster_tolerance,
    distinct_eigenvalues,
    moment_targets,
)

N_CAP = 7
DEFAULT_ALPHAS = tuple(i / 10 for i in range(10))
STRICT_MARGIN = 1e-10
TOL = bd.TOL


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    n_max: int = 6
    alpha_grid: tuple[float, ...] = DEFAULT_ALPHAS
    connected_only: bool = False
    theorem_ids: tuple[str, ...] | None = None  # None: every registered check
    jobs: int = 1
    n_min: int = 2

    def __post_init__(self) -> None:
        if not 2 <= self.n_min <= self.n_max:
            raise ConfigError(f"need 2 <= n_min <= n_max, got n_min={self.n_min}, n_max={self.n_max}")
        if self.n_max > N_CAP:
            raise ConfigError(f"n_max={self.n_max} exceeds the supported cap of {N_CAP}")
        if not self.alpha_grid:
            raise ConfigError("alpha grid is empty")
        for a in self.alpha_grid:
            if not 0.0 <= a < 1.0:
                raise ConfigError(f"alpha grid values must lie in [0, 1), got {a}")
        if self.theorem_ids is not None:
            unknown = sorted(set(self.theorem_ids) - set(THEOREMS))
            if unknown:
                raise ConfigError(f"unknown theorem id(s): {', '.join(unknown)}")
        if self.jobs < 1:
            raise ConfigError("jobs must be >= 1")

    @property
    def selected(self) -> tuple[str, ...]:
        return tuple(THEOREMS) if self.theorem_ids is None else tuple(self.theorem_ids)


# --- enumeration ----------------------------------------------------------------

def edge_pairs(n: int) -> list[tuple[int, int]]:
    """Vertex pairs in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ..."""
    return [(i, j) for j in range(1, n) for i in range(j)]


def adjacency_stack(n: int) -> np.ndarray:
    """Adjacency matrices of all 2^(n(n-1)/2) labeled graphs, bitmask ascending."""
    pairs = edge_pairs(n)
    masks = np.arange(1 << len(pairs), dtype=np.int64)
    bits = ((masks[:, None] >> np.arange(len(pairs))) & 1).astype(bool)
    adj = np.zeros((len(masks), n, n), dtype=bool)
    for k, (i, j) in enumerate(pairs):
        adj[:, i, j] = adj[:, j, i] = bits[:, k]
    return adj


def connectivity_mask(adj: np.ndarray) -> np.ndarray:
    """Connectedness of each graph in a stack, by repeated squaring of I + A."""
    n = adj.shape[-1]
    reach = adj | np.eye(n, dtype=bool)
    for _ in range(max(1, (n - 1).bit_length())):
        reach = np.einsum("bij,bjk->bik", reach.astype(np.int32), reach.astype(np.int32)) > 0
    return reach[:, 0, :].all(axis=1)


@lru_cache(maxsize=4)
def labeled_graphs(n: int, connected_only: bool = False) -> tuple[Graph, ...]:
    """All labeled graphs on n vertices, bitmask ascending, with connectivity pre-filled."""
    if not 2 <= n <= N_CAP:
        raise ConfigError(f"enumeration supports 2 <= n <= {N_CAP}, got {n}")
    adj = adjacency_stack(n)
    conn = connectivity_mask(adj)
    graphs = []
    for a, c in zip(adj, conn):
        if connected_only and not c:
            continue
        g = Graph(a)
        object.__setattr__(g, "_connected", bool(c))
        graphs.append(g)
    return tuple(graphs)


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    yield from labeled_graphs(n, connected_only)


# --- per-pair context ---------------------------------------------------------------

class Case:
    """One ``(graph, alpha)`` pair with lazily derived data shared by all checks."""

    def __init__(self, g: Graph, alpha: float, sp: Spectrum, first_alpha: bool) -> None:
        self.g = g
        self.alpha = alpha
        self.sp = sp
        self.first_alpha = first_alpha

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g)

    @cached_property
    def report(self) -> bd.BoundReport:
        return bd.full_report(self.g, self.alpha, self.sp)

    @cached_property
    def tol(self) -> float:
        return cluster_tolerance(self.sp.p)

    @cached_property
    def clusters(self) -> list[tuple[float, int]]:
        return distinct_eigenvalues(self.sp.p, self.tol)

    @cached_property
    def graph6(self) -> str:
        return write_graph6(self.g).decode("ascii")


@dataclass
class Outcome:
    """Result of one check on one pair.  ``known`` names the characterised
    exception that explains a failure; ``witness`` marks an equality case."""

    ok: bool
    measured: dict = field(default_factory=dict)
    witness: bool = False
    known: str | None = None


Check = Callable[[Case], "Outcome | None"]


@dataclass(frozen=True)
class Theorem:
    id: str
    description: str
    check: Check
    alpha_free: bool = False
    records_witnesses: bool = False


def _close(a: float, b: float, tol: float = TOL) -> bool:
    return abs(a - b) <= tol


# --- spectral checks -------------------------------------------------------------

def check_moments(case: Case) -> Outcome:
    sp = case.sp
    targets = moment_targets(case.g, case.alpha)
    measured = (float(sp.p.sum()), float(sp.p @ sp.p), float(sp.eta @ sp.eta))
    ok = all(abs(x - t) <= MOMENT_TOL * max(1.0, abs(t)) for x, t in zip(measured, targets))
    return Outcome(ok, {"sum_p": measured[0], "sum_p2": measured[1], "sum_eta2": measured[2]})


def check_radius_sandwich(case: Case) -> Outcome:
    g, p1 = case.g, case.sp.radius
    lo, hi = g.min_degree, g.max_degree
    ok = lo - TOL <= p1 <= hi + TOL
    if ok and case.connected and not g.is_regular:
        ok = not (_close(p1, hi) or _close(p1, lo))
    return Outcome(ok, {"p1": p1, "min_degree": lo, "max_degree": hi})


def check_radius_average(case: Case) -> Outcome:
    g, p1 = case.g, case.sp.radius
    avg = 2 * g.m / g.n
    ok = p1 >= avg - TOL and (_close(p1, avg) == g.is_regular)
    return Outcome(ok, {"p1": p1, "average_degree": avg})


def check_top_simple(case: Case) -> Outcome | None:
    if not case.connected:
        return None
    mult = case.clusters[0][1]
    return Outcome(mult == 1, {"p1": case.sp.radius, "multiplicity": mult})


def check_psd(case: Case) -> Outcome | None:
    if case.alpha < 0.5:
        return None
    pn = float(case.sp.p[-1])
    return Outcome(pn >= -TOL, {"p_n": pn})


def check_two_distinct(case: Case) -> Outcome | None:
    if not case.connected:
        return None
    two = len(case.clusters) == 2
    complete = is_complete(case.g)
    return Outcome(two == complete, {"distinct": len(case.clusters), "complete": complete}, witness=two)


def check_three_value_regular(case: Case) -> Outcome | None:
    g, a = case.g, case.alpha
    if not (case.connected and g.is_regular and g.m >= 1):
        return None
    r = float(g.max_degree)
    top, top_mult = case.clusters[0]
    rest = case.clusters[1:]
    targets = (r * a + (1 - a), r * a - (1 - a))
    pattern = _close(top, r, case.tol) and top_mult == 1 and all(
        any(_close(v, t, case.tol) for t in targets) for v, _ in rest
    )
    if not pattern:
        return Outcome(True)
    return Outcome(is_complete(g), {"clusters": len(case.clusters)}, witness=True)


def check_trace_radius(case: Case) -> Outcome | None:
    if case.g.n < 3:
        return None
    bound = bd.trace_radius_bound(build_alpha_matrix(case.g, case.alpha))
    return Outcome(case.sp.radius <= bound + TOL, {"rho": case.sp.radius, "bound": bound})


def check_ordered_sum(case: Case) -> Outcome:
    return Outcome(bd.ordered_sum_inequality(case.sp.s), {"s1": float(case.sp.s[0]), "sn": float(case.sp.s[-1])})


# --- Zagreb index checks (alpha-free) -----------------------------------------------

def _zagreb(case: Case):
    g = case.g
    if not (case.first_alpha and case.connected and g.n >= 2):
        return None
    return bd.zagreb_bounds(g)


def check_zagreb(case: Case) -> Outcome | None:
    zb = _zagreb(case)
    if zb is None:
        return None
    lower, upper_a, upper_b = zb
    m1 = case.g.zagreb
    ok = lower - TOL <= m1 <= min(upper_a, upper_b) + TOL
    return Outcome(ok, {"M1": m1, "lower": lower, "upper_a": upper_a, "upper_b": upper_b})


def _degree_midpoint_split(g: Graph) -> bool:
    """Degrees are {Delta, delta, ((Delta+delta)/2)^(n-2)}: equality in the spread lower bound."""
    d = sorted(g.degrees)
    mid = (d[0] + d[-1]) / 2
    return all(x == mid for x in d[1:-1])


def _degree_half_split(g: Graph) -> bool:
    """Half of the degrees equal Delta and half equal delta: equality in the spread upper bound."""
    d = g.degrees
    return g.n % 2 == 0 and d.count(g.max_degree) == d.count(g.min_degree) == g.n // 2


def check_zagreb_lower_equality(case: Case) -> Outcome | None:
    zb = _zagreb(case)
    if zb is None:
        return None
    g = case.g
    eq = _close(g.zagreb, zb[0])
    ok = eq == g.is_regular
    known = None
    if not ok and eq and _degree_midpoint_split(g):
        known = "non-regular degree sequence {Delta, delta, midpoint^(n-2)} attains equality"
    return Outcome(ok, {"M1": g.zagreb, "lower": zb[0], "regular": g.is_regular}, known=known)


def check_zagreb_upper_equality(case: Case) -> Outcome | None:
    zb = _zagreb(case)
    if zb is None:
        return None
    g = case.g
    eq = _close(g.zagreb, zb[2])
    ok = eq == g.is_regular
    known = None
    if not ok and eq and _degree_half_split(g):
        known = "non-regular degree sequence {Delta^(n/2), delta^(n/2)} attains equality"
    return Outcome(ok, {"M1": g.zagreb, "upper_b": zb[2], "regular": g.is_regular}, known=known)


def check_zagreb_joint_equality(case: Case) -> Outcome | None:
    zb = _zagreb(case)
    if zb is None:
        return None
    g = case.g
    both = _close(g.zagreb, zb[0]) and _close(g.zagreb, zb[2])
    return Outcome(both == g.is_regular, {"M1": g.zagreb, "lower": zb[0], "upper_b": zb[2]})


# --- energy bound checks ---------------------------------------------------------------

def _two_nonzero_aux(case: Case) -> bool:
    return int(np.sum(np.abs(case.sp.eta) > case.tol)) == 2


def _bound_check(name: str, equality_family: Callable[[Case], bool] | None = None,
                 known_equality: Callable[[Case], str | None] | None = None,
                 strict_when: Callable[[Case], bool] | None = None,
                 known_strict: Callable[[Case], str | None] | None = None) -> Check:
    """Build a check for one energy bound.

    ``equality_family(case)`` is the claimed extremal family: the bound is
    attained exactly on it.  ``strict_when(case)`` says when the bound is
    claimed strict.  ``known_*`` return a reason when a failure falls in a
    characterised exception.
    """

    def check(case: Case) -> Outcome | None:
        rec = case.report[name]
        if not rec.applicable:
            return None
        measured = {"energy": case.report.energy, "bound": rec.value, "slack": rec.slack}
        if not rec.satisfied:
            return Outcome(False, measured)
        attained = abs(rec.slack) <= TOL
        if strict_when is not None and strict_when(case) and rec.slack <= STRICT_MARGIN:
            reason = known_strict(case) if known_strict else None
            return Outcome(False, measured, witness=attained, known=reason)
        if equality_family is not None:
            claimed = equality_family(case)
            if attained != claimed:
                reason = known_equality(case) if known_equality and attained else None
                return Outcome(False, {**measured, "claimed_extremal": claimed}, witness=attained, known=reason)
        return Outcome(True, measured, witness=attained)

    return check


def _shape_in(shapes):
    return lambda case: case.report.shape.classification in shapes


def _piecewise_family(case: Case) -> bool:
    return case.g.is_regular and is_balanced_complete_bipartite(case.g)


def _strict_boundary(case: Case) -> str | None:
    if case.g.n == 2 or _two_nonzero_aux(case):
        return "exactly two non-zero auxiliary eigenvalues (+h, -h): sqrt(2y) is attained"
    return None


def _regular_matching(case: Case) -> str | None:
    if is_perfect_matching(case.g):
        return "kK2 with k >= 2 is regular and attains the bound"
    return None


def _k3(case: Case) -> bool:
    return case.g.n == 3 and is_complete(case.g)


def _k2(case: Case) -> bool:
    return case.g.n == 2 and case.g.m == 1


def _sn_zero_branch(case: Case) -> bool:
    rec = case.report["lower_regular"]
    return rec.applicable and rec.value == (1 - case.alpha) * case.g.n


THEOREMS: dict[str, Theorem] = {
    t.id: t
    for t in [
        Theorem("moments", "trace identities for sum p, sum p^2, sum eta^2", check_moments),
        Theorem("radius_sandwich", "delta <= p1 <= Delta; connected equality only if regular", check_radius_sandwich),
        Theorem("radius_average", "p1 >= 2m/n with equality iff regular", check_radius_average),
        Theorem("top_simple", "largest eigenvalue of a connected graph is simple", check_top_simple),
        Theorem("psd", "A_alpha is positive semidefinite for alpha >= 1/2", check_psd),
        Theorem("two_distinct", "connected: exactly two distinct eigenvalues iff complete", check_two_distinct,
                records_witnesses=True),
        Theorem("three_value_regular", "regular spectrum {r, r*a+(1-a), r*a-(1-a)} forces K_{r+1}",
                check_three_value_regular, records_witnesses=True),
        Theorem("trace_radius", "largest eigenvalue below the trace bound", check_trace_radius),
        Theorem("ordered_sum", "ordered-sum inequality on the deviation sequence", check_ordered_sum),
        Theorem("zagreb", "Zagreb lower bound and both upper bounds", check_zagreb, alpha_free=True),
        Theorem("zagreb_lower_equality", "Zagreb lower bound attained iff regular",
                check_zagreb_lower_equality, alpha_free=True),
        Theorem("zagreb_upper_equality", "Zagreb spread upper bound attained iff regular",
                check_zagreb_upper_equality, alpha_free=True),
        Theorem("zagreb_joint_equality", "both Zagreb spread bounds attained together iff regular",
                check_zagreb_joint_equality, alpha_free=True),
        Theorem("lower_strict", "E > sqrt(2y) for connected graphs",
                _bound_check("lower_strict", strict_when=lambda c: True, known_strict=_strict_boundary),
                records_witnesses=True),
        Theorem("lower_two_level", "two-level lower bound; equality iff a named two-level shape",
                _bound_check("lower_two_level", equality_family=_shape_in(bd.TWO_LEVEL_SHAPES)),
                records_witnesses=True),
        Theorem("lower_cor1", "threshold corollary sqrt(c)/(2n); equality iff K3",
                _bound_check("lower_cor1", equality_family=_k3), records_witnesses=True),
        Theorem("lower_cor2", "threshold corollary sqrt(c)/n^3; strict",
                _bound_check("lower_cor2", strict_when=lambda c: True), records_witnesses=True),
        Theorem("lower_sn_zero", "s_n = 0 bound y/s_1; equality iff a named zero shape",
                _bound_check("lower_sn_zero", equality_family=_shape_in(bd.ZERO_SHAPES)),
                records_witnesses=True),
        Theorem("lower_piecewise", "s_n = 0 piecewise bound; regular equality iff K_{n/2,n/2}",
                _bound_check("lower_piecewise", equality_family=_piecewise_family,
                             strict_when=lambda c: not c.g.is_regular),
                records_witnesses=True),
        Theorem("lower_regular", "regular-graph lower bound; s_n = 0 equality iff K_{n/2,n/2}",
                _bound_check("lower_regular",
                             equality_family=lambda c: is_balanced_complete_bipartite(c.g) if _sn_zero_branch(c)
                             else abs(c.report["lower_regular"].slack) <= TOL),
                records_witnesses=True),
        Theorem("upper_main", "E <= sqrt(y/n) + sqrt((n-1)(y - y/n)); equality iff kK2",
                _bound_check("upper_main", equality_family=lambda c: is_perfect_matching(c.g)),
                records_witnesses=True),
        Theorem("upper_zagreb", "Zagreb-based upper bound; equality iff K2",
                _bound_check("upper_zagreb", equality_family=_k2), records_witnesses=True),
        Theorem("upper_regular", "regular-graph upper bound; equality iff K2",
                _bound_check("upper_regular", equality_family=_k2, known_equality=_regular_matching),
                records_witnesses=True),
    ]
}


# --- results -------------------------------------------------------------------------

@dataclass
class TheoremResult:
    graphs_tested: int = 0
    applicable_count: int = 0
    violations: list[dict] = field(default_factory=list)
    known_exceptions: list[dict] = field(default_factory=list)
    equality_witnesses: list[dict] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: "TheoremResult") -> None:
        self.graphs_tested += other.graphs_tested
        self.applicable_count += other.applicable_count
        self.violations.extend(other.violations)
        self.known_exceptions.extend(other.known_exceptions)
        self.equality_witnesses.extend(other.equality_witnesses)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "graphs_tested": self.graphs_tested,
            "applicable_count": self.applicable_count,
            "violations": self.violations,
            "known_exceptions": self.known_exceptions,
            "equality_witnesses": self.equality_witnesses,
        }


@dataclass
class VerificationReport:
    config: SweepConfig
    theorems: dict[str, TheoremResult]

    @property
    def passed(self) -> bool:
        return all(t.passed for t in self.theorems.values())

    @property
    def exit_status(self) -> int:
        return 0 if self.passed else 1

    def __getitem__(self, theorem_id: str) -> TheoremResult:
        return self.theorems[theorem_id]

    def to_dict(self) -> dict:
        cfg = self.config
        return {
            "config": {
                "n_min": cfg.n_min,
                "n_max": cfg.n_max,
                "alpha_grid": list(cfg.alpha_grid),
                "connected_only": cfg.connected_only,
                "theorems": list(cfg.selected),
            },
            "passed": self.passed,
            "theorems": {tid: res.to_dict() for tid, res in self.theorems.items()},
        }

    def summary_rows(self) -> list[tuple[str, int, int, int, int, int]]:
        return [
            (tid, r.graphs_tested, r.applicable_count, len(r.violations), len(r.known_exceptions),
             len(r.equality_witnesses))
            for tid, r in self.theorems.items()
        ]


def _record(case: Case, outcome: Outcome | None = None) -> dict:
    rec = {"graph6": case.graph6, "alpha": case.alpha}
    if outcome is not None:
        rec["measured"] = outcome.measured
        if outcome.known:
            rec["reason"] = outcome.known
    return rec


def _run_task(task: tuple[int, float, bool, bool, tuple[str, ...]]) -> dict[str, TheoremResult]:
    n, alpha, first_alpha, connected_only, ids = task
    theorems = [THEOREMS[t] for t in ids]
    results = {t.id: TheoremResult() for t in theorems}
    if all(t.alpha_free for t in theorems) and not first_alpha:
        return results

    graphs = labeled_graphs(n, connected_only)
    if not graphs:
        return results
    values, _, _ = jacobi(alpha_matrices(np.stack([g.adjacency for g in graphs]), alpha))

    for g, vals in zip(graphs, values):
        case = Case(g, alpha, Spectrum.from_eigenvalues(g, alpha, vals, check=False), first_alpha)
        for t in theorems:
            if t.alpha_free and not first_alpha:
                continue
            res = results[t.id]
            res.graphs_tested += 1
            try:
                outcome = t.check(case)
            except Exception as exc:  # attach the offending graph, then propagate
                raise RuntimeError(f"check {t.id} failed on graph6 {case.graph6!r}, alpha={alpha}: {exc}") from exc
            if outcome is None:
                continue
            res.applicable_count += 1
            if not outcome.ok:
                (res.known_exceptions if outcome.known else res.violations).append(_record(case, outcome))
            if outcome.witness and t.records_witnesses:
                entry = _record(case)
                entry["classification"] = str(case.report.shape.classification)
                res.equality_witnesses.append(entry)
    return results


def run_suite(cfg: SweepConfig) -> VerificationReport:
    ids = cfg.selected
    tasks = [
        (n, alpha, i == 0, cfg.connected_only, ids)
        for n in range(cfg.n_min, cfg.n_max + 1)
        for i, alpha in enumerate(cfg.alpha_grid)
    ]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            partials = list(pool.map(_run_task, tasks))
    else:
        partials = [_run_task(t) for t in tasks]

    merged = {tid: TheoremResult() for tid in ids}
    for part in partials:  # task order, independent of completion order
        for tid, res in part.items():
            merged[tid].merge(res)
    return VerificationReport(cfg, merged)


def find_equality_witnesses(theorem_id: str, cfg: SweepConfig) -> list[dict]:
    if theorem_id not in THEOREMS:
        raise ConfigError(f"unknown theorem id {theorem_id!r}")
    if not THEOREMS[theorem_id].records_witnesses:
        raise ConfigError(f"theorem {theorem_id!r} has no equality notion")
    sub = SweepConfig(cfg.n_max, cfg.alpha_grid, cfg.connected_only, (theorem_id,), cfg.jobs, cfg.n_min)
    return run_suite(sub)[theorem_id].equality_witnesses


def replay(graph6: str, alpha: float) -> bd.BoundReport:
    """Recompute the bound report for a recorded ``(graph6, alpha)`` pair."""
    from .graph6 import parse_graph6

    return bd.full_report(parse_graph6(graph6), alpha)
