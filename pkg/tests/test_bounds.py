import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from alphaspec import bounds as bd
from alphaspec.bounds import BoundNotApplicable, Shape
from alphaspec.graph import (
    complete,
    complete_bipartite,
    cycle,
    is_connected,
    make_graph,
    matching_union,
    path,
    petersen,
    star,
)
from alphaspec.spectra import build_alpha_matrix, spectrum

ALPHAS = [i / 10 for i in range(10)]
TOL = 1e-8


def energy(g, a):
    return spectrum(g, a).energy


# --- y, c and degree term ---------------------------------------------------------

def test_moment_y_examples():
    assert bd.moment_y(complete(3), 0) == pytest.approx(6)
    assert bd.moment_y(petersen(), 0) == pytest.approx(30)
    assert bd.moment_y(matching_union(2), 0.5) == pytest.approx(1.0)


@pytest.mark.parametrize("g", [path(4), star(3), cycle(5), complete_bipartite(2, 3)])
@pytest.mark.parametrize("a", [0.0, 0.35, 0.8])
def test_moment_y_is_sum_of_eta_squares(g, a):
    sp = spectrum(g, a)
    assert bd.moment_y(g, a) == pytest.approx(float(sp.eta @ sp.eta), abs=1e-10)


def test_c_threshold_hand_value():
    # K3, alpha = 0: c = m (2 n^2 - 2 n) = 3 * 12
    assert bd.c_threshold(complete(3), 0) == pytest.approx(36)
    g, a = star(3), 0.5
    n, m = 4, 3
    want = m * (a * a * n**3 + n * n * (2 - 4 * a - a * a) + n * (4 * a - 2 - 2 * a * a * m) + 4 * a * a * m)
    assert bd.c_threshold(g, a) == pytest.approx(want)


def test_degree_term():
    assert bd.degree_term(star(3), 0.5) == pytest.approx(0.25 * 6 + 0.125 * 4)


# --- lower bounds ----------------------------------------------------------------

def test_lower_strict_examples():
    assert bd.lower_bound_strict(complete(3), 0) == pytest.approx(math.sqrt(12))
    assert energy(complete(3), 0) - math.sqrt(12) > 0.5
    # K2 and P3 sit exactly on the bound
    assert bd.lower_bound_strict(complete(2), 0) == pytest.approx(energy(complete(2), 0))
    assert bd.lower_bound_strict(path(3), 0) == pytest.approx(energy(path(3), 0))
    with pytest.raises(BoundNotApplicable):
        bd.lower_bound_strict(matching_union(2), 0)
    with pytest.raises(BoundNotApplicable):
        bd.lower_bound_strict(path(3), 1.0)


def test_lower_two_level_examples():
    for g, a in ((matching_union(2), 0.3), (complete(4), 0.2)):
        assert bd.lower_bound_two_level(g, a) == pytest.approx(energy(g, a), abs=TOL)
    assert energy(path(4), 0) - bd.lower_bound_two_level(path(4), 0) > 1e-3


def test_lower_two_level_degenerate():
    with pytest.raises(BoundNotApplicable):
        bd.lower_bound_two_level(make_graph(3, []), 0)


def test_classification():
    for n in range(2, 7):
        for a in (0.0, 0.4):
            assert bd.classify_equality_shape(spectrum(complete(n), a), complete(n)).classification in (
                Shape.COMPLETE_GRAPH,
                Shape.MATCHING_UNION,  # K2 is also 1 K2
            )
    sh = bd.classify_equality_shape(spectrum(matching_union(3), 0.2), matching_union(3))
    assert sh.classification is Shape.MATCHING_UNION
    assert sh.t == 6 and sh.h == pytest.approx(sh.k)
    g = complete_bipartite(3, 3)
    sh = bd.classify_equality_shape(spectrum(g, 0.4), g)
    assert sh.classification is Shape.BALANCED_BIPARTITE
    assert sh.k == pytest.approx(0, abs=1e-10) and sh.t == 2
    assert bd.classify_equality_shape(spectrum(path(4), 0), path(4)).classification is Shape.NONE
    assert bd.classify_equality_shape(spectrum(petersen(), 0.3), petersen()).classification is Shape.NONE


def test_three_value_zero_shape():
    # stars have s = (h, h, 0, ...) with a single positive eta above the regular level
    g = star(3)
    assert bd.classify_equality_shape(spectrum(g, 0.0), g).classification is Shape.THREE_VALUE_ZERO


@pytest.mark.parametrize("a", ALPHAS)
def test_cor1_k3_equality(a):
    ok, bound = bd.lower_bound_threshold_cor1(complete(3), a)
    assert ok
    assert bound == pytest.approx(4 * (1 - a), abs=TOL)
    assert energy(complete(3), a) == pytest.approx(4 * (1 - a), abs=TOL)


def test_cor1_k4_premise():
    # c = 6 * (2*16 - 2*4) = 144, threshold sqrt(c)/(2n) = 1.5 > s_n = 1
    assert bd.c_threshold(complete(4), 0) == pytest.approx(144)
    ok, bound = bd.lower_bound_threshold_cor1(complete(4), 0)
    assert not ok
    # and the premise matters: without it the bound would exceed E = 6
    assert bound == pytest.approx(2 * math.sqrt(2) / 3 * math.sqrt(48))
    assert energy(complete(4), 0) < bound


def test_cor_preconditions():
    with pytest.raises(BoundNotApplicable):
        bd.lower_bound_threshold_cor1(complete(2), 0)
    with pytest.raises(BoundNotApplicable):
        bd.lower_bound_threshold_cor2(make_graph(3, [(0, 1)]), 0)


def test_cor2_examples():
    ok, bound = bd.lower_bound_threshold_cor2(complete(3), 0)
    assert ok and bound == pytest.approx(0.6 * math.sqrt(18))
    ok, bound = bd.lower_bound_threshold_cor2(complete(4), 0.5)
    assert ok and energy(complete(4), 0.5) > bound


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 12).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n * (n - 1) // 2))),
       st.floats(0, 1, exclude_max=True))
def test_c_threshold_positive(nm, a):
    # c/m = A a^2 - B a + B/2 with A >= B/2, so c never goes negative on [0, 1)
    n, m = nm

    class G:  # c only depends on n and m
        pass

    g = G()
    g.n, g.m = n, m
    assert bd.c_threshold(g, a) >= 0


def test_sn_zero_examples():
    ok, bound = bd.lower_bound_sn_zero(complete_bipartite(3, 3), 0.4)
    assert ok and bound == pytest.approx(energy(complete_bipartite(3, 3), 0.4), abs=TOL)
    ok, _ = bd.lower_bound_sn_zero(complete(4), 0)
    assert not ok
    ok, bound = bd.lower_bound_sn_zero(cycle(4), 0)
    assert ok and bound == pytest.approx(4.0, abs=TOL) and energy(cycle(4), 0) == pytest.approx(4.0)


def test_piecewise_examples():
    regular, bound = bd.lower_bound_piecewise(complete_bipartite(3, 3), 0.2)
    assert regular and bound == pytest.approx(4.8)
    assert energy(complete_bipartite(3, 3), 0.2) == pytest.approx(4.8, abs=TOL)
    regular, bound = bd.lower_bound_piecewise(cycle(4), 0)
    assert regular and bound == pytest.approx(energy(cycle(4), 0), abs=TOL)
    regular, bound = bd.lower_bound_piecewise(star(3), 0)
    assert not regular and energy(star(3), 0) > bound + 1e-6
    with pytest.raises(BoundNotApplicable):
        bd.lower_bound_piecewise(complete(4), 0)


def test_piecewise_uses_alpha_squared_spread():
    g, a = star(3), 0.0
    # at alpha = 0 the spread term vanishes: bound = 2m / Delta = 2
    assert bd.lower_bound_piecewise(g, a)[1] == pytest.approx(2.0)


def test_lower_regular_examples():
    assert bd.lower_bound_regular(complete_bipartite(3, 3), 0) == pytest.approx(6)
    assert energy(complete_bipartite(3, 3), 0) == pytest.approx(6)
    b = bd.lower_bound_regular(cycle(5), 0)
    sn = 2 * math.cos(2 * math.pi / 5)  # smallest |eigenvalue| of C5
    assert b == pytest.approx(2 * 5 * 2 * math.sqrt(sn) / (2 + sn))
    assert energy(cycle(5), 0) >= b - TOL
    b = bd.lower_bound_regular(complete(4), 0.5)
    assert b == pytest.approx(2 * 0.5 * 4 * 3 * math.sqrt(0.5) / 3.5)
    assert energy(complete(4), 0.5) >= b - TOL
    with pytest.raises(BoundNotApplicable):
        bd.lower_bound_regular(path(3), 0)


# --- upper bounds --------------------------------------------------------------

def test_upper_main_examples():
    assert bd.upper_bound_main(complete(2), 0.3) == pytest.approx(1.4)
    assert energy(complete(2), 0.3) == pytest.approx(1.4)
    assert bd.upper_bound_main(matching_union(3), 0) == pytest.approx(6)
    assert bd.upper_bound_main(complete(3), 0) == pytest.approx(math.sqrt(2) + math.sqrt(8))


def test_upper_zagreb_examples():
    for a in ALPHAS:
        assert bd.upper_bound_zagreb(complete(2), a) == pytest.approx(2 * (1 - a))
    assert bd.upper_bound_zagreb(complete(3), 0) == pytest.approx(3 * math.sqrt(2))
    assert energy(star(3), 0.5) < bd.upper_bound_zagreb(star(3), 0.5) - 1e-6
    with pytest.raises(BoundNotApplicable):
        bd.upper_bound_zagreb(matching_union(2), 0)


def test_upper_regular_examples():
    assert bd.upper_bound_regular(complete(2), 0.4) == pytest.approx(1.2)
    assert bd.upper_bound_regular(cycle(5), 0) == pytest.approx(5 * math.sqrt(2))
    assert bd.upper_bound_regular(complete(4), 0) == pytest.approx(4 * math.sqrt(3))
    # 2K2 is regular and also attains it
    assert bd.upper_bound_regular(matching_union(2), 0) == pytest.approx(energy(matching_union(2), 0))
    with pytest.raises(BoundNotApplicable):
        bd.upper_bound_regular(star(3), 0)


# --- auxiliary inequalities ---------------------------------------------------------

def test_zagreb_bounds_examples():
    lo, ua, ub = bd.zagreb_bounds(complete(4))
    assert complete(4).zagreb == 36 and lo == pytest.approx(36) and ub == pytest.approx(36)
    lo, ua, ub = bd.zagreb_bounds(star(3))
    assert star(3).zagreb == 12 and lo == pytest.approx(11)
    lo, ua, ub = bd.zagreb_bounds(path(3))
    assert ua == pytest.approx(6) and path(3).zagreb == 6
    with pytest.raises(BoundNotApplicable):
        bd.zagreb_bounds(matching_union(2))


def test_zagreb_single_bound_equality_on_non_regular_graphs():
    # paw: degrees 3,2,2,1 sits on the lower bound; P4 sits on upper_b
    paw = make_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])
    assert bd.zagreb_bounds(paw)[0] == pytest.approx(paw.zagreb)
    assert bd.zagreb_bounds(path(4))[2] == pytest.approx(path(4).zagreb)


def test_trace_radius_examples():
    assert bd.trace_radius_bound(build_alpha_matrix(complete(3), 0)) == pytest.approx(2)
    assert bd.trace_radius_bound(np.ones((3, 3))) == pytest.approx(3)
    B = build_alpha_matrix(path(3), 0.5)
    assert spectrum(path(3), 0.5).radius <= bd.trace_radius_bound(B) + TOL
    with pytest.raises(BoundNotApplicable):
        bd.trace_radius_bound(np.ones((2, 2)))
    with pytest.raises(BoundNotApplicable):
        bd.trace_radius_bound(-np.ones((3, 3)))


def test_ordered_sum_examples():
    assert bd.ordered_sum_inequality([3, 3, 1, 1])
    lhs = 8 * 4
    assert lhs == 9 + 9 + 1 + 1 + 4 * 3  # the two-block shape is an equality
    assert bd.ordered_sum_inequality([1, 1, 1])
    assert bd.ordered_sum_inequality([3, 2, 1])
    for bad in ([1, 2], [1, -1], []):
        with pytest.raises(ValueError):
            bd.ordered_sum_inequality(bad)


# --- aggregate report --------------------------------------------------------------

def test_full_report_k3():
    rep = bd.full_report(complete(3), 0)
    assert rep["lower_cor1"].equality
    assert rep.energy == pytest.approx(4)
    assert rep.y == pytest.approx(6)


def test_full_report_2k2():
    rep = bd.full_report(matching_union(2), 0.5)
    assert rep["lower_two_level"].equality and rep["upper_main"].equality
    assert not rep["lower_strict"].applicable  # disconnected


def test_full_report_petersen():
    rep = bd.full_report(petersen(), 0.3)
    for b in rep.bounds:
        assert not b.equality
        if b.applicable:
            assert b.satisfied, b.name
    d = rep.to_dict()
    assert set(d) >= {"alpha", "y", "c", "energy", "bounds"}
    assert set(d["bounds"][0]) >= {"name", "value", "applicable", "satisfied", "slack", "equality"}


def test_full_report_edgeless_and_alpha_one():
    rep = bd.full_report(make_graph(3, []), 0.2)
    assert all(not b.applicable for b in rep.bounds)
    rep = bd.full_report(path(3), 1.0)
    assert all(not b.applicable for b in rep.bounds if b.name.startswith("lower"))


def test_largest_eigenvalue_check():
    rho, bound = bd.largest_eigenvalue_check(star(4), 0.3)
    assert rho <= bound + TOL


# --- properties -------------------------------------------------------------------

@st.composite
def connected_graphs(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    # random spanning tree plus extras keeps the sample connected
    edges = [(draw(st.integers(0, v - 1)), v) for v in range(1, n)]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges += draw(st.lists(st.sampled_from(pairs), max_size=len(pairs)))
    return make_graph(n, edges)


@settings(max_examples=200, deadline=None)
@given(connected_graphs(), st.sampled_from(ALPHAS))
def test_sandwich(g, a):
    rep = bd.full_report(g, a)
    lows = [b.value for b in rep.bounds if b.applicable and b.kind == "lower"]
    highs = [b.value for b in rep.bounds if b.applicable and b.kind == "upper"]
    for lo in lows:
        assert lo <= rep.energy + TOL
    for hi in highs:
        assert rep.energy <= hi + 2 * TOL
    assert all(b.satisfied for b in rep.bounds if b.applicable)


@settings(max_examples=200, deadline=None)
@given(connected_graphs(), st.sampled_from(ALPHAS))
def test_strict_below_main_upper(g, a):
    assume(g.m >= 1)
    assert bd.lower_bound_strict(g, a) <= bd.upper_bound_main(g, a) + TOL


@settings(max_examples=200, deadline=None)
@given(connected_graphs(), st.sampled_from(ALPHAS))
def test_ordered_sum_on_s_sequence(g, a):
    assert bd.ordered_sum_inequality(spectrum(g, a).s)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.floats(0, 1e3), min_size=1, max_size=12))
def test_ordered_sum_always_true(xs):
    assert bd.ordered_sum_inequality(sorted(xs, reverse=True))


@settings(max_examples=150, deadline=None)
@given(connected_graphs(), st.sampled_from(ALPHAS))
def test_named_shape_implies_two_level_s(g, a):
    sp = spectrum(g, a)
    sh = bd.classify_equality_shape(sp, g)
    assume(is_connected(g))
    assert sh.h >= sh.k >= 0
    if sh.classification is not Shape.NONE:
        tol = 1e-8 * (1 + float(np.abs(sp.p).max()))
        assert all(abs(s - sh.h) <= tol or abs(s - sh.k) <= tol for s in sp.s)
