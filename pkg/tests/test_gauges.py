import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import fig1_gauge, simplex_gauge
from riskset import reference_measures as rm
from riskset.accept_sets import MONOTONE, AcceptanceSet, catalog, halfspace, parse_set
from riskset.bisection import (
    CONVERGED,
    DEGENERATE_ZERO,
    INFINITE,
    MAX_ITER,
    infimum_up,
    infimum_up_positive,
    supremum_down,
    supremum_down_positive,
)
from riskset.errors import ContractError, ConvergenceError, OracleInconsistencyError
from riskset.gauges import (
    acceptance_from_rho,
    cogauge_complement,
    minkowski_dev,
    psi_complement,
    rho,
    sublevel_from_dev,
)
from riskset.prob_core import ProbSpace, expectation, random_randvar, random_space

TOL = 1e-9

MONETARY = ["catalog:expectation", "catalog:var?alpha=0.25", "catalog:es?alpha=0.05", "catalog:es?alpha=0.5",
            "catalog:entropic?theta=1"]
STAR = ["catalog:fig1", "catalog:simplex_q1", "catalog:sd_ball?r=1", "catalog:mad_ball?r=1",
        "catalog:es?alpha=0.1"]


@st.composite
def payoffs(draw, n=None):
    if n is None:
        n = draw(st.sampled_from([2, 3, 4, 8]))
    weights = draw(st.lists(st.integers(1, 10), min_size=n, max_size=n))
    total = sum(weights)
    space = ProbSpace(tuple(w / total for w in weights))
    return space.rv(draw(st.lists(st.floats(-50, 50), min_size=n, max_size=n)))


def close(a, b, tol):
    if math.isinf(a) or math.isinf(b):
        return a == b
    return abs(a - b) <= tol


class TestBisection:
    def test_threshold(self):
        r = infimum_up(lambda m: m >= 0.3, 1.0)
        assert r.status == CONVERGED
        assert abs(r.value - 0.3) <= TOL
        assert r.bracket <= 2 * TOL

    def test_expands_bracket(self):
        r = infimum_up(lambda m: m >= 12345.5, 1.0)
        assert abs(r.value - 12345.5) <= TOL

    def test_empty_set_is_plus_infinity(self):
        r = infimum_up(lambda m: False, 1.0)
        assert r.value == math.inf and r.status == INFINITE

    def test_everything_feasible_is_minus_infinity(self):
        r = infimum_up(lambda m: True, 1.0)
        assert r.value == -math.inf and r.status == INFINITE

    def test_supremum(self):
        r = supremum_down(lambda m: m < -2.5, 1.0)
        assert abs(r.value + 2.5) <= TOL
        assert supremum_down(lambda m: False, 1.0).value == -math.inf

    def test_inconsistent_oracle(self):
        with pytest.raises(OracleInconsistencyError):
            infimum_up(lambda m: m < 0, 1.0)

    def test_positive_degenerate_zero(self):
        r = infimum_up_positive(lambda m: True)
        assert r.value == 0.0 and r.status == DEGENERATE_ZERO

    def test_positive_threshold(self):
        assert abs(infimum_up_positive(lambda m: m >= 0.125).value - 0.125) <= TOL
        assert abs(supremum_down_positive(lambda m: m < 7.0).value - 7.0) <= TOL

    def test_positive_empty(self):
        assert supremum_down_positive(lambda m: False).value == 0.0
        assert infimum_up_positive(lambda m: False).value == math.inf

    def test_large_values_stop_at_float_resolution(self):
        r = infimum_up(lambda m: m >= 1.5e7 + 0.1, 1.0)
        assert r.status == CONVERGED
        assert abs(r.value - (1.5e7 + 0.1)) <= 2 * math.ulp(1.5e7)

    def test_iteration_cap(self):
        with pytest.raises(ConvergenceError):
            # Halving towards 0 passes through the subnormals, far beyond the step cap.
            infimum_up(lambda m: m >= 0.0, 1.0, tol=1e-320)
        assert MAX_ITER == 200

    def test_tol_must_be_positive(self):
        with pytest.raises(ValueError):
            infimum_up(lambda m: m >= 0, 1.0, tol=0.0)


class TestRho:
    def test_expectation(self, u2):
        X = u2.rv((-1.3, 0.7))
        assert abs(rho(catalog("expectation"), X).value - 0.3) <= TOL

    def test_es(self, u4):
        assert abs(rho(catalog("es", alpha=0.5), u4.rv((-4, -2, 0, 2))).value - 3.0) <= TOL

    def test_constant(self, u4):
        for text in MONETARY:
            assert abs(rho(parse_set(text), u4.constant(2.5)).value + 2.5) <= TOL

    def test_requires_monotone(self, u2):
        with pytest.raises(ContractError):
            rho(catalog("sd_ball", r=1.0), u2.rv((0, 1)))

    def test_psi_expectation(self, u2):
        assert abs(psi_complement(catalog("expectation"), u2.rv((-1.3, 0.7))).value - 0.3) <= TOL

    def test_psi_of_empty_complement(self, u2):
        full = AcceptanceSet("everything", lambda X: True, frozenset({MONOTONE}))
        r = psi_complement(full, u2.rv((1, 2)))
        assert r.value == -math.inf and r.status == INFINITE

    def test_bracket_straddles_boundary(self, rng):
        for text in MONETARY:
            A = parse_set(text)
            for _ in range(50):
                X = random_randvar(rng, random_space(rng, 4))
                r = rho(A, X)
                assert r.bracket <= 2 * TOL or r.status != CONVERGED
                assert not A.member(X + (r.value - TOL))
                assert A.member(X + (r.value + TOL))


class TestMinkowskiDev:
    def test_fig1_boundary_point(self, u2):
        r = minkowski_dev(catalog("fig1"), u2.rv((1, 2)))
        assert abs(r.value - 1.0) <= TOL

    def test_fig1_radial_direction(self, u2):
        assert minkowski_dev(catalog("fig1"), u2.rv((1, 1))).value == 0.0

    def test_sd_ball(self, rng):
        A = catalog("sd_ball", r=1.0)
        for _ in range(200):
            X = random_randvar(rng, random_space(rng, 5))
            assert abs(minkowski_dev(A, X).value - rm.std_dev(X)) <= 2 * TOL

    def test_constants_have_zero_deviation(self, u4):
        for text in ("catalog:sd_ball?r=1", "catalog:mad_ball?r=2"):
            assert minkowski_dev(parse_set(text), u4.constant(3.0)).value == 0.0

    def test_requires_star_shaped(self, u2):
        with pytest.raises(ContractError):
            minkowski_dev(halfspace(1.0), u2.rv((0, 1)))

    def test_cogauge_examples(self, u2):
        A = catalog("fig1")
        assert abs(cogauge_complement(A, u2.rv((1, 2))).value - 1.0) <= TOL
        assert cogauge_complement(A, u2.rv((1, 1))).value == 0.0

    @settings(max_examples=200)
    @given(st.floats(-20, 20), st.floats(-20, 20))
    def test_fig1_closed_form(self, x, y):
        X = ProbSpace.uniform(2).rv((x, y))
        assert close(minkowski_dev(catalog("fig1"), X).value, fig1_gauge(x, y), 2 * TOL)

    @settings(max_examples=200)
    @given(st.floats(-20, 20, allow_subnormal=False), st.floats(-20, 20, allow_subnormal=False))
    def test_simplex_closed_form(self, u, v):
        X = ProbSpace.uniform(2).rv((u, v))
        assert close(minkowski_dev(catalog("simplex_q1"), X).value, simplex_gauge(u, v), 2 * TOL)


class TestInducedSets:
    def test_acceptance_from_rho_matches_catalog(self, rng):
        induced = acceptance_from_rho(lambda X: rm.expected_shortfall(X, 0.5))
        es = catalog("es", alpha=0.5)
        assert "induced" in induced.name
        for _ in range(1000):
            X = random_randvar(rng, random_space(rng, 4), grid=True)
            assert induced.member(X) == es.member(X)

    def test_acceptance_from_neg_expectation(self, u2):
        induced = acceptance_from_rho(lambda X: -expectation(X))
        assert induced.member(u2.rv((-1, 1)))

    def test_rho_of_induced_set_reproduces_risk(self, rng):
        induced = acceptance_from_rho(lambda X: rm.expected_shortfall(X, 0.25), declared={MONOTONE})
        for _ in range(200):
            X = random_randvar(rng, random_space(rng, 4))
            assert abs(rho(induced, X).value - rm.expected_shortfall(X, 0.25)) <= 2 * TOL

    def test_sublevel_of_sd_is_the_ball(self, rng):
        sub = sublevel_from_dev(rm.std_dev, 1.0)
        ball = catalog("sd_ball", r=1.0)
        for _ in range(500):
            X = random_randvar(rng, random_space(rng, 3)) * 0.05
            assert sub.member(X) == ball.member(X)

    def test_sublevel_level_must_be_positive(self):
        with pytest.raises(ValueError):
            sublevel_from_dev(rm.std_dev, 0.0)

    def test_sublevel_of_fig1_gauge_contains_boundary(self, u2):
        A = catalog("fig1")
        sub = sublevel_from_dev(lambda X: minkowski_dev(A, X).value, 1.0)
        assert sub.member(u2.rv((1, 2)))

    def test_gauge_of_sublevel_reproduces_deviation(self, rng):
        sub = sublevel_from_dev(rm.mean_abs_dev, 1.0)
        for _ in range(200):
            X = random_randvar(rng, random_space(rng, 4))
            assert abs(minkowski_dev(sub, X).value - rm.mean_abs_dev(X)) <= 2 * TOL


class TestGaugeProperties:
    @settings(max_examples=60, deadline=None)
    @given(payoffs(), st.floats(-30, 30), st.sampled_from(MONETARY))
    def test_cash_invariance(self, X, c, text):
        A = parse_set(text)
        assert abs(rho(A, X + c).value - (rho(A, X).value - c)) <= 2 * TOL

    @settings(max_examples=60, deadline=None)
    @given(payoffs(n=4), st.lists(st.floats(0, 10), min_size=4, max_size=4), st.sampled_from(MONETARY))
    def test_monotone(self, X, bump, text):
        A = parse_set(text)
        Y = X + X.space.rv(bump)
        assert rho(A, Y).value <= rho(A, X).value + 2 * TOL

    @settings(max_examples=60, deadline=None)
    @given(payoffs(), st.sampled_from(MONETARY))
    def test_risk_equals_complement_functional(self, X, text):
        A = parse_set(text)
        assert close(rho(A, X).value, psi_complement(A, X).value, 2 * TOL)

    @settings(max_examples=60, deadline=None)
    @given(payoffs(n=2), st.sampled_from(STAR))
    def test_gauge_equals_cogauge(self, X, text):
        A = parse_set(text)
        assert close(minkowski_dev(A, X).value, cogauge_complement(A, X).value, 2 * TOL)

    @settings(max_examples=60, deadline=None)
    @given(payoffs(n=2), st.sampled_from(STAR), st.sampled_from([0.5, 2.0, 10.0]))
    def test_positive_homogeneity(self, X, text, lam):
        A = parse_set(text)
        d, dl = minkowski_dev(A, X).value, minkowski_dev(A, X * lam).value
        assert close(dl, lam * d, TOL * (1 + lam))

    @settings(max_examples=60, deadline=None)
    @given(payoffs(), st.floats(-30, 30), st.sampled_from(["catalog:sd_ball?r=1", "catalog:mad_ball?r=0.5"]))
    def test_translation_insensitive(self, X, c, text):
        A = parse_set(text)
        assert abs(minkowski_dev(A, X + c).value - minkowski_dev(A, X).value) <= 2 * TOL

    @settings(max_examples=60, deadline=None)
    @given(payoffs(), st.sampled_from(MONETARY))
    def test_sandwich(self, X, text):
        A = parse_set(text)
        r = rho(A, X).value
        if r < -2 * TOL:
            assert A.member(X)
        if A.member(X):
            assert r <= 2 * TOL
