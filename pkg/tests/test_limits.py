import math

import pytest

from utils.core.errors import HypothesisError, InvalidParameterError
from utils.limits import (
    GraphFamily,
    LimitQuery,
    expected_minimal_elements,
    gabriel_rank_edge_probability,
    jth_constant_by_poisson_sum,
    knng_constant_by_sum,
    limit_constant,
    log_gamma,
    origin_correction_bound,
    reciprocal_edge_expectation,
    reciprocal_pair_fraction,
    undirected_count_fraction,
    union_two_balls_volume,
    union_two_balls_volume_quadrature,
    unit_ball_volume,
)
from utils.spatial.cones import ConeOrder


def constant(family, d, alpha):
    return limit_constant(LimitQuery(family, d, alpha))


@pytest.mark.parametrize("d, expected", [(1, 2.0), (2, math.pi), (3, 4.0 * math.pi / 3.0)])
def test_unit_ball_volume(d, expected):
    assert unit_ball_volume(d) == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("d, expected", [
    (1, 3.0),
    (2, 4.0 * math.pi / 3.0 + math.sqrt(3.0) / 2.0),
    (3, 9.0 * math.pi / 4.0),
])
def test_union_two_balls_volume(d, expected):
    assert union_two_balls_volume(d) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("d", range(1, 11))
def test_union_volume_between_one_and_two_balls(d):
    v_d = unit_ball_volume(d)
    omega_d = union_two_balls_volume(d)
    assert v_d < omega_d < 2.0 * v_d
    assert 0.0 < reciprocal_pair_fraction(d) < 1.0


@pytest.mark.parametrize("d", range(1, 11))
def test_union_volume_matches_quadrature(d):
    assert union_two_balls_volume_quadrature(d) == pytest.approx(union_two_balls_volume(d), rel=1e-9)


@pytest.mark.parametrize("x, expected", [(1.0, 0.0), (1.5, math.log(math.sqrt(math.pi) / 2.0)), (5.0, math.log(24.0))])
def test_log_gamma(x, expected):
    assert log_gamma(x) == pytest.approx(expected, abs=1e-12)


@pytest.mark.parametrize("x", [0.0, -1.0, math.inf, math.nan])
def test_log_gamma_rejects_non_positive(x):
    with pytest.raises(InvalidParameterError):
        log_gamma(x)


@pytest.mark.parametrize("d", [0, -1, 1.5, True, "2"])
def test_invalid_dimension(d):
    with pytest.raises(InvalidParameterError):
        unit_ball_volume(d)


class TestLimitConstant:

    def test_nearest_neighbour_plane(self):
        assert constant(GraphFamily.knng(1), 2, 1.0) == pytest.approx(0.5, abs=1e-12)
        assert constant(GraphFamily.jth_nng(1), 2, 1.0) == pytest.approx(0.5, abs=1e-12)

    @pytest.mark.parametrize("d", [1, 2, 3, 5])
    @pytest.mark.parametrize("k", [1, 2, 4])
    def test_edge_count_at_alpha_zero(self, d, k):
        assert constant(GraphFamily.knng(k), d, 0.0) == pytest.approx(k, rel=1e-12)

    def test_knng_k3_alpha2(self):
        assert constant(GraphFamily.knng(3), 2, 2.0) == pytest.approx(6.0 / math.pi, rel=1e-12)

    def test_undirected_line(self):
        assert constant(GraphFamily.knng_undirected(1), 1, 1.0) == pytest.approx(7.0 / 18.0, rel=1e-12)

    def test_undirected_plane(self):
        assert constant(GraphFamily.knng_undirected(1), 2, 1.0) == pytest.approx(0.377508, abs=1e-6)

    def test_online(self):
        assert constant(GraphFamily.ong(), 2, 1.0) == pytest.approx(1.0, abs=1e-12)
        assert constant(GraphFamily.ong(), 3, 0.0) == pytest.approx(1.0, abs=1e-12)

    def test_mdsf_star(self):
        assert constant(GraphFamily.mdsf(), 2, 1.0) == pytest.approx(1.0, abs=1e-12)

    def test_mdsf_half_plane(self):
        family = GraphFamily.mdsf(ConeOrder(0.0, math.pi))
        assert constant(family, 2, 1.0) == pytest.approx(math.sqrt(2.0) / 2.0, abs=1e-12)

    @pytest.mark.parametrize("theta", [0.0, 1.0, math.pi, 5.0])
    def test_mdsf_does_not_depend_on_theta(self, theta):
        base = constant(GraphFamily.mdsf(ConeOrder(0.0, 1.2)), 2, 0.7)
        assert constant(GraphFamily.mdsf(ConeOrder(theta, 1.2)), 2, 0.7) == pytest.approx(base, rel=1e-14)

    def test_mdsf_with_origin_sink_same_constant(self):
        family = GraphFamily.mdsf(with_origin_sink=True)
        assert constant(family, 2, 1.0) == pytest.approx(1.0, abs=1e-12)

    def test_gabriel(self):
        assert constant(GraphFamily.gabriel(), 2, 1.0) == pytest.approx(2.0, abs=1e-12)

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_gabriel_edge_density(self, d):
        assert constant(GraphFamily.gabriel(), d, 0.0) == pytest.approx(2.0 ** (d - 1), rel=1e-12)

    def test_large_k_does_not_overflow(self):
        value = constant(GraphFamily.knng(500), 2, 1.0)
        assert math.isfinite(value) and value > 0


ALPHA_GRID = [0.0, 0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0]


class TestMonotonicity:

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    @pytest.mark.parametrize("alpha", ALPHA_GRID)
    def test_knng_increases_in_k(self, d, alpha):
        values = [constant(GraphFamily.knng(k), d, alpha) for k in range(1, 7)]
        assert all(a < b for a, b in zip(values, values[1:]))

    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    @pytest.mark.parametrize("k", [1, 3])
    def test_knng_continuous_in_alpha(self, d, k):
        for alpha in ALPHA_GRID:
            here = constant(GraphFamily.knng(k), d, alpha)
            nearby = constant(GraphFamily.knng(k), d, alpha + 1e-7)
            assert abs(nearby - here) < 1e-5 * max(1.0, here)

    @pytest.mark.parametrize("d", range(1, 11))
    @pytest.mark.parametrize("alpha", ALPHA_GRID)
    def test_undirected_below_directed(self, d, alpha):
        assert constant(GraphFamily.knng_undirected(1), d, alpha) < constant(GraphFamily.knng(1), d, alpha)


class TestClosedFormIdentities:

    @pytest.mark.parametrize("d", [1, 2, 3, 5])
    @pytest.mark.parametrize("alpha", [0.0, 0.5, 1.0, 2.0, 3.0])
    @pytest.mark.parametrize("k", [1, 2, 3, 6, 20])
    def test_knng_closed_form_equals_sum(self, d, alpha, k):
        closed = constant(GraphFamily.knng(k), d, alpha)
        assert knng_constant_by_sum(d, alpha, k) == pytest.approx(closed, rel=1e-10)

    @pytest.mark.parametrize("d", [1, 2, 3])
    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.5])
    @pytest.mark.parametrize("j", [1, 2, 5, 12])
    def test_jth_closed_form_equals_poisson_sum(self, d, alpha, j):
        closed = constant(GraphFamily.jth_nng(j), d, alpha)
        assert jth_constant_by_poisson_sum(d, alpha, j) == pytest.approx(closed, rel=1e-10)

    def test_poisson_sum_needs_positive_alpha(self):
        with pytest.raises(InvalidParameterError):
            jth_constant_by_poisson_sum(2, 0.0, 1)

    @pytest.mark.parametrize("d", [1, 2, 3])
    @pytest.mark.parametrize("alpha", [0.0, 1.0, 2.0])
    def test_undirected_is_directed_minus_reciprocal_half(self, d, alpha):
        directed = constant(GraphFamily.jth_nng(1), d, alpha)
        undirected = constant(GraphFamily.knng_undirected(1), d, alpha)
        assert undirected == pytest.approx(directed - 0.5 * reciprocal_edge_expectation(d, alpha), rel=1e-12)

    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_edge_count_fraction(self, d):
        assert reciprocal_edge_expectation(d, 0.0) == pytest.approx(reciprocal_pair_fraction(d), rel=1e-14)
        assert undirected_count_fraction(d) == pytest.approx(
            constant(GraphFamily.knng_undirected(1), d, 0.0), rel=1e-12)

    def test_reciprocal_fraction(self):
        assert reciprocal_pair_fraction(1) == pytest.approx(2.0 / 3.0, rel=1e-12)
        expected = 6.0 * math.pi / (8.0 * math.pi + 3.0 * math.sqrt(3.0))
        assert reciprocal_pair_fraction(2) == pytest.approx(expected, rel=1e-12)
        assert reciprocal_pair_fraction(2) == pytest.approx(0.62149, abs=2e-5)


class TestHypotheses:

    @pytest.mark.parametrize("alpha", [2.0, 3.0])
    def test_online_needs_alpha_below_d(self, alpha):
        with pytest.raises(HypothesisError, match=r"ONG: .*0 <= alpha < d"):
            constant(GraphFamily.ong(), 2, alpha)

    @pytest.mark.parametrize("alpha", [0.0, 2.0, 2.5])
    def test_mdsf_needs_alpha_in_open_interval(self, alpha):
        with pytest.raises(HypothesisError, match=r"MDSF: .*0 < alpha < 2"):
            constant(GraphFamily.mdsf(), 2, alpha)

    def test_undirected_only_k1(self):
        with pytest.raises(HypothesisError, match=r"k = 1"):
            constant(GraphFamily.knng_undirected(2), 2, 1.0)

    def test_mdsf_is_planar(self):
        with pytest.raises(InvalidParameterError):
            LimitQuery(GraphFamily.mdsf(), 3, 1.0)

    @pytest.mark.parametrize("alpha", [-0.5, math.inf, math.nan])
    def test_alpha_must_be_finite_non_negative(self, alpha):
        with pytest.raises(InvalidParameterError):
            LimitQuery(GraphFamily.knng(1), 2, alpha)

    def test_hypothesis_error_is_invalid_parameter(self):
        assert issubclass(HypothesisError, InvalidParameterError)
        assert issubclass(InvalidParameterError, ValueError)


class TestGraphFamily:

    def test_labels(self):
        assert GraphFamily.jth_nng(2).label == "jth_nng[j=2]"
        assert GraphFamily.knng(3).label == "knng[k=3]"
        assert GraphFamily.knng_undirected().label == "knng_undirected[k=1]"
        assert GraphFamily.ong().label == "ong"
        assert GraphFamily.gabriel().label == "gabriel"
        assert GraphFamily.mdsf().label == "mdsf[star]"
        assert GraphFamily.mdsf(with_origin_sink=True).label == "mdsf[star;origin]"

    def test_min_points(self):
        assert GraphFamily.jth_nng(3).min_points == 4
        assert GraphFamily.knng(2).min_points == 3
        assert GraphFamily.mdsf().min_points == 1
        assert GraphFamily.gabriel().min_points == 2

    @pytest.mark.parametrize("k", [0, -1, 1.5, True])
    def test_invalid_rank(self, k):
        with pytest.raises(InvalidParameterError):
            GraphFamily.knng(k)

    def test_origin_sink_only_for_star(self):
        with pytest.raises(InvalidParameterError):
            GraphFamily.mdsf(ConeOrder(0.0, math.pi), with_origin_sink=True)

    def test_parameters_do_not_leak_between_kinds(self):
        with pytest.raises(InvalidParameterError):
            GraphFamily("ong", k=2)
        with pytest.raises(InvalidParameterError):
            GraphFamily("knng", k=1, order=ConeOrder.star())


class TestAuxiliaryConstants:

    def test_harmonic_numbers(self):
        assert expected_minimal_elements(1) == 1.0
        assert expected_minimal_elements(3) == pytest.approx(11.0 / 6.0, rel=1e-15)
        assert expected_minimal_elements(10) == pytest.approx(2.9289682539682538, rel=1e-14)

    @pytest.mark.parametrize("n", [1, 2, 10, 1000, 10 ** 5])
    def test_harmonic_bound(self, n):
        assert expected_minimal_elements(n) <= 1.0 + math.log(n) + 1e-12

    def test_origin_correction_vanishes_below_two(self):
        values = [origin_correction_bound(n, 1.0) for n in (10, 10 ** 3, 10 ** 5, 10 ** 7)]
        assert all(b < a for a, b in zip(values, values[1:]))
        assert values[-1] < 0.01

    def test_gabriel_rank_probability(self):
        assert [gabriel_rank_edge_probability(2, k) for k in (1, 2, 3)] == pytest.approx([1.0, 0.75, 0.5625])
        assert gabriel_rank_edge_probability(3, 2) == pytest.approx(7.0 / 8.0)
