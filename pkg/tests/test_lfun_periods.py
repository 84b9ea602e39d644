from dataclasses import replace

import pytest

from lfun.application.usecase.l_function_usecase import GoodReductionError, LFunctionUseCase, TwistParameterError
from lfun.domain.period_j import StabilizerConstructionError, hyperbolic_stabilizer
from lfun.utils.j_series import j_coefficients
from pball.domain.projective_point import INFINITY


def test_j_series_leading_coefficients():
    assert j_coefficients(3) == [744, 196884, 21493760, 864299970]


def test_interpolation_for_split_curve(l_function, curve11):
    record = l_function.interpolation(curve11)
    assert record.consistent
    assert record.integers[0] != 0
    # a_p = +1 이면 단위원 위 값이 사라집니다
    assert record.units == (0, 0)


def test_interpolation_for_non_split_curve(l_function, curve37):
    record = l_function.interpolation(curve37)
    assert record.consistent
    assert record.units == tuple(2 * v for v in record.integers)
    assert record.integers[0] == 0


def test_lp_record(l_function, curve11):
    record = l_function.lp_value_and_derivative(curve11, 2, 10)
    assert record.value == (0, 0)
    assert record.depth == 2
    assert not record.derivative[0].is_zero


def test_twist_parameters_are_validated(l_function, curve11):
    with pytest.raises(TwistParameterError):
        l_function.lp_partial_twisted(curve11, 1, 11, 2, 10)
    with pytest.raises(TwistParameterError):
        l_function.lp_partial_twisted(curve11, 2, 4, 2, 10)
    with pytest.raises(TwistParameterError):
        l_function.lp_partial_twisted(curve11, 1, 0, 2, 10)


def test_trivial_twist_matches_untwisted(l_function, curve11):
    twisted = l_function.lp_partial_twisted(curve11, 0, 1, 2, 10)
    untwisted = l_function.lp_value_and_derivative(curve11, 2, 10)
    assert twisted.integers == l_function.interpolation(curve11).integers
    assert twisted.units == untwisted.value
    assert twisted.derivative == untwisted.derivative


def test_tate_period_of_11a(l_function, tate11):
    assert tate11.ord == 5
    assert tate11.q.prime == 11
    assert l_function.j_agreement(tate11, 20) >= 20
    assert tate11.branch.log(tate11.q).is_zero


def test_tate_period_of_37a(l_function, curve37):
    period = l_function.tate_period(curve37, 12)
    assert period.ord == 1
    assert l_function.j_agreement(period, 12) >= 12


def test_tate_period_needs_multiplicative_reduction(l_function, curve11):
    with pytest.raises(GoodReductionError):
        l_function.tate_period(replace(curve11, c4=0), 10)


def test_hyperbolic_stabilizer_fixes_both_cusps():
    gamma = hyperbolic_stabilizer(11, 0, INFINITY)
    assert gamma.act_point(0) == 0
    assert gamma.act_point(INFINITY) == INFINITY
    other = hyperbolic_stabilizer(11, 1, 3)
    assert other.act_point(1) == 1
    assert other.act_point(3) == 3
    with pytest.raises(StabilizerConstructionError):
        hyperbolic_stabilizer(11, 2, 2)


def test_mtt_passes_for_split_curve(l_function, curve11):
    record = l_function.mtt_check(curve11, 3, 20)
    assert record.passed
    assert record.ord_part == record.expected_ord == tuple(2 * v for v in record.l_value)


def test_mtt_detects_perturbed_period(l_function, curve11):
    record = l_function.mtt_check(curve11, 3, 20, slack=0, q_perturbation=12)
    assert not record.passed
    assert record.residual_valuation < 3


def test_mtt_for_non_split_curve(l_function, curve37):
    record = l_function.mtt_check(curve37, 2, 12)
    assert record.expected_ord == (0, 0)
    assert record.passed


class DummyCache:
    def __init__(self, coefficients: list[int]):
        self.coefficients = coefficients
        self.saved: list[str] = []

    def load(self, kind: str, key: dict) -> dict | None:
        if kind == "jseries":
            return {"coefficients": self.coefficients}
        return None

    def save(self, kind: str, key: dict, payload: dict) -> None:
        self.saved.append(kind)


def test_j_series_prefers_cached_coefficients(symbols, integration):
    cache = DummyCache([744, 196884, 21493760, 864299970, 20245856256])
    usecase = LFunctionUseCase(symbols, integration, cache)
    assert usecase.j_series(2) == [744, 196884, 21493760]
    assert cache.saved == []
    assert usecase.j_series(6)[:5] == cache.coefficients
    assert cache.saved == ["jseries"]


def test_period_j_is_independent_of_base_point(l_function, curve11):
    period = l_function.period_J(curve11, 0, INFINITY, 2, 10)
    assert period.ord_agree
    assert period.gamma.act_point(0) == 0
    assert all(int(v) == v for v in period.integral.ord_part)


def test_mtt_residual_grows_with_depth(l_function, curve11):
    records = [l_function.mtt_check(curve11, depth, 20) for depth in (2, 3, 4)]
    assert all(record.passed for record in records)
    residuals = [record.residual_valuation for record in records]
    assert all(v >= depth - 2 for v, depth in zip(residuals, (2, 3, 4)))
    assert residuals == sorted(residuals)
