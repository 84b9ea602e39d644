from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from modsym.application.usecase.modular_symbol_usecase import BadPrimeError, ModularSymbolUseCase
from modsym.domain.curve_data import CurveData, CurveValidationError
from modsym.domain.manin_basis import ManinBasisError
from modsym.infrastructure.repository.file_coefficient_cache import FileCoefficientCache
from modsym.infrastructure.repository.memory_coefficient_cache import MemoryCoefficientCache
from pball.domain.projective_point import INFINITY

CURVE_11 = (0, -1, 1, -10, -20)

cusps = st.one_of(
    st.just(INFINITY),
    st.fractions(min_value=-100, max_value=100, max_denominator=60),
)
gamma0 = st.tuples(
    st.integers(min_value=-8, max_value=8).filter(lambda k: k != 0),
    st.integers(min_value=-50, max_value=50),
)


def gamma0_entries(prime: int, k: int, d: int) -> tuple[int, int, int, int] | None:
    c = prime * k
    try:
        a = pow(d, -1, abs(c))
    except ValueError:
        return None
    return a, (a * d - 1) // c, c, d


def test_curve_invariants(curve11):
    assert curve11.ap == 1
    assert curve11.c4 == 496
    assert curve11.discriminant == -161051
    assert curve11.torsion == 5
    assert curve11.j_invariant == Fraction(496**3, -161051)
    assert curve11.t_bound == 10


def test_non_split_curve(curve37):
    assert curve37.ap == -1
    assert curve37.torsion == 1
    assert not curve37.is_split


@pytest.mark.parametrize(
    "coefficients, prime",
    [
        ((0, 0, 0, 0, 0), 11),
        (CURVE_11, 13),
        (CURVE_11, 12),
        ((0, 0, 0, 1), 11),
    ],
)
def test_curve_validation(coefficients, prime):
    with pytest.raises(CurveValidationError):
        CurveData.from_coefficients(coefficients, prime)


def test_fourier_coefficients(symbols, curve11):
    assert symbols.fourier_coefficients(curve11, 13) == [1, -2, -1, 2, 1, 2, -2, 0, -2, -2, 1, -2, 4]
    with pytest.raises(BadPrimeError):
        symbols.ap_from_curve(curve11, 4)
    with pytest.raises(BadPrimeError):
        symbols.ap_from_curve(curve11, 11)


def test_hecke_equivariance(symbols, eigen11, curve11):
    report = symbols.hecke_report(eigen11, curve11, 13)
    assert set(report) >= {2, 3, 5, 7, 11, 13}
    assert all(defect == (0, 0) for defect in report.values())


def test_sign_conventions(eigen11, symbols, curve37):
    plus, minus = eigen11.evaluate(0, INFINITY)
    assert plus > 0
    assert minus == 0
    assert symbols.eigen_symbol(curve37).evaluate(0, INFINITY)[0] == 0


def test_torsion_scale(symbols, curve11, curve37):
    assert symbols.torsion_scale(curve11) == 5
    assert symbols.torsion_scale(curve37) == 1


@settings(max_examples=100, deadline=None)
@given(cusps, cusps, cusps)
def test_path_additivity(eigen11, r, s, t):
    left, right = eigen11.evaluate(r, s), eigen11.evaluate(s, t)
    assert (left[0] + right[0], left[1] + right[1]) == eigen11.evaluate(r, t)
    assert eigen11.evaluate(r, s) == tuple(-v for v in eigen11.evaluate(s, r))


@settings(max_examples=100, deadline=None)
@given(gamma0, cusps, cusps)
def test_gamma0_invariance(eigen11, kd, r, s):
    entries = gamma0_entries(11, *kd)
    if entries is None:
        return
    assert eigen11.evaluate_translate(entries, r, s) == eigen11.evaluate(r, s)


@settings(max_examples=60, deadline=None)
@given(cusps, cusps)
def test_two_evaluation_paths_agree(eigen11, r, s):
    assert eigen11.evaluate(r, s) == eigen11.evaluate_direct(r, s)


def test_file_cache_round_trip(tmp_path, curve11):
    cold = ModularSymbolUseCase(FileCoefficientCache(tmp_path))
    first = cold.fourier_coefficients(curve11, 40)
    cache = FileCoefficientCache(tmp_path)
    assert cache.load("ap", {"curve": curve11.label(), "prime": 11})["coefficients"] == first
    warm = ModularSymbolUseCase(FileCoefficientCache(tmp_path))
    assert warm.fourier_coefficients(curve11, 40) == first
    assert cache.load("ap", {"curve": "other", "prime": 11}) is None


def test_eval_symbol_matches_evaluate(symbols, eigen11, curve11):
    assert curve11.is_split
    assert symbols.eval_symbol(eigen11, 0, INFINITY) == eigen11.evaluate(0, INFINITY)
    assert symbols.eval_symbol(eigen11, Fraction(1, 3), Fraction(2, 5)) == eigen11.evaluate(Fraction(1, 3), Fraction(2, 5))


def test_manin_basis(symbols):
    basis = symbols.build_basis(11)
    assert len(basis.symbols) == 12
    assert basis.dim() == 3
    assert symbols.build_basis(11) is basis
    with pytest.raises(ManinBasisError):
        symbols.build_basis(7)


def test_no_coefficients_requested(curve11):
    fresh = ModularSymbolUseCase(MemoryCoefficientCache())
    assert fresh.fourier_coefficients(curve11, 0) == []
    assert fresh.fourier_coefficients(curve11, 1) == [1]
