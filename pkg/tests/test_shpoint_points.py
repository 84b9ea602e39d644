from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padic.domain.quad_ext_number import QuadExtNumber
from padic.utils.quadratic import smallest_nonresidue
from pball.domain.projective_point import INFINITY
from shpoint.application.usecase.stark_heegner_usecase import StarkHeegnerUseCase
from shpoint.domain.quadratic_field import QuadraticFieldElement
from shpoint.domain.recognition import (
    HEIGHT_BOUNDS,
    RecognitionError,
    embed,
    height_bounds,
    matches_search,
    point_search,
    recognize,
)
from shpoint.domain.rm_point import RMPoint, RMPointError, order_and_gamma
from shpoint.utils.pell import PellSolverError, norm_one_unit
from shpoint.utils.weierstrass import add_points, multiply, negate, on_curve

P = 11
PRECISION = 20

# (a, b) 로 만드는 K_p 의 단위 a + b·s. b 가 단위라 u − 1 도 단위입니다
units = st.tuples(
    st.integers(min_value=0, max_value=120),
    st.integers(min_value=1, max_value=120).filter(lambda b: b % P),
)


@pytest.fixture(scope="module")
def stark_heegner(l_function, integration) -> StarkHeegnerUseCase:
    return StarkHeegnerUseCase(l_function, integration)


@pytest.fixture(scope="module")
def rm8() -> RMPoint:
    return RMPoint(P, 1, 0, -2, PRECISION)


@pytest.fixture(scope="module")
def isomorphism(stark_heegner, curve11):
    return stark_heegner.tate_isomorphism(curve11, PRECISION)


def gap(first, second) -> float:
    return min(float((a - b).valuation) for a, b in zip(first, second))


def ext_unit(coords: tuple[int, int]) -> QuadExtNumber:
    return QuadExtNumber.from_coords(P, smallest_nonresidue(P), *coords, PRECISION)


@pytest.mark.parametrize("discriminant, unit", [(8, (6, 2)), (5, (3, 1)), (13, (11, 3)), (12, (4, 1))])
def test_norm_one_unit(discriminant, unit):
    x, y = norm_one_unit(discriminant)
    assert (x, y) == unit
    assert x * x - discriminant * y * y == 4


def test_norm_one_unit_rejects_squares():
    with pytest.raises(PellSolverError):
        norm_one_unit(9)


def test_automorph_fixes_tau(rm8):
    automorph = order_and_gamma(rm8)
    assert automorph.gamma.entries == (3, 4, 2, 3)
    assert automorph.fixes(rm8.tau)
    assert automorph.inverse().fixes(rm8.tau)
    a, b, c, d = automorph.gamma.entries
    assert ((rm8.tau * c + d) - automorph.eigenvalue(rm8.sqrt_d)).is_zero


@pytest.mark.parametrize(
    "form",
    [
        (0, 1, 1),
        (1, 0, -4),
        (2, 0, -4),
        (1, 1, -1),
        (1, 0, -3),
    ],
)
def test_rm_point_validation(form):
    with pytest.raises(RMPointError):
        RMPoint(P, *form, PRECISION)


def test_conjugate_rm_point(rm8):
    conjugate = rm8.conjugate()
    assert conjugate.form == (-1, 0, 2)
    assert (conjugate.tau - rm8.tau.conjugate()).is_zero


def test_group_law_on_torsion(curve11):
    coeffs = curve11.coefficients
    point = (Fraction(5), Fraction(5))
    assert on_curve(coeffs, point)
    assert multiply(coeffs, 5, point) is None
    assert add_points(coeffs, point, negate(coeffs, point)) is None
    assert on_curve(coeffs, multiply(coeffs, 2, point))


def test_recognize_rational_point(curve11, rm8):
    x = embed(QuadraticFieldElement(8, 16), rm8.sqrt_d)
    recognized = recognize(x, 8, 100, curve11.coefficients, rm8.sqrt_d)
    assert recognized.x == QuadraticFieldElement(8, 16)
    assert recognized.height == 16
    assert on_curve(curve11.coefficients, (recognized.x, recognized.y))


def test_recognize_rejects_points_off_the_curve(curve11, rm8):
    x = embed(QuadraticFieldElement.from_parts(8, 0, 1, 4), rm8.sqrt_d)
    with pytest.raises(RecognitionError):
        recognize(x, 8, 100, curve11.coefficients, rm8.sqrt_d)


def test_point_search_finds_torsion(curve11, rm8):
    found = point_search(curve11.coefficients, 8, 5)
    assert any(point[0] == QuadraticFieldElement(8, 5) for point in found)
    recognized = recognize(embed(QuadraticFieldElement(8, 5), rm8.sqrt_d), 8, 100, curve11.coefficients, rm8.sqrt_d)
    assert matches_search(recognized, found, curve11.coefficients, 8, curve11.t_bound)


def test_tate_parametrization_round_trip(stark_heegner, curve11):
    isomorphism = stark_heegner.tate_isomorphism(curve11, PRECISION)
    assert isomorphism.split_over_qp
    u = QuadExtNumber.generator(P, smallest_nonresidue(P), PRECISION) + P
    point = isomorphism.parametrize(u)
    assert point is not None
    back = isomorphism.invert(point)
    assert (back - u).valuation >= PRECISION // 2


def test_stark_heegner_point_for_rm_discriminant_8(stark_heegner, curve11, rm8, tate11):
    point = stark_heegner.stark_heegner(curve11, rm8, 2)
    assert point.pieces >= 1
    assert all(v.denominator == 1 for v in point.ord_part)
    assert all(0 <= v < tate11.ord for v in point.reduced_ord(tate11.ord))
    again = stark_heegner.stark_heegner(curve11, rm8, 2)
    assert again.ord_part == point.ord_part
    assert all((a - b).is_zero for a, b in zip(again.log_part, point.log_part))


def test_stark_heegner_rejects_prime_mismatch(stark_heegner, curve37, rm8):
    with pytest.raises(ValueError):
        stark_heegner.stark_heegner(curve37, rm8, 2)



def test_height_bounds():
    assert height_bounds(HEIGHT_BOUNDS[-1]) == HEIGHT_BOUNDS
    assert height_bounds(500) == (100, 500)
    assert height_bounds(50) == (50,)
    with pytest.raises(ValueError):
        height_bounds(0)


def test_base_cusp_does_not_matter(stark_heegner, curve11, rm8, tate11):
    depth = 3
    from_zero = stark_heegner.stark_heegner(curve11, rm8, depth, r=0)
    from_infinity = stark_heegner.stark_heegner(curve11, rm8, depth, r=INFINITY)
    assert all((a - b) % tate11.ord == 0 for a, b in zip(from_zero.ord_part, from_infinity.ord_part))
    branch = tate11.branch
    assert gap(from_zero.doubled.value(branch), from_infinity.doubled.value(branch)) >= depth


@pytest.mark.parametrize("depth", [2, 3])
def test_stark_heegner_converges_with_depth(stark_heegner, curve11, rm8, depth):
    coarse = stark_heegner.stark_heegner(curve11, rm8, depth)
    fine = stark_heegner.stark_heegner(curve11, rm8, depth + 1)
    assert coarse.ord_part == fine.ord_part
    assert gap(coarse.log_part, fine.log_part) >= depth - 2


def test_conjugate_point_is_inverse_galois_image(stark_heegner, curve11, rm8, tate11):
    depth = 2
    point = stark_heegner.stark_heegner(curve11, rm8, depth)
    conjugate = stark_heegner.conjugate(curve11, rm8, depth)
    assert conjugate.point.form == (-1, 0, 2)
    assert conjugate.ord_part == tuple(-v for v in point.ord_part)
    expected = tuple(-v.conjugate() for v in point.doubled.value(tate11.branch))
    assert gap(conjugate.doubled.value(tate11.branch), expected) >= depth


def test_translating_tau_and_cusp_leaves_point_fixed(stark_heegner, curve11, rm8, tate11):
    depth = 3
    # τ + 1 은 (1, −2, −1) 의 근, 기준 첨점 0 은 1 로 옮겨집니다
    shifted = RMPoint(P, 1, -2, -1, PRECISION)
    assert (shifted.tau - rm8.tau - 1).is_zero
    original = stark_heegner.stark_heegner(curve11, rm8, depth, r=0)
    moved = stark_heegner.stark_heegner(curve11, shifted, depth, r=1)
    assert all((a - b) % tate11.ord == 0 for a, b in zip(original.ord_part, moved.ord_part))
    branch = tate11.branch
    assert gap(original.doubled.value(branch), moved.doubled.value(branch)) >= depth - 2


def test_tate_parametrize_stark_heegner_point(stark_heegner, curve11, rm8, isomorphism):
    point = stark_heegner.stark_heegner(curve11, rm8, 2)
    image = stark_heegner.tate_parametrize(curve11, point, 0, PRECISION)
    expected = isomorphism.parametrize(point.multiplicative(0, PRECISION))
    if expected is None:
        assert image is None
    else:
        assert gap(image, expected) >= PRECISION - 3


def curve_residual(coeffs, point) -> float:
    a1, a2, a3, a4, a6 = coeffs
    x, y = point
    return float((y * y + a1 * x * y + a3 * y - (x * x * x + a2 * x * x + a4 * x + a6)).valuation)


@settings(max_examples=20, deadline=None)
@given(units)
def test_tate_image_lies_on_curve(curve11, isomorphism, coords):
    u = ext_unit(coords)
    assert curve_residual(curve11.coefficients, isomorphism.parametrize(u)) >= PRECISION - 3


@settings(max_examples=20, deadline=None)
@given(units)
def test_tate_parametrization_is_q_periodic(isomorphism, coords):
    u = ext_unit(coords)
    assert gap(isomorphism.parametrize(u * isomorphism.q), isomorphism.parametrize(u)) >= PRECISION - 3


@settings(max_examples=20, deadline=None)
@given(units)
def test_tate_inverse_maps_to_negated_point(curve11, isomorphism, coords):
    u = ext_unit(coords)
    expected = negate(curve11.coefficients, isomorphism.parametrize(u))
    assert gap(isomorphism.parametrize(u.inverse()), expected) >= PRECISION - 3


@settings(max_examples=20, deadline=None)
@given(units)
def test_tate_parametrization_inverts(isomorphism, coords):
    u = ext_unit(coords)
    assert float((isomorphism.invert(isomorphism.parametrize(u)) - u).valuation) >= PRECISION - 3
