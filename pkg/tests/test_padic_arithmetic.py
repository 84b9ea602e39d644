from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padic.domain.log_branch import LogBranch
from padic.domain.padic_number import PadicDivisionByZeroError, PadicNumber, PrimeMismatchError
from padic.domain.quad_ext_number import QuadExtNumber
from padic.utils.quadratic import (
    QuadraticResidueError,
    embed_quadratic,
    is_fundamental_discriminant,
    smallest_nonresidue,
    sqrt_quadratic,
)

P = 11
N = 12
R = smallest_nonresidue(P)

units = st.integers(min_value=1, max_value=P**N - 1).filter(lambda n: n % P != 0)
one_units = st.integers(min_value=0, max_value=P ** (N - 1) - 1).map(lambda n: 1 + P * n)


def unit(n: int) -> PadicNumber:
    return PadicNumber.from_int(P, n, N)


def quad(a: int, b: int) -> QuadExtNumber:
    return QuadExtNumber.from_coords(P, R, a, b, N)


def test_valuation_and_digits():
    x = PadicNumber.from_rational(P, Fraction(22, 3), N)
    assert x.valuation == 1
    assert PadicNumber.from_int(11, 13, 3).digits() == "0.1.2"
    assert PadicNumber.from_int(5, 7, 4).digits() == "0012"
    assert PadicNumber.zero(P).digits() == "0"


def test_prime_mismatch_and_zero_division():
    with pytest.raises(PrimeMismatchError):
        PadicNumber.from_int(5, 1, 3) + PadicNumber.from_int(7, 1, 3)
    with pytest.raises(PadicDivisionByZeroError):
        PadicNumber.zero(P, 5).inverse()


def test_cancellation_keeps_absolute_precision():
    x = unit(1 + P**3)
    difference = x - unit(1)
    assert difference.valuation == 3
    assert difference.absolute_precision == N


@settings(max_examples=60, deadline=None)
@given(units, units, units)
def test_ring_axioms_on_units(a, b, c):
    x, y, z = unit(a), unit(b), unit(c)
    assert (x + y) + z == x + (y + z)
    assert x + y == y + x
    assert (x * y) * z == x * (y * z)
    assert x * x.inverse() == unit(1)


@settings(max_examples=40, deadline=None)
@given(units, units)
def test_angle_is_multiplicative(a, b):
    x, y = unit(a), unit(b)
    assert (x * y).angle() == x.angle() * y.angle()
    omega = x.teichmuller()
    assert omega ** (P - 1) == unit(1)


@settings(max_examples=40, deadline=None)
@given(one_units, one_units)
def test_log_is_a_homomorphism(a, b):
    x, y = unit(a), unit(b)
    assert (x * y).log0() == x.log0() + y.log0()


@settings(max_examples=30, deadline=None)
@given(one_units)
def test_exp_inverts_log(a):
    x = unit(a)
    if x == unit(1):
        return
    assert x.log0().exp() == x


def test_log_branch_kills_period():
    q = PadicNumber.from_rational(P, Fraction(P**2 * 7, 5), N)
    branch = LogBranch.from_period(q)
    assert branch.log(q).is_zero


def test_quadratic_extension_basics():
    s = QuadExtNumber.generator(P, R, N)
    assert s * s == quad(R, 0)
    x, y = quad(3, 5), quad(-2, 7)
    assert (x * y).norm() == x.norm() * y.norm()
    assert x.conjugate().conjugate() == x
    assert x * x.inverse() == quad(1, 0)


def test_embed_square_root_of_inert_discriminant():
    sqrt_d = embed_quadratic(8, P, N)
    assert sqrt_d * sqrt_d == quad(8, 0)
    with pytest.raises(QuadraticResidueError):
        embed_quadratic(5, P, N)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=-50, max_value=50), st.integers(min_value=1, max_value=50))
def test_sqrt_in_extension(a, b):
    x = quad(a, b)
    root = sqrt_quadratic(x * x)
    assert (root - x).is_zero or (root + x).is_zero


def test_fundamental_discriminants():
    assert is_fundamental_discriminant(8)
    assert is_fundamental_discriminant(-67)
    assert is_fundamental_discriminant(-8)
    assert not is_fundamental_discriminant(12 * 4)
    assert not is_fundamental_discriminant(9)
