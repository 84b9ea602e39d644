"""
첨점 사이의 경로 {r, s} 를 단모듈러 경로 g{0, ∞} 의 합으로 분해합니다 (Manin 기법).
"""
import math
from fractions import Fraction

from sympy import Rational
from sympy.ntheory.continued_fraction import continued_fraction_convergents, continued_fraction_iterator

from pball.domain.projective_point import Cusp, is_infinity

Matrix2 = tuple[int, int, int, int]


def convergents(x: Fraction) -> list[tuple[int, int]]:
    """정칙 연분수의 수렴분수 (p_k, q_k), 앞에 1/0 을 붙여 돌려줍니다."""
    terms = continued_fraction_iterator(Rational(x.numerator, x.denominator))
    pairs = [(1, 0)]
    for value in continued_fraction_convergents(terms):
        value = Rational(value)
        pairs.append((int(value.p), int(value.q)))
    return pairs


def ceiling_convergents(x: Fraction) -> list[tuple[int, int]]:
    """
    올림 연분수 x = b0 − 1/(b1 − 1/(b2 − …)) 의 수렴분수, 앞에 1/0 을 붙입니다.
    이웃한 두 항의 행렬식은 항상 −1 입니다.
    """
    pairs = [(1, 0)]
    prev = (0, -1)
    current = x
    while True:
        b = math.ceil(current)
        last = pairs[-1]
        pairs.append((b * last[0] - prev[0], b * last[1] - prev[1]))
        prev = last
        if current == b:
            return pairs
        current = 1 / (b - current)


def _pieces(pairs: list[tuple[int, int]]) -> list[Matrix2]:
    pieces = []
    for (p0, q0), (p1, q1) in zip(pairs, pairs[1:]):
        # g·0 = p0/q0, g·∞ = p1/q1
        if p1 * q0 - p0 * q1 == 1:
            pieces.append((p1, p0, q1, q0))
        else:
            pieces.append((-p1, p0, -q1, q0))
    return pieces


def pieces_from_infinity(x: Cusp, ceiling: bool = False) -> list[Matrix2]:
    """{∞, x} = Σ g{0, ∞} 인 SL₂(Z) 행렬 g 들."""
    if is_infinity(x):
        return []
    x = Fraction(x)
    return _pieces(ceiling_convergents(x) if ceiling else convergents(x))


def unimodular_pieces(r: Cusp, s: Cusp, ceiling: bool = False) -> list[tuple[int, Matrix2]]:
    """{r, s} = Σ sign·g{0, ∞}."""
    pieces = [(1, g) for g in pieces_from_infinity(s, ceiling)]
    pieces.extend((-1, g) for g in pieces_from_infinity(r, ceiling))
    return pieces
