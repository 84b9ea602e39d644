import math
from dataclasses import dataclass
from fractions import Fraction

from sympy.ntheory import n_order

from measure.domain.double_integral import DoubleIntegral
from padic.domain.quad_ext_number import QuadExtNumber
from padic.utils.valuation import strip_p
from pball.domain.gamma_element import GammaElement
from pball.domain.projective_point import Cusp, as_cusp, is_infinity


class StabilizerConstructionError(ValueError):
    pass


def _column(x: Cusp) -> tuple[int, int]:
    if is_infinity(x):
        return 1, 0
    x = Fraction(x)
    return x.numerator, x.denominator


def hyperbolic_stabilizer(prime: int, r: Cusp, s: Cusp) -> GammaElement:
    """
    γ = g·diag(p^k, p^−k)·g⁻¹, g(0) = r, g(∞) = s. (r, s) = (0, ∞) 이면 diag(p, 1/p).

    γ − p^(−k)·I = (p^k − p^(−k))·g E₁₁ g⁻¹ 이므로 p 와 서로소인 분모 Δ' 에 대해
    p^(2k) ≡ 1 (mod Δ') 인 최소 k 를 고릅니다.
    """
    r, s = as_cusp(r), as_cusp(s)
    a, c = _column(r)
    b, d = _column(s)
    det = b * c - a * d
    if det == 0:
        raise StabilizerConstructionError(f"두 첨점이 같아 쌍곡 안정자가 없습니다: r={r}, s={s}")
    content = math.gcd(det, b * c, a * b, d * c, a * d)
    reduced = abs(det // content)
    if reduced % prime == 0:
        reduced = strip_p(reduced, prime)[1]
    k = 1 if reduced == 1 else int(n_order(prime * prime, reduced))
    x = Fraction(prime) ** k
    scale = (x - 1 / x) / det
    # g E₁₁ g⁻¹ = (1/det)·[[b c, −a b], [d c, −a d]]
    return GammaElement(
        prime,
        1 / x + scale * b * c,
        -scale * a * b,
        scale * d * c,
        1 / x - scale * a * d,
    )


@dataclass(frozen=True)
class PeriodJ:
    """곱셈적 주기 J_f[r, s] = ×∫_z^{γz} ω_f[r, s]."""

    r: Cusp
    s: Cusp
    gamma: GammaElement
    integral: DoubleIntegral
    base_points: tuple[QuadExtNumber, QuadExtNumber]
    base_point_gap: tuple[float, float]
    ord_agree: bool

    @property
    def ord_part(self) -> tuple[Fraction, Fraction]:
        return self.integral.ord_part

    @property
    def log_part(self) -> tuple[QuadExtNumber, QuadExtNumber]:
        return self.integral.log_part
