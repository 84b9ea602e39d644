import math
from dataclasses import dataclass
from functools import cached_property
from fractions import Fraction

from sympy import legendre_symbol
from sympy.ntheory.primetest import is_square

from padic.domain.quad_ext_number import QuadExtNumber
from padic.utils.quadratic import embed_quadratic, is_fundamental_discriminant
from pball.domain.gamma_element import GammaElement
from shpoint.utils.pell import norm_one_unit


class RMPointError(ValueError):
    pass


@dataclass(frozen=True)
class RMPoint:
    """
    Aτ² + Bτ + C = 0 의 근 τ = (−B + √D)/(2A) ∈ H_p ∩ K, K = Q(√D) 실이차체, p 관성.
    원시 형식이고 D 가 기본 판별식이면 O_τ 는 극대 Z[1/p]-order 입니다.
    """

    prime: int
    a: int
    b: int
    c: int
    precision: int

    def __post_init__(self):
        d = self.discriminant
        if self.a == 0:
            raise RMPointError("A = 0 인 형식은 이차 무리수를 정하지 않습니다.")
        if d <= 0 or is_square(d):
            raise RMPointError(f"판별식 D={d} 은(는) 제곱이 아닌 양수여야 합니다.")
        if math.gcd(math.gcd(self.a, self.b), self.c) != 1:
            raise RMPointError(f"형식 ({self.a}, {self.b}, {self.c}) 이(가) 원시적이지 않습니다.")
        if not is_fundamental_discriminant(d):
            raise RMPointError(f"D={d} 은(는) 기본 판별식이 아니어서 O_τ 가 극대가 아닙니다.")
        if d % self.prime == 0 or legendre_symbol(d % self.prime, self.prime) != -1:
            raise RMPointError(f"p={self.prime} 은(는) Q(√{d}) 에서 관성적이지 않습니다.")

    @property
    def form(self) -> tuple[int, int, int]:
        return self.a, self.b, self.c

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    @cached_property
    def sqrt_d(self) -> QuadExtNumber:
        return embed_quadratic(self.discriminant, self.prime, self.precision)

    @cached_property
    def tau(self) -> QuadExtNumber:
        return (self.sqrt_d - self.b) / (2 * self.a)

    def conjugate(self) -> "RMPoint":
        """(−A, −B, −C) 의 근은 σ(τ)."""
        return RMPoint(self.prime, -self.a, -self.b, -self.c, self.precision)


@dataclass(frozen=True)
class AutomorphGamma:
    """γ_τ = [[(x − By)/2, −Cy], [Ay, (x + By)/2]], 고유값 (cτ + d) = ε = (x + y√D)/2."""

    gamma: GammaElement
    unit_x: int
    unit_y: int
    discriminant: int

    def fixes(self, z: QuadExtNumber) -> bool:
        return (self.gamma.act_point(z) - z).is_zero

    def eigenvalue(self, sqrt_d: QuadExtNumber) -> QuadExtNumber:
        return (sqrt_d * self.unit_y + self.unit_x) / 2

    def inverse(self) -> "AutomorphGamma":
        return AutomorphGamma(self.gamma.inverse(), self.unit_x, -self.unit_y, self.discriminant)


def order_and_gamma(point: RMPoint) -> AutomorphGamma:
    """노름 +1 기본 단위 ε > 1 로 만든 τ 의 안정자 생성원."""
    x, y = norm_one_unit(point.discriminant)
    a, b, c = point.form
    gamma = GammaElement(
        point.prime,
        Fraction(x - b * y, 2),
        -c * y,
        a * y,
        Fraction(x + b * y, 2),
    )
    return AutomorphGamma(gamma=gamma, unit_x=x, unit_y=y, discriminant=point.discriminant)
