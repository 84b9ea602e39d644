import math
from dataclasses import dataclass
from functools import cached_property

from sympy import legendre_symbol

from padic.domain.quad_ext_number import QuadExtNumber
from padic.utils.quadratic import embed_quadratic, is_fundamental_discriminant
from pball.domain.tree import reduction_point
from pball.domain.vertex import Vertex


class CMPointError(ValueError):
    pass


def class_number(discriminant: int) -> int:
    """판별식 D < 0 의 축약된 원시 양정치 형식 개수."""
    count = 0
    a = 1
    while 3 * a * a <= -discriminant:
        for b in range(-a + 1, a + 1):
            numerator = b * b - discriminant
            if numerator % (4 * a):
                continue
            c = numerator // (4 * a)
            if c < a or (c == a and b < 0):
                continue
            if math.gcd(math.gcd(a, b), c) == 1:
                count += 1
        a += 1
    return count


@dataclass(frozen=True)
class CMPoint:
    """
    Aτ² + Bτ + C = 0 의 근 τ = (τ_p, τ_∞), K = Q(√D) 허이차체.

    τ_∞ = (−B + i√|D|)/(2A) 가 상반평면에 있도록 A > 0 을 요구합니다.
    D 는 기본 판별식, 유군수 1, p 는 K 에서 관성.
    """

    prime: int
    a: int
    b: int
    c: int
    precision: int

    def __post_init__(self):
        d = self.discriminant
        if d >= 0:
            raise CMPointError(f"판별식 D={d} 은(는) 음수여야 합니다.")
        if self.a <= 0:
            raise CMPointError(f"A={self.a} 은(는) 양수여야 τ_∞ 가 상반평면에 놓입니다.")
        if math.gcd(math.gcd(self.a, self.b), self.c) != 1:
            raise CMPointError(f"형식 ({self.a}, {self.b}, {self.c}) 이(가) 원시적이지 않습니다.")
        if not is_fundamental_discriminant(d):
            raise CMPointError(f"D={d} 은(는) 기본 판별식이 아니어서 O_τ 가 극대가 아닙니다.")
        if class_number(d) != 1:
            raise CMPointError(f"D={d} 의 유군수가 {class_number(d)} 입니다 (1 이어야 함).")
        if d % self.prime == 0 or legendre_symbol(d % self.prime, self.prime) != -1:
            raise CMPointError(f"p={self.prime} 은(는) Q(√{d}) 에서 관성적이지 않습니다.")

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

    @cached_property
    def tau_conjugate(self) -> QuadExtNumber:
        return self.tau.conjugate()

    @cached_property
    def fixed_vertex(self) -> Vertex:
        """ι_τ(K_p^×) 가 고정하는 꼭짓점 red(τ_p)."""
        return reduction_point(self.tau)

    def tau_complex(self, ctx):
        return ctx.mpc(ctx.mpf(-self.b) / (2 * self.a), ctx.sqrt(-self.discriminant) / (2 * self.a))
