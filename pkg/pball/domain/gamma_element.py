import math
from dataclasses import dataclass
from fractions import Fraction

from pball.domain.ball import Ball
from pball.domain.oriented_edge import OrientedEdge
from pball.domain.projective_point import Point, mobius
from pball.domain.vertex import Vertex, canonical_center
from padic.domain.padic_number import PadicNumber, PrecisionExhaustedError
from padic.utils.valuation import strip_p, vp_rational


class GammaElementError(ValueError):
    pass


def _valuation(x, prime: int) -> float:
    if isinstance(x, PadicNumber):
        return math.inf if x.is_zero else x.valuation
    return math.inf if x == 0 else vp_rational(x, prime)


def act_vertex(entries: tuple, vertex: Vertex) -> Vertex:
    """
    g·[[p^m, a],[0,1]] 를 열 연산(GL₂(Z_p))과 스칼라로 [[p^m', a'],[0,1]] 꼴로 되돌립니다.
    성분은 Fraction 또는 PadicNumber 를 허용합니다.
    """
    prime = vertex.prime
    alpha, beta, gamma, delta = entries
    pm = Fraction(prime) ** vertex.level
    top1, bottom1 = alpha * pm, gamma * pm
    top2, bottom2 = alpha * vertex.center + beta, gamma * vertex.center + delta
    if _valuation(bottom1, prime) < _valuation(bottom2, prime):
        top1, bottom1, top2, bottom2 = top2, bottom2, top1, bottom1
    if _valuation(bottom2, prime) == math.inf:
        raise PrecisionExhaustedError("행렬 작용을 정하기에 정밀도가 부족합니다 (특이 행렬 또는 0 성분).")
    # 아래 줄을 (0, 1) 로
    top1 = top1 - (bottom1 / bottom2) * top2
    head = top1 / bottom2
    tail = top2 / bottom2
    level = _valuation(head, prime)
    if level == math.inf:
        raise PrecisionExhaustedError("행렬 작용을 정하기에 정밀도가 부족합니다.")
    return Vertex(prime, canonical_center(tail, int(level), prime), int(level))


def act_edge(entries: tuple, edge: OrientedEdge) -> OrientedEdge:
    return OrientedEdge(act_vertex(entries, edge.source), act_vertex(entries, edge.target))


def act_ball(entries: tuple, ball: Ball) -> Ball:
    """U_{γe} = γ·U_e."""
    return act_edge(entries, OrientedEdge.from_ball(ball)).ball


@dataclass(frozen=True)
class GammaElement:
    """Γ = SL₂(Z[1/p]) 의 원소 [[a, b],[c, d]]."""

    prime: int
    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            value = Fraction(getattr(self, name))
            object.__setattr__(self, name, value)
            if strip_p(value.denominator, self.prime)[1] != 1:
                raise GammaElementError(f"성분 {value} 의 분모가 {self.prime} 의 거듭제곱이 아닙니다.")
        if self.a * self.d - self.b * self.c != 1:
            raise GammaElementError(f"행렬식이 1 이 아닙니다: [[{self.a}, {self.b}], [{self.c}, {self.d}]]")

    @classmethod
    def identity(cls, prime: int) -> "GammaElement":
        return cls(prime, 1, 0, 0, 1)

    @classmethod
    def translation(cls, prime: int, shift: Fraction | int) -> "GammaElement":
        return cls(prime, 1, shift, 0, 1)

    @classmethod
    def diagonal(cls, prime: int, k: int) -> "GammaElement":
        """diag(p^k, p^−k): z ↦ p^(2k)·z."""
        scale = Fraction(prime) ** k
        return cls(prime, scale, 0, 0, 1 / scale)

    @property
    def entries(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.a, self.b, self.c, self.d

    def __matmul__(self, other: "GammaElement") -> "GammaElement":
        return GammaElement(
            self.prime,
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "GammaElement":
        return GammaElement(self.prime, self.d, -self.b, -self.c, self.a)

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)

    def in_gamma0(self) -> bool:
        """Γ₀(p) 원소인지 (정수 성분, c ≡ 0 mod p)."""
        return self.is_integral() and self.c.numerator % self.prime == 0

    def act_point(self, x: Point) -> Point:
        return mobius(self.entries, x)

    def act_vertex(self, vertex: Vertex) -> Vertex:
        return act_vertex(self.entries, vertex)

    def act_edge(self, edge: OrientedEdge) -> OrientedEdge:
        return act_edge(self.entries, edge)

    def act(self, ball: Ball) -> Ball:
        return act_ball(self.entries, ball)
