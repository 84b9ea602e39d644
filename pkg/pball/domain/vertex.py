import math
from dataclasses import dataclass
from fractions import Fraction

from padic.domain.padic_number import PadicNumber, PrecisionExhaustedError
from padic.utils.valuation import strip_p, vp_rational


def canonical_center(x: Fraction | int | PadicNumber, level: int, prime: int) -> Fraction:
    """x mod p^level 의 [0, p^level) 안 대표원 (Z[1/p] 원소)."""
    if isinstance(x, PadicNumber):
        if x.is_zero:
            if x.valuation < level:
                raise PrecisionExhaustedError(f"중심을 정하기에 정밀도가 부족합니다 (O(p^{x.valuation}), level {level}).")
            return Fraction(0)
        v = int(x.valuation)
        if v >= level:
            return Fraction(0)
        if x.absolute_precision < level:
            raise PrecisionExhaustedError(f"중심을 정하기에 정밀도가 부족합니다 ({x!r}, level {level}).")
        k = max(0, -v)
        width = level + k
        return Fraction((x.unit * prime ** (v + k)) % prime**width, prime**k)

    x = Fraction(x)
    k, w = strip_p(x.denominator, prime)
    width = level + k
    if width <= 0:
        return Fraction(0)
    modulus = prime**width
    return Fraction((x.numerator * pow(w, -1, modulus)) % modulus, prime**k)


def rational_valuation(x: Fraction | int, prime: int) -> float:
    return math.inf if x == 0 else vp_rational(x, prime)


@dataclass(frozen=True)
class Vertex:
    """원판 B(a, m) = {x : v(x − a) ≥ m}, 격자류 [[p^m, a],[0,1]] 에 대응하는 꼭짓점."""

    prime: int
    center: Fraction
    level: int

    @classmethod
    def make(cls, prime: int, center: Fraction | int | PadicNumber, level: int) -> "Vertex":
        return cls(prime, canonical_center(center, level, prime), level)

    @classmethod
    def origin(cls, prime: int) -> "Vertex":
        """v∘ = Z_p."""
        return cls(prime, Fraction(0), 0)

    @property
    def parity(self) -> int:
        return self.level % 2

    def distance_from_origin(self) -> int:
        w = min(0, rational_valuation(self.center, self.prime), self.level)
        return int(self.level - 2 * w)

    def children(self) -> list["Vertex"]:
        step = Fraction(self.prime) ** self.level
        return [Vertex.make(self.prime, self.center + j * step, self.level + 1) for j in range(self.prime)]

    def parent(self) -> "Vertex":
        return Vertex.make(self.prime, self.center, self.level - 1)

    def contains(self, other: "Vertex") -> bool:
        """other 의 원판이 이 원판 안에 있는지."""
        return other.level >= self.level and rational_valuation(other.center - self.center, self.prime) >= self.level

    def matrix(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return Fraction(self.prime) ** self.level, self.center, Fraction(0), Fraction(1)
