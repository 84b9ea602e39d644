import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import integer_nthroot


class QuadraticFieldError(ValueError):
    pass


def rational_sqrt(value: Fraction) -> Fraction | None:
    """유리수 제곱근 (없으면 None)."""
    value = Fraction(value)
    if value < 0:
        return None
    num, num_exact = integer_nthroot(value.numerator, 2)
    den, den_exact = integer_nthroot(value.denominator, 2)
    if not (num_exact and den_exact):
        return None
    return Fraction(int(num), int(den))


@dataclass(frozen=True)
class QuadraticFieldElement:
    """Q(√D) 의 원소 m + n·√D. D 는 제곱이 아닌 정수."""

    discriminant: int
    rational: Fraction
    irrational: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "rational", Fraction(self.rational))
        object.__setattr__(self, "irrational", Fraction(self.irrational))

    @classmethod
    def from_parts(cls, discriminant: int, a: int, b: int, c: int) -> "QuadraticFieldElement":
        """(a + b√D)/c."""
        if c == 0:
            raise QuadraticFieldError("분모가 0 입니다.")
        return cls(discriminant, Fraction(a, c), Fraction(b, c))

    def _coerce(self, other) -> "QuadraticFieldElement":
        if isinstance(other, QuadraticFieldElement):
            if other.discriminant != self.discriminant:
                raise QuadraticFieldError(f"서로 다른 이차체: {self.discriminant} != {other.discriminant}")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticFieldElement(self.discriminant, Fraction(other))
        return NotImplemented

    @property
    def is_zero(self) -> bool:
        return self.rational == 0 and self.irrational == 0

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadraticFieldElement(
            self.discriminant, self.rational + other.rational, self.irrational + other.irrational
        )

    __radd__ = __add__

    def __neg__(self) -> "QuadraticFieldElement":
        return QuadraticFieldElement(self.discriminant, -self.rational, -self.irrational)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        d = self.discriminant
        return QuadraticFieldElement(
            d,
            self.rational * other.rational + d * self.irrational * other.irrational,
            self.rational * other.irrational + self.irrational * other.rational,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticFieldElement":
        return QuadraticFieldElement(self.discriminant, self.rational, -self.irrational)

    def norm(self) -> Fraction:
        return self.rational**2 - self.discriminant * self.irrational**2

    def inverse(self) -> "QuadraticFieldElement":
        norm = self.norm()
        if norm == 0:
            raise QuadraticFieldError("0 의 역원은 없습니다.")
        conj = self.conjugate()
        return QuadraticFieldElement(self.discriminant, conj.rational / norm, conj.irrational / norm)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int) -> "QuadraticFieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadraticFieldElement(self.discriminant, Fraction(1))
        for _ in range(exponent):
            result = result * self
        return result

    def sqrt(self) -> "QuadraticFieldElement | None":
        """
        (u + v√D)² = m + n√D 이면 u² + D v² = m, 2uv = n 이므로
        u² = (m ± √(m² − D n²))/2 입니다.
        """
        m, n, d = self.rational, self.irrational, self.discriminant
        if n == 0:
            root = rational_sqrt(m)
            if root is not None:
                return QuadraticFieldElement(d, root)
            root = rational_sqrt(m / d)
            if root is not None:
                return QuadraticFieldElement(d, 0, root)
            return None
        norm_root = rational_sqrt(self.norm())
        if norm_root is None:
            return None
        for u_squared in ((m + norm_root) / 2, (m - norm_root) / 2):
            u = rational_sqrt(u_squared)
            if not u:
                continue
            v = n / (2 * u)
            if u * u + d * v * v == m:
                return QuadraticFieldElement(d, u, v)
        return None

    def height(self) -> int:
        """x = (a + b√D)/c (기약) 일 때 max(|a|, |b|, |c|)."""
        c = math.lcm(self.rational.denominator, self.irrational.denominator)
        a, b = self.rational * c, self.irrational * c
        return max(abs(int(a)), abs(int(b)), c)

    def __repr__(self) -> str:
        if self.irrational == 0:
            return f"{self.rational}"
        return f"{self.rational} + {self.irrational}·√{self.discriminant}"