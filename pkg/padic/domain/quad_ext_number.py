import math
from dataclasses import dataclass
from fractions import Fraction

from padic.domain.padic_number import (
    PadicDivisionByZeroError,
    PadicNumber,
    PrecisionExhaustedError,
    PrimeMismatchError,
)
from padic.utils.series import exp_small, log_one_unit
from padic.utils.valuation import vp_int, vp_rational


def _mul_2(nonresidue: int):
    def mul(x: tuple[int, ...], y: tuple[int, ...], modulus: int) -> tuple[int, ...]:
        return (
            (x[0] * y[0] + nonresidue * x[1] * y[1]) % modulus,
            (x[0] * y[1] + x[1] * y[0]) % modulus,
        )

    return mul


@dataclass(frozen=True)
class QuadExtNumber:
    """
    비분기 이차 확대 K_p = Q_p(s), s² = r 의 원소 p^v·(a + b·s).

    (a, b) 는 mod p^N 정수 좌표이며 0 이 아니면 둘 중 하나는 p 로 나누어지지 않습니다.
    비분기이므로 단위원끼리의 곱은 다시 단위원입니다.
    """

    prime: int
    nonresidue: int
    valuation: float
    coord_a: int
    coord_b: int
    precision: int

    # ------------------------------------------------------------------
    # 생성
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, prime: int, nonresidue: int, absolute_precision: float = math.inf) -> "QuadExtNumber":
        return cls(prime, nonresidue, absolute_precision, 0, 0, 0)

    @classmethod
    def from_scaled(
        cls, prime: int, nonresidue: int, coords: tuple[int, int], shift: int, absolute_precision: float
    ) -> "QuadExtNumber":
        if absolute_precision == math.inf:
            raise PrecisionExhaustedError("정수 표현에는 유한한 정밀도가 필요합니다.")
        width = int(absolute_precision) - shift
        if width <= 0:
            return cls.zero(prime, nonresidue, absolute_precision)
        modulus = prime**width
        a, b = coords[0] % modulus, coords[1] % modulus
        if a == 0 and b == 0:
            return cls.zero(prime, nonresidue, absolute_precision)
        v = min(vp_int(c, prime) for c in (a, b) if c != 0)
        precision = width - v
        small = prime**precision
        return cls(prime, nonresidue, shift + v, (a // prime**v) % small, (b // prime**v) % small, precision)

    @classmethod
    def from_coords(
        cls, prime: int, nonresidue: int, a: Fraction | int, b: Fraction | int, precision: int
    ) -> "QuadExtNumber":
        """유리수 좌표 a + b·s 를 상대 정밀도 precision 으로 만듭니다."""
        a, b = Fraction(a), Fraction(b)
        if a == 0 and b == 0:
            return cls.zero(prime, nonresidue)
        v = min(vp_rational(c, prime) for c in (a, b) if c != 0)
        modulus = prime**precision
        coords = []
        for c in (a, b):
            scaled = c / Fraction(prime) ** v
            coords.append((scaled.numerator * pow(scaled.denominator, -1, modulus)) % modulus)
        return cls(prime, nonresidue, v, coords[0], coords[1], precision)

    @classmethod
    def from_padic(cls, x: PadicNumber, nonresidue: int) -> "QuadExtNumber":
        if x.is_zero:
            return cls.zero(x.prime, nonresidue, x.valuation)
        return cls(x.prime, nonresidue, x.valuation, x.unit, 0, x.precision)

    @classmethod
    def generator(cls, prime: int, nonresidue: int, precision: int) -> "QuadExtNumber":
        """인접 제곱근 s."""
        return cls(prime, nonresidue, 0, 0, 1, precision)

    # ------------------------------------------------------------------
    # 조회
    # ------------------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.coord_a == 0 and self.coord_b == 0

    @property
    def absolute_precision(self) -> float:
        if self.is_zero:
            return self.valuation
        return self.valuation + self.precision

    def _component(self, coord: int) -> PadicNumber:
        if self.is_zero:
            return PadicNumber.zero(self.prime, self.valuation)
        return PadicNumber.from_scaled(self.prime, coord, int(self.valuation), self.absolute_precision)

    @property
    def a(self) -> PadicNumber:
        return self._component(self.coord_a)

    @property
    def b(self) -> PadicNumber:
        return self._component(self.coord_b)

    def is_in_qp(self) -> bool:
        return self.coord_b == 0

    def residue(self) -> tuple[int, int]:
        if self.valuation != 0:
            raise ValueError("단위원이 아닌 값의 잉여류는 정의되지 않습니다.")
        return self.coord_a % self.prime, self.coord_b % self.prime

    def with_precision(self, precision: int) -> "QuadExtNumber":
        if self.is_zero:
            return self
        precision = min(precision, self.precision)
        modulus = self.prime**precision
        return QuadExtNumber(
            self.prime, self.nonresidue, self.valuation, self.coord_a % modulus, self.coord_b % modulus, precision
        )

    # ------------------------------------------------------------------
    # 산술
    # ------------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, QuadExtNumber):
            if other.prime != self.prime or other.nonresidue != self.nonresidue:
                raise PrimeMismatchError(
                    f"서로 다른 확대체의 원소입니다: ({self.prime}, {self.nonresidue}) != ({other.prime}, {other.nonresidue})"
                )
            return other
        if isinstance(other, PadicNumber):
            if other.prime != self.prime:
                raise PrimeMismatchError(f"소수가 다릅니다: {self.prime} != {other.prime}")
            return QuadExtNumber.from_padic(other, self.nonresidue)
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return QuadExtNumber.zero(self.prime, self.nonresidue)
            anchor = self.valuation if self.valuation != math.inf else 0
            rel = max(self.precision, 1) + max(0, int(anchor) - vp_rational(other, self.prime))
            return QuadExtNumber.from_coords(self.prime, self.nonresidue, other, 0, rel)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.valuation == math.inf:
            return other
        if other.valuation == math.inf:
            return self
        absolute = min(self.absolute_precision, other.absolute_precision)
        live = [x for x in (self, other) if not x.is_zero]
        if not live:
            return QuadExtNumber.zero(self.prime, self.nonresidue, absolute)
        shift = int(min(min(x.valuation for x in live), absolute))
        a = sum(x.coord_a * self.prime ** int(x.valuation - shift) for x in live)
        b = sum(x.coord_b * self.prime ** int(x.valuation - shift) for x in live)
        return QuadExtNumber.from_scaled(self.prime, self.nonresidue, (a, b), shift, absolute)

    __radd__ = __add__

    def __neg__(self) -> "QuadExtNumber":
        if self.is_zero:
            return self
        modulus = self.prime**self.precision
        return QuadExtNumber(
            self.prime, self.nonresidue, self.valuation, (-self.coord_a) % modulus, (-self.coord_b) % modulus, self.precision
        )

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
        if self.valuation == math.inf or other.valuation == math.inf:
            return QuadExtNumber.zero(self.prime, self.nonresidue)
        if self.is_zero or other.is_zero:
            return QuadExtNumber.zero(self.prime, self.nonresidue, self.valuation + other.valuation)
        precision = min(self.precision, other.precision)
        modulus = self.prime**precision
        a, b = _mul_2(self.nonresidue)((self.coord_a, self.coord_b), (other.coord_a, other.coord_b), modulus)
        return QuadExtNumber(self.prime, self.nonresidue, self.valuation + other.valuation, a, b, precision)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadExtNumber":
        """σ(a + b·s) = a − b·s."""
        if self.is_zero:
            return self
        modulus = self.prime**self.precision
        return QuadExtNumber(
            self.prime, self.nonresidue, self.valuation, self.coord_a, (-self.coord_b) % modulus, self.precision
        )

    def norm(self) -> PadicNumber:
        if self.is_zero:
            return PadicNumber.zero(self.prime, 2 * self.valuation)
        modulus = self.prime**self.precision
        value = (self.coord_a * self.coord_a - self.nonresidue * self.coord_b * self.coord_b) % modulus
        return PadicNumber(self.prime, 2 * self.valuation, value, self.precision)

    def trace(self) -> PadicNumber:
        return (self + self.conjugate()).a

    def inverse(self) -> "QuadExtNumber":
        if self.is_zero:
            raise PadicDivisionByZeroError("0 의 역원은 없습니다.")
        norm = self.norm()
        modulus = self.prime**self.precision
        inv = pow(norm.unit, -1, modulus)
        conj = self.conjugate()
        return QuadExtNumber(
            self.prime,
            self.nonresidue,
            -self.valuation,
            (conj.coord_a * inv) % modulus,
            (conj.coord_b * inv) % modulus,
            self.precision,
        )

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

    def __pow__(self, exponent: int) -> "QuadExtNumber":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = QuadExtNumber(self.prime, self.nonresidue, 0, 1, 0, max(self.precision, 1))
        if exponent == 0:
            return result
        if self.is_zero:
            return QuadExtNumber.zero(self.prime, self.nonresidue, self.valuation * exponent)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    # ------------------------------------------------------------------
    # Teichmüller, 각도, log, exp
    # ------------------------------------------------------------------
    def unit_part(self) -> "QuadExtNumber":
        if self.is_zero:
            raise PadicDivisionByZeroError("0 의 단위 부분은 없습니다.")
        return QuadExtNumber(self.prime, self.nonresidue, 0, self.coord_a, self.coord_b, self.precision)

    def teichmuller(self) -> "QuadExtNumber":
        """ω(x): x 와 같은 잉여류의 (p²−1)제곱근."""
        if self.is_zero or self.valuation != 0:
            raise ValueError(f"Teichmüller 대표는 단위원에만 정의됩니다 (v={self.valuation}).")
        modulus = self.prime**self.precision
        mul = _mul_2(self.nonresidue)
        t = (self.coord_a, self.coord_b)
        q = self.prime * self.prime
        for _ in range(self.precision):
            acc, base, e = (1, 0), t, q
            while e:
                if e & 1:
                    acc = mul(acc, base, modulus)
                base = mul(base, base, modulus)
                e >>= 1
            t = acc
        return QuadExtNumber(self.prime, self.nonresidue, 0, t[0], t[1], self.precision)

    def angle(self) -> "QuadExtNumber":
        unit = self.unit_part()
        return unit * unit.teichmuller().inverse()

    def log0(self) -> "QuadExtNumber":
        w = self - 1
        if w.is_zero:
            return QuadExtNumber.zero(self.prime, self.nonresidue, w.valuation)
        if w.valuation < 1:
            raise ValueError("log⁰ 급수는 1-단위원에서만 사용합니다.")
        target = int(min(self.absolute_precision, w.absolute_precision))
        scale = self.prime ** int(w.valuation)
        coords = (w.coord_a * scale, w.coord_b * scale)
        value = log_one_unit(coords, int(w.valuation), target, self.prime, _mul_2(self.nonresidue))
        return QuadExtNumber.from_scaled(self.prime, self.nonresidue, value, 0, target)

    def exp(self) -> "QuadExtNumber":
        if self.is_zero:
            if self.valuation == math.inf:
                raise PrecisionExhaustedError("정확한 0 의 exp 는 유한 정밀도로 표현할 수 없습니다.")
            return QuadExtNumber(self.prime, self.nonresidue, 0, 1, 0, max(int(self.valuation), 1))
        if self.valuation < 1:
            raise ValueError("exp 급수는 v(x) ≥ 1 에서만 사용합니다.")
        target = int(self.absolute_precision)
        scale = self.prime ** int(self.valuation)
        coords = (self.coord_a * scale, self.coord_b * scale)
        value = exp_small(coords, int(self.valuation), target, self.prime, _mul_2(self.nonresidue), (1, 0))
        return QuadExtNumber.from_scaled(self.prime, self.nonresidue, value, 0, target)

    def __repr__(self) -> str:
        if self.is_zero:
            return f"QuadExtNumber(p={self.prime}, 0 + O(p^{self.valuation}))"
        return (
            f"QuadExtNumber(p={self.prime}, s²={self.nonresidue}, "
            f"p^{self.valuation}·({self.coord_a} + {self.coord_b}·s) + O(p^{self.absolute_precision}))"
        )
