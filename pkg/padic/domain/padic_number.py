import math
from dataclasses import dataclass
from fractions import Fraction

from sympy.ntheory import digits as sympy_digits

from padic.utils.series import exp_small, log_one_unit
from padic.utils.valuation import strip_p, vp_rational


class PrimeMismatchError(ValueError):
    pass


class PadicDivisionByZeroError(ZeroDivisionError):
    pass


class PrecisionExhaustedError(ArithmeticError):
    pass


def _mul_1(x: tuple[int, ...], y: tuple[int, ...], modulus: int) -> tuple[int, ...]:
    return ((x[0] * y[0]) % modulus,)


@dataclass(frozen=True)
class PadicNumber:
    """
    Q_p 의 원소 x = p^v · u 를 상대 정밀도 N 으로 보관합니다 (x 는 mod p^(v+N) 로 알려짐).

    0 은 unit = 0 으로 표현하고 valuation 에 알려진 절대 정밀도 하한
    (정확한 0 이면 math.inf)을 둡니다.
    """

    prime: int
    valuation: float
    unit: int
    precision: int

    # ------------------------------------------------------------------
    # 생성
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, prime: int, absolute_precision: float = math.inf) -> "PadicNumber":
        return cls(prime=prime, valuation=absolute_precision, unit=0, precision=0)

    @classmethod
    def from_scaled(cls, prime: int, value: int, shift: int, absolute_precision: float) -> "PadicNumber":
        """p^shift · value 를 절대 정밀도 absolute_precision 으로 정규화합니다."""
        if absolute_precision == math.inf:
            raise PrecisionExhaustedError("정수 표현에는 유한한 정밀도가 필요합니다.")
        width = int(absolute_precision) - shift
        if width <= 0:
            return cls.zero(prime, absolute_precision)
        value %= prime**width
        if value == 0:
            return cls.zero(prime, absolute_precision)
        v, unit = strip_p(value, prime)
        valuation = shift + v
        precision = int(absolute_precision) - valuation
        return cls(prime=prime, valuation=valuation, unit=unit % prime**precision, precision=precision)

    @classmethod
    def from_rational(cls, prime: int, value: Fraction | int, precision: int) -> "PadicNumber":
        value = Fraction(value)
        if value == 0:
            return cls.zero(prime)
        v = vp_rational(value, prime)
        num = value.numerator // prime ** max(v, 0)
        den = value.denominator // prime ** max(-v, 0)
        modulus = prime**precision
        unit = (num * pow(den, -1, modulus)) % modulus
        return cls(prime=prime, valuation=v, unit=unit, precision=precision)

    @classmethod
    def from_int(cls, prime: int, value: int, precision: int) -> "PadicNumber":
        return cls.from_rational(prime, value, precision)

    # ------------------------------------------------------------------
    # 조회
    # ------------------------------------------------------------------
    @property
    def is_zero(self) -> bool:
        return self.unit == 0

    @property
    def absolute_precision(self) -> float:
        if self.is_zero:
            return self.valuation
        return self.valuation + self.precision

    def to_fraction(self) -> Fraction:
        """대표 유리수 p^v·u 를 돌려줍니다."""
        if self.is_zero:
            return Fraction(0)
        return Fraction(self.unit) * Fraction(self.prime) ** int(self.valuation)

    def digits(self) -> str:
        """단위 부분의 p-진 자릿수 문자열 (최상위 자리부터, 길이 N)."""
        if self.is_zero:
            return "0"
        raw = sympy_digits(self.unit, self.prime)[1:]
        raw = [0] * (self.precision - len(raw)) + raw
        return ".".join(str(d) for d in raw) if self.prime > 10 else "".join(str(d) for d in raw)

    def residue(self) -> int:
        if self.valuation != 0:
            raise ValueError("단위원이 아닌 값의 잉여류는 정의되지 않습니다.")
        return self.unit % self.prime

    def with_precision(self, precision: int) -> "PadicNumber":
        if self.is_zero:
            return self
        precision = min(precision, self.precision)
        return PadicNumber(self.prime, self.valuation, self.unit % self.prime**precision, precision)

    # ------------------------------------------------------------------
    # 산술
    # ------------------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, PadicNumber):
            if other.prime != self.prime:
                raise PrimeMismatchError(f"소수가 다릅니다: {self.prime} != {other.prime}")
            return other
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return PadicNumber.zero(self.prime)
            anchor = self.valuation if self.valuation != math.inf else 0
            rel = max(self.precision, 1) + max(0, int(anchor) - vp_rational(other, self.prime))
            return PadicNumber.from_rational(self.prime, other, rel)
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
            return PadicNumber.zero(self.prime, absolute)
        shift = int(min(min(x.valuation for x in live), absolute))
        total = sum(x.unit * self.prime ** int(x.valuation - shift) for x in live)
        return PadicNumber.from_scaled(self.prime, total, shift, absolute)

    __radd__ = __add__

    def __neg__(self) -> "PadicNumber":
        if self.is_zero:
            return self
        return PadicNumber(self.prime, self.valuation, (-self.unit) % self.prime**self.precision, self.precision)

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
            return PadicNumber.zero(self.prime)
        if self.is_zero or other.is_zero:
            return PadicNumber.zero(self.prime, self.valuation + other.valuation)
        precision = min(self.precision, other.precision)
        modulus = self.prime**precision
        return PadicNumber(self.prime, self.valuation + other.valuation, (self.unit * other.unit) % modulus, precision)

    __rmul__ = __mul__

    def inverse(self) -> "PadicNumber":
        if self.is_zero:
            raise PadicDivisionByZeroError("0 의 역원은 없습니다.")
        modulus = self.prime**self.precision
        return PadicNumber(self.prime, -self.valuation, pow(self.unit, -1, modulus), self.precision)

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

    def __pow__(self, exponent: int) -> "PadicNumber":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        if exponent == 0:
            return PadicNumber.from_int(self.prime, 1, max(self.precision, 1))
        if self.is_zero:
            return PadicNumber.zero(self.prime, self.valuation * exponent)
        modulus = self.prime**self.precision
        return PadicNumber(self.prime, self.valuation * exponent, pow(self.unit, exponent, modulus), self.precision)

    # ------------------------------------------------------------------
    # Teichmüller, 각도, log
    # ------------------------------------------------------------------
    def teichmuller(self) -> "PadicNumber":
        """ω(x): x ≡ ω mod p 인 (p−1)제곱근. x^(p^k) 의 극한."""
        if self.is_zero or self.valuation != 0:
            raise ValueError(f"Teichmüller 대표는 단위원에만 정의됩니다 (v={self.valuation}).")
        modulus = self.prime**self.precision
        t = self.unit
        for _ in range(self.precision):
            t = pow(t, self.prime, modulus)
        return PadicNumber(self.prime, 0, t, self.precision)

    def unit_part(self) -> "PadicNumber":
        if self.is_zero:
            raise PadicDivisionByZeroError("0 의 단위 부분은 없습니다.")
        return PadicNumber(self.prime, 0, self.unit, self.precision)

    def angle(self) -> "PadicNumber":
        """⟨x⟩ = x·p^(−v)/ω(x·p^(−v)) ∈ 1 + pZ_p."""
        unit = self.unit_part()
        return unit * unit.teichmuller().inverse()

    def log0(self) -> "PadicNumber":
        """1-단위원의 log (급수). ⟨·⟩ 를 거치지 않습니다."""
        w = self - 1
        if w.is_zero:
            return PadicNumber.zero(self.prime, w.valuation)
        if w.valuation < 1:
            raise ValueError("log⁰ 급수는 1-단위원에서만 사용합니다.")
        target = int(min(self.absolute_precision, w.absolute_precision))
        scaled = (w.unit * self.prime ** int(w.valuation),)
        (value,) = log_one_unit(scaled, int(w.valuation), target, self.prime, _mul_1)
        return PadicNumber.from_scaled(self.prime, value, 0, target)

    def exp(self) -> "PadicNumber":
        if self.is_zero:
            if self.valuation == math.inf:
                raise PrecisionExhaustedError("정확한 0 의 exp 는 유한 정밀도로 표현할 수 없습니다.")
            return PadicNumber(self.prime, 0, 1, max(int(self.valuation), 1))
        if self.valuation < 1:
            raise ValueError("exp 급수는 v(x) ≥ 1 에서만 사용합니다.")
        target = int(self.absolute_precision)
        scaled = (self.unit * self.prime ** int(self.valuation),)
        (value,) = exp_small(scaled, int(self.valuation), target, self.prime, _mul_1, (1,))
        return PadicNumber.from_scaled(self.prime, value, 0, target)

    def __repr__(self) -> str:
        if self.is_zero:
            return f"PadicNumber(p={self.prime}, 0 + O(p^{self.valuation}))"
        return f"PadicNumber(p={self.prime}, p^{self.valuation}·{self.unit} + O(p^{self.absolute_precision}))"
