from dataclasses import dataclass, field
from fractions import Fraction

from sympy import isprime, legendre_symbol

from modsym.utils.curve_arithmetic import Coefficients, b_invariants, c_invariants, torsion_order
from padic.utils.valuation import strip_p


class CurveValidationError(ValueError):
    pass


@dataclass(frozen=True)
class CurveData:
    """
    소수 도체 p 의 타원곡선 y² + a1xy + a3y = x³ + a2x² + a4x + a6 (최소 모형).

    a_p = +1 은 분할 곱셈 환원, −1 은 비분할 곱셈 환원입니다.
    """

    a1: int
    a2: int
    a3: int
    a4: int
    a6: int
    prime: int
    ap: int
    c4: int
    c6: int
    discriminant: int
    torsion: int
    invariants: dict[str, int] = field(default_factory=dict, compare=False)

    @classmethod
    def from_coefficients(cls, coeffs, prime: int) -> "CurveData":
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != 5:
            raise CurveValidationError(f"계수는 a1,a2,a3,a4,a6 다섯 개여야 합니다: {coeffs}")
        if not isprime(prime):
            raise CurveValidationError(f"도체 {prime} 은(는) 소수가 아닙니다.")
        c4, c6, discriminant = c_invariants(coeffs)
        if discriminant == 0:
            raise CurveValidationError(f"판별식이 0 인 특이 곡선입니다: {coeffs}")
        v, rest = strip_p(discriminant, prime) if discriminant % prime == 0 else (0, discriminant)
        if v == 0:
            raise CurveValidationError(f"{prime} 에서 좋은 환원입니다 (Δ={discriminant}); 도체가 {prime} 이 아닙니다.")
        if c4 % prime == 0:
            raise CurveValidationError(
                f"{prime} 에서 곱셈 환원이 아니거나 최소 모형이 아닙니다 (c4={c4}, Δ={discriminant})."
            )
        if abs(rest) != 1:
            raise CurveValidationError(
                f"Δ={discriminant} 에 {prime} 이외의 소인수가 있습니다; 도체 {prime} 의 최소 모형을 넣어 주세요."
            )
        # 분할 여부: −c6 가 mod p 제곱수인지
        ap = int(legendre_symbol((-c6) % prime, prime))
        b2, b4, b6, b8 = b_invariants(coeffs)
        return cls(
            *coeffs,
            prime=prime,
            ap=ap,
            c4=c4,
            c6=c6,
            discriminant=discriminant,
            torsion=torsion_order(coeffs),
            invariants={"b2": b2, "b4": b4, "b6": b6, "b8": b8},
        )

    @property
    def coefficients(self) -> Coefficients:
        return self.a1, self.a2, self.a3, self.a4, self.a6

    @property
    def j_invariant(self) -> Fraction:
        return Fraction(self.c4**3, self.discriminant)

    @property
    def is_split(self) -> bool:
        return self.ap == 1

    @property
    def t_bound(self) -> int:
        """격자 확대 분모 상한 t_E · 2."""
        return 2 * self.torsion

    def label(self) -> str:
        return ",".join(str(c) for c in self.coefficients)
