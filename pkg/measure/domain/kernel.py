from dataclasses import dataclass
from fractions import Fraction

from padic.domain.padic_number import PadicNumber
from padic.domain.quad_ext_number import QuadExtNumber
from pball.domain.ball import Ball
from pball.domain.projective_point import INFINITY, is_infinity
from pball.domain.tree import ball_membership

LOG_CROSS_RATIO = "log-cross-ratio"
LOG_LINEAR = "log-linear"
LOG_LINEAR_INVERTED = "log-linear-inverted"
LOG_ANGLE = "log-angle"
POWER_ANGLE = "power-angle"
ORD_CROSS_RATIO = "ord-cross-ratio"
COSET_INDICATOR = "coset-indicator"
CONSTANT = "constant"

# 정수 값을 내는 국소 상수 핵
EXACT_KINDS = {ORD_CROSS_RATIO, COSET_INDICATOR, CONSTANT}


class KernelSingularityError(ValueError):
    pass


def whole_line(prime: int) -> tuple[Ball, ...]:
    """P¹(Q_p) = Z_p ⊔ (P¹ − Z_p)."""
    return Ball.integers(prime), Ball.integers(prime).complement()


def units(prime: int) -> tuple[Ball, ...]:
    """Z_p^× = ⊔_{j=1}^{p−1} (j + pZ_p)."""
    return tuple(Ball.affine(prime, j, 1) for j in range(1, prime))


def _require_outside_qp(z: QuadExtNumber) -> None:
    if z.b.is_zero:
        raise KernelSingularityError(f"점 {z!r} 이(가) 작업 정밀도에서 P¹(Q_p) 위에 있어 핵이 특이합니다.")


@dataclass(frozen=True)
class Kernel:
    """
    Riemann 합에 쓰는 국소 해석적 핵. domain 은 적분 구역(공들의 분리합)이며,
    덮개의 공이 구역과 걸치면 적분기가 거부합니다.
    """

    kind: str
    prime: int
    points: tuple[QuadExtNumber, ...] = ()
    exponent: int = 0
    precision: int = 0
    ball: Ball | None = None
    domain: tuple[Ball, ...] = ()

    # ------------------------------------------------------------------
    # 생성
    # ------------------------------------------------------------------
    @classmethod
    def log_cross_ratio(cls, z1: QuadExtNumber, z2: QuadExtNumber) -> "Kernel":
        """t ↦ log⁰⟨(z₂ − t)/(z₁ − t)⟩. ∞ 에서 0."""
        for z in (z1, z2):
            _require_outside_qp(z)
        return cls(LOG_CROSS_RATIO, z1.prime, (z1, z2), domain=whole_line(z1.prime))

    @classmethod
    def log_linear(cls, z: QuadExtNumber) -> "Kernel":
        """t ↦ log⁰⟨z − t⟩ on Z_p."""
        _require_outside_qp(z)
        return cls(LOG_LINEAR, z.prime, (z,), domain=(Ball.integers(z.prime),))

    @classmethod
    def log_linear_inverted(cls, z: QuadExtNumber) -> "Kernel":
        """t ↦ log⁰⟨1 − z/t⟩ on P¹ − Z_p. ∞ 에서 0."""
        _require_outside_qp(z)
        return cls(LOG_LINEAR_INVERTED, z.prime, (z,), domain=(Ball.integers(z.prime).complement(),))

    @classmethod
    def ord_cross_ratio(cls, z1: QuadExtNumber, z2: QuadExtNumber) -> "Kernel":
        for z in (z1, z2):
            _require_outside_qp(z)
        return cls(ORD_CROSS_RATIO, z1.prime, (z1, z2), domain=whole_line(z1.prime))

    @classmethod
    def log_angle(cls, prime: int, precision: int) -> "Kernel":
        """t ↦ log⁰⟨t⟩ on Z_p^×."""
        return cls(LOG_ANGLE, prime, precision=precision, domain=units(prime))

    @classmethod
    def power_angle(cls, prime: int, exponent: int, precision: int) -> "Kernel":
        """t ↦ ⟨t⟩^k on Z_p^×."""
        return cls(POWER_ANGLE, prime, exponent=exponent, precision=precision, domain=units(prime))

    @classmethod
    def coset_indicator(cls, ball: Ball) -> "Kernel":
        return cls(COSET_INDICATOR, ball.prime, ball=ball, domain=whole_line(ball.prime))

    @classmethod
    def constant(cls, prime: int, value: int = 1) -> "Kernel":
        return cls(CONSTANT, prime, exponent=value, domain=whole_line(prime))

    # ------------------------------------------------------------------
    # 판정 / 값
    # ------------------------------------------------------------------
    @property
    def is_exact(self) -> bool:
        return self.kind in EXACT_KINDS

    def locate(self, ball: Ball) -> bool:
        """ball 이 구역 안이면 True, 바깥이면 False. 걸치면 KernelSingularityError."""
        if any(piece.contains(ball) for piece in self.domain):
            return True
        if all(piece.is_disjoint(ball) for piece in self.domain):
            return False
        raise KernelSingularityError(f"공 {ball} 이(가) 핵 {self.kind} 의 적분 구역 경계에 걸칩니다; 더 깊은 덮개가 필요합니다.")

    def factor(self, t):
        """곱셈 핵의 인자. log 핵 값은 log⁰⟨factor(t)⟩ 이고 ∞ 에서 1 인 핵은 None 을 돌려줍니다."""
        kind = self.kind
        if kind == LOG_LINEAR:
            if is_infinity(t):
                raise KernelSingularityError("log(z − t) 는 ∞ 에서 특이합니다.")
            return self.points[0] - t
        if kind == LOG_LINEAR_INVERTED:
            if is_infinity(t):
                return None
            if t == 0:
                raise KernelSingularityError("log(1 − z/t) 는 0 에서 특이합니다.")
            return 1 - self.points[0] / t
        if kind in (LOG_CROSS_RATIO, ORD_CROSS_RATIO):
            if is_infinity(t):
                return None
            z1, z2 = self.points
            return (z2 - t) / (z1 - t)
        raise KernelSingularityError(f"핵 {kind} 에는 곱셈 인자가 없습니다.")

    def value(self, t):
        """표본점 t (Fraction 또는 ∞) 에서의 핵 값."""
        kind = self.kind
        if kind == CONSTANT:
            return self.exponent
        if kind == COSET_INDICATOR:
            return 1 if ball_membership(INFINITY if is_infinity(t) else Fraction(t), self.ball) else 0
        if kind in (LOG_ANGLE, POWER_ANGLE):
            if is_infinity(t):
                raise KernelSingularityError(f"핵 {kind} 은(는) ∞ 에서 정의되지 않습니다.")
            x = PadicNumber.from_rational(self.prime, t, self.precision)
            if x.is_zero or x.valuation != 0:
                raise KernelSingularityError(f"핵 {kind} 은(는) 단위원에서만 정의됩니다 (t={t}).")
            angle = x.angle()
            return angle.log0() if kind == LOG_ANGLE else angle**self.exponent
        factor = self.factor(t)
        if factor is None:
            return 0
        if kind == ORD_CROSS_RATIO:
            return int(factor.valuation)
        return factor.angle().log0()
