import logging
from dataclasses import dataclass

from modsym.domain.curve_data import CurveData
from modsym.utils.curve_arithmetic import c_invariants
from padic.domain.padic_number import PadicNumber
from padic.domain.quad_ext_number import QuadExtNumber
from padic.utils.quadratic import sqrt_in_extension, sqrt_quadratic
from shpoint.utils.tate_curve import power_sums, reduce_to_annulus, tate_coefficients, tate_xy

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TateIsomorphism:
    """
    E_q → E, (x', y') ↦ (u²x' + r, u³y' + s·u²x' + t). u² = c6·c4'/(c4·c6') 가
    Q_p 의 비제곱이면 u 는 K_p 에 있고 두 모형은 비분기 이차 꼬임 관계입니다.
    """

    q: PadicNumber
    tate_model: tuple
    scale_squared: PadicNumber
    scale: QuadExtNumber
    r: QuadExtNumber
    s: QuadExtNumber
    t: QuadExtNumber
    precision: int

    @classmethod
    def build(cls, curve: CurveData, q: PadicNumber, nonresidue: int, precision: int) -> "TateIsomorphism":
        a1, a2, a3, _, _ = curve.coefficients
        tate_model = tate_coefficients(q, precision)
        c4_tate, c6_tate, _ = c_invariants(tate_model)
        scale_squared = (curve.c6 * c4_tate) / (curve.c4 * c6_tate)
        scale = sqrt_in_extension(scale_squared.with_precision(precision), nonresidue)
        s = (scale - a1) / 2
        r = (s * s + s * a1 - a2) / 3
        # a1 = 0 이어도 상수가 정밀도를 잃지 않도록 a3 을 먼저 올립니다
        t = -(QuadExtNumber.from_coords(curve.prime, nonresidue, a3, 0, precision) + r * a1) / 2
        logger.debug(f"[TateIsomorphism] u² = {scale_squared!r}")
        return cls(q, tate_model, scale_squared, scale, r, s, t, precision)

    @property
    def split_over_qp(self) -> bool:
        return self.scale.is_in_qp()

    def to_curve(self, point):
        if point is None:
            return None
        x, y = point
        u2 = self.scale * self.scale
        return u2 * x + self.r, u2 * self.scale * y + self.s * u2 * x + self.t

    def from_curve(self, point):
        if point is None:
            return None
        x, y = point
        u2 = self.scale * self.scale
        x_tate = (x - self.r) / u2
        return x_tate, (y - self.s * u2 * x_tate - self.t) / (u2 * self.scale)

    def parametrize(self, u: QuadExtNumber):
        """u ∈ K_p^×/q^Z 의 E 위의 점 (항등원이면 None)."""
        return self.to_curve(tate_xy(u, self.q, self.precision))

    def invert(self, point, iterations: int | None = None) -> QuadExtNumber:
        """
        E 의 점에서 u 를 되찾습니다. n ≠ 0 항 R(u) 를 고정한 채 u/(1−u)² = X − R 을 풀고 반복하며,
        두 근 u, 1/u 는 Y 좌표로 가릅니다.
        """
        x_tate, y_tate = self.from_curve(point)
        q = self.q
        correction = -2 * power_sums(q, self.precision)[1]
        u = None
        for _ in range(iterations or self.precision):
            c = x_tate - correction
            root = sqrt_quadratic(4 * c + 1)
            candidate = (2 * c + 1 + root) / (2 * c)
            image = tate_xy(candidate, q, self.precision)
            same = (image[1] - y_tate).valuation
            flipped = (-image[1] - image[0] - y_tate).valuation
            candidate = candidate if same >= flipped else candidate.inverse()
            candidate = reduce_to_annulus(candidate, q)
            if u is not None and (candidate - u).is_zero:
                break
            u = candidate
            head = u / (1 - u) ** 2
            correction = tate_xy(u, q, self.precision)[0] - head
        return u
