from dataclasses import dataclass
from fractions import Fraction

from measure.domain.double_integral import DoubleIntegral
from padic.domain.quad_ext_number import QuadExtNumber
from pball.domain.projective_point import Cusp
from shpoint.domain.rm_point import AutomorphGamma, RMPoint


@dataclass(frozen=True)
class StarkHeegnerPoint:
    """
    2·P_τ 의 Λ_f 좌표별 세 부분. 정규화 상수의 ½ 을 없애려고 두 배 값을 보관하며,
    q^Z ⊗ Λ_f 와 꼬임 배수만큼의 모호성이 남습니다.
    """

    point: RMPoint
    gamma: AutomorphGamma
    r: Cusp
    depth: int
    doubled: DoubleIntegral
    pieces: int

    @property
    def log_part(self) -> tuple[QuadExtNumber, QuadExtNumber]:
        return self.doubled.log_part

    @property
    def ord_part(self) -> tuple[Fraction, Fraction]:
        return self.doubled.ord_part

    def reduced_ord(self, q_valuation: int) -> tuple[int, int]:
        """ord 부분을 v(q)·Z 로 나눈 대표 (0 ≤ · < v(q))."""
        return tuple(int(v) % q_valuation for v in self.ord_part)

    def multiplicative(self, index: int, precision: int) -> QuadExtNumber:
        """u^± = ζ · p^ord · exp(log⁰)."""
        return self.doubled.multiplicative(index, precision)
