"""
매장된 토러스 ι_τ(K_p^×) 와 레벨 n 라벨.

A(x) = (x − τ_p)/(x − τ̄_p) 는 P¹(Q_p) 를 노름 1 원소들 K_{p,1}^× 로 보내며,
τ_p 에서 거리 n 인 변의 공은 잉여류 α·U_n (U_n = 1 mod p^n) 하나로 갑니다.
라벨은 α 의 좌표 (a, b) mod p^n 입니다.
"""
from dataclasses import dataclass
from fractions import Fraction

from cmheegner.domain.cm_point import CMPoint
from padic.domain.padic_number import PadicNumber, PrecisionExhaustedError
from padic.domain.quad_ext_number import QuadExtNumber
from pball.domain.gamma_element import act_edge
from pball.domain.oriented_edge import OrientedEdge
from pball.domain.projective_point import INFINITY, Point, ProjectiveInfinity, is_infinity

Label = tuple[int, int]


def project_label(label: Label, prime: int, level: int) -> Label:
    """K_{p,1}^×/U_{n+1} → K_{p,1}^×/U_n."""
    modulus = prime**level
    return label[0] % modulus, label[1] % modulus


def coset_count(prime: int, level: int) -> int:
    return (prime + 1) * prime ** (level - 1)


@dataclass(frozen=True)
class TorusEmbedding:
    """ι_τ(x + y·Aτ) = x·I + y·[[−B, −C],[A, 0]]. (τ, 1) 는 고유값 x + y·Aτ 의 고유벡터입니다."""

    point: CMPoint

    @property
    def prime(self) -> int:
        return self.point.prime

    @property
    def nonresidue(self) -> int:
        return self.point.sqrt_d.nonresidue

    def one(self) -> QuadExtNumber:
        return QuadExtNumber.from_coords(self.prime, self.nonresidue, 1, 0, self.point.precision)

    def matrix(self, beta: QuadExtNumber) -> tuple[PadicNumber, PadicNumber, PadicNumber, PadicNumber]:
        a, b, c = self.point.form
        # Aτ = (√D − B)/2, √D = y₀·s
        y = beta.b * 2 / self.point.sqrt_d.b
        x = beta.a + y * Fraction(b, 2)
        return x - y * b, -(y * c), y * a, x

    def rotation(self, alpha: QuadExtNumber) -> QuadExtNumber:
        """β̄/β = α 인 β. 노름 1 인 α 에 대해 β = 1 + ᾱ, α ≡ −1 이면 s·(1 − ᾱ)."""
        candidate = 1 + alpha.conjugate()
        if not candidate.is_zero and candidate.valuation == 0:
            return candidate
        s = QuadExtNumber.generator(self.prime, self.nonresidue, self.point.precision)
        return s * (1 - alpha.conjugate())

    def rotate_edge(self, alpha: QuadExtNumber, edge: OrientedEdge) -> OrientedEdge:
        """A(ι_τ(β)·x) = (β̄/β)·A(x) 이므로 라벨이 α 배가 됩니다."""
        return act_edge(self.matrix(self.rotation(alpha)), edge)

    def coordinate(self, x: Point | QuadExtNumber) -> QuadExtNumber | ProjectiveInfinity:
        if is_infinity(x):
            return self.one()
        numerator = -(self.point.tau - x)
        denominator = -(self.point.tau_conjugate - x)
        if denominator.is_zero:
            return INFINITY
        return numerator / denominator

    def label_of(self, alpha: QuadExtNumber, level: int) -> Label:
        if alpha.valuation != 0 or alpha.absolute_precision < level:
            raise PrecisionExhaustedError(f"{alpha!r} 로 레벨 {level} 라벨을 정할 수 없습니다.")
        modulus = self.prime**level
        return alpha.coord_a % modulus, alpha.coord_b % modulus

    def edge_coordinate(self, edge: OrientedEdge) -> QuadExtNumber:
        """변의 표본점 t_U 의 상 A(t_U)."""
        return self.coordinate(edge.ball.sample_point())

    def edge_label(self, edge: OrientedEdge, level: int) -> Label:
        return self.label_of(self.edge_coordinate(edge), level)

    def label_element(self, label: Label, level: int) -> QuadExtNumber:
        return QuadExtNumber.from_coords(self.prime, self.nonresidue, label[0], label[1], level)

    def multiply(self, first: Label, second: Label, level: int) -> Label:
        return self.label_of(self.label_element(first, level) * self.label_element(second, level), level)

    def has_unit_norm(self, label: Label, level: int) -> bool:
        modulus = self.prime**level
        a, b = label
        return (a * a - self.nonresidue * b * b) % modulus == 1 % modulus
