from dataclasses import dataclass
from fractions import Fraction

from pball.domain.projective_point import INFINITY, ProjectiveInfinity
from pball.domain.vertex import Vertex, canonical_center, rational_valuation

AFFINE = "affine"
COAFFINE = "coaffine"


@dataclass(frozen=True)
class Ball:
    """
    P¹(Q_p) 의 콤팩트 열린 공.

    affine 은 {x : v(x − a) ≥ m}, coaffine 은 같은 원판의 여집합(∞ 포함)입니다.
    center 는 [0, p^m) 의 정규 대표원이라 필드가 같으면 같은 공입니다.
    """

    prime: int
    kind: str
    center: Fraction
    level: int

    @classmethod
    def affine(cls, prime: int, center, level: int) -> "Ball":
        return cls(prime, AFFINE, canonical_center(center, level, prime), level)

    @classmethod
    def coaffine(cls, prime: int, center, level: int) -> "Ball":
        return cls(prime, COAFFINE, canonical_center(center, level, prime), level)

    @classmethod
    def integers(cls, prime: int) -> "Ball":
        return cls(prime, AFFINE, Fraction(0), 0)

    @property
    def is_affine(self) -> bool:
        return self.kind == AFFINE

    def disc(self) -> Vertex:
        return Vertex(self.prime, self.center, self.level)

    def complement(self) -> "Ball":
        return Ball(self.prime, COAFFINE if self.is_affine else AFFINE, self.center, self.level)

    def sample_point(self) -> Fraction | ProjectiveInfinity:
        """표본점 t_U: affine 은 중심, coaffine 은 ∞."""
        return self.center if self.is_affine else INFINITY

    def _disc_contains(self, center: Fraction, level: int) -> bool:
        return level >= self.level and rational_valuation(center - self.center, self.prime) >= self.level

    def contains(self, other: "Ball") -> bool:
        if self.is_affine:
            return other.is_affine and self._disc_contains(other.center, other.level)
        inner = self.complement()
        if other.is_affine:
            return inner.is_disjoint(other)
        return other.complement()._disc_contains(inner.center, inner.level)

    def is_disjoint(self, other: "Ball") -> bool:
        if self.is_affine and other.is_affine:
            return rational_valuation(self.center - other.center, self.prime) < min(self.level, other.level)
        if not self.is_affine and not other.is_affine:
            return False
        affine, coaffine = (self, other) if self.is_affine else (other, self)
        return coaffine.complement().contains(affine)
