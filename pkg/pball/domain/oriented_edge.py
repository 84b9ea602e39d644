from dataclasses import dataclass

from pball.domain.ball import Ball
from pball.domain.vertex import Vertex


class EdgeAdjacencyError(ValueError):
    pass


@dataclass(frozen=True)
class OrientedEdge:
    """
    Bruhat–Tits 트리의 유향 변. 두 끝점은 포함 관계의 원판이며 level 이 1 차이납니다.
    U_e 는 target 이 source 안쪽이면 target 원판, 아니면 source 원판의 여집합입니다.
    """

    source: Vertex
    target: Vertex

    def __post_init__(self):
        if abs(self.source.level - self.target.level) != 1:
            raise EdgeAdjacencyError(f"인접하지 않은 꼭짓점입니다: {self.source}, {self.target}")
        outer, inner = (self.source, self.target) if self.source.level < self.target.level else (self.target, self.source)
        if not outer.contains(inner):
            raise EdgeAdjacencyError(f"인접하지 않은 꼭짓점입니다: {self.source}, {self.target}")

    @property
    def prime(self) -> int:
        return self.source.prime

    @classmethod
    def standard(cls, prime: int) -> "OrientedEdge":
        """e_∞: U_{e_∞} = P¹(Q_p) − Z_p."""
        return cls(Vertex.origin(prime), Vertex.make(prime, 0, -1))

    @classmethod
    def from_ball(cls, ball: Ball) -> "OrientedEdge":
        disc = ball.disc()
        if ball.is_affine:
            return cls(disc.parent(), disc)
        return cls(disc, disc.parent())

    @property
    def ball(self) -> Ball:
        if self.target.level > self.source.level:
            return Ball(self.prime, "affine", self.target.center, self.target.level)
        return Ball(self.prime, "coaffine", self.source.center, self.source.level)

    def reverse(self) -> "OrientedEdge":
        return OrientedEdge(self.target, self.source)
