"""
Bruhat–Tits 트리 위의 조합적 연산: 꼭짓점의 변, 공 세분, 깊이 n 덮개,
표준 변으로의 환원, 환원 사상, 공 소속 판정.
"""
from fractions import Fraction

from padic.domain.padic_number import PadicNumber, PrecisionExhaustedError
from padic.domain.quad_ext_number import QuadExtNumber
from pball.domain.ball import Ball
from pball.domain.gamma_element import GammaElement
from pball.domain.oriented_edge import OrientedEdge
from pball.domain.projective_point import Point, is_infinity
from pball.domain.vertex import Vertex, canonical_center, rational_valuation


class PointInQpError(ValueError):
    pass


def edges_at(vertex: Vertex) -> list[OrientedEdge]:
    """source 가 vertex 인 p+1 개의 변. 자식 방향 p 개, 부모 방향 1 개 순서."""
    edges = [OrientedEdge(vertex, child) for child in vertex.children()]
    edges.append(OrientedEdge(vertex, vertex.parent()))
    return edges


def refine_edge(edge: OrientedEdge) -> list[OrientedEdge]:
    back = edge.reverse()
    return [e for e in edges_at(edge.target) if e != back]


def refine(ball: Ball) -> list[Ball]:
    """U_e 를 한 단계 깊은 p 개의 공으로 나눕니다 (coaffine 도 같은 규칙)."""
    return [e.ball for e in refine_edge(OrientedEdge.from_ball(ball))]


def covering(prime: int, depth: int, center: Vertex | None = None) -> list[OrientedEdge]:
    """center 에서 거리 depth 인 바깥쪽 변들. 공들은 P¹(Q_p) 를 분할하며 (p+1)p^(depth−1) 개입니다."""
    if depth < 1:
        raise ValueError("덮개 깊이는 1 이상이어야 합니다.")
    edges = edges_at(center or Vertex.origin(prime))
    for _ in range(depth - 1):
        edges = [child for edge in edges for child in refine_edge(edge)]
    return edges


def distance(u: Vertex, v: Vertex) -> int:
    """두 원판을 함께 담는 가장 작은 원판을 거쳐 가는 경로 길이."""
    meet = min(u.level, v.level, rational_valuation(u.center - v.center, u.prime))
    return int(u.level + v.level - 2 * meet)


def reduce_edge(edge: OrientedEdge) -> tuple[GammaElement, int]:
    """
    γ·e = e_∞ (orientation +1) 또는 γ·e = ē_∞ (orientation −1) 인 γ ∈ Γ.

    source 가 홀수 꼭짓점이면 뒤집어 짝수 쪽에서 시작합니다. 평행이동과
    diag(p^(−m/2), p^(m/2)) 로 source 를 v∘ 에 보낸 뒤, target 이 B(j, 1) 이면
    [[0,1],[−1,j]] 로 j + pZ_p 를 P¹ − Z_p 로 보냅니다.
    """
    prime = edge.prime
    orientation = 1
    if edge.source.parity:
        edge = edge.reverse()
        orientation = -1
    source = edge.source
    gamma = GammaElement.diagonal(prime, -source.level // 2) @ GammaElement.translation(prime, -source.center)
    moved = gamma.act_edge(edge)
    if moved.target.level == 1:
        j = moved.target.center
        gamma = GammaElement(prime, 0, 1, -1, j) @ gamma
    return gamma, orientation


def reduction_point(z: QuadExtNumber) -> Vertex:
    """
    red(z): z = x + y·s 에 대해 원판 B(x, v(y)). 비분기 K_p 에서는 항상 꼭짓점입니다.
    """
    y = z.b
    if y.is_zero:
        raise PointInQpError(f"점 {z!r} 이(가) 작업 정밀도에서 Q_p 에 놓여 있습니다.")
    level = int(y.valuation)
    return Vertex(z.prime, canonical_center(z.a, level, z.prime), level)


def ball_membership(x: Point, ball: Ball) -> bool:
    """x ∈ U. 정밀도로 판정할 수 없으면 PrecisionExhaustedError."""
    if is_infinity(x):
        return not ball.is_affine
    if isinstance(x, PadicNumber):
        diff = x - ball.center
        if diff.is_zero:
            if diff.valuation < ball.level:
                raise PrecisionExhaustedError(f"{x!r} 의 소속을 판정하기에 정밀도가 부족합니다 (level {ball.level}).")
            inside = True
        else:
            inside = diff.valuation >= ball.level
    else:
        inside = Ball.affine(ball.prime, Fraction(x), ball.level).center == ball.center
    return inside if ball.is_affine else not inside
