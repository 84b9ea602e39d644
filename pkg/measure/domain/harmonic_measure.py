import logging
import threading

from modsym.domain.eigen_symbol import EigenSymbol
from pball.domain.ball import Ball
from pball.domain.gamma_element import GammaElement
from pball.domain.oriented_edge import OrientedEdge
from pball.domain.projective_point import Cusp, as_cusp
from pball.domain.tree import edges_at, reduce_edge
from pball.domain.vertex import Vertex

logger = logging.getLogger(__name__)

Pair = tuple[int, int]


class HarmonicMeasure:
    """
    Λ_f 값 측도 μ_f[r, s]. μ(U_e) = orientation · m^±[γr, γs], 여기서 γe = e_∞ (또는 ē_∞).

    메모는 공의 정규형을 키로 하며 키마다 한 번만 씁니다.
    """

    def __init__(self, symbol: EigenSymbol, r: Cusp, s: Cusp):
        self.symbol = symbol
        self.r = as_cusp(r)
        self.s = as_cusp(s)
        self._memo: dict[Ball, Pair] = {}
        self._lock = threading.Lock()

    @property
    def prime(self) -> int:
        return self.symbol.prime

    def translate(self, gamma: GammaElement) -> "HarmonicMeasure":
        """μ_f[γr, γs]."""
        return HarmonicMeasure(self.symbol, gamma.act_point(self.r), gamma.act_point(self.s))

    def _compute(self, ball: Ball) -> Pair:
        gamma, orientation = reduce_edge(OrientedEdge.from_ball(ball))
        plus, minus = self.symbol.evaluate(gamma.act_point(self.r), gamma.act_point(self.s))
        return orientation * plus, orientation * minus

    def measure_ball(self, ball: Ball) -> Pair:
        cached = self._memo.get(ball)
        if cached is not None:
            return cached
        value = self._compute(ball)
        with self._lock:
            return self._memo.setdefault(ball, value)

    def measure_edge(self, edge: OrientedEdge) -> Pair:
        return self.measure_ball(edge.ball)

    def check_harmonic(self, vertex: Vertex) -> bool:
        values = [self.measure_edge(edge) for edge in edges_at(vertex)]
        total = (sum(v[0] for v in values), sum(v[1] for v in values))
        if total != (0, 0):
            logger.warning(f"[HarmonicMeasure] {vertex} 에서 조화성 실패: 합 {total}")
        return total == (0, 0)

    def check_total_zero(self, edge: OrientedEdge) -> bool:
        """μ(U_e) + μ(U_ē) = 0."""
        a = self.measure_edge(edge)
        b = self.measure_edge(edge.reverse())
        return a[0] + b[0] == 0 and a[1] + b[1] == 0
