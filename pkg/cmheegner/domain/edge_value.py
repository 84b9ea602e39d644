from dataclasses import dataclass

from pball.domain.gamma_element import GammaElement
from pball.domain.oriented_edge import OrientedEdge


@dataclass(frozen=True)
class EdgeValue:
    """c_f[τ_∞](e) = t_E·orientation·F(γτ_∞), γe = e_∞. Λ_f 환원은 하지 않습니다."""

    edge: OrientedEdge
    value: object
    gamma: GammaElement
    orientation: int
    terms: int
    error_bound: float
    flipped: bool
