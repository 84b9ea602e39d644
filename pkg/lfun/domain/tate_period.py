from dataclasses import dataclass
from fractions import Fraction

from padic.domain.log_branch import LogBranch
from padic.domain.padic_number import PadicNumber


def evaluate_j(q: PadicNumber, coefficients: list[int]) -> PadicNumber:
    """j(q) = 1/q + 744 + Σ c_n qⁿ. coefficients 는 [744, c_1, …]."""
    total = q.inverse() + coefficients[0]
    power = q
    for c in coefficients[1:]:
        if c:
            total = total + c * power
        power = power * q
    return total


@dataclass(frozen=True)
class TatePeriod:
    q: PadicNumber
    j_invariant: Fraction

    @property
    def ord(self) -> int:
        return int(self.q.valuation)

    @property
    def branch(self) -> LogBranch:
        """log_q(q) = 0 인 분지. λ_q = −log⁰⟨q⟩ / ord_p(q)."""
        return LogBranch.from_period(self.q)

    @property
    def l_invariant(self) -> PadicNumber:
        """𝓛_p(E) = log⁰⟨q⟩ / ord_p(q) = −λ_q."""
        return self.q.angle().log0() / self.ord
