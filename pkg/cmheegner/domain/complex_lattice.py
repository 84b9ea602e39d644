"""
주기 격자 Λ = Zω₁ + Zω₂ ⊂ C. 곡선의 실모형에서 산술-기하 평균(AGM)으로 구합니다.

y'² = 4x³ + b₂x² + 2b₄x + b₆ (y' = 2y + a₁x + a₃) 의 근 e_i 에 대해
Δ > 0 이면 세 실근, Δ < 0 이면 실근 하나로 나눠 계산합니다.
"""
from dataclasses import dataclass

import mpmath

from modsym.domain.curve_data import CurveData


class ToleranceError(ArithmeticError):
    pass


def make_context(dps: int):
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


def lattice_periods(curve: CurveData, ctx):
    b2, b4, b6 = (curve.invariants[k] for k in ("b2", "b4", "b6"))
    roots = ctx.polyroots([4, b2, 2 * b4, b6], maxsteps=200, extraprec=2 * ctx.prec)
    if curve.discriminant > 0:
        e3, e2, e1 = sorted(ctx.re(r) for r in roots)
        a = ctx.sqrt(e1 - e3)
        omega1 = ctx.pi / ctx.agm(a, ctx.sqrt(e1 - e2))
        omega2 = ctx.mpc(0, 1) * ctx.pi / ctx.agm(a, ctx.sqrt(e2 - e3))
        return ctx.mpc(omega1), omega2

    real = min(roots, key=lambda r: abs(ctx.im(r)))
    e1 = ctx.re(real)
    beta = ctx.sqrt(3 * e1 * e1 + b2 * e1 / 2 + ctx.mpf(b4) / 2)
    alpha = 3 * e1 + ctx.mpf(b2) / 4
    head = 2 * ctx.sqrt(beta)
    omega1 = 2 * ctx.pi / ctx.agm(head, ctx.sqrt(2 * beta + alpha))
    omega2 = -omega1 / 2 + ctx.mpc(0, 1) * ctx.pi / ctx.agm(head, ctx.sqrt(2 * beta - alpha))
    return ctx.mpc(omega1), omega2


@dataclass(frozen=True)
class ComplexLattice:
    """Im(ω₂/ω₁) > 0. ω₁ 은 실주기입니다."""

    omega1: object
    omega2: object
    ctx: object

    @classmethod
    def from_curve(cls, curve: CurveData, ctx) -> "ComplexLattice":
        omega1, omega2 = lattice_periods(curve, ctx)
        return cls(omega1=omega1, omega2=omega2, ctx=ctx)

    @property
    def tau(self):
        return self.omega2 / self.omega1

    @property
    def scale(self) -> float:
        return float(abs(self.omega1))

    def modular_discriminant(self):
        """Δ(Λ) = (2π/ω₁)¹² · q · Π(1 − qⁿ)²⁴, q = e^(2πiτ)."""
        ctx = self.ctx
        q = ctx.exp(2 * ctx.pi * ctx.mpc(0, 1) * self.tau)
        return (2 * ctx.pi / self.omega1) ** 12 * q * ctx.qp(q, q) ** 24

    def coordinates(self, z) -> tuple:
        """z = xω₁ + yω₂ 의 실수 좌표."""
        ctx = self.ctx
        w = z / self.omega1
        tau = self.tau
        y = ctx.im(w) / ctx.im(tau)
        x = ctx.re(w) - y * ctx.re(tau)
        return x, y

    def distance(self, z) -> float:
        """가장 가까운 격자점까지의 거리."""
        ctx = self.ctx
        x, y = self.coordinates(z)
        m0, n0 = int(ctx.nint(x)), int(ctx.nint(y))
        best = None
        for m in (m0 - 1, m0, m0 + 1):
            for n in (n0 - 1, n0, n0 + 1):
                gap = abs(z - m * self.omega1 - n * self.omega2)
                if best is None or gap < best:
                    best = gap
        return float(best)

    def relative_distance(self, z) -> float:
        return self.distance(z) / self.scale

    def contains(self, z, tolerance: float) -> bool:
        return self.relative_distance(z) < tolerance
