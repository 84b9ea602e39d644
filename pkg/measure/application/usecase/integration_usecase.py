import logging
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from fractions import Fraction
from typing import Callable, Sequence

from measure.domain.double_integral import DoubleIntegral, OrdIntegral, RiemannSum
from measure.domain.harmonic_measure import HarmonicMeasure
from measure.domain.kernel import Kernel
from padic.domain.log_branch import LogBranch
from padic.domain.padic_number import PrecisionExhaustedError
from padic.domain.quad_ext_number import QuadExtNumber
from pball.domain.ball import Ball
from pball.domain.tree import covering, reduction_point
from pball.domain.vertex import Vertex

logger = logging.getLogger(__name__)

# ord 적분이 안정화되지 않을 때 더 내려가 볼 최대 단계
MAX_EXTRA_DEPTH = 6


def _chunks(items: Sequence, count: int) -> list[Sequence]:
    count = max(1, min(count, len(items) or 1))
    size, extra = divmod(len(items), count)
    out, start = [], 0
    for k in range(count):
        stop = start + size + (1 if k < extra else 0)
        out.append(items[start:stop])
        start = stop
    return out


class IntegrationUseCase:
    def __init__(self, threads: int = 1):
        self.threads = max(1, threads)

    def map_chunks(self, fn: Callable[[Sequence], object], items: Sequence) -> list:
        """연속 구간으로 나눠 계산하고 덮개 순서대로 돌려줍니다."""
        chunks = _chunks(items, self.threads)
        if len(chunks) == 1:
            return [fn(chunks[0])]
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            return list(pool.map(fn, chunks))

    @staticmethod
    def supported_balls(kernel: Kernel, depth: int, center: Vertex | None = None) -> list[Ball]:
        return [edge.ball for edge in covering(kernel.prime, depth, center) if kernel.locate(edge.ball)]

    def riemann_integrate(self, measure: HarmonicMeasure, kernel: Kernel, depth: int) -> RiemannSum:
        start = time.perf_counter()
        balls = self.supported_balls(kernel, depth)

        def partial(chunk: Sequence[Ball]):
            plus, minus, terms = 0, 0, 0
            for ball in chunk:
                mu_plus, mu_minus = measure.measure_ball(ball)
                if mu_plus == 0 and mu_minus == 0:
                    continue
                value = kernel.value(ball.sample_point())
                terms += 1
                if mu_plus:
                    plus = plus + mu_plus * value
                if mu_minus:
                    minus = minus + mu_minus * value
            return plus, minus, terms

        plus, minus, terms = 0, 0, 0
        for p_part, m_part, t_part in self.map_chunks(partial, balls):
            plus, minus, terms = plus + p_part, minus + m_part, terms + t_part
        logger.debug(
            f"[IntegrationUseCase] {kernel.kind}{' (정확)' if kernel.is_exact else ''} 깊이 {depth}: 공 {len(balls)}개, 항 {terms}개 "
            f"({time.perf_counter() - start:.2f}s)"
        )
        return RiemannSum(plus=plus, minus=minus, depth=depth, terms=terms)

    @staticmethod
    def stabilization_depth(z1: QuadExtNumber, z2: QuadExtNumber) -> int:
        return 1 + max(reduction_point(z).distance_from_origin() for z in (z1, z2))

    def ord_integral(self, measure: HarmonicMeasure, z1: QuadExtNumber, z2: QuadExtNumber) -> OrdIntegral:
        """Σ μ(U)·(v(z₂ − t) − v(z₁ − t)). 한 단계 더 세분해도 값이 같을 때 확정합니다."""
        kernel = Kernel.ord_cross_ratio(z1, z2)
        depth = self.stabilization_depth(z1, z2)
        current = self.riemann_integrate(measure, kernel, depth)
        for _ in range(MAX_EXTRA_DEPTH):
            refined = self.riemann_integrate(measure, kernel, depth + 1)
            if (refined.plus, refined.minus) == (current.plus, current.minus):
                return OrdIntegral(int(current.plus), int(current.minus), depth, depth + 1)
            logger.warning(f"[IntegrationUseCase] ord 적분이 깊이 {depth} 에서 안정화되지 않아 세분합니다.")
            depth, current = depth + 1, refined
        raise PrecisionExhaustedError(f"ord 적분이 깊이 {depth} 까지 안정화되지 않았습니다.")

    def product_integral(self, measure: HarmonicMeasure, kernels: Sequence[Kernel], depth: int) -> DoubleIntegral:
        """
        ×∫ factor(t) dμ(t) 의 깊이 depth Riemann 곱. 각 공은 자신을 덮는 핵의 인자를 쓰며
        세 부분(log⁰, ord, Teichmüller 잉여)을 함께 모읍니다. ord 는 깊이가 안정화 깊이 이상이면 정확합니다.
        """
        first = kernels[0]
        prime, nonresidue = first.prime, first.points[0].nonresidue
        one = QuadExtNumber(prime, nonresidue, 0, 1, 0, 1)

        def owner(ball: Ball) -> Kernel | None:
            for kernel in kernels:
                if kernel.locate(ball):
                    return kernel
            return None

        balls = [edge.ball for edge in covering(prime, depth)]

        def partial(chunk: Sequence[Ball]):
            logs = [QuadExtNumber.zero(prime, nonresidue), QuadExtNumber.zero(prime, nonresidue)]
            ords = [0, 0]
            residues = [one, one]
            for ball in chunk:
                mu = measure.measure_ball(ball)
                if mu == (0, 0):
                    continue
                kernel = owner(ball)
                if kernel is None:
                    continue
                factor = kernel.factor(ball.sample_point())
                if factor is None:
                    continue
                log_value = factor.angle().log0()
                residue = factor.unit_part().with_precision(1)
                for k in (0, 1):
                    if mu[k]:
                        logs[k] = logs[k] + mu[k] * log_value
                        ords[k] += mu[k] * int(factor.valuation)
                        residues[k] = residues[k] * residue ** mu[k]
            return logs, ords, residues

        logs = [QuadExtNumber.zero(prime, nonresidue), QuadExtNumber.zero(prime, nonresidue)]
        ords = [0, 0]
        residues = [one, one]
        for part_logs, part_ords, part_residues in self.map_chunks(partial, balls):
            for k in (0, 1):
                logs[k] = logs[k] + part_logs[k]
                ords[k] += part_ords[k]
                residues[k] = residues[k] * part_residues[k]
        return DoubleIntegral(
            log_part=(logs[0], logs[1]),
            ord_part=(Fraction(ords[0]), Fraction(ords[1])),
            residue=(residues[0], residues[1]),
            depth=depth,
        )

    def double_integral(
        self, measure: HarmonicMeasure, z1: QuadExtNumber, z2: QuadExtNumber, depth: int
    ) -> DoubleIntegral:
        """log⁰ 부분과 Teichmüller 잉여는 깊이 depth 의 Riemann 곱, ord 부분은 확정된 정확한 값."""
        kernel = Kernel.log_cross_ratio(z1, z2)
        ord_value = self.ord_integral(measure, z1, z2)
        riemann = self.product_integral(measure, (kernel,), depth)
        return replace(riemann, ord_part=(Fraction(ord_value.plus), Fraction(ord_value.minus)))

    def semi_indefinite(self, measure: HarmonicMeasure, z: QuadExtNumber, depth: int) -> DoubleIntegral:
        """
        ×∫^z μ = Π_{U⊂Z_p} (z − t_U)^μ(U) · Π_{U⊂P¹−Z_p} (1 − z/t_U)^μ(U).
        깊이가 z 의 안정화 깊이보다 얕으면 자동으로 세분합니다.
        """
        needed = 1 + reduction_point(z).distance_from_origin()
        if depth < needed:
            logger.warning(f"[IntegrationUseCase] 깊이 {depth} 는 z 를 가르지 못해 {needed} 로 세분합니다.")
            depth = needed
        kernels = (Kernel.log_linear(z), Kernel.log_linear_inverted(z))
        return self.product_integral(measure, kernels, depth)

    def teitelbaum_log(
        self,
        measure: HarmonicMeasure,
        z1: QuadExtNumber,
        z2: QuadExtNumber,
        depth: int,
        branch: LogBranch | None = None,
    ) -> tuple[QuadExtNumber, QuadExtNumber]:
        branch = branch or LogBranch.iwasawa(z1.prime, z1.precision)
        return self.double_integral(measure, z1, z2, depth).value(branch)
