import logging
import math
import time
from fractions import Fraction

from lfun.domain.period_j import PeriodJ, hyperbolic_stabilizer
from lfun.domain.records import InterpolationRecord, LpRecord, MttRecord, TwistedPartial
from lfun.domain.tate_period import TatePeriod, evaluate_j
from lfun.utils.j_series import j_coefficients
from measure.application.usecase.integration_usecase import IntegrationUseCase
from measure.domain.harmonic_measure import HarmonicMeasure
from measure.domain.kernel import Kernel
from modsym.application.port.coefficient_cache_port import CoefficientCachePort
from modsym.application.usecase.modular_symbol_usecase import ModularSymbolUseCase
from modsym.domain.curve_data import CurveData
from padic.domain.log_branch import LogBranch
from padic.domain.padic_number import PadicNumber
from padic.domain.quad_ext_number import QuadExtNumber
from padic.utils.quadratic import smallest_nonresidue
from padic.utils.valuation import vp_rational
from pball.domain.ball import Ball
from pball.domain.projective_point import INFINITY, Cusp, as_cusp

logger = logging.getLogger(__name__)


class GoodReductionError(ValueError):
    pass


class TwistParameterError(ValueError):
    pass


def _as_padic(value, prime: int) -> PadicNumber:
    if isinstance(value, int):
        return PadicNumber.zero(prime) if value == 0 else PadicNumber.from_int(prime, value, 1)
    return value


class LFunctionUseCase:
    def __init__(
        self,
        symbols: ModularSymbolUseCase,
        integration: IntegrationUseCase,
        cache: CoefficientCachePort,
    ):
        self.symbols = symbols
        self.integration = integration
        self.cache = cache
        self._measures: dict[tuple, HarmonicMeasure] = {}

    def measure(self, curve: CurveData, r: Cusp = 0, s: Cusp = INFINITY) -> HarmonicMeasure:
        """μ_f[r, s]. 같은 곡선과 경로에는 같은 객체(같은 메모)를 돌려줍니다."""
        r, s = as_cusp(r), as_cusp(s)
        key = (curve.label(), curve.prime, r, s)
        if key not in self._measures:
            self._measures[key] = HarmonicMeasure(self.symbols.eigen_symbol(curve), r, s)
        return self._measures[key]

    # ------------------------------------------------------------------
    # 보간 / L_p
    # ------------------------------------------------------------------
    @staticmethod
    def _interpolate(measure: HarmonicMeasure) -> InterpolationRecord:
        prime = measure.prime
        unit_balls = [Ball.affine(prime, j, 1) for j in range(1, prime)]
        unit_values = [measure.measure_ball(b) for b in unit_balls]
        return InterpolationRecord(
            integers=measure.measure_ball(Ball.integers(prime)),
            multiples_of_p=measure.measure_ball(Ball.affine(prime, 0, 1)),
            units=(sum(v[0] for v in unit_values), sum(v[1] for v in unit_values)),
        )

    def interpolation(self, curve: CurveData) -> InterpolationRecord:
        return self._interpolate(self.measure(curve))

    def _log_angle_moment(self, measure: HarmonicMeasure, depth: int, precision: int) -> tuple[PadicNumber, PadicNumber]:
        result = self.integration.riemann_integrate(measure, Kernel.log_angle(measure.prime, precision), depth)
        return _as_padic(result.plus, measure.prime), _as_padic(result.minus, measure.prime)

    def lp_value_and_derivative(self, curve: CurveData, depth: int, precision: int) -> LpRecord:
        start = time.perf_counter()
        measure = self.measure(curve)
        record = LpRecord(
            value=self._interpolate(measure).units,
            derivative=self._log_angle_moment(measure, depth, precision),
            depth=depth,
        )
        logger.info(f"[LFunctionUseCase] L_p(E,1) = {record.value}, 깊이 {depth} ({time.perf_counter() - start:.2f}s)")
        return record

    def lp_partial_twisted(self, curve: CurveData, a: int, c: int, depth: int, precision: int) -> TwistedPartial:
        """μ_f[−a/c, ∞] 의 Z_p, Z_p^× 값과 log⟨x⟩ 모멘트. 지표 합은 호출자 몫입니다."""
        if c <= 0 or math.gcd(a, c) != 1:
            raise TwistParameterError(f"gcd(a, c) = 1, c > 0 이어야 합니다: a={a}, c={c}")
        if c % curve.prime == 0:
            raise TwistParameterError(f"c={c} 가 p={curve.prime} 로 나누어집니다.")
        measure = self.measure(curve, Fraction(-a, c), INFINITY)
        record = self._interpolate(measure)
        return TwistedPartial(
            a=a,
            c=c,
            integers=record.integers,
            units=record.units,
            derivative=self._log_angle_moment(measure, depth, precision),
            depth=depth,
        )

    # ------------------------------------------------------------------
    # Tate 주기
    # ------------------------------------------------------------------
    def j_series(self, count: int) -> list[int]:
        key = {"series": "j"}
        cached = self.cache.load("jseries", key)
        if cached and len(cached["coefficients"]) >= count + 1:
            return cached["coefficients"][: count + 1]
        coefficients = j_coefficients(count)
        self.cache.save("jseries", key, {"coefficients": coefficients})
        return coefficients

    def tate_period(self, curve: CurveData, precision: int) -> TatePeriod:
        """q ← 1/(j − 744 − Σ c_n qⁿ) 고정점 반복."""
        prime = curve.prime
        j = curve.j_invariant
        if j == 0 or vp_rational(j, prime) >= 0:
            raise GoodReductionError(f"v_p(j) ≥ 0 이라 Tate 주기가 없습니다 (j={j}, p={prime}).")
        k = -vp_rational(j, prime)
        working = precision + 2 * k
        coefficients = self.j_series(working // k + 2)
        j_value = PadicNumber.from_rational(prime, j, working)

        q = j_value.inverse()
        for _ in range(working + 1):
            tail = 744
            power = q
            for c in coefficients[1:]:
                tail = tail + c * power
                power = power * q
            updated = (j_value - tail).inverse().with_precision(working)
            if updated == q:
                break
            q = updated
        period = TatePeriod(q=q, j_invariant=j)
        logger.info(
            f"[LFunctionUseCase] Tate 주기: v(q)={period.ord}, j(q) ≡ j(E) 상대 {self.j_agreement(period, precision)}자리"
        )
        return period

    def j_agreement(self, period: TatePeriod, precision: int) -> int:
        """j(q) 와 j(E) 가 일치하는 상대 p진 자릿수 v(j(q) − j(E)) − v(j(E))."""
        prime = period.q.prime
        k = period.ord
        working = precision + 2 * k
        coefficients = self.j_series(working // k + 2)
        j_value = PadicNumber.from_rational(prime, period.j_invariant, working)
        gap = evaluate_j(period.q.with_precision(working), coefficients) - j_value
        return int(min(gap.valuation, working - k)) + k

    # ------------------------------------------------------------------
    # 곱셈적 주기와 MTT
    # ------------------------------------------------------------------
    def period_J(self, curve: CurveData, r: Cusp, s: Cusp, depth: int, precision: int) -> PeriodJ:
        prime = curve.prime
        measure = self.measure(curve, r, s)
        gamma = hyperbolic_stabilizer(prime, measure.r, measure.s)
        generator = QuadExtNumber.generator(prime, smallest_nonresidue(prime), precision)
        base_points = (generator, generator + 1)
        integrals = [
            self.integration.double_integral(measure, z, gamma.act_point(z), depth) for z in base_points
        ]
        first, second = integrals
        gap = tuple(float((a - b).valuation) for a, b in zip(first.log_part, second.log_part))
        ord_agree = first.ord_part == second.ord_part
        if not ord_agree:
            logger.warning(f"[LFunctionUseCase] 기준점에 따라 ord 부분이 다릅니다: {first.ord_part} != {second.ord_part}")
        return PeriodJ(
            r=measure.r,
            s=measure.s,
            gamma=gamma,
            integral=first,
            base_points=base_points,
            base_point_gap=gap,
            ord_agree=ord_agree,
        )

    def mtt_check(
        self,
        curve: CurveData,
        depth: int,
        precision: int,
        slack: int = 2,
        q_perturbation: int | None = None,
    ) -> MttRecord:
        """
        log_q(J_f[0,∞]) = log⁰ 부분 + λ_q·ord 부분 의 값매김을 잔차로 돌려줍니다 (이론값은 0).
        γ = diag(p, 1/p) 에서 ord 부분은 (1 + a_p)·L(E,1) 입니다.
        """
        start = time.perf_counter()
        period = self.period_J(curve, 0, INFINITY, depth, precision)
        tate = self.tate_period(curve, precision)
        q = tate.q if q_perturbation is None else tate.q * q_perturbation
        l_value = self.interpolation(curve).integers
        expected = tuple((1 + curve.ap) * v for v in l_value)
        ord_part = tuple(int(v) for v in period.ord_part)
        residual = LogBranch.from_period(q).combine(period.log_part[0], period.ord_part[0])
        residual_valuation = float(residual.valuation)
        passed = ord_part == expected
        if curve.is_split:
            passed = passed and residual_valuation >= depth - slack
        else:
            # 비분할이면 ord 부분이 0 인지만 판정합니다
            logger.info("[LFunctionUseCase] a_p = −1: δ_p(E) = 0 분기, 잔차는 참고값입니다.")
        logger.info(
            f"[LFunctionUseCase] MTT 잔차 값매김 {residual_valuation} (깊이 {depth}), ord {ord_part} / 기대 {expected} "
            f"({time.perf_counter() - start:.2f}s)"
        )
        return MttRecord(
            residual_valuation=residual_valuation,
            ord_part=ord_part,
            expected_ord=expected,
            l_value=l_value,
            depth=depth,
            passed=passed,
        )
