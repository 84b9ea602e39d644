import logging
import random
import time
from fractions import Fraction

from cli.domain.check_item import CheckItem
from lfun.application.usecase.l_function_usecase import LFunctionUseCase
from modsym.application.usecase.modular_symbol_usecase import ModularSymbolUseCase
from modsym.domain.curve_data import CurveData
from padic.utils.valuation import vp_rational
from pball.domain.projective_point import INFINITY, Cusp
from pball.domain.tree import edges_at
from pball.domain.vertex import Vertex

logger = logging.getLogger(__name__)

# 난수 검사의 고정 시드 (출력 결정성)
SUITE_SEED = 20240611
HECKE_BOUND = 13


def random_cusp(rng: random.Random) -> Cusp:
    if rng.random() < 0.1:
        return INFINITY
    return Fraction(rng.randint(-60, 60), rng.randint(1, 40))


def random_gamma0(rng: random.Random, prime: int) -> tuple[int, int, int, int]:
    """[[a, b], [pk, d]], ad − bpk = 1."""
    while True:
        c = prime * rng.choice([k for k in range(-6, 7) if k])
        d = rng.randint(-40, 40)
        try:
            a = pow(d, -1, abs(c))
        except ValueError:
            continue
        b = (a * d - 1) // c
        return a, b, c, d


def vertices_within(prime: int, radius: int) -> list[Vertex]:
    seen = {Vertex.origin(prime): 0}
    frontier = [Vertex.origin(prime)]
    for step in range(1, radius + 1):
        nxt = []
        for vertex in frontier:
            for edge in edges_at(vertex):
                if edge.target not in seen:
                    seen[edge.target] = step
                    nxt.append(edge.target)
        frontier = nxt
    return list(seen)


class CheckSuiteUseCase:
    """정확한 불변량 모음. 모든 항목이 통과해야 check 가 0 으로 끝납니다."""

    def __init__(
        self,
        symbols: ModularSymbolUseCase,
        l_function: LFunctionUseCase,
        cases: int = 100,
        radius: int = 3,
        random_symbols: int = 5,
    ):
        self.symbols = symbols
        self.l_function = l_function
        self.cases = cases
        self.radius = radius
        self.random_symbols = random_symbols

    def hecke(self, curve: CurveData) -> CheckItem:
        symbol = self.symbols.eigen_symbol(curve)
        report = self.symbols.hecke_report(symbol, curve, HECKE_BOUND)
        failed = {ell: defect for ell, defect in report.items() if defect != (0, 0)}
        return CheckItem("hecke", not failed, f"ℓ ∈ {sorted(report)}; 결손 {failed or '없음'}")

    def additivity(self, curve: CurveData) -> CheckItem:
        symbol = self.symbols.eigen_symbol(curve)
        rng = random.Random(SUITE_SEED)
        failures = 0
        for _ in range(self.cases):
            r, s, t = random_cusp(rng), random_cusp(rng), random_cusp(rng)
            left = symbol.evaluate(r, s)
            right = symbol.evaluate(s, t)
            if (left[0] + right[0], left[1] + right[1]) != symbol.evaluate(r, t):
                failures += 1
        return CheckItem("additivity", failures == 0, f"{self.cases}건 중 실패 {failures}건")

    def gamma0_invariance(self, curve: CurveData) -> CheckItem:
        symbol = self.symbols.eigen_symbol(curve)
        rng = random.Random(SUITE_SEED + 1)
        failures = 0
        for _ in range(self.cases):
            entries = random_gamma0(rng, curve.prime)
            r, s = random_cusp(rng), random_cusp(rng)
            if symbol.evaluate_translate(entries, r, s) != symbol.evaluate(r, s):
                failures += 1
        return CheckItem("gamma0_invariance", failures == 0, f"{self.cases}건 중 실패 {failures}건")

    def two_paths(self, curve: CurveData) -> CheckItem:
        symbol = self.symbols.eigen_symbol(curve)
        rng = random.Random(SUITE_SEED + 2)
        failures = 0
        for _ in range(self.cases):
            r, s = random_cusp(rng), random_cusp(rng)
            if symbol.evaluate(r, s) != symbol.evaluate_direct(r, s):
                failures += 1
        return CheckItem("two_paths", failures == 0, f"{self.cases}건 중 실패 {failures}건")

    def harmonicity(self, curve: CurveData) -> CheckItem:
        rng = random.Random(SUITE_SEED + 3)
        paths = [(Fraction(0), INFINITY)]
        paths += [(random_cusp(rng), random_cusp(rng)) for _ in range(self.random_symbols)]
        vertices = vertices_within(curve.prime, self.radius)
        failures = 0
        for r, s in paths:
            measure = self.l_function.measure(curve, r, s)
            for vertex in vertices:
                if not measure.check_harmonic(vertex) or not measure.check_total_zero(edges_at(vertex)[-1]):
                    failures += 1
        return CheckItem(
            "harmonicity",
            failures == 0,
            f"기호 {len(paths)}개, 거리 {self.radius} 이내 꼭짓점 {len(vertices)}개, 실패 {failures}건",
        )

    def interpolation(self, curve: CurveData) -> CheckItem:
        record = self.l_function.interpolation(curve)
        expected = tuple((1 - curve.ap) * v for v in record.integers)
        passed = record.consistent and record.units == expected
        return CheckItem("interpolation", passed, f"μ(Z_p^×) = {record.units}, (1 − a_p)·μ(Z_p) = {expected}")

    def tate_period(self, curve: CurveData, precision: int) -> CheckItem:
        period = self.l_function.tate_period(curve, precision)
        agreement = self.l_function.j_agreement(period, precision)
        expected_ord = -vp_rational(curve.j_invariant, curve.prime)
        passed = period.ord == expected_ord and agreement >= precision
        return CheckItem("tate_period", passed, f"v(q) = {period.ord} (기대 {expected_ord}), j 일치 {agreement}자리")

    def mtt(self, curve: CurveData, precision: int, depth: int = 2) -> CheckItem:
        record = self.l_function.mtt_check(curve, depth, precision)
        return CheckItem(
            "mtt",
            record.passed,
            f"깊이 {depth}: ord {record.ord_part} / 기대 {record.expected_ord}, 잔차 값매김 {record.residual_valuation}",
        )

    def run(self, curve: CurveData, precision: int) -> list[CheckItem]:
        start = time.perf_counter()
        items = [
            self.hecke(curve),
            self.additivity(curve),
            self.gamma0_invariance(curve),
            self.two_paths(curve),
            self.harmonicity(curve),
            self.interpolation(curve),
            self.tate_period(curve, precision),
            self.mtt(curve, precision),
        ]
        for item in items:
            if not item.passed:
                logger.warning(f"[CheckSuiteUseCase] {item.name} 실패: {item.detail}")
        logger.info(
            f"[CheckSuiteUseCase] {sum(item.passed for item in items)}/{len(items)} 통과 "
            f"({time.perf_counter() - start:.2f}s)"
        )
        return items
