import logging
import time
from fractions import Fraction
from typing import Sequence

from cmheegner.domain.cm_point import CMPoint
from cmheegner.domain.complex_lattice import ComplexLattice, ToleranceError, make_context
from cmheegner.domain.edge_value import EdgeValue
from cmheegner.domain.modular_parametrization import ModularParametrization, terms_needed
from cmheegner.domain.plectic import KolyvaginDerivative, KolyvaginTerm, PlecticApprox
from cmheegner.domain.records import LatticeReport, PushforwardReport, TraceCompatRecord
from cmheegner.domain.torus import Label, TorusEmbedding, coset_count, project_label
from measure.application.usecase.integration_usecase import IntegrationUseCase
from modsym.application.usecase.modular_symbol_usecase import ModularSymbolUseCase
from modsym.domain.curve_data import CurveData
from pball.domain.oriented_edge import OrientedEdge
from pball.domain.projective_point import INFINITY, is_infinity
from pball.domain.tree import ball_membership, covering, distance, edges_at, reduce_edge, refine_edge
from pball.domain.vertex import Vertex

logger = logging.getLogger(__name__)

# 받아들일 수 있는 절단 오차 (|ω₁| 대비)
ACCEPTED_ERROR = 1e-8


class TorusLabelError(ValueError):
    pass


def _real(value: Fraction, ctx):
    return ctx.mpf(value.numerator) / value.denominator


class CMHeegnerUseCase:
    def __init__(
        self,
        symbols: ModularSymbolUseCase,
        integration: IntegrationUseCase,
        tolerance: float = 1e-5,
        dps: int = 30,
    ):
        self.symbols = symbols
        self.integration = integration
        self.tolerance = tolerance
        self.dps = dps
        self.ctx = make_context(dps)
        self._lattices: dict[tuple[str, int], ComplexLattice] = {}
        self._parametrizations: dict[tuple[str, int], ModularParametrization] = {}

    @staticmethod
    def cm_point(curve: CurveData, form: tuple[int, int, int], precision: int) -> CMPoint:
        return CMPoint(curve.prime, *form, precision)

    # ------------------------------------------------------------------
    # 격자와 q-전개
    # ------------------------------------------------------------------
    def complex_lattice(self, curve: CurveData) -> ComplexLattice:
        key = (curve.label(), curve.prime)
        if key not in self._lattices:
            lattice = ComplexLattice.from_curve(curve, self.ctx)
            self._lattices[key] = lattice
            logger.info(
                f"[CMHeegnerUseCase] 주기 격자 ω₁={self.ctx.nstr(lattice.omega1, 15)}, "
                f"ω₂={self.ctx.nstr(lattice.omega2, 15)}"
            )
        return self._lattices[key]

    def lattice_report(self, curve: CurveData) -> LatticeReport:
        """모듈러 판별식으로 되짚은 Δ(E) 의 상대 오차와, 정밀도를 두 배로 올렸을 때의 주기 변화."""
        lattice = self.complex_lattice(curve)
        error = abs(lattice.modular_discriminant() - curve.discriminant) / abs(curve.discriminant)
        finer = ComplexLattice.from_curve(curve, make_context(2 * self.dps))
        gap = max(abs(finer.omega1 - lattice.omega1), abs(finer.omega2 - lattice.omega2)) / abs(finer.omega1)
        return LatticeReport(discriminant_error=float(error), doubling_gap=float(gap))

    def parametrization(self, curve: CurveData) -> ModularParametrization:
        key = (curve.label(), curve.prime)
        if key not in self._parametrizations:
            count = terms_needed(ModularParametrization.min_imaginary(curve.prime)) + 1
            coefficients = self.symbols.fourier_coefficients(curve, count)
            self._parametrizations[key] = ModularParametrization(coefficients, curve.prime, curve.ap, self.ctx)
        return self._parametrizations[key]

    def moebius(self, entries: tuple[Fraction, ...], z):
        a, b, c, d = (_real(Fraction(x), self.ctx) for x in entries)
        return (a * z + b) / (c * z + d)

    # ------------------------------------------------------------------
    # 변 값
    # ------------------------------------------------------------------
    def edge_value(self, curve: CurveData, tau_inf, edge: OrientedEdge) -> EdgeValue:
        """t_E·2πi∫_{i∞}^{γτ_∞} f, γe = e_∞ (방향이 반대면 부호를 바꿉니다)."""
        gamma, orientation = reduce_edge(edge)
        series = self.parametrization(curve).integral(self.moebius(gamma.entries, tau_inf))
        error = curve.torsion * series.error_bound
        scale = self.complex_lattice(curve).scale
        if error >= ACCEPTED_ERROR * scale:
            raise ToleranceError(f"변 {edge} 의 절단 오차 {error:.2e} 가 허용치 {ACCEPTED_ERROR * scale:.2e} 를 넘습니다.")
        return EdgeValue(
            edge=edge,
            value=curve.torsion * orientation * series.value,
            gamma=gamma,
            orientation=orientation,
            terms=series.terms,
            error_bound=error,
            flipped=series.flipped,
        )

    def edge_values(self, curve: CurveData, point: CMPoint, edges: Sequence[OrientedEdge]) -> list[EdgeValue]:
        # 스레드에 나누기 전에 메모를 채웁니다
        self.parametrization(curve).at_zero()
        self.complex_lattice(curve)
        tau_inf = point.tau_complex(self.ctx)

        def partial(chunk: Sequence[OrientedEdge]) -> list[EdgeValue]:
            return [self.edge_value(curve, tau_inf, edge) for edge in chunk]

        return [value for chunk in self.integration.map_chunks(partial, list(edges)) for value in chunk]

    @staticmethod
    def level_edges(point: CMPoint, level: int) -> list[OrientedEdge]:
        return covering(point.prime, level, point.fixed_vertex)

    def vertex_sum(self, curve: CurveData, point: CMPoint, vertex: Vertex) -> float:
        """Σ_{s(e)=v} c(e) 의 Λ_f 까지 상대 거리."""
        values = self.edge_values(curve, point, edges_at(vertex))
        return self.complex_lattice(curve).relative_distance(self.ctx.fsum(v.value for v in values))

    # ------------------------------------------------------------------
    # 토러스 라벨
    # ------------------------------------------------------------------
    def reference_edge(self, point: CMPoint, level: int) -> OrientedEdge:
        """e_n: 공이 ∞ 를 담는 거리 n 의 변 (라벨 1)."""
        for edge in self.level_edges(point, level):
            if ball_membership(INFINITY, edge.ball):
                return edge
        raise TorusLabelError(f"레벨 {level} 에서 ∞ 를 담는 변이 없습니다.")

    def torus_label(self, point: CMPoint, edge: OrientedEdge, level: int) -> Label:
        center = point.fixed_vertex
        if distance(center, edge.target) != level or distance(center, edge.source) != level - 1:
            raise TorusLabelError(f"변 {edge} 은(는) {center} 에서 거리 {level} 의 바깥쪽 변이 아닙니다.")
        embedding = TorusEmbedding(point)
        alpha = embedding.edge_coordinate(edge)
        moved = embedding.rotate_edge(alpha, self.reference_edge(point, level))
        if moved != edge:
            raise TorusLabelError(f"ι_τ(α)·e_{level} = {moved} 이(가) {edge} 와 다릅니다.")
        return embedding.label_of(alpha, level)

    def pushforward_check(self, point: CMPoint, level: int) -> PushforwardReport:
        """A 가 거리 level 의 각 공을 잉여류 α·U_n 위로 보내는지 정확히 확인합니다."""
        start = time.perf_counter()
        embedding = TorusEmbedding(point)
        one = embedding.label_of(embedding.one(), level)
        fixed_points = (
            embedding.coordinate(point.tau).is_zero
            and is_infinity(embedding.coordinate(point.tau_conjugate))
            and embedding.label_of(embedding.coordinate(INFINITY), level) == one
        )
        edges = self.level_edges(point, level)
        labels = [embedding.edge_label(edge, level) for edge in edges]
        bijective = (
            len(set(labels)) == len(edges) == coset_count(point.prime, level)
            and all(embedding.has_unit_norm(label, level) for label in labels)
        )
        refines = True
        for edge, label in zip(edges, labels):
            children = [embedding.edge_label(child, level + 1) for child in refine_edge(edge)]
            if len(set(children)) != len(children) or any(
                project_label(child, point.prime, level) != label for child in children
            ):
                refines = False
                break
        report = PushforwardReport(level, len(edges), fixed_points, bijective, refines)
        logger.info(
            f"[CMHeegnerUseCase] push-forward 레벨 {level}: 잉여류 {report.cosets}개, 통과 {report.passed} "
            f"({time.perf_counter() - start:.2f}s)"
        )
        return report

    # ------------------------------------------------------------------
    # 반순환 측도, Kolyvagin 미분, plectic 불변량
    # ------------------------------------------------------------------
    def anticyclotomic_table(self, curve: CurveData, point: CMPoint, level: int) -> dict[Label, EdgeValue]:
        """μ_{f,K} = A_*μ_f[τ_∞] 의 레벨 n 값: 잉여류 ↦ 변 값."""
        derivative = self.kolyvagin_derivative(curve, point, level)
        return {term.label: term.value for term in derivative.terms}

    def kolyvagin_derivative(self, curve: CurveData, point: CMPoint, level: int) -> KolyvaginDerivative:
        start = time.perf_counter()
        embedding = TorusEmbedding(point)
        edges = self.level_edges(point, level)
        values = self.edge_values(curve, point, edges)
        terms = []
        for edge, value in zip(edges, values):
            alpha = embedding.edge_coordinate(edge)
            terms.append(KolyvaginTerm(edge, value, embedding.label_of(alpha, level), alpha))
        derivative = KolyvaginDerivative(level=level, prime=point.prime, terms=tuple(terms))
        logger.info(
            f"[CMHeegnerUseCase] 레벨 {level} 항 {len(terms)}개 ({time.perf_counter() - start:.2f}s)"
        )
        return derivative

    def plectic_invariant(self, curve: CurveData, point: CMPoint, level: int) -> PlecticApprox:
        approx = self.kolyvagin_derivative(curve, point, level).logarithms()
        distance_ = approx.shadow_distance(self.complex_lattice(curve))
        if distance_ >= self.tolerance:
            logger.warning(
                f"[CMHeegnerUseCase] 그림자 합이 Λ_f 에서 {distance_:.2e}·|ω₁| 떨어져 있습니다 (허용 {self.tolerance:.0e})."
            )
        return approx

    def level_compatibility(self, curve: CurveData, point: CMPoint, level: int) -> float:
        """레벨 n+1 합을 레벨 n 라벨로 모은 값과 레벨 n 변 값의 차이 (최대 상대 거리)."""
        lattice = self.complex_lattice(curve)
        coarse = self.kolyvagin_derivative(curve, point, level)
        fine = self.kolyvagin_derivative(curve, point, level + 1).logarithms()
        fibers = fine.fiber_sums(level, self.ctx)
        return max(lattice.relative_distance(fibers[term.label] - term.value.value) for term in coarse.terms)

    def trace_compat_check(self, curve: CurveData, point: CMPoint, level: int, twisted: bool = True) -> TraceCompatRecord:
        """
        a_p^(n+1)·Σ_{자식} y − a_p^(n+1)·y_e ∈ Λ_f. twisted=False 는 y_e 의 꼬임을 a_p^n 으로 둡니다.

        twisted 에서는 양변의 a_p^(n+1) 이 약분되어 변 값의 조화성 검사와 같습니다.
        두 형태는 a_p = −1 일 때만 다르며, 그때 untwisted 잔차는 격자 밖으로 벗어납니다.
        """
        start = time.perf_counter()
        lattice = self.complex_lattice(curve)
        parents = self.level_edges(point, level)
        children = [refine_edge(edge) for edge in parents]
        parent_values = self.edge_values(curve, point, parents)
        child_values = self.edge_values(curve, point, [child for group in children for child in group])
        ap = curve.ap
        image_power = level + 1 if twisted else level
        residuals, offset = [], 0
        for parent, group in zip(parent_values, children):
            block = child_values[offset: offset + len(group)]
            offset += len(group)
            total = ap ** (level + 1) * self.ctx.fsum(v.value for v in block)
            residuals.append(lattice.relative_distance(total - ap**image_power * parent.value))
        record = TraceCompatRecord(level=level, twisted=twisted, residuals=tuple(residuals))
        logger.info(
            f"[CMHeegnerUseCase] 대각합 호환 레벨 {level}→{level + 1}: 잔차 {record.residual:.2e}·|ω₁| "
            f"({time.perf_counter() - start:.2f}s)"
        )
        return record
