import logging
import time

from lfun.application.usecase.l_function_usecase import LFunctionUseCase
from measure.application.usecase.integration_usecase import IntegrationUseCase
from measure.domain.double_integral import DoubleIntegral
from measure.domain.harmonic_measure import HarmonicMeasure
from modsym.domain.curve_data import CurveData
from modsym.utils.continued_fraction import unimodular_pieces
from padic.domain.quad_ext_number import QuadExtNumber
from padic.utils.quadratic import smallest_nonresidue
from pball.domain.gamma_element import GammaElement
from pball.domain.projective_point import INFINITY, Cusp, as_cusp
from shpoint.domain.recognition import HEIGHT_BOUNDS, Recognition, RecognitionError, recognize
from shpoint.domain.rm_point import AutomorphGamma, RMPoint, order_and_gamma
from shpoint.domain.stark_heegner_point import StarkHeegnerPoint
from shpoint.domain.tate_parametrization import TateIsomorphism

logger = logging.getLogger(__name__)


class StarkHeegnerUseCase:
    def __init__(self, l_function: LFunctionUseCase, integration: IntegrationUseCase):
        self.l_function = l_function
        self.integration = integration
        self._constants: dict[tuple[str, int, int, int], DoubleIntegral] = {}

    @staticmethod
    def rm_point(curve: CurveData, form: tuple[int, int, int], precision: int) -> RMPoint:
        return RMPoint(curve.prime, *form, precision)

    @staticmethod
    def order_and_gamma(point: RMPoint) -> AutomorphGamma:
        return order_and_gamma(point)

    # ------------------------------------------------------------------
    # 정규화된 원시함수
    # ------------------------------------------------------------------
    def _base_measure(self, curve: CurveData) -> HarmonicMeasure:
        return self.l_function.measure(curve, INFINITY, 0)

    def _doubled_constant(self, curve: CurveData, depth: int, precision: int) -> DoubleIntegral:
        """2C = −(Ĩ(Sτ₀) + Ĩ(τ₀)), τ₀ = s. S 작용에 대해 I₀ = Ĩ + C 가 반대칭이 됩니다."""
        key = (curve.label(), curve.prime, depth, precision)
        if key not in self._constants:
            measure = self._base_measure(curve)
            base = QuadExtNumber.generator(curve.prime, smallest_nonresidue(curve.prime), precision)
            flipped = -base.inverse()
            total = self.integration.semi_indefinite(measure, base, depth) + self.integration.semi_indefinite(
                measure, flipped, depth
            )
            self._constants[key] = -total
        return self._constants[key]

    def doubled_primitive(self, curve: CurveData, z: QuadExtNumber, depth: int, precision: int) -> DoubleIntegral:
        """2·I₀(z), I₀ 는 μ_f[∞, 0] 의 S-반대칭 곱셈 원시함수."""
        measure = self._base_measure(curve)
        constant = self._doubled_constant(curve, depth, precision)
        return self.integration.semi_indefinite(measure, z, depth).scale(2) + constant

    # ------------------------------------------------------------------
    # P_τ
    # ------------------------------------------------------------------
    def stark_heegner(self, curve: CurveData, point: RMPoint, depth: int, r: Cusp = 0) -> StarkHeegnerPoint:
        """
        2·F_f[r, γ_τ r](τ) = −Σ sign·2I₀(g⁻¹τ), {r, γ_τ r} = Σ sign·g{0, ∞}.
        F_{g{0,∞}}(τ) = F_{0,∞}(g⁻¹τ) = −I₀(g⁻¹τ).
        """
        start = time.perf_counter()
        if point.prime != curve.prime:
            raise ValueError(f"RM 점의 소수 {point.prime} 와 곡선의 소수 {curve.prime} 가 다릅니다.")
        r = as_cusp(r)
        automorph = order_and_gamma(point)
        s = automorph.gamma.act_point(r)
        pieces = unimodular_pieces(r, s)
        total = None
        for sign, g in pieces:
            a, b, c, d = g
            z = GammaElement(curve.prime, d, -b, -c, a).act_point(point.tau)
            term = self.doubled_primitive(curve, z, depth, point.precision).scale(-sign)
            total = term if total is None else total + term
        if total is None:
            raise ValueError(f"경로 {{{r}, {s}}} 가 비어 있습니다.")
        result = StarkHeegnerPoint(
            point=point, gamma=automorph, r=r, depth=depth, doubled=total, pieces=len(pieces)
        )
        logger.info(
            f"[StarkHeegnerUseCase] 형식 {point.form}, r={r}: 조각 {len(pieces)}개, 2·ord = {result.ord_part} "
            f"(깊이 {depth}, {time.perf_counter() - start:.2f}s)"
        )
        return result

    def conjugate(self, curve: CurveData, point: RMPoint, depth: int, r: Cusp = 0) -> StarkHeegnerPoint:
        """켤레 RM 점 (−A, −B, −C) 의 점. 이론상 −σ(P_τ) 와 같습니다."""
        return self.stark_heegner(curve, point.conjugate(), depth, r)

    # ------------------------------------------------------------------
    # Tate 매개화와 인식
    # ------------------------------------------------------------------
    def tate_isomorphism(self, curve: CurveData, precision: int) -> TateIsomorphism:
        period = self.l_function.tate_period(curve, precision)
        return TateIsomorphism.build(curve, period.q, smallest_nonresidue(curve.prime), precision)

    def tate_parametrize(self, curve: CurveData, sh_point: StarkHeegnerPoint, index: int, precision: int):
        """u^± 를 E(K_p) 의 점으로. ord 부분이 정수가 아니면 ValueError."""
        isomorphism = self.tate_isomorphism(curve, precision)
        return isomorphism.parametrize(sh_point.multiplicative(index, precision))

    @staticmethod
    def recognize(curve: CurveData, point: RMPoint, image, bounds: tuple[int, ...] = HEIGHT_BOUNDS) -> Recognition:
        if image is None:
            raise RecognitionError("항등원은 인식 대상이 아닙니다.")
        for bound in bounds:
            try:
                return recognize(image[0], point.discriminant, bound, curve.coefficients, point.sqrt_d)
            except RecognitionError as e:
                logger.warning(f"[StarkHeegnerUseCase] {e}")
        raise RecognitionError(f"높이 {bounds[-1]} 까지 x 좌표를 인식하지 못했습니다.")
