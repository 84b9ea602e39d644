import logging
import time

from sympy import factorint, isprime, primerange

from modsym.application.port.coefficient_cache_port import CoefficientCachePort
from modsym.domain.curve_data import CurveData
from modsym.domain.eigen_symbol import EigenSymbol
from modsym.domain.manin_basis import ManinBasis, build_basis
from modsym.utils.curve_arithmetic import count_points, rational_torsion
from pball.domain.projective_point import INFINITY, Cusp

logger = logging.getLogger(__name__)


class BadPrimeError(ValueError):
    pass


class ModularSymbolUseCase:
    def __init__(self, cache: CoefficientCachePort):
        self.cache = cache
        self._bases: dict[int, ManinBasis] = {}
        self._symbols: dict[tuple[str, int, int], EigenSymbol] = {}

    def build_basis(self, prime: int) -> ManinBasis:
        if prime not in self._bases:
            start = time.perf_counter()
            self._bases[prime] = build_basis(prime)
            logger.info(
                f"[ModularSymbolUseCase] p={prime} Manin 기저 구성 완료: 몫 차원 {self._bases[prime].dim()} "
                f"({time.perf_counter() - start:.2f}s)"
            )
        return self._bases[prime]

    def ap_from_curve(self, curve: CurveData, ell: int) -> int:
        if not isprime(ell):
            raise BadPrimeError(f"ℓ={ell} 은(는) 소수가 아닙니다.")
        if ell == curve.prime:
            raise BadPrimeError(f"ℓ={ell} 은(는) 도체입니다; a_p 필드({curve.ap})를 사용하세요.")
        if curve.discriminant % ell == 0:
            raise BadPrimeError(f"ℓ={ell} 에서 나쁜 환원입니다.")
        return ell + 1 - count_points(curve.coefficients, ell)

    def fourier_coefficients(self, curve: CurveData, count: int) -> list[int]:
        """[a_1, …, a_count]. 소수는 점 개수, 소수 거듭제곱은 Hecke 점화식, 나머지는 곱셈성."""
        key = {"curve": curve.label(), "prime": curve.prime}
        cached = self.cache.load("ap", key)
        if cached and len(cached["coefficients"]) >= count:
            return cached["coefficients"][:count]

        if count < 1:
            return []
        start = time.perf_counter()
        prime_values: dict[int, int] = {}
        coefficients = [0] * (count + 1)
        coefficients[1] = 1
        for m in range(2, count + 1):
            value = 1
            for ell, exponent in factorint(m).items():
                if ell not in prime_values:
                    prime_values[ell] = curve.ap if ell == curve.prime else self.ap_from_curve(curve, ell)
                value *= self._prime_power_coefficient(ell, exponent, prime_values[ell], ell == curve.prime)
            coefficients[m] = value
        result = coefficients[1:]
        self.cache.save("ap", key, {"coefficients": result})
        logger.debug(f"[ModularSymbolUseCase] a_m (m ≤ {count}) 계산 ({time.perf_counter() - start:.2f}s)")
        return result

    @staticmethod
    def _prime_power_coefficient(ell: int, exponent: int, a_ell: int, bad: bool) -> int:
        if bad:
            return a_ell**exponent
        previous, current = 1, a_ell
        for _ in range(exponent - 1):
            previous, current = current, a_ell * current - ell * previous
        return current

    def hecke_eigenvalues(self, curve: CurveData, bound: int) -> dict[int, int]:
        return {ell: self.ap_from_curve(curve, ell) for ell in primerange(2, bound + 1) if ell != curve.prime}

    def eigen_symbol(self, curve: CurveData, bound: int = 20) -> EigenSymbol:
        key = (curve.label(), curve.prime, bound)
        if key in self._symbols:
            return self._symbols[key]
        start = time.perf_counter()
        basis = self.build_basis(curve.prime)
        symbol = EigenSymbol.solve(basis, self.hecke_eigenvalues(curve, bound), curve.ap)
        logger.info(
            f"[ModularSymbolUseCase] 곡선 [{curve.label()}] 고유 기호 m⁺[0,∞]={symbol.evaluate(0, INFINITY)[0]} "
            f"({time.perf_counter() - start:.2f}s)"
        )
        self._symbols[key] = symbol
        return symbol

    @staticmethod
    def eval_symbol(symbol: EigenSymbol, r: Cusp, s: Cusp) -> tuple[int, int]:
        return symbol.evaluate(r, s)

    @staticmethod
    def torsion_scale(curve: CurveData) -> int:
        return 1 + len(rational_torsion(curve.coefficients))

    def hecke_report(self, symbol: EigenSymbol, curve: CurveData, bound: int = 20) -> dict[int, tuple[int, int]]:
        """ℓ ≤ bound 와 U_p 에 대한 고유 관계 결손 (모두 (0, 0) 이어야 함)."""
        report = {ell: symbol.hecke_defect(ell, a_ell) for ell, a_ell in self.hecke_eigenvalues(curve, bound).items()}
        report[curve.prime] = symbol.hecke_defect(curve.prime, curve.ap)
        return report
