"""
F(w) = 2πi∫_{i∞}^{w} f(z)dz = Σ (a_m/m)·e^(2πimw) 를 Λ_f 를 법으로 계산합니다.

w 를 SL₂(Z) 기본 영역으로 옮긴 뒤, Γ₀(p) 잉여류가 첨점 0 쪽이면
f|W_p = ε·f (ε = −a_p) 와 F(z) = ε·(F(W_p z) − F(0)) 로 허수부를 키웁니다.
"""
import math
from dataclasses import dataclass
from typing import Sequence

from cmheegner.domain.complex_lattice import ToleranceError

# q-전개 꼬리의 절대 상한
TRUNCATION = 1e-12
MAX_REDUCTION_STEPS = 10_000


@dataclass(frozen=True)
class SeriesValue:
    value: object
    terms: int
    error_bound: float
    flipped: bool


def reduce_to_fundamental(w, ctx) -> tuple[object, tuple[int, int, int, int]]:
    """g·w ∈ 기본 영역 인 (w_F, g), g ∈ SL₂(Z)."""
    a, b, c, d = 1, 0, 0, 1
    for _ in range(MAX_REDUCTION_STEPS):
        n = int(ctx.nint(ctx.re(w)))
        if n:
            w = w - n
            a, b = a - n * c, b - n * d
        if abs(w) < 1 - ctx.eps * 100:
            w = -1 / w
            a, b, c, d = -c, -d, a, b
            continue
        return w, (a, b, c, d)
    raise ToleranceError(f"기본 영역 환원이 {MAX_REDUCTION_STEPS} 단계 안에 끝나지 않았습니다: {w}")


def terms_needed(imag: float, truncation: float = TRUNCATION) -> int:
    """|a_m|/m ≤ 2 이므로 꼬리 ≤ 2|q|^(M+1)/(1 − |q|) < truncation 인 최소 M."""
    radius = math.exp(-2 * math.pi * imag)
    return max(1, math.ceil(math.log(truncation * (1 - radius) / 2) / math.log(radius)) - 1)


def tail_bound(imag: float, terms: int) -> float:
    radius = math.exp(-2 * math.pi * imag)
    return 2 * radius ** (terms + 1) / (1 - radius)


class ModularParametrization:
    def __init__(self, coefficients: Sequence[int], prime: int, ap: int, ctx, truncation: float = TRUNCATION):
        self.coefficients = list(coefficients)
        self.prime = prime
        self.fricke_sign = -ap
        self.ctx = ctx
        self.truncation = truncation
        self._zero_value: SeriesValue | None = None

    @staticmethod
    def min_imaginary(prime: int) -> float:
        """환원 뒤 허수부의 하한 √3/(2p)."""
        return math.sqrt(3) / (2 * prime)

    def series(self, w) -> SeriesValue:
        ctx = self.ctx
        imag = float(ctx.im(w))
        terms = terms_needed(imag, self.truncation)
        if terms > len(self.coefficients):
            raise ToleranceError(
                f"Im(w)={imag:.3e} 에 q-전개 {terms}항이 필요하지만 계수는 {len(self.coefficients)}개뿐입니다."
            )
        q = ctx.exp(2 * ctx.pi * ctx.mpc(0, 1) * w)
        power = ctx.mpc(1)
        parts = []
        for m, am in enumerate(self.coefficients[:terms], start=1):
            power = power * q
            if am:
                parts.append(ctx.mpf(am) / m * power)
        return SeriesValue(ctx.fsum(parts), terms, tail_bound(imag, terms), False)

    def at_zero(self) -> SeriesValue:
        """F(0) = (1 − ε)·F(i/√p). W_p 의 고정점을 씁니다."""
        if self._zero_value is None:
            ctx = self.ctx
            if self.fricke_sign == 1:
                self._zero_value = SeriesValue(ctx.mpc(0), 0, 0.0, False)
            else:
                fixed = self.series(ctx.mpc(0, 1) / ctx.sqrt(self.prime))
                self._zero_value = SeriesValue(2 * fixed.value, fixed.terms, 2 * fixed.error_bound, False)
        return self._zero_value

    def integral(self, w) -> SeriesValue:
        """Λ_f 를 법으로 한 F(w)."""
        w_f, (a, _, c, _) = reduce_to_fundamental(w, self.ctx)
        # w = g⁻¹·w_F 이고 g⁻¹ 의 아래 행은 (−c, a)
        return self._from_coset(w_f, -c, a)

    def _from_coset(self, w_f, c: int, d: int) -> SeriesValue:
        """Γ₀(p)·[[*, *],[c, d]] 잉여류. 첨점 0 쪽이면 h = [[0, −1],[1, j]] 로 옮겨 W_p 를 씁니다."""
        p = self.prime
        if c % p == 0:
            return self.series(w_f)
        half = p // 2
        j = (d * pow(c, -1, p)) % p
        if j > half:
            j -= p
        flipped = self.series((w_f + j) / p)
        zero = self.at_zero()
        value = self.fricke_sign * (flipped.value - zero.value)
        return SeriesValue(value, flipped.terms, flipped.error_bound + zero.error_bound, True)
