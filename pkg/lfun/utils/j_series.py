"""j(q) = 1/q + 744 + Σ_{n≥1} c_n qⁿ 의 계수를 E₄³/Δ 로부터 정확히 계산합니다."""
from sympy import QQ, divisor_sigma
from sympy.polys.ring_series import rs_mul, rs_pow, rs_series_inversion
from sympy.polys.rings import ring

_RING, _Q = ring("q", QQ)


def j_coefficients(count: int) -> list[int]:
    """[744, c_1, …, c_count] (상수항부터)."""
    prec = count + 2
    e4 = 1 + 240 * sum((int(divisor_sigma(n, 3)) * _Q**n for n in range(1, prec)), _RING(0))
    eta = _RING(1)
    for n in range(1, prec):
        eta = rs_mul(eta, 1 - _Q**n, _Q, prec)
    # Δ/q = Π (1 − qⁿ)^24
    delta_over_q = rs_pow(eta, 24, _Q, prec)
    series = rs_mul(rs_pow(e4, 3, _Q, prec), rs_series_inversion(delta_over_q, _Q, prec), _Q, prec)
    # q·j(q) 의 계수: 1, 744, 196884, …
    return [int(QQ.to_sympy(series.get((k + 1,), QQ.zero))) for k in range(count + 1)]
