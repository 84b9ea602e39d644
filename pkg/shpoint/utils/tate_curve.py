"""
Tate 곡선 E_q: y² + xy = x³ + a4(q)·x + a6(q) 와 K_p^×/q^Z → E_q(K_p) 급수.

  a4 = −5·s3,  a6 = −(5·s3 + 7·s5)/12,  s_k = Σ n^k qⁿ/(1 − qⁿ)
  X(u) = Σ_{n∈Z} qⁿu/(1 − qⁿu)² − 2·s1
  Y(u) = Σ_{n∈Z} (qⁿu)²/(1 − qⁿu)³ + s1
"""
from padic.domain.padic_number import PadicNumber
from padic.domain.quad_ext_number import QuadExtNumber


def series_terms(q: PadicNumber, precision: int) -> int:
    return precision // int(q.valuation) + 2


def power_sums(q: PadicNumber, precision: int) -> dict[int, PadicNumber]:
    """s1, s3, s5."""
    sums = {1: PadicNumber.zero(q.prime), 3: PadicNumber.zero(q.prime), 5: PadicNumber.zero(q.prime)}
    power = q
    for n in range(1, series_terms(q, precision) + 1):
        term = power / (1 - power)
        for k in sums:
            sums[k] = sums[k] + n**k * term
        power = power * q
    return sums


def tate_coefficients(q: PadicNumber, precision: int) -> tuple[int, int, int, PadicNumber, PadicNumber]:
    """E_q 의 (a1, a2, a3, a4, a6)."""
    sums = power_sums(q, precision)
    a4 = -5 * sums[3]
    a6 = -(5 * sums[3] + 7 * sums[5]) / 12
    return 1, 0, 0, a4, a6


def reduce_to_annulus(u: QuadExtNumber, q: PadicNumber) -> QuadExtNumber:
    """q 거듭제곱을 곱해 0 ≤ v(u) < v(q) 로 옮깁니다."""
    shift = int(u.valuation) // int(q.valuation)
    if shift == 0:
        return u
    return u * q ** (-shift)


def tate_xy(u: QuadExtNumber, q: PadicNumber, precision: int) -> tuple[QuadExtNumber, QuadExtNumber] | None:
    """u ∈ K_p^× (환 안으로 정규화됨) 의 E_q 좌표. u ∈ q^Z 이면 None (항등원)."""
    u = reduce_to_annulus(u, q)
    if (u - 1).is_zero:
        return None
    q_ext = QuadExtNumber.from_padic(q, u.nonresidue)
    sums = power_sums(q, precision)
    x = -2 * sums[1]
    y = sums[1]
    inverse = u.inverse()
    forward = u
    backward = q_ext * inverse
    x = forward / (1 - forward) ** 2 + x
    y = forward * forward / (1 - forward) ** 3 + y
    for _ in range(1, series_terms(q, precision) + 1):
        x = x + backward / (1 - backward) ** 2
        y = y - backward / (1 - backward) ** 3
        forward = forward * q_ext
        x = x + forward / (1 - forward) ** 2
        y = y + forward * forward / (1 - forward) ** 3
        backward = backward * q_ext
    return x, y
