"""
Weierstrass 모형의 불변량, 유한체 점 개수, 유리점 군 연산, Nagell–Lutz 꼬임.
"""
from fractions import Fraction

from sympy import Poly, factorint, legendre_symbol
from sympy.abc import x as _x

Coefficients = tuple[int, int, int, int, int]
AffinePoint = tuple[Fraction, Fraction]

# 한 유리 곡선의 꼬임 위수 상한 (Mazur)
MAX_TORSION_ORDER = 12


def b_invariants(coeffs: Coefficients) -> tuple[int, int, int, int]:
    a1, a2, a3, a4, a6 = coeffs
    b2 = a1 * a1 + 4 * a2
    b4 = 2 * a4 + a1 * a3
    b6 = a3 * a3 + 4 * a6
    b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
    return b2, b4, b6, b8


def c_invariants(coeffs: Coefficients) -> tuple[int, int, int]:
    """(c4, c6, Δ)."""
    b2, b4, b6, b8 = b_invariants(coeffs)
    c4 = b2 * b2 - 24 * b4
    c6 = -(b2**3) + 36 * b2 * b4 - 216 * b6
    discriminant = -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6
    return c4, c6, discriminant


def count_points(coeffs: Coefficients, ell: int) -> int:
    """#E(F_ℓ) (무한원점 포함). 홀수 ℓ 은 2차 지표 합, ℓ = 2 는 전수 조사."""
    a1, a2, a3, a4, a6 = coeffs
    if ell == 2:
        affine = sum(
            1
            for x in range(2)
            for y in range(2)
            if (y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6) % 2 == 0
        )
        return affine + 1
    b2, b4, b6, _ = b_invariants(coeffs)
    # (2y + a1x + a3)² = 4x³ + b2x² + 2b4x + b6
    chi_sum = sum(int(legendre_symbol((4 * x**3 + b2 * x * x + 2 * b4 * x + b6) % ell, ell)) for x in range(ell))
    return ell + 1 + chi_sum


def short_model(coeffs: Coefficients) -> tuple[int, int]:
    """Y² = X³ − 27c4·X − 54c6 의 (A, B). X = 36x + 3b2, Y = 108(2y + a1x + a3)."""
    c4, c6, _ = c_invariants(coeffs)
    return -27 * c4, -54 * c6


def from_short(coeffs: Coefficients, point: AffinePoint) -> AffinePoint:
    a1, _, a3, _, _ = coeffs
    b2 = b_invariants(coeffs)[0]
    big_x, big_y = point
    x = (Fraction(big_x) - 3 * b2) / 36
    y = (Fraction(big_y) / 108 - a1 * x - a3) / 2
    return x, y


def add_short(a: int, p1: AffinePoint | None, p2: AffinePoint | None) -> AffinePoint | None:
    """Y² = X³ + aX + b 위의 덧셈. None 은 무한원점."""
    if p1 is None:
        return p2
    if p2 is None:
        return p1
    x1, y1 = p1
    x2, y2 = p2
    if x1 == x2 and y1 == -y2:
        return None
    if p1 == p2:
        slope = (3 * x1 * x1 + a) / (2 * Fraction(y1))
    else:
        slope = (y2 - y1) / (Fraction(x2) - x1)
    x3 = slope * slope - x1 - x2
    return x3, slope * (x1 - x3) - y1


def _square_divisor_roots(n: int) -> list[int]:
    """y² | n 인 양의 정수 y 전부."""
    roots = [1]
    for prime, exponent in factorint(abs(n)).items():
        roots = [r * prime**k for r in roots for k in range(exponent // 2 + 1)]
    return sorted(roots)


def _torsion_order(a: int, point: AffinePoint) -> int | None:
    """정수 좌표를 유지한 채 nP = O 가 되는 최소 n (n ≤ 12). 아니면 None."""
    current = point
    for n in range(1, MAX_TORSION_ORDER + 1):
        if current is None:
            return n
        x, y = current
        if Fraction(x).denominator != 1 or Fraction(y).denominator != 1:
            return None
        current = add_short(a, current, point)
    return None


def rational_torsion(coeffs: Coefficients) -> list[AffinePoint]:
    """
    E(Q)_tors 의 아핀 점들 (원래 모형 좌표). Nagell–Lutz 후보를 짧은 모형에서 찾고
    정수성을 유지한 배수 계산으로 유한 위수를 확인합니다.
    """
    a, b = short_model(coeffs)
    bound = 4 * a**3 + 27 * b * b
    candidates: list[AffinePoint] = []
    for y in [0, *_square_divisor_roots(bound)]:
        cubic = Poly(_x**3 + a * _x + b - y * y, _x)
        for root in cubic.ground_roots():
            x = int(root)
            candidates.append((Fraction(x), Fraction(y)))
            if y:
                candidates.append((Fraction(x), Fraction(-y)))
    points = [p for p in candidates if _torsion_order(a, p) is not None]
    return [from_short(coeffs, p) for p in points]


def torsion_order(coeffs: Coefficients) -> int:
    return 1 + len(rational_torsion(coeffs))


def on_curve(coeffs: Coefficients, point: AffinePoint) -> bool:
    a1, a2, a3, a4, a6 = coeffs
    x, y = point
    return y * y + a1 * x * y + a3 * y == x**3 + a2 * x * x + a4 * x + a6
