"""
긴 Weierstrass 모형 위의 군 연산. 좌표는 +, −, *, / 가 되는 임의의 체 원소
(Fraction, QuadraticFieldElement, QuadExtNumber) 입니다. None 은 무한원점.
"""
from modsym.utils.curve_arithmetic import Coefficients


def _is_zero(value) -> bool:
    flag = getattr(value, "is_zero", None)
    if isinstance(flag, bool):
        return flag
    return value == 0


def rhs(coeffs: Coefficients, x):
    _, a2, _, a4, a6 = coeffs
    return x * x * x + a2 * x * x + a4 * x + a6


def on_curve(coeffs: Coefficients, point) -> bool:
    if point is None:
        return True
    a1, _, a3, _, _ = coeffs
    x, y = point
    return _is_zero(y * y + a1 * x * y + a3 * y - rhs(coeffs, x))


def lift_x(coeffs: Coefficients, x):
    """x 위의 점 (x, y) 하나. Q(√D) 원소에서 y 가 없으면 None."""
    a1, _, a3, _, _ = coeffs
    linear = a1 * x + a3
    root = (linear * linear + 4 * rhs(coeffs, x)).sqrt()
    if root is None:
        return None
    return x, (root - linear) / 2


def negate(coeffs: Coefficients, point):
    if point is None:
        return None
    a1, _, a3, _, _ = coeffs
    x, y = point
    return x, -y - a1 * x - a3


def add_points(coeffs: Coefficients, first, second):
    if first is None:
        return second
    if second is None:
        return first
    a1, a2, a3, a4, a6 = coeffs
    x1, y1 = first
    x2, y2 = second
    if _is_zero(x1 - x2):
        if _is_zero(y1 + y2 + a1 * x2 + a3):
            return None
        denominator = 2 * y1 + a1 * x1 + a3
        slope = (3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1) / denominator
        intercept = (-x1 * x1 * x1 + a4 * x1 + 2 * a6 - a3 * y1) / denominator
    else:
        slope = (y2 - y1) / (x2 - x1)
        intercept = (y1 * x2 - y2 * x1) / (x2 - x1)
    x3 = slope * slope + a1 * slope - a2 - x1 - x2
    return x3, -(slope + a1) * x3 - intercept - a3


def multiply(coeffs: Coefficients, n: int, point):
    if n < 0:
        return multiply(coeffs, -n, negate(coeffs, point))
    result = None
    for _ in range(n):
        result = add_points(coeffs, result, point)
    return result
