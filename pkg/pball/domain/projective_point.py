from dataclasses import dataclass
from fractions import Fraction

from padic.domain.padic_number import PadicNumber


@dataclass(frozen=True)
class ProjectiveInfinity:
    def __repr__(self) -> str:
        return "∞"


INFINITY = ProjectiveInfinity()

# P¹(Q) 의 원소 (첨점). P¹(Q_p) 의 점은 PadicNumber 도 허용합니다.
Cusp = Fraction | ProjectiveInfinity
Point = Fraction | PadicNumber | ProjectiveInfinity


def is_infinity(x) -> bool:
    return isinstance(x, ProjectiveInfinity)


def _is_zero(value) -> bool:
    flag = getattr(value, "is_zero", None)
    if isinstance(flag, bool):
        return flag
    return value == 0


def mobius(entries: tuple, x: Point) -> Point:
    """[[a,b],[c,d]]·x = (ax+b)/(cx+d)."""
    a, b, c, d = entries
    if is_infinity(x):
        if _is_zero(c):
            return INFINITY
        if isinstance(a, PadicNumber) or isinstance(c, PadicNumber):
            return a / c
        return Fraction(a) / Fraction(c)
    # 0 계수 항을 빼야 상수가 x 의 정밀도를 따라갑니다
    num = b if _is_zero(a) else a * x + b
    den = d if _is_zero(c) else c * x + d
    if _is_zero(den):
        return INFINITY
    return num / den


def as_cusp(value) -> Cusp:
    """'∞', 'inf', None, 정수, 'a/b' 문자열을 첨점으로 바꿉니다."""
    if value is None or is_infinity(value):
        return INFINITY
    if isinstance(value, str) and value.strip().lower() in {"∞", "inf", "infinity", "oo"}:
        return INFINITY
    return Fraction(value)
