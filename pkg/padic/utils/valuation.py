from fractions import Fraction


def vp_int(n: int, p: int) -> int:
    """0이 아닌 정수 n의 p-진 값매김."""
    if n == 0:
        raise ValueError("0의 값매김은 정의되지 않습니다.")
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def vp_rational(x: Fraction | int, p: int) -> int:
    x = Fraction(x)
    return vp_int(x.numerator, p) - vp_int(x.denominator, p)


def strip_p(n: int, p: int) -> tuple[int, int]:
    """n = p^v · m (p ∤ m) 으로 분해해 (v, m)을 돌려줍니다."""
    v = vp_int(n, p)
    return v, n // p**v


def floor_log(k: int, p: int) -> int:
    e = 0
    while p ** (e + 1) <= k:
        e += 1
    return e
