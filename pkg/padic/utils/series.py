"""
1-단위원에 대한 log 급수와 양의 값매김 원소에 대한 exp 급수.

정수 좌표 표현 위에서 동작합니다. 좌표 곱셈은 호출자가 넘기는 mul 함수가
담당하므로 Q_p(좌표 1개)와 K_p(좌표 2개)가 같은 코드를 씁니다.
"""
from math import factorial
from typing import Callable

from padic.utils.valuation import floor_log, strip_p

Coords = tuple[int, ...]
Mul = Callable[[Coords, Coords, int], Coords]


def log_one_unit(w: Coords, w_valuation: int, target: int, p: int, mul: Mul) -> Coords:
    """
    log(1 + w) = Σ (−1)^{k+1} w^k / k 를 mod p^target 로 계산합니다.
    w 는 v(w) ≥ 1 인 정수 좌표입니다.
    """
    if w_valuation < 1:
        raise ValueError("log 급수는 1-단위원에서만 수렴합니다.")
    # 마지막 항까지의 k 상한
    k_max = 1
    while (k_max + 1) * w_valuation - floor_log(k_max + 1, p) < target:
        k_max += 1
    guard = floor_log(k_max, p)
    modulus = p ** (target + guard)
    out_mod = p**target

    total = tuple(0 for _ in w)
    power = tuple(c % modulus for c in w)
    for k in range(1, k_max + 1):
        if k > 1:
            power = mul(power, w, modulus)
        e, k_unit = strip_p(k, p)
        inv_unit = pow(k_unit, -1, out_mod)
        # w^k 는 p^e 로 정확히 나누어떨어짐
        term = tuple(((c // p**e) * inv_unit) % out_mod for c in power)
        sign = 1 if k % 2 == 1 else -1
        total = tuple((t + sign * c) % out_mod for t, c in zip(total, term))
    return total


def exp_small(x: Coords, x_valuation: int, target: int, p: int, mul: Mul, one: Coords) -> Coords:
    """
    exp(x) = Σ x^k / k! 를 mod p^target 로 계산합니다 (v(x) ≥ 1, p 홀수).
    """
    if x_valuation < 1:
        raise ValueError("exp 급수는 v(x) ≥ 1 에서만 사용합니다.")
    # v(k!) ≤ (k−1)/(p−1) 이므로 항의 값매김은 k·v − (k−1)/(p−1) 이상
    k_max = 0
    while (k_max + 1) * x_valuation - (k_max / (p - 1)) < target:
        k_max += 1
    guard = strip_p(factorial(max(k_max, 1)), p)[0]
    modulus = p ** (target + guard)
    out_mod = p**target

    total = tuple(c % out_mod for c in one)
    power = tuple(c % modulus for c in one)
    for k in range(1, k_max + 1):
        power = mul(power, x, modulus)
        e, f_unit = strip_p(factorial(k), p)
        inv_unit = pow(f_unit, -1, out_mod)
        term = tuple(((c // p**e) * inv_unit) % out_mod for c in power)
        total = tuple((t + c) % out_mod for t, c in zip(total, term))
    return total

