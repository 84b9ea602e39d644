"""K_p 구성에 필요한 이차 잉여 도구: 비잉여, √D 의 매장, 제곱근."""
from fractions import Fraction
from functools import lru_cache

from sympy import factorint, legendre_symbol, sqrt_mod

from padic.domain.padic_number import PadicNumber
from padic.domain.quad_ext_number import QuadExtNumber


class QuadraticResidueError(ValueError):
    pass


@lru_cache(maxsize=None)
def smallest_nonresidue(prime: int) -> int:
    r = 2
    while legendre_symbol(r, prime) != -1:
        r += 1
    return r


def _smaller_root(value: int, prime: int, precision: int) -> int:
    """mod p^N 제곱근 두 개 중 mod p 잉여가 작은 쪽 (부호 규약)."""
    roots = sqrt_mod(value, prime**precision, all_roots=True)
    if not roots:
        raise QuadraticResidueError(f"{value} 은(는) mod {prime}^{precision} 에서 제곱수가 아닙니다.")
    return min(roots, key=lambda y: (y % prime, y))


def embed_quadratic(discriminant: int, prime: int, precision: int) -> QuadExtNumber:
    """
    √D 를 K_p 안에 매장합니다. (D|p) = −1 이어야 하며 결과는 y·s 꼴이고
    y 는 y² ≡ D/r 의 두 Hensel 올림 중 mod p 잉여가 작은 쪽입니다.
    """
    if discriminant % prime == 0 or legendre_symbol(discriminant % prime, prime) != -1:
        raise QuadraticResidueError(
            f"판별식 D={discriminant} 은(는) p={prime} 에서 관성적이지 않습니다 ((D|p) ≠ −1)."
        )
    r = smallest_nonresidue(prime)
    modulus = prime**precision
    target = (discriminant * pow(r, -1, modulus)) % modulus
    y = _smaller_root(target, prime, precision)
    return QuadExtNumber(prime, r, 0, 0, y, precision)


def sqrt_padic(x: PadicNumber) -> PadicNumber:
    """Q_p 안의 제곱근 (존재할 때만)."""
    if x.is_zero:
        return x
    if int(x.valuation) % 2:
        raise QuadraticResidueError("홀수 값매김의 원소는 Q_p 에서 제곱수가 아닙니다.")
    if legendre_symbol(x.unit % x.prime, x.prime) != 1:
        raise QuadraticResidueError("단위 부분이 mod p 비잉여입니다.")
    y = _smaller_root(x.unit, x.prime, x.precision)
    return PadicNumber(x.prime, int(x.valuation) // 2, y, x.precision)


def sqrt_in_extension(x: PadicNumber, nonresidue: int) -> QuadExtNumber:
    """Q_p 원소의 제곱근을 K_p 안에서 구합니다 (짝수 값매김)."""
    if x.is_zero or legendre_symbol(x.unit % x.prime, x.prime) == 1:
        return QuadExtNumber.from_padic(sqrt_padic(x), nonresidue)
    # x = (x/r)·s², x/r 는 잉여
    root = sqrt_padic(x / nonresidue)
    return QuadExtNumber.from_padic(root, nonresidue) * QuadExtNumber.generator(x.prime, nonresidue, x.precision)


def _is_one(x: QuadExtNumber) -> bool:
    return x.residue() == (1, 0)


@lru_cache(maxsize=None)
def _residue_generator(prime: int, nonresidue: int) -> tuple[int, int]:
    """F_{p²}^× 의 생성원 (a, b) ~ a + b·s 중 사전순으로 가장 작은 것."""
    order = prime * prime - 1
    factors = list(factorint(order))
    for a in range(prime):
        for b in range(1, prime):
            g = QuadExtNumber(prime, nonresidue, 0, a, b, 1)
            if all(not _is_one(g ** (order // ell)) for ell in factors):
                return a, b
    raise QuadraticResidueError(f"F_{prime}² 의 생성원을 찾지 못했습니다.")


def sqrt_quadratic(x: QuadExtNumber) -> QuadExtNumber:
    """
    K_p 원소의 제곱근. x = p^v·ω·⟨x⟩ 로 나눠 ⟨x⟩ 는 exp(log⁰/2), ω 는
    F_{p²}^× 의 이산 로그로 처리합니다 (p 는 홀수).
    """
    if x.is_zero:
        return x
    if int(x.valuation) % 2:
        raise QuadraticResidueError("홀수 값매김의 원소는 K_p 에서 제곱수가 아닙니다.")
    prime, nonresidue = x.prime, x.nonresidue
    unit = x.unit_part()
    zeta = unit.teichmuller()
    half_log = Fraction(1, 2) * (unit * zeta.inverse()).log0()
    one_unit_root = half_log.exp()

    a, b = _residue_generator(prime, nonresidue)
    generator = QuadExtNumber(prime, nonresidue, 0, a, b, 1)
    target = zeta.with_precision(1)
    power = QuadExtNumber(prime, nonresidue, 0, 1, 0, 1)
    for exponent in range(prime * prime - 1):
        if power.residue() == target.residue():
            break
        power = power * generator
    if exponent % 2:
        raise QuadraticResidueError(f"{x!r} 은(는) K_p 에서 제곱수가 아닙니다.")
    half = generator ** (exponent // 2)
    root_of_unity = QuadExtNumber(prime, nonresidue, 0, half.coord_a, half.coord_b, x.precision).teichmuller()
    scale = QuadExtNumber(prime, nonresidue, int(x.valuation) // 2, 1, 0, x.precision)
    return scale * root_of_unity * one_unit_root


def _squarefree(n: int) -> bool:
    return all(exponent == 1 for exponent in factorint(abs(n)).values())


def is_fundamental_discriminant(discriminant: int) -> bool:
    """D ≡ 1 (mod 4) 무제곱, 또는 D = 4m 이고 m ≡ 2, 3 (mod 4) 무제곱."""
    if discriminant in (0, 1):
        return False
    if discriminant % 4 == 1:
        return _squarefree(discriminant)
    if discriminant % 4 == 0:
        m = discriminant // 4
        return m % 4 in (2, 3) and _squarefree(m)
    return False
