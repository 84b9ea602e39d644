"""x² − D·y² = 4 의 기본해 (노름 +1 기본 단위 ε = (x + y√D)/2)."""
from sympy import Poly, integer_nthroot, symbols
from sympy.ntheory.primetest import is_square
from sympy.solvers.diophantine.diophantine import diop_DN

_t = symbols("t")


class PellSolverError(ValueError):
    pass


def _pell_one(d: int) -> tuple[int, int]:
    solutions = [(abs(int(x)), abs(int(y))) for x, y in diop_DN(d, 1) if y != 0]
    if not solutions:
        raise PellSolverError(f"x² − {d}·y² = 1 의 해를 찾지 못했습니다.")
    return min(solutions, key=lambda pair: pair[1])


def norm_one_unit(discriminant: int) -> tuple[int, int]:
    """
    x, y > 0 이고 y 가 최소인 (x, y). D ≡ 0 (mod 4) 이면 (x/2)² − (D/4)y² = 1 로,
    D ≡ 1 (mod 4) 이면 Z[√D] 의 단위 ε₁ 과 그 세제곱근 후보 (지수 [O^× : Z[√D]^×] 는 1 또는 3) 로 구합니다.
    """
    if discriminant <= 0 or is_square(discriminant):
        raise PellSolverError(f"D={discriminant} 은(는) 제곱이 아닌 양수여야 합니다.")
    if discriminant % 4 == 0:
        x, y = _pell_one(discriminant // 4)
        return 2 * x, y
    x1, y1 = _pell_one(discriminant)
    big_x = 2 * x1
    # Tr(η³) = Tr(η)³ − 3·Tr(η)
    for root in Poly(_t**3 - 3 * _t - big_x, _t).ground_roots():
        x = int(root)
        rest = x * x - 4
        if x > 2 and rest % discriminant == 0:
            y, exact = integer_nthroot(rest // discriminant, 2)
            if exact:
                return x, int(y)
    return big_x, 2 * y1
