import math
from dataclasses import dataclass, field
from fractions import Fraction

from sympy import Matrix, eye, zeros

from modsym.domain.manin_basis import ManinBasis
from modsym.utils.continued_fraction import Matrix2, unimodular_pieces
from modsym.utils.hecke import hecke_rows
from pball.domain.projective_point import Cusp, mobius

PLUS = 1
MINUS = -1


class EigenspaceDimensionError(ValueError):
    pass


def _row_matrix(rows: list[dict[int, int]], size: int) -> Matrix:
    out = zeros(len(rows), size)
    for i, row in enumerate(rows):
        for j, value in row.items():
            out[i, j] = value
    return out


def _primitive(vector: Matrix) -> tuple[int, ...]:
    values = [Fraction(int(v.p), int(v.q)) for v in vector]
    scale = math.lcm(*(v.denominator for v in values))
    ints = [int(v * scale) for v in values]
    content = math.gcd(*ints)
    return tuple(v // content for v in ints)


def _orient(values: tuple[int, ...], preferred: int | None) -> tuple[int, ...]:
    """preferred 인덱스 값이 양수가 되게, 0 이면 첫 0 아닌 성분이 양수가 되게."""
    if preferred is not None and values[preferred] != 0:
        pivot = values[preferred]
    else:
        pivot = next(v for v in values if v != 0)
    return values if pivot > 0 else tuple(-v for v in values)


def solve_sign(basis: ManinBasis, eigenvalues: dict[int, int], sign: int) -> tuple[int, ...]:
    """
    ι φ = sign·φ 이고 모든 ℓ 에 대해 T_ℓ φ = a_ℓ φ 인 범함수 φ (기호 (c:d) 마다 정수 값).
    """
    size = len(basis.line)
    transpose = basis.reduction.T
    star = zeros(size, size)
    for x in range(size):
        star[x, basis.star_image(x)] = 1
    constraints = [star - sign * eye(size)]
    constraints.extend(
        _row_matrix(hecke_rows(basis.line, ell), size) - a_ell * eye(size) for ell, a_ell in sorted(eigenvalues.items())
    )

    kernel = eye(basis.dim())
    for constraint in constraints:
        null = (constraint * transpose * kernel).nullspace()
        if not null:
            kernel = zeros(basis.dim(), 0)
            break
        kernel = kernel * Matrix.hstack(*null)
    if kernel.cols != 1:
        label = "+" if sign == PLUS else "−"
        raise EigenspaceDimensionError(
            f"{label} 고유공간의 차원이 {kernel.cols} 입니다 (1 이어야 함); 곡선 또는 도체 입력을 확인해 주세요."
        )
    return _primitive(transpose * kernel)


@dataclass(frozen=True)
class EigenSymbol:
    """
    ± 로 정규화된 정수값 무게 2 모듈러 기호. plus/minus 는 P¹(F_p) 의 각 기호 (c:d) 에서의 값입니다.

    부호 규약: m⁺[0,∞] = m⁺(0:1) ≥ 0 (0 이면 첫 0 아닌 성분이 양수), m⁻ 는 첫 0 아닌 성분이 양수.
    """

    basis: ManinBasis
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    ap: int
    eigenvalues: dict[int, int] = field(default_factory=dict, compare=False)

    @classmethod
    def solve(cls, basis: ManinBasis, eigenvalues: dict[int, int], ap: int) -> "EigenSymbol":
        zero_infinity = basis.line.index(0, 1)
        plus = _orient(solve_sign(basis, eigenvalues, PLUS), zero_infinity)
        minus = _orient(solve_sign(basis, eigenvalues, MINUS), None)
        return cls(basis=basis, plus=plus, minus=minus, ap=ap, eigenvalues=dict(eigenvalues))

    @property
    def prime(self) -> int:
        return self.basis.prime

    def symbol(self, c: int, d: int) -> tuple[int, int]:
        k = self.basis.line.index(c, d)
        return self.plus[k], self.minus[k]

    def piece(self, g: Matrix2) -> tuple[int, int]:
        """g{0, ∞} 의 값 = 아래 행 (c:d) 의 Manin 기호 값."""
        return self.symbol(g[2], g[3])

    def evaluate(self, r: Cusp, s: Cusp) -> tuple[int, int]:
        """m^±[r, s] (정칙 연분수 경로)."""
        plus = minus = 0
        for sign, g in unimodular_pieces(r, s):
            value = self.piece(g)
            plus += sign * value[0]
            minus += sign * value[1]
        return plus, minus

    def generator_values(self) -> tuple[Matrix, Matrix]:
        free = self.basis.free
        return Matrix([self.plus[k] for k in free]), Matrix([self.minus[k] for k in free])

    def evaluate_direct(self, r: Cusp, s: Cusp) -> tuple[int, int]:
        """올림 연분수 경로와 자유 생성원 좌표로 계산하는 두 번째 경로."""
        gen_plus, gen_minus = self.generator_values()
        plus = minus = 0
        for sign, g in unimodular_pieces(r, s, ceiling=True):
            coords = self.basis.coordinates(g[2], g[3])
            plus += sign * int((coords.T * gen_plus)[0, 0])
            minus += sign * int((coords.T * gen_minus)[0, 0])
        return plus, minus

    def evaluate_translate(self, entries: tuple, r: Cusp, s: Cusp) -> tuple[int, int]:
        """m^±[γr, γs]."""
        return self.evaluate(mobius(entries, r), mobius(entries, s))

    def hecke_defect(self, n: int, eigenvalue: int) -> tuple[int, int]:
        """Σ_x |φ(T_n x) − a·φ(x)| 를 부호별로. 0 이면 고유 관계가 정확히 성립합니다."""
        rows = hecke_rows(self.basis.line, n)
        defects = []
        for values in (self.plus, self.minus):
            total = 0
            for x, row in enumerate(rows):
                image = sum(count * values[y] for y, count in row.items())
                total += abs(image - eigenvalue * values[x])
            defects.append(total)
        return defects[0], defects[1]
