from dataclasses import dataclass

from sympy import ImmutableMatrix, Matrix, SparseMatrix, isprime, zeros

from modsym.domain.projective_line import ProjectiveLine


class ManinBasisError(ValueError):
    pass


@dataclass(frozen=True)
class ManinBasis:
    """
    Γ₀(p) 의 무게 2 Manin 기호 (c:d) ∈ P¹(F_p) 와 2항/3항 관계식의 몫.

    reduction 의 열 x 는 기호 x 를 자유 생성원들로 쓴 좌표입니다.
    """

    line: ProjectiveLine
    relations: ImmutableMatrix
    free: tuple[int, ...]
    reduction: ImmutableMatrix

    @property
    def prime(self) -> int:
        return self.line.prime

    @property
    def symbols(self) -> list[tuple[int, int]]:
        return list(self.line)

    def dim(self) -> int:
        return len(self.free)

    def star_image(self, index: int) -> int:
        """ι(c:d) = (−c:d)."""
        c, d = self.symbols[index]
        return self.line.index(-c, d)

    def coordinates(self, c: int, d: int) -> Matrix:
        return self.reduction[:, self.line.index(c, d)]


def build_basis(prime: int) -> ManinBasis:
    if not isprime(prime):
        raise ManinBasisError(f"{prime} 은(는) 소수가 아닙니다.")
    if prime < 11:
        raise ManinBasisError(f"p={prime}: 도체 11 미만에는 무게 2 첨점 형식이 없습니다.")
    line = ProjectiveLine(prime)
    n = len(line)
    relations = SparseMatrix(2 * n, n, {})
    for row, (c, d) in enumerate(line):
        # x + x·S, S = [[0,−1],[1,0]]
        relations[row, line.index(c, d)] += 1
        relations[row, line.index(d, -c)] += 1
        # x + x·τ + x·τ², τ = [[0,−1],[1,−1]]
        relations[row + n, line.index(c, d)] += 1
        relations[row + n, line.index(d, -c - d)] += 1
        relations[row + n, line.index(-c - d, c)] += 1

    echelon, pivots = Matrix(relations).rref()
    free = tuple(k for k in range(n) if k not in pivots)
    reduction = zeros(len(free), n)
    for e, col in enumerate(pivots):
        for row, j in enumerate(free):
            reduction[row, col] = -echelon[e, j]
    for row, col in enumerate(free):
        reduction[row, col] = 1
    return ManinBasis(line=line, relations=ImmutableMatrix(relations), free=free, reduction=ImmutableMatrix(reduction))
