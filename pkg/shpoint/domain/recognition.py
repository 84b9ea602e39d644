import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix

from modsym.utils.curve_arithmetic import Coefficients, rational_torsion
from padic.domain.quad_ext_number import QuadExtNumber
from shpoint.domain.quadratic_field import QuadraticFieldElement
from shpoint.utils.weierstrass import add_points, lift_x, multiply

logger = logging.getLogger(__name__)

# 재구성을 시도하는 높이 상한
HEIGHT_BOUNDS = (10**2, 10**3, 10**4)


def height_bounds(limit: int) -> tuple[int, ...]:
    """limit 이하의 기본 상한들과 limit 자신. 작은 상한부터 시도합니다."""
    if limit < 1:
        raise ValueError(f"높이 상한은 1 이상이어야 합니다: {limit}")
    return tuple(b for b in HEIGHT_BOUNDS if b < limit) + (limit,)


class RecognitionError(ValueError):
    pass


@dataclass(frozen=True)
class Recognition:
    x: QuadraticFieldElement
    y: QuadraticFieldElement
    bound: int
    precision: int

    @property
    def height(self) -> int:
        return self.x.height()


def embed(value: QuadraticFieldElement, sqrt_d: QuadExtNumber):
    """Q(√D) → K_p (√D ↦ sqrt_d)."""
    rational = QuadExtNumber.from_coords(sqrt_d.prime, sqrt_d.nonresidue, value.rational, 0, sqrt_d.precision)
    return rational + value.irrational * sqrt_d


def _relation_candidates(x: QuadExtNumber, sqrt_d: QuadExtNumber) -> tuple[int, list[tuple[int, int, int]]]:
    """
    C·p^e·X ≡ A + B·√D (mod p^M) 인 짧은 (A, B, C) 들을 LLL 로 찾습니다.
    돌려주는 e 는 X 의 극 차수 (v(X) < 0 일 때 −v(X), 아니면 0).
    """
    prime = x.prime
    shift = max(0, -int(x.valuation))
    scaled = x * Fraction(prime) ** shift
    modulus_exponent = int(scaled.absolute_precision)
    modulus = prime**modulus_exponent
    xi_a = int(scaled.a.to_fraction() % modulus) if not scaled.a.is_zero else 0
    xi_b = int(scaled.b.to_fraction() % modulus) if not scaled.b.is_zero else 0
    # sqrt_d = y0·s
    y0 = sqrt_d.coord_b * prime ** int(sqrt_d.valuation)
    xi_b = (xi_b * pow(y0, -1, modulus)) % modulus
    rows = [
        [ZZ(modulus), ZZ(0), ZZ(0)],
        [ZZ(0), ZZ(modulus), ZZ(0)],
        [ZZ(xi_a), ZZ(xi_b), ZZ(1)],
    ]
    reduced = DomainMatrix(rows, (3, 3), ZZ).lll().to_list()
    return shift, [tuple(int(v) for v in row) for row in reduced]


def recognize(
    x: QuadExtNumber,
    discriminant: int,
    bound: int,
    coeffs: Coefficients,
    sqrt_d: QuadExtNumber,
) -> Recognition:
    """
    X ∈ K_p 를 높이 ≤ bound 인 x ∈ Q(√D) 로 재구성하고 E(Q(√D)) 위의 점인지 정확히 확인합니다.
    후보가 없으면 RecognitionError.
    """
    shift, rows = _relation_candidates(x, sqrt_d)
    prime = x.prime
    for a, b, c in rows:
        if c == 0 or max(abs(a), abs(b), abs(c)) > bound:
            continue
        candidate = QuadraticFieldElement.from_parts(discriminant, a, b, c * prime**shift)
        point = lift_x(coeffs, candidate)
        if point is None:
            logger.debug(f"[recognize] 후보 x={candidate} 위에 E(Q(√{discriminant})) 의 점이 없습니다.")
            continue
        return Recognition(x=candidate, y=point[1], bound=bound, precision=int(x.absolute_precision))
    raise RecognitionError(f"높이 {bound} 이하에서 Q(√{discriminant}) 의 x 좌표를 찾지 못했습니다.")


def point_search(coeffs: Coefficients, discriminant: int, bound: int) -> list[tuple]:
    """x = (a + b√D)/c, max(|a|, |b|, |c|) ≤ bound 인 E(Q(√D)) 의 점 (무차별 탐색)."""
    found = []
    for c in range(1, bound + 1):
        for a in range(-bound, bound + 1):
            for b in range(-bound, bound + 1):
                if math.gcd(math.gcd(a, b), c) != 1:
                    continue
                point = lift_x(coeffs, QuadraticFieldElement.from_parts(discriminant, a, b, c))
                if point is not None:
                    found.append(point)
    logger.debug(f"[point_search] D={discriminant}, 높이 ≤ {bound}: 점 {len(found)}개")
    return found


def torsion_points(coeffs: Coefficients, discriminant: int) -> list[tuple]:
    return [
        (QuadraticFieldElement(discriminant, x), QuadraticFieldElement(discriminant, y))
        for x, y in rational_torsion(coeffs)
    ]


def matches_search(
    recognized: Recognition,
    found: list[tuple],
    coeffs: Coefficients,
    discriminant: int,
    max_multiple: int,
) -> bool:
    """인식된 x 가 탐색점들의 k배 (|k| ≤ max_multiple) 와 꼬임점 합의 x 좌표인지."""
    torsion = [None, *torsion_points(coeffs, discriminant)]
    for point in found:
        for k in range(1, max_multiple + 1):
            multiple = multiply(coeffs, k, point)
            for t in torsion:
                shifted = add_points(coeffs, multiple, t)
                if shifted is not None and shifted[0] == recognized.x:
                    return True
    return False
