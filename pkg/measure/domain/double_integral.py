from dataclasses import dataclass
from fractions import Fraction

from padic.domain.log_branch import LogBranch
from padic.domain.quad_ext_number import QuadExtNumber


@dataclass(frozen=True)
class RiemannSum:
    """Σ_U μ^±(U)·K(t_U). 정확 핵이면 정수, 아니면 K_p 값."""

    plus: object
    minus: object
    depth: int
    terms: int


@dataclass(frozen=True)
class OrdIntegral:
    plus: int
    minus: int
    depth: int
    confirm_depth: int

    @property
    def pair(self) -> tuple[int, int]:
        return self.plus, self.minus


@dataclass(frozen=True)
class DoubleIntegral:
    """
    곱셈적 이중 적분 ×∫∫ 의 Λ_f 좌표별 세 부분.

    log_part 는 log⁰ 부분, ord_part 는 p 지수, residue 는 Teichmüller 부분의 잉여류
    (정밀도 1 의 단위원)입니다. 분지 log 값은 log⁰ + λ·ord.
    """

    log_part: tuple[QuadExtNumber, QuadExtNumber]
    ord_part: tuple[Fraction, Fraction]
    residue: tuple[QuadExtNumber, QuadExtNumber]
    depth: int

    def value(self, branch: LogBranch) -> tuple[QuadExtNumber, QuadExtNumber]:
        return tuple(branch.combine(log, ord_) for log, ord_ in zip(self.log_part, self.ord_part))

    def __add__(self, other: "DoubleIntegral") -> "DoubleIntegral":
        return DoubleIntegral(
            tuple(a + b for a, b in zip(self.log_part, other.log_part)),
            tuple(a + b for a, b in zip(self.ord_part, other.ord_part)),
            tuple(a * b for a, b in zip(self.residue, other.residue)),
            min(self.depth, other.depth),
        )

    def scale(self, k: int) -> "DoubleIntegral":
        return DoubleIntegral(
            tuple(k * a for a in self.log_part),
            tuple(k * a for a in self.ord_part),
            tuple(a**k for a in self.residue),
            self.depth,
        )

    def __neg__(self) -> "DoubleIntegral":
        return self.scale(-1)

    def __sub__(self, other: "DoubleIntegral") -> "DoubleIntegral":
        return self + (-other)

    def multiplicative(self, index: int, precision: int) -> QuadExtNumber:
        """ζ · p^ord · exp(log⁰) (ord 가 정수일 때). index 0 은 +, 1 은 −."""
        ord_ = Fraction(self.ord_part[index])
        if ord_.denominator != 1:
            raise ValueError(f"ord 부분 {ord_} 이(가) 정수가 아니어서 곱셈값을 만들 수 없습니다.")
        residue = self.residue[index]
        zeta = QuadExtNumber(residue.prime, residue.nonresidue, 0, residue.coord_a, residue.coord_b, precision)
        log_part = self.log_part[index]
        exact_zero = log_part.is_zero and log_part.valuation == float("inf")
        one_unit = 1 if exact_zero else log_part.exp()
        return zeta.teichmuller() * one_unit * Fraction(residue.prime) ** int(ord_)
