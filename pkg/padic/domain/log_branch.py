from dataclasses import dataclass

from padic.domain.padic_number import PadicDivisionByZeroError, PadicNumber
from padic.domain.quad_ext_number import QuadExtNumber

Number = PadicNumber | QuadExtNumber


@dataclass(frozen=True)
class LogBranch:
    """
    log(p) 에 배정한 상수 λ 로 정해지는 p-진 log 의 분지.

    log(p^k·u) = k·λ + log⁰(⟨u⟩). λ = 0 이면 Iwasawa 분지(log⁰),
    log_q 분지는 λ_q = −log⁰⟨q⟩ / ord_p(q).
    """

    constant: Number
    name: str = "log0"

    @classmethod
    def iwasawa(cls, prime: int, precision: int) -> "LogBranch":
        return cls(PadicNumber.zero(prime, precision), "log0")

    @classmethod
    def from_period(cls, q: PadicNumber) -> "LogBranch":
        """log_q(q) = 0 이 되도록 λ 를 고릅니다."""
        if q.is_zero or q.valuation == 0:
            raise ValueError("Tate 주기는 양의 값매김을 가져야 합니다.")
        return cls(-q.angle().log0() / int(q.valuation), "log_q")

    def log(self, x: Number) -> Number:
        if x.is_zero:
            raise PadicDivisionByZeroError("0 의 log 는 정의되지 않습니다.")
        return x.angle().log0() + self.constant * int(x.valuation)

    def combine(self, log_part: Number, ord_part) -> Number:
        """log⁰ 부분과 ord 부분을 이 분지로 합칩니다: log⁰ + λ·ord."""
        return log_part + self.constant * ord_part
