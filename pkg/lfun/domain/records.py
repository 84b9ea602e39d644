from dataclasses import dataclass

from padic.domain.padic_number import PadicNumber

Pair = tuple[int, int]


@dataclass(frozen=True)
class InterpolationRecord:
    integers: Pair
    multiples_of_p: Pair
    units: Pair

    @property
    def consistent(self) -> bool:
        return all(u == z - m for u, z, m in zip(self.units, self.integers, self.multiples_of_p))


@dataclass(frozen=True)
class LpRecord:
    value: Pair
    derivative: tuple[PadicNumber, PadicNumber]
    depth: int


@dataclass(frozen=True)
class TwistedPartial:
    a: int
    c: int
    integers: Pair
    units: Pair
    derivative: tuple[PadicNumber, PadicNumber]
    depth: int


@dataclass(frozen=True)
class MttRecord:
    residual_valuation: float
    ord_part: Pair
    expected_ord: Pair
    l_value: Pair
    depth: int
    passed: bool
