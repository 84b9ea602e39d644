from dataclasses import dataclass


@dataclass(frozen=True)
class LatticeReport:
    discriminant_error: float
    doubling_gap: float


@dataclass(frozen=True)
class PushforwardReport:
    level: int
    cosets: int
    fixed_points: bool
    bijective: bool
    refines: bool

    @property
    def passed(self) -> bool:
        return self.fixed_points and self.bijective and self.refines


@dataclass(frozen=True)
class TraceCompatRecord:
    level: int
    twisted: bool
    residuals: tuple[float, ...]

    @property
    def residual(self) -> float:
        return max(self.residuals, default=0.0)
