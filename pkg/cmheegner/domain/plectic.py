from collections import defaultdict
from dataclasses import dataclass

from cmheegner.domain.complex_lattice import ComplexLattice
from cmheegner.domain.edge_value import EdgeValue
from cmheegner.domain.torus import Label, project_label
from padic.domain.quad_ext_number import QuadExtNumber
from pball.domain.oriented_edge import OrientedEdge


@dataclass(frozen=True)
class KolyvaginTerm:
    edge: OrientedEdge
    value: EdgeValue
    label: Label
    alpha: QuadExtNumber


@dataclass(frozen=True)
class PlecticTerm:
    edge: OrientedEdge
    value: EdgeValue
    label: Label
    coefficient: QuadExtNumber


@dataclass(frozen=True)
class KolyvaginDerivative:
    """Σ y_e ⊗ α_e. α_e 는 표본점의 상 A(t_e), 라벨은 그 mod p^n 잉여류."""

    level: int
    prime: int
    terms: tuple[KolyvaginTerm, ...]

    def labels(self) -> list[Label]:
        return [term.label for term in self.terms]

    def logarithms(self) -> "PlecticApprox":
        """α ↦ log⁰⟨α⟩."""
        return PlecticApprox(
            level=self.level,
            prime=self.prime,
            terms=tuple(
                PlecticTerm(term.edge, term.value, term.label, term.alpha.angle().log0()) for term in self.terms
            ),
        )


@dataclass(frozen=True)
class PlecticApprox:
    """
    Q_n(τ) = Σ y_e ⊗ log⁰⟨α_e⟩ 의 형식 합. 복소 부분과 p진 부분은 섞지 않고
    선형 범함수(계수 ≡ 1, 라벨 사영)로만 읽습니다.
    """

    level: int
    prime: int
    terms: tuple[PlecticTerm, ...]

    @property
    def error_bound(self) -> float:
        return sum(term.value.error_bound for term in self.terms)

    def shadow(self, ctx):
        """계수를 모두 1 로 둔 합. Λ_f 안에 있어야 합니다."""
        return ctx.fsum(term.value.value for term in self.terms)

    def shadow_distance(self, lattice: ComplexLattice) -> float:
        return lattice.relative_distance(self.shadow(lattice.ctx))

    def fiber_sums(self, level: int, ctx) -> dict[Label, object]:
        """라벨을 레벨 level 로 사영해 같은 잉여류의 값을 더합니다 (덮개 순서 유지)."""
        groups: dict[Label, list] = defaultdict(list)
        for term in self.terms:
            groups[project_label(term.label, self.prime, level)].append(term.value.value)
        return {label: ctx.fsum(values) for label, values in groups.items()}
