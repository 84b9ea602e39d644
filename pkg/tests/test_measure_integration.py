from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from measure.application.usecase.integration_usecase import IntegrationUseCase
from measure.domain.harmonic_measure import HarmonicMeasure
from measure.domain.kernel import Kernel, KernelSingularityError
from padic.domain.padic_number import PadicNumber
from padic.domain.quad_ext_number import QuadExtNumber
from padic.utils.quadratic import smallest_nonresidue
from pball.domain.ball import Ball
from pball.domain.gamma_element import GammaElement
from pball.domain.projective_point import INFINITY
from pball.domain.tree import covering, edges_at
from pball.domain.vertex import Vertex

P = 11
N = 10

cusps = st.one_of(st.just(INFINITY), st.fractions(min_value=-30, max_value=30, max_denominator=30))
words = st.lists(st.sampled_from(["T", "S", "D"]), min_size=1, max_size=6)


def gamma_from_word(word: list[str]) -> GammaElement:
    letters = {
        "T": GammaElement(P, 1, 1, 0, 1),
        "S": GammaElement(P, 0, -1, 1, 0),
        "D": GammaElement.diagonal(P, 1),
    }
    g = GammaElement.identity(P)
    for letter in word:
        g = g @ letters[letter]
    return g


def base_points() -> tuple[QuadExtNumber, QuadExtNumber]:
    s = QuadExtNumber.generator(P, smallest_nonresidue(P), N)
    return s, s + 1


def test_harmonic_near_origin(eigen11):
    measure = HarmonicMeasure(eigen11, 0, INFINITY)
    vertices = [Vertex.origin(P)] + [edge.target for edge in covering(P, 2)]
    assert all(measure.check_harmonic(v) for v in vertices)
    assert all(measure.check_total_zero(edge) for edge in edges_at(Vertex.origin(P)))


def test_total_measure_is_zero(eigen11, integration):
    measure = HarmonicMeasure(eigen11, 0, INFINITY)
    total = integration.riemann_integrate(measure, Kernel.constant(P), 2)
    assert (total.plus, total.minus) == (0, 0)


@settings(max_examples=25, deadline=None)
@given(cusps, cusps, words)
def test_measure_is_gamma_equivariant(eigen11, r, s, word):
    gamma = gamma_from_word(word)
    measure = HarmonicMeasure(eigen11, r, s)
    moved = measure.translate(gamma)
    for edge in covering(P, 1):
        assert moved.measure_ball(gamma.act(edge.ball)) == measure.measure_ball(edge.ball)


def test_riemann_sum_does_not_depend_on_thread_count(eigen11):
    measure = HarmonicMeasure(eigen11, 0, INFINITY)
    kernel = Kernel.log_angle(P, N)
    single = IntegrationUseCase(threads=1).riemann_integrate(measure, kernel, 3)
    pooled = IntegrationUseCase(threads=4).riemann_integrate(HarmonicMeasure(eigen11, 0, INFINITY), kernel, 3)
    assert (single.plus, single.minus) == (pooled.plus, pooled.minus)


def test_ord_integral_is_antisymmetric(eigen11, integration):
    measure = HarmonicMeasure(eigen11, 0, INFINITY)
    z1, z2 = base_points()
    forward = integration.ord_integral(measure, z1, z2)
    backward = integration.ord_integral(measure, z2, z1)
    assert forward.pair == (-backward.plus, -backward.minus)


def test_double_integral_parts(eigen11, integration):
    measure = HarmonicMeasure(eigen11, 0, INFINITY)
    z1, z2 = base_points()
    forward = integration.double_integral(measure, z1, z2, 2)
    backward = integration.double_integral(measure, z2, z1, 2)
    assert all((a + b).is_zero for a, b in zip(forward.log_part, backward.log_part))
    assert forward.ord_part == tuple(-v for v in backward.ord_part)


def test_corrupted_memo_breaks_harmonicity(eigen11):
    measure = HarmonicMeasure(eigen11, 0, INFINITY)
    edge = edges_at(Vertex.origin(P))[0]
    plus, minus = measure.measure_ball(edge.ball)
    measure._memo[edge.ball] = (plus + 1, minus)
    assert not measure.check_harmonic(Vertex.origin(P))
    assert not measure.check_total_zero(edge)


def test_coset_indicator_is_integrated_exactly(eigen11, integration):
    measure = HarmonicMeasure(eigen11, 0, INFINITY)
    ball = Ball.affine(P, 3, 2)
    assert Kernel.coset_indicator(ball).is_exact
    assert not Kernel.log_angle(P, N).is_exact
    for depth in (2, 3):
        total = integration.riemann_integrate(measure, Kernel.coset_indicator(ball), depth)
        assert (total.plus, total.minus) == measure.measure_ball(ball)


def test_power_angle_zero_integrates_units(eigen11, integration):
    measure = HarmonicMeasure(eigen11, Fraction(1, 3), INFINITY)
    expected = sum(measure.measure_ball(Ball.affine(P, j, 1))[0] for j in range(1, P))
    total = integration.riemann_integrate(measure, Kernel.power_angle(P, 0, N), 2)
    assert (PadicNumber.from_int(P, expected, N) - total.plus).is_zero


def test_kernel_refuses_straddling_ball():
    with pytest.raises(KernelSingularityError):
        Kernel.log_angle(P, N).locate(Ball.integers(P))
    with pytest.raises(KernelSingularityError):
        Kernel.log_linear(QuadExtNumber.from_coords(P, smallest_nonresidue(P), 3, 0, N))


@pytest.mark.parametrize("depth", [2, 3, 4])
def test_log_kernel_self_convergence(eigen11, integration, depth):
    measure = HarmonicMeasure(eigen11, 0, INFINITY)
    kernel = Kernel.log_angle(P, N)
    coarse = integration.riemann_integrate(measure, kernel, depth)
    fine = integration.riemann_integrate(measure, kernel, depth + 1)
    assert (fine.plus - coarse.plus).valuation >= depth - 2


@pytest.mark.parametrize("depth", [2, 3])
def test_cross_ratio_kernel_self_convergence(eigen11, integration, depth):
    measure = HarmonicMeasure(eigen11, 0, INFINITY)
    kernel = Kernel.log_cross_ratio(*base_points())
    coarse = integration.riemann_integrate(measure, kernel, depth)
    fine = integration.riemann_integrate(measure, kernel, depth + 1)
    assert (fine.plus - coarse.plus).valuation >= depth - 2


def test_teitelbaum_log_is_additive(eigen11, integration):
    measure = HarmonicMeasure(eigen11, 0, INFINITY)
    z1, z2 = base_points()
    z3 = z2 + 1
    assert integration.teitelbaum_log(measure, z1, z1, 2)[0].is_zero
    gap = (
        integration.teitelbaum_log(measure, z1, z2, 2)[0]
        + integration.teitelbaum_log(measure, z2, z3, 2)[0]
        - integration.teitelbaum_log(measure, z1, z3, 2)[0]
    )
    assert gap.valuation >= 1
