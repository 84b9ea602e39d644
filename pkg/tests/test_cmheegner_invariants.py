import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmheegner.application.usecase.cm_heegner_usecase import CMHeegnerUseCase, TorusLabelError
from cmheegner.domain.cm_point import CMPoint, CMPointError, class_number
from cmheegner.domain.torus import TorusEmbedding, coset_count
from padic.domain.quad_ext_number import QuadExtNumber
from pball.domain.tree import edges_at

TOLERANCE = 1e-6


@pytest.fixture(scope="module")
def cm(symbols, integration) -> CMHeegnerUseCase:
    return CMHeegnerUseCase(symbols, integration, tolerance=1e-5, dps=30)


@pytest.fixture(scope="module")
def point67() -> CMPoint:
    return CMPoint(11, 1, 1, 17, 12)


@pytest.fixture(scope="module")
def point8() -> CMPoint:
    return CMPoint(37, 1, 0, 2, 8)


@pytest.mark.parametrize("discriminant, expected", [(-3, 1), (-8, 1), (-20, 2), (-23, 3), (-67, 1)])
def test_class_number(discriminant, expected):
    assert class_number(discriminant) == expected


@pytest.mark.parametrize(
    "form",
    [
        (1, 0, -2),
        (-1, -1, -17),
        (2, 2, 34),
        (1, 0, 5),
        (1, 1, 2),
    ],
)
def test_cm_point_validation(form):
    with pytest.raises(CMPointError):
        CMPoint(11, *form, 12)


def test_period_lattice(cm, curve11):
    report = cm.lattice_report(curve11)
    assert report.discriminant_error < 1e-12
    assert report.doubling_gap < 1e-12
    lattice = cm.complex_lattice(curve11)
    assert lattice.contains(2 * lattice.omega1 - 3 * lattice.omega2, TOLERANCE)


def test_edge_values_are_harmonic(cm, curve11, point67):
    vertices = [point67.fixed_vertex] + [edge.target for edge in edges_at(point67.fixed_vertex)[:3]]
    for vertex in vertices:
        assert cm.vertex_sum(curve11, point67, vertex) < TOLERANCE


@pytest.mark.parametrize("level", [1, 2])
def test_pushforward_onto_torus(cm, point67, level):
    report = cm.pushforward_check(point67, level)
    assert report.cosets == coset_count(11, level)
    assert report.passed


def test_labels_are_distinct(cm, curve11, point67):
    derivative = cm.kolyvagin_derivative(curve11, point67, 1)
    labels = derivative.labels()
    assert len(labels) == len(set(labels)) == 12
    embedding = TorusEmbedding(point67)
    assert all(embedding.has_unit_norm(label, 1) for label in labels)


def test_reference_edge_has_label_one(cm, point67):
    embedding = TorusEmbedding(point67)
    one = embedding.label_of(embedding.one(), 2)
    assert cm.torus_label(point67, cm.reference_edge(point67, 2), 2) == one


def test_torus_label_rejects_edges_at_wrong_distance(cm, point67):
    edge = cm.level_edges(point67, 2)[0]
    with pytest.raises(TorusLabelError):
        cm.torus_label(point67, edge, 1)


def test_shadow_lies_in_lattice(cm, curve11, point67):
    approx = cm.plectic_invariant(curve11, point67, 1)
    assert approx.shadow_distance(cm.complex_lattice(curve11)) < TOLERANCE
    assert approx.error_bound < 1e-8 * cm.complex_lattice(curve11).scale * len(approx.terms)


def test_levels_are_compatible(cm, curve11, point67):
    assert cm.level_compatibility(curve11, point67, 1) < TOLERANCE


def test_trace_compatibility_for_split_curve(cm, curve11, point67):
    record = cm.trace_compat_check(curve11, point67, 1)
    assert record.twisted
    assert len(record.residuals) == 12
    assert record.residual < TOLERANCE
    # a_p = +1 이면 두 형태가 같습니다
    untwisted = cm.trace_compat_check(curve11, point67, 1, twisted=False)
    assert untwisted.residuals == record.residuals


def test_untwisted_trace_fails_for_non_split_curve(cm, curve37, point8):
    twisted = cm.trace_compat_check(curve37, point8, 1, twisted=True)
    untwisted = cm.trace_compat_check(curve37, point8, 1, twisted=False)
    assert twisted.residual < TOLERANCE
    assert untwisted.residual > 1e-4


def test_anticyclotomic_table(cm, curve11, point67):
    table = cm.anticyclotomic_table(curve11, point67, 1)
    assert len(table) == coset_count(11, 1)
    embedding = TorusEmbedding(point67)
    assert all(embedding.edge_label(value.edge, 1) == label for label, value in table.items())


@settings(max_examples=50, deadline=None)
@given(
    st.integers(min_value=0, max_value=120),
    st.integers(min_value=0, max_value=120),
    st.sampled_from([1, 2]),
    st.integers(min_value=0, max_value=10_000),
)
def test_torus_labels_are_equivariant(cm, point67, a, b, level, index):
    if a % 11 == 0 and b % 11 == 0:
        return
    embedding = TorusEmbedding(point67)
    beta = QuadExtNumber.from_coords(11, embedding.nonresidue, a, b, point67.precision)
    alpha = beta.conjugate() / beta
    edges = cm.level_edges(point67, level)
    edge = edges[index % len(edges)]
    moved = embedding.rotate_edge(alpha, edge)
    expected = embedding.multiply(embedding.label_of(alpha, level), cm.torus_label(point67, edge, level), level)
    assert cm.torus_label(point67, moved, level) == expected
