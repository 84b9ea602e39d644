from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from padic.domain.quad_ext_number import QuadExtNumber
from padic.utils.quadratic import smallest_nonresidue
from pball.domain.ball import Ball
from pball.domain.gamma_element import GammaElement, GammaElementError
from pball.domain.oriented_edge import OrientedEdge
from pball.domain.projective_point import INFINITY
from pball.domain.tree import (
    PointInQpError,
    ball_membership,
    covering,
    distance,
    edges_at,
    reduce_edge,
    reduction_point,
    refine,
    refine_edge,
)
from pball.domain.vertex import Vertex

P = 11

rationals = st.fractions(min_value=-200, max_value=200, max_denominator=200)
words = st.lists(st.sampled_from(["T", "t", "S"]), min_size=1, max_size=8)


def gamma_from_word(word: list[str]) -> GammaElement:
    letters = {
        "T": GammaElement(P, 1, 1, 0, 1),
        "t": GammaElement(P, 1, -1, 0, 1),
        "S": GammaElement(P, 0, -1, 1, 0),
    }
    g = GammaElement.identity(P)
    for letter in word:
        g = g @ letters[letter]
    return g


def test_covering_sizes():
    for depth in (1, 2, 3):
        assert len(covering(P, depth)) == (P + 1) * P ** (depth - 1)


@pytest.mark.parametrize("point", [Fraction(0), Fraction(7, 3), Fraction(121, 5), Fraction(1, 11), INFINITY])
def test_covering_partitions_the_line(point):
    balls = [edge.ball for edge in covering(P, 3)]
    assert sum(ball_membership(point, ball) for ball in balls) == 1


def test_edges_at_vertex_and_refinement():
    origin = Vertex.origin(P)
    edges = edges_at(origin)
    assert len(edges) == P + 1
    assert all(edge.source == origin for edge in edges)
    for edge in edges:
        assert edge.reverse().reverse() == edge
        children = refine_edge(edge)
        assert len(children) == P
        assert all(edge.ball.contains(child.ball) for child in children)


def test_ball_complement_is_disjoint():
    ball = Ball.affine(P, 3, 2)
    assert ball.is_disjoint(ball.complement())
    assert not ball.is_disjoint(Ball.affine(P, 3, 1))


def test_reduce_edge_sends_every_edge_to_the_standard_edge():
    standard = OrientedEdge.standard(P)
    for edge in covering(P, 3):
        gamma, orientation = reduce_edge(edge)
        moved = gamma.act_edge(edge)
        assert moved == (standard if orientation == 1 else standard.reverse())


def test_distance_matches_distance_from_origin():
    origin = Vertex.origin(P)
    for edge in covering(P, 3):
        v = edge.target
        assert distance(origin, v) == v.distance_from_origin() == 3
        assert distance(v, origin) == distance(origin, v)
    assert distance(Vertex.make(P, 0, 2), Vertex.make(P, 1, 2)) == 4


def test_gamma_rejects_bad_entries():
    with pytest.raises(GammaElementError):
        GammaElement(P, 2, 0, 0, 1)
    with pytest.raises(GammaElementError):
        GammaElement(P, Fraction(1, 3), 0, 0, 3)


@settings(max_examples=50, deadline=None)
@given(words, words, rationals)
def test_action_axioms(first, second, x):
    g, h = gamma_from_word(first), gamma_from_word(second)
    assert (g @ h).act_point(x) == g.act_point(h.act_point(x))
    assert g.inverse().act_point(g.act_point(x)) == x


@settings(max_examples=30, deadline=None)
@given(words, words)
def test_action_on_edges_is_compatible(first, second):
    g, h = gamma_from_word(first), gamma_from_word(second)
    edge = OrientedEdge.standard(P)
    assert (g @ h).act_edge(edge) == g.act_edge(h.act_edge(edge))
    assert g.act_edge(edge.reverse()) == g.act_edge(edge).reverse()


def test_refine_splits_a_ball_into_p_children():
    ball = Ball.affine(P, 3, 2)
    children = refine(ball)
    assert len(children) == P
    assert all(ball.contains(child) and child.level == 3 for child in children)
    assert all(a.is_disjoint(b) for i, a in enumerate(children) for b in children[i + 1 :])


def test_gamma0_membership():
    assert GammaElement(P, 1, 0, P, 1).in_gamma0()
    assert GammaElement(P, 1, 1, 0, 1).in_gamma0()
    assert not GammaElement(P, 0, -1, 1, 0).in_gamma0()


def test_reduction_point():
    eps = smallest_nonresidue(P)
    assert reduction_point(QuadExtNumber.from_coords(P, eps, 3, 1, 10)) == Vertex.origin(P)
    assert reduction_point(QuadExtNumber.from_coords(P, eps, 3, P, 10)) == Vertex.make(P, 3, 1)
    with pytest.raises(PointInQpError):
        reduction_point(QuadExtNumber.from_coords(P, eps, 3, 0, 10))
