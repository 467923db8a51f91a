import random
from fractions import Fraction as Q

import pytest

from liftkit.errors import InputError, NotFullDimensional, NotPsd
from liftkit.lift import ConeLift
from liftkit.liftgen import (
    Obdd,
    ball_lmi,
    birkhoff_lift,
    chain_polytope,
    chain_polytope_lift,
    comparability_graph,
    cross_polytope_lift,
    epigraph_member,
    function_polytope,
    klevel_sos_lift,
    obdd_flow_lift,
    obdd_from_function,
    order_polytope,
    quadratic_value,
    random_poset,
    theta_body_lift,
    three_element_posets,
    verify_lift,
    xor_obdd,
)
from liftkit.liftgen.poset import Poset
from liftkit.polytope import cross_polytope, cube, h_to_v, permutahedron, v_to_h
from liftkit.ratcore import Matrix, psd_check

from conftest import load, polytope


def projected_vertices(L):
    Q_ = h_to_v(L.hrep)
    return {L.project(z) for z in Q_.vertices}


def test_cross_polytope_lift():
    for n in (3, 4):
        L = cross_polytope_lift(n)
        assert L.size == 2 * n
        assert verify_lift(cross_polytope(n), L).tier == "exact"


def test_birkhoff_lift_small():
    L = birkhoff_lift(3)
    assert L.size == 9
    assert verify_lift(permutahedron(3), L)


def test_wrong_lift_is_rejected():
    L = cross_polytope_lift(3)
    res = verify_lift(cube(3), L)
    assert not res and res.tier == "false"


def test_xor_diagram_and_flow_lift():
    b = xor_obdd(3)
    assert len(b.arcs()) == 10
    L = obdd_flow_lift(b)
    assert projected_vertices(L) == set(function_polytope(b).vertices)


def test_obdd_from_function_and_zero_suppressed():
    f = lambda x: int(x[0] + x[1] + x[2] >= 2)  # noqa: E731
    b = obdd_from_function(3, f)
    assert all(b.evaluate(x) == f(x) for x in b.true_points()) and len(b.true_points()) == 4
    z = Obdd(2, (("r", 1, "s", "T"), ("s", 2, None, "T")), (("T", 1),), "r", zero_suppressed=True)
    pts = {tuple(p) for p in z.true_points()}
    assert pts == {(1, 0), (0, 1)}
    L = obdd_flow_lift(z)
    assert projected_vertices(L) == set(function_polytope(z).vertices)


def test_obdd_rejects_skipping_arc():
    b = Obdd(2, (("r", 1, "F", "T"),), (("F", 0), ("T", 1)), "r")
    with pytest.raises(InputError):
        obdd_flow_lift(b)


def test_chain_and_order_polytopes():
    for P in three_element_posets():
        C = chain_polytope(P)
        assert set(C.vertices) == {tuple(Q(x) for x in a) for a in P.antichains()}
        O = order_polytope(P)
        assert O.nfacets == len(P.covers) + len(P.minimal()) + len(P.maximal())
        assert set(O.vertices) == {tuple(Q(x) for x in f) for f in P.filters()}
        L = chain_polytope_lift(P)
        assert projected_vertices(L) == set(C.vertices)


def test_random_chain_lifts():
    rng = random.Random(3)
    for k in (4, 5, 6):
        P = random_poset(k, rng)
        assert verify_lift(chain_polytope(P), chain_polytope_lift(P)).tier == "exact"


def test_poset_cycle_rejected():
    with pytest.raises(InputError):
        Poset.from_relations(["a", "b"], [("a", "b"), ("b", "a")])


def test_theta_body_comparability_graph_certified():
    G = load("path4.graph", "graph")
    S, L = theta_body_lift(G)
    assert verify_lift(S, L).tier == "certified"
    P = load("zigzag4.poset", "poset")
    assert comparability_graph(P) == G


def test_theta_body_odd_cycle_is_forward_only():
    S, L = theta_body_lift(load("c5.graph", "graph"))
    res = verify_lift(S, L)
    assert res.ok and res.tier == "forward-only"


def test_klevel_square_is_elliptope():
    L = klevel_sos_lift(cube(2))
    assert L.lmi.names == ("x1", "x2", "x1*x2")
    assert L.size == 3
    assert L.lmi.evaluate((0, 0, 0)) == Matrix.identity(3)
    assert verify_lift(cube(2), L).tier == "certified"


def test_klevel_cube_and_cross():
    assert klevel_sos_lift(cube(3)).size == 4
    assert verify_lift(cross_polytope(3), klevel_sos_lift(cross_polytope(3))).tier == "certified"


def test_klevel_hexagon_three_levels():
    L = klevel_sos_lift(polytope("hexagon.vpoly"))
    assert L.meta["k"] == 3 and L.size == 6
    assert verify_lift(polytope("hexagon.vpoly"), L).ok


def test_klevel_needs_full_dimension():
    with pytest.raises(NotFullDimensional):
        klevel_sos_lift(v_to_h([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))


def test_epigraph_lmi():
    A, b, c = load("quad2.quad", "quad")
    for x in [(0, 0), (1, -1), (Q(1, 2), 3)]:
        f = quadratic_value(A, b, c, x)
        assert epigraph_member(A, b, c, x, f)
        assert not epigraph_member(A, b, c, x, f - Q(1, 100))
    with pytest.raises(NotPsd):
        epigraph_member(Matrix([[1, 0], [0, -1]]), (0, 0), 0, (0, 0), 1)


def test_ball_lmi():
    lmi = ball_lmi(2)
    assert psd_check(lmi.evaluate((Q(3, 5), Q(4, 5))))
    assert not psd_check(lmi.evaluate((1, 1)))
    assert isinstance(ConeLift("psd", 2, Matrix.identity(2), lmi=lmi).size, int)
