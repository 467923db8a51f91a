from fractions import Fraction as Q

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st
from scipy.spatial import ConvexHull

from liftkit.errors import Infeasible, OriginNotInterior, Unbounded
from liftkit.polytope import (
    HRep,
    cube,
    cyclic_polytope,
    exposing_functional,
    face_lattice,
    h_to_v,
    is_k_neighborly,
    levelness,
    neighborliness,
    permutahedron,
    polar,
    slack_levels,
    std_simplex,
    v_to_h,
)

from conftest import load, p7, polytope


def test_cross_polytope_facets():
    P = v_to_h([(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
    assert P.nfacets == 8
    assert {a for a, b in P.facets} == {(Q(s1), Q(s2), Q(s3)) for s1 in (-1, 1) for s2 in (-1, 1) for s3 in (-1, 1)}
    assert all(b == 1 for _, b in P.facets)


def test_segment():
    P = v_to_h([(0,), (1,)])
    assert set(P.facets) == {((Q(1),), Q(1)), ((Q(-1),), Q(0))}


def test_lower_dimensional_input_carries_equations():
    P = v_to_h([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert P.dim == 2 and len(P.equations) == 1 and P.nfacets == 3


def test_p7_facets_match_file_up_to_scaling():
    P = polytope("p7.vpoly")
    H = load("p7.hpoly")
    assert set(P.facets) == set(H.ineqs)


def test_h_to_v_cube_and_octagon():
    assert h_to_v(cube(3).hrep()).nvertices == 8
    octo = polytope("octagon.vpoly")
    assert h_to_v(octo.hrep()).nvertices == 8


def test_h_to_v_errors():
    with pytest.raises(Infeasible):
        h_to_v(HRep.make([((1,), 0), ((-1,), -1)]))
    with pytest.raises(Unbounded):
        h_to_v(HRep.make([((1, 0), 1), ((0, 1), 1)]))


def test_polar_of_p7():
    Pp = polar(p7())
    expected = {(1, 0, 0), (-1, 0, 0), (0, 0, -2), (0, -1, 0), (0, 2, 2), (1, Q(1, 2), 1), (-1, Q(1, 2), 1)}
    assert set(Pp.vertices) == {tuple(Q(x) for x in v) for v in expected}


def test_polar_needs_interior_origin():
    with pytest.raises(OriginNotInterior):
        polar(std_simplex(2))


def test_face_counts():
    assert len(face_lattice(cube(2))) == 10
    L = face_lattice(polytope("prism.vpoly"))
    assert L.f_vector() == (1, 6, 9, 5, 1)
    assert len(face_lattice(cube(3))) == 28


def test_hexagon_levels():
    P = polytope("hexagon.vpoly")
    assert slack_levels(P) == [(0, 1, 2)] * 6
    assert levelness(P) == 3


def test_neighborliness():
    assert neighborliness(cyclic_polytope(4, [0, 1, 2, 3, 4, 5])) == 2
    ok, bad = is_k_neighborly(cube(3), 2)
    assert not ok and exposing_functional(cube(3), bad) is None
    assert permutahedron(3).nvertices == 6


def _vset(P):
    return set(P.vertices)


@st.composite
def point_sets(draw):
    d = draw(st.integers(2, 3))
    k = draw(st.integers(d + 1, 8))
    pts = [tuple(draw(st.integers(-3, 3)) for _ in range(d)) for _ in range(k)]
    return d, pts


@given(point_sets())
def test_v_h_round_trip_against_convex_hull_oracle(arg):
    d, pts = arg
    arr = np.array(pts, dtype=float)
    assume(np.linalg.matrix_rank(arr[1:] - arr[0]) == d)
    P = v_to_h(pts)
    R = h_to_v(P.hrep())
    assert _vset(R) == _vset(P)
    hull = ConvexHull(arr)
    assert _vset(P) == {tuple(Q(int(x)) for x in arr[i]) for i in hull.vertices}
    assert all(P.contains(p) for p in pts)


@given(point_sets())
def test_polar_involution(arg):
    d, pts = arg
    box = [tuple(s if j == i else 0 for j in range(d)) for i in range(d) for s in (-4, 4)]
    P = v_to_h(pts + box)
    assert P.origin_interior()
    assert _vset(polar(polar(P))) == _vset(P)
    assert polar(P).nvertices == P.nfacets
