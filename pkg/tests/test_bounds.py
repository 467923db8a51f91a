import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liftkit.bounds import (
    bound_report,
    ceil_log2,
    ceil_sqrt,
    degree_bound,
    neighborliness_obstruction,
)
from liftkit.errors import InputError
from liftkit.polytope import cube, cyclic_polytope, permutahedron, std_simplex

from conftest import polytope


@given(st.integers(1, 10 ** 30))
def test_ceil_log2_and_sqrt_exact(v):
    m = ceil_log2(v)
    assert 2 ** m >= v and (m == 0 or 2 ** (m - 1) < v)
    r = ceil_sqrt(v)
    assert r * r >= v and (r - 1) ** 2 < v


@pytest.mark.parametrize("d", [1, 2, 3, 7, 8, 55, 56, 256, 8103, 8104, 10 ** 6])
def test_degree_bound_matches_float_reference(d):
    assert degree_bound(d) == math.ceil(math.sqrt(math.log(d)) - 1e-12)
    assert degree_bound(d, "2") == math.ceil(math.sqrt(math.log2(d)) - 1e-12)


def test_degree_bound_errors():
    with pytest.raises(InputError):
        degree_bound(0)
    with pytest.raises(InputError):
        degree_bound(4, "1")


def test_reports():
    sq = bound_report(cube(2))
    assert (sq.polyhedral, sq.spectrahedral, sq.nfaces) == (4, 3, 10)
    cu = bound_report(cube(3))
    assert (cu.polyhedral, cu.spectrahedral, cu.nfaces) == (5, 4, 28)
    si = bound_report(std_simplex(3))
    assert si.nfaces == 16 and si.polyhedral == 4
    oc = bound_report(polytope("octagon.vpoly"))
    assert oc.bounds["goemans"] == 3 and oc.nfaces == 18
    pe = bound_report(permutahedron(4))
    assert pe.bounds["goemans"] == 5 and pe.nfaces == 76
    assert set(pe.citations) == set(pe.bounds)


def test_neighborliness_report():
    r = neighborliness_obstruction(cyclic_polytope(4, [0, 1, 2, 3, 4, 5]), 2)
    assert r.neighborly and r.first_failure is None
    r = neighborliness_obstruction(cube(3), 2)
    assert not r.neighborly and len(r.first_failure) == 2
