from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liftkit.errors import NotContained
from liftkit.polytope import cube, v_to_h
from liftkit.slack import (
    generalized_slack,
    is_slack_nonnegative,
    slack_matrix,
    transpose_polar_check,
    verify_slack_entries,
)

from conftest import load, p7


def test_p7_slack_and_rank():
    S = slack_matrix(p7())
    assert S.matrix == load("p7.slack", "slack")
    assert S.rank() == 4
    assert S.convention == "unit-rhs"
    assert verify_slack_entries(p7(), S) is None


def test_integer_convention_off_origin():
    P = v_to_h([(0, 0), (1, 0), (0, 1)])
    S = slack_matrix(P)
    assert S.convention == "integer" and is_slack_nonnegative(S.matrix)


def test_generalized_slack_nested_squares():
    inner = cube(2)
    big = v_to_h([(2, 2), (2, -2), (-2, 2), (-2, -2)])
    G = generalized_slack(inner, big)
    assert all(x == Q(1, 2) or x == Q(3, 2) for row in G.matrix.rows for x in row)
    assert generalized_slack(inner, inner).matrix == slack_matrix(inner).matrix
    with pytest.raises(NotContained) as exc:
        generalized_slack(big, inner)
    assert "vertex" in exc.value.detail


@st.composite
def polytopes(draw):
    d = draw(st.integers(2, 3))
    k = draw(st.integers(1, 6))
    pts = [tuple(draw(st.integers(-3, 3)) for _ in range(d)) for _ in range(k)]
    box = [tuple(s if j == i else 0 for j in range(d)) for i in range(d) for s in (-4, 4)]
    return v_to_h(pts + box)


@given(polytopes())
def test_transpose_polar_identity(P):
    assert transpose_polar_check(P)
    S = slack_matrix(P).matrix
    assert is_slack_nonnegative(S)
    assert S.rank() == P.dim + 1
