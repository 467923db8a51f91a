import math
import random
from fractions import Fraction as Q

import pytest
from hypothesis import given
from hypothesis import strategies as st

from liftkit.errors import DimensionError
from liftkit.honeycomb import (
    LinearSystem,
    default_free_edge,
    eliminate_to_inequalities,
    equivalent,
    honey_cone,
    horn_member,
    implies,
    verify_certificate,
    verify_honeycomb,
)

from conftest import FIXTURES, load

LAM, MU = (1, 0, -1), (2, 1, 0)


def reference_system():
    H = load("honeycomb_n3_reference.hpoly", "hpoly")
    return LinearSystem(("nu1", "nu2", "e"), tuple((tuple(-x for x in a), b) for a, b in H.ineqs))


def reference_labels(spec):
    """Reference edge labels e1..e6 mapped to canonical edge indices."""
    out = {}
    for line in (FIXTURES / "honeycomb_n3_labels.txt").read_text().split("\n"):
        if line.strip():
            name, i, j, k, c = line.split()
            out[name] = spec.edges.index(((int(i), int(j), int(k)), int(c)))
    return out


def test_cone_counts():
    for n, e in ((1, 3), (2, 9), (3, 18)):
        spec = honey_cone(n)
        assert len(spec.edges) == e
        assert len(spec.vertices) == n * n
        assert len(spec.internal) == e - 3 * n == len(spec.gamma)


def test_edge_labels_satisfy_vertex_equations():
    spec = honey_cone(3)
    lab = reference_labels(spec)
    assert lab["e1"] == default_free_edge(spec)
    for nu in [(0, -1, -2), (-1, -1, -1), (Q(-1, 2), Q(-1, 2), -2)]:
        res = horn_member(LAM, MU, nu)
        e = {k: res.edge_values[v] for k, v in lab.items()}
        assert e["e1"] + e["e2"] == 1 and e["e1"] + e["e3"] == 0
        assert e["e3"] + e["e5"] == 1 + nu[2] and e["e5"] + e["e6"] == -nu[1]
        assert e["e4"] + e["e6"] == nu[0] and e["e2"] + e["e4"] == -1


def test_elimination_matches_reference_list():
    computed = eliminate_to_inequalities(LAM, MU)
    assert equivalent(computed, reference_system())
    assert not implies(computed, ((0, 0, -1), Q(3, 2)))  # e <= 3/2 is not implied


def test_membership_and_rejection():
    res = horn_member(LAM, MU, (0, -1, -2))
    assert res.member and verify_honeycomb(LAM, MU, (0, -1, -2), res.edge_values)
    bad = horn_member(LAM, MU, (3, -3, -3))
    assert not bad and bad.certificate.kind == "farkas"
    assert verify_certificate(LAM, MU, (3, -3, -3), bad.certificate)
    tr = horn_member(LAM, MU, (0, 0, 0))
    assert tr.certificate.kind == "chamber" and tr.certificate.equality
    with pytest.raises(DimensionError):
        horn_member((1, 0), (1, 0, 0), (0, 0, 0))


def test_sqrt5_example_interval_float_only():
    """Non-exact check: irrational spectrum evaluated at double precision."""
    r5 = math.sqrt(5)
    nu1, nu2 = (-1 + r5) / 2, (-1 - r5) / 2
    system = eliminate_to_inequalities(LAM, MU)
    lo, hi = -math.inf, math.inf
    for c, d in system.ineqs:
        rest = float(c[0]) * nu1 + float(c[1]) * nu2 + float(d)
        if c[2] > 0:
            lo = max(lo, -rest / float(c[2]))
        elif c[2] < 0:
            hi = min(hi, rest / -float(c[2]))
        else:
            assert rest >= -1e-12
    assert lo == pytest.approx((1 + r5) / 2, abs=1e-12) and hi == pytest.approx(2, abs=1e-12)


def _decreasing(xs):
    return tuple(sorted(xs, reverse=True))


@given(st.data())
def test_commuting_triples_are_members(data):
    n = data.draw(st.integers(2, 4))
    a = [Q(data.draw(st.integers(-5, 5)), data.draw(st.integers(1, 3))) for _ in range(n)]
    b = [Q(data.draw(st.integers(-5, 5)), data.draw(st.integers(1, 3))) for _ in range(n)]
    perm = data.draw(st.permutations(range(n)))
    c = [-(a[i] + b[perm[i]]) for i in range(n)]
    lam, mu, nu = _decreasing(a), _decreasing(b), _decreasing(c)
    res = horn_member(lam, mu, nu)
    assert res.member and verify_honeycomb(lam, mu, nu, res.edge_values)


def _weyl2(lam, mu, nu):
    """Eigenvalue triples of 2x2 symmetric A + B + C = 0: interlacing with the trace."""
    c1, c2 = -nu[1], -nu[0]  # eigenvalues of A + B, decreasing
    a1, a2 = lam
    b1, b2 = mu
    if c1 + c2 != a1 + a2 + b1 + b2:
        return False
    return c1 <= a1 + b1 and c1 >= max(a1 + b2, a2 + b1) and c2 >= a2 + b2


@given(st.data())
def test_size_two_matches_weyl_inequalities(data):
    q = st.integers(-6, 6)
    lam = _decreasing([Q(data.draw(q)) for _ in range(2)])
    mu = _decreasing([Q(data.draw(q)) for _ in range(2)])
    nu1 = Q(data.draw(q), 2)
    nu = _decreasing([nu1, -sum(lam) - sum(mu) - nu1])
    res = horn_member(lam, mu, nu)
    assert res.member == _weyl2(lam, mu, nu)
    if not res.member:
        assert verify_certificate(lam, mu, nu, res.certificate)


def test_block_construction_members():
    rng = random.Random(11)
    for _ in range(20):
        # 2x2 block [[p, r], [r, p]] has rational eigenvalues p +- r
        p, r, s = (Q(rng.randint(-4, 4)) for _ in range(3))
        a = _decreasing([p + r, p - r, s])
        b = _decreasing([Q(rng.randint(-4, 4)) for _ in range(3)])
        # A = diag-block, B = scalar on the block plus a free entry: commute
        B_block = b[0]
        lam = a
        mu = _decreasing([B_block, B_block, b[2]])
        nu = _decreasing([-(p + r + B_block), -(p - r + B_block), -(s + b[2])])
        res = horn_member(lam, mu, nu)
        assert res.member and verify_honeycomb(lam, mu, nu, res.edge_values)
