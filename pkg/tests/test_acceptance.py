"""Acceptance criteria.  Each test prints one PASS/FAIL line.

Tolerance for every exact criterion is zero: rational values must be equal.
"""

import random
from fractions import Fraction as Q
from itertools import product

from liftkit.bounds import bound_report, chain_dim_bound
from liftkit.factor import (
    NonnegFactorization,
    cardioid_sample_check,
    factorization_from_lift,
    lift_from_factorization,
    verify_factorization,
)
from liftkit.formats import write_slack
from liftkit.honeycomb import (
    eliminate_to_inequalities,
    equivalent,
    horn_member,
    verify_certificate,
    verify_honeycomb,
)
from liftkit.liftgen import (
    birkhoff_lift,
    chain_polytope,
    chain_polytope_lift,
    comparability_graph,
    cross_polytope_lift,
    function_polytope,
    klevel_sos_lift,
    obdd_flow_lift,
    random_poset,
    theta_body_lift,
    three_element_posets,
    verify_lift,
    xor_obdd,
)
from liftkit.polytope import cross_polytope, cube, h_to_v, permutahedron
from liftkit.ratcore import Matrix, inner, psd_check
from liftkit.slack import slack_matrix

import test_honeycomb
import test_polytope
import test_ratcore
import test_slack
from conftest import FIXTURES, load, p7

EXACT = "tolerance 0 (exact rational equality)"


def report(n, title, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'} criterion {n:>2}: {title} [{EXACT}] {detail}".rstrip())
    assert ok, detail


def projected_vertices(L):
    return {L.project(z) for z in h_to_v(L.hrep).vertices}


def test_criterion_01_slack_reproduction():
    text = write_slack(slack_matrix(p7()))
    report(1, "slack matrix of the 7-vertex fixture", text == (FIXTURES / "p7.slack").read_text())


def test_criterion_02_reference_factorization():
    S = load("p7.slack", "slack")
    F = load("p7.nnf", "nnf")
    ok = bool(verify_factorization(S, F)) and F.size == 6
    located = 0
    for which, M in (("A", F.A), ("B", F.B)):
        for k, j in product(range(M.nrows), range(M.ncols)):
            rows = [list(r) for r in M.rows]
            rows[k][j] += 1
            G = (NonnegFactorization(Matrix(rows), F.B) if which == "A"
                 else NonnegFactorization(F.A, Matrix(rows)))
            res = verify_factorization(S, G)
            if res or res.entry is None:
                continue
            r, c = res.entry
            if which == "A" and r == j and F.B[k, c] != 0:
                located += 1
            if which == "B" and c == j and F.A[k, r] != 0:
                located += 1
    total = F.A.nrows * F.A.ncols + F.B.nrows * F.B.ncols
    report(2, "reference size-6 factorization verifies; every +1 perturbation located",
           ok and located == total, f"{located}/{total} perturbations located")


def test_criterion_03_yannakakis_round_trip():
    P = p7()
    L = lift_from_factorization(P, load("p7.nnf", "nnf"))
    check = verify_lift(P, L)
    G = factorization_from_lift(P, L)
    ok = check.tier == "exact" and bool(verify_factorization(slack_matrix(P).matrix, G))
    report(3, "lift from factorization and factorization from lift", ok,
           f"lift size {L.size}, recovered size {G.size}")


def test_criterion_04_cross_polytope_and_birkhoff():
    sizes = []
    ok = True
    for n in range(3, 7):
        L = cross_polytope_lift(n)
        ok &= L.size == 2 * n and verify_lift(cross_polytope(n), L).tier == "exact"
        sizes.append(L.size)
    for n in (3, 4):
        L = birkhoff_lift(n)
        ok &= L.size == n * n and verify_lift(permutahedron(n), L).tier == "exact"
        sizes.append(L.size)
    report(4, "cross-polytope lifts n=3..6 and Birkhoff lifts n=3,4", ok, f"sizes {sizes}")


def test_criterion_05_xor_flow_lift():
    ok = True
    for n in range(3, 7):
        b = xor_obdd(n)
        L = obdd_flow_lift(b)
        odd = {tuple(Q(x) for x in bits) for bits in product((0, 1), repeat=n) if sum(bits) % 2}
        ok &= len(L.meta["arcs"]) == 4 * n - 2 == L.size
        ok &= projected_vertices(L) == odd and len(odd) == 2 ** (n - 1)
    report(5, "parity diagram flow lifts n=3..6", ok)


def test_criterion_06_chain_polytopes():
    posets = list(three_element_posets())
    rng = random.Random(2024)
    posets += [random_poset(k, rng) for k in range(2, 8) for _ in range(2)]
    ok = len(three_element_posets()) == 5
    for P in posets:
        direct = {tuple(Q(x) for x in a) for a in P.antichains()}
        ok &= projected_vertices(chain_polytope_lift(P)) == direct == set(chain_polytope(P).vertices)
    report(6, "chain polytope lifts for five 3-element posets and random posets", ok,
           f"{len(posets)} posets")


def _theta_vertexwise(S, L):
    pre_ok = all(L.project(w) == v and psd_check(L.lmi.evaluate(w)).psd
                 for v, w in zip(S.vertices, L.vertex_preimages))
    cert_ok = True
    for (a, beta), B in zip(S.facets, L.facet_certificates):
        cert_ok &= psd_check(B).psd
        for v, w in zip(S.vertices, L.vertex_preimages):
            cert_ok &= inner(L.lmi.evaluate(w), B) == beta - sum(x * y for x, y in zip(a, v))
    return pre_ok and cert_ok


def test_criterion_07_theta_body():
    graphs = [load("path4.graph", "graph"), comparability_graph(load("zigzag4.poset", "poset"))]
    graphs += [comparability_graph(P) for P in three_element_posets()]
    rng = random.Random(7)
    graphs += [comparability_graph(random_poset(5, rng)) for _ in range(3)]
    ok = True
    for G in graphs:
        S, L = theta_body_lift(G)
        ok &= L.facet_certificates is not None and _theta_vertexwise(S, L)
        ok &= verify_lift(S, L).tier == "certified"
    report(7, "theta body rank-one lifts and degree-1 certificates on comparability graphs", ok,
           f"{len(graphs)} graphs")


def test_criterion_08_elliptope():
    sq = cube(2)
    L = klevel_sos_lift(sq)
    E = lambda *pairs: Matrix([[int((i, j) in pairs or (j, i) in pairs) for j in range(3)]  # noqa: E731
                               for i in range(3)])
    expected = (Matrix.identity(3), (E((0, 1)), E((0, 2)), E((1, 2))))
    ok = (L.lmi.constant, tuple(L.lmi.coeffs)) == expected
    ok &= _theta_vertexwise(sq, L) and len(L.facet_certificates) == 4
    ok &= L.size == 3 == chain_dim_bound(sq.dim) == bound_report(sq).spectrahedral
    ok &= verify_lift(sq, L).tier == "certified"
    report(8, "square lifts to the elliptope with four certificates, size 3", ok)


def test_criterion_09_honeycomb():
    lam, mu = (1, 0, -1), (2, 1, 0)
    ok = equivalent(eliminate_to_inequalities(lam, mu), test_honeycomb.reference_system())
    res = horn_member(lam, mu, (0, -1, -2))
    ok &= res.member and verify_honeycomb(lam, mu, (0, -1, -2), res.edge_values)
    rej = horn_member(lam, mu, (3, -3, -3))
    ok &= (not rej.member) and rej.certificate.kind == "farkas"
    ok &= verify_certificate(lam, mu, (3, -3, -3), rej.certificate)
    report(9, "size-3 honeycomb elimination, membership and Farkas rejection", ok)


def test_criterion_10_cardioid():
    rng = random.Random(10)
    samples = [(Q(rng.randint(-1400, 1400), 1000), Q(rng.randint(-1400, 1400), 1000))
               for _ in range(100)]
    rep = cardioid_sample_check(samples)
    report(10, "cardioid factor identity and psd factors at 100 samples", bool(rep) and rep.checked == 100,
           f"{len(rep.failures)} failures")


def test_criterion_11_bounds_sweep():
    pairs = [("p7", p7(), lift_from_factorization(p7(), load("p7.nnf", "nnf")))]
    pairs += [(f"C{n}", cross_polytope(n), cross_polytope_lift(n)) for n in range(3, 7)]
    pairs += [(f"Pi{n}", permutahedron(n), birkhoff_lift(n)) for n in (3, 4)]
    for n in range(3, 7):
        b = xor_obdd(n)
        pairs.append((f"xor{n}", function_polytope(b), obdd_flow_lift(b)))
    for i, P in enumerate(three_element_posets()):
        pairs.append((f"chain{i}", chain_polytope(P), chain_polytope_lift(P)))
    pairs.append(("square", cube(2), klevel_sos_lift(cube(2))))
    pairs.append(("cube", cube(3), klevel_sos_lift(cube(3))))
    pairs.append(("cross3", cross_polytope(3), klevel_sos_lift(cross_polytope(3))))
    for name in ("path4.graph", "c4.graph", "c5.graph"):
        S, L = theta_body_lift(load(name, "graph"))
        pairs.append((name, S, L))
    ok = True
    minimal = []
    for name, P, L in pairs:
        rep = bound_report(P)
        floor = rep.polyhedral if L.cone == "nonneg" else rep.spectrahedral
        ok &= L.size >= floor
        if L.cone == "psd" and L.size == floor:
            minimal.append(name)
    ok &= {"square", "cube"} <= set(minimal)
    report(11, "lift sizes never beat the lower bounds", ok,
           f"{len(pairs)} pairs; psd-minimal: {', '.join(minimal)}")


def test_criterion_12_property_suites():
    suites = [
        test_polytope.test_v_h_round_trip_against_convex_hull_oracle,
        test_polytope.test_polar_involution,
        test_slack.test_transpose_polar_identity,
        test_ratcore.test_lp_certificates_and_float_oracle,
        test_ratcore.test_psd_check_agrees_with_principal_minors,
    ]
    for run in suites:
        run()  # each runs 200 seeded hypothesis cases and raises on failure
    report(12, "property suites, 200 seeded cases each", True, f"{len(suites)} suites")
