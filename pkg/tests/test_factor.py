import random
from fractions import Fraction as Q

from liftkit.factor import (
    NonnegFactorization,
    PsdFactorization,
    cardioid_factors,
    cardioid_sample_check,
    factorization_from_lift,
    lift_from_factorization,
    nmf_search,
    verify_factorization,
    verify_psd_factorization,
)
from liftkit.liftgen import cross_polytope_lift, rank_one_factorization, verify_lift
from liftkit.polytope import cross_polytope, cube
from liftkit.ratcore import Matrix, psd_check
from liftkit.slack import slack_matrix

from conftest import load


def test_reference_factorization_verifies():
    F = load("p7.nnf", "nnf")
    assert F.size == 6
    assert verify_factorization(load("p7.slack", "slack"), F)


def test_perturbation_is_located():
    S = load("p7.slack", "slack")
    F = load("p7.nnf", "nnf")
    rows = [list(r) for r in F.B.rows]
    rows[4][5] += 1
    bad = NonnegFactorization(F.A, Matrix(rows))
    res = verify_factorization(S, bad)
    assert not res and res.entry is not None
    i, j = res.entry
    assert j == 5 and res.got == res.expected + F.A[4, i]


def test_negative_factor_rejected():
    S = Matrix([[1]])
    res = verify_factorization(S, NonnegFactorization(Matrix([[-1]]), Matrix([[-1]])))
    assert not res


def test_trivial_factorization_round_trip_on_cube():
    P = cube(3)
    S = slack_matrix(P).matrix
    F = NonnegFactorization(Matrix.identity(S.nrows), S)
    L = lift_from_factorization(P, F)
    assert verify_lift(P, L)
    G = factorization_from_lift(P, L)
    assert verify_factorization(S, G)


def test_factorization_from_cross_polytope_lift():
    for n in (3, 4):
        P = cross_polytope(n)
        G = factorization_from_lift(P, cross_polytope_lift(n))
        assert verify_factorization(slack_matrix(P).matrix, G)
        assert G.size <= 2 * n


def test_nmf_search_finds_size_six():
    S = load("p7.slack", "slack")
    F = nmf_search(S, 6, seed=0)
    assert F is not None and F.size == 6 and verify_factorization(S, F)
    assert nmf_search(S, 6, seed=0) == F


def test_nmf_search_square_needs_four():
    S = slack_matrix(cube(2)).matrix
    assert nmf_search(S, 3, restarts=16) is None
    assert verify_factorization(S, nmf_search(S, 4))


def test_psd_factorization_of_square():
    F = rank_one_factorization(cube(2), 2)
    assert F.size == 3
    assert verify_psd_factorization(slack_matrix(cube(2)).matrix, F)
    G = PsdFactorization.from_matrices([Matrix([[Q(1, 2)]])], [Matrix([[Q(2, 3)]])])
    assert G.vertex_factors[0].matrix == Matrix([[1]])
    assert verify_psd_factorization(Matrix([[Q(1, 3)]]), G)


def test_cardioid_factors_are_psd():
    rng = random.Random(7)
    samples = [(Q(rng.randint(-14, 14), 10), Q(rng.randint(-14, 14), 10)) for _ in range(30)]
    assert cardioid_sample_check(samples)
    # v^2 > 2 leaves the parameter range where A(v) is psd
    assert cardioid_sample_check([(0, Q(17, 10))]).failures[0][1] == "psd"
    A, B = cardioid_factors(0, 0)
    assert psd_check(A) and psd_check(B)
