"""Small polyhedral lifts of the cross-polytope and the permutahedron."""

from fractions import Fraction

from ..lift import ConeLift, coordinate_projection
from ..polytope import HRep
from ..ratcore import Matrix


def _unit(n, *pairs):
    v = [Fraction(0)] * n
    for i, c in pairs:
        v[i] = Fraction(c)
    return tuple(v)


def cross_polytope_lift(n):
    """{(x, y) : -y_i <= x_i <= y_i, sum y = 1}, projected onto x.  2n inequalities."""
    ell = 2 * n
    ineqs = []
    for i in range(n):
        ineqs.append((_unit(ell, (i, 1), (n + i, -1)), Fraction(0)))
        ineqs.append((_unit(ell, (i, -1), (n + i, -1)), Fraction(0)))
    eq = (tuple(Fraction(0) for _ in range(n)) + tuple(Fraction(1) for _ in range(n)), Fraction(1))
    H = HRep(ell, tuple(ineqs), (eq,))
    return ConeLift("nonneg", n, coordinate_projection(n, ell), hrep=H, meta={"family": "cross"})


def birkhoff_lift(n):
    """Doubly stochastic matrices X (row-major), projected by x = (1, 2, ..., n) X.

    The image is the permutahedron on 1..n; the lift has n^2 inequalities.
    """
    ell = n * n
    ineqs = [(_unit(ell, (k, -1)), Fraction(0)) for k in range(ell)]
    eqs = []
    for i in range(n):
        eqs.append((_unit(ell, *[(i * n + j, 1) for j in range(n)]), Fraction(1)))
    for j in range(n):
        eqs.append((_unit(ell, *[(i * n + j, 1) for i in range(n)]), Fraction(1)))
    proj = Matrix(
        [[Fraction(k // n + 1) if k % n == j else Fraction(0) for k in range(ell)] for j in range(n)],
        ncols=ell,
    )
    H = HRep(ell, tuple(ineqs), tuple(eqs))
    return ConeLift("nonneg", n, proj, hrep=H, meta={"family": "birkhoff"})
