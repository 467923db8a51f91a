"""LMIs for epigraphs of convex quadratics and for the unit ball."""

from fractions import Fraction

from ..errors import DimensionError, NotPsd
from ..lift import LmiSpec
from ..ratcore import Matrix, psd_check, vec


def quadratic_epigraph_lmi(A, b, c):
    """LMI in (x_1..x_n, t) describing f(x) = x^T A x + 2 b^T x + c <= t, for A psd.

        [[t - c - 2 b^T x, -(A x)^T],
         [-A x,             A      ]] >= 0
    """
    A = A if isinstance(A, Matrix) else Matrix(A)
    b = vec(b)
    c = Fraction(c)
    n = A.nrows
    if not A.is_symmetric() or len(b) != n:
        raise DimensionError("A must be symmetric n x n and b of length n")
    if not psd_check(A):
        raise NotPsd("quadratic form is not convex")
    m = n + 1

    def blank():
        return [[Fraction(0)] * m for _ in range(m)]

    C = blank()
    C[0][0] = -c
    for i in range(n):
        for j in range(n):
            C[i + 1][j + 1] = A[i, j]
    coeffs = []
    for k in range(n):
        M = blank()
        M[0][0] = -2 * b[k]
        for i in range(n):
            M[0][i + 1] = -A[i, k]
            M[i + 1][0] = -A[i, k]
        coeffs.append(Matrix(M, ncols=m))
    T = blank()
    T[0][0] = Fraction(1)
    coeffs.append(Matrix(T, ncols=m))
    names = tuple(f"x{i + 1}" for i in range(n)) + ("t",)
    return LmiSpec(Matrix(C, ncols=m), tuple(coeffs), names)


def quadratic_value(A, b, c, x):
    A = A if isinstance(A, Matrix) else Matrix(A)
    x = vec(x)
    b = vec(b)
    Ax = A @ x
    return sum((xi * y for xi, y in zip(x, Ax)), Fraction(0)) + 2 * sum(
        (bi * xi for bi, xi in zip(b, x)), Fraction(0)
    ) + Fraction(c)


def epigraph_member(A, b, c, x, t):
    """Decide f(x) <= t through the LMI."""
    lmi = quadratic_epigraph_lmi(A, b, c)
    return psd_check(lmi.evaluate(tuple(vec(x)) + (Fraction(t),))).psd


def ball_lmi(n):
    """[[1, x^T], [x, I]] >= 0, i.e. the closed unit ball."""
    m = n + 1
    C = [[Fraction(int(i == j and i > 0)) for j in range(m)] for i in range(m)]
    C[0][0] = Fraction(1)
    coeffs = []
    for k in range(n):
        M = [[Fraction(0)] * m for _ in range(m)]
        M[0][k + 1] = M[k + 1][0] = Fraction(1)
        coeffs.append(Matrix(M, ncols=m))
    return LmiSpec(Matrix(C, ncols=m), tuple(coeffs), tuple(f"x{i + 1}" for i in range(n)))
