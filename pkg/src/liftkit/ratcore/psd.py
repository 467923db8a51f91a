"""Exact positive-semidefiniteness test by symmetric LDL^T elimination."""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InputError
from .linalg import Matrix, dot, inverse


@dataclass
class PsdResult:
    psd: bool
    lower: Matrix = None  # S = L diag(d) L^T when psd
    diag: tuple = None
    witness: tuple = None  # v with v^T S v < 0 when not psd

    def __bool__(self):
        return self.psd


def quad(S, v):
    return dot(v, S @ v)


def psd_check(S):
    """Decide S >= 0 exactly.

    Uses 1x1 pivots in index order.  A zero pivot forces its whole remaining row
    to vanish, otherwise two coordinates give a negative quadratic form.
    """
    if not isinstance(S, Matrix):
        S = Matrix(S)
    if not S.is_symmetric():
        raise InputError("psd_check needs a symmetric matrix")
    n = S.nrows
    W = [list(r) for r in S.rows]
    M = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    remaining = list(range(n))

    def lift(w):
        # v = M^T w, so v^T S v = w^T W w
        return tuple(sum((M[i][j] * w[i] for i in range(n)), Fraction(0)) for j in range(n))

    while remaining:
        for i in remaining:
            if W[i][i] < 0:
                w = [Fraction(0)] * n
                w[i] = Fraction(1)
                return PsdResult(False, witness=lift(w))
        p = next((i for i in remaining if W[i][i] > 0), None)
        if p is None:
            for i in remaining:
                for j in remaining:
                    if W[i][j] != 0:
                        w = [Fraction(0)] * n
                        w[i] = Fraction(1)
                        w[j] = Fraction(-1) if W[i][j] > 0 else Fraction(1)
                        return PsdResult(False, witness=lift(w))
            break
        remaining.remove(p)
        pv = W[p][p]
        for i in remaining:
            f = W[i][p] / pv
            if f:
                W[i] = [a - f * b for a, b in zip(W[i], W[p])]
                M[i] = [a - f * b for a, b in zip(M[i], M[p])]
        for i in remaining:
            # symmetric column operation
            f = W[p][i] / pv
            if f:
                for k in range(n):
                    W[k][i] -= f * W[k][p]
    diag = tuple(W[i][i] for i in range(n))
    L = inverse(Matrix(M))
    return PsdResult(True, lower=L, diag=diag)


def is_psd(S):
    return psd_check(S).psd


def principal_minors_psd(S):
    """Reference test: every principal minor is nonnegative.  Exponential; small n only."""
    if not isinstance(S, Matrix):
        S = Matrix(S)
    n = S.nrows
    for mask in range(1, 1 << n):
        idx = [i for i in range(n) if mask >> i & 1]
        if det(S.submatrix(idx, idx)) < 0:
            return False
    return True


def det(A):
    rows = [list(r) for r in A.rows]
    n = len(rows)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            d = -d
        d *= rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[c])]
    return d
