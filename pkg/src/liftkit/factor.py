"""Nonnegative and psd factorizations of slack matrices, and their lifts.

A nonnegative factorization of size m of an f x v matrix S is a pair (A, B) of
nonnegative matrices, A m x f and B m x v, with S = A^T B.  A psd factorization
of size m assigns a psd m x m matrix to every column (vertex) and row (facet)
with tr(A_j B_i) = S[i][j].
"""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DimensionError, InputError
from .lift import ConeLift, coordinate_projection
from .polytope import HRep
from .ratcore import EQ, LE, LpProblem, Matrix, dot, inner, lp_solve, outer, psd_check
from .slack import SlackMatrix, slack_matrix
from .verify import verify_lift


def _mat(S):
    return S.matrix if isinstance(S, SlackMatrix) else S


@dataclass(frozen=True)
class NonnegFactorization:
    A: Matrix  # m x f
    B: Matrix  # m x v

    def __post_init__(self):
        if self.A.nrows != self.B.nrows:
            raise DimensionError(f"factor heights differ: {self.A.nrows} and {self.B.nrows}")

    @property
    def size(self):
        return self.A.nrows

    def product(self):
        return self.A.T @ self.B

    def reduced(self):
        """Drop components whose A-row or B-row is identically zero."""
        keep = [
            k for k in range(self.size)
            if any(self.A.rows[k]) and any(self.B.rows[k])
        ]
        return NonnegFactorization(
            Matrix([self.A.rows[k] for k in keep], ncols=self.A.ncols),
            Matrix([self.B.rows[k] for k in keep], ncols=self.B.ncols),
        )


@dataclass
class FactCheck:
    ok: bool
    reason: str = ""
    entry: tuple = None  # (i, j) of the first mismatching entry
    expected: Fraction = None
    got: Fraction = None

    def __bool__(self):
        return self.ok


def verify_factorization(S, F):
    """Exact check of nonnegativity and S = A^T B, reporting the first mismatch."""
    S = _mat(S)
    if F.A.ncols != S.nrows or F.B.ncols != S.ncols:
        return FactCheck(False, f"shapes {F.A.shape}, {F.B.shape} do not fit {S.shape}")
    for name, M in (("A", F.A), ("B", F.B)):
        for k, row in enumerate(M.rows):
            for j, x in enumerate(row):
                if x < 0:
                    return FactCheck(False, f"negative entry {name}[{k}][{j}]", (k, j), None, x)
    P = F.product()
    for i in range(S.nrows):
        for j in range(S.ncols):
            if P[i, j] != S[i, j]:
                return FactCheck(
                    False, f"entry ({i}, {j}) is {P[i, j]}, expected {S[i, j]}",
                    (i, j), S[i, j], P[i, j],
                )
    return FactCheck(True)


# -- psd factorizations -----------------------------------------------------------


@dataclass(frozen=True)
class ScaledMatrix:
    """scale * matrix, with ``matrix`` integral (denominators cleared)."""

    scale: Fraction
    matrix: Matrix

    @classmethod
    def of(cls, M):
        den = 1
        for r in M.rows:
            for x in r:
                den = lcm(den, x.denominator)
        return cls(Fraction(1, den), M.scale(den))

    def value(self):
        return self.matrix.scale(self.scale)


@dataclass(frozen=True)
class PsdFactorization:
    vertex_factors: tuple  # ScaledMatrix per column of S
    facet_factors: tuple  # ScaledMatrix per row of S

    @property
    def size(self):
        return self.vertex_factors[0].matrix.nrows if self.vertex_factors else 0

    @classmethod
    def from_matrices(cls, vertex_mats, facet_mats):
        return cls(
            tuple(ScaledMatrix.of(M) for M in vertex_mats),
            tuple(ScaledMatrix.of(M) for M in facet_mats),
        )


def verify_psd_factorization(S, F):
    S = _mat(S)
    if len(F.vertex_factors) != S.ncols or len(F.facet_factors) != S.nrows:
        return FactCheck(False, "factor counts do not match the matrix shape")
    for kind, facs in (("vertex", F.vertex_factors), ("facet", F.facet_factors)):
        for k, f in enumerate(facs):
            if f.scale <= 0 or not psd_check(f.matrix):
                return FactCheck(False, f"{kind} factor {k} is not psd", (k,))
    for i, Bi in enumerate(F.facet_factors):
        for j, Aj in enumerate(F.vertex_factors):
            got = inner(Aj.matrix, Bi.matrix) * Aj.scale * Bi.scale
            if got != S[i, j]:
                return FactCheck(False, f"trace pairing ({i}, {j}) is {got}, expected {S[i, j]}",
                                 (i, j), S[i, j], got)
    return FactCheck(True)


# -- cardioid family ---------------------------------------------------------------


def cardioid_denominator(u):
    return 2 - u * u + u ** 4


def cardioid_slack(u, v):
    """Generalized slack of the cardioid pair at (u, v), in three algebraic forms."""
    q = cardioid_denominator(u)
    s1 = (2 * u ** 2 + u ** 4 - 4 * u * v + 2 * v ** 2 - 3 * u ** 2 * v ** 2 + 2 * u * v ** 3) / q
    s2 = 1 - ((2 - 3 * u ** 2) * (1 - v ** 2) + 2 * u * (2 * v - v ** 3)) / q
    s3 = ((2 - v ** 2) * (v - u) ** 2 + (u ** 2 - v ** 2) ** 2) / q
    return s1, s2, s3


def cardioid_factors(u, v):
    """(A(v), B(u)) with tr(A(v) B(u)) equal to the cardioid slack at (u, v)."""
    u, v = Fraction(u), Fraction(v)
    A = Matrix([
        [1, 0, 1 - v ** 2],
        [0, 2 - v ** 2, v * (2 - v ** 2)],
        [1 - v ** 2, v * (2 - v ** 2), 1],
    ])
    w = (u * u - 1, -u, Fraction(1))
    B = outer(w).scale(1 / cardioid_denominator(u))
    return A, B


@dataclass
class SampleReport:
    ok: bool
    checked: int
    failures: list

    def __bool__(self):
        return self.ok


def cardioid_sample_check(samples):
    """Check the factor identity and psd-ness of both factors at each (u, v)."""
    failures = []
    for u, v in samples:
        u, v = Fraction(u), Fraction(v)
        A, B = cardioid_factors(u, v)
        s1, s2, s3 = cardioid_slack(u, v)
        t = inner(A, B)
        if not (s1 == s2 == s3 == t):
            failures.append(((u, v), "identity"))
        elif not psd_check(A) or not psd_check(B):
            failures.append(((u, v), "psd"))
    return SampleReport(not failures, len(samples), failures)


# -- Yannakakis correspondence ----------------------------------------------------


def lift_from_factorization(P, F):
    """Polyhedral lift {(x, y) : y >= 0, A^T y = beta - a.x} of P from a factorization.

    Components with an all-zero A-row are dropped first (they would make the lift
    unbounded without changing its projection).
    """
    S = slack_matrix(P)
    chk = verify_factorization(S, F)
    if not chk:
        raise InputError(f"factorization does not match the slack matrix: {chk.reason}")
    keep = [k for k in range(F.size) if any(F.A.rows[k])]
    m = len(keep)
    n = P.ambient
    eqs = []
    for i, (a, b) in enumerate(P.facets):
        eqs.append((tuple(a) + tuple(F.A[k, i] for k in keep), b))
    for a, b in P.equations:
        eqs.append((tuple(a) + (Fraction(0),) * m, b))
    ineqs = []
    for k in range(m):
        row = [Fraction(0)] * (n + m)
        row[n + k] = Fraction(-1)
        ineqs.append((tuple(row), Fraction(0)))
    H = HRep(n + m, tuple(ineqs), tuple(eqs))
    return ConeLift("nonneg", n, coordinate_projection(n, n + m), hrep=H,
                    meta={"source": "factorization", "dropped": F.size - m})


def _split_rows(H):
    rows = [(a, b) for a, b in H.ineqs]
    for a, b in H.eqs:
        rows.append((a, b))
        rows.append((tuple(-x for x in a), -b))
    return rows


def lex_min_in_fiber(H, Pi, x):
    """Lexicographically smallest point z of {G z <= g, E z = e} with Pi z = x."""
    ell = H.dim
    A = [a for a, _ in H.ineqs] + [a for a, _ in H.eqs] + list(Pi.rows)
    b = [b for _, b in H.ineqs] + [b for _, b in H.eqs] + list(x)
    senses = [LE] * len(H.ineqs) + [EQ] * (len(H.eqs) + Pi.nrows)
    fixed = []
    z = None
    for k in range(ell):
        c = [Fraction(0)] * ell
        c[k] = Fraction(-1)
        rows = A + [r for r, _ in fixed]
        rhs = b + [v for _, v in fixed]
        res = lp_solve(LpProblem.build(c, rows, rhs, senses + [EQ] * len(fixed), lower=None))
        if res.status != "optimal":
            return None
        z = res.x
        e = [Fraction(0)] * ell
        e[k] = Fraction(1)
        fixed.append((tuple(e), z[k]))
    return z


def factorization_from_lift(P, L, reduce=True):
    """Nonnegative factorization of P's slack matrix from a polyhedral lift.

    Rows of A are Farkas multipliers of the pulled-back facet inequalities over the
    lift's inequalities (equations split into two inequalities); columns of B are
    the lift slacks at the lexicographically smallest lifted point over each vertex.
    """
    if L.cone != "nonneg":
        raise InputError("factorization_from_lift needs a polyhedral lift")
    chk = verify_lift(P, L)
    if not chk:
        raise InputError(f"lift does not project onto the polytope: {chk.reason}")
    H, Pi = L.hrep, L.projection
    rows = _split_rows(H)
    G = [a for a, _ in rows]
    g = [b for _, b in rows]
    Acols = []
    for a, beta in P.facets:
        c = [dot(a, col) for col in Pi.cols()]
        res = lp_solve(LpProblem.build(c, G, g, lower=None))
        if res.status != "optimal" or res.value != beta:
            raise InputError("pulled-back facet inequality is not tight on the lift")
        Acols.append(res.y)
    Bcols = []
    for v in P.vertices:
        z = lex_min_in_fiber(H, Pi, v)
        Bcols.append(tuple(bk - dot(ak, z) for ak, bk in rows))
    F = NonnegFactorization(Matrix.from_cols(Acols, len(rows)), Matrix.from_cols(Bcols, len(rows)))
    return F.reduced() if reduce else F


# -- numerical search ----------------------------------------------------------------


def nmf_search(S, m, restarts=64, seed=0, denom_bound=2 ** 16, iters=1500):
    """Look for an exact size-m nonnegative factorization of S.

    Each restart runs hierarchical alternating least squares (HALS) in floating
    point from a seeded random start, then turns the result into exact candidates
    (continued-fraction rounding, support patterns) and completes the other factor
    by exact LP.  Returns the first candidate that verifies, or None.  The result
    depends only on the arguments.
    """
    import numpy as np

    S = _mat(S)
    X = np.array([[float(x) for x in r] for r in S.rows])
    rng = np.random.default_rng(seed)
    for _ in range(restarts):
        W, H = _hals(X, m, rng, iters)
        if np.abs(W @ H - X).max() > 1e-3 * max(1.0, np.abs(X).max()):
            continue
        scale = H.max(axis=1)
        scale[scale == 0] = 1.0
        H = H / scale[:, None]
        W = W * scale[None, :]
        for cand in _candidates(S, W, H, denom_bound):
            if verify_factorization(S, cand):
                return cand
    return None


def _hals(X, m, rng, iters):
    import numpy as np

    f, v = X.shape
    W = rng.random((f, m))
    H = rng.random((m, v))
    for it in range(iters):
        floor = 1e-16 if it < iters // 2 else 0.0
        WtW, WtX = W.T @ W, W.T @ X
        for k in range(m):
            H[k] = np.maximum(floor, H[k] + (WtX[k] - WtW[k] @ H) / max(WtW[k, k], 1e-12))
        HHt, XHt = H @ H.T, X @ H.T
        for k in range(m):
            W[:, k] = np.maximum(floor, W[:, k] + (XHt[:, k] - W @ HHt[:, k]) / max(HHt[k, k], 1e-12))
    return W, H


def _round(M, denom_bound, tol=1e-7):
    return Matrix([
        [Fraction(0) if x < tol else Fraction(float(x)).limit_denominator(denom_bound) for x in row]
        for row in M
    ])


def _support(M, tol=1e-4):
    return Matrix([[Fraction(int(x > tol)) for x in row] for row in M])


def _complete(K, targets):
    """Nonnegative columns c with K^T c = t for each target t (exact LP), or None."""
    out = []
    Kt = K.T
    for t in targets:
        res = lp_solve(LpProblem.build([-1] * K.nrows, Kt.rows, t, [EQ] * len(t)))
        if res.status != "optimal":
            return None
        out.append(res.x)
    return Matrix.from_cols(out, K.nrows)


def _candidates(S, W, H, denom_bound):
    A0 = _round(W.T, denom_bound)
    B0 = _round(H, denom_bound)
    yield NonnegFactorization(A0, B0)
    for B in (_support(H), B0):
        A = _complete(B, S.rows)
        if A is not None:
            yield NonnegFactorization(A, B)
    for A in (_support(W.T), A0):
        B = _complete(A, S.cols())
        if B is not None:
            yield NonnegFactorization(A, B)


__all__ = [
    "FactCheck", "NonnegFactorization", "PsdFactorization", "SampleReport",
    "ScaledMatrix", "cardioid_denominator", "cardioid_factors", "cardioid_sample_check",
    "cardioid_slack", "factorization_from_lift", "lex_min_in_fiber", "lift_from_factorization",
    "nmf_search", "verify_factorization", "verify_psd_factorization",
]
