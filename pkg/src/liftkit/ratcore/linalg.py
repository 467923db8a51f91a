"""Dense exact linear algebra over the rationals.

Vectors are tuples of ``Fraction``.  ``Matrix`` is an immutable row-major grid
with just enough operations for the polytope and factorization code.
"""

from fractions import Fraction
from math import gcd

from ..errors import DimensionError, InputError


def to_q(x):
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: silently converting them would hide rounding.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise InputError(f"not a rational: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational literal: {x!r}") from exc
    raise InputError(f"not a rational: {x!r} ({type(x).__name__})")


def vec(xs):
    return tuple(to_q(x) for x in xs)


def dot(u, v):
    if len(u) != len(v):
        raise DimensionError(f"dot of length {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vscale(c, u):
    return tuple(c * a for a in u)


def fmt_q(x):
    """Canonical text for a rational: ``p`` for integers, ``p/q`` otherwise."""
    return str(Fraction(x))


def primitive(v):
    """Positive multiple of ``v`` with coprime integer entries (as Fractions).

    The zero vector is returned unchanged.
    """
    den = 1
    for x in v:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = 0
    for a in ints:
        g = gcd(g, a)
    if g == 0:
        return tuple(Fraction(0) for _ in v)
    return tuple(Fraction(a // g) for a in ints)


class Matrix:
    """Immutable dense rational matrix."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows, ncols=None):
        rows = tuple(vec(r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        for i, r in enumerate(rows):
            if len(r) != ncols:
                raise DimensionError(f"row {i} has {len(r)} entries, expected {ncols}")
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def zeros(cls, m, n):
        return cls([[0] * n for _ in range(m)], ncols=n)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def from_cols(cls, cols, nrows=None):
        cols = [vec(c) for c in cols]
        if nrows is None:
            nrows = len(cols[0]) if cols else 0
        return cls([[c[i] for c in cols] for i in range(nrows)], ncols=len(cols))

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, key):
        if isinstance(key, tuple):
            i, j = key
            return self.rows[i][j]
        return self.rows[key]

    def col(self, j):
        return tuple(r[j] for r in self.rows)

    def cols(self):
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self):
        return Matrix(self.cols(), ncols=self.nrows)

    def __eq__(self, other):
        return isinstance(other, Matrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[[fmt_q(x) for x in r] for r in self.rows]})"

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"add {self.shape} and {other.shape}")
        return Matrix([vadd(a, b) for a, b in zip(self.rows, other.rows)], ncols=self.ncols)

    def __sub__(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"sub {self.shape} and {other.shape}")
        return Matrix([vsub(a, b) for a, b in zip(self.rows, other.rows)], ncols=self.ncols)

    def scale(self, c):
        c = to_q(c)
        return Matrix([vscale(c, r) for r in self.rows], ncols=self.ncols)

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"matmul {self.shape} @ {other.shape}")
            ocols = other.cols()
            return Matrix([[dot(r, c) for c in ocols] for r in self.rows], ncols=other.ncols)
        v = tuple(other)
        if self.ncols != len(v):
            raise DimensionError(f"matvec {self.shape} @ ({len(v)},)")
        return tuple(dot(r, v) for r in self.rows)

    def is_square(self):
        return self.nrows == self.ncols

    def is_symmetric(self):
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def trace(self):
        return sum((self.rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def rank(self):
        return rank(self.rows)

    def submatrix(self, rows, cols):
        return Matrix([[self.rows[i][j] for j in cols] for i in rows], ncols=len(cols))

    def tolist(self):
        return [list(r) for r in self.rows]


def inner(a, b):
    """Trace inner product tr(a b) for equally shaped symmetric matrices."""
    if a.shape != b.shape:
        raise DimensionError(f"inner {a.shape} and {b.shape}")
    return sum((x * y for ra, rb in zip(a.rows, b.T.rows) for x, y in zip(ra, rb)), Fraction(0))


def outer(u, v=None):
    v = u if v is None else v
    return Matrix([[a * b for b in v] for a in u], ncols=len(v))


def rref(rows, ncols=None):
    """Reduced row echelon form.  Returns (nonzero rows, pivot columns)."""
    rows = [list(vec(r)) for r in rows]
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        pv = rows[r][c]
        if pv != 1:
            rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                ri = rows[i]
                rows[i] = [a - f * b for a, b in zip(ri, rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(x) for x in rows[:r]], pivots


def rank(rows):
    rows = list(rows)
    if not rows:
        return 0
    return len(rref(rows)[1])


def nullspace(rows, ncols):
    """Basis of {x : R x = 0}, one vector per free column, in column order."""
    red, piv = rref(rows, ncols) if rows else ([], [])
    free = [c for c in range(ncols) if c not in piv]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for r, p in zip(red, piv):
            x[p] = -r[f]
        basis.append(tuple(x))
    return basis


def solve(A, b):
    """One solution of A x = b (free variables zero), or None if inconsistent."""
    rows = A.rows if isinstance(A, Matrix) else [vec(r) for r in A]
    n = A.ncols if isinstance(A, Matrix) else (len(rows[0]) if rows else 0)
    aug = [tuple(r) + (to_q(bi),) for r, bi in zip(rows, b)]
    red, piv = rref(aug, n + 1)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for r, p in zip(red, piv):
        x[p] = r[n]
    return tuple(x)


def inverse(A):
    n = A.nrows
    if not A.is_square():
        raise DimensionError(f"inverse of non-square {A.shape}")
    aug = [tuple(r) + tuple(Fraction(int(i == j)) for j in range(n)) for i, r in enumerate(A.rows)]
    red, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)):
        raise InputError("matrix is singular")
    return Matrix([r[n:] for r in red], ncols=n)


def affine_hull(points):
    """Affine hull of a nonempty point list.

    Returns ``(pivots, equations)``: ``pivots`` are coordinates whose projection is
    injective on the hull; ``equations`` are pairs (a, beta) with a.x = beta, one per
    non-pivot coordinate, normalized to coprime integers with positive leading entry.
    """
    if not points:
        raise InputError("affine hull of an empty point set")
    n = len(points[0])
    p0 = points[0]
    diffs = [vsub(p, p0) for p in points[1:]]
    if diffs:
        red, piv = rref(diffs, n)
    else:
        red, piv = [], []
    eqs = []
    for c in range(n):
        if c in piv:
            continue
        # x_c - p0_c = sum over pivots of red[r][c] * (x_p - p0_p)
        a = [Fraction(0)] * n
        a[c] = Fraction(1)
        for r, p in zip(red, piv):
            a[p] -= r[c]
        beta = dot(a, p0)
        eqs.append(normalize_equation(tuple(a), beta))
    return piv, eqs


def normalize_equation(a, beta):
    """Scale a.x = beta to coprime integers with positive leading nonzero."""
    v = primitive(tuple(a) + (beta,))
    lead = next((x for x in v if x != 0), Fraction(1))
    if lead < 0:
        v = tuple(-x for x in v)
    return v[:-1], v[-1]
