"""Cone lifts: a polytope written as the linear image of an affine slice of a cone.

Two cones are supported:

* ``nonneg``: the lifted set is a polyhedron {z : G z <= g, E z = e} stored as an
  ``HRep``; its size is the number of inequalities.
* ``psd``: the lifted set is a spectrahedron {w : A0 + sum_k w_k A_k >= 0} stored as
  an ``LmiSpec``; its size is the matrix order.

In both cases ``projection`` is an n x l matrix mapping lifted points to the target.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionError
from .ratcore import Matrix, inner, vec


@dataclass(frozen=True)
class LmiSpec:
    constant: Matrix
    coeffs: tuple  # one symmetric matrix per variable
    names: tuple = ()

    def __post_init__(self):
        n = self.constant.nrows
        for k, A in enumerate(self.coeffs):
            if A.shape != (n, n):
                raise DimensionError(f"coefficient {k} has shape {A.shape}, expected {(n, n)}")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"w{k + 1}" for k in range(len(self.coeffs))))

    @property
    def size(self):
        return self.constant.nrows

    @property
    def nvars(self):
        return len(self.coeffs)

    def evaluate(self, w):
        w = vec(w)
        if len(w) != self.nvars:
            raise DimensionError(f"{len(w)} values for {self.nvars} variables")
        n = self.size
        rows = [list(r) for r in self.constant.rows]
        for wk, A in zip(w, self.coeffs):
            if wk:
                for i in range(n):
                    for j in range(n):
                        if A[i, j]:
                            rows[i][j] += wk * A[i, j]
        return Matrix(rows, ncols=n)

    def pairing(self, B):
        """Affine form w -> tr(M(w) B), returned as (constant, coefficients)."""
        return inner(self.constant, B), tuple(inner(A, B) for A in self.coeffs)


@dataclass(frozen=True)
class ConeLift:
    cone: str  # "nonneg" or "psd"
    ambient: int
    projection: Matrix
    hrep: object = None  # polytope.HRep in lifted coordinates, for "nonneg"
    lmi: LmiSpec = None  # for "psd"
    vertex_preimages: tuple = None  # lifted points aligned with the target's vertices
    facet_certificates: tuple = None  # psd matrices aligned with the target's facets
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def size(self):
        if self.cone == "nonneg":
            return len(self.hrep.ineqs)
        return self.lmi.size

    @property
    def lifted_dim(self):
        return self.projection.ncols

    def project(self, z):
        return self.projection @ vec(z)


def coordinate_projection(n, ell, coords=None):
    """Projection onto the listed lifted coordinates (default: the first n)."""
    coords = list(range(n)) if coords is None else list(coords)
    return Matrix(
        [[Fraction(int(j == coords[i])) for j in range(ell)] for i in range(n)], ncols=ell
    )
