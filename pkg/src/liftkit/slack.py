"""Slack matrices of polytopes and of nested pairs of polytopes."""

from dataclasses import dataclass

from .errors import NotContained, OriginNotInterior
from .polytope import polar
from .ratcore import Matrix, dot


@dataclass(frozen=True)
class SlackMatrix:
    matrix: Matrix  # rows facets, columns vertices
    row_labels: tuple
    col_labels: tuple
    convention: str  # "unit-rhs" or "integer"

    @property
    def shape(self):
        return self.matrix.shape

    def __getitem__(self, key):
        return self.matrix[key]

    def permuted(self, row_order, col_order):
        M = self.matrix.submatrix(row_order, col_order)
        return SlackMatrix(
            M,
            tuple(self.row_labels[i] for i in row_order),
            tuple(self.col_labels[j] for j in col_order),
            self.convention,
        )

    def rank(self):
        return self.matrix.rank()


def _convention(P):
    return "unit-rhs" if P.facets and all(b == 1 for _, b in P.facets) else "integer"


def slack_matrix(P):
    """S[i][j] = beta_i - a_i . v_j for facet i and vertex j, in the polytope's orders."""
    rows = [[b - dot(a, v) for v in P.vertices] for a, b in P.facets]
    M = Matrix(rows, ncols=P.nvertices)
    return SlackMatrix(
        M,
        tuple(f"F{i}" for i in range(P.nfacets)),
        tuple(f"v{j}" for j in range(P.nvertices)),
        _convention(P),
    )


def generalized_slack(inner, outer):
    """Slack of a nested pair inner <= outer, both containing the origin in their interior.

    Rows are the facets of ``outer`` written as 1 - a.x >= 0, columns the vertices of
    ``inner``.  Raises ``NotContained`` with a witness vertex/facet when inner is not
    inside outer.
    """
    for P, name in ((inner, "inner"), (outer, "outer")):
        if not P.origin_interior():
            raise OriginNotInterior(f"origin is not interior to the {name} polytope")
    for j, v in enumerate(inner.vertices):
        for i, (a, b) in enumerate(outer.facets):
            if dot(a, v) > b:
                raise NotContained(
                    f"vertex {j} of the inner polytope violates facet {i} of the outer one",
                    vertex=j,
                    facet=i,
                )
    rows = [[1 - dot(a, v) / b for v in inner.vertices] for a, b in outer.facets]
    return SlackMatrix(
        Matrix(rows, ncols=inner.nvertices),
        tuple(f"F{i}" for i in range(outer.nfacets)),
        tuple(f"v{j}" for j in range(inner.nvertices)),
        "unit-rhs",
    )


def transpose_polar_check(P):
    """Slack of the polar equals the transpose of the slack (with unit right-hand sides)."""
    S = slack_matrix(P).matrix
    Sp = slack_matrix(polar(P)).matrix
    return Sp == S.T


def verify_slack_entries(P, S):
    """Entrywise recomputation; returns the first mismatching (i, j) or None."""
    ref = slack_matrix(P).matrix
    M = S.matrix if isinstance(S, SlackMatrix) else S
    if M.shape != ref.shape:
        return (-1, -1)
    for i in range(ref.nrows):
        for j in range(ref.ncols):
            if ref[i, j] != M[i, j]:
                return (i, j)
    return None


def is_slack_nonnegative(S):
    M = S.matrix if isinstance(S, SlackMatrix) else S
    return all(x >= 0 for r in M.rows for x in r)

