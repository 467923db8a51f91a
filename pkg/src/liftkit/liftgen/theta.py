"""Graphs, stable set polytopes and the theta body LMI."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ..errors import InputError
from ..lift import ConeLift, LmiSpec, coordinate_projection
from ..polytope import levelness, slack_levels, v_to_h
from ..ratcore import Matrix, outer
from .klevel import _coeff_vector, facet_sos, monomials


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple  # sorted pairs (i, j), i < j, 0-based

    @classmethod
    def make(cls, n, edges):
        es = set()
        for i, j in edges:
            if i == j or not (0 <= i < n and 0 <= j < n):
                raise InputError(f"bad edge ({i}, {j})")
            es.add((min(i, j), max(i, j)))
        return cls(n, tuple(sorted(es)))

    def adjacent(self, i, j):
        return (min(i, j), max(i, j)) in set(self.edges)

    def non_edges(self):
        E = set(self.edges)
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if (i, j) not in E]

    def stable_sets(self):
        E = set(self.edges)
        out = []
        for bits in product((0, 1), repeat=self.n):
            S = [i for i in range(self.n) if bits[i]]
            if all((a, b) not in E for a in S for b in S if a < b):
                out.append(bits)
        return out


def comparability_graph(P):
    return Graph.make(P.size, P.comparability_edges())


def stab_polytope(G):
    return v_to_h([tuple(Fraction(b) for b in s) for s in G.stable_sets()])


def theta_lmi(G):
    """LMI of the theta body: variables x_1..x_n, then Y_ij for each non-edge i < j.

    [[1, x^T], [x, Y]] >= 0 with diag(Y) = x and Y_ij = 0 on edges.
    """
    n = G.n
    m = n + 1

    def E(pairs):
        M = [[Fraction(0)] * m for _ in range(m)]
        for i, j in pairs:
            M[i][j] = Fraction(1)
            M[j][i] = Fraction(1)
        return Matrix(M, ncols=m)

    const = E([(0, 0)])
    coeffs = [E([(0, i + 1), (i + 1, i + 1)]) for i in range(n)]
    names = [f"x{i + 1}" for i in range(n)]
    for i, j in G.non_edges():
        coeffs.append(E([(i + 1, j + 1)]))
        names.append(f"Y{i + 1},{j + 1}")
    return LmiSpec(const, tuple(coeffs), tuple(names))


def theta_body_lift(G, with_certificates=True):
    """Theta body lift of STAB(G) with rank-one vertex preimages.

    When STAB(G) is 2-level, degree-one sums of squares give one psd certificate per
    facet in the same 1 + n indexing, so the lift can be certified exact.
    """
    lmi = theta_lmi(G)
    S = stab_polytope(G)
    pre = []
    non = G.non_edges()
    for v in S.vertices:
        pre.append(tuple(v) + tuple(v[i] * v[j] for i, j in non))
    certs = None
    if with_certificates and levelness(S) <= 2:
        rows_idx = monomials(G.n, 1)
        certs = []
        for (a, beta), lv in zip(S.facets, slack_levels(S)):
            B = Matrix.zeros(G.n + 1, G.n + 1)
            for w, p in facet_sos(lv, a, beta, G.n):
                B = B + outer(_coeff_vector(p, rows_idx)).scale(w)
            certs.append(B)
        certs = tuple(certs)
    L = ConeLift(
        "psd", G.n, coordinate_projection(G.n, lmi.nvars), lmi=lmi,
        vertex_preimages=tuple(pre), facet_certificates=certs, meta={"graph": G},
    )
    return S, L
