"""Finite posets, their order and chain polytopes, and the chain-polytope lift."""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ..errors import InputError
from ..lift import ConeLift, coordinate_projection
from ..polytope import HRep, h_to_v, v_to_h


@dataclass(frozen=True)
class Poset:
    elements: tuple  # names
    covers: tuple  # (i, j): element i is covered by element j (i < j)

    @classmethod
    def from_relations(cls, elements, relations):
        """Poset generated by relations (i, j) meaning i < j (indices or names)."""
        elements = tuple(str(e) for e in elements)
        k = len(elements)
        index = {e: i for i, e in enumerate(elements)}
        less = [[False] * k for _ in range(k)]
        for a, b in relations:
            i = index[a] if isinstance(a, str) else a
            j = index[b] if isinstance(b, str) else b
            less[i][j] = True
        for m in range(k):
            for i in range(k):
                if less[i][m]:
                    for j in range(k):
                        if less[m][j]:
                            less[i][j] = True
        if any(less[i][i] for i in range(k)):
            raise InputError("relations contain a cycle")
        covers = tuple(
            (i, j) for i in range(k) for j in range(k)
            if less[i][j] and not any(less[i][m] and less[m][j] for m in range(k))
        )
        return cls(elements, covers)

    @property
    def size(self):
        return len(self.elements)

    def less_matrix(self):
        k = self.size
        less = [[False] * k for _ in range(k)]
        for i, j in self.covers:
            less[i][j] = True
        for m in range(k):
            for i in range(k):
                if less[i][m]:
                    for j in range(k):
                        if less[m][j]:
                            less[i][j] = True
        return less

    def comparable(self, i, j):
        L = self.less_matrix()
        return L[i][j] or L[j][i]

    def minimal(self):
        above = {j for _, j in self.covers}
        return [i for i in range(self.size) if i not in above]

    def maximal(self):
        below = {i for i, _ in self.covers}
        return [i for i in range(self.size) if i not in below]

    def antichains(self):
        L = self.less_matrix()
        out = []
        for bits in product((0, 1), repeat=self.size):
            S = [i for i in range(self.size) if bits[i]]
            if all(not L[i][j] and not L[j][i] for i in S for j in S if i != j):
                out.append(bits)
        return out

    def filters(self):
        """Up-closed subsets, as 0/1 tuples."""
        out = []
        for bits in product((0, 1), repeat=self.size):
            if all(bits[j] >= bits[i] for i, j in self.covers):
                out.append(bits)
        return out

    def comparability_edges(self):
        L = self.less_matrix()
        return [(i, j) for i in range(self.size) for j in range(i + 1, self.size) if L[i][j] or L[j][i]]


def random_poset(k, rng, density=0.35):
    """Random poset on k elements from a random DAG (rng is a ``random.Random``)."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    rel = [(i, j) for i in range(k) for j in range(i + 1, k) if rng.random() < density]
    return Poset.from_relations([f"p{i}" for i in range(k)], rel)


def three_element_posets():
    """The five 3-element posets up to isomorphism."""
    names = ("a", "b", "c")
    return [
        Poset.from_relations(names, []),
        Poset.from_relations(names, [(0, 1), (1, 2)]),
        Poset.from_relations(names, [(0, 1), (0, 2)]),
        Poset.from_relations(names, [(0, 2), (1, 2)]),
        Poset.from_relations(names, [(0, 1)]),
    ]


def _e(n, *pairs):
    v = [Fraction(0)] * n
    for i, c in pairs:
        v[i] += Fraction(c)
    return tuple(v)


def order_polytope_hrep(P, offset=0, ell=None):
    """Cover, minimal and maximal inequalities of the order polytope (variables from offset)."""
    k = P.size
    ell = k if ell is None else ell
    ineqs = []
    for i, j in P.covers:
        ineqs.append((_e(ell, (offset + i, 1), (offset + j, -1)), Fraction(0)))
    for i in P.minimal():
        ineqs.append((_e(ell, (offset + i, -1)), Fraction(0)))
    for i in P.maximal():
        ineqs.append((_e(ell, (offset + i, 1)), Fraction(1)))
    return ineqs


def order_polytope(P):
    """Order polytope (vertices are the filter indicators) from its defining inequalities."""
    return h_to_v(HRep(P.size, tuple(order_polytope_hrep(P))))


def chain_polytope(P):
    """conv of antichain indicators."""
    return v_to_h([tuple(Fraction(b) for b in a) for a in P.antichains()])


def chain_polytope_lift(P):
    """Lift of the chain polytope over the order polytope.

    Variables (z, x): x in the order polytope, 0 <= z_a <= x_a - x_b whenever a covers
    b, and z_a = x_a for minimal a.  Projection onto z.
    """
    k = P.size
    ell = 2 * k
    ineqs = []
    for a in range(k):
        ineqs.append((_e(ell, (a, -1)), Fraction(0)))
    for b, a in P.covers:
        ineqs.append((_e(ell, (a, 1), (k + a, -1), (k + b, 1)), Fraction(0)))
    ineqs += order_polytope_hrep(P, offset=k, ell=ell)
    eqs = [(_e(ell, (a, 1), (k + a, -1)), Fraction(0)) for a in P.minimal()]
    H = HRep(ell, tuple(ineqs), tuple(eqs))
    return ConeLift("nonneg", k, coordinate_projection(k, ell), hrep=H, meta={"poset": P})
