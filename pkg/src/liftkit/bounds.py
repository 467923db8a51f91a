"""Lower bounds on the size of polyhedral and spectrahedral lifts.

All logarithms and square roots are evaluated exactly with integers; the natural
logarithm is handled through rigorous rational enclosures of e^k.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt

from .errors import InputError
from .polytope import face_lattice, is_k_neighborly

CITATIONS = {
    "goemans": "Goemans: a lift with m facets has at most 2^m faces, hence m >= ceil(log2 #vertices)",
    "face_count": "face lattice embeds in the face lattice of the lift: m >= ceil(log2 #faces)",
    "chain_dim": "psd rank is at least dim + 1 (longest chain of nonempty faces)",
    "sqrt_dim": "psd rank m gives a lift with m(m+1)/2 >= dim parameters: m >= ceil(sqrt(dim))",
    "degree": "a degree-d algebraic boundary needs psd size >= ceil(sqrt(log d))",
}


def ceil_log2(v):
    """Smallest m >= 0 with 2^m >= v, for an integer v >= 1."""
    if v < 1:
        raise InputError("ceil_log2 needs a positive integer")
    return (v - 1).bit_length()


def ceil_sqrt(v):
    """Smallest m >= 0 with m^2 >= v, for an integer v >= 0."""
    if v < 0:
        raise InputError("ceil_sqrt needs a nonnegative integer")
    r = isqrt(v)
    return r if r * r == v else r + 1


def goemans_bound(nvertices):
    return ceil_log2(nvertices)


def face_count_bound(nfaces):
    """Faces counted with the empty face and the polytope itself."""
    return ceil_log2(nfaces)


def chain_dim_bound(dim):
    return dim + 1


def sqrt_dim_bound(dim):
    return ceil_sqrt(dim)


def _exp_bounds(k, terms):
    """Rational lo <= e^k <= hi from the Taylor series truncated after ``terms`` terms."""
    s = Fraction(0)
    t = Fraction(1)
    for j in range(terms):
        s += t
        t = t * k / (j + 1)
    # remainder of the series: t * sum_{i>=0} (k/(terms+1))^i, valid when terms + 1 > k
    ratio = Fraction(k, terms + 1)
    return s, s + t / (1 - ratio)


def _exp_at_least(k, d):
    """Decide e^k >= d exactly for integers k >= 0, d >= 1."""
    if k == 0:
        return d <= 1
    terms = 2 * k + 8
    while True:
        lo, hi = _exp_bounds(k, terms)
        if lo >= d:
            return True
        if hi < d:
            return False
        terms *= 2  # e^k is irrational for k > 0, so this terminates


def degree_bound(d, base="e"):
    """ceil(sqrt(log_base d)) for an integer degree d >= 1 (base "e" or an integer >= 2)."""
    if not isinstance(d, int) or d < 1:
        raise InputError("degree must be a positive integer")
    m = 0
    while True:
        k = m * m
        if base == "e":
            ok = _exp_at_least(k, d)
        else:
            b = int(base)
            if b < 2:
                raise InputError("log base must be at least 2")
            ok = b ** k >= d
        if ok:
            return m
        m += 1


@dataclass
class NeighborlinessReport:
    k: int
    neighborly: bool
    first_failure: tuple = None
    note: str = "reports neighborliness only; no size bound is claimed from it"


def neighborliness_obstruction(P, k):
    ok, bad = is_k_neighborly(P, k)
    return NeighborlinessReport(k, ok, bad)


@dataclass
class BoundReport:
    bounds: dict  # name -> value
    polyhedral: int
    spectrahedral: int
    nvertices: int
    nfaces: int
    dim: int
    citations: dict = field(default_factory=dict)


def bound_report(P, degree=None, base="e"):
    """All applicable lower bounds for the polytope P."""
    L = face_lattice(P)
    b = {
        "goemans": goemans_bound(P.nvertices),
        "face_count": face_count_bound(len(L)),
        "chain_dim": chain_dim_bound(P.dim),
        "sqrt_dim": sqrt_dim_bound(P.dim),
    }
    if L.longest_chain() != P.dim + 1:
        raise InputError("face lattice chain length disagrees with the dimension")
    if degree is not None:
        b["degree"] = degree_bound(degree, base)
    poly = max(b["goemans"], b["face_count"])
    spec = max(b["chain_dim"], b["sqrt_dim"], b.get("degree", 0))
    return BoundReport(b, poly, spec, P.nvertices, len(L), P.dim,
                       {k: CITATIONS[k] for k in b})
