"""Spectrahedral lifts of k-level polytopes from sums of squares on the vertex set.

For a full-dimensional k-level polytope the moment matrix indexed by monomials of
degree <= k-1, with products reduced to functions on the vertex set, gives an LMI
whose projection is the polytope.  Each facet slack s agrees on the vertices with
sum_l t_l L_l(s)^2, where t_l are the slack levels and L_l the Lagrange basis
polynomials on them; this yields a psd certificate with rational entries.  When
every level is a rational square a single square r(s)^2 is used instead.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb, isqrt

from ..errors import InputError, NotFullDimensional
from ..lift import ConeLift, LmiSpec, coordinate_projection
from ..polytope import levelness, slack_levels
from ..ratcore import Matrix, outer, rank, solve


def monomials(n, deg):
    """Exponent tuples of total degree <= deg: by degree, then x_1 before x_2."""
    out = []
    for d in range(deg + 1):
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for i in combo:
                e[i] += 1
            out.append(tuple(e))
    return out


def mono_value(e, x):
    v = Fraction(1)
    for xi, k in zip(x, e):
        if k:
            v *= xi ** k
    return v


def poly_mul(p, q):
    out = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, Fraction(0)) + c1 * c2
    return {e: c for e, c in out.items() if c}


def affine_poly(const, lin):
    n = len(lin)
    p = {tuple([0] * n): Fraction(const)} if const else {}
    for i, a in enumerate(lin):
        if a:
            e = [0] * n
            e[i] = 1
            p[tuple(e)] = Fraction(a)
    return p


def _rational_sqrt(q):
    q = Fraction(q)
    if q < 0:
        return None
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a == q.numerator and b * b == q.denominator:
        return Fraction(a, b)
    return None


def facet_sos(levels, a, beta, n):
    """Polynomials (weight, p) with sum weight * p^2 = beta - a.x on points at the given levels."""
    s = affine_poly(beta, [-x for x in a])
    lag = []
    for l, tl in enumerate(levels):
        p = {tuple([0] * n): Fraction(1)}
        for m, tm in enumerate(levels):
            if m != l:
                shifted = dict(s)
                z = tuple([0] * n)
                shifted[z] = shifted.get(z, Fraction(0)) - tm
                shifted = {e: c / (tl - tm) for e, c in shifted.items() if c}
                p = poly_mul(p, shifted)
        lag.append((tl, p))
    roots = [_rational_sqrt(t) for t in levels]
    if all(r is not None for r in roots):
        r = {}
        for (tl, p), root in zip(lag, roots):
            for e, c in p.items():
                r[e] = r.get(e, Fraction(0)) + root * c
        return [(Fraction(1), {e: c for e, c in r.items() if c})]
    return [(tl, p) for tl, p in lag if tl > 0]


def _coeff_vector(p, monos):
    index = {e: k for k, e in enumerate(monos)}
    v = [Fraction(0)] * len(monos)
    for e, c in p.items():
        if e not in index:
            raise InputError("polynomial degree exceeds the monomial basis")
        v[index[e]] = c
    return tuple(v)


def klevel_sos_lift(P, k=None):
    """Psd lift of size C(n+k-1, k-1) for a full-dimensional k-level polytope.

    The lift carries rank-one preimages of the vertices and one psd certificate per
    facet, so ``verify_lift`` can certify it.  ``meta`` records the basis functions.
    """
    if P.dim != P.ambient:
        raise NotFullDimensional("klevel lifts need a full-dimensional polytope")
    lev = levelness(P)
    k = lev if k is None else k
    if lev > k:
        raise InputError(f"polytope is {lev}-level, not {k}-level", levelness=lev)
    n = P.ambient
    X = P.vertices
    rows_idx = monomials(n, k - 1)
    size = len(rows_idx)
    assert size == comb(n + k - 1, k - 1)
    # basis of functions on X among monomials of degree <= 2k-2, starting with 1, x_i
    cand = monomials(n, 2 * k - 2)
    basis, vals = [], []
    for e in cand:
        ev = tuple(mono_value(e, x) for x in X)
        if rank(vals + [ev]) > len(vals):
            basis.append(e)
            vals.append(ev)
    if basis[: n + 1] != monomials(n, 1):
        raise InputError("coordinates are not independent on the vertex set")
    # express every product of row monomials in the basis
    cols = Matrix.from_cols(vals, len(X))
    expr = {}
    for a in rows_idx:
        for b in rows_idx:
            e = tuple(x + y for x, y in zip(a, b))
            if e not in expr:
                target = [mono_value(e, x) for x in X]
                c = solve(cols, target)
                if c is None:
                    raise InputError("internal: product not in the span of the basis")
                expr[e] = c
    nb = len(basis)
    mats = []
    for t in range(nb):
        mats.append(Matrix([
            [expr[tuple(x + y for x, y in zip(a, b))][t] for b in rows_idx] for a in rows_idx
        ], ncols=size))
    lmi = LmiSpec(mats[0], tuple(mats[1:]), tuple(_mono_name(e) for e in basis[1:]))
    pre = tuple(tuple(v[j] for v in vals[1:]) for j in range(len(X)))
    certs = []
    levels = slack_levels(P)
    for (a, beta), lv in zip(P.facets, levels):
        B = Matrix.zeros(size, size)
        for w, p in facet_sos(lv, a, beta, n):
            c = _coeff_vector(p, rows_idx)
            B = B + outer(c).scale(w)
        certs.append(B)
    ell = nb - 1
    return ConeLift(
        "psd", n, coordinate_projection(n, ell), lmi=lmi,
        vertex_preimages=pre, facet_certificates=tuple(certs),
        meta={"k": k, "row_monomials": rows_idx, "basis": basis},
    )


def rank_one_factorization(P, k=None):
    """Psd factorization of the slack matrix: m(v) m(v)^T per vertex, the certificate per facet."""
    from ..factor import PsdFactorization

    L = klevel_sos_lift(P, k)
    rows_idx = L.meta["row_monomials"]
    vmats = [outer(tuple(mono_value(e, v) for e in rows_idx)) for v in P.vertices]
    return PsdFactorization.from_matrices(vmats, L.facet_certificates)


def _mono_name(e):
    parts = []
    for i, k in enumerate(e):
        if k == 1:
            parts.append(f"x{i + 1}")
        elif k > 1:
            parts.append(f"x{i + 1}^{k}")
    return "*".join(parts) or "1"
