"""Honeycombs and membership in the Horn cone.

A size-n honeycomb is encoded on the triangulated triangle with corners
(n,0,0), (0,n,0), (0,0,n).  Each edge of the triangulation is a honeycomb edge
whose value is its constant coordinate; edges come in three direction classes
(-1,1,0), (0,-1,1), (1,0,-1) and are oriented along their class.  Every small
triangle is a honeycomb vertex, where the three edge values sum to zero.  Every
interior edge is shared by two triangles forming a rhombus; the rhombus
inequality e_a >= e_b compares the two parallel sides leaving the obtuse corners
and says that the corresponding honeycomb edge has nonnegative length.

Boundary edges carry the boundary data, read around the triangle: lambda_1..n
from (n,0,0) to (0,n,0), then mu_1..n to (0,0,n), then nu_1..n back to (n,0,0).
With weakly decreasing lambda, mu, nu this is the sum-zero Horn problem: a triple
is admissible exactly when Hermitian A, B, C with these spectra and A + B + C = 0
exist.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import DimensionError, InputError
from .ratcore import EQ, GE, LpProblem, check_farkas, lp_solve, solve, vec

_DIRS = ((-1, 1, 0), (0, -1, 1), (1, 0, -1))
_SIDES = ("lambda", "mu", "nu")


def _add(p, d):
    return tuple(a + b for a, b in zip(p, d))


@dataclass(frozen=True)
class HoneycombSpec:
    n: int
    edges: tuple  # (start lattice point, class); value = h(end) - h(start)
    boundary: tuple  # per edge: (side, index) for boundary edges, else None
    vertices: tuple  # per small triangle: its three edge indices
    gamma: tuple  # pairs (a, b): e_a - e_b >= 0, one per interior edge

    @property
    def internal(self):
        return tuple(k for k, b in enumerate(self.boundary) if b is None)

    def edge_index(self, p, q):
        """Index of the edge between lattice points p and q, and the sign of h(q) - h(p)."""
        d = tuple(b - a for a, b in zip(p, q))
        for c, dc in enumerate(_DIRS):
            if d == dc:
                return self.edges.index((tuple(p), c)), 1
            if d == tuple(-x for x in dc):
                return self.edges.index((tuple(q), c)), -1
        raise InputError(f"{p} and {q} are not adjacent")

    def boundary_edge(self, side, t):
        return self.boundary.index((side, t))


def honey_cone(n):
    """Combinatorial data of size-n honeycombs."""
    if n < 1:
        raise InputError("honeycomb size must be positive")
    pts = sorted((i, j, n - i - j) for i in range(n + 1) for j in range(n + 1 - i))
    pset = set(pts)
    edges = []
    for p in pts:
        for c, d in enumerate(_DIRS):
            if _add(p, d) in pset:
                edges.append((p, c))
    index = {e: k for k, e in enumerate(edges)}
    boundary = [None] * len(edges)
    for t in range(1, n + 1):
        boundary[index[((n - t + 1, t - 1, 0), 0)]] = ("lambda", t)
        boundary[index[((0, n - t + 1, t - 1), 1)]] = ("mu", t)
        boundary[index[((t - 1, 0, n - t + 1), 2)]] = ("nu", t)
    tris = []
    for i in range(n):
        for j in range(n - i):
            k = n - 1 - i - j
            tris.append(((i + 1, j, k), (i, j + 1, k), (i, j, k + 1)))
    for i in range(n - 1):
        for j in range(n - 1 - i):
            k = n - 2 - i - j
            tris.append(((i + 1, j + 1, k), (i + 1, j, k + 1), (i, j + 1, k + 1)))

    def eid(p, q):
        d = tuple(b - a for a, b in zip(p, q))
        if d in _DIRS:
            return index[(p, _DIRS.index(d))], 1
        return index[(q, _DIRS.index(tuple(-x for x in d)))], -1

    vertices = []
    for a, b, c in tris:
        vertices.append(tuple(eid(p, q)[0] for p, q in ((a, b), (b, c), (c, a))))
    gamma = []
    for k, (p, c) in enumerate(edges):
        if boundary[k] is not None:
            continue
        q = _add(p, _DIRS[c])
        apex = [next(v for v in t if v not in (p, q)) for t in tris if p in t and q in t]
        a1, a2 = apex
        # hive concavity h(p) + h(q) >= h(a1) + h(a2), as a difference of parallel edges
        e1, s1 = eid(a1, p)
        e2, _ = eid(q, a2)
        gamma.append((e1, e2) if s1 > 0 else (e2, e1))
    return HoneycombSpec(n, tuple(edges), tuple(boundary), tuple(vertices), tuple(gamma))


def _boundary_values(spec, lam, mu, nu):
    data = {"lambda": lam, "mu": mu, "nu": nu}
    return {k: data[b[0]][b[1] - 1] for k, b in enumerate(spec.boundary) if b is not None}


def _system(spec, lam, mu, nu):
    """Constraint rows over the interior edges; rhs linear in (lambda, mu, nu).

    Returns (A, b, senses, D) where b = D . (lambda, mu, nu).
    """
    n = spec.n
    internal = spec.internal
    col = {e: i for i, e in enumerate(internal)}
    bpos = {}
    for k, b in enumerate(spec.boundary):
        if b is not None:
            bpos[k] = _SIDES.index(b[0]) * n + b[1] - 1
    w = tuple(lam) + tuple(mu) + tuple(nu)
    A, D, senses = [], [], []

    def row(terms, sense):
        r = [Fraction(0)] * len(internal)
        d = [Fraction(0)] * (3 * n)
        for e, c in terms:
            if e in col:
                r[col[e]] += c
            else:
                d[bpos[e]] -= c
        A.append(tuple(r))
        D.append(tuple(d))
        senses.append(sense)

    for tri in spec.vertices:
        row([(e, 1) for e in tri], EQ)
    for a, b in spec.gamma:
        row([(a, 1), (b, -1)], GE)
    bvec = [sum((x * y for x, y in zip(d, w)), Fraction(0)) for d in D]
    return A, bvec, senses, D


@dataclass
class HornCertificate:
    """Multipliers proving non-membership.

    ``kind`` is "chamber" (a violated ordering or trace condition, given by
    ``coeffs`` . (lambda, mu, nu) >= 0 or == 0) or "farkas" (``coeffs`` . w >= 0 holds on
    the whole Horn cone and fails at the input; ``multipliers`` certify it).
    """

    kind: str
    coeffs: tuple
    multipliers: tuple = ()
    equality: bool = False


@dataclass
class HornResult:
    member: bool
    edge_values: tuple = None  # all edge values of a witness honeycomb
    certificate: HornCertificate = None
    spec: HoneycombSpec = field(default=None, repr=False)

    def __bool__(self):
        return self.member


def _chamber_violation(lam, mu, nu):
    n = len(lam)
    w = tuple(lam) + tuple(mu) + tuple(nu)
    if sum(w) != 0:
        return HornCertificate("chamber", tuple(Fraction(1) for _ in w), equality=True)
    for s in range(3):
        for i in range(n - 1):
            if w[s * n + i] < w[s * n + i + 1]:
                c = [Fraction(0)] * (3 * n)
                c[s * n + i] = Fraction(1)
                c[s * n + i + 1] = Fraction(-1)
                return HornCertificate("chamber", tuple(c))
    return None


def horn_member(lam, mu, nu):
    """Decide whether (lambda, mu, nu) bounds a honeycomb, with witness or certificate."""
    lam, mu, nu = vec(lam), vec(mu), vec(nu)
    n = len(lam)
    if len(mu) != n or len(nu) != n:
        raise DimensionError("lambda, mu and nu must have equal length")
    spec = honey_cone(n)
    bad = _chamber_violation(lam, mu, nu)
    if bad is not None:
        return HornResult(False, certificate=bad, spec=spec)
    A, b, senses, D = _system(spec, lam, mu, nu)
    prob = LpProblem.build([0] * len(spec.internal), A, b, senses, lower=None)
    res = lp_solve(prob)
    if res.status == "optimal":
        vals = _boundary_values(spec, lam, mu, nu)
        for e, x in zip(spec.internal, res.x):
            vals[e] = x
        return HornResult(True, tuple(vals[k] for k in range(len(spec.edges))), spec=spec)
    y = res.y
    coeffs = tuple(sum((y[i] * D[i][j] for i in range(len(y))), Fraction(0)) for j in range(3 * n))
    return HornResult(False, certificate=HornCertificate("farkas", coeffs, tuple(y)), spec=spec)


def verify_certificate(lam, mu, nu, cert):
    """Independent check that ``cert`` refutes (lambda, mu, nu)."""
    lam, mu, nu = vec(lam), vec(mu), vec(nu)
    w = tuple(lam) + tuple(mu) + tuple(nu)
    val = sum((c * x for c, x in zip(cert.coeffs, w)), Fraction(0))
    if cert.kind == "chamber":
        return val != 0 if cert.equality else val < 0
    spec = honey_cone(len(lam))
    A, b, senses, D = _system(spec, lam, mu, nu)
    prob = LpProblem.build([0] * len(spec.internal), A, b, senses, lower=None)
    y = cert.multipliers
    agg = tuple(sum((y[i] * D[i][j] for i in range(len(y))), Fraction(0)) for j in range(len(w)))
    return check_farkas(prob, y) and agg == tuple(cert.coeffs) and val < 0


def verify_honeycomb(lam, mu, nu, edge_values):
    """Check vertex equations, rhombus inequalities and boundary data of a witness."""
    spec = honey_cone(len(lam))
    vals = _boundary_values(spec, vec(lam), vec(mu), vec(nu))
    e = vec(edge_values)
    if len(e) != len(spec.edges):
        return False
    if any(e[k] != v for k, v in vals.items()):
        return False
    if any(sum(e[k] for k in tri) != 0 for tri in spec.vertices):
        return False
    return all(e[a] >= e[b] for a, b in spec.gamma) and _chamber_violation(lam, mu, nu) is None


# -- elimination for n = 3 -----------------------------------------------------------


def default_free_edge(spec):
    """For n = 3: the edge from the centre (1,1,1) to (1,2,0) (the lambda side point
    next to the lambda/mu corner)."""
    return spec.edge_index((1, 2, 0), (1, 1, 1))[0]


@dataclass(frozen=True)
class LinearSystem:
    """Inequalities c . z + d >= 0 and equations c . z + d = 0 in variables ``names``."""

    names: tuple
    ineqs: tuple
    eqs: tuple = ()

    def holds(self, z):
        z = vec(z)
        f = lambda c, d: sum((a * b for a, b in zip(c, z)), Fraction(0)) + d  # noqa: E731
        return all(f(c, d) >= 0 for c, d in self.ineqs) and all(f(c, d) == 0 for c, d in self.eqs)


def eliminate_to_inequalities(lam, mu, free_edge=None):
    """Inequalities in (nu_1, nu_2, e) for fixed lambda, mu in size 3.

    nu_3 is eliminated through the trace condition and every interior edge except
    ``free_edge`` through the vertex equations.  Returns a ``LinearSystem`` containing
    the rhombus inequalities and the ordering nu_1 >= nu_2 >= nu_3.
    """
    lam, mu = vec(lam), vec(mu)
    if len(lam) != 3 or len(mu) != 3:
        raise DimensionError("elimination is implemented for size 3")
    spec = honey_cone(3)
    if free_edge is None:
        free_edge = default_free_edge(spec)
    if spec.boundary[free_edge] is not None:
        raise InputError("the free edge must be interior")
    # unknowns: interior edges other than free_edge, and nu_3; parameters nu_1, nu_2, e
    others = [e for e in spec.internal if e != free_edge]
    nu_edges = [spec.boundary_edge("nu", t) for t in (1, 2, 3)]
    unknowns = others + [nu_edges[2]]
    params = [nu_edges[0], nu_edges[1], free_edge]
    fixed = {}
    for t in (1, 2, 3):
        fixed[spec.boundary_edge("lambda", t)] = lam[t - 1]
        fixed[spec.boundary_edge("mu", t)] = mu[t - 1]
    # each unknown = const + coeffs . params ; solve once per right-hand side
    M, rhs_cols = [], [[] for _ in range(len(params) + 1)]
    for tri in spec.vertices:
        r = [Fraction(0)] * len(unknowns)
        const = Fraction(0)
        pc = [Fraction(0)] * len(params)
        for e in tri:
            if e in unknowns:
                r[unknowns.index(e)] += 1
            elif e in params:
                pc[params.index(e)] -= 1
            else:
                const -= fixed[e]
        M.append(r)
        rhs_cols[0].append(const)
        for k in range(len(params)):
            rhs_cols[k + 1].append(pc[k])
    sols = [solve(M, col) for col in rhs_cols]
    if any(s is None for s in sols):
        raise InputError("vertex equations are inconsistent")

    def affine(e):
        """(coeffs over params, constant) of edge e."""
        if e in fixed:
            return (Fraction(0),) * 3, fixed[e]
        if e in params:
            c = [Fraction(0)] * 3
            c[params.index(e)] = Fraction(1)
            return tuple(c), Fraction(0)
        u = unknowns.index(e)
        return tuple(sols[k + 1][u] for k in range(3)), sols[0][u]

    ineqs = []
    for a, b in spec.gamma:
        ca, da = affine(a)
        cb, db = affine(b)
        ineqs.append((tuple(x - y for x, y in zip(ca, cb)), da - db))
    n1, n2, n3 = (affine(e) for e in nu_edges)
    for (c1, d1), (c2, d2) in ((n1, n2), (n2, n3)):
        ineqs.append((tuple(x - y for x, y in zip(c1, c2)), d1 - d2))
    return LinearSystem(("nu1", "nu2", "e"), tuple(ineqs))


def implies(system, ineq):
    """True iff c . z + d >= 0 holds on every point of ``system`` (exact LP)."""
    c, d = ineq
    A = [cc for cc, _ in system.ineqs] + [cc for cc, _ in system.eqs]
    b = [-dd for _, dd in system.ineqs] + [-dd for _, dd in system.eqs]
    senses = [GE] * len(system.ineqs) + [EQ] * len(system.eqs)
    res = lp_solve(LpProblem.build([-x for x in c], A, b, senses, lower=None))
    if res.status == "infeasible":
        return True
    if res.status == "unbounded":
        return False
    return -res.value + d >= 0


def equivalent(s1, s2):
    """Mutual implication of two inequality systems in the same variables."""
    return all(implies(s1, q) for q in s2.ineqs) and all(implies(s2, q) for q in s1.ineqs)
