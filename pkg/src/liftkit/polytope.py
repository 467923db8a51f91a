"""Polytopes in both representations, converted by double description.

A ``Polytope`` always carries its vertices, its facet inequalities a.x <= beta,
the equations of its affine hull and the facet/vertex incidence.

Normal forms:
  * vertices keep input order when built from points, and are sorted
    lexicographically when computed from inequalities;
  * facets keep the order of the first input inequality defining them when built
    from inequalities, and are sorted lexicographically otherwise;
  * a facet is written with beta = 1 when the polytope is full dimensional with
    the origin in its interior, and as coprime integers otherwise;
  * for lower dimensional polytopes facet normals vanish on the coordinates that
    are affine functions of the others (see ``affine_hull``).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from math import gcd

from .errors import DimensionError, Infeasible, InputError, NotFullDimensional, OriginNotInterior, Unbounded
from .ratcore import (
    EQ,
    LE,
    LpProblem,
    Matrix,
    affine_hull,
    inverse,
    dot,
    lp_solve,
    nullspace,
    primitive,
    rank,
    solve,
    vec,
    vsub,
)


@dataclass(frozen=True)
class VRep:
    dim: int
    points: tuple


@dataclass(frozen=True)
class HRep:
    dim: int
    ineqs: tuple  # pairs (a, beta) meaning a.x <= beta
    eqs: tuple = ()  # pairs (a, beta) meaning a.x = beta

    @classmethod
    def make(cls, ineqs, eqs=(), dim=None):
        ineqs = tuple((vec(a), Fraction(b)) for a, b in ineqs)
        eqs = tuple((vec(a), Fraction(b)) for a, b in eqs)
        if dim is None:
            first = ineqs[0] if ineqs else eqs[0]
            dim = len(first[0])
        for a, _ in ineqs + eqs:
            if len(a) != dim:
                raise DimensionError(f"constraint of length {len(a)} in dimension {dim}")
        return cls(dim, ineqs, eqs)


@dataclass(frozen=True)
class Polytope:
    ambient: int
    vertices: tuple
    facets: tuple  # (a, beta): a.x <= beta
    equations: tuple  # (a, beta): a.x = beta
    incidence: tuple  # per facet, frozenset of tight vertex indices

    @property
    def dim(self):
        return self.ambient - len(self.equations)

    @property
    def nvertices(self):
        return len(self.vertices)

    @property
    def nfacets(self):
        return len(self.facets)

    def contains(self, x):
        x = vec(x)
        return all(dot(a, x) <= b for a, b in self.facets) and all(
            dot(a, x) == b for a, b in self.equations
        )

    def violated(self, x):
        """Index of the first violated facet (or ``-1 - k`` for equation k), else None."""
        x = vec(x)
        for k, (a, b) in enumerate(self.equations):
            if dot(a, x) != b:
                return -1 - k
        for i, (a, b) in enumerate(self.facets):
            if dot(a, x) > b:
                return i
        return None

    def hrep(self):
        return HRep(self.ambient, self.facets, self.equations)

    def vrep(self):
        return VRep(self.ambient, self.vertices)

    def origin_interior(self):
        return self.dim == self.ambient and all(b > 0 for _, b in self.facets)


# -- double description --------------------------------------------------------


def _int_rows(rows):
    out = []
    for r in rows:
        p = primitive(vec(r))
        out.append(tuple(int(x) for x in p))
    return out


def extreme_rays(rows, d):
    """Extreme rays of the pointed cone {z in R^d : r.z >= 0 for every row r}.

    Rows are processed in order; rays are returned as primitive integer tuples in
    a deterministic order.  Raises ``Unbounded`` if the rows do not have rank d
    (the cone then contains a line).
    """
    A = _int_rows(rows)
    chosen = []
    basis = []
    for i, r in enumerate(A):
        if rank(basis + [r]) > len(basis):
            basis.append(r)
            chosen.append(i)
            if len(basis) == d:
                break
    if len(basis) < d:
        raise Unbounded("cone is not pointed", rank=len(basis))
    inv = inverse(Matrix(basis))
    rays = []
    for k in range(d):
        rays.append(tuple(int(x) for x in primitive(inv.col(k))))

    def zero_mask(ray, idxs):
        m = 0
        for i in idxs:
            if sum(a * b for a, b in zip(A[i], ray)) == 0:
                m |= 1 << i
        return m

    masks = [zero_mask(r, chosen) for r in rays]
    done = set(chosen)
    for i in range(len(A)):
        if i in done:
            continue
        row = A[i]
        vals = [sum(a * b for a, b in zip(row, r)) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        zer = [k for k, v in enumerate(vals) if v == 0]
        new_rays = [rays[k] for k in pos] + [rays[k] for k in zer]
        new_masks = [masks[k] for k in pos] + [masks[k] | (1 << i) for k in zer]
        for p in pos:
            for q in neg:
                common = masks[p] & masks[q]
                if bin(common).count("1") < d - 2:
                    continue
                adjacent = True
                for k in range(len(rays)):
                    if k != p and k != q and masks[k] & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vp, vq = vals[p], -vals[q]
                r = tuple(vp * b + vq * a for a, b in zip(rays[p], rays[q]))
                g = 0
                for x in r:
                    g = gcd(g, x)
                r = tuple(x // g for x in r)
                new_rays.append(r)
                new_masks.append(common | (1 << i))
        rays, masks = new_rays, new_masks
        done.add(i)
    return sorted(rays)


def _facet_key(f):
    a, b = f
    return (tuple(a), b)


def _normalize_facets(facets, full_dim):
    facets = [(primitive(tuple(a) + (b,))[:-1], primitive(tuple(a) + (b,))[-1]) for a, b in facets]
    if full_dim and facets and all(b > 0 for _, b in facets):
        facets = [(tuple(x / b for x in a), Fraction(1)) for a, b in facets]
    return facets


def _assemble(ambient, vertices, facets, equations):
    inc = tuple(
        frozenset(j for j, v in enumerate(vertices) if dot(a, v) == b) for a, b in facets
    )
    return Polytope(ambient, tuple(vertices), tuple(facets), tuple(equations), inc)


def v_to_h(points):
    """Polytope from points (vertex order = first occurrence order of extreme points)."""
    if isinstance(points, VRep):
        points = points.points
    pts = []
    seen = set()
    for p in points:
        p = vec(p)
        if p not in seen:
            seen.add(p)
            pts.append(p)
    if not pts:
        raise InputError("empty point set")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise DimensionError("points of different lengths")
    piv, eqs = affine_hull(pts)
    d = len(piv)
    if d == 0:
        return _assemble(n, pts[:1], [], eqs)
    proj = [tuple(p[c] for c in piv) for p in pts]
    rows = [tuple(-x for x in q) + (Fraction(1),) for q in proj]
    rays = extreme_rays(rows, d + 1)
    facets = []
    for r in rays:
        a_p, beta = r[:-1], r[-1]
        if all(x == 0 for x in a_p):
            continue
        a = [Fraction(0)] * n
        for c, x in zip(piv, a_p):
            a[c] = Fraction(x)
        facets.append((tuple(a), Fraction(beta)))
    facets = _normalize_facets(facets, d == n)
    facets.sort(key=_facet_key)
    # keep only extreme points: tight facet normals must have rank d
    verts = []
    for p, q in zip(pts, proj):
        tight = [tuple(f[0][c] for c in piv) for f in facets if dot(f[0], p) == f[1]]
        if rank(tight) == d:
            verts.append(p)
    return _assemble(n, verts, facets, eqs)


def h_to_v(hrep):
    """Polytope from inequalities (and equations).  Raises on empty or unbounded input."""
    n = hrep.dim
    if hrep.eqs:
        E = [a for a, _ in hrep.eqs]
        x0 = solve(E, [b for _, b in hrep.eqs])
        if x0 is None:
            raise Infeasible("equations are inconsistent")
        N = nullspace(E, n)
    else:
        x0 = tuple(Fraction(0) for _ in range(n))
        N = nullspace([], n)
    k = len(N)

    def lift(w):
        return tuple(x0[i] + sum((N[j][i] * w[j] for j in range(k)), Fraction(0)) for i in range(n))

    red = []
    for a, b in hrep.ineqs:
        aN = tuple(dot(a, N[j]) for j in range(k))
        red.append((aN, b - dot(a, x0)))
    if k == 0:
        if all(b >= 0 for _, b in red):
            verts = [x0]
        else:
            raise Infeasible("the unique solution of the equations violates an inequality")
    else:
        rows = [tuple(-x for x in aN) + (b,) for aN, b in red]
        rows.append(tuple(Fraction(0) for _ in range(k)) + (Fraction(1),))
        try:
            rays = extreme_rays(rows, k + 1)
        except Unbounded:
            if _feasible(hrep):
                raise Unbounded("polyhedron contains a line") from None
            raise Infeasible("inequalities have no common solution") from None
        verts, recession = [], False
        for r in rays:
            if r[-1] > 0:
                verts.append(lift(tuple(Fraction(x, r[-1]) for x in r[:-1])))
            else:
                recession = True
        if not verts:
            raise Infeasible("inequalities have no common solution")
        if recession:
            raise Unbounded("polyhedron is unbounded")
    verts.sort()
    P = v_to_h(verts)
    # order facets by their first defining input inequality
    order = []
    for a, b in hrep.ineqs:
        tight = frozenset(j for j, v in enumerate(P.vertices) if dot(a, v) == b)
        for fi, inc in enumerate(P.incidence):
            if inc == tight and fi not in order:
                order.append(fi)
    order += [fi for fi in range(P.nfacets) if fi not in order]
    return _assemble(n, P.vertices, [P.facets[i] for i in order], P.equations)


def _feasible(hrep):
    A = [a for a, _ in hrep.ineqs] + [a for a, _ in hrep.eqs]
    b = [b for _, b in hrep.ineqs] + [b for _, b in hrep.eqs]
    senses = [LE] * len(hrep.ineqs) + [EQ] * len(hrep.eqs)
    res = lp_solve(LpProblem.build([0] * hrep.dim, A, b, senses, lower=None))
    return res.status == "optimal"


def from_both(vertices, facets, equations=()):
    """Assemble a polytope from known vertices and facets, keeping both orders.

    The data is checked against a fresh conversion of the vertices.
    """
    vertices = [vec(v) for v in vertices]
    facets = [(vec(a), Fraction(b)) for a, b in facets]
    ref = v_to_h(vertices)
    if len(ref.vertices) != len(vertices):
        raise InputError("some listed points are not vertices")
    ref_inc = set(ref.incidence)
    for a, b in facets:
        tight = frozenset(j for j, v in enumerate(ref.vertices) if dot(a, v) == b)
        if any(dot(a, v) > b for v in vertices) or tight not in ref_inc:
            raise InputError("listed inequality is not a facet", facet=(a, b))
    if len({frozenset(j for j, v in enumerate(vertices) if dot(a, v) == b) for a, b in facets}) != ref.nfacets or len(facets) != ref.nfacets:
        raise InputError("facet list is incomplete or repeated")
    eqs = list(equations) if equations else list(ref.equations)
    return _assemble(len(vertices[0]), vertices, facets, eqs)


# -- polarity and combinatorics -------------------------------------------------


def polar(P):
    """Polar polytope.  Vertex j of the result is facet j of P and vice versa."""
    if P.dim != P.ambient:
        raise NotFullDimensional("polar needs a full-dimensional polytope", dim=P.dim)
    if not P.origin_interior():
        raise OriginNotInterior("origin is not an interior point")
    verts = [tuple(x / b for x in a) for a, b in P.facets]
    facets = [(v, Fraction(1)) for v in P.vertices]
    facets = _normalize_facets(facets, True)
    return _assemble(P.ambient, verts, facets, [])


def incidence(P):
    """0/1 matrix: rows facets, columns vertices."""
    return tuple(tuple(int(j in inc) for j in range(P.nvertices)) for inc in P.incidence)


def face_dim(P, face):
    if not face:
        return -1
    pts = [P.vertices[j] for j in sorted(face)]
    return rank([vsub(p, pts[0]) for p in pts[1:]]) if len(pts) > 1 else 0


@dataclass(frozen=True)
class FaceLattice:
    faces: tuple  # frozensets of vertex indices, sorted by (dim, size, indices)
    dims: tuple

    def __len__(self):
        return len(self.faces)

    def f_vector(self):
        top = max(self.dims)
        return tuple(sum(1 for d in self.dims if d == k) for k in range(-1, top + 1))

    def covers(self):
        """Pairs (i, j) with face i a facet of face j."""
        out = []
        for j, G in enumerate(self.faces):
            for i, F in enumerate(self.faces):
                if F < G and self.dims[i] == self.dims[j] - 1:
                    out.append((i, j))
        return out

    def longest_chain(self):
        """Length (number of faces) of a longest strictly increasing chain of nonempty faces."""
        best = {}
        order = sorted(range(len(self.faces)), key=lambda i: len(self.faces[i]))
        for j in order:
            if not self.faces[j]:
                continue
            b = 1
            for i in order:
                if self.faces[i] and self.faces[i] < self.faces[j]:
                    b = max(b, best[i] + 1)
            best[j] = b
        return max(best.values())


def face_lattice(P):
    """All faces, as vertex index sets, including the empty face and P itself."""
    full = frozenset(range(P.nvertices))
    faces = {full}
    frontier = [full]
    facet_sets = list(P.incidence)
    while frontier:
        nxt = []
        for F in frontier:
            for S in facet_sets:
                G = F & S
                if G not in faces:
                    faces.add(G)
                    nxt.append(G)
        frontier = nxt
    faces.add(frozenset())
    dims = {F: face_dim(P, F) for F in faces}
    ordered = sorted(faces, key=lambda F: (dims[F], len(F), sorted(F)))
    return FaceLattice(tuple(ordered), tuple(dims[F] for F in ordered))


def exposing_functional(P, subset):
    """An affine functional (a, beta) tight exactly on ``subset``, or None.

    Solved as an LP maximizing the margin t of the other vertices, with a in [-1,1]^n.
    """
    subset = set(subset)
    n = P.ambient
    A, b, senses = [], [], []
    for j, v in enumerate(P.vertices):
        row = list(v) + [Fraction(-1)]
        if j in subset:
            A.append(row + [Fraction(0)])
            senses.append(EQ)
        else:
            A.append(row + [Fraction(1)])
            senses.append(LE)
        b.append(Fraction(0))
    c = [0] * (n + 1) + [1]
    lower = [-1] * n + [None, None]
    upper = [1] * n + [None, 1]
    res = lp_solve(LpProblem.build(c, A, b, senses, lower=lower, upper=upper))
    if res.status != "optimal" or res.value <= 0:
        return None
    return res.x[:n], res.x[n]


def slack_levels(P):
    """Per facet, the sorted distinct values beta - a.v over the vertices."""
    out = []
    for a, b in P.facets:
        out.append(tuple(sorted({b - dot(a, v) for v in P.vertices})))
    return out


def levelness(P):
    """Smallest k such that P is k-level."""
    lv = slack_levels(P)
    return max((len(x) for x in lv), default=1)


def is_k_level(P, k):
    return levelness(P) <= k


def is_k_neighborly(P, k):
    """(True, None) if every k vertices span a face, else (False, first failing subset)."""
    for I in combinations(range(P.nvertices), k):
        if exposing_functional(P, I) is None:
            return False, I
    return True, None


def neighborliness(P):
    """Largest k for which P is k-neighborly (0 if none)."""
    k = 0
    while k < P.nvertices and is_k_neighborly(P, k + 1)[0]:
        k += 1
    return k


# -- standard families ----------------------------------------------------------


def cube(n):
    return v_to_h([tuple(Fraction(s) for s in signs) for signs in product((-1, 1), repeat=n)])


def cross_polytope(n):
    pts = []
    for i in range(n):
        for s in (1, -1):
            v = [Fraction(0)] * n
            v[i] = Fraction(s)
            pts.append(tuple(v))
    return v_to_h(pts)


def std_simplex(n):
    """conv(0, e_1, ..., e_n)."""
    pts = [tuple(Fraction(0) for _ in range(n))]
    for i in range(n):
        pts.append(tuple(Fraction(int(i == j)) for j in range(n)))
    return v_to_h(pts)


def cyclic_polytope(d, ts):
    return v_to_h([tuple(Fraction(t) ** k for k in range(1, d + 1)) for t in ts])


def permutahedron(n):
    return v_to_h([tuple(Fraction(x) for x in p) for p in permutations(range(1, n + 1))])


def polygon(points):
    return v_to_h(points)
