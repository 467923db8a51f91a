"""Plain-text file formats.  Every reader reports errors with line and column.

Printers emit canonical text: one record per line, single spaces, rationals as
``p`` or ``p/q``, no comments.  Readers accept ``#`` comments and blank lines.
"""

from fractions import Fraction

from .errors import ParseError
from .factor import NonnegFactorization, PsdFactorization, ScaledMatrix
from .lift import ConeLift, LmiSpec
from .liftgen.obdd import Obdd
from .liftgen.poset import Poset
from .liftgen.theta import Graph
from .polytope import HRep, VRep
from .ratcore import Matrix, fmt_q
from .slack import SlackMatrix


class Reader:
    def __init__(self, text, source=None):
        self.source = source
        self.lines = []
        for no, raw in enumerate(text.splitlines(), 1):
            body = raw.split("#", 1)[0]
            toks = []
            col = 0
            for part in body.split():
                col = body.index(part, col)
                toks.append((part, col + 1))
                col += len(part)
            if toks:
                self.lines.append((no, toks))
        self.pos = 0
        self.last = (len(text.splitlines()) or 1, 1)

    def error(self, msg, line=None, col=None):
        if line is None:
            line, col = self.last
        return ParseError(msg, line, col, self.source)

    def peek(self):
        return self.lines[self.pos] if self.pos < len(self.lines) else None

    def next(self, what="a line"):
        if self.pos >= len(self.lines):
            raise self.error(f"unexpected end of input, expected {what}")
        line = self.lines[self.pos]
        self.pos += 1
        self.last = (line[0], line[1][0][1])
        return line

    def done(self):
        return self.pos >= len(self.lines)

    def expect_end(self):
        if not self.done():
            no, toks = self.lines[self.pos]
            raise self.error("unexpected extra input", no, toks[0][1])

    def header(self, keyword, nargs):
        no, toks = self.next(f"'{keyword}' header")
        if toks[0][0] != keyword:
            raise self.error(f"expected '{keyword}', found {toks[0][0]!r}", no, toks[0][1])
        if len(toks) != nargs + 1:
            raise self.error(f"'{keyword}' takes {nargs} numbers", no, toks[0][1])
        return tuple(self.int_tok(no, t) for t in toks[1:])

    def int_tok(self, no, tok):
        s, col = tok
        try:
            v = int(s)
        except ValueError:
            raise self.error(f"expected an integer, found {s!r}", no, col) from None
        if v < 0:
            raise self.error(f"expected a nonnegative integer, found {s!r}", no, col)
        return v

    def q_tok(self, no, tok):
        s, col = tok
        if any(c in s for c in ".eE"):
            raise self.error(f"expected an exact rational p/q, found {s!r}", no, col)
        try:
            return Fraction(s)
        except (ValueError, ZeroDivisionError):
            raise self.error(f"expected a rational p/q, found {s!r}", no, col) from None

    def q_row(self, length, what="row"):
        no, toks = self.next(what)
        if len(toks) != length:
            if len(toks) > length:
                col = toks[length][1]  # first extra entry
            else:
                col = toks[-1][1] + len(toks[-1][0])  # just past the end of the row
            raise self.error(f"{what} has {len(toks)} entries, expected {length}", no, col)
        return tuple(self.q_tok(no, t) for t in toks)


def format_row(xs):
    return " ".join(fmt_q(x) for x in xs)


# -- polytopes -----------------------------------------------------------------------


def read_vpoly(r):
    n, v = r.header("V", 2)
    pts = tuple(r.q_row(n, "point") for _ in range(v))
    return VRep(n, pts)


def write_vpoly(V):
    pts = V.points if isinstance(V, VRep) else V.vertices
    n = V.dim if isinstance(V, VRep) else V.ambient
    return "".join([f"V {n} {len(pts)}\n"] + [format_row(p) + "\n" for p in pts])


def read_hpoly(r):
    n, f = r.header("H", 2)
    ineqs = []
    for _ in range(f):
        row = r.q_row(n + 1, "inequality")
        ineqs.append((row[:n], row[n]))
    eqs = []
    nxt = r.peek()
    if nxt is not None and nxt[1][0][0] == "E":
        n2, e = r.header("E", 2)
        if n2 != n:
            raise r.error(f"equation block dimension {n2} differs from {n}")
        for _ in range(e):
            row = r.q_row(n + 1, "equation")
            eqs.append((row[:n], row[n]))
    return HRep(n, tuple(ineqs), tuple(eqs))


def write_hpoly(H):
    if not isinstance(H, HRep):
        H = H.hrep()
    out = [f"H {H.dim} {len(H.ineqs)}\n"]
    out += [format_row(tuple(a) + (b,)) + "\n" for a, b in H.ineqs]
    if H.eqs:
        out.append(f"E {H.dim} {len(H.eqs)}\n")
        out += [format_row(tuple(a) + (b,)) + "\n" for a, b in H.eqs]
    return "".join(out)


def read_polytope_input(r):
    """VRep or HRep depending on the header keyword."""
    first = r.peek()
    if first is None:
        raise r.error("empty input")
    kw = first[1][0][0]
    if kw == "V":
        return read_vpoly(r)
    if kw == "H":
        return read_hpoly(r)
    raise r.error(f"expected 'V' or 'H', found {kw!r}", first[0], first[1][0][1])


# -- matrices and factorizations -------------------------------------------------------


def read_slack(r):
    no, toks = r.next("'rows cols' header")
    if len(toks) != 2:
        raise r.error("slack matrix header is 'rows cols'", no, toks[0][1])
    m, n = (r.int_tok(no, t) for t in toks)
    rows = [r.q_row(n, "matrix row") for _ in range(m)]
    return Matrix(rows, ncols=n)


def write_slack(S):
    M = S.matrix if isinstance(S, SlackMatrix) else S
    return "".join([f"{M.nrows} {M.ncols}\n"] + [format_row(row) + "\n" for row in M.rows])


def read_nnf(r):
    m, f, v = r.header("NNF", 3)
    A = [r.q_row(f, "row of A") for _ in range(m)]
    B = [r.q_row(v, "row of B") for _ in range(m)]
    return NonnegFactorization(Matrix(A, ncols=f), Matrix(B, ncols=v))


def write_nnf(F):
    out = [f"NNF {F.size} {F.A.ncols} {F.B.ncols}\n"]
    out += [format_row(r) + "\n" for r in F.A.rows]
    out += [format_row(r) + "\n" for r in F.B.rows]
    return "".join(out)


def _upper(M):
    return [M[i, j] for i in range(M.nrows) for j in range(i, M.ncols)]


def _from_upper(vals, m):
    rows = [[Fraction(0)] * m for _ in range(m)]
    it = iter(vals)
    for i in range(m):
        for j in range(i, m):
            rows[i][j] = rows[j][i] = next(it)
    return Matrix(rows, ncols=m)


def read_psdf(r):
    m, f, v = r.header("PSDF", 3)
    t = m * (m + 1) // 2
    verts = [_from_upper(r.q_row(t, "vertex factor"), m) for _ in range(v)]
    facets = [_from_upper(r.q_row(t, "facet factor"), m) for _ in range(f)]
    return PsdFactorization.from_matrices(verts, facets)


def write_psdf(F):
    m = F.size
    out = [f"PSDF {m} {len(F.facet_factors)} {len(F.vertex_factors)}\n"]
    for s in F.vertex_factors + F.facet_factors:
        out.append(format_row(_upper(ScaledMatrix.value(s))) + "\n")
    return "".join(out)


# -- lifts -----------------------------------------------------------------------------


def read_lift(r):
    H = read_hpoly(r)
    n, ell = r.header("PROJ", 2)
    if ell != H.dim:
        raise r.error(f"projection has {ell} columns but the lift lives in dimension {H.dim}")
    rows = [r.q_row(ell, "projection row") for _ in range(n)]
    return ConeLift("nonneg", n, Matrix(rows, ncols=ell), hrep=H)


def write_lift(L):
    P = L.projection
    out = [write_hpoly(L.hrep), f"PROJ {P.nrows} {P.ncols}\n"]
    out += [format_row(r) + "\n" for r in P.rows]
    return "".join(out)


def _decimal(q):
    """Exact decimal if q has a terminating expansion, else 17 significant digits."""
    q = Fraction(q)
    d = q.denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    if d == 1:
        k = 0
        while (q * 10 ** k).denominator != 1:
            k += 1
        s = f"{abs(q.numerator) * 10 ** k // q.denominator:0{k + 1}d}"
        body = s if k == 0 else s[:-k] + "." + s[-k:]
        return ("-" if q < 0 else "") + body
    return repr(float(q))


def write_sdpa(lmi, exact=False):
    """SDPA sparse format.  SDPA reads F(x) = sum x_k F_k - F_0, so F_0 = -A0.

    With ``exact`` the values are written as ``p/q``; that sidecar is the source of truth.
    The comment line carries the variable names.
    """
    m = lmi.size
    val = fmt_q if exact else _decimal
    out = ['"vars ' + " ".join(lmi.names) + "\n", f"{lmi.nvars}\n", "1\n", f"{m}\n",
           " ".join(["0"] * lmi.nvars) + "\n"]
    for k, M in enumerate((lmi.constant,) + tuple(lmi.coeffs)):
        sign = -1 if k == 0 else 1
        for i in range(m):
            for j in range(i, m):
                if M[i, j]:
                    out.append(f"{k} 1 {i + 1} {j + 1} {val(sign * M[i, j])}\n")
    return "".join(out)


def read_sdpa_exact(text, source=None):
    """Inverse of ``write_sdpa(lmi, exact=True)``.  The comment line is not '#'-style."""
    lines = text.splitlines()
    if not lines or not lines[0].startswith('"vars'):
        raise ParseError("expected a '\"vars' comment line", 1, 1, source)
    names = tuple(lines[0][len('"vars'):].split())
    r = Reader("\n".join([""] + lines[1:]), source)
    counts = []
    for what in ("variable count", "block count", "block size"):
        no, toks = r.next(what)
        if len(toks) != 1:
            raise r.error(f"expected the {what}", no, toks[0][1])
        counts.append(r.int_tok(no, toks[0]))
    N, nb, m = counts
    if nb != 1:
        raise r.error("only one block is supported")
    if N != len(names):
        raise r.error(f"{N} variables but {len(names)} names")
    r.q_row(N, "objective vector")
    mats = [[[Fraction(0)] * m for _ in range(m)] for _ in range(N + 1)]
    while not r.done():
        no, toks = r.next()
        if len(toks) != 5:
            raise r.error("entry line is 'var block i j value'", no, toks[0][1])
        k, blk, i, j = (r.int_tok(no, t) for t in toks[:4])
        if k > N or blk != 1 or not 1 <= i <= j <= m:
            raise r.error("entry index out of range", no, toks[0][1])
        v = r.q_tok(no, toks[4])
        if k == 0:
            v = -v
        mats[k][i - 1][j - 1] = mats[k][j - 1][i - 1] = v
    Ms = [Matrix(M, ncols=m) for M in mats]
    return LmiSpec(Ms[0], tuple(Ms[1:]), names)


# -- combinatorial inputs ------------------------------------------------------------


def read_poset(r):
    (k,) = r.header("POSET", 1)
    names = []
    for _ in range(k):
        no, toks = r.next("element name")
        if len(toks) != 1:
            raise r.error("one element name per line", no, toks[0][1])
        names.append(toks[0][0])
    if len(set(names)) != k:
        raise r.error("duplicate element name")
    no, toks = r.next("'covers:'")
    if toks[0][0] != "covers:":
        raise r.error(f"expected 'covers:', found {toks[0][0]!r}", no, toks[0][1])
    rels = []
    while not r.done():
        no, toks = r.next("cover relation")
        if len(toks) != 3 or toks[1][0] != "<":
            raise r.error("cover relation must read 'a < b'", no, toks[0][1])
        for t, col in (toks[0], toks[2]):
            if t not in names:
                raise r.error(f"unknown element {t!r}", no, col)
        rels.append((toks[0][0], toks[2][0]))
    try:
        return Poset.from_relations(names, rels)
    except Exception as exc:
        raise r.error(str(exc)) from None


def write_poset(P):
    out = [f"POSET {P.size}\n"] + [f"{e}\n" for e in P.elements] + ["covers:\n"]
    out += [f"{P.elements[i]} < {P.elements[j]}\n" for i, j in P.covers]
    return "".join(out)


def read_graph(r):
    n, m = r.header("GRAPH", 2)
    edges = []
    for _ in range(m):
        no, toks = r.next("edge")
        if len(toks) != 2:
            raise r.error("edge line must hold two vertex numbers", no, toks[0][1])
        i, j = (r.int_tok(no, t) for t in toks)
        for v, (_, col) in zip((i, j), toks):
            if not 1 <= v <= n:
                raise r.error(f"vertex {v} outside 1..{n}", no, col)
        if i == j:
            raise r.error("loops are not allowed", no, toks[0][1])
        edges.append((i - 1, j - 1))
    return Graph.make(n, edges)


def write_graph(G):
    return "".join([f"GRAPH {G.n} {len(G.edges)}\n"] + [f"{i + 1} {j + 1}\n" for i, j in G.edges])


def read_obdd(r):
    (n,) = r.header("OBDD", 1)
    nodes, sinks, source, zs = [], [], None, False
    while not r.done():
        no, toks = r.next()
        words = [t for t, _ in toks]
        if words == ["zero-suppressed"]:
            zs = True
        elif words[0] == "source":
            if len(words) != 2:
                raise r.error("'source' takes one node id", no, toks[0][1])
            source = words[1]
        elif len(words) == 2 and words[1] in ("SINK0", "SINK1"):
            sinks.append((words[0], int(words[1][-1])))
        elif len(words) == 4:
            var = r.int_tok(no, toks[1])
            lo = None if words[2] == "-" else words[2]
            hi = None if words[3] == "-" else words[3]
            nodes.append((words[0], var, lo, hi))
        else:
            raise r.error("expected 'id var lo hi', 'id SINK0|SINK1' or 'source id'", no, toks[0][1])
    if source is None:
        raise r.error("missing 'source' line")
    try:
        return Obdd(n, tuple(nodes), tuple(sinks), source, zs)
    except Exception as exc:
        raise r.error(str(exc)) from None


def write_obdd(b):
    out = [f"OBDD {b.nvars}\n"]
    if b.zero_suppressed:
        out.append("zero-suppressed\n")
    for u, v, lo, hi in b.nodes:
        out.append(f"{u} {v} {lo or '-'} {hi or '-'}\n")
    for s, val in b.sinks:
        out.append(f"{s} SINK{val}\n")
    out.append(f"source {b.source}\n")
    return "".join(out)


def read_triple(r, rows=3):
    no, toks = r.next("first row")
    n = len(toks)
    first = tuple(r.q_tok(no, t) for t in toks)
    rest = [r.q_row(n, "row") for _ in range(rows - 1)]
    return (first, *rest)


def write_triple(rows):
    return "".join(format_row(x) + "\n" for x in rows)


def read_quadratic(r):
    (n,) = r.header("QUAD", 1)
    A = [r.q_row(n, "row of A") for _ in range(n)]
    b = r.q_row(n, "vector b")
    (c,) = r.q_row(1, "constant c")
    return Matrix(A, ncols=n), b, c


def write_quadratic(A, b, c):
    out = [f"QUAD {A.nrows}\n"] + [format_row(r) + "\n" for r in A.rows]
    return "".join(out + [format_row(b) + "\n", fmt_q(c) + "\n"])


def write_bounds(rep):
    out = ["BOUNDS\n", f"vertices {rep.nvertices}\n", f"faces {rep.nfaces}\n", f"dim {rep.dim}\n"]
    for name, val in rep.bounds.items():
        out.append(f"bound {name} {val} {rep.citations[name]}\n")
    out.append(f"polyhedral {rep.polyhedral}\n")
    out.append(f"spectrahedral {rep.spectrahedral}\n")
    return "".join(out)


READERS = {
    "vpoly": read_vpoly, "hpoly": read_hpoly, "slack": read_slack, "nnf": read_nnf,
    "psdf": read_psdf, "lift": read_lift, "poset": read_poset, "graph": read_graph,
    "obdd": read_obdd, "triple": read_triple, "quad": read_quadratic,
}


def parse(kind, text, source=None):
    r = Reader(text, source)
    obj = READERS[kind](r)
    r.expect_end()
    return obj
