"""Ordered binary decision diagrams and their flow-polytope lifts."""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from ..errors import InputError
from ..lift import ConeLift
from ..polytope import HRep, v_to_h
from ..ratcore import Matrix


@dataclass(frozen=True)
class Obdd:
    """Decision nodes map id -> (var, lo, hi) with var in 1..nvars; lo/hi may be None
    (an omitted arc, read as an arc to the 0-sink).  ``sinks`` maps id -> 0 or 1."""

    nvars: int
    nodes: tuple  # ((id, var, lo, hi), ...) in input order
    sinks: tuple  # ((id, value), ...)
    source: str
    zero_suppressed: bool = False

    def __post_init__(self):
        ids = [u for u, *_ in self.nodes] + [s for s, _ in self.sinks]
        if len(set(ids)) != len(ids):
            raise InputError("duplicate node id")
        known = set(ids)
        sink_val = dict(self.sinks)
        if sorted(sink_val.values()).count(1) != 1:
            raise InputError("exactly one 1-sink is required")
        if self.source not in known:
            raise InputError(f"unknown source {self.source!r}")
        var = {u: v for u, v, _, _ in self.nodes}
        for u, v, lo, hi in self.nodes:
            if not 1 <= v <= self.nvars:
                raise InputError(f"node {u!r} tests variable {v} outside 1..{self.nvars}")
            for w in (lo, hi):
                if w is None:
                    continue
                if w not in known:
                    raise InputError(f"node {u!r} points to unknown node {w!r}")
                if w in var and var[w] <= v:
                    raise InputError(f"arc {u!r} -> {w!r} violates the variable order")

    def node_var(self, u):
        for w, v, _, _ in self.nodes:
            if w == u:
                return v
        return self.nvars + 1  # sinks sit below every variable

    def _table(self):
        return {u: (v, lo, hi) for u, v, lo, hi in self.nodes}

    def evaluate(self, x):
        table = self._table()
        sink_val = dict(self.sinks)
        u, level = self.source, 1
        while True:
            v = table[u][0] if u in table else self.nvars + 1
            if self.zero_suppressed and any(x[i - 1] for i in range(level, v)):
                return 0
            if u in sink_val:
                return sink_val[u]
            _, lo, hi = table[u]
            nxt = hi if x[v - 1] else lo
            if nxt is None:
                return 0
            u, level = nxt, v + 1

    def arcs(self):
        """(tail, head, var, label) for every present arc, in node order (lo before hi)."""
        out = []
        for u, v, lo, hi in self.nodes:
            if lo is not None:
                out.append((u, lo, v, 0))
            if hi is not None:
                out.append((u, hi, v, 1))
        return out

    def true_points(self):
        return [x for x in product((0, 1), repeat=self.nvars) if self.evaluate(x)]


def xor_obdd(n):
    """Width-two OBDD of x_1 xor ... xor x_n with 4n - 2 arcs."""
    nodes = []
    for i in range(1, n + 1):
        parities = (0,) if i == 1 else (0, 1)
        for p in parities:
            if i < n:
                lo, hi = f"n{i + 1}p{p}", f"n{i + 1}p{1 - p}"
            else:
                lo = "T" if p == 1 else "F"
                hi = "T" if p == 0 else "F"
            nodes.append((f"n{i}p{p}", i, lo, hi))
    return Obdd(n, tuple(nodes), (("F", 0), ("T", 1)), "n1p0")


def obdd_from_function(n, f):
    """Quasi-reduced OBDD (every 1-path tests every variable) of f: {0,1}^n -> {0,1}."""
    nodes, ids = [], {}

    def node_for(level, table):
        if not any(table):
            return "F"
        if level > n:
            return "T"
        key = (level, table)
        if key not in ids:
            half = len(table) // 2
            name = f"u{len(ids)}"
            ids[key] = name
            lo = node_for(level + 1, table[:half])
            hi = node_for(level + 1, table[half:])
            nodes.append((name, level, lo, hi))
        return ids[key]

    table = tuple(int(bool(f(x))) for x in product((0, 1), repeat=n))
    src = node_for(1, table)
    if src in ("F", "T"):
        raise InputError("constant functions have no decision nodes")
    nodes.sort(key=lambda t: (t[1], int(t[0][1:])))
    return Obdd(n, tuple(nodes), (("F", 0), ("T", 1)), src)


def _check_complete_paths(b):
    """Every arc on a source-to-1-sink path must go exactly one level down."""
    one = next(s for s, v in b.sinks if v == 1)
    arcs = b.arcs()
    good = {one}
    changed = True
    while changed:
        changed = False
        for t, h, _, _ in arcs:
            if h in good and t not in good:
                good.add(t)
                changed = True
    if b.source not in good:
        return
    if b.node_var(b.source) != 1:
        raise InputError("source does not test variable 1; use a zero-suppressed diagram")
    for t, h, v, _ in arcs:
        if t in good and h in good and b.node_var(h) != v + 1:
            raise InputError(f"arc {t!r} -> {h!r} skips a variable; use a zero-suppressed diagram")


def obdd_flow_lift(b, prune=False):
    """Flow polytope {y >= 0 : (in - out)(v) = [v is 1-sink] - [v is source]} over arcs.

    x_i is the flow on 1-arcs leaving nodes that test variable i.  With ``prune``
    only arcs on source-to-1-sink paths are kept.
    """
    if not b.zero_suppressed:
        _check_complete_paths(b)
    arcs = b.arcs()
    if prune:
        arcs = _on_true_paths(b, arcs)
    ids = [u for u, *_ in b.nodes] + [s for s, _ in b.sinks]
    one = next(s for s, v in b.sinks if v == 1)
    m = len(arcs)
    eqs = []
    for u in ids:
        row = [Fraction(0)] * m
        for k, (t, h, _, _) in enumerate(arcs):
            if h == u:
                row[k] += 1
            if t == u:
                row[k] -= 1
        rhs = Fraction(int(u == one) - int(u == b.source))
        eqs.append((tuple(row), rhs))
    ineqs = []
    for k in range(m):
        row = [Fraction(0)] * m
        row[k] = Fraction(-1)
        ineqs.append((tuple(row), Fraction(0)))
    proj = Matrix(
        [[Fraction(int(v == i and lab == 1)) for (_, _, v, lab) in arcs] for i in range(1, b.nvars + 1)],
        ncols=m,
    )
    H = HRep(m, tuple(ineqs), tuple(eqs))
    return ConeLift("nonneg", b.nvars, proj, hrep=H, meta={"arcs": arcs})


def _on_true_paths(b, arcs):
    one = next(s for s, v in b.sinks if v == 1)
    fwd, bwd = {b.source}, {one}
    changed = True
    while changed:
        changed = False
        for t, h, _, _ in arcs:
            if t in fwd and h not in fwd:
                fwd.add(h)
                changed = True
            if h in bwd and t not in bwd:
                bwd.add(t)
                changed = True
    return [a for a in arcs if a[0] in fwd and a[1] in bwd]


def function_polytope(b):
    """conv{x : f(x) = 1} for the function computed by ``b``."""
    return v_to_h([tuple(Fraction(c) for c in x) for x in b.true_points()])
