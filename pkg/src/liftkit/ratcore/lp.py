"""Exact linear programming: two-phase tableau simplex with Bland's rule.

Problems are always maximizations

    max c.x   s.t.  A_i.x (<=|=|>=) b_i,   l_j <= x_j <= u_j

where a missing bound is ``None``.  Every answer carries a certificate that can be
checked independently of the solver:

* optimal    -> dual multipliers ``y`` (y_i >= 0 on <= rows, <= 0 on >= rows) such
                that the dual objective equals the primal one (``check_optimal``);
* infeasible -> Farkas multipliers ``y`` whose aggregated inequality
                (A^T y).x <= b.y has no solution in the bound box (``check_farkas``);
* unbounded  -> a feasible point plus an improving recession ray (``check_ray``).
"""

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import DimensionError, InputError
from .linalg import dot, to_q, vec

LE, EQ, GE = "<=", "=", ">="
_ZERO = Fraction(0)


@dataclass(frozen=True)
class LpProblem:
    c: tuple
    A: tuple
    b: tuple
    senses: tuple
    lower: tuple
    upper: tuple

    @classmethod
    def build(cls, c, A, b, senses=None, lower=0, upper=None):
        """Convenience constructor.

        ``lower``/``upper`` may be a scalar (applied to every variable), ``None``
        or a per-variable sequence.  The default is x >= 0.
        """
        c = vec(c)
        n = len(c)
        A = tuple(vec(r) for r in A)
        b = vec(b)
        if len(A) != len(b):
            raise DimensionError(f"{len(A)} constraint rows but {len(b)} right-hand sides")
        for i, r in enumerate(A):
            if len(r) != n:
                raise DimensionError(f"constraint row {i} has {len(r)} entries, expected {n}")
        if senses is None:
            senses = (LE,) * len(A)
        senses = tuple(senses)
        if len(senses) != len(A) or any(s not in (LE, EQ, GE) for s in senses):
            raise InputError(f"bad senses {senses!r}")

        def expand(bd):
            if bd is None or not isinstance(bd, (list, tuple)):
                return (None if bd is None else to_q(bd),) * n
            if len(bd) != n:
                raise DimensionError(f"bound vector of length {len(bd)}, expected {n}")
            return tuple(None if x is None else to_q(x) for x in bd)

        lo, up = expand(lower), expand(upper)
        for j, (l, u) in enumerate(zip(lo, up)):
            if l is not None and u is not None and l > u:
                raise InputError(f"empty bound interval for variable {j}")
        return cls(c, A, b, senses, lo, up)

    @property
    def nvars(self):
        return len(self.c)


@dataclass
class LpResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple = None
    value: Fraction = None
    y: tuple = None  # duals (optimal) or Farkas multipliers (infeasible)
    ray: tuple = None
    info: dict = field(default_factory=dict)


def lp_solve(problem):
    """Solve ``problem`` exactly.  See the module docstring for certificates."""
    return _Simplex(problem).run()


def lp_feasible_point(A, b, senses=None, lower=None, upper=None):
    """A point of the polyhedron, or None.  Variables are free unless bounded."""
    n = len(A[0]) if A else 0
    prob = LpProblem.build([0] * n, A, b, senses, lower=lower, upper=upper)
    res = lp_solve(prob)
    return res.x if res.status == "optimal" else None


class _Simplex:
    def __init__(self, prob):
        self.p = prob
        n = prob.nvars
        # x_j = offset_j + sum_k T[j][k] s_k with s >= 0
        self.offset = []
        self.tmap = []  # list of (j, k, coeff)
        cols = 0
        extra_rows = []  # (column index, ub) meaning s_k <= ub
        self.col_of = []
        for j in range(n):
            l, u = prob.lower[j], prob.upper[j]
            if l is not None:
                self.offset.append(l)
                self.tmap.append([(cols, Fraction(1))])
                if u is not None:
                    extra_rows.append((cols, u - l))
                cols += 1
            elif u is not None:
                self.offset.append(u)
                self.tmap.append([(cols, Fraction(-1))])
                cols += 1
            else:
                self.offset.append(_ZERO)
                self.tmap.append([(cols, Fraction(1)), (cols + 1, Fraction(-1))])
                cols += 2
        self.ns = cols
        rows, rhs, senses = [], [], []
        for i, arow in enumerate(prob.A):
            r = [_ZERO] * cols
            for j, a in enumerate(arow):
                if a:
                    for k, t in self.tmap[j]:
                        r[k] += a * t
            rows.append(r)
            rhs.append(prob.b[i] - dot(arow, self.offset))
            senses.append(prob.senses[i])
        self.norig = len(rows)
        for k, ub in extra_rows:
            r = [_ZERO] * cols
            r[k] = Fraction(1)
            rows.append(r)
            rhs.append(ub)
            senses.append(LE)
        cs = [_ZERO] * cols
        for j, cj in enumerate(prob.c):
            for k, t in self.tmap[j]:
                cs[k] += cj * t
        self.const = dot(prob.c, self.offset)
        m = len(rows)
        nslack = sum(1 for s in senses if s != EQ)
        self.nslack = nslack
        N = cols + nslack + m  # structural, slack, artificial
        self.art0 = cols + nslack
        self.N = N
        self.m = m
        tab = []
        self.flip = []
        si = cols
        for i in range(m):
            row = rows[i] + [_ZERO] * (nslack + m) + [rhs[i]]
            if senses[i] == LE:
                row[si] = Fraction(1)
                si += 1
            elif senses[i] == GE:
                row[si] = Fraction(-1)
                si += 1
            f = 1
            if rhs[i] < 0:
                row = [-x for x in row]
                f = -1
            row[self.art0 + i] = Fraction(1)
            self.flip.append(f)
            tab.append(row)
        self.tab = tab
        self.basis = [self.art0 + i for i in range(m)]
        self.cost2 = cs + [_ZERO] * (nslack + m)

    # -- tableau mechanics -------------------------------------------------
    def _pivot(self, r, c):
        tab = self.tab
        prow = tab[r]
        pv = prow[c]
        if pv != 1:
            prow = [x / pv for x in prow]
            tab[r] = prow
        nz = [k for k, x in enumerate(prow) if x]
        for i in range(len(tab)):
            if i != r:
                row = tab[i]
                f = row[c]
                if f:
                    for k in nz:
                        row[k] -= f * prow[k]
        self.basis[r] = c

    def _reduced(self, cost):
        cb = [cost[b] for b in self.basis]
        d = list(cost)
        for i, row in enumerate(self.tab):
            if cb[i]:
                f = cb[i]
                for k in range(self.N):
                    if row[k]:
                        d[k] -= f * row[k]
        return d

    def _optimize(self, cost, allowed):
        """Bland's rule.  Returns None at optimum or the entering column if unbounded."""
        while True:
            d = self._reduced(cost)
            enter = next((j for j in range(allowed) if d[j] > 0), None)
            if enter is None:
                return None
            best = None
            for i, row in enumerate(self.tab):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return enter
            self._pivot(best[1], enter)

    def _duals(self, cost):
        # B^{-1} sits in the artificial columns of the tableau
        y = [_ZERO] * self.m
        for r, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.tab[r]
                for i in range(self.m):
                    if row[self.art0 + i]:
                        y[i] += cb * row[self.art0 + i]
        return y

    def _orig_multipliers(self, y):
        return tuple(self.flip[i] * y[i] for i in range(self.norig))

    def _x(self):
        s = [_ZERO] * self.N
        for r, b in enumerate(self.basis):
            s[b] = self.tab[r][-1]
        x = []
        for j in range(self.p.nvars):
            x.append(self.offset[j] + sum((t * s[k] for k, t in self.tmap[j]), _ZERO))
        return tuple(x)

    def run(self):
        cost1 = [_ZERO] * self.art0 + [Fraction(-1)] * self.m
        self._optimize(cost1, self.art0)
        phase1 = sum((self.tab[r][-1] for r, b in enumerate(self.basis) if b >= self.art0), _ZERO)
        if phase1 > 0:
            y = self._orig_multipliers(self._duals(cost1))
            return LpResult("infeasible", y=y)
        # drive zero-level artificials out of the basis where possible
        for r in range(self.m):
            if self.basis[r] >= self.art0:
                row = self.tab[r]
                c = next((k for k in range(self.art0) if row[k] != 0), None)
                if c is not None:
                    self._pivot(r, c)
        enter = self._optimize(self.cost2, self.art0)
        x = self._x()
        if enter is not None:
            ds = [_ZERO] * self.N
            ds[enter] = Fraction(1)
            for r, b in enumerate(self.basis):
                ds[b] = -self.tab[r][enter]
            ray = tuple(
                sum((t * ds[k] for k, t in self.tmap[j]), _ZERO) for j in range(self.p.nvars)
            )
            return LpResult("unbounded", x=x, ray=ray)
        y = self._orig_multipliers(self._duals(self.cost2))
        return LpResult("optimal", x=x, value=dot(self.p.c, x), y=y)


# -- independent certificate checks ------------------------------------------


def _sign_ok(sense, yi):
    return (sense == LE and yi >= 0) or (sense == GE and yi <= 0) or sense == EQ


def check_feasible(prob, x):
    if len(x) != prob.nvars:
        return False
    for j, xj in enumerate(x):
        if prob.lower[j] is not None and xj < prob.lower[j]:
            return False
        if prob.upper[j] is not None and xj > prob.upper[j]:
            return False
    for a, b, s in zip(prob.A, prob.b, prob.senses):
        v = dot(a, x)
        if (s == LE and v > b) or (s == GE and v < b) or (s == EQ and v != b):
            return False
    return True


def dual_value(prob, y):
    """Dual objective of multipliers ``y``; None if ``y`` is not dual feasible."""
    if len(y) != len(prob.A) or not all(_sign_ok(s, yi) for s, yi in zip(prob.senses, y)):
        return None
    total = dot(prob.b, y)
    for j in range(prob.nvars):
        d = prob.c[j] - sum((prob.A[i][j] * y[i] for i in range(len(y))), _ZERO)
        if d > 0:
            if prob.upper[j] is None:
                return None
            total += d * prob.upper[j]
        elif d < 0:
            if prob.lower[j] is None:
                return None
            total += d * prob.lower[j]
    return total


def check_optimal(prob, res):
    """Primal feasibility plus equal primal and dual objective values."""
    if res.status != "optimal" or not check_feasible(prob, res.x):
        return False
    dv = dual_value(prob, res.y)
    return dv is not None and dv == dot(prob.c, res.x)


def check_farkas(prob, y):
    """True iff ``y`` proves the constraint system has no solution in the bound box."""
    if len(y) != len(prob.A) or not all(_sign_ok(s, yi) for s, yi in zip(prob.senses, y)):
        return False
    lo_total = _ZERO
    for j in range(prob.nvars):
        g = sum((prob.A[i][j] * y[i] for i in range(len(y))), _ZERO)
        if g > 0:
            if prob.lower[j] is None:
                return False
            lo_total += g * prob.lower[j]
        elif g < 0:
            if prob.upper[j] is None:
                return False
            lo_total += g * prob.upper[j]
    return lo_total > dot(prob.b, y)


def check_ray(prob, x, ray):
    """``x`` feasible and ``ray`` an improving direction of the recession cone."""
    if not check_feasible(prob, x) or dot(prob.c, ray) <= 0:
        return False
    for j, r in enumerate(ray):
        if r < 0 and prob.lower[j] is not None:
            return False
        if r > 0 and prob.upper[j] is not None:
            return False
    for a, s in zip(prob.A, prob.senses):
        v = dot(a, ray)
        if (s == LE and v > 0) or (s == GE and v < 0) or (s == EQ and v != 0):
            return False
    return True


def check_result(prob, res):
    if res.status == "optimal":
        return check_optimal(prob, res)
    if res.status == "infeasible":
        return check_farkas(prob, res.y)
    if res.status == "unbounded":
        return check_ray(prob, res.x, res.ray)
    return False
