"""Command line interface.  Exit codes: 0 success, 1 negative verdict, 2 bad input."""

import argparse
import sys

from . import formats as fm
from .bounds import bound_report
from .errors import LiftkitError, ParseError
from .factor import (
    factorization_from_lift,
    lift_from_factorization,
    nmf_search,
    verify_factorization,
)
from .honeycomb import eliminate_to_inequalities, honey_cone, horn_member, verify_certificate
from .liftgen import (
    chain_polytope_lift,
    klevel_sos_lift,
    obdd_flow_lift,
    quadratic_epigraph_lmi,
    theta_body_lift,
    verify_lift,
)
from .polytope import HRep, VRep, from_both, h_to_v, polar, v_to_h
from .ratcore import fmt_q
from .slack import slack_matrix


class Verdict(Exception):
    """Negative result: message goes to stdout, exit code 1."""


def _read(path):
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    with open(path, encoding="utf-8") as fh:
        return fh.read(), path


def _load(kind, path):
    text, src = _read(path)
    r = fm.Reader(text, src)
    obj = fm.READERS[kind](r) if kind != "polytope" else fm.read_polytope_input(r)
    r.expect_end()
    return obj


def _polytope(path):
    obj = _load("polytope", path)
    if isinstance(obj, VRep):
        return v_to_h(obj.points)
    return h_to_v(obj)


def _polytope_pair(path, facets_path):
    """Polytope from a V file, with facets ordered as in an H file when one is given."""
    P = _polytope(path)
    if facets_path is None:
        return P
    H = _load("hpoly", facets_path)
    return from_both(P.vertices, H.ineqs, H.eqs or P.equations)


def _emit(args, text):
    if getattr(args, "output", None):
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_convert(args):
    obj = _load("polytope", args.input)
    if isinstance(obj, VRep):
        _emit(args, fm.write_hpoly(v_to_h(obj.points)))
    else:
        _emit(args, fm.write_vpoly(h_to_v(obj)))


def cmd_polar(args):
    Q = polar(_polytope(args.input))
    _emit(args, fm.write_vpoly(Q) if args.format == "v" else fm.write_hpoly(Q))


def cmd_slack(args):
    P = _polytope_pair(args.input, args.facets)
    _emit(args, fm.write_slack(slack_matrix(P)))


def _slack_input(path, facets=None):
    text, src = _read(path)
    first = fm.Reader(text, src).peek()
    if first is not None and first[1][0][0] in ("V", "H"):
        return slack_matrix(_polytope_pair(path, facets)).matrix
    return _load("slack", path)


def cmd_factorize(args):
    if args.threads != 1:
        print("note: the search is single-threaded; --threads is ignored", file=sys.stderr)
    S = _slack_input(args.input, args.facets)
    F = nmf_search(S, args.rank, restarts=args.restarts, seed=args.seed,
                   denom_bound=args.denom_bound)
    if F is None:
        raise Verdict(f"no exact nonnegative factorization of size {args.rank} found")
    _emit(args, fm.write_nnf(F))


def cmd_verify_fact(args):
    S = _slack_input(args.slack, args.facets)
    F = _load("nnf", args.factorization)
    res = verify_factorization(S, F)
    if not res:
        msg = res.reason
        if res.entry is not None:
            i, j = res.entry
            msg = (f"mismatch at row {i + 1}, column {j + 1}: expected {fmt_q(res.expected)}, "
                   f"got {fmt_q(res.got)}")
        raise Verdict(f"FALSE {msg}")
    print(f"TRUE factorization of size {F.size} reproduces the {S.nrows}x{S.ncols} matrix")


def cmd_lift_from_fact(args):
    P = _polytope_pair(args.polytope, args.facets)
    F = _load("nnf", args.factorization)
    res = verify_factorization(slack_matrix(P).matrix, F)
    if not res:
        raise Verdict(f"FALSE factorization does not reproduce the slack matrix: {res.reason}")
    _emit(args, fm.write_lift(lift_from_factorization(P, F)))


def cmd_fact_from_lift(args):
    P = _polytope_pair(args.polytope, args.facets)
    L = _load("lift", args.lift)
    _emit(args, fm.write_nnf(factorization_from_lift(P, L, reduce=not args.no_reduce)))


def _print_lmi(args, lmi):
    exact = fm.write_sdpa(lmi, exact=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(fm.write_sdpa(lmi))
        with open(args.output + ".exact", "w", encoding="utf-8") as fh:
            fh.write(exact)
    else:
        sys.stdout.write(exact)


def cmd_lift(args):
    if args.family == "obdd":
        L = obdd_flow_lift(_load("obdd", args.input), prune=args.prune)
        _emit(args, fm.write_lift(L))
    elif args.family == "chain":
        _emit(args, fm.write_lift(chain_polytope_lift(_load("poset", args.input))))
    elif args.family == "theta":
        _, L = theta_body_lift(_load("graph", args.input), with_certificates=False)
        _print_lmi(args, L.lmi)
    elif args.family == "klevel":
        L = klevel_sos_lift(_polytope(args.input), args.k)
        _print_lmi(args, L.lmi)
    elif args.family == "epiquad":
        A, b, c = _load("quad", args.input)
        _print_lmi(args, quadratic_epigraph_lmi(A, b, c))


def _write_spec(spec):
    out = [f"HONEYCOMB {spec.n} edges {len(spec.edges)}\n"]
    for k, ((p, c), bd) in enumerate(zip(spec.edges, spec.boundary)):
        tag = "interior" if bd is None else f"{bd[0]} {bd[1]}"
        out.append(f"edge {k} {' '.join(map(str, p))} class {c} {tag}\n")
    for tri in spec.vertices:
        out.append("vertex " + " ".join(map(str, tri)) + "\n")
    for a, b in spec.gamma:
        out.append(f"rhombus {a} {b}\n")
    return "".join(out)


def cmd_honeycomb(args):
    if args.action == "build":
        _emit(args, _write_spec(honey_cone(args.n)))
        return
    if args.action == "member":
        lam, mu, nu = _load("triple", args.input)
        res = horn_member(lam, mu, nu)
        if res.member:
            _emit(args, "MEMBER\n" + "edges " + fm.format_row(res.edge_values) + "\n")
            return
        cert = res.certificate
        if not verify_certificate(lam, mu, nu, cert):
            raise LiftkitError("certificate failed its independent check")
        rel = "==" if cert.equality else ">="
        raise Verdict(f"NOT-MEMBER {cert.kind} certificate: "
                      f"{fm.format_row(cert.coeffs)} . (lambda, mu, nu) {rel} 0 fails")
    if args.action == "eliminate3":
        lam, mu = _pair(args.input)
        system = eliminate_to_inequalities(lam, mu)
        H = HRep(3, tuple((tuple(-x for x in c), d) for c, d in system.ineqs), ())
        _emit(args, "# variables " + " ".join(system.names) + "\n" + fm.write_hpoly(H))


def _pair(path):
    text, src = _read(path)
    r = fm.Reader(text, src)
    rows = fm.read_triple(r, rows=2)
    r.expect_end()
    return rows


def cmd_bounds(args):
    P = _polytope(args.input)
    _emit(args, fm.write_bounds(bound_report(P, args.degree, args.log_base)))


def cmd_verify_lift(args):
    P = _polytope(args.polytope)
    L = _load("lift", args.lift)
    res = verify_lift(P, L)
    if not res.ok:
        raise Verdict(f"FALSE {res.reason}")
    print(f"TRUE {res.tier}")


def build_parser():
    p = argparse.ArgumentParser(prog="liftkit", description="Exact lifts of polytopes.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        s = sub.add_parser(name, help=help_)
        s.set_defaults(fn=fn)
        return s

    def out(s):
        s.add_argument("-o", "--output", help="write to this file instead of stdout")

    s = add("convert", cmd_convert, "V to H or H to V")
    s.add_argument("input")
    out(s)
    s = add("polar", cmd_polar, "polar polytope")
    s.add_argument("input")
    s.add_argument("--format", choices=("v", "h"), default="v")
    out(s)
    s = add("slack", cmd_slack, "slack matrix")
    s.add_argument("input")
    s.add_argument("--facets", help="H file fixing the facet order")
    out(s)
    s = add("factorize", cmd_factorize, "search for a nonnegative factorization")
    s.add_argument("input", help="slack matrix or polytope")
    s.add_argument("--facets")
    s.add_argument("--rank", type=int, required=True)
    s.add_argument("--restarts", type=int, default=64)
    s.add_argument("--denom-bound", type=int, default=2 ** 16)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--threads", type=int, default=1)
    out(s)
    s = add("verify-fact", cmd_verify_fact, "check a nonnegative factorization")
    s.add_argument("slack", help="slack matrix or polytope")
    s.add_argument("factorization")
    s.add_argument("--facets")
    s = add("lift-from-fact", cmd_lift_from_fact, "polyhedral lift from a factorization")
    s.add_argument("polytope")
    s.add_argument("factorization")
    s.add_argument("--facets")
    out(s)
    s = add("fact-from-lift", cmd_fact_from_lift, "factorization from a polyhedral lift")
    s.add_argument("polytope")
    s.add_argument("lift")
    s.add_argument("--facets")
    s.add_argument("--no-reduce", action="store_true")
    out(s)
    s = add("lift", cmd_lift, "lift generators")
    s.add_argument("family", choices=("obdd", "chain", "theta", "klevel", "epiquad"))
    s.add_argument("input")
    s.add_argument("--k", type=int, default=None, help="level for klevel")
    s.add_argument("--prune", action="store_true", help="obdd: keep only arcs on 1-paths")
    out(s)
    s = add("honeycomb", cmd_honeycomb, "honeycomb model of the Horn cone")
    s.add_argument("action", choices=("build", "member", "eliminate3"))
    s.add_argument("input", nargs="?", help="triple file (member) or lambda/mu file")
    s.add_argument("--n", type=int, default=3)
    out(s)
    s = add("bounds", cmd_bounds, "lower bounds on lift sizes")
    s.add_argument("input")
    s.add_argument("--degree", type=int, default=None)
    s.add_argument("--log-base", default="e", help="e or an integer >= 2")
    out(s)
    s = add("verify-lift", cmd_verify_lift, "check a polyhedral lift")
    s.add_argument("polytope")
    s.add_argument("lift")
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "honeycomb" and args.action != "build" and args.input is None:
        parser.error(f"honeycomb {args.action} needs an input file")
    try:
        args.fn(args)
    except Verdict as v:
        print(v)
        return 1
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except LiftkitError as e:
        if e.kind == "infeasible":
            print(f"FALSE {e}")
            return 1
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
