from pathlib import Path

from hypothesis import settings

from liftkit import formats as fm

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("seeded", max_examples=200, derandomize=True, deadline=None)
settings.load_profile("seeded")


def load(name, kind=None):
    text = (FIXTURES / name).read_text()
    if kind is None:
        r = fm.Reader(text, name)
        obj = fm.read_polytope_input(r)
        r.expect_end()
        return obj
    return fm.parse(kind, text, name)


def polytope(name):
    from liftkit.polytope import h_to_v, v_to_h, VRep

    obj = load(name)
    return v_to_h(obj.points) if isinstance(obj, VRep) else h_to_v(obj)


def p7():
    """The seven-vertex fixture with facets in the file order."""
    from liftkit.polytope import from_both

    V = load("p7.vpoly")
    H = load("p7.hpoly")
    return from_both(V.points, H.ineqs)


_acceptance_lines = []


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        lines = [ln for ln in report.capstdout.splitlines() if " criterion " in ln]
        if report.failed and not lines:
            lines = [f"FAIL {report.nodeid.split('::')[-1]}: raised before reporting"]
        _acceptance_lines.extend(lines)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
