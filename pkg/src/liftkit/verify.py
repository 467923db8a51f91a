"""Checking that a cone lift projects exactly onto a target polytope."""

from dataclasses import dataclass, field

from .errors import LiftkitError
from .polytope import h_to_v
from .ratcore import dot, psd_check


@dataclass
class LiftCheck:
    ok: bool
    tier: str  # "exact", "certified", "forward-only" or "false"
    reason: str = ""
    witness: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def verify_lift(target, lift):
    """Decide whether the projection of ``lift`` equals ``target``.

    Polyhedral lifts are decided exactly from the vertices of the lifted polyhedron:
    every projected vertex must lie in the target and every target vertex must be
    hit.  Spectrahedral lifts are certified from the data they carry: psd preimages
    of the target vertices (target inside the projection) and psd matrices B_i with
    tr(M(w) B_i) equal to the i-th facet slack of the projected point as an affine
    identity in w (projection inside the target).
    """
    if lift.projection.nrows != target.ambient:
        return LiftCheck(False, "false", "projection lands in the wrong dimension")
    if lift.cone == "nonneg":
        return _verify_polyhedral(target, lift)
    return _verify_psd(target, lift)


def _verify_polyhedral(target, lift):
    try:
        Q = h_to_v(lift.hrep)
    except LiftkitError as exc:
        return LiftCheck(False, "false", f"lifted polyhedron: {exc}")
    proj = [lift.project(v) for v in Q.vertices]
    for k, p in enumerate(proj):
        bad = target.violated(p)
        if bad is not None:
            return LiftCheck(
                False, "false", "a lifted vertex projects outside the target",
                {"lifted_vertex": Q.vertices[k], "point": p, "facet": bad},
            )
    hit = set(proj)
    for j, v in enumerate(target.vertices):
        if v not in hit:
            return LiftCheck(
                False, "false", "a target vertex is not the image of a lifted vertex",
                {"vertex": j, "point": v},
            )
    return LiftCheck(True, "exact", "", {"lifted_vertices": len(Q.vertices)})


def _verify_psd(target, lift):
    lmi, Pi = lift.lmi, lift.projection
    forward = lift.vertex_preimages is not None
    if forward:
        if len(lift.vertex_preimages) != target.nvertices:
            return LiftCheck(False, "false", "wrong number of vertex preimages")
        for j, (v, w) in enumerate(zip(target.vertices, lift.vertex_preimages)):
            if Pi @ w != v:
                return LiftCheck(False, "false", "preimage projects elsewhere", {"vertex": j})
            res = psd_check(lmi.evaluate(w))
            if not res:
                return LiftCheck(
                    False, "false", "vertex preimage is not in the spectrahedron",
                    {"vertex": j, "witness": res.witness},
                )
    reverse = lift.facet_certificates is not None and not target.equations
    if lift.facet_certificates is not None:
        if len(lift.facet_certificates) != target.nfacets:
            return LiftCheck(False, "false", "wrong number of facet certificates")
        cols = Pi.cols()
        for i, ((a, b), B) in enumerate(zip(target.facets, lift.facet_certificates)):
            res = psd_check(B)
            if not res:
                return LiftCheck(False, "false", "facet certificate is not psd", {"facet": i})
            const, coeffs = lmi.pairing(B)
            want = tuple(-dot(a, c) for c in cols)
            if const != b or coeffs != want:
                return LiftCheck(
                    False, "false", "facet certificate does not reproduce the slack",
                    {"facet": i},
                )
    if forward and reverse:
        return LiftCheck(True, "certified")
    return LiftCheck(
        True, "forward-only" if forward else "reverse-only",
        "only one inclusion carries a certificate",
    )
