"""Generators of polyhedral and spectrahedral lifts for structured polytope families."""

from ..verify import LiftCheck, verify_lift
from .epigraph import ball_lmi, epigraph_member, quadratic_epigraph_lmi, quadratic_value
from .families import birkhoff_lift, cross_polytope_lift
from .klevel import klevel_sos_lift, monomials, rank_one_factorization
from .obdd import Obdd, function_polytope, obdd_flow_lift, obdd_from_function, xor_obdd
from .poset import (
    Poset,
    chain_polytope,
    chain_polytope_lift,
    order_polytope,
    random_poset,
    three_element_posets,
)
from .theta import Graph, comparability_graph, stab_polytope, theta_body_lift, theta_lmi

__all__ = [
    "LiftCheck", "verify_lift", "ball_lmi", "epigraph_member", "quadratic_epigraph_lmi",
    "quadratic_value", "birkhoff_lift", "cross_polytope_lift", "klevel_sos_lift", "monomials",
    "rank_one_factorization", "Obdd", "function_polytope", "obdd_flow_lift",
    "obdd_from_function", "xor_obdd", "Poset", "chain_polytope", "chain_polytope_lift",
    "order_polytope", "random_poset", "three_element_posets", "Graph", "comparability_graph",
    "stab_polytope", "theta_body_lift", "theta_lmi",
]
