"""Finite groupoid convolution algebras over Q, F_p and Z/n.

Thin layer over the C++ extension: ring elements come back as ``int``
(finite rings) or ``fractions.Fraction`` (Q), verification reports as dicts.
"""

import json as _json

from . import _galg
from ._galg import (
    BoundExceeded,
    Groupoid,
    Ideal,
    ParseError,
    Rep,
    Ring,
    Unsupported,
    annihilator,
    convolve,
    disintegration_iso,
    enumerate_all_ideals,
    enumerate_primitive_ideals,
    ideal,
    indicator,
    induce,
    induced_annihilator_direct,
    involution,
    is_isomorphic,
    is_simple,
    primitive_ideal_oracle,
    quotient_algebra_rep,
    regular_rep,
    sections,
    simple_module_dims,
    validate_json,
)

__all__ = [
    "BoundExceeded",
    "Groupoid",
    "Ideal",
    "ParseError",
    "Rep",
    "Ring",
    "Unsupported",
    "annihilator",
    "convolve",
    "disintegration_iso",
    "enumerate_all_ideals",
    "enumerate_primitive_ideals",
    "ideal",
    "indicator",
    "induce",
    "induced_annihilator_direct",
    "involution",
    "is_isomorphic",
    "is_simple",
    "primitive_ideal_oracle",
    "quotient_algebra_rep",
    "regular_rep",
    "sections",
    "sheaf",
    "simple_module_dims",
    "validate_json",
    "verify_disintegration",
    "verify_ideal_is_intersection",
    "verify_induced_from_simples",
    "verify_primitive_ideals",
    "verify_primitive_single_inducer",
]


def sheaf(rep):
    """Stalk dimensions and arrow matrices of a representation, as a dict."""
    return _json.loads(_galg.sheaf_json(rep))


def verify_ideal_is_intersection(ideal, bound=1 << 20):
    return _json.loads(_galg.verify_ideal_is_intersection(ideal, bound))


def verify_primitive_single_inducer(rep, bound=1 << 20):
    return _json.loads(_galg.verify_primitive_single_inducer(rep, bound))


def verify_disintegration(rep):
    return _json.loads(_galg.verify_disintegration(rep))


def verify_primitive_ideals(g, ring, bound=1 << 20):
    return _json.loads(_galg.verify_primitive_ideals(g, ring, bound))


def verify_induced_from_simples(g, ring, bound=1 << 20):
    return _json.loads(_galg.verify_induced_from_simples(g, ring, bound))
