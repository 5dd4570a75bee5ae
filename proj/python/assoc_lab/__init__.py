"""Dihedral braid associators: exact construction, numerics and checks."""

import json

from . import _core
from ._core import (
    TIE_BREAK_RULE,
    ConvergenceError,
    InconsistentSystem,
    aba_obstruction,
    bridge_check_m3,
    cot_taylor,
    half_turn_check,
    hecke_rep,
    lyndon_words,
    reflection_rep,
    witt_number,
)

__all__ = [
    "TIE_BREAK_RULE",
    "ConvergenceError",
    "InconsistentSystem",
    "aba_obstruction",
    "bridge_check_m3",
    "build_rational",
    "cot_taylor",
    "half_turn_check",
    "hecke_rep",
    "lyndon_words",
    "phi0",
    "reflection_rep",
    "verify",
    "witt_number",
]


def build_rational(m, degree, lam="1"):
    """Rational associator file (as a dict) for the given m and truncation degree."""
    return json.loads(_core.build_rational_json(m, degree, str(lam)))


def phi0(m, degree=4, x_order=64):
    """Numeric associator computed from the Fuchsian connection problem."""
    return json.loads(_core.phi0_json(m, degree, x_order))


def verify(assoc, checks=(), tol=None):
    """Run named checks on an associator dict or JSON string; returns report dicts."""
    text = assoc if isinstance(assoc, str) else json.dumps(assoc)
    return json.loads(_core.verify_json(text, list(checks), tol))
