"""Determiners of morphisms over finite-dimensional bound quiver algebras."""

import json

from ._core import (
    ContractViolation,
    InputError,
    Module,
    Morphism,
    PreconditionError,
    Workspace,
    almost_factors_through,
    ar_sequence,
    auslander_determiner,
    decompose,
    determines,
    determines_oracle,
    ext_dim,
    fixture_names,
    fixture_text,
    in_add,
    intrinsic_kernel,
    is_kernel_determined,
    minimal_determiner,
    render_session,
    small_envelope,
    tau,
    tau_minus,
)
from . import _core


def run(text, seed=None, max_path_length=32, jobs=1):
    """Run the commands of a session and return the report as a dict."""
    return json.loads(_core.run_json(text, seed, max_path_length, jobs))


def oracle(text, seed=None, max_path_length=32, jobs=1):
    """Check every named morphism against the brute-force definition."""
    return json.loads(_core.oracle_json(text, seed, max_path_length, jobs))


def workspace(fixture):
    return Workspace(fixture_text(fixture))


__all__ = [name for name in dir() if not name.startswith("_") and name != "json"]
