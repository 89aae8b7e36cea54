"""Smoothness certificates and noetherian reduction for finitely presented algebras.

Thin wrapper over the C++ core. Each command takes the text of a
presentation file and returns a dict with ``exit_code``, ``out`` and
``err``; with ``json=True`` the ``out`` field holds a JSON document.
"""

import json as _json

from ._core import jacobian, reduce, synth, verify

__all__ = ["verify", "synth", "reduce", "jacobian", "verify_report", "reduce_report"]


def verify_report(text):
    """Verify a certificate and return the parsed JSON report."""
    return _json.loads(verify(text, json=True)["out"])


def reduce_report(text, synth_first=False, max_degree=None):
    """Run the noetherian reduction and return the parsed JSON report."""
    r = reduce(text, synth=synth_first, max_degree=max_degree, json=True)
    if r["exit_code"] in (2, 3):
        raise ValueError(r["err"] or r["out"])
    return _json.loads(r["out"])
