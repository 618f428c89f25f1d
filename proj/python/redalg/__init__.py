"""Exact rewriting engine for the diagonal reduction algebra of sl(2).

Thin wrapper over the compiled extension: expressions are parsed with
``parse``, rewritten with ``normal_form``, and compared exactly.
"""

from ._redalg import (
    Element,
    ParseError,
    basis,
    casimir1,
    casimir2,
    casimir_scalars,
    check_confluence,
    commutator,
    graded_symbol_check,
    normal_form,
    oracle_check,
    ore_witness,
    parse,
    presentation_text,
    render,
    zero_divisor_probe,
)

__all__ = [
    "Element",
    "ParseError",
    "basis",
    "casimir1",
    "casimir2",
    "casimir_scalars",
    "check_confluence",
    "commutator",
    "graded_symbol_check",
    "normal_form",
    "oracle_check",
    "ore_witness",
    "parse",
    "presentation_text",
    "render",
    "zero_divisor_probe",
]
