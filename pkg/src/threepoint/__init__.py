"""Exact-arithmetic kernel for a three-point current algebra.

The package builds, over exact rationals: the Laurent-type ring
R = C[t, t^-1, u | u^2 = t^2 + 4t] with its fraction-ring isomorphisms; the
two-dimensional space of one-form classes modulo exact forms; the centrally
extended sl2 current algebra over R; a doubled oscillator/Heisenberg Fock
space; the free-field realization of the currents on it; and a brute-force
harness that verifies every defining relation by exact computation.
"""

from .rational import Rational, exact, parse_rational, rat_str
from .ring import PoleFraction, RingElem, SFraction, from_a, from_s, parse_ring, to_a, to_s
from .kahler import (CentralPair, OneForm, closed_form_pairing, differential,
                     pairing, reduce)
from .current import (CurrentElem, bracket, format_current, parse_current,
                      parity, quasi_degree, relation_rhs)
from .fock import (FockVector, HeisenbergParams, OscConfig, apply_heis,
                   apply_osc, format_fock, heis_bracket_check, make_state,
                   monomial_states, osc_commutator_residual, parse_fock,
                   vacuum, var)
from .realization import (FieldTerm, Realization, RealizationConfig,
                          apply_current, apply_mode, field_terms)
from .verify import VerifyConfig, report_to_json, run

__all__ = [
    "Rational", "exact", "parse_rational", "rat_str",
    "PoleFraction", "RingElem", "SFraction", "from_a", "from_s",
    "parse_ring", "to_a", "to_s",
    "CentralPair", "OneForm", "closed_form_pairing", "differential",
    "pairing", "reduce",
    "CurrentElem", "bracket", "format_current", "parse_current", "parity",
    "quasi_degree", "relation_rhs",
    "FockVector", "HeisenbergParams", "OscConfig", "apply_heis", "apply_osc",
    "format_fock", "heis_bracket_check", "make_state", "monomial_states",
    "osc_commutator_residual", "parse_fock", "vacuum", "var",
    "FieldTerm", "Realization", "RealizationConfig", "apply_current",
    "apply_mode", "field_terms",
    "VerifyConfig", "report_to_json", "run",
]
