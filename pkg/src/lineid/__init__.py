"""Identifying codes in line digraphs, arc-identifying codes, and Kautz digraphs."""

from __future__ import annotations

from .arccodes import (
    ArcCode,
    algorithm1,
    check_charac_conditions,
    find_hamiltonian_cycle,
    hamiltonian_code,
    kautz_identifying_number,
    lower_bound_line_idnumber,
    verify_arc_identifying_code,
)
from .digraph import Digraph, diameter, is_strongly_connected, semigirth
from .engine import (
    admissibility_witness,
    admits_identifying_code,
    code_structure_holds,
    equiv_classes,
    is_identifying_code,
    min_identifying_code,
    verify_identifying_code,
)
from .errors import BudgetExhausted, DigraphError, LineIdError, PreconditionError, VerificationError
from .kautz import factorization, k2k_identifying_code, one_factor, sigma1, sigma1_plus
from .line import heuchenne_check, is_line_digraph, iterated_line_digraph, line_digraph
from .structure import classify_capabilities, theorem1_decide

# after the submodule import above, so ``lineid.kautz`` names the generator
from .generators import complete_symmetric, directed_cycle, fixture, kautz, random_strongly_connected

__all__ = [
    "admissibility_witness",
    "admits_identifying_code",
    "algorithm1",
    "ArcCode",
    "BudgetExhausted",
    "check_charac_conditions",
    "classify_capabilities",
    "code_structure_holds",
    "complete_symmetric",
    "diameter",
    "Digraph",
    "DigraphError",
    "directed_cycle",
    "equiv_classes",
    "factorization",
    "find_hamiltonian_cycle",
    "fixture",
    "hamiltonian_code",
    "heuchenne_check",
    "is_identifying_code",
    "is_line_digraph",
    "is_strongly_connected",
    "iterated_line_digraph",
    "k2k_identifying_code",
    "kautz",
    "kautz_identifying_number",
    "line_digraph",
    "LineIdError",
    "lower_bound_line_idnumber",
    "min_identifying_code",
    "one_factor",
    "PreconditionError",
    "random_strongly_connected",
    "semigirth",
    "sigma1",
    "sigma1_plus",
    "theorem1_decide",
    "VerificationError",
    "verify_arc_identifying_code",
    "verify_identifying_code",
]
__version__ = "0.1.0"
