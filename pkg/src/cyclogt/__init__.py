"""Exact computer algebra for cyclotomic Grothendieck-Teichmuller theory."""

from .series import (
    Alphabet,
    AlphabetMismatch,
    ConstantTermError,
    Series,
    TruncationError,
    exp_series,
    inverse_series,
    log_series,
    series_from_json,
    series_to_json,
    substitute,
)
from .freelie import bch, is_lie, lie_project, lyndon_basis, lyndon_words, witt_number
from .tkn import AlgebraId, algebra, algebra_alphabet, normal_form, t0_free_alphabet
from .relations import PairGH, full_suite
from .solve import SolutionSpace, dims_report, graded_nullspace, implication_check, system
from .gtgroups import exp_flow, ihara_bracket, lift_to, multiply, torsor_act
from .categories import RingRN, TwistedStructure, check_axioms

__version__ = "0.1.0"
