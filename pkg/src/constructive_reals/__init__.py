"""Constructive real numbers, Specker sequences and fuel-bounded search."""
from .bisection import (BisectionTrace, LocalConstancyClaim, bisect, check_local_constancy,
                        limit_point, step_oracle)
from .errors import (DivisionByZero, EnumerationExhausted, InvalidWitness, NegativePrecision,
                     NoInitialGap, OutOfInterval, ParseError, StepStalled)
from .expr import parse_real
from .rational import Rational, dyadic, format_rational, parse_rational, rat_cmp
from .reals import (CRN, ApartnessWitness, GapOrder, Sign, apartness_search, compare_with_gap,
                    crn_abs, crn_add, crn_div, crn_from_rational, crn_max, crn_min, crn_mul,
                    crn_neg, zero_witness)
from .search import (Accept, Reject, Unknown, capture_sequence, dovetail, markov_search,
                     q_of)
from .specker import IntervalSpec, SpeckerSeq, SpeckerSets

__all__ = [
    "Accept", "ApartnessWitness", "BisectionTrace", "CRN", "DivisionByZero",
    "EnumerationExhausted", "GapOrder", "IntervalSpec", "InvalidWitness",
    "LocalConstancyClaim", "NegativePrecision", "NoInitialGap", "OutOfInterval",
    "ParseError", "Rational", "Reject", "Sign", "SpeckerSeq", "StepStalled",
    "SpeckerSets", "Unknown", "apartness_search", "bisect", "capture_sequence",
    "check_local_constancy", "compare_with_gap", "crn_abs", "crn_add", "crn_div",
    "crn_from_rational", "crn_max", "crn_min", "crn_mul", "crn_neg", "dovetail", "dyadic",
    "format_rational", "limit_point", "markov_search", "parse_rational", "parse_real",
    "q_of", "rat_cmp", "step_oracle", "zero_witness",
]
