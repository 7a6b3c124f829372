"""Exact signed odd-length generating functions for S_n and B_n."""

from .enumeration import (
    DescentClassTable, ResourceLimitError, ResourceLimits, WeightSpec,
    build_descent_class_table, enumerate_group, gf_quotient, gf_quotient_filtered,
)
from .groups import (
    IndexSet, InvalidElementError, InvalidIndexSetError, PermutationA, PermutationB,
    compose, generator, identity, inverse, left_descents, left_parabolic_decompose,
    length, parse_index_set, parse_window, right_descents,
)
from .poly import IntPolynomial, PolynomialDivisionError
from .qseries import (
    closed_b_ascending, closed_chessboard_minus, closed_chessboard_plus, closed_conjA,
    closed_conjB, closed_sn_full, closed_sn_quotient, m_tilde, q_binomial, q_multinomial,
)
from .stats import ChessboardClass, chessboard_class, chi, odd_length, odd_stats_b
from .verifier import CheckParams, CheckReport, IdentityId, SuiteConfig, check_identity, run_suite

__version__ = "0.1.0"

__all__ = [
    "DescentClassTable", "ResourceLimitError", "ResourceLimits", "WeightSpec",
    "build_descent_class_table", "enumerate_group", "gf_quotient", "gf_quotient_filtered",
    "IndexSet", "InvalidElementError", "InvalidIndexSetError", "PermutationA", "PermutationB",
    "compose", "generator", "identity", "inverse", "left_descents", "left_parabolic_decompose",
    "length", "parse_index_set", "parse_window", "right_descents",
    "IntPolynomial", "PolynomialDivisionError",
    "closed_b_ascending", "closed_chessboard_minus", "closed_chessboard_plus", "closed_conjA",
    "closed_conjB", "closed_sn_full", "closed_sn_quotient", "m_tilde", "q_binomial", "q_multinomial",
    "ChessboardClass", "chessboard_class", "chi", "odd_length", "odd_stats_b",
    "CheckParams", "CheckReport", "IdentityId", "SuiteConfig", "check_identity", "run_suite",
]
