"""Monoids of direct-sum decompositions over the extended naturals.

The package works with submonoids of (N0*)^s, N0* = N0 ∪ {inf},
presented as solution sets of linear equations and congruences.  It
computes their Hilbert bases and systems of supports, builds the
extreme monoids over a given finite part, recognizes direct-sum
splittings, and decides whether every member is a finite member plus an
inf-scaled finite member.
"""

from .classify import (ClassReport, SingleEquationReport,
                       analyze_single_equation, equals_a_plus_inf_a, verdict)
from .constructions import (DirectSumData, a_plus_inf_a, b_max, b_min,
                            compose_direct_sum, decompose_direct_sum,
                            decomposed_almost_free, monoid_sum)
from .equations import (DioSystem, enumerate_truncated, from_integer_matrix,
                        intersect, is_member, lift_congruences)
from .errors import MissingOrderUnitError, ResourceLimitError
from .hilbert import (HilbertBasis, find_order_unit, generated_truncated,
                      generated_upto, hilbert_basis, in_generated,
                      minimize_generators)
from .ranks import RankMatrix, is_extended, realize_wiegand, vstar_system
from .semiring import (INF, add, divides, format_extnat, format_vec, inf_supp,
                       inject, mul, parse_extnat, parse_vec, project, scale,
                       supp, supports, vec_add, vec_from_json, vec_to_json)
from .supports import (SystemOfSupports, extract, generators,
                       infinite_supports, is_almost_free, is_full,
                       member_via_supports, minimal_nonempty, subsystem_for,
                       truncated_members, validate)

__version__ = "0.1.0"

__all__ = [
    "INF", "add", "mul", "vec_add", "scale", "supports", "supp", "inf_supp",
    "divides", "project", "inject", "parse_extnat", "format_extnat",
    "parse_vec", "format_vec", "vec_from_json", "vec_to_json",
    "DioSystem", "is_member", "lift_congruences", "intersect",
    "from_integer_matrix", "enumerate_truncated",
    "HilbertBasis", "hilbert_basis", "in_generated", "find_order_unit",
    "minimize_generators", "generated_upto", "generated_truncated",
    "SystemOfSupports", "extract", "infinite_supports", "subsystem_for",
    "validate", "member_via_supports", "generators", "is_full",
    "is_almost_free", "minimal_nonempty", "truncated_members",
    "a_plus_inf_a", "b_min", "b_max", "monoid_sum", "DirectSumData",
    "compose_direct_sum", "decompose_direct_sum", "decomposed_almost_free",
    "ClassReport", "SingleEquationReport", "analyze_single_equation",
    "equals_a_plus_inf_a", "verdict",
    "RankMatrix", "vstar_system", "is_extended", "realize_wiegand",
    "MissingOrderUnitError", "ResourceLimitError",
    "__version__",
]
