"""Exact power series and the generating functions built from them."""

from .assembly import (assemble_1342, assemble_2341, closed_1342, closed_2341,
                       structural_1342, structural_2341)
from .catalog import (KNOWN, catalan, central_binomial, gf_known,
                      gf_separable_involutions, gf_word_pairs, large_schroder,
                      layered, motzkin, separable_involutions_structural,
                      small_schroder)
from .core import DEFAULT_ORDER, UniSeries, solve_quadratic
from .multi import BiSeries, MultiSeries, bivariate
from .staircase import (SubstitutionState, staircase_closed,
                        staircase_closed_refined, staircase_iterate, stage_two,
                        stage_two_sum)

__all__ = [
    "UniSeries", "MultiSeries", "BiSeries", "bivariate", "solve_quadratic",
    "DEFAULT_ORDER", "KNOWN", "gf_known", "catalan", "large_schroder",
    "small_schroder", "layered", "central_binomial", "motzkin",
    "gf_separable_involutions", "separable_involutions_structural",
    "gf_word_pairs", "staircase_closed", "staircase_closed_refined",
    "staircase_iterate", "stage_two", "stage_two_sum", "SubstitutionState",
    "assemble_1342", "assemble_2341", "closed_1342", "closed_2341",
    "structural_1342", "structural_2341",
]
