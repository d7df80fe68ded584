"""Ranking nondominated points for many-objective evolutionary search."""

from .pareto import covers, dominates, nondominated_set
from .ranking import (
    RankAssignment,
    average_rank,
    comparison_matrix,
    favour,
    favour_rank,
    k_optimality_rank,
    sum_of_ratios,
    winning_score,
)
from .rankstats import relative_entropy, rank_distribution

__version__ = "0.1.0"
