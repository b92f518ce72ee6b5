"""Positional strategies for the game of best choice on pattern-avoiding orders."""

from .dyck import (
    DyckPath,
    count_partial_paths,
    dyck_from_corners,
    dyck_from_perm,
    enumerate_dyck,
    ne_corners,
    perm_from_dyck,
)
from .exact import (
    CatalanCombo,
    ExactProb,
    S_closed,
    S_combo,
    T_closed,
    T_combo,
    WinTable,
    catalan,
    catalan_ratio,
    delta,
    eval_combo,
    win_fraction_321,
    win_probability_321,
    win_table,
)
from .models import (
    ModelId,
    OptimalStrategy,
    asymptotic_success,
    dominance_check_321,
    extend_231,
    limit_of_combo,
    optimal_k_321,
    win_probability_231,
    winnable_count_231,
)
from .perms import (
    LrMax,
    PatternId,
    Permutation,
    StrategyOutcome,
    contains_pattern,
    is_k_winnable,
    left_to_right_maxima,
    play_positional,
    prefix_signature,
    winnable_interval,
)

__version__ = "0.1.0"
