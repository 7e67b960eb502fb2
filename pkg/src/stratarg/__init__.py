"""Strategic argumentation: semantics, game play, exact solvers and collusion audits."""

from .aims import Aim, AimCounts, Semantics, Side, aim_counts, verify_aim
from .audit import AuditReport, audit_trace, self_injury_report
from .corpus import GeneratorParams, fixture, random_split
from .framework import (
    ArgumentationFramework,
    Labeling,
    grounded_labeling,
    is_complete_extension,
    is_conflict_free,
    is_stable_extension,
    is_well_founded,
    stable_extensions,
)
from .game import (
    GameState,
    Move,
    MovePolicy,
    SplitFramework,
    Standard,
    apply_move,
    find_minimal_move,
    has_effective_move,
    is_effective,
    is_minimal,
    minimal_moves,
)
from .search import GameTrace, Strategy, dominates, game_value, winning_sequence, winning_strategy

__version__ = "0.1.0"
