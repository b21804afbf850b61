"""Pivot-rule vector dynamics and an exact solver for exact slow nim."""

from .core import (
    DomainError,
    Fallback,
    PileVector,
    Pivot,
    RuleParams,
    StepRecord,
    pivot,
    range_of,
    simulate,
    step,
)
from .fastpath import FinishSpec, SettleResult, leaders, moves_to_finish, position_at, settle
from .periodicity import (
    PeriodSummary,
    cyclic_runs,
    fast_forward,
    period_word,
    pivot_log,
    pivot_return_gaps,
    pivot_shift_check,
    rotations_equal,
    run_length_decode,
    run_length_encode,
    shift_property_holds,
)
from .solver import (
    BudgetExceededError,
    GamePosition,
    MultiPlayerGameSpec,
    NashReport,
    PlayerCheck,
    RemotenessResult,
    SmithOracle,
    apply_move,
    check_nash,
    optimal_move,
    play_line,
    remoteness,
    smith_remoteness,
    successors,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceededError",
    "DomainError",
    "Fallback",
    "FinishSpec",
    "GamePosition",
    "MultiPlayerGameSpec",
    "NashReport",
    "PeriodSummary",
    "PileVector",
    "Pivot",
    "PlayerCheck",
    "RemotenessResult",
    "RuleParams",
    "SettleResult",
    "SmithOracle",
    "StepRecord",
    "apply_move",
    "check_nash",
    "cyclic_runs",
    "fast_forward",
    "leaders",
    "moves_to_finish",
    "optimal_move",
    "period_word",
    "pivot",
    "pivot_log",
    "pivot_return_gaps",
    "pivot_shift_check",
    "play_line",
    "position_at",
    "range_of",
    "remoteness",
    "rotations_equal",
    "run_length_decode",
    "run_length_encode",
    "settle",
    "shift_property_holds",
    "simulate",
    "smith_remoteness",
    "step",
    "successors",
]
