"""Shared generators and naive reference counters for the tests.

The naive counters here repeat the single-move primitive one step at a
time; everything clever in the package is required to agree with them
exactly.
"""

from __future__ import annotations

import random

from slownim import PileVector, RuleParams, range_of
from slownim.core import _has_multiple, _step_inplace


def random_vector(rng: random.Random, max_n: int = 8, max_ell: int = 9,
                  span: int = 1000) -> tuple[PileVector, RuleParams]:
    """Arbitrary instance: any spread, entries within +-span."""
    n = rng.randint(1, max_n)
    ell = rng.randint(2, max_ell)
    entries = sorted(rng.randint(-span, span) for _ in range(n))
    return PileVector(tuple(entries)), RuleParams(ell)


def random_periodic_vector(rng: random.Random, max_n: int = 8, max_ell: int = 9,
                           span: int = 1000) -> tuple[PileVector, RuleParams]:
    """Instance already in the periodic regime: spread at most the modulus
    and a divisible entry present (rejection-sampled)."""
    while True:
        n = rng.randint(1, max_n)
        ell = rng.randint(2, max_ell)
        base = rng.randint(-span, span - ell)
        entries = sorted(base + rng.randint(0, ell) for _ in range(n))
        if _has_multiple(entries, ell):
            return PileVector(tuple(entries)), RuleParams(ell)


def naive_settle(x: PileVector, params: RuleParams) -> tuple[int, PileVector]:
    """First step index with spread at most the modulus, plus that vector."""
    work = list(x.entries)
    steps = 0
    while work[-1] - work[0] > params.ell:
        _step_inplace(work, params.ell)
        steps += 1
    return steps, PileVector(tuple(work))


def naive_finish_count(entries, ell: int, d: int, level: int = 0) -> int:
    """Moves until the d-th smallest entry is at most the level, one move
    at a time."""
    work = list(entries)
    steps = 0
    while work[d - 1] > level:
        _step_inplace(work, ell)
        steps += 1
    return steps


def spread_trail(x: PileVector, params: RuleParams, steps: int) -> list[int]:
    """range_of along the orbit, positions 0..steps."""
    work = list(x.entries)
    out = [work[-1] - work[0]]
    for _ in range(steps):
        _step_inplace(work, params.ell)
        out.append(work[-1] - work[0])
    return out


def log_uniform_steps(rng: random.Random, cap: int) -> int:
    """Step counts spread over magnitudes up to cap (inclusive-ish)."""
    import math

    return min(cap, int(math.exp(rng.uniform(0.0, math.log(cap)))))


__all__ = [
    "log_uniform_steps",
    "naive_finish_count",
    "naive_settle",
    "random_periodic_vector",
    "random_vector",
    "spread_trail",
]
