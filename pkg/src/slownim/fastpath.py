"""Orbit evaluation outside the periodic regime, and finish-line counting.

While the spread exceeds the modulus, only a prefix of the entries (the
*leaders*: entries within ``ell`` of the smallest) takes part in the pivot
rotation; every other entry just loses 1 per move.  Over any ``m * ell``
moves in that configuration the ``m`` leaders drop ``(m - 1) * ell`` each
and the outsiders drop ``m * ell`` each, so the outsiders gain ``ell`` per
block and eventually join.  The worker below advances the orbit in exact
whole-block jumps whose lengths are capped so that no join, no absorption
into the small-spread regime, and no finish-line crossing can occur
strictly inside a jump; everything the caps cannot rule out is handled by
naive single moves.  Every jump is therefore exact, and every operation
here agrees with naive simulation move for move.

Costs are linear in the vector length, the modulus, and the *bit size* of
the entries and the step count, never in their magnitude.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DomainError, PileVector, RuleParams, _has_multiple, _step_inplace


@dataclass(frozen=True)
class FinishSpec:
    """Stopping rule: halt once at least `d` entries are at most `level`."""

    d: int
    level: int = 0

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"finish count must be at least 1, got {self.d}")


@dataclass(frozen=True)
class SettleResult:
    """Outcome of running the orbit to its first small-spread vector.

    ``prefix_len`` is the number of moves taken (None when the start was
    already in the small-spread regime -- the empty prefix is explicit,
    never encoded as 0).  ``trace`` records (leader count, moves advanced)
    phases for diagnostics.
    """

    prefix_len: int | None
    first_absorbed: PileVector
    trace: tuple[tuple[int, int], ...]

    @property
    def last_wide_index(self) -> int | None:
        """Index of the last orbit position whose spread still exceeded the
        modulus (None when there was none)."""
        return None if self.prefix_len is None else self.prefix_len - 1


def leaders(x: PileVector, params: RuleParams) -> int:
    """Largest m such that the m-th smallest entry is within the modulus of
    the smallest; the first m entries are the leader set."""
    return _leader_count(x.entries, params.ell)


def settle(x: PileVector, params: RuleParams) -> SettleResult:
    """Advance until the spread is at most the modulus; exact step count."""
    work = list(x.entries)
    trace: list[list[int]] = []
    steps = _advance(work, params.ell, stop_absorbed=True, trace=trace)
    return SettleResult(
        prefix_len=steps if steps > 0 else None,
        first_absorbed=PileVector(tuple(work)),
        trace=tuple((m, moved) for m, moved in trace),
    )


def position_at(x: PileVector, params: RuleParams, steps: int) -> PileVector:
    """Position after `steps` moves from any start; equals naive simulation.

    Settles into the small-spread regime first if needed, then applies the
    period identity; cost is logarithmic in `steps`.
    """
    if steps < 0:
        raise ValueError("step count must be non-negative")
    ell = params.ell
    n = x.n
    work = list(x.entries)
    remaining = steps
    # Reach the periodic regime (small spread AND a divisible entry).
    # Small spread alone is not absorbing: while nothing is divisible the
    # fallback keeps the largest entry, so the spread can re-expand.  Each
    # fallback move lowers the smallest entry, so at most ell - 1 of them
    # happen in total before a divisible entry exists for good.
    while remaining:
        remaining -= _advance(work, ell, budget=remaining, stop_absorbed=True)
        if remaining == 0 or _has_multiple(work, ell):
            break
        if n == 1:
            return PileVector(tuple(work))  # constant orbit
        _step_inplace(work, ell)
        remaining -= 1
    whole, rest = divmod(remaining, n * ell)
    if whole:
        drop = whole * (n - 1) * ell
        for i in range(n):
            work[i] -= drop
    for _ in range(rest):
        _step_inplace(work, ell)
    return PileVector(tuple(work))


def moves_to_finish(x: PileVector, params: RuleParams, finish: FinishSpec) -> int:
    """Exact number of moves until at least `finish.d` entries are at most
    `finish.level`; agrees with counting naive moves."""
    n = x.n
    if finish.d > n:
        raise DomainError(f"finish count {finish.d} exceeds vector length {n}")
    if x.entries[finish.d - 1] <= finish.level:
        return 0
    if n == 1:
        # The single entry is always kept, so the orbit is constant.
        raise DomainError("single-entry orbit is constant and never reaches the finish level")
    work = list(x.entries)
    return _advance(work, params.ell, finish=(finish.d, finish.level))


# -- the block-jump worker ---------------------------------------------------

def _leader_count(entries, ell: int) -> int:
    smallest = entries[0]
    m = 1
    for i in range(1, len(entries)):
        if entries[i] - smallest <= ell:
            m = i + 1
        else:
            break
    return m


def _advance(
    entries: list,
    ell: int,
    *,
    budget: int | None = None,
    stop_absorbed: bool = False,
    finish: tuple[int, int] | None = None,
    trace: list | None = None,
) -> int:
    """Advance `entries` in place until a stop condition; returns the exact
    number of moves taken.

    Stop conditions: `budget` moves taken, spread at most `ell` (when
    `stop_absorbed`), or the d-th smallest entry at most the finish level
    (when `finish` is given).  At least one must be supplied.

    Jump caps, with D the gap from the smallest entry to the first
    outsider and (d, c) the finish rule:

    * ``D - ell`` moves keep every intermediate state strictly wide and the
      pivot strictly inside the leader set, so whole leader-blocks advance
      by exact arithmetic;
    * ``x_d - c`` moves keep the finish line uncrossed strictly inside the
      jump (every entry loses at most 1 per move).

    Whenever no whole block fits under the caps, one naive move runs and
    everything is recomputed; jumps therefore never need to reason about
    their own endpoints.
    """
    assert budget is not None or stop_absorbed or finish is not None
    n = len(entries)
    steps = 0

    def note(m: int, moved: int) -> None:
        if trace is None or moved == 0:
            return
        if trace and trace[-1][0] == m:
            trace[-1][1] += moved
        else:
            trace.append([m, moved])

    while True:
        if budget is not None and steps >= budget:
            break
        if finish is not None and entries[finish[0] - 1] <= finish[1]:
            break
        absorbed = entries[-1] - entries[0] <= ell
        if stop_absorbed and absorbed:
            break
        if n == 1:
            # Constant orbit: the only reachable stop is the budget.
            assert budget is not None, "unbounded advance on a constant orbit"
            note(1, budget - steps)
            steps = budget
            break
        m = n if absorbed else _leader_count(entries, ell)
        if not _has_multiple(entries[:m], ell):
            # No leader is divisible yet; at most ell - 1 single moves fix
            # that (the smallest entry loses 1 per move meanwhile).
            _step_inplace(entries, ell)
            steps += 1
            note(m, 1)
            continue
        cap = None
        if not absorbed:
            cap = entries[m] - entries[0] - ell  # >= 1 since m is maximal
        if finish is not None:
            room = entries[finish[0] - 1] - finish[1]
            cap = room if cap is None else min(cap, room)
        if budget is not None:
            room = budget - steps
            cap = room if cap is None else min(cap, room)
        assert cap is not None and cap >= 1
        block = m * ell
        whole = cap // block
        if whole == 0:
            _step_inplace(entries, ell)
            steps += 1
            note(m, 1)
            continue
        leader_drop = whole * (m - 1) * ell
        outsider_drop = whole * m * ell
        for i in range(m):
            entries[i] -= leader_drop
        for i in range(m, n):
            entries[i] -= outsider_drop
        steps += whole * block
        note(m, whole * block)
    return steps
