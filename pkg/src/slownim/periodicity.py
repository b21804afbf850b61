"""Exact long-range evaluation of the orbit in its periodic regime.

Once the spread of the vector is at most the modulus and some entry is
divisible by it, the orbit is periodic up to a uniform drop: every
``n * ell`` moves lower every entry by exactly ``(n - 1) * ell``.  That
identity turns a ``j``-step evaluation into big-integer arithmetic plus at
most ``n * ell`` naive moves.

The same regime fixes the pivot pattern: the pivot index shifts left by
one every ``ell`` moves (wrapping from 1 to n), each column's letter trace
over {s = kept, r = reduced} is periodic with period ``n * ell``
containing exactly ``ell`` letters ``s``, maximal cyclic runs of ``r``
have length divisible by ``ell``, and maximal cyclic runs of ``s`` have
length at most ``ell``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .core import DomainError, PileVector, RuleParams, _has_multiple, _pivot_index, _step_inplace, range_of


@dataclass(frozen=True)
class PeriodSummary:
    """One column's letter trace over a full period.

    ``word`` is a string over {'s', 'r'} of length ``period_length``;
    ``drop_per_period`` is the uniform decrease of every entry over the
    period.
    """

    period_length: int
    word: str
    s_count: int
    r_count: int
    drop_per_period: int

    @property
    def run_length(self) -> str:
        return run_length_encode(self.word)


def _require_periodic_regime(x: PileVector, params: RuleParams, op: str) -> None:
    if range_of(x) > params.ell:
        raise DomainError(
            f"{op} needs spread <= modulus (got spread {range_of(x)}, modulus {params.ell}); settle first"
        )
    if not _has_multiple(x.entries, params.ell):
        raise DomainError(f"{op} needs an entry divisible by {params.ell}")


def fast_forward(x: PileVector, params: RuleParams, steps: int) -> PileVector:
    """Position after `steps` moves, computed through the period identity.

    Requires the periodic regime (spread <= modulus and a divisible entry
    present); cost is ``O(n * ell)`` naive moves plus big-integer
    arithmetic in the size of `steps`.  Agrees exactly with
    :func:`slownim.core.simulate`.
    """
    if steps < 0:
        raise ValueError("step count must be non-negative")
    _require_periodic_regime(x, params, "fast_forward")
    n = x.n
    period = n * params.ell
    whole, rest = divmod(steps, period)
    work = list(x.entries)
    ell = params.ell
    for _ in range(rest):
        _step_inplace(work, ell)
    if whole:
        drop = whole * (n - 1) * ell
        work = [v - drop for v in work]
    return PileVector(tuple(work))


def pivot_log(x: PileVector, params: RuleParams, steps: int) -> list[int]:
    """1-based pivot index at each of the first `steps` positions of the
    orbit.  Requires a divisible entry (pivots stay defined from then on)."""
    if not _has_multiple(x.entries, params.ell):
        raise DomainError("pivot_log needs an entry divisible by the modulus")
    work = list(x.entries)
    ell = params.ell
    log: list[int] = []
    for _ in range(steps):
        k, fired = _step_inplace(work, ell)
        assert not fired, "fallback cannot fire once a divisible entry exists"
        log.append(k + 1)
    return log


def period_word(x: PileVector, params: RuleParams, column: int) -> PeriodSummary:
    """Letter trace of one column (1-based) over a full period starting at
    the vector handed in."""
    _require_periodic_regime(x, params, "period_word")
    n = x.n
    if not 1 <= column <= n:
        raise ValueError(f"column must be in 1..{n}, got {column}")
    ell = params.ell
    period = n * ell
    log = pivot_log(x, params, period)
    word = "".join("s" if p == column else "r" for p in log)
    summary = PeriodSummary(
        period_length=period,
        word=word,
        s_count=word.count("s"),
        r_count=word.count("r"),
        drop_per_period=(n - 1) * ell,
    )
    _check_word_structure(summary, ell)
    return summary


def _check_word_structure(summary: PeriodSummary, ell: int) -> None:
    # Structure is a theorem in the periodic regime; a violation means a
    # rule bug, not bad input.
    assert summary.s_count == ell, f"expected {ell} kept steps per period, got {summary.s_count}"
    assert summary.r_count == summary.period_length - ell
    for letter, length in cyclic_runs(summary.word):
        if letter == "r":
            assert length % ell == 0, f"reduced-run of length {length} not a multiple of {ell}"
        else:
            assert length <= ell, f"kept-run of length {length} exceeds {ell}"


def cyclic_runs(word: str) -> list[tuple[str, int]]:
    """Maximal runs of the word read cyclically (the wrap-around run is a
    single run)."""
    n = len(word)
    boundary = next((i for i in range(1, n) if word[i] != word[i - 1]), None)
    if boundary is None:
        return [(word[0], n)] if n else []
    rotated = word[boundary:] + word[:boundary]
    runs: list[tuple[str, int]] = []
    for ch in rotated:
        if runs and runs[-1][0] == ch:
            runs[-1] = (ch, runs[-1][1] + 1)
        else:
            runs.append((ch, 1))
    return runs


def rotations_equal(a: str, b: str) -> bool:
    """True when the two words are cyclic rotations of each other."""
    return len(a) == len(b) and b in a + a


def run_length_encode(word: str) -> str:
    """Compact run form, e.g. ``"s^2 r^3 s r^6"``."""
    parts: list[str] = []
    i = 0
    while i < len(word):
        j = i
        while j + 1 < len(word) and word[j + 1] == word[i]:
            j += 1
        count = j - i + 1
        parts.append(word[i] if count == 1 else f"{word[i]}^{count}")
        i = j + 1
    return " ".join(parts)


_RUN_TOKEN = re.compile(r"([sr])(?:\^(\d+))?$")


def run_length_decode(text: str) -> str:
    """Inverse of :func:`run_length_encode`; accepts ``"s^2 r^3 s"``."""
    out: list[str] = []
    for token in text.split():
        m = _RUN_TOKEN.match(token)
        if not m:
            raise ValueError(f"bad run token {token!r}")
        out.append(m.group(1) * int(m.group(2) or 1))
    return "".join(out)


def shift_property_holds(pivots: list[int], n: int, ell: int, window: int | None = None) -> bool:
    """Check the pivot left-shift law on a recorded pivot log: the pivot
    `ell` steps later is one less, wrapping from 1 to n."""
    if window is None:
        window = len(pivots) - ell
    if window < 0 or window + ell > len(pivots):
        raise ValueError("pivot log too short for the requested window")
    for j in range(window):
        expected = (pivots[j] - 2) % n + 1
        if pivots[j + ell] != expected:
            return False
    return True


def pivot_shift_check(x: PileVector, params: RuleParams, window: int) -> bool:
    """True iff the left-shift law holds at every step of the window."""
    if window < params.ell:
        raise ValueError(f"window must be at least the modulus ({params.ell})")
    _require_periodic_regime(x, params, "pivot_shift_check")
    log = pivot_log(x, params, window + params.ell)
    return shift_property_holds(log, x.n, params.ell, window)


def pivot_return_gaps(x: PileVector, params: RuleParams, window: int) -> list[list[int]]:
    """Lengths of the reduced stretches between successive pivot tenures.

    For each column, collects the number of steps strictly between the
    last step of one maximal kept-run and the first step of the next one,
    across `window` steps.  A column that just lost the pivot still holds
    its old divisible value and then loses 1 per step, so it can return
    only a multiple of the modulus later; each gap is asserted to be one
    (a violation is a rule bug).
    """
    _require_periodic_regime(x, params, "pivot_return_gaps")
    log = pivot_log(x, params, window)
    gaps: list[list[int]] = [[] for _ in range(x.n)]
    last_tenure_end: dict[int, int] = {}
    in_tenure: dict[int, bool] = {}
    for j, p in enumerate(log):
        for col in range(1, x.n + 1):
            if p == col:
                if not in_tenure.get(col, False) and col in last_tenure_end:
                    gap = j - last_tenure_end[col] - 1
                    assert gap % params.ell == 0, (
                        f"column {col} returned after a stretch of {gap} steps,"
                        f" not a multiple of {params.ell}"
                    )
                    gaps[col - 1].append(gap)
                in_tenure[col] = True
            elif in_tenure.get(col, False):
                in_tenure[col] = False
                last_tenure_end[col] = j - 1
    return gaps
