"""Pivot-rule dynamics on sorted integer vectors.

The state is a non-decreasing vector of integers (arbitrary precision,
negatives allowed).  A single move picks the *pivot* -- the rightmost
occurrence of the smallest entry divisible by the modulus -- keeps it
unchanged, and lowers every other entry by 1.  When no entry is divisible
by the modulus, the fallback policy keeps the largest entry instead.

Moves preserve sortedness; this module asserts it after every move and
never re-sorts, so a rule bug surfaces immediately.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class DomainError(ValueError):
    """An operation was applied to a state outside its domain."""


class Fallback(Enum):
    """Policy for a move when no entry is divisible by the modulus."""

    KEEP_LARGEST = "keep-largest"


@dataclass(frozen=True)
class RuleParams:
    """Move parameters: the divisibility modulus and the fallback policy."""

    ell: int
    fallback: Fallback = Fallback.KEEP_LARGEST

    def __post_init__(self) -> None:
        if self.ell < 2:
            raise ValueError(f"modulus must be at least 2, got {self.ell}")


@dataclass(frozen=True)
class PileVector:
    """Non-decreasing vector of arbitrary-precision integers.

    Direct construction validates sortedness and never repairs it.  Use
    :meth:`of` or :meth:`parse` to sort arbitrary input once, on ingest.
    The canonical textual form is comma-separated entries in
    non-decreasing order, e.g. ``"16,17,20,20,21"``.
    """

    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.entries:
            raise ValueError("vector must have at least one entry")
        e = self.entries
        if any(a > b for a, b in zip(e, e[1:])):
            raise ValueError(f"entries are not non-decreasing: {e}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "PileVector":
        """Build from any iterable of ints, sorting once."""
        return cls(tuple(sorted(int(v) for v in values)))

    @classmethod
    def parse(cls, text: str) -> "PileVector":
        """Parse the comma-separated form; entries may arrive unsorted."""
        try:
            return cls.of(int(part) for part in text.split(","))
        except ValueError:
            raise ValueError(f"not a comma-separated integer vector: {text!r}") from None

    @property
    def n(self) -> int:
        return len(self.entries)

    def shift(self, amount: int) -> "PileVector":
        """Add a constant to every entry."""
        return PileVector(tuple(v + amount for v in self.entries))

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.entries)


@dataclass(frozen=True)
class Pivot:
    """The kept position of a move: 1-based index and the entry's value."""

    index: int
    value: int


@dataclass(frozen=True)
class StepRecord:
    """What a single move did: which index was kept, and whether the
    no-multiple fallback fired."""

    kept_index: int
    fallback: bool


def range_of(x: PileVector) -> int:
    """Spread of the vector: largest entry minus smallest."""
    return x.entries[-1] - x.entries[0]


def pivot(x: PileVector, params: RuleParams) -> Pivot | None:
    """Rightmost occurrence of the smallest entry divisible by the modulus.

    Returns None when no entry is divisible; that is a valid state, not an
    error (the fallback policy covers the move).
    """
    k = _pivot_index(x.entries, params.ell)
    if k < 0:
        return None
    return Pivot(index=k + 1, value=x.entries[k])


def step(x: PileVector, params: RuleParams) -> tuple[PileVector, StepRecord]:
    """Apply one move: keep the pivot (or the largest entry under fallback),
    lower every other entry by 1."""
    work = list(x.entries)
    k, fired = _step_inplace(work, params.ell)
    return PileVector(tuple(work)), StepRecord(kept_index=k + 1, fallback=fired)


def simulate(x: PileVector, params: RuleParams, steps: int) -> PileVector:
    """Run `steps` successive moves naively; cost grows with `steps`.

    This is the reference evaluator every shortcut in the package is
    checked against.
    """
    if steps < 0:
        raise ValueError("step count must be non-negative")
    work = list(x.entries)
    ell = params.ell
    for _ in range(steps):
        _step_inplace(work, ell)
    return PileVector(tuple(work))


# -- list-level workers shared across the package ---------------------------

def _pivot_index(entries, ell: int) -> int:
    """0-based pivot index, or -1 when no entry is divisible by `ell`.

    Equal values sit in a contiguous block (sorted input), so the rightmost
    holder of the minimal divisible value is the end of the first divisible
    block.
    """
    n = len(entries)
    for i, v in enumerate(entries):
        if v % ell == 0:
            j = i
            while j + 1 < n and entries[j + 1] == v:
                j += 1
            return j
    return -1


def _has_multiple(entries, ell: int) -> bool:
    return any(v % ell == 0 for v in entries)


def _step_inplace(entries: list, ell: int) -> tuple[int, bool]:
    """One move on a working list; returns (kept 0-based index, fallback fired)."""
    k = _pivot_index(entries, ell)
    fired = k < 0
    if fired:
        k = len(entries) - 1
    kept = entries[k]
    for i in range(len(entries)):
        entries[i] -= 1
    entries[k] = kept
    # Only the kept entry's boundaries can break monotonicity; everything
    # else shifted uniformly.
    assert k == 0 or entries[k - 1] <= kept, "move broke sortedness on the left"
    assert k == len(entries) - 1 or kept <= entries[k + 1], "move broke sortedness on the right"
    return k, fired
