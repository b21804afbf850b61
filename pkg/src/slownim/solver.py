"""Exact slow nim with n piles where every move lowers n - 1 of them.

A move keeps one pile and removes one stone from each of the others, all
of which must be non-empty; a position with two empty piles is terminal
and the player to move loses.  The modulus-2 pivot rule (keep the
smallest even pile, rightmost among equals; keep a largest pile when all
are odd) plays this game perfectly: the number of rule moves to a
terminal position equals Smith's remoteness, so the fast finish-line
counter doubles as a remoteness solver that runs in time linear in the
bit size of the piles.

The Smith oracle here recomputes remoteness by plain memoized recursion
over all legal moves; it is deliberately independent of the pivot rule
and exists to check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import DomainError, PileVector, RuleParams, _step_inplace
from .fastpath import FinishSpec, moves_to_finish

_GAME_RULES = RuleParams(ell=2)


class BudgetExceededError(RuntimeError):
    """An exhaustive search outgrew its configured state budget."""


@dataclass(frozen=True)
class GamePosition:
    """Sorted non-negative pile vector, at least two piles."""

    piles: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.piles) < 2:
            raise ValueError("a position needs at least two piles")
        if any(p < 0 for p in self.piles):
            raise ValueError(f"piles must be non-negative: {self.piles}")
        if any(a > b for a, b in zip(self.piles, self.piles[1:])):
            raise ValueError(f"piles are not sorted: {self.piles}")

    @classmethod
    def of(cls, values) -> "GamePosition":
        return cls(tuple(sorted(int(v) for v in values)))

    @property
    def n(self) -> int:
        return len(self.piles)

    @property
    def terminal(self) -> bool:
        """No move exists once two piles are empty."""
        return self.piles[1] == 0

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.piles)


@dataclass(frozen=True)
class RemotenessResult:
    """Optimal play length from a position, its outcome, and the engine's
    keep.  Even remoteness means the previous player wins (P); the keep is
    reported at P-positions too, as the longest possible resistance."""

    remoteness: int
    outcome: str  # "P" or "N"
    best_move: int | None


def optimal_move(pos: GamePosition) -> tuple[GamePosition, int]:
    """The engine's move: modulus-2 pivot rule.  Returns the new position
    and the 1-based index of the kept pile."""
    if pos.terminal:
        raise DomainError(f"no move from terminal position {pos}")
    work = list(pos.piles)
    kept, _ = _step_inplace(work, 2)
    assert work[0] >= 0, "rule move drove a pile negative"
    return GamePosition(tuple(work)), kept + 1


def apply_move(pos: GamePosition, keep_index: int) -> GamePosition:
    """Apply an arbitrary legal move keeping the 1-based `keep_index`."""
    if pos.terminal:
        raise DomainError(f"no move from terminal position {pos}")
    if not 1 <= keep_index <= pos.n:
        raise DomainError(f"keep index must be in 1..{pos.n}, got {keep_index}")
    if any(p == 0 for i, p in enumerate(pos.piles) if i != keep_index - 1):
        raise DomainError("move would drive a pile negative")
    work = [p - 1 for p in pos.piles]
    work[keep_index - 1] += 1
    return GamePosition.of(work)


def remoteness(pos: GamePosition) -> RemotenessResult:
    """Exact remoteness via the fast finish-line counter (two piles must
    reach zero)."""
    if pos.terminal:
        return RemotenessResult(remoteness=0, outcome="P", best_move=None)
    count = moves_to_finish(PileVector(pos.piles), _GAME_RULES, FinishSpec(d=2, level=0))
    _, kept = optimal_move(pos)
    return RemotenessResult(
        remoteness=count,
        outcome="P" if count % 2 == 0 else "N",
        best_move=kept,
    )


def play_line(pos: GamePosition) -> list[GamePosition]:
    """Full engine-vs-engine trajectory; one position per ply, ending at a
    terminal.  Its move count equals the remoteness."""
    line = [pos]
    while not line[-1].terminal:
        nxt, _ = optimal_move(line[-1])
        line.append(nxt)
    return line


def successors(piles: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Distinct positions reachable in one legal move, sorted."""
    if piles[1] == 0:
        return []
    out: set[tuple[int, ...]] = set()
    if piles[0] == 0:
        # Exactly one empty pile: it must be the one kept.
        out.add(tuple(sorted([0] + [p - 1 for p in piles[1:]])))
    else:
        for i in range(len(piles)):
            nxt = [p - 1 for p in piles]
            nxt[i] += 1
            out.add(tuple(sorted(nxt)))
    return sorted(out)


class SmithOracle:
    """Remoteness by memoized recursion over every legal move.

    At a terminal the value is 0; otherwise it is 1 plus the smallest even
    successor value when one exists (the mover wins as fast as possible),
    else 1 plus the largest successor value (the mover resists as long as
    possible).  One instance holds one memo table; do not share an
    instance across concurrent callers.
    """

    def __init__(self, max_states: int | None = None) -> None:
        self._memo: dict[tuple[int, ...], int] = {}
        self._max_states = max_states

    @property
    def states_explored(self) -> int:
        return len(self._memo)

    def remoteness(self, pos: GamePosition | tuple[int, ...]) -> int:
        piles = pos.piles if isinstance(pos, GamePosition) else tuple(sorted(pos))
        return self._value(piles)

    def _value(self, piles: tuple[int, ...]) -> int:
        cached = self._memo.get(piles)
        if cached is not None:
            return cached
        if self._max_states is not None and len(self._memo) >= self._max_states:
            raise BudgetExceededError(
                f"oracle memo exceeded {self._max_states} states (set GM_BUDGET higher)"
            )
        if piles[1] == 0:
            value = 0
        else:
            values = [self._value(s) for s in successors(piles)]
            evens = [v for v in values if v % 2 == 0]
            value = 1 + (min(evens) if evens else max(values))
        self._memo[piles] = value
        return value


def smith_remoteness(pos: GamePosition, max_states: int | None = None) -> int:
    """One-shot oracle evaluation with a fresh memo."""
    return SmithOracle(max_states=max_states).remoteness(pos)


# -- multi-player equilibrium checking ---------------------------------------

@dataclass(frozen=True)
class MultiPlayerGameSpec:
    """The same game dealt to `players` players moving cyclically.

    The rule strategy for everyone is the pivot rule with the player count
    as modulus (keep the largest pile when nothing is divisible).  The
    loser pays ``C - L`` for a play of length ``L``; each winner receives
    ``(C - L) / (players - 1)``.  ``payoff_constant`` defaults to
    ``1 + sum(piles)``, which exceeds every possible play length.
    """

    players: int
    initial: GamePosition
    payoff_constant: int | None = None

    def __post_init__(self) -> None:
        if self.players < 2:
            raise ValueError("need at least two players")
        longest = sum(self.initial.piles) // (self.initial.n - 1)
        constant = self.constant
        if constant <= longest:
            raise ValueError(
                f"payoff constant {constant} must exceed the longest possible play ({longest})"
            )

    @property
    def constant(self) -> int:
        if self.payoff_constant is not None:
            return self.payoff_constant
        return 1 + sum(self.initial.piles)


@dataclass(frozen=True)
class PlayerCheck:
    """Best-response audit of one player against everyone else following
    the rule.  `improvable` means a unilateral deviation strictly beats
    following the rule."""

    player: int
    rule_payoff: Fraction
    best_payoff: Fraction
    best_wins: bool
    best_length: int

    @property
    def improvable(self) -> bool:
        return self.best_payoff > self.rule_payoff


@dataclass(frozen=True)
class NashReport:
    """Deviation audit for every player from one initial position."""

    initial: GamePosition
    players: int
    payoff_constant: int
    rule_loser: int
    rule_length: int
    checks: tuple[PlayerCheck, ...]
    states_explored: int

    @property
    def deviations(self) -> tuple[PlayerCheck, ...]:
        return tuple(c for c in self.checks if c.improvable)


def _rule_move(piles: tuple[int, ...], ell: int) -> tuple[int, ...]:
    work = list(piles)
    _step_inplace(work, ell)
    assert work[0] >= 0
    return tuple(work)


def check_nash(spec: MultiPlayerGameSpec, max_states: int | None = None) -> NashReport:
    """Audit the all-follow-the-rule profile for profitable unilateral
    deviations by exhaustive best response.

    For each player in turn, everyone else is pinned to the rule strategy
    and the player's best achievable payoff over all strategies is
    computed by backward induction (a win is always better than a loss,
    wins prefer short plays, losses prefer long ones).  The report states
    what was found; it never asserts the equilibrium.
    """
    players = spec.players
    constant = spec.constant
    # The all-rule play: loser and length.
    piles = spec.initial.piles
    turn = 0
    length = 0
    while piles[1] != 0:
        piles = _rule_move(piles, players)
        turn = (turn + 1) % players
        length += 1
    rule_loser, rule_length = turn, length

    checks: list[PlayerCheck] = []
    states = 0
    for player in range(players):
        memo: dict[tuple[tuple[int, ...], int], tuple[bool, int]] = {}

        def best_response(piles: tuple[int, ...], turn: int) -> tuple[bool, int]:
            key = (piles, turn)
            cached = memo.get(key)
            if cached is not None:
                return cached
            if max_states is not None and states + len(memo) >= max_states:
                raise BudgetExceededError(
                    f"deviation search exceeded {max_states} states (set GM_BUDGET higher)"
                )
            if piles[1] == 0:
                result = (turn != player, 0)
            elif turn != player:
                wins, rest = best_response(_rule_move(piles, players), (turn + 1) % players)
                result = (wins, rest + 1)
            else:
                best: tuple[bool, int] | None = None
                for succ in successors(piles):
                    wins, rest = best_response(succ, (turn + 1) % players)
                    cand = (wins, rest + 1)
                    if best is None:
                        best = cand
                    elif cand[0] != best[0]:
                        best = cand if cand[0] else best
                    elif cand[0]:
                        best = min(best, cand, key=lambda t: t[1])
                    else:
                        best = max(best, cand, key=lambda t: t[1])
                assert best is not None
                result = best
            memo[key] = result
            return result

        wins, length = best_response(spec.initial.piles, 0)
        best_payoff = _payoff(player, wins, length, constant, players)
        rule_payoff = _payoff(player, rule_loser != player, rule_length, constant, players)
        checks.append(
            PlayerCheck(
                player=player,
                rule_payoff=rule_payoff,
                best_payoff=best_payoff,
                best_wins=wins,
                best_length=length,
            )
        )
        states += len(memo)

    return NashReport(
        initial=spec.initial,
        players=players,
        payoff_constant=constant,
        rule_loser=rule_loser,
        rule_length=rule_length,
        checks=tuple(checks),
        states_explored=states,
    )


def _payoff(player: int, wins: bool, length: int, constant: int, players: int) -> Fraction:
    if wins:
        return Fraction(constant - length, players - 1)
    return Fraction(-(constant - length))
