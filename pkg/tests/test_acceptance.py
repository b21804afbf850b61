"""Acceptance suite: one test per release criterion, each printing a PASS
line (run with ``pytest tests/test_acceptance.py -v -s``).

Everything here is exact -- integer equality, zero tolerance; the only
inequalities are the wall-clock budgets.
"""

import random
import time
from itertools import combinations_with_replacement

from slownim import (
    FinishSpec,
    GamePosition,
    MultiPlayerGameSpec,
    PileVector,
    RuleParams,
    SmithOracle,
    check_nash,
    fast_forward,
    moves_to_finish,
    optimal_move,
    period_word,
    pivot,
    pivot_log,
    pivot_return_gaps,
    position_at,
    range_of,
    remoteness,
    rotations_equal,
    run_length_decode,
    settle,
    shift_property_holds,
    simulate,
    step,
)

from helpers import log_uniform_steps, random_periodic_vector, random_vector

X0 = PileVector.parse("16,17,20,20,21")


def test_golden_orbit_suite():
    """Worked five-entry orbit: settle lengths, printed positions, and
    period words for moduli 2, 3, 4, 5, 7."""
    start = time.perf_counter()

    cases = {
        # ell: (last wide index, first narrow vector, (j, x^j) checkpoints, word)
        2: (4, "14,14,15,15,16", [(5, "14,14,15,15,16"), (15, "6,6,7,7,8")], "s r^4 s r^4"),
        3: (6, "12,13,13,13,15", [(7, "12,13,13,13,15"), (22, "0,1,1,1,3")], "s^2 r^3 s r^9"),
        4: (0, "16,16,19,19,20", [(2, "15,16,18,18,19"), (22, "-1,0,2,2,3")], "s^3 r^8 s r^8"),
        5: (None, "16,17,20,20,21", [(25, "-4,-3,0,0,1")], "s^3 r^5 s r^10 s r^5"),
        7: (None, "16,17,20,20,21", [(35, "-12,-11,-8,-8,-7")], "s^3 r^7 s r^7 s^3 r^14"),
    }
    for ell, (wide, first, checkpoints, caption) in cases.items():
        params = RuleParams(ell)
        result = settle(X0, params)
        assert result.last_wide_index == wide, (ell, result.last_wide_index)
        assert str(result.first_absorbed) == first
        for j, expected in checkpoints:
            assert str(simulate(X0, params, j)) == expected, (ell, j)
            assert str(position_at(X0, params, j)) == expected, (ell, j)
        word = run_length_decode(caption)
        for column in range(1, 6):
            got = period_word(result.first_absorbed, params, column)
            assert rotations_equal(got.word, word), (ell, column, got.run_length)

    took = time.perf_counter() - start
    assert took < 1.0, f"golden orbit suite took {took:.2f}s"
    print(f"PASS golden-orbit-suite ({took:.2f}s)")


# Four printed subtables for four entries, modulus 3: rows, pivot column,
# and caption word.  Two printed rows contradicted their own pivot column
# and the deterministic continuation and are corrected here: subtable b row
# 7 reads (10,10,12,12) (its pivot 4 and the following row force it), and
# subtable c row 10 reads (8,9,10,10) (the following row forces it).
TABLES = {
    "a": (["15,15,17,18", "14,15,16,17", "13,15,15,16", "12,14,15,15", "12,13,14,14",
           "12,12,13,13", "11,12,12,12", "10,11,11,12", "9,10,10,12", "9,9,9,11",
           "8,8,9,10", "7,7,9,9", "6,6,8,9"],
          [2, 2, 3, 1, 1, 2, 4, 4, 1, 3, 3, 4, 2], "s^2 r^3 s r^6"),
    "b": (["15,16,17,17", "15,15,16,16", "14,15,15,15", "13,14,14,15", "12,13,13,15",
           "12,12,12,14", "11,11,12,13", "10,10,12,12", "9,9,11,12", "8,9,10,11",
           "7,9,9,10", "6,8,9,9", "6,7,8,8"],
          [1, 2, 4, 4, 1, 3, 3, 4, 2, 2, 3, 1, 1], "s^2 r^3 s r^6"),
    "c": (["15,17,17,18", "15,16,16,17", "15,15,15,16", "14,14,15,15", "13,13,14,15",
           "12,12,13,15", "11,12,12,14", "10,11,12,13", "9,10,12,12", "9,9,11,11",
           "8,9,10,10", "7,9,9,9", "6,8,8,9"],
          [1, 1, 3, 4, 4, 2, 3, 3, 1, 2, 2, 4, 1], "s^2 r^6 s r^3"),
    "d": (["15,18,18,18", "15,17,17,17", "15,16,16,16", "15,15,15,15", "14,14,14,15",
           "13,13,13,15", "12,12,12,15", "11,11,12,14", "10,10,12,13", "9,9,12,12",
           "8,9,11,11", "7,9,10,10", "6,9,9,9"],
          [1, 1, 1, 4, 4, 4, 3, 3, 3, 2, 2, 2, 1], "s^3 r^9"),
}


def test_golden_tables():
    """Thirteen-row tables: vectors and pivot columns exact, caption words
    up to rotation, for all four starts."""
    params = RuleParams(3)
    for name, (rows, pivots, caption) in TABLES.items():
        x = PileVector.parse(rows[0])
        current = x
        for j, (row, expected_pivot) in enumerate(zip(rows, pivots)):
            assert str(current) == row, (name, j, str(current))
            assert pivot(current, params).index == expected_pivot, (name, j)
            current, _ = step(current, params)
        word = run_length_decode(caption)
        for column in range(1, 5):
            assert rotations_equal(period_word(x, params, column).word, word), (name, column)
    print("PASS golden-tables")


def test_golden_sequence_modulus_seven():
    """Nine printed positions of the five-entry, modulus-7 orbit."""
    rows = ["5,5,7,8,9", "4,4,7,7,8", "3,3,6,7,7", "2,2,5,6,7", "1,1,4,5,7",
            "0,0,3,4,7", "-1,0,2,3,6", "-2,0,1,2,5", "-3,0,0,1,4"]
    x = PileVector.parse(rows[0])
    for j, row in enumerate(rows):
        assert str(simulate(x, RuleParams(7), j)) == row, j
    print("PASS golden-sequence-modulus-7")


def test_fast_path_equivalence():
    """10^3 randomized instances: the shortcut evaluators agree with naive
    simulation exactly; a 10^18-step evaluation stays under a second."""
    rng = random.Random(2024)
    for i in range(1000):
        if i % 2 == 0:
            x, params = random_vector(rng, max_n=8, max_ell=9, span=1000)
        else:
            x, params = random_periodic_vector(rng, max_n=8, max_ell=9, span=1000)
        j = 10_000 if i < 10 else log_uniform_steps(rng, 10_000)
        expected = simulate(x, params, j)
        assert position_at(x, params, j) == expected, (x, params.ell, j)
        if range_of(x) <= params.ell and any(v % params.ell == 0 for v in x.entries):
            assert fast_forward(x, params, j) == expected, (x, params.ell, j)

    x = PileVector.parse("14,14,15,15,16")
    begin = time.perf_counter()
    far = position_at(x, RuleParams(2), 10**18)
    took = time.perf_counter() - begin
    assert took < 1.0, f"10^18-step evaluation took {took:.2f}s"
    whole, rest = divmod(10**18, 10)
    assert far == simulate(x, RuleParams(2), rest).shift(-whole * 8)
    print(f"PASS fast-path-equivalence (10^18 steps in {took:.3f}s)")


def test_structure_property_suite():
    """>= 10^3 randomized periodic-regime instances; every structural law
    holds with zero violations."""
    rng = random.Random(777)
    instances = 0
    while instances < 1000:
        x, params = random_periodic_vector(rng, max_n=8, max_ell=9)
        instances += 1
        n, ell = x.n, params.ell
        period = n * ell

        # Absorption and the per-move spread bounds.
        y, _ = step(x, params)
        assert range_of(y) <= ell
        assert abs(range_of(y) - range_of(x)) <= 1

        # Period drop: one full period lowers everything uniformly.
        far = simulate(x, params, period)
        assert far.entries == tuple(v - (n - 1) * ell for v in x.entries)

        # Pivot left shift with wraparound, over a two-period log.
        log = pivot_log(x, params, 2 * period)
        assert shift_property_holds(log, n, ell)

        # Column words from the same log: letter counts, run structure,
        # rotation equivalence, and one kept column per step.
        words = ["".join("s" if p == c else "r" for p in log[:period])
                 for c in range(1, n + 1)]
        for word in words:
            assert word.count("s") == ell
            assert rotations_equal(word, words[0])
        for letters in zip(*words):
            assert letters.count("s") == 1
        summary = period_word(x, params, rng.randint(1, n))  # runs asserted inside
        assert summary.period_length == period

        # Return gaps divisible by the modulus (asserted inside the op).
        gaps = pivot_return_gaps(x, params, 2 * period)
        assert all(g % ell == 0 for per_column in gaps for g in per_column)

    # Spread growth over any horizon is bounded by the modulus, from
    # arbitrary (wide) starts.
    rng = random.Random(778)
    for _ in range(1000):
        x, params = random_vector(rng, span=150)
        trail_x = x
        top = range_of(x)
        for _ in range(100):
            trail_x, _ = step(trail_x, params)
            top = max(top, range_of(trail_x))
        assert top - range_of(x) <= params.ell
    print("PASS structure-property-suite")


def _remoteness_grid():
    for n, top in ((2, 12), (3, 12), (4, 12), (5, 7)):
        for piles in combinations_with_replacement(range(top + 1), n):
            yield piles


def test_remoteness_exactness():
    """Fast solver == recursive oracle on the whole grid, outcome parity
    coherent, all well under the five-minute budget; bit-size scaling
    checked at 10^15."""
    begin = time.perf_counter()
    oracle = SmithOracle()
    checked = 0
    for piles in _remoteness_grid():
        pos = GamePosition(piles)
        result = remoteness(pos)
        assert result.remoteness == oracle.remoteness(pos), piles
        assert (result.outcome == "P") == (result.remoteness % 2 == 0), piles
        checked += 1
    took = time.perf_counter() - begin
    assert took < 300.0, f"grid comparison took {took:.1f}s"

    begin = time.perf_counter()
    big = remoteness(GamePosition.of([10**15, 10**15 + 3, 10**15 + 8]))
    big_took = time.perf_counter() - begin
    assert big_took < 1.0, f"huge-pile remoteness took {big_took:.2f}s"
    assert big.remoteness > 10**15
    print(f"PASS remoteness-exactness ({checked} positions in {took:.1f}s, "
          f"10^15 piles in {big_took:.3f}s)")


def test_move_optimality():
    """On the exactness grid: the engine's move lowers remoteness by
    exactly 1 from winning seats and achieves the longest resistance from
    losing ones."""
    for piles in _remoteness_grid():
        pos = GamePosition(piles)
        if pos.terminal:
            continue
        result = remoteness(pos)
        nxt, _ = optimal_move(pos)
        after = remoteness(nxt).remoteness
        assert after == result.remoteness - 1, (piles, result.remoteness, after)
        if result.outcome == "P":
            # Maximal resistance: no legal move does better than R - 1.
            from slownim import successors

            values = [remoteness(GamePosition(s)).remoteness for s in successors(pos.piles)]
            assert max(values) == result.remoteness - 1, piles
    print("PASS move-optimality")


def test_conjecture_checker():
    """Two players: the rule profile survives exhaustive deviation search
    on [0..8]^3.  Three players: the checker completes on [0..6]^3 and
    reports what it found (a counterexample would be a result, not a
    failure)."""
    for piles in combinations_with_replacement(range(9), 3):
        spec = MultiPlayerGameSpec(players=2, initial=GamePosition(piles))
        report = check_nash(spec, max_states=5_000_000)
        assert report.deviations == (), (piles, report.deviations)

    reports = []
    deviations = 0
    for piles in combinations_with_replacement(range(7), 3):
        spec = MultiPlayerGameSpec(players=3, initial=GamePosition(piles))
        report = check_nash(spec, max_states=5_000_000)
        reports.append(report)
        deviations += len(report.deviations)
    assert len(reports) == 84  # sorted triples over [0..6]
    print(f"PASS conjecture-checker (3-player deviations found: {deviations}"
          + ("" if deviations == 0 else " -- see reports"))


def test_finish_line_grid():
    """The fast finish counter equals one-move-at-a-time counting across
    the full grid (the solver's backbone)."""
    from helpers import naive_finish_count

    checked = 0
    for n in (2, 3, 4, 5):
        for ell in (2, 3):
            params = RuleParams(ell)
            for piles in combinations_with_replacement(range(16), n):
                x = PileVector(piles)
                for d in (1, 2, 3):
                    if d > n:
                        continue
                    assert moves_to_finish(x, params, FinishSpec(d)) == \
                        naive_finish_count(piles, ell, d), (piles, ell, d)
                    checked += 1
    assert checked > 100_000
    print(f"PASS finish-line-grid ({checked} cases)")
