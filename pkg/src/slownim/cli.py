"""Command-line front end for the dynamics, the solver, and the service.

Vectors are accepted in comma-separated form and may arrive unsorted;
they are sorted on ingest.  Exit codes: 0 success, 1 domain error
(including failed oracle checks), 2 usage error.

JSON output schemas (``--format json``) are stable and shared with the
test fixtures; the sweep CSV columns are ``pile_1..pile_n, remoteness,
outcome, best_move``.  ``GM_BUDGET`` caps the state counts of the
exhaustive oracle and deviation searches.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from itertools import combinations_with_replacement

from .core import DomainError, PileVector, RuleParams, simulate, step
from .fastpath import FinishSpec, moves_to_finish, position_at, settle
from .periodicity import fast_forward, period_word
from .solver import (
    BudgetExceededError,
    GamePosition,
    MultiPlayerGameSpec,
    SmithOracle,
    check_nash,
    remoteness,
)

_DEFAULT_BUDGET = 5_000_000


def _budget() -> int:
    raw = os.environ.get("GM_BUDGET")
    return int(raw) if raw else _DEFAULT_BUDGET


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.format == "json":
        print(json.dumps(payload))
    else:
        print(text)


def cmd_step(args: argparse.Namespace) -> int:
    result, record = step(args.vector, RuleParams(args.ell))
    _emit(args, str(result), {
        "vector": list(result.entries),
        "kept_index": record.kept_index,
        "fallback": record.fallback,
    })
    return 0


def cmd_simulate(args: argparse.Namespace) -> int:
    result = simulate(args.vector, RuleParams(args.ell), args.steps)
    _emit(args, str(result), {"vector": list(result.entries)})
    return 0


def cmd_forward(args: argparse.Namespace) -> int:
    result = fast_forward(args.vector, RuleParams(args.ell), args.steps)
    _emit(args, str(result), {"vector": list(result.entries)})
    return 0


def cmd_settle(args: argparse.Namespace) -> int:
    result = settle(args.vector, RuleParams(args.ell))
    wide = result.last_wide_index
    text = f"N={'-' if wide is None else wide} first={result.first_absorbed}"
    payload = {
        "steps": result.prefix_len or 0,
        "N": wide,
        "first": list(result.first_absorbed.entries),
    }
    if args.trace:
        payload["trace"] = [list(t) for t in result.trace]
        text += " trace=" + json.dumps(payload["trace"])
    _emit(args, text, payload)
    return 0


def cmd_finish(args: argparse.Namespace) -> int:
    count = moves_to_finish(args.vector, RuleParams(args.ell), FinishSpec(args.entries_done, args.level))
    _emit(args, str(count), {"moves": count})
    return 0


def cmd_word(args: argparse.Namespace) -> int:
    summary = period_word(args.vector, RuleParams(args.ell), args.column)
    _emit(args, summary.run_length, {
        "period_length": summary.period_length,
        "word": summary.word,
        "run_length": summary.run_length,
        "s_count": summary.s_count,
        "r_count": summary.r_count,
        "drop_per_period": summary.drop_per_period,
    })
    return 0


def cmd_remoteness(args: argparse.Namespace) -> int:
    pos = GamePosition.of(args.vector.entries)
    result = remoteness(pos)
    text = f"R={result.remoteness} outcome={result.outcome}"
    if result.best_move is not None:
        text += f" keep={result.best_move}"
    _emit(args, text, {
        "piles": list(pos.piles),
        "remoteness": result.remoteness,
        "outcome": result.outcome,
        "best_move": result.best_move,
    })
    return 0


def _grid(n: int, maximum: int):
    return combinations_with_replacement(range(maximum + 1), n)


def cmd_sweep(args: argparse.Namespace) -> int:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"pile_{i}" for i in range(1, args.piles + 1)] + ["remoteness", "outcome", "best_move"])
    for piles in _grid(args.piles, args.maximum):
        result = remoteness(GamePosition(piles))
        writer.writerow(list(piles) + [
            result.remoteness,
            result.outcome,
            "" if result.best_move is None else result.best_move,
        ])
    out = buf.getvalue()
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def cmd_oracle_check(args: argparse.Namespace) -> int:
    oracle = SmithOracle(max_states=_budget())
    mismatches = []
    checked = 0
    for piles in _grid(args.piles, args.maximum):
        pos = GamePosition(piles)
        fast = remoteness(pos).remoteness
        slow = oracle.remoteness(pos)
        checked += 1
        if fast != slow:
            mismatches.append({"piles": list(piles), "fast": fast, "oracle": slow})
    text = f"checked={checked} mismatches={len(mismatches)}"
    for bad in mismatches[:20]:
        text += f"\n  {bad['piles']}: fast={bad['fast']} oracle={bad['oracle']}"
    _emit(args, text, {"checked": checked, "mismatches": mismatches})
    return 0 if not mismatches else 1


def cmd_nash_check(args: argparse.Namespace) -> int:
    budget = _budget()
    reports = []
    deviations = 0
    for piles in _grid(args.piles, args.maximum):
        pos = GamePosition(piles)
        spec = MultiPlayerGameSpec(players=args.players, initial=pos, payoff_constant=args.constant)
        report = check_nash(spec, max_states=budget)
        reports.append(report)
        deviations += len(report.deviations)
    lines = [
        f"players={args.players} grid=[0..{args.maximum}]^{args.piles} "
        f"positions={len(reports)} profitable_deviations={deviations}"
    ]
    for report in reports:
        for dev in report.deviations:
            lines.append(
                f"  at {report.initial}: player {dev.player} improves "
                f"{dev.rule_payoff} -> {dev.best_payoff} "
                f"(wins={dev.best_wins}, length={dev.best_length})"
            )
    payload = {
        "players": args.players,
        "maximum": args.maximum,
        "piles": args.piles,
        "positions": len(reports),
        "profitable_deviations": deviations,
        "counterexamples": [
            {
                "initial": list(report.initial.piles),
                "player": dev.player,
                "rule_payoff": str(dev.rule_payoff),
                "best_payoff": str(dev.best_payoff),
            }
            for report in reports
            for dev in report.deviations
        ],
    }
    _emit(args, "\n".join(lines), payload)
    return 0


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=args.host, port=args.port)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="slownim",
        description="Pivot-rule vector dynamics and the exact slow-nim remoteness solver.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def vector_cmd(name: str, help_text: str, handler, ell: bool = True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-x", "--vector", type=PileVector.parse, required=True,
                       help="comma-separated entries, any order")
        if ell:
            p.add_argument("-l", "--ell", type=int, default=2, help="modulus (default 2)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(handler=handler)
        return p

    vector_cmd("step", "apply one move", cmd_step)

    p = vector_cmd("simulate", "apply j moves naively", cmd_simulate)
    p.add_argument("-j", "--steps", type=int, required=True)

    p = vector_cmd("forward", "apply j moves via the period identity (small spread only)", cmd_forward)
    p.add_argument("-j", "--steps", type=int, required=True)

    p = vector_cmd("settle", "run to the first small-spread vector", cmd_settle)
    p.add_argument("--trace", action="store_true", help="include the phase trace")

    p = vector_cmd("finish", "count moves until d entries reach the finish level", cmd_finish)
    p.add_argument("-d", "--entries-done", type=int, required=True)
    p.add_argument("-c", "--level", type=int, default=0)

    p = vector_cmd("word", "one column's kept/reduced word over a full period", cmd_word)
    p.add_argument("--column", type=int, default=1)

    vector_cmd("remoteness", "exact remoteness, outcome, and engine keep", cmd_remoteness, ell=False)

    def grid_cmd(name: str, help_text: str, handler):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("-n", "--piles", type=int, required=True)
        p.add_argument("--max", dest="maximum", type=int, required=True)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(handler=handler)
        return p

    p = grid_cmd("sweep", "remoteness table over a pile grid, as CSV", cmd_sweep)
    p.add_argument("--out", help="write CSV here instead of stdout")

    grid_cmd("oracle-check", "compare the fast solver against the recursive oracle", cmd_oracle_check)

    p = grid_cmd("nash-check", "audit the rule profile for profitable deviations", cmd_nash_check)
    p.add_argument("--players", type=int, default=2)
    p.add_argument("-C", "--constant", type=int, default=None,
                   help="payoff constant (default 1 + sum of piles)")

    p = sub.add_parser("serve", help="run the HTTP play service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    p.set_defaults(handler=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (DomainError, BudgetExceededError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
