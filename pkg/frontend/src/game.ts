// Pure helpers shared by the view and the tests.  The only rule knowledge
// duplicated from the service is move legality, needed to disable illegal
// keep controls before submission.

import type { SessionView } from "./types";

/** 1-based indices of piles that may legally be kept: every other pile
 * must still have a stone to give. */
export function legalKeeps(piles: number[]): number[] {
  const keeps: number[] = [];
  for (let i = 0; i < piles.length; i++) {
    if (piles.every((p, j) => j === i || p >= 1)) keeps.push(i + 1);
  }
  return keeps;
}

/** Even remoteness must be reported as P, odd as N. */
export function analysisParityHolds(view: Pick<SessionView, "remoteness" | "outcome">): boolean {
  return (view.remoteness % 2 === 0) === (view.outcome === "P");
}

/** Parse the new-game piles field: at least two non-negative integers. */
export function parsePiles(text: string): number[] | null {
  const parts = text.split(",").map((part) => part.trim()).filter((part) => part.length > 0);
  if (parts.length < 2) return null;
  const piles: number[] = [];
  for (const part of parts) {
    if (!/^\d+$/.test(part)) return null;
    piles.push(Number(part));
  }
  return piles;
}

export function statusLine(view: SessionView): string {
  switch (view.status) {
    case "human_won":
      return "You won: the engine has no move.";
    case "human_lost":
      return "You lost: no move available.";
    case "active":
      return view.human_to_move ? "Your turn: pick the pile to keep." : "Engine is thinking…";
  }
}

export function analysisLine(view: SessionView): string {
  const side = view.outcome === "N" ? "the player to move wins" : "the player to move loses";
  let line = `${view.outcome}-position, R=${view.remoteness} (${side} with perfect play)`;
  if (view.status === "active" && view.hint !== null) {
    line += `; hint: keep pile ${view.hint}`;
  }
  return line;
}
