// Wire types for the play service JSON schema (consumed verbatim).

export type Status = "active" | "human_won" | "human_lost";
export type Outcome = "P" | "N";

export interface HistoryEntry {
  by: "human" | "engine";
  keep_index: number;
  piles: number[];
}

export interface SessionView {
  id: string;
  piles: number[];
  status: Status;
  human_to_move: boolean;
  remoteness: number;
  outcome: Outcome;
  hint: number | null;
  history: HistoryEntry[];
}

export interface HintView {
  keep_index: number;
  remoteness: number;
}
