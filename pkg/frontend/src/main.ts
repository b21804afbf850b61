import { ApiError, Client } from "./api";
import { analysisLine, analysisParityHolds, legalKeeps, parsePiles, statusLine } from "./game";
import type { SessionView } from "./types";

const BASE_URL_KEY = "slownim-base-url";
const DEFAULT_BASE_URL = "http://localhost:8000";

class App {
  private client: Client;
  private view: SessionView | null = null;
  private busy = false;

  private form = document.getElementById("new-game-form") as HTMLFormElement;
  private pilesInput = document.getElementById("piles-input") as HTMLInputElement;
  private firstSelect = document.getElementById("first-select") as HTMLSelectElement;
  private baseUrlInput = document.getElementById("base-url-input") as HTMLInputElement;
  private formError = document.getElementById("form-error") as HTMLElement;
  private board = document.getElementById("board") as HTMLElement;
  private statusEl = document.getElementById("status-line") as HTMLElement;
  private analysisEl = document.getElementById("analysis-line") as HTMLElement;
  private historyEl = document.getElementById("history-list") as HTMLElement;
  private gamePanel = document.getElementById("game-panel") as HTMLElement;

  constructor() {
    const saved = localStorage.getItem(BASE_URL_KEY) ?? DEFAULT_BASE_URL;
    this.baseUrlInput.value = saved;
    this.client = new Client(saved);
    this.form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.newGame();
    });
  }

  private reconfigureClient(): void {
    const url = this.baseUrlInput.value.trim().replace(/\/+$/, "") || DEFAULT_BASE_URL;
    localStorage.setItem(BASE_URL_KEY, url);
    this.client = new Client(url);
  }

  private async newGame(): Promise<void> {
    this.reconfigureClient();
    const piles = parsePiles(this.pilesInput.value);
    if (piles === null) {
      this.formError.textContent = "Enter at least two non-negative pile sizes, e.g. 1,2,3";
      return;
    }
    this.formError.textContent = "";
    await this.call(() => this.client.createSession(piles, this.firstSelect.value === "human"));
  }

  private async submitKeep(index: number): Promise<void> {
    const view = this.view;
    if (!view || this.busy) return;
    try {
      await this.call(() => this.client.move(view.id, index));
    } catch (error) {
      // A conflict means our picture of the session is stale: refresh it.
      if (error instanceof ApiError && error.status === 409) {
        await this.call(() => this.client.getSession(view.id));
      }
    }
  }

  private async call(action: () => Promise<SessionView>): Promise<void> {
    this.busy = true;
    this.render();
    try {
      this.view = await action();
      this.formError.textContent = "";
    } catch (error) {
      if (error instanceof ApiError) {
        this.formError.textContent = error.message;
      } else {
        this.formError.textContent = "Service unreachable; check the base URL.";
      }
      throw error;
    } finally {
      this.busy = false;
      this.render();
    }
  }

  private render(): void {
    const view = this.view;
    if (!view) {
      this.gamePanel.hidden = true;
      return;
    }
    this.gamePanel.hidden = false;

    this.statusEl.textContent = this.busy ? "Waiting for the engine…" : statusLine(view);
    this.statusEl.className = `status status-${view.status}`;

    if (!analysisParityHolds(view)) {
      // Should be impossible; surface loudly rather than render nonsense.
      this.analysisEl.textContent = "Inconsistent analysis from the service!";
    } else {
      this.analysisEl.textContent = analysisLine(view);
    }

    const keepsEnabled = !this.busy && view.status === "active" && view.human_to_move;
    const legal = new Set(legalKeeps(view.piles));
    this.board.replaceChildren(
      ...view.piles.map((count, i) => this.pileColumn(count, i + 1, keepsEnabled && legal.has(i + 1))),
    );

    this.historyEl.replaceChildren(
      ...view.history.map((entry, i) => {
        const item = document.createElement("li");
        item.textContent = `${i + 1}. ${entry.by} kept pile ${entry.keep_index} → ${entry.piles.join(",")}`;
        return item;
      }),
    );
  }

  private pileColumn(count: number, index: number, keepEnabled: boolean): HTMLElement {
    const column = document.createElement("div");
    column.className = "pile";

    const stack = document.createElement("div");
    stack.className = "stack";
    for (let s = 0; s < count; s++) {
      const stone = document.createElement("div");
      stone.className = "stone";
      stack.appendChild(stone);
    }
    if (count === 0) {
      const empty = document.createElement("div");
      empty.className = "empty-mark";
      empty.textContent = "∅";
      stack.appendChild(empty);
    }

    const label = document.createElement("div");
    label.className = "pile-label";
    label.textContent = `pile ${index}: ${count}`;

    const button = document.createElement("button");
    button.type = "button";
    button.textContent = "keep";
    button.disabled = !keepEnabled;
    button.title = keepEnabled
      ? `Keep pile ${index}, remove one stone from every other pile`
      : "Not available";
    button.addEventListener("click", () => void this.submitKeep(index));

    column.append(stack, label, button);
    return column;
  }
}

new App();
