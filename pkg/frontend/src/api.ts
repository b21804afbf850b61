import type { HintView, SessionView } from "./types";

export class ApiError extends Error {
  constructor(public readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

async function parseDetail(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { detail?: unknown };
    if (typeof body.detail === "string") return body.detail;
    return JSON.stringify(body.detail ?? body);
  } catch {
    return response.statusText || `HTTP ${response.status}`;
  }
}

/** Thin client for the play service; one instance per base URL. */
export class Client {
  constructor(private readonly baseUrl: string) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`, {
      headers: { "Content-Type": "application/json" },
      ...init,
    });
    if (!response.ok) {
      throw new ApiError(response.status, await parseDetail(response));
    }
    return (await response.json()) as T;
  }

  createSession(piles: number[], humanFirst: boolean): Promise<SessionView> {
    return this.request<SessionView>("/sessions", {
      method: "POST",
      body: JSON.stringify({ piles, human_first: humanFirst }),
    });
  }

  getSession(id: string): Promise<SessionView> {
    return this.request<SessionView>(`/sessions/${id}`);
  }

  move(id: string, keepIndex: number): Promise<SessionView> {
    return this.request<SessionView>(`/sessions/${id}/move`, {
      method: "POST",
      body: JSON.stringify({ keep_index: keepIndex }),
    });
  }

  hint(id: string): Promise<HintView> {
    return this.request<HintView>(`/sessions/${id}/hint`);
  }

  async healthy(): Promise<boolean> {
    try {
      await this.request<{ status: string }>("/healthz");
      return true;
    } catch {
      return false;
    }
  }
}
