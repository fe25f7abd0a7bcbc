/** Thin typed client for the game service; all mutations go through here. */

import type {
  Bits,
  CreateSessionResponse,
  OfferResponse,
  SessionState,
  StatsResponse,
} from './types';

export class ApiRequestError extends Error {
  constructor(
    public readonly code: string,
    public readonly status: number,
  ) {
    super(`${code} (HTTP ${status})`);
  }
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string = '',
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await this.fetchFn(`${this.baseUrl}/api${path}`, init);
    const body = await res.json();
    if (!res.ok) {
      throw new ApiRequestError(body?.error ?? 'unknown_error', res.status);
    }
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(payload),
    });
  }

  createSession(opponentTag: string, seed?: number): Promise<CreateSessionResponse> {
    return this.post<CreateSessionResponse>('/sessions', {
      opponent_tag: opponentTag,
      ...(seed !== undefined ? { seed } : {}),
    });
  }

  getSession(sessionId: string): Promise<SessionState> {
    return this.request<SessionState>(`/sessions/${sessionId}`);
  }

  submitOffer(sessionId: string, bits: Bits): Promise<OfferResponse> {
    return this.post<OfferResponse>(`/sessions/${sessionId}/offers`, { bits });
  }

  getStats(): Promise<StatsResponse> {
    return this.request<StatsResponse>('/stats');
  }
}
