/** Wire types for the clause-arena game service (see the server's JSON API). */

export type Bits = number[]; // six 0/1 entries

export const N_CLAUSES = 6;
export const OFFER_LIMIT = 30;

export const OPPONENT_TAGS = ['pp', 'ss', 'ps', 'sp', 'meta'] as const;
export type OpponentTag = (typeof OPPONENT_TAGS)[number];

export interface CreateSessionResponse {
  session_id: string;
  your_utility: number[];
  you_start: boolean;
  agent_offer?: Bits;
  opponent_tag?: string; // present only when the server is not blind
}

export interface TerminalResult {
  status: 'agreed' | 'disagreed';
  deal: Bits | null;
  your_utility: number[];
  agent_utility: number[];
  raw_scores: { human: number; agent: number } | null;
  normalized_scores: { human: number; agent: number };
  optimal: boolean;
  winner: 'human' | 'agent' | 'tie';
  best_joint_deal: Bits | null;
}

export interface OfferResponse {
  status: 'active' | 'agreed' | 'disagreed';
  offers_used: number;
  agent_offer: Bits | null;
  result?: TerminalResult;
}

export interface SessionMove {
  who: 'you' | 'agent';
  turn: number;
  bits: Bits;
}

export interface SessionState {
  session_id: string;
  status: 'active' | 'agreed' | 'disagreed' | 'abandoned';
  you_start: boolean;
  your_utility: number[];
  your_turn: boolean;
  offers_used: number;
  offers_limit: number;
  moves: SessionMove[];
  opponent_tag?: string;
  result?: TerminalResult;
}

export interface StatsRow {
  sessions: number;
  dialog_length: number | null;
  agreement_rate: number | null;
  optimality_rate: number | null;
  agent_score: number | null;
  human_score: number | null;
  agent_won_rate: number | null;
  human_won_rate: number | null;
  tied_rate: number | null;
}

export type StatsResponse = Record<string, StatsRow>;

export interface ApiError {
  error: string;
}
