/** Client-side game state: one active session plus the round history.
 *
 * The server is authoritative for every outcome; this module only mirrors
 * the visible session state, keeps the draft offer the user is composing,
 * and computes the responsive score preview (dot product of the draft with
 * the player's own utility).
 */

import type {
  Bits,
  CreateSessionResponse,
  OfferResponse,
  SessionMove,
  TerminalResult,
} from './types';
import { N_CLAUSES, OFFER_LIMIT } from './types';

export type Screen = 'lobby' | 'table' | 'result';

export interface RoundRecord {
  opponentTag: string; // 'blind' when the server hides it
  result: TerminalResult;
}

export class GameState {
  screen: Screen = 'lobby';
  sessionId = '';
  opponentTag = 'blind';
  utility: number[] = [];
  draft: Bits = Array(N_CLAUSES).fill(0);
  moves: SessionMove[] = [];
  offersUsed = 0;
  lastReceived: Bits | null = null;
  result: TerminalResult | null = null;
  rounds: RoundRecord[] = [];
  errorMessage = '';

  /** Enters the table screen from a successful session creation. */
  startSession(resp: CreateSessionResponse): void {
    this.screen = 'table';
    this.sessionId = resp.session_id;
    this.opponentTag = resp.opponent_tag ?? 'blind';
    this.utility = resp.your_utility.slice();
    this.draft = Array(N_CLAUSES).fill(0);
    this.moves = [];
    this.offersUsed = 0;
    this.lastReceived = null;
    this.result = null;
    this.errorMessage = '';
    if (resp.agent_offer) {
      this.recordAgentOffer(resp.agent_offer);
      // starting from what is on the table is the natural draft
      this.draft = resp.agent_offer.slice();
    }
  }

  toggleClause(index: number): void {
    if (index < 0 || index >= N_CLAUSES) {
      throw new RangeError(`clause index out of range: ${index}`);
    }
    this.draft[index] = this.draft[index] === 1 ? 0 : 1;
  }

  /** Responsive preview; the server still decides the real scores. */
  scorePreview(bits: Bits = this.draft): number {
    return bits.reduce((acc, b, i) => acc + b * this.utility[i], 0);
  }

  get offersRemaining(): number {
    return OFFER_LIMIT - this.offersUsed;
  }

  /** Accept is only meaningful once an offer has been received. */
  get canAccept(): boolean {
    return this.screen === 'table' && this.lastReceived !== null;
  }

  /** The bits the Accept button submits: the last received offer verbatim. */
  acceptBits(): Bits {
    if (this.lastReceived === null) {
      throw new Error('nothing to accept yet');
    }
    return this.lastReceived.slice();
  }

  private recordAgentOffer(bits: Bits): void {
    this.offersUsed += 1;
    this.moves.push({ who: 'agent', turn: this.offersUsed, bits: bits.slice() });
    this.lastReceived = bits.slice();
  }

  /** Folds the server's reply to a submitted offer into the state. */
  applyOfferResponse(submitted: Bits, resp: OfferResponse): void {
    this.errorMessage = '';
    this.offersUsed += 1;
    this.moves.push({ who: 'you', turn: this.offersUsed, bits: submitted.slice() });
    if (resp.agent_offer) {
      this.recordAgentOffer(resp.agent_offer);
    }
    this.offersUsed = resp.offers_used; // server count is authoritative
    if (resp.result) {
      this.result = resp.result;
      this.rounds.push({ opponentTag: this.opponentTag, result: resp.result });
      this.screen = 'result';
    }
  }

  setError(message: string): void {
    this.errorMessage = message;
  }

  /** Back to the lobby for a rematch; the round history persists. */
  backToLobby(): void {
    this.screen = 'lobby';
    this.sessionId = '';
    this.result = null;
    this.errorMessage = '';
  }
}

export function isValidOffer(bits: Bits): boolean {
  return bits.length === N_CLAUSES && bits.every((b) => b === 0 || b === 1);
}
