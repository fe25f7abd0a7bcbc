/** Pure HTML-string renderers.
 *
 * Every function here maps state to a string with no DOM access, so the
 * whole view layer is unit-testable under node. `main.ts` owns the DOM and
 * wires events to elements via `data-action` attributes.
 */

import type { Bits, StatsResponse, StatsRow, TerminalResult } from './types';
import { N_CLAUSES, OPPONENT_TAGS } from './types';
import type { GameState, RoundRecord } from './state';

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

const TAG_LABELS: Record<string, string> = {
  pp: 'Prosocial / prosocial',
  ss: 'Selfish / selfish',
  ps: 'Prosocial (mixed table)',
  sp: 'Selfish (mixed table)',
  meta: 'Adaptive (meta)',
  blind: 'Hidden opponent',
};

export function tagLabel(tag: string): string {
  return TAG_LABELS[tag] ?? tag;
}

function fmt(value: number | null, digits = 2): string {
  return value === null ? '–' : value.toFixed(digits);
}

function pct(value: number | null): string {
  return value === null ? '–' : `${(100 * value).toFixed(1)}%`;
}

// -- shared fragments ---------------------------------------------------------

/** A clause chip: green for clauses that pay you, red for ones that cost. */
function clauseChip(index: number, value: number): string {
  const cls = value > 0 ? 'gain' : 'loss';
  const sign = value > 0 ? `+${value}` : `${value}`;
  return `<span class="clause ${cls}" data-clause="${index}">C${index + 1}: ${sign}</span>`;
}

export function renderUtilityCard(utility: number[]): string {
  const chips = utility.map((v, i) => clauseChip(i, v)).join('');
  return `<div class="utility-card"><h3>Your utilities</h3>${chips}</div>`;
}

export function renderBits(bits: Bits): string {
  return bits.map((b) => `<span class="bit bit-${b}">${b}</span>`).join('');
}

// -- lobby --------------------------------------------------------------------

export function renderStatsTable(stats: StatsResponse): string {
  const tags = Object.keys(stats).sort();
  if (tags.length === 0) {
    return '<p class="empty">No finished sessions yet.</p>';
  }
  const rows = tags
    .map((tag) => {
      const r: StatsRow = stats[tag];
      return (
        `<tr><td>${escapeHtml(tag)}</td><td>${r.sessions}</td>` +
        `<td>${fmt(r.dialog_length, 1)}</td><td>${pct(r.agreement_rate)}</td>` +
        `<td>${pct(r.optimality_rate)}</td><td>${fmt(r.agent_score)}</td>` +
        `<td>${fmt(r.human_score)}</td><td>${pct(r.agent_won_rate)}</td>` +
        `<td>${pct(r.human_won_rate)}</td><td>${pct(r.tied_rate)}</td></tr>`
      );
    })
    .join('');
  return (
    '<table class="stats"><thead><tr>' +
    '<th>Opponent</th><th>Sessions</th><th>Dialog len</th><th>Agreement</th>' +
    '<th>Optimality</th><th>Agent score</th><th>Your score</th>' +
    '<th>Agent won</th><th>You won</th><th>Tied</th>' +
    `</tr></thead><tbody>${rows}</tbody></table>`
  );
}

function renderRoundHistory(rounds: RoundRecord[]): string {
  if (rounds.length === 0) return '';
  const items = rounds
    .map((r, i) => {
      const res = r.result;
      const outcome =
        res.status === 'agreed'
          ? `agreed, you ${res.normalized_scores.human.toFixed(3)} vs agent ` +
            `${res.normalized_scores.agent.toFixed(3)}${res.optimal ? ' (optimal)' : ''}`
          : 'no deal';
      return `<li>Round ${i + 1} vs ${escapeHtml(tagLabel(r.opponentTag))}: ${outcome}</li>`;
    })
    .join('');
  return `<div class="history"><h3>Your rounds</h3><ol>${items}</ol></div>`;
}

export function renderLobby(state: GameState, stats: StatsResponse): string {
  const buttons = OPPONENT_TAGS.map(
    (tag) =>
      `<button data-action="start" data-tag="${tag}">${escapeHtml(tagLabel(tag))}</button>`,
  ).join('');
  const error = state.errorMessage
    ? `<p class="error">${escapeHtml(state.errorMessage)}</p>`
    : '';
  return (
    '<section class="lobby"><h2>Pick an opponent</h2>' +
    `<div class="opponents">${buttons}</div>${error}` +
    renderRoundHistory(state.rounds) +
    `<h3>Table so far</h3>${renderStatsTable(stats)}</section>`
  );
}

// -- table --------------------------------------------------------------------

function renderLedger(state: GameState): string {
  if (state.moves.length === 0) {
    return '<p class="empty">No offers yet — you open.</p>';
  }
  const rows = state.moves
    .map(
      (m) =>
        `<tr class="move-${m.who}"><td>${m.turn}</td>` +
        `<td>${m.who === 'you' ? 'You' : 'Agent'}</td>` +
        `<td>${renderBits(m.bits)}</td></tr>`,
    )
    .join('');
  return (
    '<table class="ledger"><thead><tr><th>#</th><th>From</th><th>Offer</th>' +
    `</tr></thead><tbody>${rows}</tbody></table>`
  );
}

function renderDraft(state: GameState): string {
  const toggles = state.draft
    .map(
      (b, i) =>
        `<button class="toggle toggle-${b}" data-action="toggle" data-index="${i}">` +
        `C${i + 1}: ${b}</button>`,
    )
    .join('');
  const preview = state.scorePreview();
  const previewCls = preview >= 0 ? 'gain' : 'loss';
  return (
    `<div class="draft">${toggles}` +
    `<span class="preview ${previewCls}" data-testid="preview">` +
    `Worth to you: ${preview}</span></div>`
  );
}

export function renderTable(state: GameState): string {
  const acceptAttr = state.canAccept ? '' : ' disabled';
  const error = state.errorMessage
    ? `<p class="error">${escapeHtml(state.errorMessage)}</p>`
    : '';
  return (
    '<section class="table">' +
    `<p class="opponent">Opponent: ${escapeHtml(tagLabel(state.opponentTag))}</p>` +
    `<p class="counter" data-testid="counter">Offers used: ${state.offersUsed} / 30` +
    ` (${state.offersRemaining} left)</p>` +
    renderUtilityCard(state.utility) +
    `<h3>Offer ledger</h3>${renderLedger(state)}` +
    '<h3>Your next offer</h3>' +
    renderDraft(state) +
    '<div class="actions">' +
    '<button data-action="send">Send offer</button>' +
    `<button data-action="accept"${acceptAttr}>Accept their offer</button>` +
    `</div>${error}</section>`
  );
}

// -- result -------------------------------------------------------------------

function scoreLine(result: TerminalResult): string {
  const n = result.normalized_scores;
  const raw = result.raw_scores;
  const rawPart = raw ? ` (raw ${raw.human} vs ${raw.agent})` : '';
  return (
    `<p class="scores">You: ${n.human.toFixed(3)} — Agent: ${n.agent.toFixed(3)}` +
    `${rawPart}</p>`
  );
}

export function renderResult(state: GameState): string {
  const result = state.result;
  if (!result) return '<section class="result"><p>No result.</p></section>';
  const headline =
    result.status === 'agreed'
      ? result.winner === 'tie'
        ? 'Deal reached — even split'
        : result.winner === 'human'
          ? 'Deal reached — you came out ahead'
          : 'Deal reached — the agent came out ahead'
      : 'No deal — both sides pay the disagreement cost';
  const badge = result.optimal
    ? '<span class="badge optimal">Pareto-optimal deal</span>'
    : result.status === 'agreed'
      ? '<span class="badge suboptimal">Money left on the table</span>'
      : '';
  const dealRow = result.deal
    ? `<p class="deal">Final deal: ${renderBits(result.deal)}</p>`
    : '';
  const best = result.best_joint_deal
    ? `<div class="best-joint"><h3>Best joint deal</h3>${renderBits(result.best_joint_deal)}</div>`
    : '';
  const reveal =
    '<div class="reveal"><h3>Cards on the table</h3>' +
    renderUtilityCard(result.your_utility) +
    `<div class="utility-card agent"><h3>Agent utilities</h3>` +
    result.agent_utility.map((v, i) => clauseChip(i, v)).join('') +
    '</div></div>';
  return (
    `<section class="result"><h2>${headline}</h2>${badge}${dealRow}` +
    scoreLine(result) +
    `${reveal}${best}` +
    '<button data-action="lobby">Back to lobby</button></section>'
  );
}

// -- top level ----------------------------------------------------------------

export function renderApp(state: GameState, stats: StatsResponse): string {
  switch (state.screen) {
    case 'lobby':
      return renderLobby(state, stats);
    case 'table':
      return renderTable(state);
    case 'result':
      return renderResult(state);
  }
}

export { N_CLAUSES };
