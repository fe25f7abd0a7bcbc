import { describe, expect, it } from 'vitest';

import {
  escapeHtml,
  renderApp,
  renderLobby,
  renderResult,
  renderStatsTable,
  renderTable,
  renderUtilityCard,
} from '../src/render';
import { GameState } from '../src/state';
import type { StatsResponse, TerminalResult } from '../src/types';

const UTILITY = [9, -5, 2, -1, -6, 1];

function tableState(): GameState {
  const s = new GameState();
  s.startSession({
    session_id: 's1',
    your_utility: UTILITY.slice(),
    you_start: false,
    agent_offer: [0, 1, 0, 0, 0, 0],
  });
  return s;
}

function resultState(optimal = true): GameState {
  const s = tableState();
  const result: TerminalResult = {
    status: 'agreed',
    deal: [0, 1, 0, 0, 0, 0],
    your_utility: UTILITY.slice(),
    agent_utility: [-5, 9, 2, 1, -6, -1],
    raw_scores: { human: -5, agent: 9 },
    normalized_scores: { human: -5 / 12, agent: 9 / 12 },
    optimal,
    winner: 'agent',
    best_joint_deal: [1, 1, 1, 0, 0, 0],
  };
  s.applyOfferResponse(s.acceptBits(), {
    status: 'agreed',
    offers_used: 2,
    agent_offer: null,
    result,
  });
  return s;
}

describe('escapeHtml', () => {
  it('neutralizes markup', () => {
    expect(escapeHtml('<b>&"x"</b>')).toBe('&lt;b&gt;&amp;&quot;x&quot;&lt;/b&gt;');
  });
});

describe('renderUtilityCard', () => {
  it('color-codes gains and losses with signed values', () => {
    const html = renderUtilityCard(UTILITY);
    expect(html).toContain('class="clause gain" data-clause="0"');
    expect(html).toContain('C1: +9');
    expect(html).toContain('class="clause loss" data-clause="1"');
    expect(html).toContain('C2: -5');
  });
});

describe('renderLobby', () => {
  it('offers all five opponents as start buttons', () => {
    const html = renderLobby(new GameState(), {});
    for (const tag of ['pp', 'ss', 'ps', 'sp', 'meta']) {
      expect(html).toContain(`data-action="start" data-tag="${tag}"`);
    }
    expect(html).toContain('No finished sessions yet.');
  });

  it('lists finished rounds', () => {
    const s = resultState();
    s.backToLobby();
    const html = renderLobby(s, {});
    expect(html).toContain('Round 1 vs Hidden opponent');
    expect(html).toContain('agreed, you -0.417 vs agent 0.750');
  });
});

describe('renderStatsTable', () => {
  it('renders one row per opponent with formatted rates', () => {
    const stats: StatsResponse = {
      pp: {
        sessions: 4,
        dialog_length: 5.5,
        agreement_rate: 0.75,
        optimality_rate: 1 / 3,
        agent_score: 0.42,
        human_score: 0.31,
        agent_won_rate: 0.5,
        human_won_rate: 0.25,
        tied_rate: 0.25,
      },
      ss: {
        sessions: 0,
        dialog_length: null,
        agreement_rate: null,
        optimality_rate: null,
        agent_score: null,
        human_score: null,
        agent_won_rate: null,
        human_won_rate: null,
        tied_rate: null,
      },
    };
    const html = renderStatsTable(stats);
    expect(html).toContain('<td>pp</td><td>4</td><td>5.5</td><td>75.0%</td>');
    expect(html).toContain('<td>33.3%</td><td>0.42</td><td>0.31</td>');
    expect(html).toContain('<td>ss</td><td>0</td><td>–</td><td>–</td>');
  });
});

describe('renderTable', () => {
  it('shows the counter, ledger, draft toggles and preview', () => {
    const s = tableState();
    s.toggleClause(0); // draft becomes [1,1,0,0,0,0] -> 9 - 5 = 4
    const html = renderTable(s);
    expect(html).toContain('Offers used: 1 / 30 (29 left)');
    expect(html).toContain('Worth to you: 4');
    expect(html).toContain('data-action="toggle" data-index="0"');
    expect(html).toContain('move-agent');
    expect(html).toContain('<button data-action="accept">');
  });

  it('disables accept before any received offer', () => {
    const s = new GameState();
    s.startSession({ session_id: 's', your_utility: UTILITY, you_start: true });
    const html = renderTable(s);
    expect(html).toContain('<button data-action="accept" disabled>');
    expect(html).toContain('No offers yet');
  });

  it('escapes error messages', () => {
    const s = tableState();
    s.setError('<script>');
    expect(renderTable(s)).toContain('&lt;script&gt;');
  });
});

describe('renderResult', () => {
  it('reveals both utilities, the deal, scores and the optimality badge', () => {
    const html = renderResult(resultState(true));
    expect(html).toContain('Pareto-optimal deal');
    expect(html).toContain('Agent utilities');
    expect(html).toContain('You: -0.417 — Agent: 0.750 (raw -5 vs 9)');
    expect(html).toContain('Best joint deal');
    expect(html).toContain('data-action="lobby"');
  });

  it('marks suboptimal agreements', () => {
    const html = renderResult(resultState(false));
    expect(html).toContain('Money left on the table');
    expect(html).not.toContain('Pareto-optimal deal');
  });
});

describe('renderApp', () => {
  it('dispatches on the screen', () => {
    const lobby = new GameState();
    expect(renderApp(lobby, {})).toContain('class="lobby"');
    expect(renderApp(tableState(), {})).toContain('class="table"');
    expect(renderApp(resultState(), {})).toContain('class="result"');
  });
});
