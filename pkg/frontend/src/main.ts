/** DOM bootstrap: owns the root element, delegates clicks by data-action. */

import { ApiClient, ApiRequestError } from './api';
import { GameState, isValidOffer } from './state';
import { renderApp } from './render';
import type { StatsResponse } from './types';

export function mountApp(root: HTMLElement, api: ApiClient): void {
  const state = new GameState();
  let stats: StatsResponse = {};

  const draw = () => {
    root.innerHTML = renderApp(state, stats);
  };

  const refreshStats = async () => {
    try {
      stats = await api.getStats();
    } catch {
      stats = {};
    }
  };

  const fail = (err: unknown) => {
    state.setError(err instanceof ApiRequestError ? err.message : 'request failed');
    draw();
  };

  const submit = async (bits: number[]) => {
    if (!isValidOffer(bits)) {
      state.setError('offer must be six 0/1 values');
      draw();
      return;
    }
    try {
      const resp = await api.submitOffer(state.sessionId, bits);
      state.applyOfferResponse(bits, resp);
      if (state.screen === 'result') await refreshStats();
      draw();
    } catch (err) {
      fail(err);
    }
  };

  root.addEventListener('click', (event) => {
    const target = (event.target as HTMLElement).closest('[data-action]');
    if (!(target instanceof HTMLElement)) return;
    const action = target.dataset.action;
    if (action === 'start') {
      const tag = target.dataset.tag ?? 'pp';
      api
        .createSession(tag)
        .then((resp) => {
          state.startSession(resp);
          draw();
        })
        .catch(fail);
    } else if (action === 'toggle') {
      state.toggleClause(Number(target.dataset.index));
      draw();
    } else if (action === 'send') {
      void submit(state.draft.slice());
    } else if (action === 'accept') {
      if (state.canAccept) void submit(state.acceptBits());
    } else if (action === 'lobby') {
      state.backToLobby();
      void refreshStats().then(draw);
    }
  });

  void refreshStats().then(draw);
}

const rootEl = typeof document !== 'undefined' ? document.getElementById('app') : null;
if (rootEl) {
  mountApp(rootEl, new ApiClient());
}
