// Session flow state machine.
//
// The server cursor is the single source of truth: every state change is
// driven by a fresh `next` descriptor, so a page refresh or a retried
// request always lands back on the same stimulus. The machine inserts a
// between-blocks interstitial whenever the incoming stimulus belongs to a
// later block than the previous one, and blocks double submissions while
// an acknowledgment is pending.

import type { NextResponse, StimulusDescriptor } from "./api.js";

export type Phase = "classifying" | "between-blocks" | "done";

export interface UiSessionState {
  sessionId: string;
  phase: Phase;
  stimulus: StimulusDescriptor | null;
  lastBlockIndex: number | null;
  answered: number;
  total: number;
  submitting: boolean;
}

export function initialState(sessionId: string, total: number): UiSessionState {
  return {
    sessionId,
    phase: "classifying",
    stimulus: null,
    lastBlockIndex: null,
    answered: 0,
    total,
    submitting: false,
  };
}

// Fold a `next` response into the state.
export function onNext(state: UiSessionState, next: NextResponse): UiSessionState {
  if (next.done) {
    return {
      ...state,
      phase: "done",
      stimulus: null,
      answered: next.answered,
      total: next.total,
      submitting: false,
    };
  }
  const entersNewBlock =
    state.lastBlockIndex !== null && next.block.index > state.lastBlockIndex;
  return {
    ...state,
    phase: entersNewBlock ? "between-blocks" : "classifying",
    stimulus: next,
    answered: next.index,
    total: next.total,
    submitting: false,
  };
}

// Dismiss the interstitial and start classifying the new block.
export function onContinue(state: UiSessionState): UiSessionState {
  if (state.phase !== "between-blocks") return state;
  return { ...state, phase: "classifying" };
}

export function canSubmit(state: UiSessionState, label: string): boolean {
  return (
    state.phase === "classifying" &&
    !state.submitting &&
    state.stimulus !== null &&
    state.stimulus.allowed_labels.includes(label)
  );
}

export function onSubmitStart(state: UiSessionState): UiSessionState {
  return { ...state, submitting: true };
}

export function onSubmitAck(state: UiSessionState): UiSessionState {
  return {
    ...state,
    submitting: false,
    lastBlockIndex: state.stimulus ? state.stimulus.block.index : state.lastBlockIndex,
  };
}

// A failed submission re-enables the buttons; the caller re-fetches `next`
// to resynchronize with the server cursor.
export function onSubmitError(state: UiSessionState): UiSessionState {
  return { ...state, submitting: false };
}

// Keyboard affordance: digit keys submit on digit blocks only.
export function labelForKey(state: UiSessionState, key: string): string | null {
  if (state.phase !== "classifying" || state.stimulus === null) return null;
  if (!/^[0-9]$/.test(key)) return null;
  return state.stimulus.allowed_labels.includes(key) ? key : null;
}

export function progressText(state: UiSessionState): string {
  if (state.phase === "done") return `${state.total} / ${state.total}`;
  return `${state.answered + 1} / ${state.total}`;
}
