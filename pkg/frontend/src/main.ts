// Entry point: session setup form, then the block flow until results.

import { ApiError, StudyClient } from "./api.js";
import type { BlockCondition } from "./api.js";
import {
  canSubmit,
  initialState,
  labelForKey,
  onContinue,
  onNext,
  onSubmitAck,
  onSubmitError,
  onSubmitStart,
  type UiSessionState,
} from "./flow.js";
import { renderClassifying, renderError, renderInterstitial, renderResults } from "./ui.js";

const client = new StudyClient("");
const root = document.getElementById("app")!;

let state: UiSessionState | null = null;

function render(): void {
  if (!state) return;
  const handlers = { onLabel: submitLabel, onContinue: continueBlock };
  if (state.phase === "between-blocks") {
    renderInterstitial(root, state, handlers);
  } else if (state.phase === "classifying" && state.stimulus) {
    renderClassifying(root, state, handlers);
  }
}

async function advance(): Promise<void> {
  if (!state) return;
  try {
    const next = await client.next(state.sessionId);
    state = onNext(state, next);
    if (state.phase === "done") {
      const results = await client.results(state.sessionId);
      renderResults(root, results.blocks ?? []);
      return;
    }
    render();
  } catch (error) {
    renderError(root, String(error), () => void advance());
  }
}

async function submitLabel(label: string): Promise<void> {
  if (!state || !canSubmit(state, label) || !state.stimulus) return;
  const stimulusId = state.stimulus.stimulus_id;
  state = onSubmitStart(state);
  render(); // disables the buttons until the server acknowledges
  try {
    await client.respond(state.sessionId, stimulusId, label);
    state = onSubmitAck(state);
    await advance();
  } catch (error) {
    state = onSubmitError(state);
    if (error instanceof ApiError && error.status === 409) {
      // out of sync (e.g. double submission raced): trust the server cursor
      await advance();
      return;
    }
    renderError(root, String(error), () => void advance());
  }
}

function continueBlock(): void {
  if (!state) return;
  state = onContinue(state);
  render();
}

function conditionFrom(form: FormData, kind: string): BlockCondition {
  return {
    direction: String(form.get(`${kind}-direction`) ?? "horizontal"),
    interval: Number(form.get(`${kind}-interval`) ?? 4),
  };
}

async function startSession(event: Event): Promise<void> {
  event.preventDefault();
  const form = new FormData(event.target as HTMLFormElement);
  const resume = String(form.get("resume") ?? "").trim();
  try {
    let sessionId: string;
    let total: number;
    if (resume) {
      sessionId = resume;
      total = 0; // corrected by the first `next`
    } else {
      const created = await client.createSession({
        conditions: {
          mnist: conditionFrom(form, "mnist"),
          mnist_hires: conditionFrom(form, "hires"),
          silhouettes: conditionFrom(form, "sil"),
        },
        seed: Number(form.get("seed") ?? 0),
        subject_tag: String(form.get("subject") ?? "") || null,
      });
      sessionId = created.session_id;
      total = created.total;
    }
    state = initialState(sessionId, total);
    await advance();
  } catch (error) {
    renderError(root, String(error), () => location.reload());
  }
}

document.addEventListener("keydown", (event) => {
  if (!state) return;
  const label = labelForKey(state, event.key);
  if (label !== null) void submitLabel(label);
});

document.getElementById("setup-form")?.addEventListener("submit", (e) => void startSession(e));
