// DOM rendering: one stimulus at a time, label buttons, progress, results.

import type { BlockResult, StimulusDescriptor } from "./api.js";
import type { UiSessionState } from "./flow.js";
import { progressText } from "./flow.js";

export interface UiHandlers {
  onLabel(label: string): void;
  onContinue(): void;
}

const BLOCK_TITLES: Record<string, string> = {
  mnist: "Digits (small)",
  mnist_hires: "Digits (large)",
  silhouettes: "Object silhouettes",
};

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function stimulusImage(descriptor: StimulusDescriptor, baseUrl: string): HTMLImageElement {
  const img = el("img", "stimulus");
  // small physical size for low-res digits, large for hires and silhouettes;
  // sizes approximate the protocol's on-screen dimensions
  img.classList.add(descriptor.block.kind === "mnist" ? "stimulus-small" : "stimulus-large");
  img.src = `${baseUrl}${descriptor.image_url}`;
  img.alt = "stimulus";
  img.draggable = false;
  return img;
}

function labelButtons(state: UiSessionState, handlers: UiHandlers): HTMLElement {
  const wrap = el("div", "labels");
  const stimulus = state.stimulus!;
  for (const label of stimulus.allowed_labels) {
    const button = el("button", "label-button", label);
    button.disabled = state.submitting;
    button.addEventListener("click", () => handlers.onLabel(label));
    wrap.appendChild(button);
  }
  return wrap;
}

export function renderClassifying(
  root: HTMLElement,
  state: UiSessionState,
  handlers: UiHandlers,
  baseUrl = "",
): void {
  const stimulus = state.stimulus!;
  root.replaceChildren();
  const header = el("div", "header");
  header.appendChild(el("span", "block-title", BLOCK_TITLES[stimulus.block.kind] ?? stimulus.block.kind));
  header.appendChild(el("span", "progress", progressText(state)));
  root.appendChild(header);

  const stage = el("div", "stage");
  stage.appendChild(stimulusImage(stimulus, baseUrl));
  root.appendChild(stage);

  root.appendChild(el("p", "prompt", "Which one is it?"));
  root.appendChild(labelButtons(state, handlers));
}

export function renderInterstitial(
  root: HTMLElement,
  state: UiSessionState,
  handlers: UiHandlers,
): void {
  const stimulus = state.stimulus!;
  root.replaceChildren();
  root.appendChild(el("h2", undefined, "Block complete"));
  root.appendChild(el(
    "p", "prompt",
    `Next: ${BLOCK_TITLES[stimulus.block.kind] ?? stimulus.block.kind} ` +
    `(${stimulus.block.size} images). Take a break if you need one.`,
  ));
  const button = el("button", "continue-button", "Continue");
  button.addEventListener("click", () => handlers.onContinue());
  root.appendChild(button);
}

export function renderResults(root: HTMLElement, blocks: BlockResult[]): void {
  root.replaceChildren();
  root.appendChild(el("h2", undefined, "Session complete"));
  const list = el("div", "results");
  for (const block of blocks) {
    const row = el("div", "result-row");
    row.appendChild(el("span", "result-name",
      `${BLOCK_TITLES[block.kind] ?? block.kind} (${block.direction}/${block.interval})`));
    row.appendChild(el("span", "result-score",
      `${block.correct} / ${block.total} (${(block.accuracy * 100).toFixed(1)}%)`));
    list.appendChild(row);
  }
  root.appendChild(list);
}

export function renderError(root: HTMLElement, message: string, onRetry: () => void): void {
  root.replaceChildren();
  root.appendChild(el("h2", undefined, "Connection problem"));
  root.appendChild(el("p", "prompt", message));
  const button = el("button", "continue-button", "Retry");
  button.addEventListener("click", onRetry);
  root.appendChild(button);
}
