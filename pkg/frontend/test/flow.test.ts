import { describe, expect, it } from "vitest";

import type { NextResponse, StimulusDescriptor } from "../src/api.js";
import {
  canSubmit,
  initialState,
  labelForKey,
  onContinue,
  onNext,
  onSubmitAck,
  onSubmitStart,
  progressText,
} from "../src/flow.js";

function stimulus(index: number, blockIndex: number, kind = "mnist"): StimulusDescriptor {
  const labels = kind === "silhouettes"
    ? ["airplane", "bear", "dog"]
    : ["0", "1", "2", "3", "4", "5", "6", "7", "8", "9"];
  return {
    done: false,
    stimulus_id: `abc.${String(index).padStart(4, "0")}`,
    image_url: `/stimuli/abc.${String(index).padStart(4, "0")}.png`,
    index,
    total: 360,
    allowed_labels: labels,
    block: {
      kind,
      index: blockIndex,
      position: index,
      size: 100,
      direction: "horizontal",
      interval: 4,
    },
  };
}

const done: NextResponse = { done: true, answered: 360, total: 360 };

describe("session flow", () => {
  it("starts classifying on the first stimulus", () => {
    const state = onNext(initialState("abc", 360), stimulus(0, 0));
    expect(state.phase).toBe("classifying");
    expect(state.stimulus?.index).toBe(0);
    expect(progressText(state)).toBe("1 / 360");
  });

  it("shows the interstitial when a new block starts", () => {
    let state = onNext(initialState("abc", 360), stimulus(99, 0));
    state = onSubmitAck(onSubmitStart(state));
    state = onNext(state, stimulus(100, 1, "mnist_hires"));
    expect(state.phase).toBe("between-blocks");
    state = onContinue(state);
    expect(state.phase).toBe("classifying");
    expect(state.stimulus?.block.kind).toBe("mnist_hires");
  });

  it("does not show the interstitial within a block", () => {
    let state = onNext(initialState("abc", 360), stimulus(5, 0));
    state = onSubmitAck(onSubmitStart(state));
    state = onNext(state, stimulus(6, 0));
    expect(state.phase).toBe("classifying");
  });

  it("resuming mid-block skips the interstitial", () => {
    // fresh page load at stimulus 150: lastBlockIndex is unknown
    const state = onNext(initialState("abc", 360), stimulus(150, 1, "mnist_hires"));
    expect(state.phase).toBe("classifying");
  });

  it("blocks submissions while one is pending", () => {
    let state = onNext(initialState("abc", 360), stimulus(0, 0));
    expect(canSubmit(state, "7")).toBe(true);
    state = onSubmitStart(state);
    expect(canSubmit(state, "7")).toBe(false);
    state = onSubmitAck(state);
    expect(state.submitting).toBe(false);
  });

  it("rejects labels outside the allowed set", () => {
    const state = onNext(initialState("abc", 360), stimulus(0, 0));
    expect(canSubmit(state, "dog")).toBe(false);
  });

  it("digit keys map to labels only on digit blocks", () => {
    const digits = onNext(initialState("abc", 360), stimulus(0, 0));
    expect(labelForKey(digits, "7")).toBe("7");
    expect(labelForKey(digits, "x")).toBeNull();

    const sil = onNext(initialState("abc", 360), stimulus(200, 2, "silhouettes"));
    expect(labelForKey(sil, "7")).toBeNull();
  });

  it("finishes on the done signal", () => {
    const state = onNext(initialState("abc", 360), done);
    expect(state.phase).toBe("done");
    expect(state.stimulus).toBeNull();
    expect(progressText(state)).toBe("360 / 360");
  });

  it("mirrors the server cursor after every next", () => {
    let state = initialState("abc", 360);
    for (const index of [0, 1, 2]) {
      state = onNext(state, stimulus(index, 0));
      expect(state.answered).toBe(index);
    }
  });
});
