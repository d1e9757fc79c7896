import { describe, expect, it } from "vitest";

import {
  Mode,
  ViewState,
  deselectAuthor,
  deselectCommunity,
  initialState,
  isConsistent,
  selectAuthor,
  selectCommunity,
  submitQuery,
  toOverview,
  zoomOut,
  zoomToAuthors,
} from "../src/state.js";

const QUERY = { topics: ["data mining"], yearFrom: 2010, yearTo: 2015, k: 10 };

function community(): ViewState {
  return submitQuery(initialState, QUERY);
}

describe("mode graph", () => {
  it("starts in overview", () => {
    expect(initialState.mode).toBe("overview");
    expect(isConsistent(initialState)).toBe(true);
  });

  it("reaches all five modes", () => {
    const seen = new Set<Mode>([initialState.mode]);
    let state = community();
    seen.add(state.mode);
    state = selectCommunity(state, 0);
    seen.add(state.mode);
    state = zoomToAuthors(state);
    seen.add(state.mode);
    state = selectAuthor(state, "u4");
    seen.add(state.mode);
    expect([...seen].sort()).toEqual([
      "author",
      "community",
      "focused-author",
      "focused-community",
      "overview",
    ]);
  });

  it("submit moves overview to community", () => {
    const state = community();
    expect(state.mode).toBe("community");
    expect(state.query).toEqual(QUERY);
    expect(isConsistent(state)).toBe(true);
  });

  it("every transition is reversible", () => {
    const base = community();

    const focused = selectCommunity(base, 2);
    expect(focused.mode).toBe("focused-community");
    expect(deselectCommunity(focused).mode).toBe("community");

    const zoomedFromCommunity = zoomToAuthors(base);
    expect(zoomedFromCommunity.mode).toBe("author");
    expect(zoomOut(zoomedFromCommunity).mode).toBe("community");

    const zoomedFromFocused = zoomToAuthors(focused);
    const restored = zoomOut(zoomedFromFocused);
    expect(restored.mode).toBe("focused-community");
    expect(restored.selectedCommunity).toBe(2);

    const focusedAuthor = selectAuthor(zoomedFromCommunity, "u1");
    expect(focusedAuthor.mode).toBe("focused-author");
    expect(deselectAuthor(focusedAuthor).mode).toBe("author");

    expect(toOverview(focusedAuthor).mode).toBe("overview");
  });

  it("focused modes require a selection", () => {
    const focused = selectCommunity(community(), 1);
    expect(focused.selectedCommunity).toBe(1);
    expect(isConsistent(focused)).toBe(true);
    expect(
      isConsistent({ ...focused, selectedCommunity: null }),
    ).toBe(false);
    const author = selectAuthor(zoomToAuthors(community()), "u9");
    expect(isConsistent({ ...author, selectedAuthor: null })).toBe(false);
  });

  it("rejects illegal transitions", () => {
    expect(() => selectCommunity(initialState, 0)).toThrow(/illegal/);
    expect(() => zoomToAuthors(initialState)).toThrow(/illegal/);
    expect(() => selectAuthor(community(), "u1")).toThrow(/illegal/);
    expect(() => deselectCommunity(community())).toThrow(/illegal/);
    expect(() => zoomOut(community())).toThrow(/illegal/);
  });
});
