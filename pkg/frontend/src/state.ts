/** View state machine for the five exploration modes.
 *
 * Mode graph:
 *
 *   overview -> community -> focused-community
 *                  |    \        |
 *                  v     v       v
 *               author <-+    author (zoom keeps its origin for the way back)
 *                  |
 *                  v
 *           focused-author
 *
 * Transitions are pure: each returns a fresh state or throws on an illegal
 * move, so the whole graph is unit-testable without a DOM.
 */

import { QuerySpec } from "./types.js";

export type Mode =
  | "overview"
  | "community"
  | "focused-community"
  | "author"
  | "focused-author";

export interface ViewState {
  mode: Mode;
  query: QuerySpec | null;
  selectedCommunity: number | null;
  selectedAuthor: string | null;
  /** where the author-mode zoom started, for reversibility */
  zoomOrigin: "community" | "focused-community" | null;
}

export const initialState: ViewState = {
  mode: "overview",
  query: null,
  selectedCommunity: null,
  selectedAuthor: null,
  zoomOrigin: null,
};

function fail(from: Mode, action: string): never {
  throw new Error(`illegal transition: ${action} from ${from}`);
}

export function submitQuery(state: ViewState, query: QuerySpec): ViewState {
  return {
    mode: "community",
    query,
    selectedCommunity: null,
    selectedAuthor: null,
    zoomOrigin: null,
  };
}

export function toOverview(state: ViewState): ViewState {
  return { ...initialState, query: state.query };
}

export function selectCommunity(state: ViewState, id: number): ViewState {
  if (state.mode !== "community" && state.mode !== "focused-community") {
    fail(state.mode, "selectCommunity");
  }
  return { ...state, mode: "focused-community", selectedCommunity: id };
}

export function deselectCommunity(state: ViewState): ViewState {
  if (state.mode !== "focused-community") fail(state.mode, "deselectCommunity");
  return { ...state, mode: "community", selectedCommunity: null };
}

export function zoomToAuthors(state: ViewState): ViewState {
  if (state.mode !== "community" && state.mode !== "focused-community") {
    fail(state.mode, "zoomToAuthors");
  }
  return { ...state, mode: "author", zoomOrigin: state.mode };
}

export function zoomOut(state: ViewState): ViewState {
  if (state.mode !== "author") fail(state.mode, "zoomOut");
  const origin = state.zoomOrigin ?? "community";
  return {
    ...state,
    mode: origin,
    zoomOrigin: null,
    selectedCommunity: origin === "focused-community" ? state.selectedCommunity : null,
  };
}

export function selectAuthor(state: ViewState, id: string): ViewState {
  if (state.mode !== "author") fail(state.mode, "selectAuthor");
  return { ...state, mode: "focused-author", selectedAuthor: id };
}

export function deselectAuthor(state: ViewState): ViewState {
  if (state.mode !== "focused-author") fail(state.mode, "deselectAuthor");
  return { ...state, mode: "author", selectedAuthor: null };
}

/** Invariant check: focused modes require a selection. */
export function isConsistent(state: ViewState): boolean {
  if (state.mode === "focused-community" && state.selectedCommunity === null) {
    return false;
  }
  if (state.mode === "focused-author" && state.selectedAuthor === null) {
    return false;
  }
  if (state.mode !== "overview" && state.query === null) return false;
  return true;
}
