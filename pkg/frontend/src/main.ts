/** Controller: wires inputs, fetch sequencing, and mode rendering together.
 *
 * Network responses are tagged with a request sequence number; anything that
 * resolves after a newer request started is discarded, so a slow old query
 * can never paint over a fresh one.
 */

import { ApiError, Client } from "./api.js";
import { SequenceGate } from "./sequence.js";
import {
  ViewState,
  deselectAuthor,
  deselectCommunity,
  initialState,
  selectAuthor,
  selectCommunity,
  submitQuery,
  toOverview,
  zoomOut,
  zoomToAuthors,
} from "./state.js";
import {
  Handlers,
  renderAuthor,
  renderCommunity,
  renderFocusedAuthor,
  renderFocusedCommunity,
  renderOverview,
  showBanner,
} from "./render.js";
import {
  buildAuthorVM,
  buildCommunityVM,
  buildFocusedAuthorVM,
  buildFocusedCommunityVM,
  buildOverviewVM,
} from "./viewmodel.js";
import { QueryResult, QuerySpec, TopicsPayload } from "./types.js";

const GRAPH_SIZE = { width: 760, height: 480 };

class App {
  private state: ViewState = initialState;
  private readonly gate = new SequenceGate();
  private topicsPayload: TopicsPayload | null = null;
  private result: QueryResult | null = null;

  private readonly client = new Client("");
  private readonly graph = document.getElementById("graph")!;
  private readonly bottom = document.getElementById("bottom")!;
  private readonly panel = document.getElementById("panel")!;
  private readonly bannerHost = document.getElementById("banner")!;
  private readonly modeLabel = document.getElementById("mode-label")!;

  private readonly handlers: Handlers = {
    onCommunityClick: (id) => this.focusCommunity(id),
    onAuthorClick: (id) => this.focusAuthor(id),
    onZoomIn: () => this.apply(zoomToAuthors(this.state)),
    onZoomOut: () => this.apply(zoomOut(this.state)),
    onDeselect: () => {
      if (this.state.mode === "focused-community") {
        this.apply(deselectCommunity(this.state));
      } else if (this.state.mode === "focused-author") {
        this.apply(deselectAuthor(this.state));
      }
    },
  };

  async start(): Promise<void> {
    this.wireInputs();
    await this.loadOverview();
  }

  private wireInputs(): void {
    const form = document.getElementById("query-form") as HTMLFormElement;
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      void this.runQuery(this.readQuerySpec());
    });
    document.getElementById("back-overview")!.addEventListener("click", () => {
      this.apply(toOverview(this.state));
      void this.loadOverview();
    });
    document.getElementById("zoom-in")!.addEventListener("click", () => {
      if (
        this.state.mode === "community" ||
        this.state.mode === "focused-community"
      ) {
        this.apply(zoomToAuthors(this.state));
      }
    });
    document.getElementById("zoom-out")!.addEventListener("click", () => {
      if (this.state.mode === "author") this.apply(zoomOut(this.state));
    });
  }

  private readQuerySpec(): QuerySpec {
    const topicsRaw = (
      document.getElementById("topics-input") as HTMLInputElement
    ).value;
    const yearFrom = Number(
      (document.getElementById("from-input") as HTMLInputElement).value,
    );
    const yearTo = Number(
      (document.getElementById("to-input") as HTMLInputElement).value,
    );
    const kRaw = (document.getElementById("k-input") as HTMLInputElement).value;
    return {
      topics: topicsRaw
        .split(",")
        .map((t) => t.trim())
        .filter((t) => t.length > 0),
      yearFrom,
      yearTo,
      k: kRaw ? Number(kRaw) : null,
    };
  }

  private async loadOverview(): Promise<void> {
    const seq = this.gate.next();
    try {
      const payload = await this.client.topics();
      if (this.gate.isStale(seq)) return;
      this.topicsPayload = payload;
      const fromInput = document.getElementById(
        "from-input",
      ) as HTMLInputElement;
      const toInput = document.getElementById("to-input") as HTMLInputElement;
      if (!fromInput.value) fromInput.value = String(payload.year_min);
      if (!toInput.value) toInput.value = String(payload.year_max);
      showBanner(this.bannerHost, "", null);
      this.render();
    } catch (error) {
      if (this.gate.isStale(seq)) return;
      this.reportError(error, () => void this.loadOverview());
    }
  }

  private async runQuery(spec: QuerySpec): Promise<void> {
    const seq = this.gate.next();
    try {
      const result = await this.client.query(spec);
      if (this.gate.isStale(seq)) return;
      this.result = result;
      this.apply(submitQuery(this.state, spec));
      showBanner(this.bannerHost, "", null);
    } catch (error) {
      if (this.gate.isStale(seq)) return;
      this.reportError(error, () => void this.runQuery(spec));
    }
  }

  private focusCommunity(id: number): void {
    const seq = this.gate.next();
    this.client
      .community(id)
      .then((detail) => {
        if (this.gate.isStale(seq) || !this.result) return;
        this.apply(selectCommunity(this.state, id));
        const vm = buildFocusedCommunityVM(this.result, detail, GRAPH_SIZE);
        renderFocusedCommunity(
          vm,
          this.graph,
          this.bottom,
          this.panel,
          this.handlers,
          GRAPH_SIZE,
        );
        this.modeLabel.textContent = "focused community";
      })
      .catch((error) => {
        if (this.gate.isStale(seq)) return;
        if (error instanceof ApiError && error.status === 404) {
          // stale id: fall back to community mode with a notice
          showBanner(this.bannerHost, "That community is gone; rerun the query.", null);
          if (this.state.mode === "focused-community") {
            this.apply(deselectCommunity(this.state));
          } else {
            this.render();
          }
          return;
        }
        this.reportError(error, null);
      });
  }

  private focusAuthor(id: string): void {
    const seq = this.gate.next();
    this.client
      .author(id)
      .then((detail) => {
        if (this.gate.isStale(seq) || !this.result) return;
        this.apply(selectAuthor(this.state, id));
        const vm = buildFocusedAuthorVM(this.result, detail, GRAPH_SIZE);
        renderFocusedAuthor(
          vm,
          this.graph,
          this.bottom,
          this.panel,
          this.handlers,
          GRAPH_SIZE,
        );
        this.modeLabel.textContent = "focused author";
      })
      .catch((error) => {
        if (this.gate.isStale(seq)) return;
        if (error instanceof ApiError && error.status === 404) {
          showBanner(this.bannerHost, "That author is gone; rerun the query.", null);
          if (this.state.mode === "focused-author") {
            this.apply(deselectAuthor(this.state));
          } else {
            this.render();
          }
          return;
        }
        this.reportError(error, null);
      });
  }

  private reportError(error: unknown, retry: (() => void) | null): void {
    const message =
      error instanceof ApiError
        ? `${error.code}: ${error.message}`
        : "Network request failed.";
    showBanner(this.bannerHost, message, retry);
  }

  private apply(next: ViewState): void {
    this.state = next;
    this.render();
  }

  private render(): void {
    this.modeLabel.textContent = this.state.mode.replace("-", " ");
    switch (this.state.mode) {
      case "overview": {
        if (this.topicsPayload) {
          renderOverview(
            buildOverviewVM(this.topicsPayload),
            this.graph,
            this.bottom,
            this.panel,
          );
        }
        break;
      }
      case "community": {
        if (this.result) {
          renderCommunity(
            buildCommunityVM(this.result, GRAPH_SIZE),
            this.graph,
            this.bottom,
            this.handlers,
            GRAPH_SIZE,
          );
        }
        break;
      }
      case "author": {
        if (this.result) {
          renderAuthor(
            buildAuthorVM(this.result, GRAPH_SIZE),
            this.graph,
            this.bottom,
            this.handlers,
            GRAPH_SIZE,
          );
        }
        break;
      }
      case "focused-community":
      case "focused-author":
        // painted by the focus handlers once the detail payload arrives
        break;
    }
  }
}

if (typeof document !== "undefined" && document.getElementById("graph")) {
  void new App().start();
}
