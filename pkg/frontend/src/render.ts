/** DOM/SVG painters for the view models. All painting is replace-on-render:
 * each call clears its container and redraws from the view model alone. */

import { arcPath } from "./charts.js";
import type { Column, PieSlice } from "./charts.js";
import { polygonPoints } from "./geometry.js";
import type {
  AuthorVM,
  CommunityVM,
  FocusedAuthorVM,
  FocusedCommunityVM,
  OverviewVM,
} from "./viewmodel.js";

const SVG_NS = "http://www.w3.org/2000/svg";

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string | number>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    el.setAttribute(key, String(value));
  }
  return el;
}

function clear(el: Element): void {
  while (el.firstChild) el.removeChild(el.firstChild);
}

export function paintPie(
  container: Element,
  slices: PieSlice[],
  title: string,
): void {
  const wrap = document.createElement("div");
  wrap.className = "chart";
  const caption = document.createElement("div");
  caption.className = "chart-title";
  caption.textContent = title;
  wrap.appendChild(caption);
  const svg = svgEl("svg", { width: 150, height: 130, viewBox: "0 0 150 130" });
  for (const slice of slices) {
    const path = svgEl("path", {
      d: arcPath(60, 65, 52, slice.startAngle, slice.endAngle),
      fill: slice.color,
    });
    const label = `${slice.label}: ${slice.value}`;
    path.appendChild(
      Object.assign(document.createElementNS(SVG_NS, "title"), {
        textContent: label,
      }),
    );
    svg.appendChild(path);
  }
  wrap.appendChild(svg);
  const legend = document.createElement("ul");
  legend.className = "legend";
  for (const slice of slices) {
    const item = document.createElement("li");
    const swatch = document.createElement("span");
    swatch.className = "swatch";
    swatch.style.background = slice.color;
    item.appendChild(swatch);
    item.appendChild(
      document.createTextNode(` ${slice.label} (${slice.value})`),
    );
    legend.appendChild(item);
  }
  wrap.appendChild(legend);
  container.appendChild(wrap);
}

export function paintColumns(
  container: Element,
  cols: Column[],
  title: string,
  width = 460,
  height = 150,
): void {
  const wrap = document.createElement("div");
  wrap.className = "chart";
  const caption = document.createElement("div");
  caption.className = "chart-title";
  caption.textContent = title;
  wrap.appendChild(caption);
  const svg = svgEl("svg", {
    width,
    height,
    viewBox: `0 0 ${width} ${height}`,
  });
  for (const col of cols) {
    svg.appendChild(
      svgEl("rect", {
        x: col.x,
        y: col.y + 10,
        width: col.width,
        height: col.height,
        fill: "#4e79a7",
      }),
    );
    const text = svgEl("text", {
      x: col.x + col.width / 2,
      y: height - 2,
      "text-anchor": "middle",
      "font-size": 9,
    });
    text.textContent = col.label;
    svg.appendChild(text);
  }
  wrap.appendChild(svg);
  container.appendChild(wrap);
}

export interface Handlers {
  onCommunityClick(id: number): void;
  onAuthorClick(id: string): void;
  onZoomIn(): void;
  onZoomOut(): void;
  onDeselect(): void;
}

export function renderOverview(
  vm: OverviewVM,
  graph: Element,
  bottom: Element,
  panel: Element,
): void {
  clear(graph);
  clear(bottom);
  if (vm.empty) {
    const note = document.createElement("p");
    note.className = "empty-state";
    note.textContent = "The dataset is empty: nothing to explore yet.";
    graph.appendChild(note);
    return;
  }
  const intro = document.createElement("p");
  intro.className = "hint";
  intro.textContent =
    "Pick topics, a time span, and how many communities to rank, then run the query.";
  graph.appendChild(intro);
  paintPie(bottom, vm.authorsPie, "Authors per top topic");
  paintPie(bottom, vm.papersPie, "Papers per top topic");
  paintColumns(bottom, vm.papersPerYear, "Papers per year (top topics)");
  void panel;
}

function paintCommunityNodes(
  svg: SVGSVGElement,
  vm: CommunityVM | FocusedCommunityVM,
  handlers: Handlers,
): void {
  for (const node of vm.nodes) {
    const fill = "fill" in node ? node.fill : node.color;
    const circle = svgEl("circle", {
      cx: node.position.x,
      cy: node.position.y,
      r: Math.max(node.radius, 6),
      fill,
      class: "community-node",
    });
    circle.addEventListener("click", () => handlers.onCommunityClick(node.id));
    const tip = document.createElementNS(SVG_NS, "title");
    tip.textContent = `community ${node.id} - normalized ${node.normalized.toFixed(2)}`;
    circle.appendChild(tip);
    svg.appendChild(circle);
    const label = svgEl("text", {
      x: node.position.x,
      y: node.position.y + 4,
      "text-anchor": "middle",
      "font-size": 11,
      class: "node-label",
    });
    label.textContent = node.label;
    svg.appendChild(label);
  }
}

export function renderCommunity(
  vm: CommunityVM,
  graph: Element,
  bottom: Element,
  handlers: Handlers,
  size: { width: number; height: number },
): void {
  clear(graph);
  clear(bottom);
  if (vm.empty) {
    const note = document.createElement("p");
    note.className = "empty-state";
    note.textContent = "No communities in this window. Widen the query.";
    graph.appendChild(note);
    return;
  }
  const svg = svgEl("svg", {
    width: size.width,
    height: size.height,
    viewBox: `0 0 ${size.width} ${size.height}`,
  });
  paintCommunityNodes(svg, vm, handlers);
  svg.addEventListener("dblclick", () => handlers.onZoomIn());
  graph.appendChild(svg);

  paintPie(bottom, vm.authorsPie, "Authors per community");
  paintColumns(bottom, vm.papersPerYear, "Papers per year");
  paintOverlapTable(bottom, vm.multiCommunityAuthors);
}

function paintOverlapTable(
  bottom: Element,
  rows: { author_id: string; name: string; community_ids: number[] }[],
): void {
  const wrap = document.createElement("div");
  wrap.className = "chart";
  const caption = document.createElement("div");
  caption.className = "chart-title";
  caption.textContent = "Authors in multiple communities";
  wrap.appendChild(caption);
  const table = document.createElement("table");
  table.className = "overlap-table";
  const head = table.insertRow();
  for (const text of ["author", "communities"]) {
    const cell = document.createElement("th");
    cell.textContent = text;
    head.appendChild(cell);
  }
  for (const row of rows) {
    const tr = table.insertRow();
    tr.insertCell().textContent = row.name;
    tr.insertCell().textContent = row.community_ids.join(", ");
  }
  if (rows.length === 0) {
    const tr = table.insertRow();
    const cell = tr.insertCell();
    cell.colSpan = 2;
    cell.textContent = "none";
  }
  wrap.appendChild(table);
  bottom.appendChild(wrap);
}

export function renderFocusedCommunity(
  vm: FocusedCommunityVM,
  graph: Element,
  bottom: Element,
  panel: Element,
  handlers: Handlers,
  size: { width: number; height: number },
): void {
  clear(graph);
  clear(bottom);
  clear(panel);
  const svg = svgEl("svg", {
    width: size.width,
    height: size.height,
    viewBox: `0 0 ${size.width} ${size.height}`,
  });
  paintCommunityNodes(svg, vm, handlers);
  svg.addEventListener("dblclick", () => handlers.onZoomIn());
  graph.appendChild(svg);

  const info = document.createElement("dl");
  info.className = "detail-list";
  const fields: [string, string][] = [
    ["Influence", vm.panel.influence.toFixed(2)],
    ["Normalized", vm.panel.normalized.toFixed(2)],
    ["Authors", String(vm.panel.authorCount)],
    ["Papers", String(vm.panel.paperCount)],
    ["Citations", String(vm.panel.citationTotal)],
    ["Most influential author", vm.panel.mostInfluentialAuthor ?? "-"],
    [
      "Overlapping communities",
      vm.panel.overlappingCommunityIds.join(", ") || "none",
    ],
    ["Members", vm.panel.authorNames.join(", ")],
  ];
  for (const [term, value] of fields) {
    const dt = document.createElement("dt");
    dt.textContent = term;
    const dd = document.createElement("dd");
    dd.textContent = value;
    info.appendChild(dt);
    info.appendChild(dd);
  }
  panel.appendChild(info);
  const back = document.createElement("button");
  back.textContent = "Back to all communities";
  back.addEventListener("click", () => handlers.onDeselect());
  panel.appendChild(back);

  paintColumns(bottom, vm.papersPerYear, "Papers per year", 230, 150);
  paintColumns(bottom, vm.citationsPerYear, "Citations per year", 230, 150);
}

function paintAuthorGraph(
  vm: AuthorVM | FocusedAuthorVM,
  graph: Element,
  handlers: Handlers,
  size: { width: number; height: number },
): void {
  const svg = svgEl("svg", {
    width: size.width,
    height: size.height,
    viewBox: `0 0 ${size.width} ${size.height}`,
  });
  const byId = new Map(vm.nodes.map((n) => [n.id, n]));
  for (const edge of vm.edges) {
    const a = byId.get(edge.source);
    const b = byId.get(edge.target);
    if (!a || !b) continue;
    const highlighted = "highlighted" in edge && edge.highlighted;
    svg.appendChild(
      svgEl("line", {
        x1: a.position.x,
        y1: a.position.y,
        x2: b.position.x,
        y2: b.position.y,
        stroke: highlighted ? "#e15759" : "#bbb",
        "stroke-width": highlighted ? 3 : 1 + Math.log(edge.collaborationCount),
      }),
    );
  }
  for (const node of vm.nodes) {
    const dimmed = "highlighted" in node && !node.highlighted;
    const fill = dimmed ? "#ddd" : node.color;
    let el: SVGElement;
    if (node.shape.kind === "circle") {
      el = svgEl("circle", {
        cx: node.position.x,
        cy: node.position.y,
        r: node.radius,
        fill,
      });
    } else {
      const points = polygonPoints(
        node.position.x,
        node.position.y,
        node.radius + 3,
        node.shape.sides,
        node.shape.rotation,
      );
      el = svgEl("polygon", {
        points: points.map(([x, y]) => `${x},${y}`).join(" "),
        fill,
      });
    }
    el.classList.add("author-node");
    el.addEventListener("click", () => handlers.onAuthorClick(node.id));
    const tip = document.createElementNS(SVG_NS, "title");
    tip.textContent = `${node.name} - communities: ${node.communityIds.join(", ")}`;
    el.appendChild(tip);
    svg.appendChild(el);
    if (node.shape.kind === "polygon" && node.shape.badge !== null) {
      const badge = svgEl("text", {
        x: node.position.x,
        y: node.position.y + 3,
        "text-anchor": "middle",
        "font-size": 9,
        class: "badge",
      });
      badge.textContent = String(node.shape.badge);
      svg.appendChild(badge);
    }
  }
  svg.addEventListener("dblclick", () => handlers.onZoomOut());
  graph.appendChild(svg);
}

export function renderAuthor(
  vm: AuthorVM,
  graph: Element,
  bottom: Element,
  handlers: Handlers,
  size: { width: number; height: number },
): void {
  clear(graph);
  clear(bottom);
  if (vm.empty) {
    const note = document.createElement("p");
    note.className = "empty-state";
    note.textContent = "No authors in this window.";
    graph.appendChild(note);
    return;
  }
  paintAuthorGraph(vm, graph, handlers, size);
  paintPie(bottom, vm.authorsPie, "Authors per community");
  paintColumns(bottom, vm.papersPerYear, "Papers per year");
  paintOverlapTable(bottom, vm.multiCommunityAuthors);
}

export function renderFocusedAuthor(
  vm: FocusedAuthorVM,
  graph: Element,
  bottom: Element,
  panel: Element,
  handlers: Handlers,
  size: { width: number; height: number },
): void {
  clear(graph);
  clear(bottom);
  clear(panel);
  paintAuthorGraph(vm, graph, handlers, size);

  const info = document.createElement("dl");
  info.className = "detail-list";
  const citing = vm.panel.citingAuthorDataAvailable
    ? String(vm.panel.citingAuthorCount)
    : "0 (data unavailable)";
  const fields: [string, string][] = [
    ["Author", vm.panel.name],
    ["Affiliation", vm.panel.affiliation ?? "-"],
    ["Papers", String(vm.panel.paperCount)],
    ["Citations", String(vm.panel.citationTotal)],
    ["Associated communities", String(vm.panel.communityIds.length)],
    ["Co-authors", String(vm.panel.coauthorIds.length)],
    ["Citing authors", citing],
  ];
  for (const [term, value] of fields) {
    const dt = document.createElement("dt");
    dt.textContent = term;
    const dd = document.createElement("dd");
    dd.textContent = value;
    info.appendChild(dt);
    info.appendChild(dd);
  }
  panel.appendChild(info);

  const publications = document.createElement("ol");
  publications.className = "publications";
  for (const pub of vm.panel.publications) {
    const item = document.createElement("li");
    item.textContent = `${pub.title} (${pub.year}) - ${pub.citations} citations`;
    publications.appendChild(item);
  }
  panel.appendChild(publications);

  const back = document.createElement("button");
  back.textContent = "Back to authors";
  back.addEventListener("click", () => handlers.onDeselect());
  panel.appendChild(back);
  void bottom;
}

export function showBanner(
  container: Element,
  message: string,
  onRetry: (() => void) | null,
): void {
  clear(container);
  if (!message) return;
  const banner = document.createElement("div");
  banner.className = "banner";
  banner.textContent = message;
  if (onRetry) {
    const retry = document.createElement("button");
    retry.textContent = "Retry";
    retry.addEventListener("click", onRetry);
    banner.appendChild(retry);
  }
  container.appendChild(banner);
}
