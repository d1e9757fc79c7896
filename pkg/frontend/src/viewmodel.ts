/** Pure view-model builders: payloads + view state in, drawable data out.
 *
 * Everything the renderer paints is decided here, so the mode semantics
 * (area encoding, polygon encoding, focus shading, highlighting) are
 * testable without a browser.
 */

import { Column, PieSlice, columns, pieSlices } from "./charts.js";
import {
  NodeShape,
  PALETTE,
  colorFor,
  focusFill,
  radiusFromArea,
  shapeForCommunityCount,
} from "./geometry.js";
import { Point, forceLayout, hashString } from "./layout.js";
import {
  AuthorDetail,
  AuthorRow,
  CommunityDetail,
  QueryResult,
  TopicsPayload,
} from "./types.js";

export interface Size {
  width: number;
  height: number;
}

const COMMUNITY_AREA_SCALE = 36; // px^2 of node area per unit of API node_area

function layoutSeed(result: QueryResult, salt: string): number {
  const r = result.request;
  return hashString(
    `${salt}|${r.topics.join(",")}|${r.year_from}|${r.year_to}|${r.k ?? "all"}`,
  );
}

// ---------------------------------------------------------------- overview

export interface OverviewVM {
  kind: "overview";
  empty: boolean;
  topics: string[];
  yearMin: number;
  yearMax: number;
  authorsPie: PieSlice[];
  papersPie: PieSlice[];
  papersPerYear: Column[];
}

export function buildOverviewVM(payload: TopicsPayload): OverviewVM {
  const top = payload.top_topics.slice(0, 5);
  return {
    kind: "overview",
    empty: payload.topics.length === 0,
    topics: payload.topics,
    yearMin: payload.year_min,
    yearMax: payload.year_max,
    authorsPie: pieSlices(
      top.map((t) => ({ label: t.topic, value: t.author_count })),
      PALETTE,
    ),
    papersPie: pieSlices(
      top.map((t) => ({ label: t.topic, value: t.paper_count })),
      PALETTE,
    ),
    papersPerYear: columns(
      payload.papers_per_year.map((row) => ({
        label: String(row.year),
        value: row.paper_count,
      })),
      440,
      120,
    ),
  };
}

// --------------------------------------------------------------- community

export interface CommunityNodeVM {
  id: number;
  label: string;
  color: string;
  normalized: number;
  influence: number;
  area: number;
  radius: number;
  memberIds: string[];
  position: Point;
}

export interface CommunityVM {
  kind: "community";
  empty: boolean;
  nodes: CommunityNodeVM[];
  authorsPie: PieSlice[];
  papersPerYear: Column[];
  multiCommunityAuthors: AuthorRow[];
}

export function buildCommunityVM(result: QueryResult, size: Size): CommunityVM {
  const ids = result.communities.map((c) => String(c.community_id));
  const shared = new Map<string, string[]>();
  for (const row of result.multi_community_authors) {
    for (let i = 0; i < row.community_ids.length; i++) {
      for (let j = i + 1; j < row.community_ids.length; j++) {
        const key = `${row.community_ids[i]}|${row.community_ids[j]}`;
        shared.set(key, [...(shared.get(key) ?? []), row.author_id]);
      }
    }
  }
  const edges: [string, string][] = [...shared.keys()].map((key) => {
    const [a, b] = key.split("|");
    return [a, b];
  });
  const positions = forceLayout(ids, edges, {
    width: size.width,
    height: size.height,
    seed: layoutSeed(result, "community"),
  });
  const nodes = result.communities.map((community) => {
    const area = community.node_area * COMMUNITY_AREA_SCALE;
    return {
      id: community.community_id,
      label: `#${community.rank}`,
      color: colorFor(community.community_id),
      normalized: community.normalized,
      influence: community.influence,
      area,
      radius: radiusFromArea(area),
      memberIds: community.member_ids,
      position: positions.get(String(community.community_id)) ?? {
        x: size.width / 2,
        y: size.height / 2,
      },
    };
  });
  return {
    kind: "community",
    empty: nodes.length === 0,
    nodes,
    authorsPie: pieSlices(
      result.charts.authors_per_community.map((row) => ({
        label: `community ${row.community_id}`,
        value: row.author_count,
      })),
      PALETTE,
    ),
    papersPerYear: columns(
      result.charts.papers_per_year.map((row) => ({
        label: String(row.year),
        value: row.paper_count,
      })),
      440,
      120,
    ),
    multiCommunityAuthors: result.multi_community_authors,
  };
}

// ------------------------------------------------------- focused community

export interface FocusedCommunityNodeVM extends CommunityNodeVM {
  fill: string;
  isSelected: boolean;
  overlapsSelected: boolean;
}

export interface FocusedCommunityVM {
  kind: "focused-community";
  nodes: FocusedCommunityNodeVM[];
  panel: {
    communityId: number;
    influence: number;
    normalized: number;
    authorCount: number;
    paperCount: number;
    citationTotal: number;
    mostInfluentialAuthor: string | null;
    overlappingCommunityIds: number[];
    authorNames: string[];
  };
  papersPerYear: Column[];
  citationsPerYear: Column[];
}

export function buildFocusedCommunityVM(
  result: QueryResult,
  detail: CommunityDetail,
  size: Size,
): FocusedCommunityVM {
  const base = buildCommunityVM(result, size);
  const overlapping = new Set(detail.overlapping_community_ids);
  const nodes = base.nodes.map((node) => {
    const isSelected = node.id === detail.community_id;
    const overlapsSelected = overlapping.has(node.id);
    return {
      ...node,
      isSelected,
      overlapsSelected,
      fill: focusFill(node.color, isSelected, overlapsSelected),
    };
  });
  return {
    kind: "focused-community",
    nodes,
    panel: {
      communityId: detail.community_id,
      influence: detail.influence,
      normalized: detail.normalized,
      authorCount: detail.authors.length,
      paperCount: detail.paper_count,
      citationTotal: detail.citation_total,
      mostInfluentialAuthor: detail.most_influential_author,
      overlappingCommunityIds: detail.overlapping_community_ids,
      authorNames: detail.authors.map((a) => a.name),
    },
    papersPerYear: columns(
      detail.per_year.map((row) => ({
        label: String(row.year),
        value: row.paper_count,
      })),
      210,
      120,
    ),
    citationsPerYear: columns(
      detail.per_year.map((row) => ({
        label: String(row.year),
        value: row.citation_count,
      })),
      210,
      120,
    ),
  };
}

// ------------------------------------------------------------ author modes

export interface AuthorNodeVM {
  id: string;
  name: string;
  communityIds: number[];
  shape: NodeShape;
  color: string;
  radius: number;
  position: Point;
}

export interface AuthorEdgeVM {
  source: string;
  target: string;
  collaborationCount: number;
}

export interface AuthorVM {
  kind: "author";
  empty: boolean;
  nodes: AuthorNodeVM[];
  edges: AuthorEdgeVM[];
  authorsPie: PieSlice[];
  papersPerYear: Column[];
  multiCommunityAuthors: AuthorRow[];
}

const AUTHOR_NODE_RADIUS = 11;

export function buildAuthorVM(result: QueryResult, size: Size): AuthorVM {
  const ids = result.authors.map((a) => a.author_id);
  const edges: [string, string][] = result.coauthor_edges.map((e) => [
    e.source,
    e.target,
  ]);
  const positions = forceLayout(ids, edges, {
    width: size.width,
    height: size.height,
    seed: layoutSeed(result, "author"),
  });
  const community = buildCommunityVM(result, size);
  const nodes = result.authors.map((author) => {
    const primary = author.community_ids.length
      ? Math.min(...author.community_ids)
      : 0;
    return {
      id: author.author_id,
      name: author.name,
      communityIds: author.community_ids,
      shape: shapeForCommunityCount(author.community_ids.length),
      color: colorFor(primary),
      radius: AUTHOR_NODE_RADIUS,
      position: positions.get(author.author_id) ?? {
        x: size.width / 2,
        y: size.height / 2,
      },
    };
  });
  return {
    kind: "author",
    empty: nodes.length === 0,
    nodes,
    edges: result.coauthor_edges.map((e) => ({
      source: e.source,
      target: e.target,
      collaborationCount: e.collaboration_count,
    })),
    authorsPie: community.authorsPie,
    papersPerYear: community.papersPerYear,
    multiCommunityAuthors: result.multi_community_authors,
  };
}

export interface FocusedAuthorVM {
  kind: "focused-author";
  nodes: (AuthorNodeVM & { highlighted: boolean })[];
  edges: (AuthorEdgeVM & { highlighted: boolean })[];
  panel: {
    authorId: string;
    name: string;
    affiliation: string | null;
    paperCount: number;
    citationTotal: number;
    communityIds: number[];
    coauthorIds: string[];
    citingAuthorCount: number;
    citingAuthorDataAvailable: boolean;
    publications: { title: string; year: number; citations: number }[];
  };
}

export function buildFocusedAuthorVM(
  result: QueryResult,
  detail: AuthorDetail,
  size: Size,
): FocusedAuthorVM {
  const base = buildAuthorVM(result, size);
  const neighborhood = new Set([detail.author_id, ...detail.coauthor_ids]);
  return {
    kind: "focused-author",
    nodes: base.nodes.map((node) => ({
      ...node,
      highlighted: neighborhood.has(node.id),
    })),
    edges: base.edges.map((edge) => ({
      ...edge,
      highlighted:
        edge.source === detail.author_id || edge.target === detail.author_id,
    })),
    panel: {
      authorId: detail.author_id,
      name: detail.name,
      affiliation: detail.affiliation,
      paperCount: detail.paper_count,
      citationTotal: detail.citation_total,
      communityIds: detail.community_ids,
      coauthorIds: detail.coauthor_ids,
      citingAuthorCount: detail.citing_author_count,
      citingAuthorDataAvailable: detail.citing_author_data_available,
      publications: detail.publications.map((p) => ({
        title: p.title,
        year: p.year,
        citations: p.citation_count,
      })),
    },
  };
}
