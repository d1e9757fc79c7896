/** Payload shapes served by the query API. */

export interface TopicStat {
  topic: string;
  paper_count: number;
  author_count: number;
}

export interface TopicsPayload {
  topics: string[];
  year_min: number;
  year_max: number;
  top_topics: TopicStat[];
  papers_per_year: { year: number; paper_count: number }[];
}

export interface Baselines {
  min_citation: number;
  mean_citation: number;
  h_index: number;
}

export interface CommunityReport {
  community_id: number;
  influence: number;
  normalized: number;
  rank: number;
  baselines: Baselines;
  owned_paper_count: number;
  member_ids: string[];
  node_area: number;
}

export interface AuthorRow {
  author_id: string;
  name: string;
  community_ids: number[];
}

export interface CoauthorEdge {
  source: string;
  target: string;
  collaboration_count: number;
}

export interface QueryResult {
  request: { topics: string[]; year_from: number; year_to: number; k: number | null };
  communities: CommunityReport[];
  authors: AuthorRow[];
  coauthor_edges: CoauthorEdge[];
  multi_community_authors: AuthorRow[];
  charts: {
    authors_per_community: { community_id: number; author_count: number }[];
    papers_per_year: { year: number; paper_count: number }[];
  };
}

export interface CommunityDetail {
  community_id: number;
  influence: number;
  normalized: number;
  rank: number;
  authors: { author_id: string; name: string }[];
  paper_count: number;
  citation_total: number;
  most_influential_author: string | null;
  overlapping_community_ids: number[];
  per_year: { year: number; paper_count: number; citation_count: number }[];
}

export interface Publication {
  paper_id: string;
  title: string;
  year: number;
  citation_count: number;
}

export interface AuthorDetail {
  author_id: string;
  name: string;
  affiliation: string | null;
  paper_count: number;
  citation_total: number;
  community_ids: number[];
  coauthor_ids: string[];
  citing_author_count: number;
  citing_author_data_available: boolean;
  publications: Publication[];
}

export interface QuerySpec {
  topics: string[];
  yearFrom: number;
  yearTo: number;
  k: number | null;
}
