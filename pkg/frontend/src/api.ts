/** Typed client for the query service. Read-only: the UI never mutates
 * server state; POST /query is a pure lookup into the snapshot cache. */

import {
  AuthorDetail,
  CommunityDetail,
  QueryResult,
  QuerySpec,
  TopicsPayload,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function request<T>(base: string, path: string, init?: RequestInit): Promise<T> {
  const response = await fetch(`${base}${path}`, init);
  if (!response.ok) {
    let code = "http_error";
    let message = `${response.status}`;
    try {
      const body = await response.json();
      code = body.code ?? code;
      message = body.message ?? message;
    } catch {
      // non-JSON error body; keep defaults
    }
    throw new ApiError(response.status, code, message);
  }
  return (await response.json()) as T;
}

export class Client {
  constructor(readonly base: string = "") {}

  topics(): Promise<TopicsPayload> {
    return request(this.base, "/topics");
  }

  query(spec: QuerySpec): Promise<QueryResult> {
    return request(this.base, "/query", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({
        topics: spec.topics,
        year_from: spec.yearFrom,
        year_to: spec.yearTo,
        k: spec.k,
      }),
    });
  }

  community(id: number): Promise<CommunityDetail> {
    return request(this.base, `/communities/${id}`);
  }

  author(id: string): Promise<AuthorDetail> {
    return request(this.base, `/authors/${encodeURIComponent(id)}`);
  }
}
