/** Client for the lexigap service. At most one resolve request is in
 * flight: submitting again aborts the previous request. */

import type { FieldError, ResolveRequest, ResolveResponse } from "./types.js";

export class ApiError extends Error {
  status: number;
  fieldErrors: FieldError[];

  constructor(status: number, fieldErrors: FieldError[], message?: string) {
    super(message ?? `request failed with status ${status}`);
    this.status = status;
    this.fieldErrors = fieldErrors;
  }

  /** Error message for a form field ("context", "mode", ...), if any.
   * Element errors like ["body", "context", 1] map to their field. */
  messageFor(field: string): string | null {
    for (const err of this.fieldErrors) {
      if (err.loc[0] === "body" && err.loc[1] === field) return err.msg;
    }
    return null;
  }
}

export type FetchLike = (
  input: string,
  init?: { method?: string; headers?: Record<string, string>; body?: string; signal?: AbortSignal },
) => Promise<{ ok: boolean; status: number; json(): Promise<unknown> }>;

async function toApiError(status: number, resp: { json(): Promise<unknown> }): Promise<ApiError> {
  let fields: FieldError[] = [];
  let message: string | undefined;
  try {
    const body = (await resp.json()) as { detail?: unknown };
    if (Array.isArray(body.detail)) {
      fields = body.detail as FieldError[];
    } else if (typeof body.detail === "string") {
      message = body.detail;
    }
  } catch {
    // non-JSON error body; keep the status-only message
  }
  return new ApiError(status, fields, message);
}

export class LexigapClient {
  private baseUrl: string;
  private fetchFn: FetchLike;
  private inflight: AbortController | null = null;

  constructor(baseUrl = "", fetchFn: FetchLike = fetch as unknown as FetchLike) {
    this.baseUrl = baseUrl.replace(/\/$/, "");
    this.fetchFn = fetchFn;
  }

  /** POST /resolve. A newer call cancels any still-running one. */
  async resolve(body: ResolveRequest): Promise<ResolveResponse> {
    this.inflight?.abort();
    const controller = new AbortController();
    this.inflight = controller;
    try {
      const resp = await this.fetchFn(`${this.baseUrl}/resolve`, {
        method: "POST",
        headers: { "Content-Type": "application/json" },
        body: JSON.stringify(body),
        signal: controller.signal,
      });
      if (!resp.ok) throw await toApiError(resp.status, resp);
      return (await resp.json()) as ResolveResponse;
    } finally {
      if (this.inflight === controller) this.inflight = null;
    }
  }

  async domains(): Promise<unknown[]> {
    const resp = await this.fetchFn(`${this.baseUrl}/domains`);
    if (!resp.ok) throw await toApiError(resp.status, resp);
    return (await resp.json()) as unknown[];
  }

  async health(): Promise<Record<string, unknown>> {
    const resp = await this.fetchFn(`${this.baseUrl}/health`);
    if (!resp.ok) throw await toApiError(resp.status, resp);
    return (await resp.json()) as Record<string, unknown>;
  }
}

/** True for fetch-level failures (server unreachable), which the UI
 * answers with a retry banner rather than field errors. */
export function isNetworkError(err: unknown): boolean {
  return !(err instanceof ApiError) &&
    !(err instanceof DOMException && err.name === "AbortError");
}

export function isAbort(err: unknown): boolean {
  return err instanceof DOMException && err.name === "AbortError";
}
