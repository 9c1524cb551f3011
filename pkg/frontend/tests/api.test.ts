import { describe, expect, it } from "vitest";

import {
  ApiError,
  isAbort,
  isNetworkError,
  LexigapClient,
  type FetchLike,
} from "../src/api.js";
import type { ResolveResponse } from "../src/types.js";

const payload: ResolveResponse = {
  candidates: [{ lemma: "abroger", pos: "V", score: 3.75, provenance: [] }],
  selected_domains: [],
};

function okResponse(body: unknown) {
  return { ok: true, status: 200, json: async () => body };
}

describe("LexigapClient.resolve", () => {
  it("posts the body verbatim and returns the payload", async () => {
    const seen: { url?: string; body?: string } = {};
    const fetchFn: FetchLike = async (url, init) => {
      seen.url = url;
      seen.body = init?.body;
      return okResponse(payload);
    };
    const client = new LexigapClient("http://localhost:8000/", fetchFn);
    const body = { context: ["loi:N"], mode: "combined" };
    const got = await client.resolve(body);
    expect(got).toEqual(payload);
    expect(seen.url).toBe("http://localhost:8000/resolve");
    expect(seen.body).toBe(JSON.stringify(body));
  });

  it("turns a 400 into field-level errors", async () => {
    const fetchFn: FetchLike = async () => ({
      ok: false,
      status: 400,
      json: async () => ({
        detail: [
          { loc: ["body", "context", 1], msg: "lemma text contains reserved character" },
          { loc: ["body", "mode"], msg: "unknown mode 'magic'" },
        ],
      }),
    });
    const client = new LexigapClient("", fetchFn);
    const err = await client
      .resolve({ context: ["loi:N", "bad lemma:N"], mode: "magic" })
      .then(() => null, (e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    const apiErr = err as ApiError;
    expect(apiErr.status).toBe(400);
    expect(apiErr.messageFor("context")).toContain("reserved character");
    expect(apiErr.messageFor("mode")).toContain("magic");
    expect(apiErr.messageFor("phono")).toBeNull();
  });

  it("keeps a plain detail string as the error message", async () => {
    const fetchFn: FetchLike = async () => ({
      ok: false,
      status: 404,
      json: async () => ({ detail: "unknown domain 'D999'" }),
    });
    const client = new LexigapClient("", fetchFn);
    const err = await client
      .resolve({ context: ["loi:N"] })
      .then(() => null, (e: unknown) => e as ApiError);
    expect(err?.message).toContain("D999");
    expect(err?.fieldErrors).toEqual([]);
  });

  it("aborts the previous request when a new one starts", async () => {
    const signals: AbortSignal[] = [];
    let calls = 0;
    const fetchFn: FetchLike = (_url, init) => {
      calls += 1;
      const signal = init!.signal!;
      signals.push(signal);
      if (calls === 1) {
        // hang until aborted, like a slow network call
        return new Promise((_resolve, reject) => {
          signal.addEventListener("abort", () =>
            reject(new DOMException("aborted", "AbortError")),
          );
        });
      }
      return Promise.resolve(okResponse(payload));
    };
    const client = new LexigapClient("", fetchFn);

    const first = client.resolve({ context: ["loi:N"] });
    const caught = first.then(() => null, (e: unknown) => e);
    const second = await client.resolve({ context: ["loi:N", "état:N"] });

    expect(second).toEqual(payload);
    expect(signals).toHaveLength(2);
    expect(signals[0].aborted).toBe(true);
    expect(signals[1].aborted).toBe(false);
    expect(isAbort(await caught)).toBe(true);
  });
});

describe("error classification", () => {
  it("network failures are retryable, API and abort errors are not", () => {
    expect(isNetworkError(new TypeError("fetch failed"))).toBe(true);
    expect(isNetworkError(new ApiError(400, []))).toBe(false);
    expect(isNetworkError(new DOMException("aborted", "AbortError"))).toBe(
      false,
    );
    expect(isAbort(new DOMException("aborted", "AbortError"))).toBe(true);
    expect(isAbort(new TypeError("fetch failed"))).toBe(false);
  });
});
