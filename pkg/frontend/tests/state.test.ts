import { describe, expect, it } from "vitest";

import {
  activeRound,
  canSubmit,
  clearHints,
  emptyDraft,
  gotoRound,
  newSession,
  pushRound,
  toRequestBody,
  type QueryDraft,
  type Round,
} from "../src/state.js";
import { renderRound } from "../src/view.js";
import type { ResolveResponse } from "../src/types.js";

function draftWith(partial: Partial<QueryDraft>): QueryDraft {
  return { ...emptyDraft(), ...partial };
}

describe("canSubmit", () => {
  it("requires at least one context token", () => {
    expect(canSubmit(emptyDraft())).toBe(false);
    expect(canSubmit(draftWith({ context: [{ text: "loi", pos: "N" }] }))).toBe(
      true,
    );
  });

  it("ignores blank tokens", () => {
    expect(canSubmit(draftWith({ context: [{ text: "  ", pos: "N" }] }))).toBe(
      false,
    );
  });
});

describe("toRequestBody", () => {
  it("serializes context as text:POS and omits unset hints", () => {
    const body = toRequestBody(
      draftWith({ context: [{ text: " loi ", pos: "N" }] }),
    );
    expect(body).toEqual({ context: ["loi:N"], mode: "combined" });
    expect("phono" in body).toBe(false);
    expect("slot" in body).toBe(false);
  });

  it("carries hints on the wire shape the service expects", () => {
    const body = toRequestBody(
      draftWith({
        context: [{ text: "situation", pos: "N" }],
        phono: " mépriser ",
        pos: "V",
        slot: { link: "cod", governor: null },
        threshold: 0.5,
        top: 25,
      }),
    );
    expect(body).toEqual({
      context: ["situation:N"],
      mode: "combined",
      threshold: 0.5,
      pos: "V",
      slot: { link: "cod", governor: null },
      phono: "mépriser",
      top: 25,
    });
  });

  it("produces identical bytes for identical drafts", () => {
    const make = () =>
      toRequestBody(
        draftWith({
          context: [
            { text: "loi", pos: "N" },
            { text: "état", pos: "N" },
          ],
          phono: "aboli",
        }),
      );
    expect(JSON.stringify(make())).toBe(JSON.stringify(make()));
  });
});

describe("clearHints", () => {
  it("drops phono, pos and slot but keeps context, mode, threshold", () => {
    const noisy = draftWith({
      context: [{ text: "loi", pos: "N" }],
      mode: "svetlan",
      threshold: 0.5,
      phono: "aboli",
      pos: "V",
      slot: { link: "cod", governor: "abroger" },
    });
    const cleared = clearHints(noisy);
    expect(cleared.phono).toBeNull();
    expect(cleared.pos).toBeNull();
    expect(cleared.slot).toBeNull();
    expect(cleared.context).toEqual(noisy.context);
    expect(cleared.mode).toBe("svetlan");
    expect(cleared.threshold).toBe(0.5);
  });
});

/** Deterministic stand-in for the service: body bytes -> payload. */
function mockApi(routes: Map<string, ResolveResponse>) {
  return (body: object): ResolveResponse => {
    const payload = routes.get(JSON.stringify(body));
    if (!payload) throw new Error(`unexpected body ${JSON.stringify(body)}`);
    return payload;
  };
}

const round1Payload: ResolveResponse = {
  candidates: [
    {
      lemma: "mettre",
      pos: "V",
      score: 2.8,
      provenance: [
        { type: "domain", domain: "D001", coverage: 1.0, weight: 0.8 },
        { type: "structure", verb: "mettre", link: "prep:dans" },
      ],
    },
    {
      lemma: "maîtriser",
      pos: "V",
      score: 2.8,
      provenance: [
        { type: "domain", domain: "D001", coverage: 1.0, weight: 0.8 },
        { type: "structure", verb: "maîtriser", link: "cod" },
      ],
    },
  ],
  selected_domains: [{ id: "D001", name: "AbrogerMettre", coverage: 1.0 }],
};

const refinedPayload: ResolveResponse = {
  candidates: [
    {
      lemma: "maîtriser",
      pos: "V",
      score: 4.133333333333333,
      provenance: [
        { type: "domain", domain: "D001", coverage: 1.0, weight: 0.8 },
        { type: "structure", verb: "maîtriser", link: "cod" },
        { type: "phono", similarity: 0.6666666666666667 },
      ],
    },
    {
      lemma: "mettre",
      pos: "V",
      score: 0.8,
      provenance: [
        { type: "domain", domain: "D001", coverage: 1.0, weight: 0.8 },
      ],
    },
  ],
  selected_domains: [{ id: "D001", name: "AbrogerMettre", coverage: 1.0 }],
};

describe("refinement rounds", () => {
  const base = draftWith({ context: [{ text: "situation", pos: "N" }] });
  const hinted = draftWith({
    context: [{ text: "situation", pos: "N" }],
    phono: "mépriser",
    pos: "V",
    slot: { link: "cod", governor: null },
  });
  const routes = new Map([
    [JSON.stringify(toRequestBody(base)), round1Payload],
    [JSON.stringify(toRequestBody(hinted)), refinedPayload],
  ]);
  const api = mockApi(routes);

  function play(draft: QueryDraft): Round {
    const body = toRequestBody(draft);
    const response = api(body);
    return { draft, body, response, html: renderRound(response) };
  }

  it("hints re-rank maîtriser above mettre", () => {
    const refined = play(hinted);
    const order = refined.response.candidates.map((c) => c.lemma);
    expect(order.indexOf("maîtriser")).toBeLessThan(order.indexOf("mettre"));
    expect(refined.html.indexOf("maîtriser")).toBeLessThan(
      refined.html.indexOf("mettre"),
    );
  });

  it("clearing hints reproduces round 1 byte for byte", () => {
    const round1 = play(base);
    const round2 = play(hinted);
    expect(round2.html).not.toBe(round1.html);
    const round3 = play(clearHints(hinted));
    expect(JSON.stringify(round3.body)).toBe(JSON.stringify(round1.body));
    expect(round3.html).toBe(round1.html);
  });

  it("history restores a round's exact rendering", () => {
    let session = newSession();
    expect(activeRound(session)).toBeNull();
    const round1 = play(base);
    const round2 = play(hinted);
    session = pushRound(session, round1);
    session = pushRound(session, round2);
    expect(activeRound(session)?.html).toBe(round2.html);

    session = gotoRound(session, 0);
    expect(activeRound(session)?.html).toBe(round1.html);
    expect(session.rounds).toHaveLength(2); // history survives navigation

    session = gotoRound(session, 7); // out of range: no change
    expect(activeRound(session)?.html).toBe(round1.html);
  });
});
