/** Query drafting and per-session round history. The draft mirrors the
 * form; rounds pin the exact request body, response, and rendering so
 * revisiting a round shows byte-identical output. */

import type { Mode, ResolveRequest, ResolveResponse } from "./types.js";

export interface ContextToken {
  text: string;
  pos: "N" | "V" | "ADJ";
}

export interface QueryDraft {
  context: ContextToken[];
  mode: Mode;
  threshold: number | null; // null = server default
  pos: string | null; // sought word's part of speech
  slot: { link: string; governor: string | null } | null;
  phono: string | null;
  top: number | null;
}

export function emptyDraft(): QueryDraft {
  return {
    context: [],
    mode: "combined",
    threshold: null,
    pos: null,
    slot: null,
    phono: null,
    top: null,
  };
}

export function canSubmit(draft: QueryDraft): boolean {
  return draft.context.some((t) => t.text.trim().length > 0);
}

/** Reset the hint fields (phono, POS filter, slot), keeping context,
 * mode and threshold. */
export function clearHints(draft: QueryDraft): QueryDraft {
  return { ...draft, pos: null, slot: null, phono: null };
}

/** Canonical request body: fixed key order, unset hints omitted, so
 * equal drafts serialize to equal JSON bytes. */
export function toRequestBody(draft: QueryDraft): ResolveRequest {
  const body: ResolveRequest = {
    context: draft.context
      .filter((t) => t.text.trim().length > 0)
      .map((t) => `${t.text.trim()}:${t.pos}`),
    mode: draft.mode,
  };
  if (draft.threshold !== null) body.threshold = draft.threshold;
  if (draft.pos !== null) body.pos = draft.pos;
  if (draft.slot !== null) {
    body.slot = { link: draft.slot.link, governor: draft.slot.governor };
  }
  if (draft.phono !== null && draft.phono.trim() !== "") {
    body.phono = draft.phono.trim();
  }
  if (draft.top !== null) body.top = draft.top;
  return body;
}

export interface Round {
  draft: QueryDraft;
  body: ResolveRequest;
  response: ResolveResponse;
  html: string; // rendering at submission time, restored verbatim
}

export interface Session {
  rounds: Round[];
  active: number; // index into rounds, -1 before the first submit
}

export function newSession(): Session {
  return { rounds: [], active: -1 };
}

export function pushRound(session: Session, round: Round): Session {
  const rounds = [...session.rounds, round];
  return { rounds, active: rounds.length - 1 };
}

export function gotoRound(session: Session, index: number): Session {
  if (index < 0 || index >= session.rounds.length) return session;
  return { ...session, active: index };
}

export function activeRound(session: Session): Round | null {
  return session.active >= 0 ? session.rounds[session.active] : null;
}
