/** Browser bootstrap: binds the form to the client and renders rounds.
 * All logic lives in api/state/view; this file only touches the DOM. */

import { isAbort, isNetworkError, ApiError, LexigapClient } from "./api.js";
import {
  activeRound,
  canSubmit,
  clearHints,
  emptyDraft,
  gotoRound,
  newSession,
  pushRound,
  toRequestBody,
  type ContextToken,
  type QueryDraft,
  type Session,
} from "./state.js";
import {
  renderFieldError,
  renderHistory,
  renderRetryBanner,
  renderRound,
} from "./view.js";

const client = new LexigapClient("");
let draft: QueryDraft = emptyDraft();
let session: Session = newSession();
let lastError: ApiError | null = null;
let offline = false;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

function readDraft(): QueryDraft {
  const tokens: ContextToken[] = [];
  document.querySelectorAll<HTMLElement>("#context-list .token").forEach((row) => {
    const text = row.dataset.text ?? "";
    const pos = (row.dataset.pos ?? "N") as ContextToken["pos"];
    tokens.push({ text, pos });
  });
  const phono = el<HTMLInputElement>("phono").value.trim();
  const pos = el<HTMLSelectElement>("pos").value;
  const link = el<HTMLInputElement>("slot-link").value.trim();
  const governor = el<HTMLInputElement>("slot-governor").value.trim();
  const threshold = el<HTMLInputElement>("threshold").valueAsNumber;
  return {
    context: tokens,
    mode: el<HTMLSelectElement>("mode").value as QueryDraft["mode"],
    threshold: Number.isNaN(threshold) ? null : threshold,
    pos: pos || null,
    slot: link ? { link, governor: governor || null } : null,
    phono: phono || null,
    top: null,
  };
}

function paint(): void {
  el("submit").toggleAttribute("disabled", !canSubmit(draft));
  el("history").innerHTML = renderHistory(session.rounds, session.active);
  el("banner").innerHTML = renderRetryBanner(offline);
  for (const field of ["context", "mode", "threshold", "pos", "slot", "phono"]) {
    const holder = document.getElementById(`error-${field}`);
    if (holder) holder.innerHTML = renderFieldError(lastError, field);
  }
  const round = activeRound(session);
  el("results").innerHTML = round ? round.html : "";
}

function addToken(): void {
  const text = el<HTMLInputElement>("token-text").value.trim();
  if (!text) return;
  const pos = el<HTMLSelectElement>("token-pos").value;
  const row = document.createElement("span");
  row.className = "token";
  row.dataset.text = text;
  row.dataset.pos = pos;
  row.textContent = `${text}:${pos} `;
  row.addEventListener("click", () => {
    row.remove();
    draft = readDraft();
    paint();
  });
  el("context-list").appendChild(row);
  el<HTMLInputElement>("token-text").value = "";
  draft = readDraft();
  paint();
}

async function submit(): Promise<void> {
  draft = readDraft();
  if (!canSubmit(draft)) return;
  const body = toRequestBody(draft);
  lastError = null;
  offline = false;
  try {
    const response = await client.resolve(body);
    session = pushRound(session, {
      draft,
      body,
      response,
      html: renderRound(response),
    });
  } catch (err) {
    if (isAbort(err)) return; // superseded by a newer submission
    if (err instanceof ApiError) {
      lastError = err;
    } else if (isNetworkError(err)) {
      offline = true;
    } else {
      throw err;
    }
  }
  paint();
}

function wire(): void {
  el("add-token").addEventListener("click", addToken);
  el<HTMLInputElement>("token-text").addEventListener("keydown", (ev) => {
    if ((ev as KeyboardEvent).key === "Enter") {
      ev.preventDefault();
      addToken();
    }
  });
  el("submit").addEventListener("click", (ev) => {
    ev.preventDefault();
    void submit();
  });
  el("clear-hints").addEventListener("click", () => {
    draft = clearHints(readDraft());
    el<HTMLInputElement>("phono").value = "";
    el<HTMLSelectElement>("pos").value = "";
    el<HTMLInputElement>("slot-link").value = "";
    el<HTMLInputElement>("slot-governor").value = "";
    void submit();
  });
  el("history").addEventListener("click", (ev) => {
    const target = ev.target as HTMLElement;
    const index = target.dataset.round;
    if (index !== undefined) {
      ev.preventDefault();
      session = gotoRound(session, Number(index));
      paint();
    }
  });
  el("banner").addEventListener("click", (ev) => {
    const target = ev.target as HTMLElement;
    if (target.dataset.action === "retry") void submit();
  });
  ["mode", "threshold", "pos", "slot-link", "slot-governor", "phono"].forEach(
    (id) =>
      el(id).addEventListener("change", () => {
        draft = readDraft();
        paint();
      }),
  );
  paint();
}

if (typeof document !== "undefined") {
  document.addEventListener("DOMContentLoaded", wire);
}
