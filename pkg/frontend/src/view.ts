/** HTML renderers. Pure string builders so tests can assert exact
 * output. Candidates are rendered in API order, never re-sorted or
 * filtered; numbers are printed with String(), exactly as parsed from
 * the payload. */

import type {
  Candidate,
  Provenance,
  ResolveResponse,
  SelectedDomain,
} from "./types.js";
import type { Round } from "./state.js";
import { ApiError } from "./api.js";

export function escapeHtml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;");
}

function badge(record: Provenance): string {
  switch (record.type) {
    case "domain":
      return `<span class="badge badge-domain">${escapeHtml(record.domain)}` +
        ` · coverage ${String(record.coverage)}</span>`;
    case "structure":
      return `<span class="badge badge-structure">${escapeHtml(record.verb)}` +
        ` · ${escapeHtml(record.link)}</span>`;
    case "paradigmatic": {
      const path = record.path.length ? record.path.join(" → ") : "self";
      return `<span class="badge badge-para">${escapeHtml(record.source)}` +
        ` [${escapeHtml(path)}]</span>`;
    }
    case "phono":
      return `<span class="badge badge-phono">` +
        `~ ${String(record.similarity)}</span>`;
  }
}

function candidateRow(candidate: Candidate): string {
  const badges = candidate.provenance.map(badge).join("");
  return (
    `<li class="candidate">` +
    `<span class="lemma">${escapeHtml(candidate.lemma)}</span>` +
    `<span class="pos">${escapeHtml(candidate.pos)}</span>` +
    `<span class="score">${String(candidate.score)}</span>` +
    `<span class="badges">${badges}</span>` +
    `</li>`
  );
}

export function renderCandidates(candidates: Candidate[]): string {
  if (candidates.length === 0) {
    return (
      `<p class="empty">no candidates - relax threshold? ` +
      `<button type="button" data-action="relax-threshold">lower it</button>` +
      `</p>`
    );
  }
  return `<ol class="candidates">${candidates.map(candidateRow).join("")}</ol>`;
}

export function renderDomains(domains: SelectedDomain[]): string {
  if (domains.length === 0) {
    return `<p class="empty">no domain selected</p>`;
  }
  const rows = domains
    .map(
      (d) =>
        `<li class="domain">` +
        `<span class="domain-name">${escapeHtml(d.name)}</span>` +
        `<span class="domain-id">${escapeHtml(d.id)}</span>` +
        `<span class="coverage-bar"><span class="coverage-fill" ` +
        `style="width:${d.coverage * 100}%"></span></span>` +
        `<span class="coverage">${String(d.coverage)}</span>` +
        `</li>`,
    )
    .join("");
  return `<ul class="domains">${rows}</ul>`;
}

/** The full result pane stored per round and restored from history. */
export function renderRound(response: ResolveResponse): string {
  return (
    `<div class="results">` +
    `<div class="main">${renderCandidates(response.candidates)}</div>` +
    `<aside class="side">${renderDomains(response.selected_domains)}</aside>` +
    `</div>`
  );
}

export function renderHistory(rounds: Round[], active: number): string {
  if (rounds.length === 0) return "";
  const items = rounds
    .map((round, i) => {
      const label = `round ${i + 1}: ${round.body.context.join(", ")}`;
      const cls = i === active ? ` class="active"` : "";
      return `<li${cls}><a href="#" data-round="${i}">${escapeHtml(label)}</a></li>`;
    })
    .join("");
  return `<ol class="history">${items}</ol>`;
}

/** Inline error for one field, or "" when the error does not concern it. */
export function renderFieldError(error: ApiError | null, field: string): string {
  const msg = error?.messageFor(field);
  return msg ? `<span class="field-error">${escapeHtml(msg)}</span>` : "";
}

export function renderRetryBanner(visible: boolean): string {
  if (!visible) return "";
  return (
    `<div class="banner">service unreachable ` +
    `<button type="button" data-action="retry">retry</button></div>`
  );
}
