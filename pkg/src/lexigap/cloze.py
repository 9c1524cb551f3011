"""Cloze evaluation: remove target lemmas from a document, try to get
them back through the resolver, and measure recall/precision. Also
produces the per-segment report (which targets were found per thematic
segment, which domains were selected, and how much structure
restriction shrinks them).
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from lexigap.corpus import SegmentationParams, segment_text
from lexigap.domains import DomainBase
from lexigap.lexicon import ParadigmaticLexicon
from lexigap.phono import PhonoIndex
from lexigap.resolver import (DEFAULT_COVERAGE_THRESHOLD, Mode, Query,
                              ResolveResult, SlotConstraint, resolve)
from lexigap.types import POS, Document, Lemma, ThematicSegment

DEFAULT_POS_POOL = frozenset({POS.NOUN, POS.VERB})


@dataclass
class ClozeInstance:
    """A document with target lemmas excised.

    ``context`` is the surviving content-lemma sequence; ``segments``
    are recomputed over the excised token stream (removal can move
    boundaries). The original document is kept for reference.
    """

    document: Document
    removed: frozenset[Lemma]
    context: tuple[Lemma, ...]
    segments: tuple[ThematicSegment, ...]
    context_document: Document

    def __post_init__(self):
        overlap = self.removed & set(self.context)
        if overlap:
            raise ValueError(f"removed lemmas {sorted(map(str, overlap))} "
                             "still present in context")


def eligible_lemmas(doc: Document, pos_pool: Iterable[POS]) -> list[Lemma]:
    """Distinct removable lemmas, in stable (text, pos) order."""
    pool = set(pos_pool)
    distinct = {l for l in doc.content_lemmas() if l.pos in pool}
    return sorted(distinct, key=lambda l: (l.text, l.pos.value))


def _excise(doc: Document, removed: set[Lemma],
            params: SegmentationParams) -> ClozeInstance:
    kept = []
    for tok in doc.tokens:
        if tok.lemma is not None and tok.lemma in removed:
            continue
        kept.append(type(tok)(surface=tok.surface, lemma=tok.lemma,
                              sentence_index=tok.sentence_index,
                              position=len(kept),
                              is_preposition=tok.is_preposition))
    triples = {
        s: pruned
        for s, ts in doc.triples.items()
        if (pruned := [t for t in ts
                       if t.verb not in removed and t.noun not in removed])
    }
    context_doc = Document(tokens=kept, triples=triples)
    segments = tuple(segment_text(context_doc, params)) if kept else ()
    return ClozeInstance(document=doc, removed=frozenset(removed),
                         context=tuple(context_doc.content_lemmas()),
                         segments=segments, context_document=context_doc)


def make_cloze(doc: Document, n: int,
               pos_pool: Iterable[POS] = DEFAULT_POS_POOL,
               seed: int = 0,
               params: SegmentationParams = SegmentationParams()) -> ClozeInstance:
    """Draw ``n`` target lemmas uniformly (seeded, without replacement)
    from the document's distinct eligible lemmas and excise every
    occurrence."""
    if n < 0:
        raise ValueError("n must be >= 0")
    eligible = eligible_lemmas(doc, pos_pool)
    if n > len(eligible):
        raise ValueError(f"cannot remove {n} lemmas: only {len(eligible)} "
                         "eligible")
    targets = set(random.Random(seed).sample(eligible, n))
    return _excise(doc, targets, params)


def make_cloze_from_list(doc: Document, removed: Iterable[Lemma],
                         params: SegmentationParams = SegmentationParams()) -> ClozeInstance:
    """Excise an explicit target list (for fixture replication)."""
    targets = set(removed)
    present = doc.distinct_lemmas()
    missing = targets - present
    if missing:
        raise ValueError(f"removed lemmas not in document: "
                         f"{sorted(map(str, missing))}")
    return _excise(doc, targets, params)


@dataclass(frozen=True)
class Metrics:
    recall: float
    precision: float
    found: frozenset[Lemma]
    returned_count: int
    removed_count: int
    no_targets: bool = False

    def to_json_dict(self) -> dict:
        return {
            "recall": self.recall,
            "precision": self.precision,
            "found": sorted(str(l) for l in self.found),
            "returned_count": self.returned_count,
            "removed_count": self.removed_count,
            "no_targets": self.no_targets,
        }


@dataclass(frozen=True)
class QueryTemplate:
    """A query minus its context, applied to cloze instances."""

    mode: Mode = Mode.COMBINED
    structure_restricted: bool = False
    pos_filter: POS | None = None
    slot: SlotConstraint | None = None
    phono_hint: str | None = None
    coverage_threshold: float = DEFAULT_COVERAGE_THRESHOLD
    per_segment: bool = False

    def __post_init__(self):
        if isinstance(self.mode, str):
            object.__setattr__(self, "mode", Mode(self.mode))

    def make_query(self, context: Sequence[Lemma],
                   segments: Sequence[ThematicSegment] = ()) -> Query:
        segment_lemmas = None
        if self.per_segment and segments:
            segment_lemmas = tuple(
                tuple(sorted(s.content_lemmas, key=lambda l: (l.text, l.pos.value)))
                for s in segments if s.content_lemmas
            ) or None
        return Query(context=tuple(context), segments=segment_lemmas,
                     pos_filter=self.pos_filter, slot=self.slot,
                     phono_hint=self.phono_hint, mode=self.mode,
                     structure_restricted=self.structure_restricted,
                     coverage_threshold=self.coverage_threshold)


def _metrics(instance: ClozeInstance, result: ResolveResult | None) -> Metrics:
    found = instance.removed & result.lemma_set() if result else frozenset()
    returned = len(result) if result else 0
    if instance.removed:
        recall = len(found) / len(instance.removed)
        no_targets = False
    else:
        # 0/0 convention: nothing to find counts as full recall
        recall = 1.0
        no_targets = True
    precision = len(found) / returned if returned else 0.0
    return Metrics(recall=recall, precision=precision, found=frozenset(found),
                   returned_count=returned,
                   removed_count=len(instance.removed), no_targets=no_targets)


def evaluate(instance: ClozeInstance, template: QueryTemplate,
             base: DomainBase, lexicon: ParadigmaticLexicon | None = None,
             phono: PhonoIndex | None = None) -> Metrics:
    """Resolve the instance's context and score the found targets."""
    if not instance.context:
        return _metrics(instance, None)
    query = template.make_query(instance.context, instance.segments)
    result = resolve(query, base, lexicon, phono)
    return _metrics(instance, result)


@dataclass
class SegmentReport:
    """Table-style summary: one column per segment plus a whole-text
    column, a found mark per removed word, and per-domain selection
    marks with structure-restriction sizes."""

    labels: list[str]
    word_rows: list[dict]
    domain_rows: list[dict]
    metrics: Metrics

    ALL = "ALL"

    def to_json_dict(self) -> dict:
        return {
            "segments": self.labels,
            "words": self.word_rows,
            "domains": self.domain_rows,
            "metrics": self.metrics.to_json_dict(),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), ensure_ascii=False,
                          sort_keys=True, indent=2) + "\n"

    def to_tsv(self) -> str:
        cols = self.labels + [self.ALL]
        lines = ["\t".join(["word"] + cols)]
        for row in self.word_rows:
            marks = ["+" if row["found"][c] else "-" for c in cols]
            lines.append("\t".join([row["lemma"]] + marks))
        lines.append("")
        lines.append("\t".join(["domain", "name"] + cols
                               + ["words", "structure_words", "reduction"]))
        for row in self.domain_rows:
            marks = ["+" if row["selected"][c] else "-" for c in cols]
            lines.append("\t".join(
                [row["id"], row["name"]] + marks
                + [str(row["word_count"]), str(row["structure_word_count"]),
                   f"{row['reduction_pct']:.1f}%"]))
        return "\n".join(lines) + "\n"


def segment_report(instance: ClozeInstance, template: QueryTemplate,
                   base: DomainBase,
                   lexicon: ParadigmaticLexicon | None = None,
                   phono: PhonoIndex | None = None) -> SegmentReport:
    """Run resolution once per segment and once over the whole context.

    The whole-text column's "+" count always agrees with
    :func:`evaluate` on the same template.
    """
    if not instance.segments:
        raise ValueError("instance has no segments")

    labels = [s.label for s in instance.segments]
    columns: dict[str, ResolveResult] = {}
    for segment in instance.segments:
        lemmas = sorted(segment.content_lemmas,
                        key=lambda l: (l.text, l.pos.value))
        if not lemmas:
            columns[segment.label] = ResolveResult([], [])
            continue
        query = template.make_query(lemmas)
        columns[segment.label] = resolve(query, base, lexicon, phono)

    whole = resolve(template.make_query(instance.context, instance.segments),
                    base, lexicon, phono)
    columns[SegmentReport.ALL] = whole
    metrics = _metrics(instance, whole)

    found_sets = {label: result.lemma_set()
                  for label, result in columns.items()}
    word_rows = [
        {
            "lemma": str(lemma),
            "found": {label: lemma in found_sets[label] for label in
                      labels + [SegmentReport.ALL]},
        }
        for lemma in sorted(instance.removed,
                            key=lambda l: (l.text, l.pos.value))
    ]

    selected_ids = {label: {sel.domain_id for sel in result.selections}
                    for label, result in columns.items()}
    seen: set[str] = set().union(*selected_ids.values())
    domain_rows = []
    for domain in sorted((base[d] for d in seen),
                         key=lambda d: (d.name, d.id)):
        domain_rows.append({
            "id": domain.id,
            "name": domain.name,
            "selected": {label: domain.id in selected_ids[label]
                         for label in labels + [SegmentReport.ALL]},
            "word_count": domain.word_count,
            "structure_word_count": domain.structure_word_count,
            "reduction_pct": domain.noise_reduction_pct,
        })

    return SegmentReport(labels=labels, word_rows=word_rows,
                         domain_rows=domain_rows, metrics=metrics)
