"""Gap resolution: turn a context (plus optional hints) into a ranked
candidate list.

Three sources feed the candidate set. Domain lookup proposes words of
domains that cover enough of the context; structure restriction narrows
that to words sharing a verb-link-noun structure with a context lemma;
paradigmatic expansion follows typed lexicon links out from the
structure words. Part-of-speech filtering is hard; slot and
phonological hints only re-rank (soft filters), so they can never empty
a non-empty candidate set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Sequence

from lexigap.domains import DomainBase
from lexigap.lexicon import (DEFAULT_EXPANSION_TYPES, LinkType,
                             ParadigmaticLexicon)
from lexigap.phono import (DEFAULT_MAX_DIST, DEFAULT_MIN_PREFIX, PhonoIndex,
                           similar_forms)
from lexigap.types import POS, Lemma, SyntacticLink

DEFAULT_COVERAGE_THRESHOLD = 0.75
DEFAULT_EXPANSION_DEPTH = 2


class Mode(Enum):
    SVETLAN = "svetlan"
    EWN = "ewn"
    COMBINED = "combined"


def parse_mode(name: str) -> tuple["Mode", bool]:
    """Map a mode name to (mode, structure_restricted).

    "structure" is shorthand for structure-restricted svetlan.
    """
    table = {
        "svetlan": (Mode.SVETLAN, False),
        "ewn": (Mode.EWN, False),
        "combined": (Mode.COMBINED, False),
        "structure": (Mode.SVETLAN, True),
    }
    try:
        return table[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown mode {name!r} (choose from "
                         f"{', '.join(sorted(table))})") from None


@dataclass(frozen=True)
class DomainEvidence:
    """The candidate is a word of a selected domain.

    Carries the selection coverage alongside the word weight so a
    candidate's score is recomputable from its provenance alone.
    """
    domain_id: str
    coverage: float
    weight: float

    kind = "domain"

    def describe(self) -> str:
        return f"domain:{self.domain_id}({self.coverage:.2f}x{self.weight:.2f})"

    def to_json_dict(self) -> dict:
        return {"type": "domain", "domain": self.domain_id,
                "coverage": self.coverage, "weight": self.weight}


@dataclass(frozen=True)
class StructureEvidence:
    """The candidate shares a structure with a context lemma (or, under
    a slot constraint, sits in a slot-matching structure)."""
    verb: Lemma
    link: SyntacticLink

    kind = "structure"

    def describe(self) -> str:
        return f"struct:{self.verb.text}.{self.link}"

    def to_json_dict(self) -> dict:
        return {"type": "structure", "verb": self.verb.text,
                "link": str(self.link)}


@dataclass(frozen=True)
class ParadigmaticEvidence:
    """The candidate was reached from ``source`` through typed links."""
    source: Lemma
    path: tuple[LinkType, ...]

    kind = "paradigmatic"

    def describe(self) -> str:
        hops = ",".join(l.value for l in self.path) or "self"
        return f"para:{self.source.text}[{hops}]"

    def to_json_dict(self) -> dict:
        return {"type": "paradigmatic", "source": str(self.source),
                "path": [l.value for l in self.path]}


@dataclass(frozen=True)
class PhonoEvidence:
    similarity: float

    kind = "phono"

    def describe(self) -> str:
        return f"phono:{self.similarity:.2f}"

    def to_json_dict(self) -> dict:
        return {"type": "phono", "similarity": self.similarity}


Evidence = DomainEvidence | StructureEvidence | ParadigmaticEvidence | PhonoEvidence

_KIND_ORDER = {"domain": 0, "structure": 1, "paradigmatic": 2, "phono": 3}

CandidateSet = dict[Lemma, set]


def _evidence_sort_key(record) -> tuple:
    return (_KIND_ORDER[record.kind], record.describe())


@dataclass(frozen=True)
class SlotConstraint:
    """Syntactic slot the sought word must fill: its link to a governor
    verb, or to any verb when the governor is unknown."""
    link: SyntacticLink
    governor: Lemma | None = None

    def __post_init__(self):
        if self.governor is not None and self.governor.pos is not POS.VERB:
            raise ValueError("slot governor must be a verb")

    def matches(self, evidence) -> bool:
        return (isinstance(evidence, StructureEvidence)
                and evidence.link == self.link
                and (self.governor is None or evidence.verb == self.governor))

    @classmethod
    def parse(cls, text: str) -> "SlotConstraint":
        """Parse "[governor@]link", e.g. "cod" or "mettre@prep:dans"."""
        governor = None
        if "@" in text:
            head, _, text = text.partition("@")
            governor = Lemma(head.strip(), POS.VERB)
        return cls(link=SyntacticLink.parse(text), governor=governor)

    def __str__(self) -> str:
        link = str(self.link)
        return f"{self.governor.text}@{link}" if self.governor else link


@dataclass(frozen=True)
class DomainSelection:
    domain_id: str
    coverage: float

    def __post_init__(self):
        if not 0.0 <= self.coverage <= 1.0:
            raise ValueError("coverage must be in [0, 1]")


@dataclass(frozen=True)
class ScoringWeights:
    w_domain: float = 1.0
    w_structure: float = 2.0
    w_paradigmatic: float = 1.0
    w_phono: float = 2.0


DEFAULT_WEIGHTS = ScoringWeights()


@dataclass(frozen=True)
class Query:
    context: tuple[Lemma, ...]
    segments: tuple[tuple[Lemma, ...], ...] | None = None
    pos_filter: POS | None = None
    slot: SlotConstraint | None = None
    phono_hint: str | None = None
    mode: Mode = Mode.COMBINED
    structure_restricted: bool = False
    coverage_threshold: float = DEFAULT_COVERAGE_THRESHOLD

    def __post_init__(self):
        object.__setattr__(self, "context", tuple(self.context))
        if not self.context:
            raise ValueError("empty context")
        if isinstance(self.mode, str):
            object.__setattr__(self, "mode", Mode(self.mode))
        if not 0.0 < self.coverage_threshold <= 1.0:
            raise ValueError("coverage_threshold must be in (0, 1]")
        if self.segments is not None:
            segments = tuple(tuple(s) for s in self.segments)
            if not segments or any(not s for s in segments):
                raise ValueError("segments must be non-empty lemma groups")
            object.__setattr__(self, "segments", segments)


@dataclass(frozen=True)
class Candidate:
    lemma: Lemma
    score: float
    provenance: tuple

    def __post_init__(self):
        if not self.provenance:
            raise ValueError(f"candidate {self.lemma} has no provenance")
        if self.score < 0:
            raise ValueError("score must be >= 0")

    def to_json_dict(self) -> dict:
        return {
            "lemma": self.lemma.text,
            "pos": self.lemma.pos.value,
            "score": self.score,
            "provenance": [e.to_json_dict() for e in self.provenance],
        }


class ResolveResult(Sequence):
    """Ranked candidates plus the domain selections behind them."""

    def __init__(self, candidates: list[Candidate],
                 selections: list[DomainSelection]):
        self.candidates = candidates
        self.selections = selections

    def __len__(self) -> int:
        return len(self.candidates)

    def __getitem__(self, i):
        return self.candidates[i]

    def lemma_set(self) -> set[Lemma]:
        return {c.lemma for c in self.candidates}


def select_domains(base: DomainBase, context: Iterable[Lemma],
                   threshold: float) -> list[DomainSelection]:
    """Domains whose word map covers at least ``threshold`` of the
    distinct context lemmas, best coverage first. Uses the inverted
    lemma index, so only domains sharing a lemma are ever touched."""
    distinct = set(context)
    if not distinct:
        raise ValueError("empty context")
    if not 0.0 < threshold <= 1.0:
        raise ValueError("threshold must be in (0, 1]")
    hits: dict[str, int] = {}
    for lemma in distinct:
        for domain_id in base.lemma_index.get(lemma, ()):
            hits[domain_id] = hits.get(domain_id, 0) + 1
    selections = [
        DomainSelection(domain_id, count / len(distinct))
        for domain_id, count in hits.items()
        if count / len(distinct) >= threshold
    ]
    selections.sort(key=lambda s: (-s.coverage, s.domain_id))
    return selections


def candidates_svetlan(base: DomainBase, selections: Sequence[DomainSelection],
                       structure_restricted: bool,
                       context: Iterable[Lemma]) -> CandidateSet:
    """Words of the selected domains; restricted to structure words
    touching the context when asked. Restricted output is always a
    subset of the unrestricted output over the same selections."""
    ctx = set(context)
    out: CandidateSet = {}
    for sel in selections:
        domain = base[sel.domain_id]
        if structure_restricted:
            for structure in domain.structures:
                words = structure.word_set()
                if not words & ctx:
                    continue
                for lemma in words:
                    records = out.setdefault(lemma, set())
                    records.add(DomainEvidence(domain.id, sel.coverage,
                                               domain.words[lemma]))
                    records.add(StructureEvidence(structure.verb,
                                                  structure.link))
        else:
            for lemma, weight in domain.words.items():
                out.setdefault(lemma, set()).add(
                    DomainEvidence(domain.id, sel.coverage, weight))
    return out


def candidates_ewn(lexicon: ParadigmaticLexicon, seeds: CandidateSet,
                   allowed: Iterable[LinkType] = DEFAULT_EXPANSION_TYPES,
                   depth: int = DEFAULT_EXPANSION_DEPTH) -> CandidateSet:
    """Seeds plus their typed-link neighborhoods. Seeds keep whatever
    evidence they arrived with; reached lemmas record the seed and one
    shortest link path."""
    out: CandidateSet = {lemma: set(records) for lemma, records in seeds.items()}
    for seed in sorted(seeds, key=lambda l: (l.text, l.pos.value)):
        for lemma, path in lexicon.neighbors(seed, allowed, depth):
            out.setdefault(lemma, set()).add(ParadigmaticEvidence(seed, path))
    return out


def score_candidate(records: Iterable, weights: ScoringWeights = DEFAULT_WEIGHTS,
                    slot: SlotConstraint | None = None) -> float:
    """Score from provenance alone. With a slot constraint only
    slot-matching structure evidence earns the structure bonus."""
    records = list(records)
    domain_term = max((r.coverage * r.weight for r in records
                       if isinstance(r, DomainEvidence)), default=0.0)
    if slot is None:
        has_structure = any(isinstance(r, StructureEvidence) for r in records)
    else:
        has_structure = any(slot.matches(r) for r in records)
    path_lengths = [len(r.path) for r in records
                    if isinstance(r, ParadigmaticEvidence)]
    para_term = 1.0 / (1 + min(path_lengths)) if path_lengths else 0.0
    phono_term = max((r.similarity for r in records
                      if isinstance(r, PhonoEvidence)), default=0.0)
    return (weights.w_domain * domain_term
            + weights.w_structure * (1.0 if has_structure else 0.0)
            + weights.w_paradigmatic * para_term
            + weights.w_phono * phono_term)


def _merge(into: CandidateSet, other: CandidateSet) -> CandidateSet:
    for lemma, records in other.items():
        into.setdefault(lemma, set()).update(records)
    return into


def _select(base: DomainBase, query: Query) -> list[DomainSelection]:
    if query.segments is None:
        return select_domains(base, query.context, query.coverage_threshold)
    # per-segment selection: union of the per-segment picks, keeping
    # each domain's best coverage
    best: dict[str, float] = {}
    for segment in query.segments:
        for sel in select_domains(base, segment, query.coverage_threshold):
            if sel.coverage > best.get(sel.domain_id, -1.0):
                best[sel.domain_id] = sel.coverage
    selections = [DomainSelection(d, c) for d, c in best.items()]
    selections.sort(key=lambda s: (-s.coverage, s.domain_id))
    return selections


def resolve(query: Query, base: DomainBase,
            lexicon: ParadigmaticLexicon | None = None,
            phono: PhonoIndex | None = None, *,
            weights: ScoringWeights = DEFAULT_WEIGHTS,
            expansion_types: Iterable[LinkType] = DEFAULT_EXPANSION_TYPES,
            expansion_depth: int = DEFAULT_EXPANSION_DEPTH,
            phono_max_dist: int = DEFAULT_MAX_DIST,
            phono_min_prefix: int = DEFAULT_MIN_PREFIX) -> ResolveResult:
    """Run the full pipeline: domain selection, candidate collection
    per mode, POS filter, slot re-ranking, phonological re-ranking,
    score and sort."""
    lexicon = lexicon if lexicon is not None else ParadigmaticLexicon()
    expansion_types = frozenset(expansion_types)

    if query.mode is Mode.EWN:
        selections: list[DomainSelection] = []
        seeds: CandidateSet = {
            lemma: {ParadigmaticEvidence(lemma, ())}
            for lemma in set(query.context)
        }
        candidates = candidates_ewn(lexicon, seeds, expansion_types,
                                    expansion_depth)
    else:
        selections = _select(base, query)
        candidates = candidates_svetlan(base, selections,
                                        query.structure_restricted,
                                        query.context)
        if query.mode is Mode.COMBINED:
            if query.structure_restricted:
                seeds = candidates
            else:
                seeds = candidates_svetlan(base, selections, True,
                                           query.context)
            expanded = candidates_ewn(lexicon, seeds, expansion_types,
                                      expansion_depth)
            candidates = _merge(candidates, expanded)

    if query.pos_filter is not None:
        candidates = {lemma: records for lemma, records in candidates.items()
                      if lemma.pos is query.pos_filter}

    if query.slot is not None:
        # soft slot filter: slot-matching structures of the selected
        # domains vouch for candidates they contain; everyone else just
        # misses the structure bonus
        for sel in selections:
            for structure in base[sel.domain_id].structures:
                record = StructureEvidence(structure.verb, structure.link)
                if not query.slot.matches(record):
                    continue
                for lemma in structure.word_set():
                    if lemma in candidates:
                        candidates[lemma].add(record)

    if query.phono_hint and phono is not None:
        # soft phonological filter, matched on lemma text so expansion
        # results outside the index still get credit
        best_sim: dict[str, float] = {}
        for lemma, sim in similar_forms(phono, query.phono_hint,
                                        max_dist=phono_max_dist,
                                        min_prefix=phono_min_prefix):
            if sim > best_sim.get(lemma.text, 0.0):
                best_sim[lemma.text] = sim
        for lemma, records in candidates.items():
            sim = best_sim.get(lemma.text)
            if sim is not None:
                records.add(PhonoEvidence(sim))

    ranked = [
        Candidate(lemma=lemma,
                  score=score_candidate(records, weights, query.slot),
                  provenance=tuple(sorted(records, key=_evidence_sort_key)))
        for lemma, records in candidates.items()
    ]
    ranked.sort(key=lambda c: (-c.score, c.lemma.text, c.lemma.pos.value))
    return ResolveResult(ranked, selections)
