"""Domain building: cluster similar thematic segments, then distill each
cluster into a named domain of weighted words and verb-link-noun
structures.

Clustering is greedy and incremental in corpus order: a segment joins the
existing cluster it is most cosine-similar to (over frequency-weighted
content-lemma vectors) when that similarity reaches the threshold,
otherwise it founds a new cluster. Distillation keeps the words that are
frequent (relative to the cluster maximum) and supported by enough
distinct segments, and prunes structures down to the kept vocabulary.
"""

from __future__ import annotations

import json
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from lexigap.corpus import SegmentationParams, segment_text
from lexigap.types import (POS, Document, Lemma, SyntacticLink, SyntTriple,
                           ThematicSegment)

log = logging.getLogger(__name__)


@dataclass
class Structure:
    """A (verb, link, noun class) family inside a domain."""

    verb: Lemma
    link: SyntacticLink
    noun_class: dict[Lemma, float]

    def __post_init__(self):
        if self.verb.pos is not POS.VERB:
            raise ValueError(f"structure verb {self.verb} is not a verb")
        if not self.noun_class:
            raise ValueError("structure noun class must be non-empty")
        for lemma, weight in self.noun_class.items():
            if lemma.pos is not POS.NOUN:
                raise ValueError(f"structure noun {lemma} is not a noun")
            if weight <= 0:
                raise ValueError(f"non-positive weight for {lemma}")

    def word_set(self) -> set[Lemma]:
        return {self.verb, *self.noun_class}

    def contains_any(self, lemmas: Iterable[Lemma]) -> bool:
        words = self.word_set()
        return any(l in words for l in lemmas)


@dataclass
class Domain:
    id: str
    name: str
    words: dict[Lemma, float]
    structures: list[Structure] = field(default_factory=list)
    segment_ids: tuple[str, ...] = ()

    def __post_init__(self):
        for lemma, weight in self.words.items():
            if weight <= 0:
                raise ValueError(f"non-positive weight for {lemma} in {self.id}")
        for s in self.structures:
            missing = s.word_set() - self.words.keys()
            if missing:
                raise ValueError(f"structure lemmas {sorted(map(str, missing))} "
                                 f"missing from domain {self.id} word map")

    @property
    def word_count(self) -> int:
        return len(self.words)

    def structure_words(self) -> set[Lemma]:
        out: set[Lemma] = set()
        for s in self.structures:
            out |= s.word_set()
        return out

    @property
    def structure_word_count(self) -> int:
        return len(self.structure_words())

    @property
    def noise_reduction_pct(self) -> float:
        """How much a structure-only view shrinks the domain, in percent."""
        if not self.words:
            return 0.0
        return 100.0 * (1.0 - self.structure_word_count / self.word_count)


@dataclass(frozen=True)
class BuildConfig:
    window: int = 10
    min_segment: int = 15
    boundary_quantile: float = 0.25
    theta_sim: float = 0.4
    theta_keep: float = 0.1
    min_support: int = 2

    def segmentation(self) -> SegmentationParams:
        return SegmentationParams(self.window, self.min_segment,
                                  self.boundary_quantile)

    def to_json_dict(self) -> dict:
        return {
            "window": self.window,
            "min_segment": self.min_segment,
            "boundary_quantile": self.boundary_quantile,
            "theta_sim": self.theta_sim,
            "theta_keep": self.theta_keep,
            "min_support": self.min_support,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BuildConfig":
        return cls(**{k: data[k] for k in cls.__dataclass_fields__ if k in data})


class EmptyDomainError(ValueError):
    """Pruning removed every word of a cluster."""


@dataclass
class SegmentCluster:
    ids: list[str] = field(default_factory=list)
    segments: list[ThematicSegment] = field(default_factory=list)
    vector: Counter = field(default_factory=Counter)

    def absorb(self, segment: ThematicSegment) -> None:
        self.ids.append(segment.uid)
        self.segments.append(segment)
        self.vector.update(segment.content_lemmas)


def _cosine(a: Counter, b: Counter) -> float:
    if not a or not b:
        return 0.0
    if len(b) < len(a):
        a, b = b, a
    dot = sum(count * b[lemma] for lemma, count in a.items())
    if dot == 0:
        return 0.0
    norm_a = math.sqrt(sum(c * c for c in a.values()))
    norm_b = math.sqrt(sum(c * c for c in b.values()))
    return dot / (norm_a * norm_b)


def aggregate_segments(segments: Iterable[ThematicSegment],
                       theta_sim: float) -> list[SegmentCluster]:
    """Greedy incremental clustering; clusters partition the segments."""
    if not 0.0 <= theta_sim <= 1.0:
        raise ValueError("theta_sim must be in [0, 1]")
    clusters: list[SegmentCluster] = []
    for segment in segments:
        best = None
        best_sim = -1.0
        for cluster in clusters:
            sim = _cosine(segment.content_lemmas, cluster.vector)
            if sim > best_sim:
                best, best_sim = cluster, sim
        if best is not None and best_sim >= theta_sim:
            best.absorb(segment)
        else:
            cluster = SegmentCluster()
            cluster.absorb(segment)
            clusters.append(cluster)
    return clusters


def _domain_name(kept: dict[Lemma, float]) -> str:
    by_weight = sorted(kept.items(), key=lambda kv: (-kv[1], kv[0].text))
    verbs = [l for l, _ in by_weight if l.pos is POS.VERB]
    fill = [l for l, _ in by_weight if l.pos is not POS.VERB]
    return "".join(l.text.capitalize() for l in (verbs + fill)[:2])


def distill_domain(cluster: SegmentCluster, theta_keep: float,
                   min_support: int, domain_id: str = "D001") -> Domain:
    """Reduce a cluster to a domain.

    Word weight is the lemma's total frequency across the cluster,
    normalized by the cluster maximum; a lemma is kept when its weight
    reaches ``theta_keep`` and it occurs in at least ``min_support``
    distinct segments. Structures group the cluster's triples by
    (verb, link), restricted to kept nouns; a structure also needs its
    verb kept.
    """
    if not cluster.segments:
        raise ValueError("cluster is empty")
    freq: Counter = Counter()
    support: Counter = Counter()
    for segment in cluster.segments:
        freq.update(segment.content_lemmas)
        support.update(set(segment.content_lemmas))
    if not freq:
        raise EmptyDomainError(f"empty domain (cluster of {cluster.ids})")
    max_freq = max(freq.values())

    kept = {
        lemma: freq[lemma] / max_freq
        for lemma in sorted(freq, key=lambda l: (l.text, l.pos.value))
        if freq[lemma] / max_freq >= theta_keep and support[lemma] >= min_support
    }
    if not kept:
        raise EmptyDomainError(f"empty domain (cluster of {cluster.ids})")

    grouped: dict[tuple[Lemma, SyntacticLink], dict[Lemma, float]] = {}
    for segment in cluster.segments:
        for triple in segment.triples:
            if triple.verb not in kept or triple.noun not in kept:
                continue
            nouns = grouped.setdefault((triple.verb, triple.link), {})
            nouns[triple.noun] = kept[triple.noun]
    structures = [
        Structure(verb=v, link=link, noun_class=dict(sorted(
            nouns.items(), key=lambda kv: kv[0].text)))
        for (v, link), nouns in sorted(grouped.items(),
                                       key=lambda kv: (kv[0][0].text, str(kv[0][1])))
    ]

    return Domain(id=domain_id, name=_domain_name(kept), words=kept,
                  structures=structures, segment_ids=tuple(cluster.ids))


class DomainBase:
    """An immutable collection of domains plus an inverted lemma index."""

    def __init__(self, domains: Sequence[Domain], config: BuildConfig,
                 empty_warning: bool = False):
        self.domains = list(domains)
        self.config = config
        self.empty_warning = empty_warning
        self.lemma_index: dict[Lemma, set[str]] = {}
        self._by_id: dict[str, Domain] = {}
        for domain in self.domains:
            if domain.id in self._by_id:
                raise ValueError(f"duplicate domain id {domain.id}")
            self._by_id[domain.id] = domain
            for lemma in domain.words:
                self.lemma_index.setdefault(lemma, set()).add(domain.id)

    def __len__(self) -> int:
        return len(self.domains)

    def get(self, domain_id: str) -> Domain | None:
        return self._by_id.get(domain_id)

    def __getitem__(self, domain_id: str) -> Domain:
        return self._by_id[domain_id]

    def to_json_dict(self) -> dict:
        return {
            "config": self.config.to_json_dict(),
            "domains": [
                {
                    "id": d.id,
                    "name": d.name,
                    "words": {str(l): w for l, w in d.words.items()},
                    "structures": [
                        {
                            "verb": s.verb.text,
                            "link": str(s.link),
                            "nouns": {l.text: w for l, w in s.noun_class.items()},
                        }
                        for s in d.structures
                    ],
                    "segments": list(d.segment_ids),
                }
                for d in self.domains
            ],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), ensure_ascii=False,
                          sort_keys=True, indent=2) + "\n"

    def save(self, path: str | Path) -> None:
        Path(path).write_text(self.dumps(), encoding="utf-8")

    @classmethod
    def from_json_dict(cls, data: dict) -> "DomainBase":
        config = BuildConfig.from_json_dict(data.get("config", {}))
        domains = []
        for entry in data["domains"]:
            words = {Lemma.parse(k): float(w) for k, w in entry["words"].items()}
            structures = [
                Structure(
                    verb=Lemma(s["verb"], POS.VERB),
                    link=SyntacticLink.parse(s["link"]),
                    noun_class={Lemma(n, POS.NOUN): float(w)
                                for n, w in s["nouns"].items()},
                )
                for s in entry.get("structures", [])
            ]
            domains.append(Domain(id=entry["id"], name=entry["name"],
                                  words=words, structures=structures,
                                  segment_ids=tuple(entry.get("segments", ()))))
        return cls(domains, config)

    @classmethod
    def load(cls, path: str | Path) -> "DomainBase":
        with open(path, encoding="utf-8") as fh:
            return cls.from_json_dict(json.load(fh))


def build_domain_base(corpus: Sequence[Document],
                      config: BuildConfig = BuildConfig()) -> DomainBase:
    """Segment every document, cluster the segments, distill the clusters.

    Clusters emptied by pruning are discarded (and logged); an all-
    discarded build returns an empty base with ``empty_warning`` set.
    """
    if not corpus:
        raise ValueError("corpus is empty")
    segments: list[ThematicSegment] = []
    seg_params = config.segmentation()
    for doc_index, doc in enumerate(corpus):
        segments.extend(segment_text(doc, seg_params, doc_index=doc_index))

    clusters = aggregate_segments(segments, config.theta_sim)

    domains: list[Domain] = []
    discarded = 0
    for cluster in clusters:
        try:
            domains.append(distill_domain(cluster, config.theta_keep,
                                          config.min_support,
                                          domain_id=f"D{len(domains) + 1:03d}"))
        except EmptyDomainError:
            discarded += 1
            log.info("discarding empty cluster of segments %s", cluster.ids)

    if discarded:
        log.info("discarded %d of %d clusters", discarded, len(clusters))
    return DomainBase(domains, config,
                      empty_warning=not domains)
