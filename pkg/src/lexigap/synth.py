"""Seeded synthetic corpora with planted topics.

Each topic gets a disjoint vocabulary (35 nouns, 20 verbs, 5
adjectives) and a fixed triple inventory. Every sentence of a topic
repeats the topic's three anchor nouns twice, realizes one triple, and
walks a round-robin cycle over the rest of the vocabulary. The anchors
carry enough of every segment's vector mass that all of a topic's
segments cluster together even when segmentation fragments a document,
while the cycle keeps every vocabulary item frequent enough to survive
distillation. Used by the evaluation suite (ground truth known by
construction).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import chain, zip_longest

from lexigap.types import (DIRECT_OBJECT, SUBJECT, Document, Lemma,
                           SyntacticLink, SyntTriple, Token, adj, noun, verb)

# per topic: 35 nouns + 20 verbs + 5 adjectives = 60 lemmas
NOUNS_PER_TOPIC = 35
VERBS_PER_TOPIC = 20
ADJS_PER_TOPIC = 5

ANCHORS_PER_TOPIC = 3     # nouns repeated in every sentence
ANCHOR_REPEATS = 2        # occurrences of each anchor per sentence
CYCLE_PER_SENTENCE = 13   # rotating vocabulary slots per sentence

_LINK_CYCLE = [DIRECT_OBJECT, SUBJECT, SyntacticLink.prep("de"),
               DIRECT_OBJECT, SyntacticLink.prep("dans")]

_FILLERS = ["le", "la", "un", "et", "que", "est"]


@dataclass
class TopicSpec:
    index: int
    nouns: list[Lemma]
    verbs: list[Lemma]
    adjs: list[Lemma]
    triples: list[SyntTriple]

    @property
    def anchors(self) -> list[Lemma]:
        return self.nouns[:ANCHORS_PER_TOPIC]

    @property
    def vocabulary(self) -> set[Lemma]:
        return set(self.nouns) | set(self.verbs) | set(self.adjs)

    def lemma_cycle(self) -> list[Lemma]:
        """Non-anchor vocabulary, nouns/verbs/adjectives interleaved."""
        mixed = chain.from_iterable(zip_longest(self.nouns[ANCHORS_PER_TOPIC:],
                                                self.verbs, self.adjs))
        return [l for l in mixed if l is not None]


@dataclass
class PlantedCorpus:
    documents: list[Document]
    topics: list[TopicSpec]
    doc_topic: list[int]

    def vocabulary(self) -> set[Lemma]:
        out: set[Lemma] = set()
        for topic in self.topics:
            out |= topic.vocabulary
        return out


def _make_topic(index: int, triples_per_topic: int) -> TopicSpec:
    nouns = [noun(f"t{index}nom{i:02d}") for i in range(NOUNS_PER_TOPIC)]
    verbs = [verb(f"t{index}ver{i:02d}") for i in range(VERBS_PER_TOPIC)]
    adjs = [adj(f"t{index}adj{i:02d}") for i in range(ADJS_PER_TOPIC)]
    triples = [
        SyntTriple(verb=verbs[i % len(verbs)],
                   link=_LINK_CYCLE[i % len(_LINK_CYCLE)],
                   noun=nouns[(i * 3) % len(nouns)])
        for i in range(triples_per_topic)
    ]
    return TopicSpec(index, nouns, verbs, adjs, triples)


def _make_document(topic: TopicSpec, doc_no: int, sentences: int,
                   seed: int) -> Document:
    rng = random.Random(f"{seed}:{topic.index}:{doc_no}")
    cycle = topic.lemma_cycle()
    offset = rng.randrange(len(cycle))

    tokens: list[Token] = []
    triples: dict[int, list[SyntTriple]] = {}
    position = 0
    sentence = 0

    def push(surface: str, lemma: Lemma | None):
        nonlocal position
        tokens.append(Token(surface=surface, lemma=lemma,
                            sentence_index=sentence, position=position))
        position += 1

    for sentence in range(sentences):
        triple = topic.triples[(doc_no * 7 + sentence) % len(topic.triples)]
        rotating = [cycle[(offset + i) % len(cycle)]
                    for i in range(CYCLE_PER_SENTENCE)]
        offset = (offset + CYCLE_PER_SENTENCE) % len(cycle)

        content = (list(topic.anchors) * ANCHOR_REPEATS
                   + [triple.verb, triple.noun] + rotating)
        rng.shuffle(content)

        push(rng.choice(_FILLERS), None)
        for lemma in content:
            push(lemma.text, lemma)
        push(rng.choice(_FILLERS), None)
        triples.setdefault(sentence, []).append(triple)

    return Document(tokens=tokens, triples=triples)


def make_planted_corpus(topics: int = 4, triples_per_topic: int = 40,
                        docs_per_topic: int = 20, sentences_per_doc: int = 25,
                        seed: int = 0) -> PlantedCorpus:
    """Build a corpus of ``topics`` disjoint planted topics.

    Deterministic for a given argument tuple. Documents are interleaved
    round-robin over topics, mimicking a feed of mixed dispatches.
    """
    if topics < 1 or docs_per_topic < 1:
        raise ValueError("need at least one topic and one document per topic")
    specs = [_make_topic(t, triples_per_topic) for t in range(topics)]
    documents: list[Document] = []
    doc_topic: list[int] = []
    for doc_no in range(docs_per_topic):
        for spec in specs:
            documents.append(_make_document(spec, doc_no, sentences_per_doc,
                                            seed))
            doc_topic.append(spec.index)
    return PlantedCorpus(documents=documents, topics=specs,
                         doc_topic=doc_topic)
