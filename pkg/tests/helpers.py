"""Randomized construction of bases, lexicons and queries for
property-style tests. Everything takes an explicit random.Random so
failures reproduce."""

from __future__ import annotations

import random

from lexigap.domains import BuildConfig, Domain, DomainBase, Structure
from lexigap.lexicon import LinkType, ParadigmaticLexicon
from lexigap.resolver import Mode, Query
from lexigap.types import POS, Lemma, SyntacticLink, noun, verb

LINKS = [SyntacticLink.subject(), SyntacticLink.direct_object(),
         SyntacticLink.prep("de"), SyntacticLink.prep("dans")]


def word_pool(size: int) -> list[Lemma]:
    out = []
    for i in range(size):
        pos = (POS.NOUN, POS.VERB, POS.ADJ)[i % 3]
        out.append(Lemma(f"w{i:03d}", pos))
    return out


def random_domain(rng: random.Random, domain_id: str, pool: list[Lemma],
                  max_lemmas: int) -> Domain:
    count = rng.randint(2, max_lemmas)
    words = {l: round(rng.uniform(0.1, 1.0), 3)
             for l in rng.sample(pool, count)}
    verbs = [l for l in words if l.pos is POS.VERB]
    nouns = [l for l in words if l.pos is POS.NOUN]
    structures = []
    if verbs and nouns:
        for _ in range(rng.randint(0, 4)):
            v = rng.choice(verbs)
            ns = rng.sample(nouns, rng.randint(1, min(3, len(nouns))))
            structures.append(Structure(
                verb=v, link=rng.choice(LINKS),
                noun_class={n: words[n] for n in ns}))
    return Domain(id=domain_id, name=f"Dom{domain_id}", words=words,
                  structures=structures)


def random_base(rng: random.Random, max_domains: int = 20,
                max_lemmas: int = 50, pool_size: int = 120) -> DomainBase:
    pool = word_pool(pool_size)
    n = rng.randint(1, max_domains)
    domains = [random_domain(rng, f"D{i + 1:03d}", pool, max_lemmas)
               for i in range(n)]
    return DomainBase(domains, BuildConfig())


def random_lexicon(rng: random.Random, pool_size: int = 120,
                   edges: int = 60) -> ParadigmaticLexicon:
    pool = word_pool(pool_size)
    lexicon = ParadigmaticLexicon()
    for _ in range(edges):
        a, b = rng.sample(pool, 2)
        lexicon.add(a.text, rng.choice(list(LinkType)), b.text)
    return lexicon


def random_context(rng: random.Random, base: DomainBase,
                   max_len: int = 6) -> tuple[Lemma, ...]:
    pool = word_pool(120)
    in_base = sorted({l for d in base.domains for l in d.words},
                     key=lambda l: (l.text, l.pos.value))
    picks = []
    for _ in range(rng.randint(1, max_len)):
        if in_base and rng.random() < 0.8:
            picks.append(rng.choice(in_base))
        else:
            picks.append(rng.choice(pool))
    return tuple(picks)


def random_query(rng: random.Random, base: DomainBase) -> Query:
    mode = rng.choice(list(Mode))
    return Query(
        context=random_context(rng, base),
        pos_filter=rng.choice([None, POS.NOUN, POS.VERB]),
        mode=mode,
        structure_restricted=rng.random() < 0.5,
        coverage_threshold=rng.choice([0.25, 0.5, 0.75, 1.0]),
    )
