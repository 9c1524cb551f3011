"""Typed paradigmatic lexicon: load, inverse-close, and walk.

File format (UTF-8, tab-separated)::

    lemma<TAB>linktype<TAB>lemma

with linktype one of syn, hyper, hypo, anto, mero, holo; ``#`` starts a
comment line. The file carries no part of speech, so the lexicon is keyed
by lemma text; :meth:`ParadigmaticLexicon.neighbors` projects the query
lemma's POS onto the results (paradigmatic links preserve category).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import IO, Iterable

from lexigap.types import Lemma


class LinkType(enum.Enum):
    SYNONYM = "syn"
    HYPERNYM = "hyper"
    HYPONYM = "hypo"
    ANTONYM = "anto"
    MERONYM = "mero"
    HOLONYM = "holo"

    @classmethod
    def parse(cls, name: str) -> "LinkType":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown link type {name!r}") from None

    @property
    def inverse(self) -> "LinkType":
        return _INVERSES[self]


_INVERSES = {
    LinkType.SYNONYM: LinkType.SYNONYM,
    LinkType.ANTONYM: LinkType.ANTONYM,
    LinkType.HYPERNYM: LinkType.HYPONYM,
    LinkType.HYPONYM: LinkType.HYPERNYM,
    LinkType.MERONYM: LinkType.HOLONYM,
    LinkType.HOLONYM: LinkType.MERONYM,
}

DEFAULT_EXPANSION_TYPES = frozenset(
    {LinkType.SYNONYM, LinkType.HYPERNYM, LinkType.HYPONYM})


class LexiconFormatError(ValueError):
    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


@dataclass
class ParadigmaticLexicon:
    """Lemma-text → set of (link type, lemma-text), closed under inverses."""

    entries: dict[str, set[tuple[LinkType, str]]] = field(default_factory=dict)

    def add(self, source: str, link: LinkType, target: str) -> None:
        """Add a link and its inverse. Self-loops are dropped."""
        if source == target:
            return
        self.entries.setdefault(source, set()).add((link, target))
        self.entries.setdefault(target, set()).add((link.inverse, source))

    @property
    def variant_count(self) -> int:
        return sum(1 for links in self.entries.values() if links)

    def links_of(self, text: str) -> set[tuple[LinkType, str]]:
        return self.entries.get(text, set())

    def neighbors(self, lemma: Lemma,
                  allowed: Iterable[LinkType] = DEFAULT_EXPANSION_TYPES,
                  depth: int = 1) -> list[tuple[Lemma, tuple[LinkType, ...]]]:
        """Breadth-first closure over ``allowed`` links up to ``depth`` hops.

        The start lemma is excluded; each result carries one shortest
        path's link sequence. Results inherit the query lemma's POS and
        are ordered by (path length, lemma text).
        """
        if depth < 0:
            raise ValueError("depth must be >= 0")
        allowed = set(allowed)
        paths: dict[str, tuple[LinkType, ...]] = {lemma.text: ()}
        frontier = deque([lemma.text])
        for _ in range(depth):
            if not frontier:
                break
            next_frontier: deque[str] = deque()
            for text in sorted(frontier):
                base_path = paths[text]
                for link, target in sorted(self.links_of(text),
                                           key=lambda lt: (lt[0].value, lt[1])):
                    if link in allowed and target not in paths:
                        paths[target] = base_path + (link,)
                        next_frontier.append(target)
            frontier = next_frontier
        del paths[lemma.text]
        results = [(Lemma(text, lemma.pos), path) for text, path in paths.items()]
        results.sort(key=lambda r: (len(r[1]), r[0].text))
        return results


def load_lexicon(source: str | IO[str] | Iterable[str]) -> ParadigmaticLexicon:
    """Parse a lexicon stream; inverse links are added automatically."""
    if isinstance(source, str):
        lines: Iterable[str] = source.splitlines()
    else:
        lines = source

    lexicon = ParadigmaticLexicon()
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise LexiconFormatError(line_no, f"expected 'lemma<TAB>type<TAB>lemma', got {line!r}")
        source_text, type_name, target_text = (p.strip() for p in parts)
        if not source_text or not target_text:
            raise LexiconFormatError(line_no, "empty lemma field")
        try:
            link = LinkType.parse(type_name)
        except ValueError as exc:
            raise LexiconFormatError(line_no, str(exc)) from None
        lexicon.add(source_text.lower(), link, target_text.lower())
    return lexicon
