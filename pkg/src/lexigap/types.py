"""Core lexical types shared across the package.

A :class:`Lemma` (normalized content word + part of speech) is the atomic
unit everywhere: segments count lemmas, domains weight them, queries and
candidates carry them. Keeping it a small frozen dataclass makes equality
and hashing cheap and the wire form (``text:POS``) trivial.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field


class POS(enum.Enum):
    NOUN = "N"
    VERB = "V"
    ADJ = "ADJ"

    @classmethod
    def parse(cls, tag: str) -> "POS":
        try:
            return _POS_ALIASES[tag.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown part-of-speech tag {tag!r}") from None


_POS_ALIASES = {
    "N": POS.NOUN, "NOUN": POS.NOUN,
    "V": POS.VERB, "VERB": POS.VERB,
    "ADJ": POS.ADJ, "A": POS.ADJ, "ADJECTIVE": POS.ADJ,
}

# Separators claimed by the corpus and wire formats; a lemma containing one
# could not round-trip through them.
_RESERVED_CHARS = set("|:\t")


@dataclass(frozen=True, slots=True)
class Lemma:
    """A lowercase normalized content word with its part of speech."""

    text: str
    pos: POS

    def __post_init__(self):
        if not self.text:
            raise ValueError("lemma text must be non-empty")
        if any(c.isspace() or c in _RESERVED_CHARS for c in self.text):
            raise ValueError(f"lemma text {self.text!r} contains whitespace "
                             "or a reserved separator")
        if not self.text.islower() and self.text.lower() != self.text:
            object.__setattr__(self, "text", self.text.lower())

    @classmethod
    def parse(cls, token: str) -> "Lemma":
        """Parse the wire form ``text:POS``, e.g. ``loi:N``."""
        text, sep, tag = token.strip().rpartition(":")
        if not sep or not text:
            raise ValueError(f"expected 'text:POS', got {token!r}")
        return cls(text, POS.parse(tag))

    def __str__(self) -> str:
        return f"{self.text}:{self.pos.value}"


def noun(text: str) -> Lemma:
    return Lemma(text, POS.NOUN)


def verb(text: str) -> Lemma:
    return Lemma(text, POS.VERB)


def adj(text: str) -> Lemma:
    return Lemma(text, POS.ADJ)


class LinkKind(enum.Enum):
    SUBJECT = "subj"
    DIRECT_OBJECT = "cod"
    PREP = "prep"


@dataclass(frozen=True, slots=True)
class SyntacticLink:
    """Grammatical link between a verb and a noun: subject, direct object,
    or a specific preposition."""

    kind: LinkKind
    preposition: str | None = None

    def __post_init__(self):
        if self.kind is LinkKind.PREP:
            if not self.preposition:
                raise ValueError("prepositional link needs a preposition")
            object.__setattr__(self, "preposition", self.preposition.lower())
        elif self.preposition is not None:
            raise ValueError(f"{self.kind.value} link carries no preposition")

    @classmethod
    def subject(cls) -> "SyntacticLink":
        return cls(LinkKind.SUBJECT)

    @classmethod
    def direct_object(cls) -> "SyntacticLink":
        return cls(LinkKind.DIRECT_OBJECT)

    @classmethod
    def prep(cls, preposition: str) -> "SyntacticLink":
        return cls(LinkKind.PREP, preposition)

    @classmethod
    def parse(cls, text: str) -> "SyntacticLink":
        """Parse the wire form: ``subj``, ``cod`` or ``prep:<p>``."""
        text = text.strip()
        if text == "subj":
            return cls.subject()
        if text == "cod":
            return cls.direct_object()
        if text.startswith("prep:"):
            return cls.prep(text[len("prep:"):])
        raise ValueError(f"unknown syntactic link {text!r}")

    def __str__(self) -> str:
        if self.kind is LinkKind.PREP:
            return f"prep:{self.preposition}"
        return self.kind.value


SUBJECT = SyntacticLink.subject()
DIRECT_OBJECT = SyntacticLink.direct_object()


@dataclass(frozen=True, slots=True)
class SyntTriple:
    """A (verb, link, noun) co-occurrence extracted from text."""

    verb: Lemma
    link: SyntacticLink
    noun: Lemma

    def __post_init__(self):
        if self.verb.pos is not POS.VERB:
            raise ValueError(f"triple verb {self.verb} is not a verb")
        if self.noun.pos is not POS.NOUN:
            raise ValueError(f"triple noun {self.noun} is not a noun")

    def __str__(self) -> str:
        return f"({self.verb.text}, {self.link}, {self.noun.text})"


@dataclass(frozen=True, slots=True)
class Token:
    """One corpus token. Function words carry no lemma; prepositions are
    flagged so the triple heuristic can see them."""

    surface: str
    lemma: Lemma | None
    sentence_index: int
    position: int
    is_preposition: bool = False


@dataclass
class Document:
    """A tokenized document plus optional precomputed triple annotations
    keyed by sentence index."""

    tokens: list[Token] = field(default_factory=list)
    triples: dict[int, list[SyntTriple]] = field(default_factory=dict)

    def __post_init__(self):
        last = -1
        for tok in self.tokens:
            if tok.position <= last:
                raise ValueError("token positions must strictly increase")
            last = tok.position

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def has_annotations(self) -> bool:
        return bool(self.triples)

    def content_lemmas(self) -> list[Lemma]:
        return [t.lemma for t in self.tokens if t.lemma is not None]

    def distinct_lemmas(self) -> set[Lemma]:
        return set(self.content_lemmas())


@dataclass
class ThematicSegment:
    """A topically coherent span of a document.

    ``token_range`` is a half-open interval over token positions; ids are
    1-based per document and rendered as ST1, ST2, ... (``label``). The
    corpus-wide ``uid`` prefixes the document index.
    """

    id: int
    token_range: tuple[int, int]
    content_lemmas: Counter = field(default_factory=Counter)
    triples: list[SyntTriple] = field(default_factory=list)
    doc_index: int = 0

    @property
    def label(self) -> str:
        return f"ST{self.id}"

    @property
    def uid(self) -> str:
        return f"d{self.doc_index}.{self.label}"

    def __len__(self) -> int:
        start, stop = self.token_range
        return stop - start
