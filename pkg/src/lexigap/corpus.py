"""Corpus parsing, thematic segmentation, and verb-noun triple extraction.

Corpus format (UTF-8, one token per line)::

    surface|POS|lemma

POS is N, V or ADJ for content words (lemma required), F for function
words (lemma field ``-``). Any other tag is accepted only with lemma
``-``, i.e. as a function word; the tags P/PRE/PREP additionally mark the
token as a preposition, which the triple heuristic relies on. A blank
line separates documents, ``#S`` marks a sentence boundary, and
``#T verb|link|noun`` attaches a precomputed triple (link: ``subj``,
``cod`` or ``prep:<p>``) to the current sentence.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import IO, Iterable

from lexigap.types import (POS, Document, Lemma, SyntacticLink, SyntTriple,
                           ThematicSegment, Token)

CONTENT_TAGS = {"N": POS.NOUN, "V": POS.VERB, "ADJ": POS.ADJ}
PREPOSITION_TAGS = {"P", "PRE", "PREP"}


class CorpusFormatError(ValueError):
    """A corpus line that cannot be parsed; carries its 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_corpus(source: str | IO[str] | Iterable[str]) -> list[Document]:
    """Parse a corpus stream into documents.

    ``source`` may be a string, an open text file, or any iterable of
    lines. Raises :class:`CorpusFormatError` on malformed records.
    """
    if isinstance(source, str):
        lines: Iterable[str] = source.splitlines()
    else:
        lines = source

    docs: list[Document] = []
    tokens: list[Token] = []
    triples: dict[int, list[SyntTriple]] = {}
    sentence = 0
    position = 0

    def flush():
        nonlocal tokens, triples, sentence, position
        if tokens or triples:
            docs.append(Document(tokens=tokens, triples=triples))
        tokens, triples = [], {}
        sentence = position = 0

    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip():
            flush()
            continue
        if line.startswith("#"):
            if line.strip() == "#S":
                sentence += 1
                continue
            if line.startswith("#T"):
                body = line[2:].strip()
                parts = body.split("|")
                if len(parts) != 3:
                    raise CorpusFormatError(line_no, f"bad triple record {body!r}")
                try:
                    triple = SyntTriple(Lemma(parts[0], POS.VERB),
                                        SyntacticLink.parse(parts[1]),
                                        Lemma(parts[2], POS.NOUN))
                except ValueError as exc:
                    raise CorpusFormatError(line_no, str(exc)) from None
                triples.setdefault(sentence, []).append(triple)
                continue
            raise CorpusFormatError(line_no, f"unknown directive {line.split()[0]!r}")

        parts = line.split("|")
        if len(parts) != 3 or not parts[0]:
            raise CorpusFormatError(line_no, f"expected 'surface|POS|lemma', got {line!r}")
        surface, tag, lemma_field = parts
        tag = tag.strip()
        lemma: Lemma | None
        if tag in CONTENT_TAGS:
            if lemma_field in ("", "-"):
                raise CorpusFormatError(line_no, f"content word {surface!r} is missing its lemma")
            try:
                lemma = Lemma(lemma_field, CONTENT_TAGS[tag])
            except ValueError as exc:
                raise CorpusFormatError(line_no, str(exc)) from None
        elif tag == "F" or lemma_field == "-":
            lemma = None
        else:
            raise CorpusFormatError(line_no, f"unknown POS tag {tag!r}")
        tokens.append(Token(surface=surface, lemma=lemma,
                            sentence_index=sentence, position=position,
                            is_preposition=tag in PREPOSITION_TAGS))
        position += 1

    flush()
    return docs


@dataclass(frozen=True)
class SegmentationParams:
    """Knobs for lexical-cohesion segmentation."""

    window: int = 10
    min_segment: int = 15
    boundary_quantile: float = 0.25

    def __post_init__(self):
        if self.window < 1:
            raise ValueError("window must be >= 1")
        if self.min_segment < 1:
            raise ValueError("min_segment must be >= 1")
        if not 0.0 < self.boundary_quantile < 1.0:
            raise ValueError("boundary_quantile must be in (0, 1)")


def _quantile(values: list[float], q: float) -> float:
    s = sorted(values)
    h = (len(s) - 1) * q
    lo = math.floor(h)
    hi = min(lo + 1, len(s) - 1)
    return s[lo] + (h - lo) * (s[hi] - s[lo])


def _cohesion_profile(tokens: list[Token], window: int) -> list[int]:
    """Cohesion at each inter-token gap flanked by full windows: size of
    the intersection of the content-lemma sets of the two windows.

    Gaps closer than ``window`` to either document edge are not boundary
    candidates; a truncated window there would fake a cohesion drop. The
    returned list covers gaps window .. n-window.
    """
    n = len(tokens)
    profile = []
    for g in range(window, n - window + 1):
        left = {t.lemma for t in tokens[g - window:g] if t.lemma}
        right = {t.lemma for t in tokens[g:g + window] if t.lemma}
        profile.append(len(left & right))
    return profile


def segment_text(doc: Document,
                 params: SegmentationParams = SegmentationParams(),
                 doc_index: int = 0) -> list[ThematicSegment]:
    """Split a document into thematic segments.

    Boundaries are placed at local minima of the lexical-cohesion profile
    that fall strictly below the ``boundary_quantile`` quantile, scanning
    left to right and keeping every segment at least ``min_segment``
    tokens long (the trailing segment may be shorter). Only gaps flanked
    by full windows are boundary candidates. Triples are filled per
    segment via :func:`extract_triples`.
    """
    tokens = doc.tokens
    if not tokens:
        raise ValueError("cannot segment an empty document")
    n = len(tokens)

    boundaries: list[int] = []
    if n > params.min_segment:
        profile = _cohesion_profile(tokens, params.window)
        first_gap = params.window
        if profile:
            threshold = _quantile(profile, params.boundary_quantile)
            prev_cut = 0
            for i, v in enumerate(profile):
                left = profile[i - 1] if i >= 1 else math.inf
                right = profile[i + 1] if i + 1 < len(profile) else math.inf
                if v < threshold and v <= left and v <= right:
                    g = first_gap + i
                    if g - prev_cut >= params.min_segment:
                        boundaries.append(g)
                        prev_cut = g

    edges = [0] + boundaries + [n]
    segments = []
    for seg_id, (start, stop) in enumerate(zip(edges, edges[1:]), start=1):
        chunk = tokens[start:stop]
        segment = ThematicSegment(
            id=seg_id,
            token_range=(chunk[0].position, chunk[-1].position + 1),
            content_lemmas=Counter(t.lemma for t in chunk if t.lemma),
            doc_index=doc_index,
        )
        segment.triples = extract_triples(doc, segment)
        segments.append(segment)
    return segments


def _heuristic_sentence_triples(tokens: list[Token]) -> list[SyntTriple]:
    triples = []
    for vi, vtok in enumerate(tokens):
        if vtok.lemma is None or vtok.lemma.pos is not POS.VERB:
            continue
        verb = vtok.lemma
        # subject: nearest preceding content token, if it is a noun
        for prev in reversed(tokens[:vi]):
            if prev.lemma is not None:
                if prev.lemma.pos is POS.NOUN:
                    triples.append(SyntTriple(verb, SyntacticLink.subject(), prev.lemma))
                break
        # objects: scan forward to the next verb
        pending_prep: str | None = None
        first_noun = True
        for nxt in tokens[vi + 1:]:
            if nxt.lemma is not None and nxt.lemma.pos is POS.VERB:
                break
            if nxt.is_preposition:
                pending_prep = nxt.surface.lower()
                continue
            if nxt.lemma is not None and nxt.lemma.pos is POS.NOUN:
                if pending_prep is not None:
                    triples.append(SyntTriple(verb, SyntacticLink.prep(pending_prep), nxt.lemma))
                    pending_prep = None
                elif first_noun:
                    triples.append(SyntTriple(verb, SyntacticLink.direct_object(), nxt.lemma))
                first_noun = False
    return triples


def extract_triples(doc: Document, segment: ThematicSegment,
                    annotations: dict[int, list[SyntTriple]] | None = None) -> list[SyntTriple]:
    """Triples for one segment.

    If the document carries precomputed annotations (any ``#T`` line) they
    are returned verbatim for the segment's sentences; a sentence belongs
    to the segment that holds its first token. Otherwise the heuristic
    extractor runs over the in-segment portion of each sentence: the noun
    immediately preceding a verb is its subject, the first following noun
    with no intervening preposition its direct object, and any noun
    preceded by a preposition gets that prepositional link.
    """
    if annotations is None:
        annotations = doc.triples
    start, stop = segment.token_range

    if annotations:
        first_pos: dict[int, int] = {}
        for tok in doc.tokens:
            first_pos.setdefault(tok.sentence_index, tok.position)
        out = []
        for sentence in sorted(annotations):
            if sentence in first_pos and start <= first_pos[sentence] < stop:
                out.extend(annotations[sentence])
        return out

    by_sentence: dict[int, list[Token]] = {}
    for tok in doc.tokens:
        if start <= tok.position < stop:
            by_sentence.setdefault(tok.sentence_index, []).append(tok)
    out = []
    for sentence in sorted(by_sentence):
        out.extend(_heuristic_sentence_triples(by_sentence[sentence]))
    return out


def format_corpus(docs: Iterable[Document]) -> str:
    """Serialize documents back to corpus text (inverse of parse_corpus)."""
    blocks: list[str] = []
    for doc in docs:
        lines: list[str] = []
        sentence = 0

        def emit_triples(s: int):
            for t in doc.triples.get(s, []):
                lines.append(f"#T {t.verb.text}|{t.link}|{t.noun.text}")

        for tok in doc.tokens:
            while sentence < tok.sentence_index:
                emit_triples(sentence)
                lines.append("#S")
                sentence += 1
            if tok.lemma is not None:
                lines.append(f"{tok.surface}|{tok.lemma.pos.value}|{tok.lemma.text}")
            else:
                tag = "PRE" if tok.is_preposition else "F"
                lines.append(f"{tok.surface}|{tag}|-")
        for s in sorted(k for k in doc.triples if k >= sentence):
            while sentence < s:
                lines.append("#S")
                sentence += 1
            emit_triples(sentence)
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
