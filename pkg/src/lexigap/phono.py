"""Approximate-form lookup for phonological hints.

Each lemma is indexed under one form: its pronunciation when a
pronunciation table provides one, else its spelling. Lookup pools lemmas
that share a prefix with the hint or sit within a bounded
Damerau-Levenshtein distance of it, then ranks by normalized similarity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import IO, Iterable

from lexigap._kernels import damerau_levenshtein, damerau_levenshtein_many
from lexigap.types import POS, Lemma

DEFAULT_PREFIX_LEN = 2
DEFAULT_MIN_PREFIX = 2
DEFAULT_MAX_DIST = 3


@dataclass
class PhonoIndex:
    forms: dict[Lemma, str] = field(default_factory=dict)
    prefix_buckets: dict[str, set[Lemma]] = field(default_factory=dict)
    prefix_len: int = DEFAULT_PREFIX_LEN

    def __len__(self) -> int:
        return len(self.forms)


def build_phono_index(lexemes: Iterable[Lemma],
                      pronunciations: dict[Lemma, str] | None = None,
                      k: int = DEFAULT_PREFIX_LEN) -> PhonoIndex:
    """Index lemmas by form; ``k`` is the bucket prefix length."""
    if k < 1:
        raise ValueError("prefix length k must be >= 1")
    pronunciations = pronunciations or {}
    index = PhonoIndex(prefix_len=k)
    for lemma in lexemes:
        form = pronunciations.get(lemma, lemma.text)
        index.forms[lemma] = form
        index.prefix_buckets.setdefault(form[:k], set()).add(lemma)
    return index


def load_pronunciations(source: str | IO[str] | Iterable[str],
                        pos: POS | None = None) -> dict[Lemma, str]:
    """Parse a ``lemma<TAB>phonemes`` table.

    Lemma fields may carry a ``:POS`` suffix; bare fields use ``pos``
    (all three parts of speech when ``pos`` is None).
    """
    if isinstance(source, str):
        lines: Iterable[str] = source.splitlines()
    else:
        lines = source
    table: dict[Lemma, str] = {}
    for line_no, raw in enumerate(lines, start=1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 2 or not parts[0] or not parts[1]:
            raise ValueError(f"line {line_no}: expected 'lemma<TAB>phonemes', got {line!r}")
        word, phonemes = parts[0].strip(), parts[1].strip()
        if ":" in word:
            table[Lemma.parse(word)] = phonemes
        elif pos is not None:
            table[Lemma(word, pos)] = phonemes
        else:
            for p in POS:
                table[Lemma(word, p)] = phonemes
    return table


def similar_forms(index: PhonoIndex, hint: str,
                  max_dist: int = DEFAULT_MAX_DIST,
                  min_prefix: int = DEFAULT_MIN_PREFIX,
                  pos_filter: POS | None = None) -> list[tuple[Lemma, float]]:
    """Lemmas whose form resembles ``hint``, best first.

    The candidate pool is the union of lemmas sharing at least
    ``min_prefix`` leading characters with the hint and lemmas within
    ``max_dist`` edits of it. Similarity is 1 - dist/max(len); zero-
    similarity results are dropped, ties break alphabetically.
    """
    if not hint:
        raise ValueError("hint must be non-empty")
    hint = hint.lower()

    lemmas = list(index.forms)
    if not lemmas:
        return []
    distances = damerau_levenshtein_many(hint, [index.forms[l] for l in lemmas])

    hint_prefix = hint[:min_prefix]
    results = []
    for lemma, dist in zip(lemmas, distances):
        form = index.forms[lemma]
        in_prefix_pool = (len(hint) >= min_prefix and len(form) >= min_prefix
                          and form[:min_prefix] == hint_prefix)
        if not in_prefix_pool and dist > max_dist:
            continue
        if pos_filter is not None and lemma.pos is not pos_filter:
            continue
        similarity = 1.0 - dist / max(len(hint), len(form))
        if similarity > 0.0:
            results.append((lemma, similarity))
    results.sort(key=lambda r: (-r[1], r[0].text, r[0].pos.value))
    return results
