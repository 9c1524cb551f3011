"""Loading of the resolver's three resources (domain base, paradigmatic
lexicon, phonological index) from files, shared by the CLI and the HTTP
service."""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from lexigap.domains import DomainBase
from lexigap.lexicon import ParadigmaticLexicon, load_lexicon
from lexigap.phono import PhonoIndex, build_phono_index, load_pronunciations
from lexigap.types import POS, Lemma


class ResourceError(Exception):
    """A resource file is missing or does not parse."""


@dataclass
class Resources:
    base: DomainBase
    lexicon: ParadigmaticLexicon
    phono: PhonoIndex


def phono_lexemes(base: DomainBase,
                  lexicon: ParadigmaticLexicon) -> list[Lemma]:
    """Everything the resolver might rank: domain words plus lexicon
    entries. Lexicon entries carry no POS, so each text is indexed under
    all three (the resolver matches phonological hits by text)."""
    lexemes: set[Lemma] = set()
    for domain in base.domains:
        lexemes.update(domain.words)
    for text in lexicon.entries:
        for pos in POS:
            lexemes.add(Lemma(text, pos))
    return sorted(lexemes, key=lambda l: (l.text, l.pos.value))


def load_resources(base_path: str | Path,
                   lexicon_path: str | Path | None = None,
                   pronunciation_path: str | Path | None = None) -> Resources:
    try:
        base = DomainBase.load(base_path)
    except FileNotFoundError:
        raise ResourceError(f"base file not found: {base_path}") from None
    except (ValueError, KeyError) as exc:
        raise ResourceError(f"bad base file {base_path}: {exc}") from None

    lexicon = ParadigmaticLexicon()
    if lexicon_path is not None:
        try:
            with open(lexicon_path, encoding="utf-8") as fh:
                lexicon = load_lexicon(fh)
        except FileNotFoundError:
            raise ResourceError(
                f"lexicon file not found: {lexicon_path}") from None
        except ValueError as exc:
            raise ResourceError(
                f"bad lexicon file {lexicon_path}: {exc}") from None

    pronunciations = None
    if pronunciation_path is not None:
        try:
            with open(pronunciation_path, encoding="utf-8") as fh:
                pronunciations = load_pronunciations(fh)
        except FileNotFoundError:
            raise ResourceError(
                f"pronunciation file not found: {pronunciation_path}") from None
        except ValueError as exc:
            raise ResourceError(
                f"bad pronunciation file {pronunciation_path}: {exc}") from None

    phono = build_phono_index(phono_lexemes(base, lexicon), pronunciations)
    return Resources(base=base, lexicon=lexicon, phono=phono)
