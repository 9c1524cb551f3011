"""lexigap: retrieve a word stuck on the tip of your tongue.

Builds topical domains (weighted words plus verb-link-noun structures)
from a lemmatized corpus, combines them with a typed paradigmatic
lexicon and a phonological form index, and ranks candidates for a gap
described by its context and optional hints.
"""

__version__ = "0.1.0"

from lexigap.cloze import (ClozeInstance, Metrics, QueryTemplate, evaluate,
                           make_cloze, make_cloze_from_list, segment_report)
from lexigap.corpus import (CorpusFormatError, SegmentationParams,
                            format_corpus, parse_corpus, segment_text)
from lexigap.domains import (BuildConfig, Domain, DomainBase, Structure,
                             aggregate_segments, build_domain_base,
                             distill_domain)
from lexigap.lexicon import (LinkType, ParadigmaticLexicon, load_lexicon)
from lexigap.phono import (PhonoIndex, build_phono_index,
                           load_pronunciations, similar_forms)
from lexigap.resolver import (Candidate, DomainSelection, Mode, Query,
                              ResolveResult, ScoringWeights, SlotConstraint,
                              candidates_ewn, candidates_svetlan, parse_mode,
                              resolve, score_candidate, select_domains)
from lexigap.types import (DIRECT_OBJECT, POS, SUBJECT, Document, Lemma,
                           LinkKind, SyntacticLink, SyntTriple,
                           ThematicSegment, Token, adj, noun, verb)

__all__ = [
    "__version__",
    "POS", "Lemma", "LinkKind", "SyntacticLink", "SyntTriple", "Token",
    "Document", "ThematicSegment", "SUBJECT", "DIRECT_OBJECT",
    "noun", "verb", "adj",
    "CorpusFormatError", "SegmentationParams", "parse_corpus",
    "format_corpus", "segment_text",
    "BuildConfig", "Domain", "DomainBase", "Structure",
    "aggregate_segments", "build_domain_base", "distill_domain",
    "LinkType", "ParadigmaticLexicon", "load_lexicon",
    "PhonoIndex", "build_phono_index", "load_pronunciations",
    "similar_forms",
    "Mode", "Query", "Candidate", "DomainSelection", "ResolveResult",
    "ScoringWeights", "SlotConstraint", "parse_mode", "resolve",
    "score_candidate", "select_domains", "candidates_svetlan",
    "candidates_ewn",
    "ClozeInstance", "Metrics", "QueryTemplate", "make_cloze",
    "make_cloze_from_list", "evaluate", "segment_report",
]
