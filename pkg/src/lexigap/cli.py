"""Command-line front end: build a domain base from a corpus, resolve a
gap query, run a cloze evaluation, or launch the HTTP service."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from lexigap.cloze import (DEFAULT_POS_POOL, QueryTemplate, evaluate,
                           make_cloze, make_cloze_from_list, segment_report)
from lexigap.corpus import CorpusFormatError, parse_corpus
from lexigap.domains import BuildConfig, build_domain_base
from lexigap.resolver import (DEFAULT_COVERAGE_THRESHOLD, Query,
                              SlotConstraint, parse_mode, resolve)
from lexigap.resources import ResourceError, load_resources
from lexigap.types import POS, Lemma


def _parse_context(text: str) -> list[Lemma]:
    lemmas = []
    for item in text.split(","):
        item = item.strip()
        if item:
            lemmas.append(Lemma.parse(item))
    return lemmas


def _parse_pos_pool(text: str) -> set[POS]:
    return {POS.parse(tag) for tag in text.split(",") if tag.strip()}


def _add_resource_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--base", required=True, help="domain base file (JSON)")
    parser.add_argument("--lexicon", help="paradigmatic lexicon file (TSV)")
    parser.add_argument("--pronunciations",
                        help="optional lemma<TAB>phonemes table")


def cmd_build(args) -> int:
    config = BuildConfig()
    if args.config:
        with open(args.config, encoding="utf-8") as fh:
            config = BuildConfig.from_json_dict(json.load(fh))
    with open(args.corpus, encoding="utf-8") as fh:
        corpus = parse_corpus(fh)
    base = build_domain_base(corpus, config)
    base.save(args.out)
    print(f"domains: {len(base)}")
    for domain in base.domains:
        print(f"{domain.id} {domain.name}: {domain.word_count} words, "
              f"{len(domain.structures)} structures")
    if base.empty_warning:
        print("warning: no cluster survived pruning", file=sys.stderr)
    return 0


def cmd_resolve(args) -> int:
    resources = load_resources(args.base, args.lexicon, args.pronunciations)
    context = _parse_context(args.context)
    if not context:
        raise UsageError("empty --context")
    mode, restricted = parse_mode(args.mode)
    query = Query(
        context=tuple(context),
        pos_filter=POS.parse(args.pos) if args.pos else None,
        slot=SlotConstraint.parse(args.slot) if args.slot else None,
        phono_hint=args.phono,
        mode=mode,
        structure_restricted=restricted,
        coverage_threshold=args.threshold,
    )
    result = resolve(query, resources.base, resources.lexicon, resources.phono)
    for candidate in result[:max(args.top, 0)]:
        summary = "; ".join(e.describe() for e in candidate.provenance)
        print(f"{candidate.lemma}\t{candidate.score:.4f}\t{summary}")
    return 0


def cmd_eval(args) -> int:
    resources = load_resources(args.base, args.lexicon, args.pronunciations)
    with open(args.doc, encoding="utf-8") as fh:
        docs = parse_corpus(fh)
    if not docs:
        raise UsageError(f"no document found in {args.doc}")
    doc = docs[0]

    params = resources.base.config.segmentation()
    if args.removed_list:
        removed = [Lemma.parse(line) for line
                   in Path(args.removed_list).read_text(encoding="utf-8").split()
                   if line.strip()]
        instance = make_cloze_from_list(doc, removed, params)
    else:
        instance = make_cloze(doc, args.n, _parse_pos_pool(args.pos_pool),
                              args.seed, params)

    mode, restricted = parse_mode(args.mode)
    template = QueryTemplate(mode=mode, structure_restricted=restricted,
                             coverage_threshold=args.threshold,
                             per_segment=args.per_segment)

    report = None
    if args.per_segment:
        report = segment_report(instance, template, resources.base,
                                resources.lexicon, resources.phono)
        metrics = report.metrics
    else:
        metrics = evaluate(instance, template, resources.base,
                           resources.lexicon, resources.phono)

    if args.json:
        payload = report.to_json_dict() if report else \
            {"metrics": metrics.to_json_dict()}
        print(json.dumps(payload, ensure_ascii=False, sort_keys=True, indent=2))
        return 0

    note = " (no targets)" if metrics.no_targets else ""
    print(f"recall: {metrics.recall:.4f}{note}")
    print(f"precision: {metrics.precision:.4f}")
    if report:
        print(report.to_tsv(), end="")
    return 0


def cmd_serve(args) -> int:
    from lexigap.service import ServiceConfig, create_app

    config_path = args.config or os.environ.get("LEXIGAP_CONFIG")
    if not config_path:
        raise UsageError("no config: pass --config or set LEXIGAP_CONFIG")
    config = ServiceConfig.from_file(config_path)
    host = args.host or config.host
    port = args.port if args.port is not None else config.port
    app = create_app(config)

    import uvicorn
    uvicorn.run(app, host=host, port=port)
    return 0


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lexigap",
        description="Find a word stuck on the tip of your tongue from its "
                    "context, with optional sound-alike and syntactic hints.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build a domain base from a corpus")
    p.add_argument("corpus", help="lemmatized corpus file")
    p.add_argument("--config", help="build parameters (JSON)")
    p.add_argument("--out", required=True, help="output base file")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("resolve", help="rank candidates for a gap")
    _add_resource_flags(p)
    p.add_argument("--context", required=True,
                   help="comma-separated text:POS lemmas")
    p.add_argument("--mode", default="combined",
                   choices=["svetlan", "ewn", "combined", "structure"])
    p.add_argument("--threshold", type=float,
                   default=DEFAULT_COVERAGE_THRESHOLD,
                   help="domain coverage threshold")
    p.add_argument("--pos", choices=["N", "V", "ADJ"],
                   help="part of speech of the sought word")
    p.add_argument("--slot", help="syntactic slot, [governor@]link "
                                  "(e.g. cod, mettre@prep:dans)")
    p.add_argument("--phono", help="sound-alike hint")
    p.add_argument("--top", type=int, default=10)
    p.set_defaults(func=cmd_resolve)

    p = sub.add_parser("eval", help="cloze evaluation on a document")
    _add_resource_flags(p)
    p.add_argument("doc", help="document in corpus format")
    p.add_argument("--n", type=int, default=10, help="targets to remove")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pos-pool", default="N,V",
                   help="parts of speech eligible for removal")
    p.add_argument("--mode", default="combined",
                   choices=["svetlan", "ewn", "combined", "structure"])
    p.add_argument("--threshold", type=float,
                   default=DEFAULT_COVERAGE_THRESHOLD)
    p.add_argument("--removed-list",
                   help="file of text:POS targets (overrides --n/--seed)")
    p.add_argument("--per-segment", action="store_true",
                   help="print the per-segment report table")
    p.add_argument("--json", action="store_true",
                   help="machine-readable output")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--config", help="service config (JSON); defaults to "
                                    "$LEXIGAP_CONFIG")
    p.add_argument("--host")
    p.add_argument("--port", type=int)
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (CorpusFormatError, ResourceError, OSError, ValueError) as exc:
        print(f"lexigap: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
