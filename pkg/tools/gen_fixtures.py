"""Generate the checked-in fixtures under fixtures/.

* newswire_base.json / newswire_doc.txt / newswire_removed.txt: a hand-shaped
  10-domain base and a matching news-style document with known per-segment
  found patterns, domain selections, and structure-restriction reductions;
  the eval-report tests pin these as goldens.
* two_topic_corpus.txt / two_topic_config.json: planted 2-topic corpus
  whose build recovers exactly 2 domains.

The script verifies every property it promises before writing, and is
deterministic: rerunning it reproduces the files byte for byte.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from lexigap.cloze import QueryTemplate, evaluate, make_cloze_from_list, segment_report
from lexigap.corpus import format_corpus
from lexigap.domains import BuildConfig, Domain, DomainBase, Structure, build_domain_base
from lexigap.synth import make_planted_corpus
from lexigap.types import DIRECT_OBJECT, Lemma, POS, SyntacticLink, noun, verb

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# context nouns per segment block; the first three of each block belong
# to every domain marked for that segment (coverage 3/4 = 0.75)
DRIVERS = [
    ["soldat", "bagdad", "armée", "guerre"],
    ["sanction", "conseil", "résolution", "embargo"],
    ["inspecteur", "désarmement", "missile", "site"],
    ["pétrole", "prix", "baril", "marché"],
    ["élection", "président", "parti", "pouvoir"],
]

REMOVED = [noun("force"), noun("lundi"), noun("amende"), noun("militaire"),
           noun("partisan"), verb("étudier"), verb("représenter"),
           verb("lancer"), verb("confirmer"), verb("enfreindre")]

# two removed words planted per block (all excised before evaluation)
PLANT_PER_BLOCK = [
    ["force", "lundi"], ["amende", "militaire"], ["partisan", "étudier"],
    ["représenter", "lancer"], ["confirmer", "enfreindre"],
]
PLANT_POS = {l.text: l.pos for l in REMOVED}

# name, domain word count, structure word count, selected segments
# (1-based), member lemmas among the removed words
DOMAIN_ROWS = [
    ("ApprendreDemander", ("apprendre", "demander"), 102, 39, (2, 4, 5), ()),
    ("CommanderPoursuivre", ("commander", "poursuivre"), 171, 160,
     (1, 2, 3, 4, 5), ()),
    ("DonnerObtenir", ("donner", "obtenir"), 96, 21, (3, 5), ()),
    ("ÉlireEffectuer", ("élire", "effectuer"), 58, 13, (2,), ()),
    ("FuirContrôler", ("fuir", "contrôler"), 33, 3, (1,), ()),
    ("MaintenirDemander", ("maintenir", "demander"), 81, 12, (5,),
     ("amende",)),
    ("PrévoirAtteindre", ("prévoir", "atteindre"), 102, 11, (5,), ()),
    ("PrévoirReprendre", ("prévoir", "reprendre"), 125, 71, (2, 3, 4),
     ("amende",)),
    ("TuerPrendre", ("tuer", "prendre"), 93, 41, (2, 3, 5), ("partisan",)),
    ("TuerTrouver", ("tuer", "trouver"), 131, 86, (1, 2, 3, 4, 5),
     ("force", "lundi", "militaire", "étudier", "représenter", "lancer",
      "confirmer")),
]

EXPECTED_FOUND = {
    "force": "+++++", "lundi": "+++++", "amende": "-++++",
    "militaire": "+++++", "partisan": "-++-+", "étudier": "+++++",
    "représenter": "+++++", "lancer": "+++++", "confirmer": "+++++",
    "enfreindre": "-----",
}

BLOCK_REPEATS = 5   # post-excision block length 5*4 = 20 tokens
BUFFER = ["le", "la", "un", "et", "que"]


def slug(name: str) -> str:
    return (name.lower().replace("é", "e").replace("ô", "o")
            .replace("è", "e"))


def make_domain(domain_id, name, verbs, w_target, s_target, segments,
                members) -> Domain:
    tag = slug(name)
    drivers = [noun(d) for i in segments for d in DRIVERS[i - 1][:3]]
    planted = [Lemma(m, PLANT_POS[m]) for m in members]
    n_cls = s_target - 2
    base_w = len(drivers) + len(planted) + s_target
    reuse = max(0, base_w - w_target)          # drivers doubling as class nouns
    pad = max(0, w_target - base_w)
    if reuse > min(n_cls, len(drivers)):
        raise ValueError(f"{name}: cannot reuse {reuse} drivers")

    class_nouns = [noun(f"{tag}cls{i:02d}") for i in range(n_cls - reuse)]
    class_nouns += drivers[:reuse]
    pad_nouns = [noun(f"{tag}nom{i:02d}") for i in range(pad)]

    words: dict[Lemma, float] = {}
    for lemma in drivers:
        words[lemma] = 1.0
    for lemma in planted:
        words[lemma] = 0.85
    for v in verbs:
        words[verb(v)] = 0.95
    for lemma in class_nouns:
        words.setdefault(lemma, 0.9)
    for lemma in pad_nouns:
        words[lemma] = 0.2

    noun_class = {lemma: words[lemma] for lemma in class_nouns}
    structures = [Structure(verb(v), DIRECT_OBJECT, dict(noun_class))
                  for v in verbs]
    domain = Domain(id=domain_id, name=name, words=words,
                    structures=structures)
    assert domain.word_count == w_target, (name, domain.word_count, w_target)
    assert domain.structure_word_count == s_target, (name, s_target)
    return domain


def make_document_text() -> str:
    lines = []
    for block_no, drivers in enumerate(DRIVERS):
        if block_no:
            for i in range(len(BUFFER)):
                lines.append(f"{BUFFER[i]}|F|-")
        plant = list(PLANT_PER_BLOCK[block_no])
        for rep in range(BLOCK_REPEATS):
            for d in drivers:
                lines.append(f"{d}|N|{d}")
            # slip the planted words in mid-block; they are excised later
            if rep == 2 and plant:
                for m in plant:
                    pos = PLANT_POS[m]
                    lines.append(f"{m}|{pos.value}|{m}")
    return "\n".join(lines) + "\n"


def build_newswire() -> tuple[DomainBase, str]:
    domains = [
        make_domain(f"D{i + 1:03d}", name, verbs, w, s, segs, members)
        for i, (name, verbs, w, s, segs, members) in enumerate(DOMAIN_ROWS)
    ]
    base = DomainBase(domains, BuildConfig())
    return base, make_document_text()


def verify_newswire(base: DomainBase, doc_text: str) -> None:
    from lexigap.corpus import parse_corpus
    doc = parse_corpus(doc_text)[0]
    for lemma in REMOVED:
        assert lemma in doc.distinct_lemmas(), lemma
    inst = make_cloze_from_list(doc, REMOVED, base.config.segmentation())
    assert [s.label for s in inst.segments] == [f"ST{i}" for i in range(1, 6)], \
        [s.token_range for s in inst.segments]
    for segment, drivers in zip(inst.segments, DRIVERS):
        assert set(segment.content_lemmas) == {noun(d) for d in drivers}

    template = QueryTemplate(per_segment=True)
    report = segment_report(inst, template, base)

    got_found = {
        row["lemma"].split(":")[0]:
            "".join("+" if row["found"][st] else "-" for st in report.labels)
        for row in report.word_rows
    }
    assert got_found == EXPECTED_FOUND, got_found

    marks = {row["name"]: [row["selected"][st] for st in report.labels]
             for row in report.domain_rows}
    for name, _, _, _, segs, _ in DOMAIN_ROWS:
        expected = [(i + 1) in segs for i in range(5)]
        assert marks[name] == expected, (name, marks.get(name), expected)

    # whole-text column: everything but "enfreindre" is found
    metrics = evaluate(inst, template, base)
    assert metrics.recall == 0.9, metrics
    assert verb("enfreindre") not in metrics.found


GOLDEN_LEXICON = """\
# small verb lexicon around "ab-"
abroger\tsyn\tabolir
abolir\tsyn\tabdiquer
abolir\thyper\tsupprimer
maîtriser\tsyn\tdominer
"""


def write_golden() -> None:
    domain = Domain(
        id="D001",
        name="AbrogerMettre",
        words={
            noun("loi"): 1.0, noun("état"): 0.95, noun("situation"): 1.0,
            verb("abroger"): 0.9, verb("mettre"): 0.8,
            verb("maîtriser"): 0.8, noun("décret"): 0.5, verb("voter"): 0.6,
        },
        structures=[
            Structure(verb("abroger"), DIRECT_OBJECT, {noun("loi"): 1.0}),
            Structure(verb("mettre"), SyntacticLink.prep("dans"),
                      {noun("situation"): 1.0}),
            Structure(verb("maîtriser"), DIRECT_OBJECT,
                      {noun("situation"): 1.0}),
        ],
    )
    DomainBase([domain], BuildConfig()).save(FIXTURES / "golden_base.json")
    (FIXTURES / "golden_lexicon.tsv").write_text(GOLDEN_LEXICON,
                                                 encoding="utf-8")


def write_two_topic() -> None:
    corpus = make_planted_corpus(topics=2, docs_per_topic=8, seed=0)
    config = BuildConfig(boundary_quantile=0.1)
    base = build_domain_base(corpus.documents, config)
    assert len(base.domains) == 2, len(base.domains)
    (FIXTURES / "two_topic_corpus.txt").write_text(
        format_corpus(corpus.documents), encoding="utf-8")
    (FIXTURES / "two_topic_config.json").write_text(
        json.dumps(config.to_json_dict(), indent=2, sort_keys=True) + "\n",
        encoding="utf-8")


def main() -> None:
    FIXTURES.mkdir(exist_ok=True)
    base, doc_text = build_newswire()
    verify_newswire(base, doc_text)
    base.save(FIXTURES / "newswire_base.json")
    (FIXTURES / "newswire_doc.txt").write_text(doc_text, encoding="utf-8")
    (FIXTURES / "newswire_removed.txt").write_text(
        " ".join(str(l) for l in REMOVED) + "\n", encoding="utf-8")
    write_golden()
    write_two_topic()
    for domain in base.domains:
        print(f"{domain.id} {domain.name}: {domain.word_count} words, "
              f"{domain.structure_word_count} structure words, "
              f"{domain.noise_reduction_pct:.1f}% reduction")
    print("fixtures written to", FIXTURES)


if __name__ == "__main__":
    main()
