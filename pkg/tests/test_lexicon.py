import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from lexigap.lexicon import (DEFAULT_EXPANSION_TYPES, LexiconFormatError,
                             LinkType, ParadigmaticLexicon, load_lexicon)
from lexigap.types import POS, Lemma, noun


class TestLinkType:
    def test_parse(self):
        assert LinkType.parse("syn") is LinkType.SYNONYM
        assert LinkType.parse("HYPER") is LinkType.HYPERNYM

    def test_parse_unknown(self):
        with pytest.raises(ValueError, match="cousin"):
            LinkType.parse("cousin")

    def test_inverses(self):
        assert LinkType.SYNONYM.inverse is LinkType.SYNONYM
        assert LinkType.ANTONYM.inverse is LinkType.ANTONYM
        assert LinkType.HYPERNYM.inverse is LinkType.HYPONYM
        assert LinkType.HYPONYM.inverse is LinkType.HYPERNYM
        assert LinkType.MERONYM.inverse is LinkType.HOLONYM
        assert LinkType.HOLONYM.inverse is LinkType.MERONYM


class TestParadigmaticLexicon:
    def test_add_installs_inverse(self):
        lex = ParadigmaticLexicon()
        lex.add("animal", LinkType.HYPONYM, "chien")
        assert (LinkType.HYPONYM, "chien") in lex.links_of("animal")
        assert (LinkType.HYPERNYM, "animal") in lex.links_of("chien")

    def test_self_loops_dropped(self):
        lex = ParadigmaticLexicon()
        lex.add("loi", LinkType.SYNONYM, "loi")
        assert lex.links_of("loi") == set()

    def test_variant_count(self):
        lex = ParadigmaticLexicon()
        lex.add("a", LinkType.SYNONYM, "b")
        lex.add("b", LinkType.SYNONYM, "c")
        assert lex.variant_count == 3

    def test_neighbors_single_edge(self):
        lex = ParadigmaticLexicon()
        lex.add("loi", LinkType.SYNONYM, "règle")
        got = lex.neighbors(noun("loi"))
        assert got == [(noun("règle"), (LinkType.SYNONYM,))]

    def test_neighbors_excludes_start(self):
        lex = ParadigmaticLexicon()
        lex.add("a", LinkType.SYNONYM, "b")
        lex.add("b", LinkType.SYNONYM, "a2")
        texts = [l.text for l, _ in lex.neighbors(noun("a"), depth=3)]
        assert "a" not in texts

    def test_neighbors_depth_zero(self):
        lex = ParadigmaticLexicon()
        lex.add("a", LinkType.SYNONYM, "b")
        assert lex.neighbors(noun("a"), depth=0) == []

    def test_neighbors_negative_depth(self):
        with pytest.raises(ValueError):
            ParadigmaticLexicon().neighbors(noun("a"), depth=-1)

    def test_neighbors_respects_allowed_types(self):
        lex = ParadigmaticLexicon()
        lex.add("a", LinkType.ANTONYM, "z")
        lex.add("a", LinkType.SYNONYM, "b")
        got = lex.neighbors(noun("a"), allowed={LinkType.SYNONYM}, depth=2)
        assert [l.text for l, _ in got] == ["b"]

    def test_neighbors_inherit_query_pos(self):
        lex = ParadigmaticLexicon()
        lex.add("abroger", LinkType.SYNONYM, "abolir")
        for pos in POS:
            got = lex.neighbors(Lemma("abroger", pos))
            assert got[0][0].pos is pos

    def test_neighbors_shortest_path_length(self):
        # diamond: a-b, a-c, b-d, c-d; d is 2 hops from a, not 3
        lex = ParadigmaticLexicon()
        lex.add("a", LinkType.SYNONYM, "b")
        lex.add("a", LinkType.SYNONYM, "c")
        lex.add("b", LinkType.SYNONYM, "d")
        lex.add("c", LinkType.SYNONYM, "d")
        paths = {l.text: path for l, path in lex.neighbors(noun("a"), depth=5)}
        assert len(paths["d"]) == 2

    def test_neighbors_ordering(self):
        lex = ParadigmaticLexicon()
        lex.add("a", LinkType.SYNONYM, "zz")
        lex.add("a", LinkType.SYNONYM, "bb")
        lex.add("bb", LinkType.SYNONYM, "cc")
        got = lex.neighbors(noun("a"), depth=2)
        assert [l.text for l, _ in got] == ["bb", "zz", "cc"]

    @settings(max_examples=40, deadline=None)
    @given(st.integers(min_value=0, max_value=10_000),
           st.integers(min_value=1, max_value=4))
    def test_neighbors_match_bfs_oracle(self, seed, depth):
        rng = random.Random(seed)
        words = [f"w{i}" for i in range(rng.randint(2, 30))]
        lex = ParadigmaticLexicon()
        for _ in range(rng.randint(1, 60)):
            a, b = rng.choice(words), rng.choice(words)
            lex.add(a, rng.choice(list(LinkType)), b)
        allowed = set(rng.sample(list(LinkType), rng.randint(1, 6)))
        start = rng.choice(words)
        got = lex.neighbors(noun(start), allowed=allowed, depth=depth)
        expected = oracles.bfs_expansion(lex, start, allowed, depth)
        assert {l.text: len(p) for l, p in got} == expected

    def test_neighbors_path_links_are_real(self):
        lex = ParadigmaticLexicon()
        lex.add("a", LinkType.HYPERNYM, "b")
        lex.add("b", LinkType.SYNONYM, "c")
        paths = {l.text: path for l, path in lex.neighbors(noun("a"), depth=2)}
        assert paths["b"] == (LinkType.HYPERNYM,)
        assert paths["c"] == (LinkType.HYPERNYM, LinkType.SYNONYM)


class TestLoadLexicon:
    def test_load_basic(self):
        lex = load_lexicon("abroger\tsyn\tabolir\nloi\thyper\ttexte\n")
        assert (LinkType.SYNONYM, "abolir") in lex.links_of("abroger")
        assert (LinkType.HYPONYM, "loi") in lex.links_of("texte")

    def test_load_skips_blank_and_comment_lines(self):
        lex = load_lexicon("# header\n\nabroger\tsyn\tabolir\n")
        assert lex.variant_count == 2

    def test_load_bad_line_numbered(self):
        with pytest.raises(LexiconFormatError, match="line 2") as exc:
            load_lexicon("a\tsyn\tb\nbroken line\n")
        assert exc.value.line_no == 2

    def test_load_unknown_link_type(self):
        with pytest.raises(LexiconFormatError, match="cousin"):
            load_lexicon("a\tcousin\tb\n")

    def test_default_expansion_types(self):
        assert DEFAULT_EXPANSION_TYPES == {LinkType.SYNONYM, LinkType.HYPERNYM,
                                           LinkType.HYPONYM}
