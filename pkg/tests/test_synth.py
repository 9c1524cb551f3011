from collections import Counter

from lexigap.corpus import format_corpus
from lexigap.synth import (ADJS_PER_TOPIC, NOUNS_PER_TOPIC, VERBS_PER_TOPIC,
                           make_planted_corpus)
from lexigap.types import POS


def small(seed=0, **kw):
    kw.setdefault("topics", 2)
    kw.setdefault("docs_per_topic", 3)
    kw.setdefault("sentences_per_doc", 6)
    return make_planted_corpus(seed=seed, **kw)


class TestGenerator:
    def test_deterministic_byte_for_byte(self):
        assert format_corpus(small().documents) == \
               format_corpus(small().documents)

    def test_seed_changes_output(self):
        assert format_corpus(small(seed=0).documents) != \
               format_corpus(small(seed=1).documents)

    def test_topic_vocabularies_disjoint_and_sized(self):
        corpus = small(topics=3)
        seen = set()
        for topic in corpus.topics:
            vocab = topic.vocabulary
            assert len(vocab) == 60
            by_pos = Counter(l.pos for l in vocab)
            assert by_pos[POS.NOUN] == NOUNS_PER_TOPIC
            assert by_pos[POS.VERB] == VERBS_PER_TOPIC
            assert by_pos[POS.ADJ] == ADJS_PER_TOPIC
            assert not vocab & seen
            seen |= vocab

    def test_triple_inventory_size_and_membership(self):
        corpus = small(triples_per_topic=40)
        for topic in corpus.topics:
            assert len(topic.triples) == 40
            for t in topic.triples:
                assert t.verb in topic.vocabulary
                assert t.noun in topic.vocabulary

    def test_documents_round_robin_over_topics(self):
        corpus = small(topics=2, docs_per_topic=3)
        assert corpus.doc_topic == [0, 1, 0, 1, 0, 1]
        assert len(corpus.documents) == 6

    def test_document_stays_in_topic_vocabulary(self):
        corpus = small()
        for doc, topic_idx in zip(corpus.documents, corpus.doc_topic):
            vocab = corpus.topics[topic_idx].vocabulary
            assert doc.distinct_lemmas() <= vocab

    def test_annotated_triples_are_realized_in_sentence(self):
        corpus = small()
        for doc in corpus.documents:
            by_sentence = {}
            for tok in doc.tokens:
                if tok.lemma:
                    by_sentence.setdefault(tok.sentence_index,
                                           set()).add(tok.lemma)
            assert doc.triples
            for sentence, triples in doc.triples.items():
                for t in triples:
                    assert t.verb in by_sentence[sentence]
                    assert t.noun in by_sentence[sentence]

    def test_anchors_repeat_in_every_sentence(self):
        corpus = small()
        doc, topic = corpus.documents[0], corpus.topics[corpus.doc_topic[0]]
        per_sentence = {}
        for tok in doc.tokens:
            if tok.lemma:
                per_sentence.setdefault(tok.sentence_index,
                                        Counter())[tok.lemma] += 1
        for counts in per_sentence.values():
            for anchor in topic.anchors:
                # at least the two planted repeats; the sentence's triple
                # may add one more
                assert counts[anchor] >= 2

    def test_whole_vocabulary_is_used(self):
        corpus = make_planted_corpus(topics=2, docs_per_topic=4,
                                     sentences_per_doc=25, seed=0)
        used = set()
        for doc in corpus.documents:
            used |= doc.distinct_lemmas()
        assert used == corpus.vocabulary()
