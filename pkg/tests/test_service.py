import json

import pytest
from fastapi.testclient import TestClient

from conftest import FIXTURES
from lexigap.cli import main as cli_main
from lexigap.service import ServiceConfig, create_app


def make_client(base="golden_base.json", lexicon="golden_lexicon.tsv"):
    config = ServiceConfig(
        base_path=str(FIXTURES / base),
        lexicon_path=str(FIXTURES / lexicon) if lexicon else None,
    )
    return TestClient(create_app(config))


@pytest.fixture(scope="module")
def client():
    return make_client()


@pytest.fixture(scope="module")
def newswire_client():
    return make_client(base="newswire_base.json", lexicon=None)


class TestResolveEndpoint:
    def test_golden_hint_ranks_abroger_first(self, client):
        resp = client.post("/resolve", json={
            "context": ["loi:N"], "phono": "aboli", "pos": "V"})
        assert resp.status_code == 200
        body = resp.json()
        assert body["candidates"][0]["lemma"] == "abroger"
        assert body["candidates"][0]["pos"] == "V"
        assert body["selected_domains"] == [
            {"id": "D001", "name": "AbrogerMettre", "coverage": 1.0}]

    def test_golden_slot_ranks_maitriser_above_mettre(self, client):
        resp = client.post("/resolve", json={
            "context": ["situation:N"], "phono": "mépriser",
            "slot": {"link": "cod"}, "pos": "V"})
        assert resp.status_code == 200
        order = [c["lemma"] for c in resp.json()["candidates"]]
        assert order.index("maîtriser") < order.index("mettre")

    def test_provenance_is_verbatim_strings(self, client):
        resp = client.post("/resolve", json={"context": ["loi:N"]})
        cand = resp.json()["candidates"][0]
        assert set(cand) == {"lemma", "pos", "score", "provenance"}
        assert all(isinstance(p, dict) and "type" in p
                   for p in cand["provenance"])

    def test_top_limits_listing(self, client):
        resp = client.post("/resolve", json={"context": ["loi:N"], "top": 1})
        assert len(resp.json()["candidates"]) == 1
        resp = client.post("/resolve", json={"context": ["loi:N"], "top": 0})
        assert resp.json()["candidates"] == []
        assert resp.json()["selected_domains"]

    def test_matches_cli_ordering(self, client, capsys):
        code = cli_main([
            "resolve", "--base", str(FIXTURES / "golden_base.json"),
            "--lexicon", str(FIXTURES / "golden_lexicon.tsv"),
            "--context", "loi:N,état:N", "--phono", "aboli", "--top", "25"])
        assert code == 0
        cli_lemmas = [line.split("\t")[0]
                      for line in capsys.readouterr().out.splitlines()]
        resp = client.post("/resolve", json={
            "context": ["loi:N", "état:N"], "phono": "aboli", "top": 25})
        api_lemmas = [f"{c['lemma']}:{c['pos']}"
                      for c in resp.json()["candidates"]]
        assert api_lemmas == cli_lemmas

    def test_identical_bodies_identical_responses(self, client):
        body = {"context": ["loi:N", "situation:N"], "mode": "combined",
                "phono": "aboli"}
        first = client.post("/resolve", json=body)
        second = client.post("/resolve", json=body)
        assert first.content == second.content

    def test_empty_context_400_names_field(self, client):
        resp = client.post("/resolve", json={"context": []})
        assert resp.status_code == 400
        detail = resp.json()["detail"]
        assert detail[0]["loc"] == ["body", "context"]

    def test_bad_lemma_400_names_element(self, client):
        resp = client.post("/resolve", json={"context": ["loi:N", "bad lemma:N"]})
        assert resp.status_code == 400
        assert resp.json()["detail"][0]["loc"] == ["body", "context", 1]

    def test_unknown_mode_400(self, client):
        resp = client.post("/resolve", json={"context": ["loi:N"],
                                             "mode": "magic"})
        assert resp.status_code == 400
        assert resp.json()["detail"][0]["loc"] == ["body", "mode"]

    def test_bad_threshold_400(self, client):
        resp = client.post("/resolve", json={"context": ["loi:N"],
                                             "threshold": 0.0})
        assert resp.status_code == 400
        assert resp.json()["detail"][0]["loc"] == ["body", "threshold"]

    def test_missing_context_field_400(self, client):
        resp = client.post("/resolve", json={"mode": "combined"})
        assert resp.status_code == 400
        assert any("context" in e["loc"] for e in resp.json()["detail"])

    def test_negative_top_400(self, client):
        resp = client.post("/resolve", json={"context": ["loi:N"], "top": -1})
        assert resp.status_code == 400
        assert resp.json()["detail"][0]["loc"] == ["body", "top"]


class TestDomainEndpoints:
    def test_listing_matches_base(self, newswire_client):
        resp = newswire_client.get("/domains")
        assert resp.status_code == 200
        rows = resp.json()
        assert [r["id"] for r in rows] == [f"D{i:03d}" for i in range(1, 11)]
        tuertrouver = next(r for r in rows if r["name"] == "TuerTrouver")
        assert tuertrouver["word_count"] == 131
        assert set(rows[0]) == {"id", "name", "word_count", "structure_count"}

    def test_detail_includes_structures(self, newswire_client):
        resp = newswire_client.get("/domains/D005")
        assert resp.status_code == 200
        body = resp.json()
        assert body["name"] == "FuirContrôler"
        assert body["structure_word_count"] == 3
        verbs = {s["verb"] for s in body["structures"]}
        assert verbs == {"fuir", "contrôler"}

    def test_unknown_domain_404(self, newswire_client):
        resp = newswire_client.get("/domains/D999")
        assert resp.status_code == 404
        assert "D999" in resp.json()["detail"]

    def test_health_matches_domain_count(self, newswire_client):
        health = newswire_client.get("/health").json()
        domains = newswire_client.get("/domains").json()
        assert health["status"] == "ok"
        assert health["domains"] == len(domains)
        assert health["kernel"] in ("cython", "python")


class TestEvalEndpoint:
    def test_removed_list_reproduces_pattern(self, newswire_client):
        resp = newswire_client.post("/eval", json={
            "document": (FIXTURES / "newswire_doc.txt").read_text("utf-8"),
            "removed": (FIXTURES / "newswire_removed.txt").read_text("utf-8").split(),
            "per_segment": True,
        })
        assert resp.status_code == 200
        body = resp.json()
        assert body["metrics"]["recall"] == 0.9
        words = {row["lemma"]: row["found"] for row in body["report"]["words"]}
        assert not any(words["enfreindre:V"].values())
        assert words["partisan:N"] == {"ST1": False, "ST2": True, "ST3": True,
                                       "ST4": False, "ST5": True, "ALL": True}

    def test_seeded_eval_deterministic(self, newswire_client):
        body = {"document": (FIXTURES / "newswire_doc.txt").read_text("utf-8"),
                "n": 3, "seed": 5}
        first = newswire_client.post("/eval", json=body)
        second = newswire_client.post("/eval", json=body)
        assert first.status_code == 200
        assert first.content == second.content
        assert first.json()["report"] is None

    def test_malformed_document_400(self, newswire_client):
        resp = newswire_client.post("/eval", json={"document": "broken line"})
        assert resp.status_code == 400
        assert resp.json()["detail"][0]["loc"] == ["body", "document"]

    def test_too_many_targets_400(self, newswire_client):
        resp = newswire_client.post("/eval", json={
            "document": "loi|N|loi\nétat|N|état\n", "n": 10})
        assert resp.status_code == 400
        assert resp.json()["detail"][0]["loc"] == ["body", "n"]

    def test_removed_lemma_absent_400(self, newswire_client):
        resp = newswire_client.post("/eval", json={
            "document": "loi|N|loi\nétat|N|état\n", "removed": ["ghost:N"]})
        assert resp.status_code == 400
        assert resp.json()["detail"][0]["loc"] == ["body", "removed"]


class TestConfig:
    def test_relative_paths_resolve_from_config_dir(self, tmp_path):
        config_dir = tmp_path / "conf"
        config_dir.mkdir()
        (config_dir / "base.json").write_bytes(
            (FIXTURES / "golden_base.json").read_bytes())
        config_path = config_dir / "service.json"
        config_path.write_text(json.dumps({
            "base_path": "base.json",
            "listen_address": "0.0.0.0:9100",
        }), encoding="utf-8")
        config = ServiceConfig.from_file(config_path)
        assert config.base_path == str(config_dir / "base.json")
        assert config.host == "0.0.0.0"
        assert config.port == 9100
        client = TestClient(create_app(config))
        assert client.get("/health").json()["domains"] == 1

    def test_bad_base_path_fails_at_startup(self, tmp_path):
        from lexigap.resources import ResourceError
        config = ServiceConfig(base_path=str(tmp_path / "missing.json"))
        with pytest.raises(ResourceError, match="missing.json"):
            create_app(config)

    def test_two_apps_same_resources_identical_bytes(self):
        body = {"context": ["loi:N"], "phono": "aboli"}
        first = make_client().post("/resolve", json=body)
        second = make_client().post("/resolve", json=body)
        assert first.content == second.content
