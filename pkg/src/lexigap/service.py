"""HTTP service over a loaded domain base, paradigmatic lexicon and
phonological index. Resources are immutable after startup; every
request is handled statelessly, so identical bodies get identical
responses."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from fastapi import FastAPI, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from lexigap import __version__
from lexigap._kernels import IMPLEMENTATION
from lexigap.cloze import (QueryTemplate, evaluate, make_cloze,
                           make_cloze_from_list, segment_report)
from lexigap.corpus import CorpusFormatError, parse_corpus
from lexigap.resolver import (DEFAULT_COVERAGE_THRESHOLD, Query,
                              SlotConstraint, parse_mode, resolve)
from lexigap.resources import Resources, load_resources
from lexigap.types import POS, Lemma, SyntacticLink


@dataclass
class ServiceConfig:
    base_path: str
    lexicon_path: Optional[str] = None
    pronunciation_path: Optional[str] = None
    listen_address: str = "127.0.0.1:8000"
    default_threshold: float = DEFAULT_COVERAGE_THRESHOLD
    default_mode: str = "combined"
    default_top: int = 10

    @property
    def host(self) -> str:
        return self.listen_address.rsplit(":", 1)[0]

    @property
    def port(self) -> int:
        return int(self.listen_address.rsplit(":", 1)[1])

    @classmethod
    def from_json_dict(cls, data: dict, root: Path | None = None) -> "ServiceConfig":
        known = {k: data[k] for k in cls.__dataclass_fields__ if k in data}
        config = cls(**known)
        if root is not None:
            for attr in ("base_path", "lexicon_path", "pronunciation_path"):
                value = getattr(config, attr)
                if value is not None and not Path(value).is_absolute():
                    setattr(config, attr, str(root / value))
        return config

    @classmethod
    def from_file(cls, path: str | Path) -> "ServiceConfig":
        path = Path(path)
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        # relative resource paths count from the config file's directory
        return cls.from_json_dict(data, root=path.parent)


class SlotBody(BaseModel):
    link: str
    governor: Optional[str] = None


class ResolveBody(BaseModel):
    context: list[str]
    mode: Optional[str] = None
    threshold: Optional[float] = None
    pos: Optional[str] = None
    slot: Optional[SlotBody] = None
    phono: Optional[str] = None
    top: Optional[int] = None


class EvalBody(BaseModel):
    document: str
    n: int = 10
    seed: int = 0
    pos_pool: list[str] = ["N", "V"]
    removed: Optional[list[str]] = None
    mode: Optional[str] = None
    threshold: Optional[float] = None
    per_segment: bool = False


def _bad(msg: str, *loc) -> HTTPException:
    return HTTPException(status_code=400,
                         detail=[{"loc": ["body", *loc], "msg": msg}])


def create_app(config: ServiceConfig | None = None, *,
               resources: Resources | None = None) -> FastAPI:
    """Build the application; loads and validates all resource files up
    front so startup fails loudly on a bad path."""
    if resources is None:
        if config is None:
            raise ValueError("need a ServiceConfig or preloaded Resources")
        resources = load_resources(config.base_path, config.lexicon_path,
                                   config.pronunciation_path)
    config = config or ServiceConfig(base_path="<preloaded>")
    base, lexicon, phono = resources.base, resources.lexicon, resources.phono

    app = FastAPI(title="lexigap", version=__version__)

    @app.exception_handler(RequestValidationError)
    async def on_validation_error(request: Request,
                                  exc: RequestValidationError):
        detail = [{"loc": list(e["loc"]), "msg": e["msg"]}
                  for e in exc.errors()]
        return JSONResponse(status_code=400, content={"detail": detail})

    def parse_query(body: ResolveBody) -> Query:
        context = []
        for i, item in enumerate(body.context):
            try:
                context.append(Lemma.parse(item))
            except ValueError as exc:
                raise _bad(str(exc), "context", i)
        if not context:
            raise _bad("empty context", "context")

        try:
            mode, restricted = parse_mode(body.mode or config.default_mode)
        except ValueError as exc:
            raise _bad(str(exc), "mode")

        pos_filter = None
        if body.pos is not None:
            try:
                pos_filter = POS.parse(body.pos)
            except ValueError as exc:
                raise _bad(str(exc), "pos")

        slot = None
        if body.slot is not None:
            try:
                link = SyntacticLink.parse(body.slot.link)
            except ValueError as exc:
                raise _bad(str(exc), "slot", "link")
            governor = None
            if body.slot.governor:
                governor = Lemma(body.slot.governor, POS.VERB)
            slot = SlotConstraint(link=link, governor=governor)

        threshold = body.threshold if body.threshold is not None \
            else config.default_threshold
        try:
            return Query(context=tuple(context), pos_filter=pos_filter,
                         slot=slot, phono_hint=body.phono, mode=mode,
                         structure_restricted=restricted,
                         coverage_threshold=threshold)
        except ValueError as exc:
            raise _bad(str(exc), "threshold")

    @app.post("/resolve")
    def post_resolve(body: ResolveBody):
        query = parse_query(body)
        top = body.top if body.top is not None else config.default_top
        if top < 0:
            raise _bad("top must be >= 0", "top")
        result = resolve(query, base, lexicon, phono)
        return {
            "candidates": [c.to_json_dict() for c in result[:top]],
            "selected_domains": [
                {"id": sel.domain_id, "name": base[sel.domain_id].name,
                 "coverage": sel.coverage}
                for sel in result.selections
            ],
        }

    def domain_payload(domain, full: bool):
        payload = {
            "id": domain.id,
            "name": domain.name,
            "word_count": domain.word_count,
            "structure_count": len(domain.structures),
        }
        if full:
            payload["words"] = {str(l): w for l, w in sorted(
                domain.words.items(), key=lambda kv: (kv[0].text, kv[0].pos.value))}
            payload["structures"] = [
                {"verb": s.verb.text, "link": str(s.link),
                 "nouns": {l.text: w for l, w in sorted(
                     s.noun_class.items(), key=lambda kv: kv[0].text)}}
                for s in domain.structures
            ]
            payload["segments"] = list(domain.segment_ids)
            payload["structure_word_count"] = domain.structure_word_count
        return payload

    @app.get("/domains")
    def get_domains():
        return [domain_payload(d, full=False) for d in base.domains]

    @app.get("/domains/{domain_id}")
    def get_domain(domain_id: str):
        domain = base.get(domain_id)
        if domain is None:
            raise HTTPException(status_code=404,
                                detail=f"unknown domain {domain_id!r}")
        return domain_payload(domain, full=True)

    @app.post("/eval")
    def post_eval(body: EvalBody):
        try:
            docs = parse_corpus(body.document)
        except CorpusFormatError as exc:
            raise _bad(str(exc), "document")
        if not docs:
            raise _bad("no document", "document")
        doc = docs[0]

        params = base.config.segmentation()
        try:
            if body.removed is not None:
                removed = [Lemma.parse(item) for item in body.removed]
                instance = make_cloze_from_list(doc, removed, params)
            else:
                pool = {POS.parse(tag) for tag in body.pos_pool}
                instance = make_cloze(doc, body.n, pool, body.seed, params)
        except ValueError as exc:
            field_name = "removed" if body.removed is not None else "n"
            raise _bad(str(exc), field_name)

        try:
            mode, restricted = parse_mode(body.mode or config.default_mode)
        except ValueError as exc:
            raise _bad(str(exc), "mode")
        threshold = body.threshold if body.threshold is not None \
            else config.default_threshold
        template = QueryTemplate(mode=mode, structure_restricted=restricted,
                                 coverage_threshold=threshold,
                                 per_segment=body.per_segment)

        if body.per_segment and instance.segments:
            report = segment_report(instance, template, base, lexicon, phono)
            return {"metrics": report.metrics.to_json_dict(),
                    "report": report.to_json_dict()}
        metrics = evaluate(instance, template, base, lexicon, phono)
        return {"metrics": metrics.to_json_dict(), "report": None}

    @app.get("/health")
    def get_health():
        return {
            "status": "ok",
            "domains": len(base),
            "lexicon_entries": resources.lexicon.variant_count,
            "indexed_forms": len(phono.forms),
            "kernel": IMPLEMENTATION,
            "version": __version__,
        }

    return app
