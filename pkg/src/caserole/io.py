"""File formats: lexicon, ontology, sentences, annotations and output.

All files are UTF-8.  The lexicon and sentence files are JSON, the
ontology is one child<TAB>parent line per edge, and cooccurrence counts
live in the whitespace-separated format of :mod:`caserole.stats`.
"""

from __future__ import annotations

import json
from pathlib import Path

from .evaluation import SentenceAnnotation
from .model import (
    Chunk,
    FeatureStructure,
    Lexicon,
    Ontology,
    RoleSpec,
    Sentence,
    SubcatModel,
)
from .pipeline import CaseRoleStructure


def _read_json(path):
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def load_lexicon(path) -> Lexicon:
    raw = _read_json(path)
    models = []
    for entry in raw["models"]:
        roles = tuple(
            RoleSpec(
                synt=r["synt"],
                preps=frozenset(r["preps"]),
                comp=r["comp"],
                sem=r["sem"],
                agree=bool(r["agree"]),
                optional=bool(r["optional"]),
            )
            for r in entry["roles"]
        )
        models.append(SubcatModel(entry["lemma"], entry["name"], roles))
    return Lexicon(tuple(models))


def load_ontology(path) -> Ontology:
    parent = {}
    with open(path, encoding="utf-8") as handle:
        for number, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) != 2 or not fields[0] or not fields[1]:
                raise ValueError(f"{path}:{number}: expected 'child<TAB>parent'")
            child, par = fields
            if child in parent and parent[child] != par:
                raise ValueError(f"{path}:{number}: label {child!r} has two parents")
            parent[child] = par
    return Ontology(parent)


def chunk_from_dict(raw: dict) -> Chunk:
    fs = FeatureStructure(
        head=raw["head"],
        handle=raw.get("handle") or "",
        pos=raw["pos"],
        num=raw.get("num"),
        gen=raw.get("gen"),
        per=raw.get("per"),
        sem=frozenset(raw["sem"]),
    )
    span = raw["span"]
    return Chunk(id=int(raw["id"]), fs=fs, span=(span[0], span[1]))


def chunk_to_dict(chunk: Chunk) -> dict:
    fs = chunk.fs
    return {
        "id": chunk.id,
        "head": fs.head,
        "handle": fs.handle,
        "pos": fs.pos,
        "num": fs.num,
        "gen": fs.gen,
        "per": fs.per,
        "sem": sorted(fs.sem),
        "span": [chunk.span[0], chunk.span[1]],
    }


def sentence_from_dict(raw: dict) -> Sentence:
    chunks = tuple(chunk_from_dict(c) for c in raw["chunks"])
    return Sentence(str(raw["id"]), int(raw["token_count"]), chunks)


def sentence_to_dict(sentence: Sentence) -> dict:
    return {
        "id": sentence.id,
        "token_count": sentence.token_count,
        "chunks": [chunk_to_dict(c) for c in sentence.chunks],
    }


def load_sentences(path) -> list:
    """A sentence file holds either one sentence object or a list."""
    raw = _read_json(path)
    if isinstance(raw, dict):
        raw = [raw]
    return [sentence_from_dict(entry) for entry in raw]


def load_annotations(path) -> list:
    """Gold or predicted annotations: per sentence, the verb models and
    the role fills."""
    raw = _read_json(path)
    if isinstance(raw, dict):
        raw = [raw]
    out = []
    for entry in raw:
        verb_models = {
            int(vm["chunk"]): str(vm["model"])
            for vm in entry.get("verb_models", ())
        }
        fills = tuple(
            (int(f["dependent"]), str(f["role"]), int(f["governor"]))
            for f in entry.get("fills", ())
        )
        out.append(SentenceAnnotation(str(entry["id"]), verb_models, fills))
    return out


def structure_to_dict(structure: CaseRoleStructure,
                      sentence: Sentence) -> dict:
    """Machine output for one sentence.  Contains the assembled forest
    plus flat verb_models/fills projections, so the output doubles as a
    predicted-annotation file for the scorer."""
    heads = {c.id: c.fs.head for c in sentence.chunks}
    verb_models = [
        {"chunk": c.id, "model": next(
            (i.model for i in structure.instances if i.governor == c.id),
            "NONE",
        )}
        for c in sentence.chunks if c.fs.pos == "VP"
    ]
    fills = [
        {"dependent": dep, "role": role, "governor": inst.governor}
        for inst in structure.instances
        for role, dep in sorted(inst.fills.items())
    ]
    fills.sort(key=lambda f: f["dependent"])
    return {
        "id": structure.sentence_id,
        "heads": {str(cid): head for cid, head in heads.items()},
        "models": [
            {
                "governor": inst.governor,
                "head": heads[inst.governor],
                "model": inst.model,
                "fills": {role: dep for role, dep in sorted(inst.fills.items())},
            }
            for inst in structure.instances
        ],
        "standalone": list(structure.standalone),
        "verb_models": verb_models,
        "fills": fills,
    }


def annotation_from_output(entry: dict) -> SentenceAnnotation:
    """Project one cmd_parse output entry onto a scorer annotation."""
    return SentenceAnnotation(
        str(entry["id"]),
        {int(vm["chunk"]): str(vm["model"]) for vm in entry["verb_models"]},
        tuple(
            (int(f["dependent"]), str(f["role"]), int(f["governor"]))
            for f in entry["fills"]
        ),
    )


def write_json(data, path=None, stream=None):
    text = json.dumps(data, ensure_ascii=False, indent=2) + "\n"
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    elif stream is not None:
        stream.write(text)
    return text
