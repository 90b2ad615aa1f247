import json

import pytest

from caserole.io import (
    annotation_from_output,
    chunk_from_dict,
    load_annotations,
    load_lexicon,
    load_ontology,
    load_sentences,
    sentence_to_dict,
    write_json,
)


class TestLexicon:
    def test_fixture_lexicon_shape(self, lexicon):
        assert [m.name for m in lexicon.verb_models("hablar")] \
            == ["basic", "impersonal"]
        nominal = lexicon.noun_models()
        assert [m.name for m in nominal] == ["N_de"]
        assert nominal[0].roles[0].preps == frozenset({"de"})
        assert nominal[0].roles[0].optional is False

    def test_role_fields_parsed(self, lexicon):
        basic = lexicon.verb_models("hablar")[0]
        starter = basic.role("starter")
        assert starter.synt == "NP"
        assert starter.preps == frozenset()
        assert starter.sem == "Human"
        assert starter.agree is True
        assert starter.optional is True

    def test_invalid_role_rejected_at_load(self, tmp_path):
        path = tmp_path / "lex.json"
        write_json({"models": [{"lemma": "x", "name": "m", "roles": [
            {"synt": "PP", "preps": [], "comp": "r", "sem": "Top",
             "agree": False, "optional": True},
        ]}]}, path)
        with pytest.raises(ValueError, match="preposition"):
            load_lexicon(path)


class TestOntologyFile:
    def test_fixture_labels(self, ontology):
        assert "Communication" in ontology
        assert "Top" in ontology
        assert "Vehicle" not in ontology

    def test_malformed_line(self, tmp_path):
        path = tmp_path / "onto.tsv"
        path.write_text("Human Top\n", encoding="utf-8")
        with pytest.raises(ValueError, match="child<TAB>parent"):
            load_ontology(path)

    def test_conflicting_parents(self, tmp_path):
        path = tmp_path / "onto.tsv"
        path.write_text("A\tTop\nA\tB\nB\tTop\n", encoding="utf-8")
        with pytest.raises(ValueError, match="two parents"):
            load_ontology(path)

    def test_blank_lines_skipped(self, tmp_path):
        path = tmp_path / "onto.tsv"
        path.write_text("A\tTop\n\nB\tA\n", encoding="utf-8")
        onto = load_ontology(path)
        assert onto.subsumes("A", "B")


class TestSentences:
    def test_fixture_sentence(self, sentence):
        assert sentence.id == "s1"
        assert sentence.token_count == 11
        assert [c.fs.head for c in sentence.chunks] \
            == ["año", "congreso", "partido", "se", "hablar", "pensión"]
        assert sentence.chunk(2).fs.sem == frozenset({"Group", "Human"})
        assert sentence.chunk(5).span == (9, 11)

    def test_single_object_file(self, sentence, tmp_path):
        path = tmp_path / "one.json"
        write_json(sentence_to_dict(sentence), path)
        loaded = load_sentences(path)
        assert len(loaded) == 1
        assert loaded[0] == sentence

    def test_unspecified_features_may_be_omitted(self):
        chunk = chunk_from_dict({
            "id": 3, "head": "se", "pos": "SE", "sem": ["Top"], "span": [7, 8],
        })
        assert chunk.fs.handle == ""
        assert chunk.fs.num is None
        assert chunk.fs.per is None

    def test_invalid_chunk_rejected(self, tmp_path):
        path = tmp_path / "bad.json"
        write_json([{"id": "b", "token_count": 3, "chunks": [
            {"id": 0, "head": "x", "pos": "PP", "sem": ["Top"], "span": [0, 1]},
        ]}], path)
        with pytest.raises(ValueError, match="handle"):
            load_sentences(path)


class TestAnnotations:
    def test_gold_fixture(self, data_dir):
        gold = load_annotations(data_dir / "gold.json")
        assert len(gold) == 1
        assert gold[0].verb_models == {4: "impersonal"}
        assert set(gold[0].fills) == {
            (3, "se", 4), (5, "entity", 4), (2, "modif", 1),
        }

    def test_output_projection_round_trip(self, data_dir, tmp_path, capsys):
        from caserole.cli import main

        out = tmp_path / "pred.json"
        assert main(["parse",
                     "--sentences", str(data_dir / "sentences.json"),
                     "--lexicon", str(data_dir / "lexicon.json"),
                     "--ontology", str(data_dir / "ontology.tsv"),
                     "--out", str(out)]) == 0
        entries = json.loads(out.read_text(encoding="utf-8"))
        annotation = annotation_from_output(entries[0])
        reparsed = load_annotations(out)
        assert annotation == reparsed[0]
