"""Argumentativeness evaluation: references reduced to their argument sentences."""
from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from argsum import (
    ArgRole,
    CaseRecord,
    DuplicateId,
    MalformedRecord,
    MissingHypothesis,
    Sentence,
    evaluate_argumentativeness,
    evaluate_corpus,
    irc_reference,
    irc_subset,
    load_hypotheses,
    save_hypotheses,
)

from _helpers import ARG_ROLES, make_corpus, make_record, make_text


def _record(case_id, summary_sentences):
    doc = (Sentence("Background history of the dispute.", ArgRole.NON_ARGUMENT),)
    return CaseRecord(case_id, doc, tuple(summary_sentences))


class TestIrcSubset:
    def test_filters_and_joins(self):
        text, count = irc_subset(
            [
                Sentence("Facts.", ArgRole.NON_ARGUMENT),
                Sentence("Held: damages awarded.", ArgRole.CONCLUSION),
            ]
        )
        assert text == "Held: damages awarded."
        assert count == 1

    def test_all_non_argument(self):
        text, count = irc_subset([Sentence("Facts.", ArgRole.NON_ARGUMENT)] * 3)
        assert text == "" and count == 0

    def test_fully_argumentative_equals_full_join(self):
        sentences = [
            Sentence("Was the contract valid", ArgRole.ISSUE),
            Sentence("The consideration failed", ArgRole.REASON),
            Sentence("The claim is dismissed", ArgRole.CONCLUSION),
        ]
        text, count = irc_subset(sentences)
        assert text == " ".join(s.text for s in sentences)
        assert count == 3

    @settings(max_examples=60)
    @given(
        roles=st.lists(st.sampled_from(list(ArgRole)), max_size=10),
        positions=st.lists(st.integers(0, 10), max_size=4),
    )
    def test_noise_insertion_invariance(self, roles, positions):
        sentences = [Sentence(f"s{i} words here", role) for i, role in enumerate(roles)]
        noisy = list(sentences)
        for p in positions:
            noisy.insert(min(p, len(noisy)), Sentence("filler facts", ArgRole.NON_ARGUMENT))
        assert irc_subset(noisy) == irc_subset(sentences)

    def test_idempotent(self):
        sentences = [
            Sentence("one two", ArgRole.REASON),
            Sentence("skip this", ArgRole.NON_ARGUMENT),
        ]
        text, count = irc_subset(sentences)
        again, count2 = irc_subset([Sentence(text, ArgRole.REASON)])
        assert again == text and count2 <= count + 1

    def test_irc_reference_invariants(self, small_corpus):
        for record in small_corpus:
            ref = irc_reference(record)
            assert ref.id == record.id
            assert (ref.irc_text == "") == (ref.irc_sentence_count == 0)
            assert ref.irc_sentence_count == sum(
                1 for s in record.summary if s.role.is_argumentative
            )


class TestHypothesesIo:
    def test_roundtrip(self, tmp_path):
        hypotheses = {"a": "first summary text", "b": "second one"}
        path = tmp_path / "hyps.jsonl"
        save_hypotheses(hypotheses, path)
        assert load_hypotheses(path) == hypotheses

    def test_errors(self, tmp_path):
        bad = tmp_path / "bad.jsonl"
        bad.write_text("{broken\n", encoding="utf-8")
        with pytest.raises(MalformedRecord):
            load_hypotheses(bad)
        missing_field = tmp_path / "missing.jsonl"
        missing_field.write_text('{"id": "a"}\n', encoding="utf-8")
        with pytest.raises(MalformedRecord):
            load_hypotheses(missing_field)
        dup = tmp_path / "dup.jsonl"
        dup.write_text('{"id": "a", "summary": "x"}\n{"id": "a", "summary": "y"}\n', encoding="utf-8")
        with pytest.raises(DuplicateId):
            load_hypotheses(dup)


class TestEvaluateArgumentativeness:
    def test_identity_hypotheses_score_one(self, small_corpus):
        hypotheses = {r.id: irc_reference(r).irc_text for r in small_corpus}
        report = evaluate_argumentativeness(small_corpus, hypotheses)
        assert report.excluded_case_count == 0
        for case in report.cases:
            assert case.rouge1.f1 == pytest.approx(1.0)
            assert case.rouge2.f1 == pytest.approx(1.0)
            assert case.rougeL.f1 == pytest.approx(1.0)
        for metric in ("rouge1", "rouge2", "rougeL"):
            assert report.aggregates[metric]["f1"] == 100.00

    def test_full_reference_hypothesis_has_perfect_recall(self):
        record = _record(
            "c1",
            [
                Sentence("damages awarded", ArgRole.CONCLUSION),
                Sentence("background facts noted", ArgRole.NON_ARGUMENT),
            ],
        )
        hypothesis = "damages awarded background facts noted"
        report = evaluate_argumentativeness([record], {"c1": hypothesis})
        case = report.cases[0]
        assert case.rouge1.recall == pytest.approx(1.0)
        assert case.rouge1.precision == pytest.approx(2 / 5)
        assert case.rouge1.precision < 1.0

    def test_empty_irc_cases_excluded_but_counted(self):
        scored = _record("scored", [Sentence("the appeal is allowed", ArgRole.CONCLUSION)])
        excluded = _record("excluded", [Sentence("procedural history", ArgRole.NON_ARGUMENT)])
        report = evaluate_argumentativeness(
            [scored, excluded],
            {"scored": "the appeal is allowed", "excluded": "whatever got generated"},
        )
        assert report.scored_case_count == 1
        assert report.excluded_case_count == 1
        assert report.excluded_ids == ("excluded",)
        assert report.aggregates["rouge1"]["f1"] == 100.00

    def test_mean_length_covers_all_cases(self):
        first = _record("a", [Sentence("ruling stands", ArgRole.CONCLUSION)])
        second = _record("b", [Sentence("facts only", ArgRole.NON_ARGUMENT)])
        hypotheses = {
            "a": " ".join(["w"] * 156),
            "b": " ".join(["w"] * 174),
        }
        report = evaluate_argumentativeness([first, second], hypotheses)
        assert report.mean_hypothesis_words == 165.0
        assert report.excluded_case_count == 1

    def test_missing_hypothesis(self, small_corpus):
        hypotheses = {r.id: "text" for r in small_corpus[:-1]}
        with pytest.raises(MissingHypothesis) as excinfo:
            evaluate_argumentativeness(small_corpus, hypotheses)
        assert small_corpus[-1].id in excinfo.value.missing_ids

    def test_duplicate_case_ids(self, small_corpus):
        cases = small_corpus + [small_corpus[0]]
        hypotheses = {r.id: "text" for r in cases}
        with pytest.raises(DuplicateId):
            evaluate_argumentativeness(cases, hypotheses)

    def test_extra_hypotheses_ignored(self, small_corpus):
        hypotheses = {r.id: irc_reference(r).irc_text for r in small_corpus}
        hypotheses["unrelated"] = "noise"
        report = evaluate_argumentativeness(small_corpus, hypotheses)
        assert report.scored_case_count == len(small_corpus)

    def test_hypothesis_markers_stripped(self):
        record = _record("c", [Sentence("the appeal fails", ArgRole.CONCLUSION)])
        report = evaluate_argumentativeness(
            [record], {"c": "<IRC> the appeal fails </IRC>"}
        )
        assert report.cases[0].rouge1.f1 == pytest.approx(1.0)
        assert report.cases[0].hyp_words == 3

    def test_matches_evaluate_corpus_when_fully_argumentative(self):
        rng = random.Random(3)
        corpus = [
            make_record(rng, f"c{i}", summary_roles=[rng.choice(ARG_ROLES) for _ in range(3)])
            for i in range(6)
        ]
        hypotheses = {r.id: make_text(rng, 12) for r in corpus}
        arg_report = evaluate_argumentativeness(corpus, hypotheses)
        pairs = [
            (" ".join(s.text for s in r.summary), hypotheses[r.id], r.id) for r in corpus
        ]
        plain_report = evaluate_corpus(pairs)
        assert arg_report.aggregates == plain_report.aggregates
        assert arg_report.cases == plain_report.cases

    def test_config_echo_labels_reference_mode(self, small_corpus):
        hypotheses = {r.id: "text words" for r in small_corpus}
        report = evaluate_argumentativeness(small_corpus, hypotheses)
        assert report.config["reference"] == "argumentative_subset"
