"""Engine tests: verdicts, strategy merging, the cache, and documents."""

from __future__ import annotations

import io
import threading
import time

import pytest

from tamilspell.checker import (
    CheckReport,
    EngineConfig,
    SpellChecker,
    SuggestionCache,
    TokenReport,
    Verdict,
    load_parallel_dict,
    load_stop_words,
)
from tamilspell.edits import letter_edit_distance
from tamilspell.suggestion import Strategy, Suggestion


def engine(lexicon, **kwargs):
    kwargs.setdefault("parallel_dict", {"computer": "கணினி"})
    return SpellChecker(lexicon, **kwargs)


# ----------------------------------------------------------------- words


def test_valid_word(fixture_lexicon):
    report = engine(fixture_lexicon).check_word("பழம்")
    assert report.verdict is Verdict.VALID
    assert report.suggestions == ()
    assert report.is_clean


def test_nonword_merged_order(fixture_lexicon):
    report = engine(fixture_lexicon).check_word("பளம்")
    assert report.verdict is Verdict.NON_WORD
    assert not report.is_clean
    got = [(s.candidate, s.strategy) for s in report.suggestions]
    # Series substitutions outrank the keyboard hit, which outranks plain
    # edit candidates at the same distance.
    assert got[0] == ("பலம்", Strategy.MAYANGOLI)
    assert got[1] == ("பழம்", Strategy.MAYANGOLI)
    assert ("களம்", Strategy.KEYBOARD) in got


def test_merge_keeps_lowest_priority_strategy(fixture_lexicon):
    # பழம் is one edit away too, but the series strategy claims it.
    report = engine(fixture_lexicon).check_word("பளம்")
    by_candidate = {s.candidate: s for s in report.suggestions}
    assert by_candidate["பழம்"].strategy is Strategy.MAYANGOLI
    assert by_candidate["பழம்"].score == 1


def test_merged_list_is_sorted(fixture_lexicon):
    report = engine(fixture_lexicon).check_word("பளம்")
    keys = [(s.score, s.strategy.priority, s.candidate) for s in report.suggestions]
    assert keys == sorted(keys)


def test_scores_are_letter_edit_distance(fixture_lexicon):
    report = engine(fixture_lexicon).check_word("பளம்")
    for s in report.suggestions:
        if s.strategy is Strategy.CONJOINED:
            assert s.score == 0
        else:
            assert s.score == letter_edit_distance("பளம்", s.candidate)


def test_conjoined_scores_zero_and_reads_clean(fixture_lexicon):
    report = engine(fixture_lexicon).check_word("தென்றல்காற்று")
    assert report.verdict is Verdict.NON_WORD
    top = report.suggestions[0]
    assert top == Suggestion("தென்றல் காற்று", Strategy.CONJOINED, 0)
    assert report.is_clean


def test_max_suggestions_cap(fixture_lexicon):
    config = EngineConfig(max_suggestions=2)
    report = engine(fixture_lexicon, config=config).check_word("பளம்")
    assert len(report.suggestions) == 2
    zero = engine(fixture_lexicon, config=EngineConfig(max_suggestions=0))
    assert zero.check_word("பளம்").suggestions == ()


def test_ranker_reorders_before_cap(fixture_lexicon):
    config = EngineConfig(max_suggestions=3)
    plain = engine(fixture_lexicon, config=config).check_word("பளம்").suggestions
    flipped = engine(
        fixture_lexicon,
        config=config,
        ranker=lambda w, ranked: list(reversed(ranked)),
    ).check_word("பளம்").suggestions
    # The cap applies after the hook, so the reversed list surfaces the tail.
    assert flipped != plain
    assert len(flipped) == 3


def test_engine_config_validation():
    with pytest.raises(ValueError):
        EngineConfig(edit_distance=0)
    with pytest.raises(ValueError):
        EngineConfig(workers=0)
    with pytest.raises(ValueError):
        EngineConfig(max_suggestions=-1)


def test_grantha_config_widens_alphabet(fixture_lexicon):
    assert len(engine(fixture_lexicon).alphabet) == 247
    wide = engine(fixture_lexicon, config=EngineConfig(grantha=True))
    assert len(wide.alphabet) == 323


# ----------------------------------------------------------------- documents


def test_check_text_orders_and_verdicts(fixture_lexicon):
    text = "பழம் பளம், computer!"
    report = engine(fixture_lexicon).check_text(text)
    assert [t.token for t in report.tokens] == ["பழம்", "பளம்", "computer"]
    assert [t.verdict for t in report.tokens] == [
        Verdict.VALID,
        Verdict.NON_WORD,
        Verdict.NON_TAMIL,
    ]
    assert not report.clean
    assert [t.token for t in report.non_words()] == ["பளம்"]


def test_valid_tokens_carry_no_suggestions(fixture_lexicon):
    report = engine(fixture_lexicon).check_text("பழம் வீடு மரம் பளம்")
    for token in report.tokens:
        if token.verdict is Verdict.VALID:
            assert token.suggestions == ()


def test_stop_words_skipped(fixture_lexicon):
    eng = engine(fixture_lexicon, stop_words=["பளம்"])
    report = eng.check_text("பளம் பழம்")
    assert report.tokens[0].verdict is Verdict.SKIPPED
    assert report.tokens[0].suggestions == ()
    assert report.clean


def test_foreign_token_casefolds(fixture_lexicon):
    report = engine(fixture_lexicon).check_text("COMPUTER Computer computer")
    for token in report.tokens:
        assert token.verdict is Verdict.NON_TAMIL
        assert [s.candidate for s in token.suggestions] == ["கணினி"]
        assert token.suggestions[0].strategy is Strategy.FOREIGN


def test_unknown_foreign_has_no_suggestions(fixture_lexicon):
    report = engine(fixture_lexicon).check_text("zebra")
    token = report.tokens[0]
    assert token.verdict is Verdict.NON_TAMIL
    assert token.suggestions == ()
    assert token.is_clean


def test_empty_text_is_clean(fixture_lexicon):
    report = engine(fixture_lexicon).check_text("")
    assert report.tokens == ()
    assert report.clean


def test_mixed_script_token_goes_to_lexicon(fixture_lexicon):
    # One Tamil code point is enough to route a token at the lexicon.
    report = engine(fixture_lexicon).check_text("பzழம்")
    assert report.tokens[0].verdict is Verdict.NON_WORD


def test_to_json_keeps_tamil_readable(fixture_lexicon):
    report = engine(fixture_lexicon).check_text("பளம்")
    text = report.to_json()
    assert "பளம்" in text
    assert "\\u" not in text


def test_report_dict_shapes(fixture_lexicon):
    report = engine(fixture_lexicon).check_text("பழம் பளம்")
    dicts = report.as_dicts()
    assert dicts[0] == {"token": "பழம்", "verdict": "valid", "suggestions": []}
    entry = dicts[1]
    assert entry["token"] == "பளம்"
    assert entry["verdict"] == "nonword"
    first = entry["suggestions"][0]
    assert set(first) == {"candidate", "strategy", "score"}


# ----------------------------------------------------------------- cache


def test_cache_counts_and_shares_result(fixture_lexicon):
    eng = engine(fixture_lexicon)
    report = eng.check_text("பளம் பளம் பளம் பளம்")
    assert eng.cache.misses == 1
    assert eng.cache.hits == 3
    assert eng.suggestion_computations == 1
    tuples = [t.suggestions for t in report.tokens]
    assert all(t is tuples[0] for t in tuples)


def test_cache_disabled_recomputes(fixture_lexicon):
    config = EngineConfig(cache_enabled=False)
    eng = engine(fixture_lexicon, config=config)
    eng.check_text("பளம் பளம் பளம்")
    assert eng.suggestion_computations == 3
    assert eng.cache.hits == 0
    assert eng.cache.misses == 3
    assert len(eng.cache) == 0


def test_cache_hits_return_identical_object(fixture_lexicon):
    eng = engine(fixture_lexicon)
    first = eng.check_word("பளம்").suggestions
    second = eng.check_word("பளம்").suggestions
    assert second is first


def test_computations_count_distinct_nonwords(fixture_lexicon):
    # கறி is in the lexicon; பளம் and சுவம் are the two distinct non-words.
    eng = engine(fixture_lexicon, config=EngineConfig(workers=2))
    eng.check_text("பளம் கறி சுவம் பளம் கறி சுவம் பளம்")
    assert eng.suggestion_computations == 2


def test_single_flight_under_contention(fixture_lexicon):
    eng = engine(fixture_lexicon)
    calls = []
    original = eng._compute_suggestions

    def slow(word):
        calls.append(word)
        time.sleep(0.05)
        return original(word)

    eng._compute_suggestions = slow
    results = [None] * 8
    barrier = threading.Barrier(8)

    def worker(slot):
        barrier.wait()
        results[slot] = eng._suggestions_for("பளம்")

    threads = [threading.Thread(target=worker, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert calls == ["பளம்"]
    assert all(r is results[0] for r in results)
    assert eng.cache.misses == 1
    assert eng.cache.hits == 7


def test_cache_never_stores_failures():
    cache = SuggestionCache()
    boom = []

    def compute():
        boom.append(1)
        if len(boom) == 1:
            raise RuntimeError("first call fails")
        return ("ok",)

    with pytest.raises(RuntimeError):
        cache.get_or_compute("word", compute)
    assert len(cache) == 0
    assert cache.get_or_compute("word", compute) == ("ok",)
    assert cache.misses == 2


def test_cache_clear(fixture_lexicon):
    eng = engine(fixture_lexicon)
    eng.check_word("பளம்")
    assert len(eng.cache) == 1
    eng.cache.clear()
    assert len(eng.cache) == 0
    eng.check_word("பளம்")
    assert eng.cache.misses == 2


# ----------------------------------------------------------------- workers


def _document():
    words = ["பழம்", "பளம்", "வீடு", "கறி", "மரம்", "computer", "தென்றல்காற்று"]
    return " ".join(words[i % len(words)] for i in range(120))


@pytest.mark.parametrize("workers", [2, 4])
def test_worker_reports_match_serial(fixture_lexicon, workers):
    doc = _document()
    serial = engine(fixture_lexicon).check_text(doc).to_json()
    pooled = engine(
        fixture_lexicon, config=EngineConfig(workers=workers)
    ).check_text(doc).to_json()
    assert pooled == serial


def test_workers_without_cache_match_serial(fixture_lexicon):
    doc = _document()
    serial = engine(fixture_lexicon).check_text(doc).to_json()
    config = EngineConfig(workers=4, cache_enabled=False)
    pooled = engine(fixture_lexicon, config=config).check_text(doc).to_json()
    assert pooled == serial


def test_worker_cache_counts_stay_per_distinct_word(fixture_lexicon):
    eng = engine(fixture_lexicon, config=EngineConfig(workers=4))
    eng.check_text("பளம் பளம் சுவம் பளம் சுவம்")
    assert eng.suggestion_computations == 2
    assert eng.cache.misses == 2


def test_stats_shape(fixture_lexicon):
    eng = engine(fixture_lexicon)
    eng.check_word("பளம்")
    stats = eng.stats
    assert stats["cache_enabled"] is True
    assert stats["cache_misses"] == 1
    assert stats["suggestion_computations"] == 1
    assert stats["kernel_backend"] in ("pure", "cython")


# ----------------------------------------------------------------- loaders


def test_load_parallel_dict_casefolds_keys(tmp_path):
    path = tmp_path / "parallel.tsv"
    path.write_text("# pairs\nComputer\tகணினி\n\nPHONE\tதொலைபேசி\n", encoding="utf-8")
    mapping = load_parallel_dict(path)
    assert mapping == {"computer": "கணினி", "phone": "தொலைபேசி"}


def test_load_parallel_dict_requires_tab():
    stream = io.StringIO("computer கணினி\n")
    with pytest.raises(Exception) as err:
        load_parallel_dict(stream)
    assert ":1:" in str(err.value)


def test_load_parallel_dict_rejects_empty_field():
    stream = io.StringIO("computer\tகணினி\n\t கணினி\n")
    with pytest.raises(Exception) as err:
        load_parallel_dict(stream)
    assert ":2:" in str(err.value)


def test_load_stop_words(tmp_path):
    path = tmp_path / "stops.txt"
    path.write_text("# list\nஒரு\n\nஅந்த\n", encoding="utf-8")
    assert load_stop_words(path) == frozenset({"ஒரு", "அந்த"})


def test_bundled_parallel_dict_used_by_default(fixture_lexicon, fixture_parallel):
    eng = SpellChecker(fixture_lexicon, parallel_dict=fixture_parallel)
    token = eng.check_text("internet").tokens[0]
    assert [s.candidate for s in token.suggestions] == ["இணையம்"]


def test_token_report_is_frozen(fixture_lexicon):
    report = engine(fixture_lexicon).check_word("பழம்")
    with pytest.raises(AttributeError):
        report.verdict = Verdict.NON_WORD
