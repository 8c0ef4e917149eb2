import pytest

from conllu_adapter import AdapterError, RawSentence, instantiate_templates, pinned_model


def test_raw_sentence_validation():
    with pytest.raises(AdapterError, match="empty text"):
        RawSentence("s1", "   ")
    with pytest.raises(AdapterError, match="needs an id"):
        RawSentence("", "Fine text")


def test_cross_product_counts_and_ids():
    out = instantiate_templates(["X causes Y", "Y caused by X", "X leads to Y",
                                 "Y attributed to X"],
                                [("fire", "damage"), ("smoking", "cancer")])
    assert len(out) == 8
    assert [r.sentence_id for r in out[:3]] == ["t0_p0", "t0_p1", "t1_p0"]


def test_substitution_and_capitalization():
    out = instantiate_templates(["Y is caused by X"], [("fire", "damage")])
    assert out[0] == RawSentence("t0_p0", "Damage is caused by fire")


def test_substitution_keeps_punctuation():
    out = instantiate_templates(["Y, which is attributed to X"], [("a bad fall", "fractures")])
    assert out[0].text == "Fractures, which is attributed to a bad fall"


def test_placeholders_required_exactly_once():
    with pytest.raises(AdapterError, match="exactly once"):
        instantiate_templates(["X causes trouble"], [("a", "b")])
    with pytest.raises(AdapterError, match="exactly once"):
        instantiate_templates(["X causes Y and Y"], [("a", "b")])
    with pytest.raises(AdapterError, match="exactly once"):
        instantiate_templates(["nothing here"], [("a", "b")])


def test_placeholder_must_be_word_bounded():
    # lowercase letters and mid-word capitals are not placeholders
    with pytest.raises(AdapterError, match="exactly once"):
        instantiate_templates(["DIY extras cause mayhem"], [("a", "b")])
    out = instantiate_templates(["Y follows X quickly"], [("rain", "floods")])
    assert out[0].text == "Floods follows rain quickly"


def test_empty_pairs_give_empty_output():
    assert instantiate_templates(["X causes Y"], []) == []


def test_pinned_model_parses_lock():
    name, version = pinned_model()
    assert name == "en_core_web_sm"
    assert version and version[0].isdigit()
