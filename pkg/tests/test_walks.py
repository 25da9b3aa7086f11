import pytest
from hypothesis import given, strategies as st

from touchard import (
    DimKind,
    Direction,
    ParseError,
    Walk,
    WalkType,
    canonicalize_type,
    parse_walk,
    step_alphabet,
    validate,
    walk_text,
)
from touchard.walks import prefix_heights

from goldens import TABLE1_INVALID, TABLE1_VALID_NS


def test_canonicalize_sorts_letters():
    assert canonicalize_type("ea").letters == "ae"
    assert canonicalize_type("ACE").letters == "ace"
    assert canonicalize_type("ae") == canonicalize_type("EA")


def test_canonicalize_rejects_bad_input():
    with pytest.raises(ValueError):
        canonicalize_type("")
    with pytest.raises(ValueError):
        canonicalize_type("axe")
    with pytest.raises(ValueError):
        canonicalize_type("aaaaa")  # five dimensions


def test_free_direction_count():
    assert canonicalize_type("ae").free_direction_count == 2
    assert canonicalize_type("add").free_direction_count == 2
    assert canonicalize_type("bde").free_direction_count == 3
    assert canonicalize_type("abc").free_direction_count == 0
    assert canonicalize_type("ee").free_direction_count == 4


def test_step_alphabet_letter_assignment():
    # Dimension 0 speaks N/S, dimension 1 E/W, dimension 2 U/D, and a
    # fourth dimension falls back to the +3/-3 tokens.
    ae = dict(step_alphabet(canonicalize_type("ae")))
    assert ae == {
        "N": Direction(0, 1),
        "S": Direction(0, -1),
        "E": Direction(1, 1),
        "W": Direction(1, -1),
    }
    abcd = dict(step_alphabet(canonicalize_type("abcd")))
    assert abcd["U"] == Direction(2, 1)
    assert abcd["+3"] == Direction(3, 1)
    assert "-3" not in abcd  # dimension 3 is one-way here


def test_one_way_exposes_positive_letter_only():
    ad = dict(step_alphabet(canonicalize_type("ad")))
    assert "E" in ad and "W" not in ad


def test_parse_walk_case_and_whitespace():
    ae = canonicalize_type("ae")
    assert parse_walk("n s e w", ae) == parse_walk("NSEW", ae)
    assert parse_walk("", ae) == Walk(())
    assert walk_text(parse_walk(" ns\tEW ", ae), ae) == "NSEW"


def test_parse_walk_reports_offset():
    ae = canonicalize_type("ae")
    with pytest.raises(ParseError) as info:
        parse_walk("NXS", ae)
    assert info.value.offset == 1
    with pytest.raises(ParseError) as info:
        parse_walk("NS U", ae)  # U is not in the two-dimensional alphabet
    assert info.value.offset == 3


def test_parse_four_dimensional_tokens():
    wt = canonicalize_type("aaae")
    walk = parse_walk("N+3-3S", wt)
    assert walk.steps == (
        Direction(0, 1),
        Direction(3, 1),
        Direction(3, -1),
        Direction(0, -1),
    )
    assert walk_text(walk, wt) == "N+3-3S"


def test_validate_examples():
    ae = canonicalize_type("ae")
    assert validate(parse_walk("NSEW", ae), ae) is None
    assert validate(parse_walk("", ae), ae) is None

    violation = validate(parse_walk("ESNW", ae), ae)
    assert violation is not None
    assert violation.step_index == 1
    assert violation.dim == 0
    assert "below 0" in violation.reason

    violation = validate(parse_walk("N", ae), ae)
    assert violation.step_index == 1
    assert violation.reason == "nonzero final height in dimension 0"


def test_validate_against_published_length4_table():
    ae = canonicalize_type("ae")
    for text in TABLE1_VALID_NS:
        assert validate(parse_walk(text, ae), ae) is None, text
    for text, first_bad in TABLE1_INVALID:
        violation = validate(parse_walk(text, ae), ae)
        assert violation is not None, text
        assert violation.step_index == first_bad, text


def test_validate_bridge_allows_negative_heights():
    be = canonicalize_type("be")
    assert validate(parse_walk("SN", be), be) is None
    violation = validate(parse_walk("SS", be), be)
    assert violation.step_index == 2
    assert violation.reason == "nonzero final height in dimension 0"


def test_one_way_walks_reject_negative_steps():
    ad = canonicalize_type("ad")
    walk = Walk((Direction(1, -1),))
    with pytest.raises(ValueError):
        validate(walk, ad)


TYPE_POOL = ["a", "b", "c", "e", "ae", "ab", "ce", "ad", "ace", "bde", "abc"]


@st.composite
def typed_walk_text(draw):
    letters = draw(st.sampled_from(TYPE_POOL))
    walk_type = canonicalize_type(letters)
    tokens = [token for token, _ in step_alphabet(walk_type)]
    text = "".join(draw(st.lists(st.sampled_from(tokens), max_size=10)))
    return walk_type, text


@given(typed_walk_text())
def test_prefixes_of_valid_walks_only_fail_at_the_end(tw):
    # A valid walk's prefixes can only miss the return-to-zero condition,
    # never the stay-nonnegative one.
    walk_type, text = tw
    walk = parse_walk(text, walk_type)
    if validate(walk, walk_type) is not None:
        return
    for cut in range(walk.n + 1):
        prefix = Walk(walk.steps[:cut])
        violation = validate(prefix, walk_type)
        assert violation is None or violation.reason.startswith("nonzero final height")


@given(typed_walk_text())
def test_roundtrip_text(tw):
    walk_type, text = tw
    walk = parse_walk(text, walk_type)
    assert parse_walk(walk_text(walk, walk_type), walk_type) == walk


@given(st.sampled_from(["b", "bb", "bbb"]), st.data())
def test_bridge_reversal_symmetry(letters, data):
    walk_type = canonicalize_type(letters)
    tokens = [token for token, _ in step_alphabet(walk_type)]
    text = "".join(data.draw(st.lists(st.sampled_from(tokens), max_size=8)))
    walk = parse_walk(text, walk_type)
    reversed_walk = Walk(tuple(Direction(d, -s) for d, s in reversed(walk.steps)))
    assert (validate(walk, walk_type) is None) == (
        validate(reversed_walk, walk_type) is None
    )


def test_prefix_heights():
    ae = canonicalize_type("ae")
    walk = parse_walk("NES", ae)
    assert prefix_heights(walk, 2) == [(1, 0), (1, 1), (0, 1)]
