import pytest
from hypothesis import given, settings, strategies as st

from touchard import (
    aa_closed,
    ab_closed,
    ace3d_count,
    binomial,
    canonicalize_type,
    catalan,
    central_binomial_even,
    count_dp,
    enumerate_walks,
    general_count,
    halfplane_closed,
    quadrant_axis_sum,
    touchard_terms,
    vandermonde_chain,
)

from conftest import all_type_strings
from goldens import TOUCHARD_N4_ADDENDS


def test_touchard_terms_frozen():
    assert touchard_terms(0) == [(0, 1)]
    assert touchard_terms(1) == [(0, 2)]
    assert tuple(t for _, t in touchard_terms(4)) == TOUCHARD_N4_ADDENDS
    assert sum(t for _, t in touchard_terms(4)) == 42


def test_touchard_identity_holds():
    for n in range(61):
        assert sum(t for _, t in touchard_terms(n)) == catalan(n + 1), n


def test_touchard_terms_all_positive():
    for n in range(20):
        terms = touchard_terms(n)
        assert [i for i, _ in terms] == list(range(n // 2 + 1))
        assert all(t > 0 for _, t in terms)


def test_touchard_terms_rejects_negative():
    with pytest.raises(ValueError):
        touchard_terms(-1)


def test_general_count_tiny_cases():
    ab = canonicalize_type("ab")
    assert general_count(ab, 0) == 1
    assert general_count(ab, 1) == 0
    # The three walks of length 2: NS, EW, WE.
    assert general_count(ab, 2) == 3
    ae = canonicalize_type("ae")
    assert [general_count(ae, n) for n in range(6)] == [1, 2, 5, 14, 42, 132]


def test_general_count_rejects_negative():
    with pytest.raises(ValueError):
        general_count(canonicalize_type("ae"), -1)


def test_general_count_matches_dp_all_small_types():
    for letters in all_type_strings(3):
        wt = canonicalize_type(letters)
        for n in range(7):
            assert general_count(wt, n) == count_dp(wt, n), (letters, n)


@settings(max_examples=30, deadline=None)
@given(
    st.text(alphabet="abcde", min_size=4, max_size=4),
    st.integers(0, 5),
)
def test_general_count_matches_dp_four_dims(letters, n):
    wt = canonicalize_type(letters)
    assert general_count(wt, n) == count_dp(wt, n)


def test_general_count_matches_enumeration():
    for letters in ("ae", "ac", "bd", "ce", "abc"):
        wt = canonicalize_type(letters)
        for n in range(6):
            assert general_count(wt, n) == len(enumerate_walks(wt, n))


def test_ab_closed_matches_dp_and_sum_form():
    wt = canonicalize_type("ab")
    for n in range(0, 25, 2):
        h = n // 2
        sum_form = sum(
            catalan(h - i) * binomial(n, 2 * i) * central_binomial_even(i)
            for i in range(h + 1)
        )
        assert ab_closed(n) == sum_form
        assert ab_closed(n) == count_dp(wt, n)


def test_aa_closed_matches_dp_and_sum_form():
    wt = canonicalize_type("aa")
    for n in range(0, 25, 2):
        h = n // 2
        sum_form = sum(
            catalan(i) * catalan(h - i) * binomial(n, 2 * i) for i in range(h + 1)
        )
        assert aa_closed(n) == sum_form
        assert aa_closed(n) == count_dp(wt, n)


def test_even_only_closed_forms_reject_odd():
    for fn in (ab_closed, aa_closed, vandermonde_chain):
        with pytest.raises(ValueError):
            fn(3)
        with pytest.raises(ValueError):
            fn(-2)


def test_quadrant_axis_sum_counts_excursion_meander():
    wt = canonicalize_type("ac")
    values = [quadrant_axis_sum(n) for n in range(6)]
    assert values == [1, 1, 3, 6, 20, 50]
    assert values == sequence_of(wt, 5)


def test_halfplane_closed_counts_meander_free():
    wt = canonicalize_type("ce")
    values = [halfplane_closed(n) for n in range(6)]
    assert values == [1, 3, 10, 35, 126, 462]
    assert values == sequence_of(wt, 5)


def test_published_quadrant_claim_disagrees_from_n1():
    # The two formulas attached to the same row in the reference table
    # describe different walk families; they only meet at n = 0.
    assert quadrant_axis_sum(0) == halfplane_closed(0) == 1
    for n in range(1, 8):
        assert quadrant_axis_sum(n) != halfplane_closed(n), n


def test_ace3d_frozen_and_consistent():
    wt = canonicalize_type("ace")
    values = [ace3d_count(n) for n in range(11)]
    assert values[:3] == [1, 3, 11]
    assert values == sequence_of(wt, 10)
    for n in range(11):
        assert ace3d_count(n) == general_count(wt, n), n


def test_vandermonde_chain_all_equal_and_closed():
    for n in range(0, 21, 2):
        values = vandermonde_chain(n)
        assert len(values) == 6
        assert len(set(values)) == 1, n
        assert values[0] == ab_closed(n), n
    assert vandermonde_chain(0) == [1] * 6


def sequence_of(wt, n_max):
    return [count_dp(wt, n) for n in range(n_max + 1)]
