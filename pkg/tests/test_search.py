"""Tests for exhaustive search, even-modulus classification, and probing."""

import pytest

from steinhaus import (
    BudgetExceeded,
    SearchBudget,
    SearchReport,
    Sequence,
    brute_force_balanced,
    classify_even_progressions,
    is_admissible,
    is_balanced,
    molluzzo_probe,
)


def seqs(n, rows):
    return tuple(Sequence(n, row) for row in rows)


def test_budget_validation():
    SearchBudget()
    SearchBudget(max_states=1, workers=3)
    with pytest.raises(ValueError):
        SearchBudget(max_states=0)
    with pytest.raises(ValueError):
        SearchBudget(workers=0)


def test_brute_force_small_binary():
    report = brute_force_balanced(2, 3)
    assert report == SearchReport(
        modulus=2,
        length=3,
        found=seqs(2, [(0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1)]),
        count=4,
        states_examined=8,
    )


def test_brute_force_no_hits():
    report = brute_force_balanced(2, 2)
    assert report.found == ()
    assert report.count == 0
    assert report.states_examined == 4


def test_brute_force_quaternary_length_four():
    report = brute_force_balanced(2, 4)
    assert report.found == seqs(
        2,
        [
            (0, 0, 1, 0),
            (0, 0, 1, 1),
            (0, 1, 0, 0),
            (0, 1, 0, 1),
            (1, 0, 1, 0),
            (1, 1, 0, 0),
        ],
    )
    assert report.count == 6


def test_brute_force_mod_five():
    report = brute_force_balanced(5, 4)
    assert report.count == 4
    assert Sequence(5, (2, 2, 3, 3)) in report.found
    assert all(is_balanced(seq) for seq in report.found)


def test_brute_force_trivial_modulus():
    report = brute_force_balanced(1, 5)
    assert report.found == (Sequence(1, (0, 0, 0, 0, 0)),)
    assert report.states_examined == 1


def test_brute_force_budget():
    with pytest.raises(BudgetExceeded):
        brute_force_balanced(2, 4, budget=SearchBudget(max_states=15))
    # the boundary itself is allowed
    report = brute_force_balanced(2, 4, budget=SearchBudget(max_states=16))
    assert report.count == 6


def test_brute_force_count_only():
    report = brute_force_balanced(2, 4, count_only=True)
    assert report.found == ()
    assert report.count == 6
    assert report.states_examined == 16


def test_worker_count_does_not_change_report():
    serial = brute_force_balanced(3, 8)
    for workers in (2, 4):
        parallel = brute_force_balanced(3, 8, budget=SearchBudget(workers=workers))
        assert parallel == serial


def test_more_workers_than_prefixes():
    serial = brute_force_balanced(2, 3)
    parallel = brute_force_balanced(2, 3, budget=SearchBudget(workers=16))
    assert parallel == serial


def test_brute_force_matches_direct_filter():
    from itertools import product

    for n, m in [(3, 5), (4, 7), (5, 4)]:
        expected = tuple(
            Sequence(n, terms)
            for terms in product(range(n), repeat=m)
            if is_balanced(Sequence(n, terms))
        )
        assert brute_force_balanced(n, m).found == expected


def test_classify_even_small():
    hits = classify_even_progressions(2, max_length=40)
    assert [ap.to_sequence().terms for ap in hits] == [
        (0, 1, 0),
        (1, 1, 1),
        (0, 1, 0, 1),
        (1, 0, 1, 0),
    ]
    hits = classify_even_progressions(6, max_length=40)
    assert [ap.to_sequence().terms for ap in hits] == [
        (1, 3, 5),
        (2, 3, 4),
        (4, 3, 2),
        (5, 3, 1),
    ]


def test_classify_even_empty_moduli():
    for n in (4, 8, 10, 12):
        assert classify_even_progressions(n, max_length=40) == []


def test_classify_even_rejects_odd():
    with pytest.raises(ValueError):
        classify_even_progressions(5)
    with pytest.raises(ValueError):
        classify_even_progressions(6, max_length=0)


def test_classify_even_results_are_balanced_and_admissible():
    for ap in classify_even_progressions(6, max_length=40):
        assert is_admissible(ap.modulus, ap.length)
        assert is_balanced(ap.to_sequence())


def test_probe_constructive_cases():
    assert molluzzo_probe(3, 27) is True
    assert molluzzo_probe(9, 18) is True
    assert molluzzo_probe(7, 21) is True


def test_probe_falls_back_to_search():
    assert molluzzo_probe(2, 7) is True
    assert molluzzo_probe(2, 4) is True
    # admissible for mod 5 but not covered by any construction
    assert molluzzo_probe(5, 4) is True


def test_probe_rejects_non_admissible():
    with pytest.raises(ValueError):
        molluzzo_probe(5, 3)
    with pytest.raises(ValueError):
        molluzzo_probe(7, 2)


def test_probe_budget():
    with pytest.raises(BudgetExceeded):
        molluzzo_probe(11, 10, budget=SearchBudget(max_states=100))
