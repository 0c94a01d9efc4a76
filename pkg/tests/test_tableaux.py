import pytest
from hypothesis import given, strategies as st

from spindec.partitions import EMPTY, Partition, conjugate, partitions, strict_partitions
from spindec.tableaux import (
    diagonal_filling, format_word, lattice_check, lr_coefficient, lr_skew_expansion, marked,
    parse_word, reading_word_bottom_up, reading_word_top_down, shifted_coefficient, unmarked,
)

from oracles import lr_brute, shifted_brute


def test_word_codes():
    assert marked(1) < unmarked(1) < marked(2) < unmarked(2)
    w = parse_word("1 2' 2 3'")
    assert w == (2, 3, 4, 5)
    assert format_word(w) == "1 2' 2 3'"


def test_ordinary_lattice():
    assert lattice_check((1, 2))
    assert not lattice_check((2, 1))
    assert lattice_check(())
    assert lattice_check((1, 1, 2, 3, 2))
    assert not lattice_check((1, 2, 2))


def test_marked_lattice_simple_words():
    assert lattice_check((), shifted=True)
    assert lattice_check(parse_word("1"), shifted=True)
    assert not lattice_check(parse_word("2"), shifted=True)


@pytest.mark.parametrize("n", range(1, 9))
def test_diagonal_filling_is_lattice(n):
    for lam in strict_partitions(n):
        word = reading_word_bottom_up(diagonal_filling(lam))
        assert lattice_check(word, shifted=True)
        assert lattice_check([(x + 1) // 2 for x in reading_word_top_down(diagonal_filling(lam))])


def test_lr_examples():
    assert lr_coefficient((1,), (1, 1), (2, 1)) == 1
    assert lr_coefficient((2, 1), EMPTY, (2, 1)) == 1
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((2,), (1,), (1, 1, 1)) == 0
    assert lr_coefficient((3,), (1,), (2, 2)) == 0


def _triples(max_total):
    for n in range(max_total + 1):
        for gamma in partitions(n):
            for k in range(n + 1):
                for alpha in partitions(k):
                    for beta in partitions(n - k):
                        yield alpha, beta, gamma


@pytest.mark.parametrize("total", range(0, 7))
def test_lr_matches_brute_force(total):
    for alpha, beta, gamma in _triples(total):
        if alpha.size + beta.size == gamma.size == total:
            assert lr_coefficient(alpha, beta, gamma) == lr_brute(alpha, beta, gamma), (alpha, beta, gamma)


@pytest.mark.parametrize("n", range(1, 7))
def test_littlewood_richardson_rule_counts_dimensions(n):
    # Σ_γ c^γ_{α,β} f^γ = C(n, |α|) f^α f^β
    from math import comb
    from spindec.partitions import hook_dimension
    for k in range(n + 1):
        for alpha in partitions(k):
            for beta in partitions(n - k):
                total = sum(lr_coefficient(alpha, beta, g) * hook_dimension(g) for g in partitions(n))
                assert total == comb(n, k) * hook_dimension(alpha) * hook_dimension(beta)


def test_skew_expansion_agrees_with_coefficients():
    exp = lr_skew_expansion((2, 1), (4, 3, 1))
    for beta in partitions(5):
        assert exp.get(beta, 0) == lr_coefficient((2, 1), beta, (4, 3, 1))
    assert lr_skew_expansion((3,), (2, 2)) == {}


@given(st.integers(0, 9).flatmap(lambda n: st.sampled_from(partitions(n))))
def test_lr_conjugation_symmetry(gamma):
    for k in range(gamma.size + 1):
        for alpha in partitions(k):
            for beta, c in lr_skew_expansion(alpha, gamma).items():
                assert lr_coefficient(conjugate(alpha), conjugate(beta), conjugate(gamma)) == c
                assert lr_coefficient(beta, alpha, gamma) == c


def test_shifted_examples():
    assert shifted_coefficient((2, 1), (2, 1)) == 1
    assert shifted_coefficient((2,), (1,)) == 0
    assert shifted_coefficient(EMPTY, EMPTY) == 1
    for n in range(1, 9):
        for lam in strict_partitions(n):
            assert shifted_coefficient(lam, lam) >= 1


@pytest.mark.parametrize("n", range(1, 7))
def test_shifted_matches_brute_force(n):
    for alpha in partitions(n):
        for beta in strict_partitions(n):
            assert shifted_coefficient(alpha, beta) == shifted_brute(alpha, beta), (alpha, beta)


@pytest.mark.parametrize("n", range(1, 6))
def test_shifted_brute_force_with_nonstrict_content(n):
    for alpha in partitions(n):
        for beta in partitions(n):
            assert shifted_coefficient(alpha, beta) == shifted_brute(alpha, beta), (alpha, beta)


@pytest.mark.parametrize("n", range(1, 11))
def test_shifted_support_is_triangular(n):
    from spindec.partitions import dominates
    for alpha in partitions(n):
        for beta in strict_partitions(n):
            if shifted_coefficient(alpha, beta):
                assert dominates(beta, alpha)


@pytest.mark.parametrize(
    "alpha, beta, value",
    [((2, 1, 1), (3, 1), 1), ((3, 2, 1), (4, 2), 2), ((2, 2, 2), (4, 2), 1), ((3, 3), (4, 2), 1), ((2, 1), (2, 1), 1)],
)
def test_shifted_regression_pins(alpha, beta, value):
    assert shifted_coefficient(alpha, beta) == value
    assert shifted_brute(alpha, beta) == value
