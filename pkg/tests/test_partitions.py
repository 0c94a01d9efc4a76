import pytest
from hypothesis import given, strategies as st

from spindec.partitions import (
    EMPTY, Composition, Partition, add, conjugate, contains, dbl, dblbar, dblbar_composition,
    dominates, format_partition, h2, hook_dimension, is_strict, multinomial, parity_a,
    parse_partition, partitions, rectangle, rows_gt, rows_le, cols_gt, cols_le, slice_nodes,
    strict_partitions, union_sorted,
)

from oracles import hook_dimension_brute

PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]
STRICT_COUNTS = [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15]


@st.composite
def partition_st(draw, max_n=12):
    n = draw(st.integers(0, max_n))
    return draw(st.sampled_from(partitions(n)))


def test_construction_normalises_and_validates():
    assert Partition((3, 1, 0, 0)) == (3, 1)
    assert Partition(()) == EMPTY and EMPTY.size == 0
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))
    with pytest.raises(ValueError):
        Composition((1, -1))
    assert Partition((4, 2, 1)).length == 3 and Partition((4, 2, 1)).size == 7


@pytest.mark.parametrize("n", range(13))
def test_enumeration_counts(n):
    assert len(partitions(n)) == PARTITION_COUNTS[n]
    assert len(strict_partitions(n)) == STRICT_COUNTS[n]
    assert len(set(partitions(n))) == len(partitions(n))


@pytest.mark.parametrize("n", range(1, 11))
def test_enumeration_order_refines_dominance(n):
    ps = partitions(n)
    for i, p in enumerate(ps):
        for q in ps[i + 1:]:
            assert not dominates(q, p) or q == p


def test_conjugate_examples():
    assert conjugate(Partition((4, 2, 1))) == (3, 2, 1, 1)
    assert conjugate(EMPTY) == EMPTY
    assert conjugate(Partition((1, 1, 1))) == (3,)


@given(partition_st())
def test_conjugate_is_involution(p):
    assert conjugate(conjugate(p)) == p
    assert conjugate(p).size == p.size


@given(st.integers(1, 10).flatmap(lambda n: st.tuples(st.sampled_from(partitions(n)), st.sampled_from(partitions(n)))))
def test_dominance_reverses_under_conjugation(pq):
    p, q = pq
    assert dominates(p, q) == dominates(conjugate(q), conjugate(p))


def test_dominance_examples_and_errors():
    assert dominates((3, 1), (2, 2))
    assert not dominates((2, 2), (3, 1))
    assert not dominates((3, 1, 1, 1), (2, 2, 2)) and not dominates((2, 2, 2), (3, 1, 1, 1))
    assert dominates(Composition((3, 1, 2)), (3, 2, 1)) is False
    assert dominates((3, 2, 1), Composition((3, 1, 2)))
    with pytest.raises(ValueError):
        dominates((2,), (1,))


def test_parity_and_even_parts():
    assert h2((4, 2, 1)) == 2 and parity_a((4, 2, 1)) == 0
    assert parity_a((6, 1)) == 1 and parity_a((3,)) == 0 and parity_a(()) == 0


def test_dbl_examples():
    assert dbl((4, 2)) == (3, 1, 2)
    assert dbl((6, 1)) == (4, 2, 1)
    assert dbl((5,)) == (3, 2)
    assert dbl((1,)) == (1,)
    assert dblbar((5, 2)) == (3, 2, 1, 1)
    assert dblbar_composition((3, 3)) == (2, 1, 2, 1)
    with pytest.raises(ValueError):
        dblbar((3, 3))


@given(partition_st())
def test_dbl_preserves_size(p):
    assert dbl(p).size == p.size
    assert dblbar_composition(p).size == p.size


def test_slices():
    lam = Partition((5, 4, 2, 1))
    assert rows_le(lam, 2) == (5, 4) and rows_gt(lam, 2) == (2, 1)
    assert cols_le(lam, 2) == (2, 2, 2, 1) and cols_gt(lam, 2) == (3, 2)
    assert slice_nodes(lam, r_gt=1, c_le=3) == (3, 2, 1)
    assert slice_nodes((4, 3, 1), r_gt=1, c_le=2) == (2, 1)
    assert rows_le(lam, 0) == EMPTY and rows_gt(lam, 10) == EMPTY


@given(partition_st(), st.integers(0, 12))
def test_slices_partition_the_nodes(p, m):
    assert rows_le(p, m).size + rows_gt(p, m).size == p.size
    assert cols_le(p, m).size + cols_gt(p, m).size == p.size
    assert conjugate(cols_le(p, m)) == rows_le(conjugate(p), m)


def test_union_add_rectangle_contains():
    assert union_sorted((3, 1), (2, 1)) == (3, 2, 1, 1)
    assert add((3, 1), (2, 2, 1)) == (5, 3, 1)
    assert rectangle(2, 3) == (2, 2, 2) and rectangle(1, 0) == EMPTY
    assert contains((3, 2), (2, 2)) and not contains((3, 2), (1, 1, 1))


@given(partition_st(8), partition_st(8))
def test_union_is_conjugate_of_sum(p, q):
    assert union_sorted(p, q) == conjugate(add(conjugate(p), conjugate(q)))


@pytest.mark.parametrize("n", range(9))
def test_hook_formula_matches_recursion(n):
    for p in partitions(n):
        assert hook_dimension(p) == hook_dimension_brute(p)


def test_multinomial_and_strictness():
    assert multinomial((2, 2)) == 6 and multinomial(()) == 1
    assert is_strict((3, 2)) and not is_strict((2, 2)) and is_strict(())


@given(partition_st())
def test_text_round_trip(p):
    assert parse_partition(format_partition(p)) == p


def test_text_forms():
    assert format_partition(EMPTY) == "-"
    assert parse_partition("-") == EMPTY
    assert parse_partition("[3, 1]") == (3, 1)
    assert parse_partition("(2,1)") == (2, 1)
