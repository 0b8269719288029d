import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lozgap.errors import DomainError, UsageError, ValidationError
from lozgap.exactcount import (
    SkewArray,
    binom,
    lemma_sum_a,
    lemma_sum_b,
    lemma_sum_b_midform,
    lgv_pfaffian_count,
    macmahon_box,
    pfaffian,
    product_formula_count,
    schur_pfaffian_lhs,
    schur_pfaffian_rhs,
    ssc_hexagon_count,
)
from lozgap.regions import HexagonSpec

rationals = st.fractions(
    min_value=Fraction(-8), max_value=Fraction(8), max_denominator=8
)
positive_rationals = st.fractions(
    min_value=Fraction(1, 8), max_value=Fraction(8), max_denominator=8
)


def exact_determinant(matrix) -> Fraction:
    """Gaussian elimination over the rationals (independent of the Pfaffian)."""
    m = [list(row) for row in matrix]
    n = len(m)
    sign = 1
    det = Fraction(1)
    for i in range(n):
        pivot = next((r for r in range(i, n) if m[r][i] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != i:
            m[pivot], m[i] = m[i], m[pivot]
            sign = -sign
        det *= m[i][i]
        for r in range(i + 1, n):
            c = m[r][i] / m[i][i]
            if c:
                for t in range(i, n):
                    m[r][t] -= c * m[i][t]
    return det * sign


# ---------------------------------------------------------------------------
# binomials and the product formula

def test_binom_out_of_range_is_zero():
    assert binom(5, -1) == 0
    assert binom(4, 7) == 0
    assert binom(0, 0) == 1
    with pytest.raises(DomainError):
        binom(-2, 1)


def test_product_formula_examples():
    assert product_formula_count(3, 2, 1, ()) == 1
    assert product_formula_count(1, 0, 0, (1,)) == 1
    assert product_formula_count(2, 1, 0, (1, 2)) == 10


def test_product_formula_validation():
    with pytest.raises(ValidationError):
        product_formula_count(2, 0, 0, (2, 1))
    with pytest.raises(ValidationError):
        product_formula_count(2, 0, -2, (1,))


def test_product_formula_always_integral():
    for n in range(0, 6):
        for x in (0, 2):
            for y in (-1, 0, 2):
                for kept in itertools.combinations(range(1, n + 1), min(n, 3)):
                    v = product_formula_count(n, x, y, kept)
                    assert isinstance(v, int) and v >= 0


# ---------------------------------------------------------------------------
# Pfaffians

def test_pfaffian_size_two():
    a = SkewArray.from_upper_rows([[Fraction(7, 3)]])
    assert pfaffian(a) == Fraction(7, 3)


def test_pfaffian_size_four_expansion():
    a = SkewArray.from_upper_rows([[1, 2, 3], [4, 5], [6]])
    # a12 a34 - a13 a24 + a14 a23
    assert pfaffian(a) == 1 * 6 - 2 * 5 + 3 * 4


def test_pfaffian_odd_size_rejected():
    with pytest.raises(UsageError):
        pfaffian(SkewArray.from_function(3, lambda i, j: Fraction(1)))


def test_pfaffian_empty():
    assert pfaffian(SkewArray(0, {})) == 1


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=15, max_size=15))
def test_pfaffian_squares_to_determinant(entries):
    it = iter(entries)
    a = SkewArray.from_function(6, lambda i, j: next(it))
    pf = pfaffian(a)
    assert pf * pf == exact_determinant(a.completion())


@settings(max_examples=20, deadline=None)
@given(st.lists(rationals, min_size=28, max_size=28))
def test_pfaffian_methods_agree(entries):
    it = iter(entries)
    a = SkewArray.from_function(8, lambda i, j: next(it))
    assert pfaffian(a, "expansion") == pfaffian(a, "elimination")


def test_pfaffian_elimination_needs_swaps():
    # leading entry zero forces the pivot search and a sign flip
    a = SkewArray(4, {(0, 2): Fraction(1), (1, 3): Fraction(1)})
    assert pfaffian(a, "elimination") == pfaffian(a, "expansion") == -1


# ---------------------------------------------------------------------------
# Schur identity

def test_schur_smallest():
    assert schur_pfaffian_lhs((1, 2)) == schur_pfaffian_rhs((1, 2)) == Fraction(1, 3)


def test_schur_four_values():
    xs = (1, 2, 3, 4)
    assert schur_pfaffian_lhs(xs) == schur_pfaffian_rhs(xs)


def test_schur_zero_denominator():
    with pytest.raises(DomainError):
        schur_pfaffian_lhs((1, -1))


def test_schur_odd_length_rejected_without_augmentation():
    with pytest.raises(UsageError):
        schur_pfaffian_lhs((1, 2, 3))


@settings(max_examples=30, deadline=None)
@given(st.sets(positive_rationals, min_size=6, max_size=6))
def test_schur_identity_random(values):
    xs = sorted(values)
    assert schur_pfaffian_lhs(xs) == schur_pfaffian_rhs(xs)


@settings(max_examples=20, deadline=None)
@given(st.sets(positive_rationals, min_size=5, max_size=5))
def test_schur_identity_odd_augmented(values):
    xs = [Fraction(0)] + sorted(values)
    assert schur_pfaffian_lhs(xs) == schur_pfaffian_rhs(xs)


# ---------------------------------------------------------------------------
# summation lemmas

def test_lemma_a_examples():
    assert lemma_sum_a(0, 0) == 1
    assert lemma_sum_a(5, 2) == 20
    assert lemma_sum_a(4, 7) == 0


def test_lemma_a_equals_literal_sum():
    for m in range(0, 10):
        for k in range(0, 10):
            assert lemma_sum_a(m, k) == sum(binom(i, k) for i in range(m + 1))


def test_lemma_b_example():
    assert lemma_sum_b(1, 2, 2, 0) == 1


def test_lemma_b_adjacent_single_term():
    # l = k+1, m = k+1: the literal double sum has a single (i, j) pair
    for k in (1, 2, 3):
        for y in (0, 1, 3):
            l, m = k + 1, k + 1
            literal = binom(y + k + 1, y + 2 * k) * binom(y + l + 2, y + 2 * l) - binom(
                y + k + 2, y + 2 * k
            ) * binom(y + l + 1, y + 2 * l)
            assert lemma_sum_b(k, l, m, y) == literal


def test_lemma_b_matches_midform_and_literal():
    for m in range(1, 7):
        for k in range(1, m):
            for l in range(k + 1, m + 1):
                for y in range(0, 4):
                    literal = sum(
                        binom(y + k + i, y + 2 * k) * binom(y + l + j, y + 2 * l)
                        - binom(y + k + j, y + 2 * k) * binom(y + l + i, y + 2 * l)
                        for i in range(1, m + 1)
                        for j in range(i + 1, m + 1)
                    )
                    assert lemma_sum_b(k, l, m, y) == literal
                    assert lemma_sum_b_midform(k, l, m, y) == literal


def test_lemma_b_validation():
    with pytest.raises(ValidationError):
        lemma_sum_b(2, 2, 4, 0)
    with pytest.raises(ValidationError):
        lemma_sum_b(1, 2, 3, -1)


# ---------------------------------------------------------------------------
# path-matrix Pfaffian route

def test_lgv_empty_label_set():
    assert lgv_pfaffian_count(3, 1, 0, ()) == 1


def test_lgv_matches_product_examples():
    assert lgv_pfaffian_count(2, 1, 0, (1, 2)) == 10
    assert lgv_pfaffian_count(3, 2, 1, (1, 3)) == product_formula_count(3, 2, 1, (1, 3))


def test_lgv_entry_modes_agree():
    for n, x, y, kept in (
        (2, 1, 0, (1, 2)),
        (3, 2, 1, (1, 3)),
        (3, 0, -1, (1, 2, 3)),
        (4, 1, 2, (2, 4)),
    ):
        assert lgv_pfaffian_count(n, x, y, kept, "closed") == lgv_pfaffian_count(
            n, x, y, kept, "sums"
        )


def test_lgv_odd_label_count_uses_augmented_row():
    # odd k exercises the index-0 augmentation row
    assert lgv_pfaffian_count(3, 1, 0, (2,)) == product_formula_count(3, 1, 0, (2,))
    assert lgv_pfaffian_count(4, 2, 1, (1, 2, 4)) == product_formula_count(4, 2, 1, (1, 2, 4))


# ---------------------------------------------------------------------------
# plane partitions

def test_macmahon_examples():
    assert macmahon_box(1, 0, 5) == 1
    assert macmahon_box(1, 1, 1) == 2
    assert macmahon_box(2, 2, 2) == 20


def test_macmahon_symmetry():
    assert macmahon_box(2, 3, 4) == macmahon_box(4, 2, 3) == macmahon_box(3, 4, 2)


def test_ssc_count_examples():
    assert ssc_hexagon_count(HexagonSpec("even", 1, 1)) == 2
    # plain even family reproduces the box counts
    for n in range(1, 4):
        for x in range(0, 3):
            assert ssc_hexagon_count(HexagonSpec("even", n, x)) == macmahon_box(n, n, x)
