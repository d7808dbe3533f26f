import operator
import random

import pytest
from hypothesis import given, strategies as st

from nfold.order import OrderedMonoid, UsageError, verify_nfold
from nfold.seq import (
    ZERO,
    FinSeq,
    StructureError,
    check_sort_triangle,
    concat,
    format_seq,
    lex_compare,
    lexmax,
    parse_seq,
    pointwise_add,
    seq_category,
    sort_desc,
)

seqs = st.lists(st.integers(0, 5), max_size=7).map(FinSeq)


def test_trimmed():
    assert FinSeq([1, 2, 0, 0]) == FinSeq([1, 2])
    assert FinSeq([0, 0]) == ZERO
    assert FinSeq([0, 1, 2]).length == 3


def test_negative_rejected():
    with pytest.raises(ValueError):
        FinSeq([1, -1])


def test_lex_compare_examples():
    assert lex_compare(FinSeq([1, 1]), FinSeq([1, 1, 1, 1])) < 0
    assert lex_compare(FinSeq([2, 1, 3, 0, 2]), FinSeq([2, 1, 3, 1, 1])) < 0
    assert lex_compare(FinSeq([3]), FinSeq([2, 9])) > 0
    assert lex_compare(ZERO, ZERO) == 0


def test_concat_and_add():
    assert concat(FinSeq([1]), FinSeq([2])) == FinSeq([1, 2])
    assert concat(ZERO, FinSeq([1, 1])) == FinSeq([1, 1])
    assert pointwise_add(FinSeq([0, 1, 2]), FinSeq([1, 1])) == FinSeq([1, 2, 2])
    assert pointwise_add(FinSeq([3]), ZERO) == FinSeq([3])


def test_concat_keeps_interior_zeros():
    assert concat(FinSeq([0, 1, 2]), FinSeq([0, 2])) == FinSeq([0, 1, 2, 0, 2])


def test_sort_and_triangle():
    assert sort_desc(FinSeq([1, 3, 2])) == FinSeq([3, 2, 1])
    assert check_sort_triangle(FinSeq([1, 3]), FinSeq([2, 1]))
    a = FinSeq([3, 1])
    assert sort_desc(pointwise_add(a, a)) == pointwise_add(sort_desc(a), sort_desc(a))


@given(seqs, seqs)
def test_sort_triangle_property(a, b):
    assert check_sort_triangle(a, b)


@given(seqs, seqs, seqs)
def test_lex_is_total_order(a, b, c):
    assert lex_compare(a, b) == -lex_compare(b, a)
    if lex_compare(a, b) <= 0 and lex_compare(b, c) <= 0:
        assert lex_compare(a, c) <= 0
    assert lexmax(a, b) in (a, b)


@given(seqs, seqs, seqs, seqs)
def test_pointwise_add_respects_order(a, b, c, d):
    if lex_compare(a, b) <= 0 and lex_compare(c, d) <= 0:
        assert lex_compare(pointwise_add(a, c), pointwise_add(b, d)) <= 0


@given(seqs, seqs, seqs, seqs)
def test_interchanges_with_pointwise_hold(a, b, c, d):
    cat = seq_category()
    assert cat.check_interchange(1, 3, a, b, c, d)
    assert cat.check_interchange(2, 3, a, b, c, d)


def test_concat_not_order_functorial():
    # (1) < (1,1) but (1)(5) = (1,5) > (1,1,5)
    a, b, x = FinSeq([1]), FinSeq([1, 1]), FinSeq([5])
    assert lex_compare(a, b) < 0
    assert lex_compare(concat(a, x), concat(b, x)) > 0
    cat = seq_category()
    assert not cat.check_interchange(1, 2, FinSeq([1]), FinSeq([5]), FinSeq([1, 1]), ZERO)


def test_seq_categories_fail_verify_nfold():
    for cat in (seq_category(), seq_category(pointwise=False)):
        v = verify_nfold(cat, trials=2000)
        assert not v.ok


def test_max_monoid_rejected():
    m = OrderedMonoid("max", max, 0, 0)
    with pytest.raises(StructureError):
        seq_category(m, sample_values=range(4))
    # without pointwise there is nothing to reject
    assert seq_category(m, pointwise=False, sample_values=range(4)).n == 2


def test_generic_monoid_matches_nat():
    m = OrderedMonoid("plus", operator.add, 0, 0)
    gen = seq_category(m, sample_values=range(4))
    nat = seq_category()
    rng = random.Random(1)
    for _ in range(200):
        xs = [tuple(rng.randint(0, 3) for _ in range(rng.randint(0, 4))) for _ in range(2)]
        a, b = (tuple(FinSeq(x)) for x in xs)
        for i in (1, 2, 3):
            assert list(gen.tensor(i, a, b)) == list(nat.tensor(i, FinSeq(a), FinSeq(b)))
        assert gen.cmp(a, b) == nat.cmp(FinSeq(a), FinSeq(b))


def test_parse_and_format():
    assert parse_seq("[0,1,2]") == FinSeq([0, 1, 2])
    assert parse_seq(" [ ] ") == ZERO
    assert format_seq(FinSeq([2, 1])) == "[2,1]"
    for bad in ("0,1", "[a]", "[1,,2]"):
        with pytest.raises(UsageError):
            parse_seq(bad)
