import operator

import pytest
from hypothesis import given, strategies as st

from nfold.order import (
    BOTTOM,
    NAT_PLUS,
    OrderedMonoid,
    UsageError,
    Verdict,
    check_interchange,
    nat_category,
    omax,
    verify_nfold,
    verify_ordered_monoid,
)

nats = st.integers(0, 50)


def test_omax():
    assert omax(3, 5) == 5
    assert omax(0, 7) == 7
    assert omax(BOTTOM, 4) == 4
    assert omax(4, BOTTOM) == 4
    assert omax(BOTTOM, BOTTOM) is BOTTOM


def test_interchange_nat_example():
    assert check_interchange(max, operator.add, 1, 2, 3, 1)
    assert check_interchange(max, operator.add, 0, 0, 0, 0)


def test_interchange_bad_operands():
    with pytest.raises(UsageError):
        check_interchange(max, operator.add, 1, "x", 2, 3)


@given(nats, nats, nats, nats)
def test_nat_interchange_property(a, b, c, d):
    assert max(a + b, c + d) <= max(a, c) + max(b, d)


def test_plus_then_max_is_not_twofold():
    # max as the higher product: (a max b) + (c max d) <= (a + c) max (b + d) fails
    cat_products = [operator.add, max]
    assert not check_interchange(cat_products[0], cat_products[1], 1, 0, 0, 1)


def test_verify_ordered_monoid_plus():
    m = OrderedMonoid("plus", operator.add, 0, 0)
    v = verify_ordered_monoid(m, values=range(5))
    assert v.ok and m.strict_monotone


def test_verify_ordered_monoid_max_not_strict():
    m = OrderedMonoid("max", max, 0, 0)
    v = verify_ordered_monoid(m, values=range(5))
    assert v.ok
    assert m.strict_monotone is False


def test_verify_ordered_monoid_left_projection_fails_unit():
    m = OrderedMonoid("left", lambda a, b: a, 0, 0)
    v = verify_ordered_monoid(m, values=range(4))
    assert not v.ok
    assert "unit" in v.reason


def test_nat_category_is_twofold():
    assert verify_nfold(nat_category(), trials=500).ok


def test_bottom_annihilates_and_is_least():
    cat = nat_category()
    for i in (1, 2):
        assert cat.tensor(i, BOTTOM, 3) is BOTTOM
        assert cat.tensor(i, 3, BOTTOM) is BOTTOM
        assert cat.tensor(i, BOTTOM, BOTTOM) is BOTTOM
    assert cat.lt(BOTTOM, 0)
    assert cat.max(BOTTOM, 0) == 0
    assert cat.max(0, 0) == 0


def test_product_index_out_of_range():
    with pytest.raises(UsageError):
        nat_category().tensor(3, 1, 1)


def test_interchange_needs_p_lt_q():
    with pytest.raises(UsageError):
        nat_category().interchange(2, 1, 0, 0, 0, 0)


def test_encode_decode_bottom():
    cat = nat_category()
    assert cat.encode(BOTTOM) is None
    assert cat.decode(None) is BOTTOM
    assert cat.decode(cat.encode(5)) == 5
    assert cat.render(BOTTOM) == "∅"


def test_verdict_json():
    v = Verdict.failure("composition", composition=(1, 2), lhs=3, rhs=2)
    j = v.to_json(lambda x: x * 10)
    assert j == {"status": "counterexample", "reason": "composition",
                 "witness": {"composition": [1, 2], "lhs": 30, "rhs": 20}}
    assert Verdict.success().to_json() == {"status": "success"}
    assert not v and Verdict.success()


def test_verify_nfold_finds_bad_interchange():
    from nfold.order import PosetCategory

    bad = PosetCategory("bad", [operator.add, max], 0, lambda a, b: (a > b) - (a < b),
                        sampler=lambda rng: rng.randint(0, 5))
    v = verify_nfold(bad, trials=300)
    assert not v.ok and v.reason == "interchange"
    lhs, rhs = v.witness["lhs"], v.witness["rhs"]
    assert lhs > rhs


def test_nat_plus_is_strict():
    verify_ordered_monoid(NAT_PLUS, values=range(4))
    assert NAT_PLUS.strict_monotone
