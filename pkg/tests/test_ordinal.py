import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentzen import ordinal as O
from gentzen.ordinal import ZERO, Cons, ContractViolation

ONE = Cons(ZERO, 0, ZERO)
OMEGA = Cons(ONE, 0, ZERO)
SMALL = O.enumerate_nf(2, 3)
ENUM = O.enumerate_nf(3, 2)

nf_ords = st.sampled_from(ENUM)


def test_constants():
    assert O.ONE == ONE and O.OMEGA == OMEGA


def test_lt_examples():
    assert O.lt(ZERO, ONE)
    assert O.lt(ONE, OMEGA)
    assert not O.lt(Cons(ZERO, 2, ZERO), Cons(ZERO, 1, ZERO))


def test_is_nf_examples():
    assert O.is_nf(ZERO)
    assert O.is_nf(Cons(ZERO, 5, ZERO))
    assert not O.is_nf(Cons(ZERO, 0, Cons(ZERO, 0, ZERO)))


def test_nat_ord():
    assert O.nat_ord(0) == ZERO
    assert O.nat_ord(1) == ONE
    assert O.nat_ord(3) == Cons(ZERO, 2, ZERO)
    for n in range(20):
        assert O.lt(O.nat_ord(n), O.nat_ord(n + 1))
        assert O.ord_to_nat(O.nat_ord(n)) == n
    assert O.ord_to_nat(OMEGA) is None


def _least_above(a, pool):
    above = [b for b in pool if O.lt(a, b)]
    best = above[0]
    for b in above[1:]:
        if O.lt(b, best):
            best = b
    return best


def test_succ_examples_against_enumeration():
    assert O.succ(ZERO) == ONE
    assert O.succ(ONE) == Cons(ZERO, 1, ZERO)
    assert O.succ(OMEGA) == Cons(ONE, 0, ONE)
    # oracle: the least strict upper bound inside the enumeration
    for a in (ZERO, ONE, OMEGA):
        assert O.succ(a) == _least_above(a, SMALL)


def test_add_examples():
    for x in ENUM[:50]:
        assert O.add(x, ZERO) == x
    assert O.add(ONE, OMEGA) == OMEGA
    assert O.add(OMEGA, ONE) == Cons(ONE, 0, ONE) == O.succ(OMEGA)


def test_mult_examples():
    two = Cons(ZERO, 1, ZERO)
    for x in ENUM[:50]:
        assert O.mult(x, ZERO) == ZERO
    assert O.mult(two, two) == Cons(ZERO, 3, ZERO)
    assert O.mult(OMEGA, two) == Cons(ONE, 1, ZERO)


def test_exp2_examples():
    assert O.exp2(ZERO) == ONE
    assert O.exp2(Cons(ZERO, 2, ZERO)) == Cons(ZERO, 7, ZERO)
    assert O.exp2(OMEGA) == OMEGA
    for n in range(11):
        assert O.lt(O.exp2(O.nat_ord(n)), O.exp2(OMEGA))


def test_ord_max_examples():
    for x in ENUM[:30]:
        assert O.ord_max(ZERO, x) == x
        assert O.ord_max(x, x) == x
    three = Cons(ZERO, 2, ZERO)
    assert O.ord_max(OMEGA, three) == OMEGA


def test_natural_agreement():
    for a, b in itertools.product(range(11), repeat=2):
        x, y = O.nat_ord(a), O.nat_ord(b)
        assert O.lt(x, y) == (a < b)
        assert O.add(x, y) == O.nat_ord(a + b)
        assert O.mult(x, y) == O.nat_ord(a * b)
    for a in range(11):
        assert O.exp2(O.nat_ord(a)) == O.nat_ord(2**a)


def test_pred():
    assert O.pred(ZERO) == ZERO
    assert O.pred(O.nat_ord(4)) == O.nat_ord(3)
    assert O.pred(O.succ(OMEGA)) == OMEGA
    with pytest.raises(ValueError):
        O.pred(OMEGA)


def test_transfinite_recurse():
    assert O.transfinite_recurse(ZERO, lambda m, rec: "base") == "base"

    calls = []

    def countdown(m, rec):
        if m == ZERO:
            return 0
        calls.append(m)
        return 1 + rec(O.pred(m))

    assert O.transfinite_recurse(O.nat_ord(5), countdown) == 5
    assert len(calls) == 5
    with pytest.raises(ContractViolation):
        O.transfinite_recurse(OMEGA, lambda m, rec: rec(m))


def test_enumeration_size_and_order():
    assert len(ENUM) == 387
    assert all(O.is_nf(a) for a in ENUM)
    assert all(O.lt(a, b) for a, b in zip(ENUM, ENUM[1:]))


def test_show_parse_round_trip():
    assert O.show_ord(ONE) == "w^0*1"
    for a in ENUM:
        assert O.parse_ord(O.show_ord(a)) == a


@given(nf_ords, nf_ords)
def test_trichotomy_property(a, b):
    assert [O.lt(a, b), a == b, O.lt(b, a)].count(True) == 1


@given(nf_ords, nf_ords, nf_ords)
@settings(max_examples=300)
def test_add_monotone_right(a, b, c):
    if O.lt(b, c):
        assert O.lt(O.add(a, b), O.add(a, c))


@given(nf_ords, nf_ords)
def test_max_is_upper_bound(a, b):
    m = O.ord_max(a, b)
    assert O.le(a, m) and O.le(b, m) and m in (a, b)


@given(st.integers(0, 20), st.integers(0, 20))
def test_max_successor_inequality(a, b):
    # max(a+1, b+1) < a+b+2
    lhs = O.ord_max(O.nat_ord(a + 1), O.nat_ord(b + 1))
    assert O.lt(lhs, O.nat_ord(a + b + 2))
