import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentzen import corpus
from gentzen import derivations as D
from gentzen import language as L
from gentzen import ordinal as O
from gentzen import prooftree as T
from gentzen.language import Atom, Lor, Neg, Plus, Succ, Univ, Var
from gentzen.prooftree import PreconditionError

Z = L.ZERO_T
S0 = Succ(Z)
ZZ = Atom(Z, Z)
SAMPLES = T.default_samples()


def test_lem_atom():
    p = D.build_LEM(ZZ)
    assert p.formula() == Lor(Neg(ZZ), ZZ)
    assert (p.degree(), p.height()) == (0, O.ONE)
    assert T.well_formed(p)


def test_lem_negation():
    a = Neg(Atom(Z, S0))
    p = D.build_LEM(a)
    assert (p.degree(), p.height()) == (0, O.nat_ord(3))
    assert T.well_formed(p)


def test_lem_universal():
    a = Univ(0, Atom(Var(0), Var(0)))
    p = D.build_LEM(a)
    assert p.formula() == Lor(Neg(a), a)
    assert (p.degree(), p.height()) == (0, O.nat_ord(3))
    # an exchange sits over the omega rule, which concludes forall | ~forall
    assert isinstance(p, T.ExchangeAB) and isinstance(p.sub, T.WRuleAD)
    assert T.well_formed(p, SAMPLES)


def test_lem_open_formula_rejected():
    with pytest.raises(PreconditionError, match="not closed"):
        D.build_LEM(Atom(Var(0), Z))


def test_lem_term_examples():
    a = Atom(Var(0), Z)
    p = D.build_LEM_term(a, 0, Plus(Z, Z), Z)
    assert p.formula() == Lor(Neg(Atom(Plus(Z, Z), Z)), ZZ)
    assert (p.degree(), p.height()) == (0, O.ONE)
    q = D.build_LEM_term(Neg(a), 0, Z, Plus(Z, Z))
    assert q.formula() == Lor(Neg(Neg(ZZ)), Neg(Atom(Plus(Z, Z), Z)))
    assert q.height() == O.nat_ord(3)
    assert T.well_formed(p) and T.well_formed(q)


def test_lem_term_equal_terms_matches_lem():
    a = Lor(Atom(Var(0), S0), Univ(1, Atom(Var(1), Var(0))))
    t = L.numeral(2)
    p = D.build_LEM_term(a, 0, t, t)
    q = D.build_LEM(L.substitute(a, 0, t))
    assert p.formula() == q.formula()
    assert (p.degree(), p.height()) == (q.degree(), q.height())
    assert T.well_formed(p, SAMPLES)


def test_lem_term_preconditions():
    with pytest.raises(PreconditionError):
        D.build_LEM_term(Atom(Var(0), Var(1)), 0, Z, Z)
    with pytest.raises(PreconditionError):
        D.build_LEM_term(Atom(Var(0), Z), 0, Z, S0)
    with pytest.raises(PreconditionError):
        D.build_LEM_term(Atom(Var(0), Z), 0, Var(2), Z)


def test_lem_term_nested_quantifier():
    a = Univ(1, Lor(Atom(Var(1), Var(0)), Neg(Atom(Var(0), Z))))
    p = D.build_LEM_term(a, 0, Plus(S0, S0), L.numeral(2))
    assert p.height() == D.lem_height(a)
    assert T.well_formed(p, SAMPLES)
    assert not T.contains_cut(p, SAMPLES)


def test_assoc():
    p = D.weaken(ZZ, D.weaken(ZZ, T.Node(ZZ)))  # 0=0 | (0=0 | 0=0)
    left = D.assoc_left(p)
    assert left.formula() == Lor(Lor(ZZ, ZZ), ZZ)
    back = D.assoc_right(left)
    assert back.formula() == p.formula()
    for q in (left, back):
        assert (q.degree(), q.height()) == (p.degree(), p.height())
        assert T.well_formed(q)


def test_weaken():
    p = D.weaken(ZZ, T.Node(ZZ))
    assert p.formula() == Lor(ZZ, ZZ) and p.height() == O.ONE
    plus = Atom(Plus(Z, Z), Z)
    q = D.weaken(ZZ, T.Node(plus), right=True)
    assert q.formula() == Lor(plus, ZZ)
    assert (q.degree(), q.height()) == (0, O.ONE)
    assert D.weaken(ZZ, p).height() == O.nat_ord(2)
    with pytest.raises(PreconditionError):
        D.weaken(Atom(Var(1), Z), p)


def test_rearrange_units():
    a, b, c = ZZ, Lor(ZZ, Neg(Atom(Z, S0))), Neg(Atom(S0, Z))
    p = D.weaken(c, D.weaken(b, T.Node(a)))  # c | (b | a)
    q = D.rearrange(p, Lor(a, Lor(c, b)), units=(a, b, c))
    assert q.formula() == Lor(a, Lor(c, b))
    assert T.well_formed(q)
    with pytest.raises(PreconditionError):
        D.rearrange(p, Lor(a, c))


@given(st.integers(0, 10_000), st.integers(0, 4))
@settings(max_examples=40, deadline=None)
def test_lem_decoration_law(seed, conn):
    a = corpus.random_closed_formula(random.Random(seed), conn)
    p = D.build_LEM(a)
    assert p.formula() == Lor(Neg(a), a)
    assert p.degree() == 0
    assert p.height() == O.nat_ord(2 * L.num_conn(a) + 1)
    assert T.well_formed(p, SAMPLES)
    assert not T.contains_cut(p, SAMPLES)


@given(st.integers(0, 10_000))
@settings(max_examples=30, deadline=None)
def test_exchange_helpers_keep_decorations(seed):
    for p in corpus.sound_corpus(seed, 2):
        f = p.formula()
        if isinstance(f, Lor) and isinstance(f.right, Lor):
            q = D.assoc_left(p)
            assert (q.degree(), q.height()) == (p.degree(), p.height())
            assert T.well_formed(q)
