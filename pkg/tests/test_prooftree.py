import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentzen import corpus, serial
from gentzen import derivations as D
from gentzen import language as L
from gentzen import ordinal as O
from gentzen import prooftree as T
from gentzen.language import Atom, Lor, Neg, Plus, Succ, Univ, Var

Z = L.ZERO_T
S0 = Succ(Z)
ZZ = Atom(Z, Z)
Z1 = Atom(Z, S0)
PLUS = Atom(Plus(Z, Z), Z)


def sample_tree(weak=Atom(Var(1), Z)):
    w = T.WeakeningAD(PLUS, weak, 0, O.ZERO, T.Node(PLUS))
    return T.ExchangeAB(weak, PLUS, 0, O.ONE, w)


def test_sample_tree_extractors():
    p = sample_tree()
    assert T.ptree_formula(p) == Lor(PLUS, Atom(Var(1), Z))
    assert T.ptree_deg(p) == 0
    assert T.ptree_ord(p) == O.Cons(O.ZERO, 0, O.ZERO)


def test_sample_tree_rejected_but_closed_variant_accepted():
    res = T.well_formed(sample_tree())
    assert not res.ok
    assert res.rule == "weakening_ad"
    assert "not closed" in res.message
    assert T.well_formed(sample_tree(ZZ)).ok


def test_node():
    assert T.Node(ZZ).formula() == ZZ
    assert (T.Node(ZZ).degree(), T.Node(ZZ).height()) == (0, O.ZERO)
    assert T.well_formed(T.Node(ZZ))
    res = T.well_formed(T.Node(Z1))
    assert not res.ok and "not an axiom" in res.message


def test_cut_decorations():
    left = D.exchange(T.WeakeningAD(ZZ, Z1, 0, O.ZERO, T.Node(ZZ)))  # (0=0) | (0=1)
    p = T.CutCA(ZZ, Z1, 0, 0, O.ONE, O.ZERO, left, T.Node(Neg(Z1)))
    assert p.formula() == ZZ
    assert p.degree() == 1
    assert p.height() == O.nat_ord(2)
    assert T.well_formed(p)
    assert T.contains_cut(p)


def test_stale_decoration_is_caught():
    w = T.WeakeningAD(ZZ, ZZ, 0, O.ONE, T.Node(ZZ))  # claims premise height 1
    res = T.well_formed(w)
    assert not res.ok and "premise" in res.message


def test_check_omega_node():
    lem = D.build_LEM(Univ(0, Atom(Var(0), Var(0))))
    omega = lem.sub
    assert isinstance(omega, T.WRuleAD)
    assert T.check_omega_node(omega, [Z, S0, Succ(S0)]).ok
    bad = T.WRuleA(Atom(Var(0), Var(0)), 0, 0, O.ZERO, T.FnFamily(lambda t: T.Node(ZZ)))
    assert not T.check_omega_node(bad, [Z, S0]).ok
    assert T.check_omega_node(bad, []).ok


def test_sampling_monotone():
    bad = T.WRuleA(Atom(Var(0), Z), 0, 0, O.ZERO, T.FnFamily(lambda t: T.Node(Atom(t, Z))))
    assert T.well_formed(bad, [Z]).ok
    assert not T.well_formed(bad, [Z, S0]).ok
    assert not T.well_formed(bad, [Z, S0, Succ(S0)]).ok


def test_provable():
    lem = T.provable(Lor(Neg(ZZ), ZZ), 0, O.ONE)
    assert lem is not None and lem.formula() == Lor(Neg(ZZ), ZZ)
    node = T.provable(ZZ, 0, O.ZERO)
    assert isinstance(node, T.Node)
    assert T.provable(Z1, 3, O.nat_ord(5)) is None


def test_default_samples():
    s = T.default_samples()
    assert s[:5] == [L.numeral(i) for i in range(5)]
    assert s[5] == Plus(Z, S0)


def test_padding():
    p = T.Node(ZZ)
    assert T.ord_pad(p, O.ZERO) is p
    q = T.ord_pad(T.ord_pad(p, O.ONE), O.OMEGA)
    assert isinstance(q, T.OrdUp) and q.sub is p and q.height() == O.OMEGA
    assert T.well_formed(T.deg_pad(q, 2))
    with pytest.raises(ValueError):
        T.ord_pad(q, O.ONE)
    with pytest.raises(ValueError):
        T.deg_pad(T.deg_pad(p, 2), 1)


def test_serial_round_trip_of_sample():
    for p in (sample_tree(), sample_tree(ZZ), D.build_LEM(Univ(0, Atom(Var(0), Var(0))))):
        text = serial.write(p)
        assert serial.read(text) == p
        assert serial.write(serial.read(text)) == text


def test_serial_errors():
    with pytest.raises(serial.SexpError) as err:
        serial.read('(node "0 = 0"')
    assert err.value.line == 2 or err.value.line == 1
    with pytest.raises(serial.SexpError):
        serial.read('(nonsense "0 = 0")')
    with pytest.raises(serial.SexpError):
        serial.read('(node "0 = = 0")')


@given(st.integers(0, 5000))
@settings(max_examples=60, deadline=None)
def test_generated_trees_are_well_formed_and_nf(seed):
    for p in corpus.sound_corpus(seed, 3):
        assert T.well_formed(p).ok
        assert O.is_nf(T.ptree_ord(p))
        # decorations never depend on the checker
        before = (p.degree(), p.height())
        T.well_formed(p)
        assert (p.degree(), p.height()) == before
