import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gentzen import language as L
from gentzen import ordinal as O
from gentzen import peano as P
from gentzen import prooftree as T
from gentzen import serial
from gentzen.language import Atom, Lor, Neg, Plus, Succ, Univ, Var
from gentzen.prooftree import PreconditionError

Z = L.ZERO_T
S0 = Succ(Z)
ZZ = Atom(Z, Z)
SAMPLES = T.default_samples()
TERMS = [Z, L.numeral(2), Plus(S0, S0)]


def f(text):
    return L.parse_formula(text)


def test_fol1_example():
    a, b = ZZ, Atom(Z, S0)
    p = P.derive_FOL1(a, b)
    assert p.formula() == Lor(Neg(a), Lor(Neg(b), a))
    assert (p.degree(), p.height()) == (0, O.succ(O.ONE))
    assert T.well_formed(p)


def test_fol4_example():
    a = Atom(Var(0), Var(0))
    p = P.derive_FOL4(a, 0, S0)
    assert p.formula() == Lor(Neg(Univ(0, a)), Atom(S0, S0))
    assert isinstance(p, T.QuantificationAD) and p.degree() == 0
    assert T.well_formed(p)


def test_fol5_side_condition():
    with pytest.raises(PreconditionError):
        P.derive_FOL5(Atom(Var(0), Z), ZZ, 0)
    with pytest.raises(PreconditionError):
        P.FOL5(Atom(Var(0), Z), ZZ, 0)


def test_fol_degrees():
    a, b, c = f("~0 = S(0)"), f("(0 = 0 \\/ S(0) = 0)"), f("forall x1, x1 = x1")
    assert P.derive_FOL2(a, b, c).degree() == L.num_conn(b) + 1
    for p in (P.derive_FOL3(a, b), P.derive_FOL5(a, Atom(Var(2), Var(2)), 2)):
        assert p.degree() == 0
        assert T.well_formed(p, SAMPLES)


@pytest.mark.parametrize("axiom", sorted(P.ARITH))
def test_arith_cases(axiom):
    arity = len(P._arith_terms(P.ARITH[axiom]()))
    heights = set()
    for t0 in (Z, S0, Plus(Z, S0)):
        for t1 in (Z, S0):
            terms = [t0, t1, L.numeral(2)][:arity]
            p = P.derive_arith(axiom, terms)
            assert p.formula() == P.arith_formula(axiom, tuple(terms))
            assert p.degree() == 0
            assert T.well_formed(p)
            heights.add(p.height())
    assert heights == {O.nat_ord(P.ARITH_HEIGHT.get(axiom, 0))}


def test_equ_trans_branches():
    same = P.derive_arith("equ_trans", [Plus(Z, S0), S0, Z])
    assert isinstance(same, T.WeakeningAD)
    other = P.derive_arith("equ_trans", [Z, S0, Z])
    assert isinstance(other, T.OrdUp)
    assert same.height() == other.height() == O.nat_ord(2)


def test_immediate_axioms_are_nodes():
    for axiom in ("pl0", "plS", "ml0", "mlS", "non_zero"):
        terms = [S0, L.numeral(2)][: len(P._arith_terms(P.ARITH[axiom]()))]
        assert isinstance(P.derive_arith(axiom, terms), T.Node)


def test_derive_arith_rejects_open_terms():
    with pytest.raises(PreconditionError):
        P.derive_arith("pl0", [Var(0)])


def test_chain_and_iterate():
    a = Atom(Var(0), Var(0))
    link0 = Neg(Lor(Neg(ZZ), Atom(S0, S0)))
    assert P.inductive_chain(a, 0, 0) == link0
    two = L.numeral(2)
    assert P.inductive_chain(a, 0, 1) == Lor(link0, Neg(Lor(Neg(Atom(S0, S0)), Atom(two, two))))
    it = P.inductive_iterate(a, 0, 0)
    assert isinstance(it, Lor) and it.left == Lor(ZZ, Neg(ZZ))
    assert it.right == Neg(Univ(0, Lor(Neg(a), Atom(Succ(Var(0)), Succ(Var(0))))))


@pytest.mark.parametrize("a", ["x0 = x0", "~(x0 + 0) = x0", "forall x1, (x1 + x0) = (x0 + x1)"])
def test_iterate_heights(a):
    a = f(a)
    alpha = O.ord_to_nat(P.lem_height(a))
    for m in range(11):
        p = P.derive_iterate(a, 0, m)
        assert p.formula() == P.inductive_iterate(a, 0, m)
        assert p.degree() == 0
        assert p.height() == O.nat_ord(alpha + 4 * m + 1)
        assert T.well_formed(p, SAMPLES)


def test_derive_induction():
    a = Atom(Var(0), Var(0))
    p = P.derive_induction(a, 0)
    assert p.formula() == P.induct_formula(a, 0)
    assert T.well_formed(p, SAMPLES)
    omega = p
    while not isinstance(omega, T.WRuleAD):
        omega = omega.sub
    prem = [omega.fam(t) for t in SAMPLES]
    assert {q.degree() for q in prem} == {L.num_conn(a) + 1}
    assert {q.height() for q in prem} == {O.OMEGA}
    with pytest.raises(PreconditionError):
        P.derive_induction(Atom(Var(0), Var(1)), 0)


@pytest.mark.parametrize("p", P.sample_instances(), ids=lambda p: type(p).__name__)
def test_translation_soundness(p):
    for c in TERMS:
        q = P.translate(p, c)
        assert q.formula() == L.closure(P.conclusion(p), c)
        assert (q.degree(), q.height()) == P.decoration(p)
        assert T.well_formed(q, SAMPLES)


def test_fol1_translation_matches_builder():
    p = P.FOL1(ZZ, Atom(Z, S0))
    q = P.translate(p, Z)
    assert q == P.derive_FOL1(ZZ, Atom(Z, S0))
    assert P.decoration(p) == (0, O.nat_ord(2))


def test_mp_translation():
    pl = P.Pl0()
    imp = P.FOL1(pl.conclusion(), Atom(Var(1), Z))
    mp = P.MP(imp, pl)
    assert mp.conclusion() == Lor(Neg(Atom(Var(1), Z)), pl.conclusion())
    q = P.translate(mp, S0)
    assert isinstance(q, T.CutAD)
    assert q.degree() == max(imp.degree(), pl.degree(), L.num_conn(Neg(pl.conclusion())))
    assert q.height() == O.succ(O.succ(O.ord_max(imp.height(), pl.height())))
    assert T.well_formed(q, SAMPLES)
    with pytest.raises(PreconditionError):
        P.MP(imp, P.Ml0())


def test_quantified_axioms():
    for axiom in sorted(P.ARITH):
        p = P.arith_axiom(axiom, quantified=True)
        g = p.conclusion()
        assert L.closed(g)
        q = P.translate(p, Z)
        assert q.formula() == g
        assert T.well_formed(q, T.default_samples(3))


def test_ug_and_iug_agree_on_closed_formulas():
    base = P.EquSucc(S0, S0)
    ug, iug = P.UG(base, 0), P.generalize(base, 0)
    a, b = P.translate(ug, Z), P.translate(iug, Z)
    assert a.formula() == b.formula()
    assert ug.height() == O.Cons(base.height(), 0, O.ZERO)
    assert iug.height() == O.succ(base.height())
    assert T.well_formed(a, SAMPLES) and T.well_formed(b, SAMPLES)


def test_iug_family_checked():
    bad = P.IUG(P.Pl0(), 0, T.Call("pa_subst", (0, P.Ml0())))
    q = P.translate(bad, Z)
    res = T.well_formed(q, SAMPLES)
    assert not res.ok


def test_serial_round_trip():
    for p in P.sample_instances() + [P.arith_axiom("equ_trans", True), P.MP(P.FOL1(ZZ, ZZ), P.Assume(ZZ))]:
        text = serial.write(p)
        assert serial.read(text) == p


def test_consistency_report():
    good = P.Pl0(Z)  # 0 + 0 = 0
    stub = P.Assume(Neg(good.conclusion()))
    rep = P.demonstrate_consistency(good, stub)
    assert rep.first.ok and not rep.second.ok
    assert "not an axiom" in rep.second.message
    assert "second_failure" in rep.render()
    assert rep.danger.formula() == Atom(Z, S0)
    u = Univ(0, Atom(Var(0), Z))
    both = P.demonstrate_consistency(P.Assume(u), P.Assume(Neg(u)))
    assert not both.first.ok and not both.second.ok
    assert "first_failure" in both.render() and "second_failure" in both.render()
    with pytest.raises(PreconditionError):
        P.demonstrate_consistency(good, P.Assume(ZZ))


@given(st.integers(0, 30), st.integers(0, 4))
@settings(max_examples=30, deadline=None)
def test_translation_independent_of_closing_term(m, k):
    p = P.sample_instances()[k]
    assert P.translate(p, L.numeral(m)).formula() == L.closure(p.conclusion(), L.numeral(m))
    q = P.FOL1(ZZ, Atom(S0, Z))
    assert P.translate(q, L.numeral(m)) == P.translate(q, Z)
