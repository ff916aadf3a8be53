"""Cut elimination: one-degree reduction with the 2^alpha height bound.

``reduce_once(P)`` takes a proof of degree d+1 to one of degree exactly d
and height exactly ``exp2(height(P))``.  It is a structural recursion: every
rule is re-applied over reduced premises, and a cut whose formula has d
connectives is removed according to the shape of that formula.
Quantified cuts use Goedel's transformation instead of inverting the
quantification rule.
"""
from __future__ import annotations

import dataclasses
import enum
from typing import Callable

from . import derivations as D
from . import inversion as I
from . import language as L
from . import ordinal as O
from . import prooftree as T
from .inversion import F0, F1, Pair, SubstIndicator, has_target, layout, non_target, pad
from .language import Atom, Formula, Lor, Neg, Term, Truth, Univ
from .prooftree import PreconditionError, ProofTree


class CutCase(enum.Enum):
    ATOMIC = "atomic"
    NEGATED = "negated"
    DISJUNCTIVE = "disjunctive"
    QUANTIFIED = "quantified"


def classify(a: Formula) -> CutCase:
    if isinstance(a, Atom):
        return CutCase.ATOMIC
    if isinstance(a, Neg):
        return CutCase.NEGATED
    if isinstance(a, Lor):
        return CutCase.DISJUNCTIVE
    if isinstance(a, Univ):
        return CutCase.QUANTIFIED
    raise TypeError(f"not a formula: {a!r}")


# ------------------------------------------------------------- Goedel

class _Goedel:
    """Replace flagged ~forall n B by c, cutting each quantification site.

    ``instance(t)`` proves c | B[t] at height ``a1``.  Every subtree whose
    indicator has a target comes back at degree exactly ``deg`` and height
    exactly a1 + (its old height); untouched subtrees are returned as is.
    """

    def __init__(self, univ: Univ, c: Formula, q1: ProofTree, mode: str, deg: int):
        self.univ, self.c, self.q1, self.mode, self.deg = univ, c, q1, mode, deg
        self.target = Neg(univ)
        self.a1 = q1.height() if mode == "cad" else O.succ(q1.height())
        self.memo: dict = {}
        self.inst: dict[Term, ProofTree] = {}

    def instance(self, t: Term) -> ProofTree:
        hit = self.inst.get(t)
        if hit is None:
            if self.mode == "cad":
                hit = I.invert_omega(self.q1, self.univ, Pair(non_target(self.c), F1), t)
            else:
                hit = D.weaken(self.c, I.invert_omega(self.q1, self.univ, F1, t))
            self.inst[t] = hit
        return hit

    def run(self, r: ProofTree, s: SubstIndicator) -> ProofTree:
        if not has_target(s):
            return r
        key = (id(r), s)
        hit = self.memo.get(key)
        if hit is not None and hit[0] is r:
            return hit[1]
        out = pad(self._run(r, s), self.deg, O.add(self.a1, r.height()))
        self.memo[key] = (r, out)
        return out

    def _run(self, r: ProofTree, s: SubstIndicator) -> ProofTree:
        params, prem, principal = layout(r, s)
        if isinstance(principal, I.Flag) and principal.on and I.principal_formula(r) == self.target:
            inst = self.instance(r.t)
            b_t = L.substitute(self.univ.body, self.univ.var, r.t)
            if isinstance(r, T.QuantificationA):
                q = r.sub
                return T.CutCA(self.c, b_t, inst.degree(), q.degree(), inst.height(), q.height(), inst, q)
            q = self.run(r.sub, prem[0])
            x = q.formula().right
            return T.CutCAD(self.c, b_t, x, inst.degree(), q.degree(), inst.height(), q.height(), inst, q)
        if isinstance(r, (T.DegUp, T.OrdUp)):
            return self.run(r.sub, prem[0])
        fields = {}
        for name, ind in params.items():
            fields[name] = I.formula_sub(getattr(r, name), self.target, self.c, ind)
        if isinstance(r, T._Omega):
            fam = r.fam
            if has_target(prem[0]):
                fam = T.Call("godel", (self.univ, self.c, self.q1, self.mode, self.deg, prem[0], r.fam))
            return dataclasses.replace(r, deg=self.deg, ord=O.add(self.a1, r.ord), fam=fam, **fields)
        subs = [self.run(sub, ind) for sub, ind in zip(I._premise_trees(r), prem)]
        return T.with_premises(r, subs, **fields)


@T.register_family("godel")
def _godel_family(t: Term, univ: Univ, c: Formula, q1: ProofTree, mode: str, deg: int, s: SubstIndicator, fam: T.Family) -> ProofTree:
    return _Goedel(univ, c, q1, mode, deg).run(fam(t), s)


def _godel(q1: ProofTree, q2: ProofTree, cut: ProofTree, deg: int) -> ProofTree:
    a = cut.a
    assert isinstance(a, Univ)
    if isinstance(cut, T.CutCAD):
        g = _Goedel(a, cut.c, q1, "cad", deg)
        return g.run(q2, Pair(F1, non_target(cut.d)))
    if isinstance(cut, T.CutCA):
        g = _Goedel(a, cut.c, q1, "cad", deg)
        # q1 proves c | forall n B, so the instances already carry c
        return g.run(q2, F1)
    assert isinstance(cut, T.CutAD)
    g = _Goedel(a, cut.d, q1, "ad", deg)
    return D.contract(g.run(q2, Pair(F1, non_target(cut.d))))


def godel_transform(p: ProofTree) -> ProofTree:
    """Remove a cut over forall n B by cutting on instances B[t] at each quantification site."""
    if not isinstance(p, T.CUTS) or not isinstance(p.a, Univ):
        raise PreconditionError("godel_transform needs a cut over a universal formula")
    deg = max(p.sub1.degree(), p.sub2.degree(), L.num_conn(p.a.body) + 1)
    return _godel(p.sub1, p.sub2, p, deg)


# ---------------------------------------------------------- one-step reduction

def _flip(p: ProofTree) -> ProofTree:
    return D.exchange(p)


def _eliminate(cut: ProofTree, q1: ProofTree, q2: ProofTree, d: int) -> ProofTree:
    """A proof of the cut's conclusion from lifted premises, with no cut on its formula."""
    a = cut.a
    case = classify(a)
    if case is CutCase.ATOMIC:
        if L.correct_atom(a) is Truth.CORRECT:
            # ~a is false, so every flagged ~a in q2 was weakened in
            if isinstance(cut, T.CutCAD):
                return I.replace_weakened(q2, Neg(a), cut.c, Pair(F1, non_target(cut.d)))
            if isinstance(cut, T.CutCA):
                return I.replace_weakened(q2, Neg(a), cut.c, F1)
            return D.contract(I.replace_weakened(q2, Neg(a), cut.d, Pair(F1, non_target(cut.d))))
        if isinstance(cut, T.CutCAD):
            return I.replace_weakened(q1, a, cut.d, Pair(non_target(cut.c), F1))
        if isinstance(cut, T.CutCA):
            return D.contract(I.replace_weakened(q1, a, cut.c, Pair(non_target(cut.c), F1)))
        return I.replace_weakened(q1, a, cut.d, F1)

    if case is CutCase.NEGATED:
        b = a.body
        if isinstance(cut, T.CutCAD):
            r = _flip(I.invert_dubneg(q2, b, Pair(F1, non_target(cut.d))))  # d | b
            l = _flip(q1)  # ~b | c
            out = T.CutCAD(cut.d, b, cut.c, r.degree(), l.degree(), r.height(), l.height(), r, l)
            return _flip(out)
        if isinstance(cut, T.CutCA):
            r = I.invert_dubneg(q2, b, F1)  # b
            l = _flip(q1)  # ~b | c
            return T.CutAD(b, cut.c, r.degree(), l.degree(), r.height(), l.height(), r, l)
        r = _flip(I.invert_dubneg(q2, b, Pair(F1, non_target(cut.d))))  # d | b
        return T.CutCA(cut.d, b, r.degree(), q1.degree(), r.height(), q1.height(), r, q1)

    if case is CutCase.DISJUNCTIVE:
        a1, a2 = a.left, a.right
        if isinstance(cut, T.CutCA):
            r1 = I.invert_demorgan_1(q2, a1, a2, F1)
            r2 = I.invert_demorgan_2(q2, a1, a2, F1)
            l = D.assoc_left(q1)  # (c | a1) | a2
            s = T.CutCA(Lor(cut.c, a1), a2, l.degree(), r2.degree(), l.height(), r2.height(), l, r2)
            return T.CutCA(cut.c, a1, s.degree(), r1.degree(), s.height(), r1.height(), s, r1)
        ind = Pair(F1, non_target(cut.d))
        r1 = I.invert_demorgan_1(q2, a1, a2, ind)  # ~a1 | d
        r2 = I.invert_demorgan_2(q2, a1, a2, ind)  # ~a2 | d
        dd = cut.d
        if isinstance(cut, T.CutAD):
            s = T.CutCAD(a1, a2, dd, q1.degree(), r2.degree(), q1.height(), r2.height(), q1, r2)
            s = _flip(s)  # d | a1
            s = T.CutCAD(dd, a1, dd, s.degree(), r1.degree(), s.height(), r1.height(), s, r1)
            return D.contract(s)
        c = cut.c
        l = D.assoc_left(q1)
        s = T.CutCAD(Lor(c, a1), a2, dd, l.degree(), r2.degree(), l.height(), r2.height(), l, r2)
        s = D.rearrange(s, Lor(Lor(c, dd), a1))
        s = T.CutCAD(Lor(c, dd), a1, dd, s.degree(), r1.degree(), s.height(), r1.height(), s, r1)
        s = D.rearrange(s, Lor(Lor(dd, dd), c))
        s = T.ContractionAD(dd, c, s.degree(), s.height(), s)
        return _flip(s)

    return _godel(q1, q2, cut, d)


class _Reducer:
    def __init__(self, d: int):
        self.d = d
        self.memo: dict = {}

    def lift(self, p: ProofTree) -> ProofTree:
        return T.ord_pad(p, O.exp2(p.height()))

    def run(self, p: ProofTree) -> ProofTree:
        """Same endsequent, degree min(deg p, d), height exp2(height p)."""
        if p.degree() <= self.d:
            return self.lift(p)
        if p.degree() != self.d + 1:
            raise PreconditionError(f"degree {p.degree()} is more than one above {self.d}")
        hit = self.memo.get(id(p))
        if hit is not None and hit[0] is p:
            return hit[1]
        out = self._run(p)
        goal = O.exp2(p.height())
        out = pad(out, self.d, goal)
        self.memo[id(p)] = (p, out)
        return out

    def _run(self, p: ProofTree) -> ProofTree:
        d = self.d
        if isinstance(p, T.DegUp):
            return self.run(p.sub)
        if isinstance(p, T.OrdUp):
            return self.run(p.sub)
        if isinstance(p, T._Omega):
            fam = T.Call("reduce", (d, p.fam))
            return dataclasses.replace(p, deg=d, ord=O.exp2(p.ord), fam=fam)
        if isinstance(p, T.CUTS):
            q1, q2 = self.run(p.sub1), self.run(p.sub2)
            if L.num_conn(p.a) + 1 <= d:
                return T.with_premises(p, [q1, q2])
            return _eliminate(p, q1, q2, d)
        return T.with_premises(p, [self.run(s) for s in I._premise_trees(p)])


@T.register_family("reduce")
def _reduce_family(t: Term, d: int, fam: T.Family) -> ProofTree:
    return _Reducer(d).run(fam(t))


def reduce_once(p: ProofTree) -> ProofTree:
    """Degree deg(p)-1, same endsequent, height exactly exp2(height(p))."""
    deg = p.degree()
    if deg == 0:
        raise PreconditionError("degree 0 proof has no cut to reduce")
    if not O.is_nf(p.height()):
        raise PreconditionError("height is not in normal form")
    return _Reducer(deg - 1).run(p)


def cut_elim(p: ProofTree, on_step: Callable[[int, ProofTree], None] | None = None) -> ProofTree:
    """Iterate reduce_once down to degree 0."""
    step = 0
    while p.degree() > 0:
        p = reduce_once(p)
        step += 1
        if on_step is not None:
            on_step(step, p)
    return p


def exp2_iter(a: O.Ordinal, times: int) -> O.Ordinal:
    for _ in range(times):
        a = O.exp2(a)
    return a


# ------------------------------------------------------------- danger

def dangerous_disjunct(a: Formula) -> bool:
    """Every disjunct is a closed false equation."""
    if isinstance(a, Lor):
        return dangerous_disjunct(a.left) and dangerous_disjunct(a.right)
    return isinstance(a, Atom) and L.correct_atom(a) is Truth.INCORRECT


FALSUM = Atom(L.ZERO_T, L.Succ(L.ZERO_T))


def derive_danger_from_contradiction(p1: ProofTree, p2: ProofTree) -> ProofTree:
    """Cut a proof of A against a proof of ~A (weakened by 0 = S(0)) to reach 0 = S(0)."""
    a = p1.formula()
    if p2.formula() != Neg(a):
        raise PreconditionError(
            f"second proof should end in {L.show_formula(Neg(a))}, got {L.show_formula(p2.formula())}"
        )
    w = T.WeakeningAD(Neg(a), FALSUM, p2.degree(), p2.height(), p2)
    w = T.ExchangeAB(FALSUM, Neg(a), w.degree(), w.height(), w)
    return T.CutAD(a, FALSUM, p1.degree(), w.degree(), p1.height(), w.height(), p1, w)
