"""Peano Arithmetic as a Hilbert calculus and its embedding into the ω-calculus.

A ``PeanoProof`` is a tree of axiom instances and the rules MP, UG and I_UG.
``translate(p, c)`` closes every free variable with the closed term ``c``
and produces an infinitary proof tree of the closed conclusion.  The degree
and height of a PA proof are defined as those of its translation, which is
uniform in ``c`` (substitution never changes connective counts, and the
arithmetic cases are padded to a common height).

The induction schema is the only axiom that needs the ω-rule: its premises
come from the iterates I(m), each built from the previous one with four tall
rules, so I(m) has height α + 4m + 1 where α is the LEM height of A.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Iterable

from . import derivations as D
from . import language as L
from . import ordinal as O
from . import prooftree as T
from .cutelim import cut_elim, dangerous_disjunct, derive_danger_from_contradiction
from .derivations import build_LEM, lem_height, rearrange, weaken
from .language import Atom, Formula, Lor, Neg, Plus, Succ, Term, Times, Univ, Var
from .prooftree import PreconditionError, ProofTree
from .serial import sexp_tag

ZERO = L.ZERO_T


def _x(i: int) -> Term:
    return Var(i)


class PeanoProof:
    """Base class; subclasses are frozen dataclasses registered for serialisation."""

    def conclusion(self) -> Formula:
        return conclusion(self)

    def degree(self) -> int:
        return decoration(self)[0]

    def height(self) -> O.Ordinal:
        return decoration(self)[1]


# ------------------------------------------------------------- logical axioms

@sexp_tag("fol1")
@dataclass(frozen=True)
class FOL1(PeanoProof):
    """A -> (B -> A)"""

    a: Formula
    b: Formula


@sexp_tag("fol2")
@dataclass(frozen=True)
class FOL2(PeanoProof):
    """(A -> (B -> C)) -> ((A -> B) -> (A -> C))"""

    a: Formula
    b: Formula
    c: Formula


@sexp_tag("fol3")
@dataclass(frozen=True)
class FOL3(PeanoProof):
    """(~A -> ~B) -> ((~A -> B) -> A)"""

    a: Formula
    b: Formula


@sexp_tag("fol4")
@dataclass(frozen=True)
class FOL4(PeanoProof):
    """(forall n A) -> A[n:=t]"""

    a: Formula
    n: int
    t: Term


@sexp_tag("fol5")
@dataclass(frozen=True)
class FOL5(PeanoProof):
    """(forall n (A -> B)) -> (A -> forall n B), n not free in A."""

    a: Formula
    b: Formula
    n: int

    def __post_init__(self) -> None:
        if self.n in L.free_list(self.a):
            raise PreconditionError(f"x{self.n} is free in {L.show_formula(self.a)}")


# ------------------------------------------------------ arithmetic axioms
# Each takes the terms of its instance; the defaults give the open form over
# x0, x1, x2 that UG turns back into the quantified axiom.

@sexp_tag("equ_trans")
@dataclass(frozen=True)
class EquTrans(PeanoProof):
    t0: Term = field(default_factory=lambda: _x(0))
    t1: Term = field(default_factory=lambda: _x(1))
    t2: Term = field(default_factory=lambda: _x(2))


@sexp_tag("equ_succ")
@dataclass(frozen=True)
class EquSucc(PeanoProof):
    t0: Term = field(default_factory=lambda: _x(0))
    t1: Term = field(default_factory=lambda: _x(1))


@sexp_tag("non_zero")
@dataclass(frozen=True)
class NonZero(PeanoProof):
    t0: Term = field(default_factory=lambda: _x(0))


@sexp_tag("succ_equ")
@dataclass(frozen=True)
class SuccEqu(PeanoProof):
    t0: Term = field(default_factory=lambda: _x(0))
    t1: Term = field(default_factory=lambda: _x(1))


@sexp_tag("pl0")
@dataclass(frozen=True)
class Pl0(PeanoProof):
    t0: Term = field(default_factory=lambda: _x(0))


@sexp_tag("plS")
@dataclass(frozen=True)
class PlS(PeanoProof):
    t0: Term = field(default_factory=lambda: _x(0))
    t1: Term = field(default_factory=lambda: _x(1))


@sexp_tag("ml0")
@dataclass(frozen=True)
class Ml0(PeanoProof):
    t0: Term = field(default_factory=lambda: _x(0))


@sexp_tag("mlS")
@dataclass(frozen=True)
class MlS(PeanoProof):
    t0: Term = field(default_factory=lambda: _x(0))
    t1: Term = field(default_factory=lambda: _x(1))


ARITH: dict[str, type] = {
    "equ_trans": EquTrans,
    "equ_succ": EquSucc,
    "non_zero": NonZero,
    "succ_equ": SuccEqu,
    "pl0": Pl0,
    "plS": PlS,
    "ml0": Ml0,
    "mlS": MlS,
}


def _arith_terms(p: PeanoProof) -> tuple[Term, ...]:
    return tuple(getattr(p, f) for f in ("t0", "t1", "t2") if hasattr(p, f))


def arith_formula(axiom: str, terms: tuple[Term, ...]) -> Formula:
    eq = Atom
    t = list(terms)
    if axiom == "equ_trans":
        return Lor(Neg(eq(t[0], t[1])), Lor(Neg(eq(t[1], t[2])), eq(t[0], t[2])))
    if axiom == "equ_succ":
        return Lor(Neg(eq(t[0], t[1])), eq(Succ(t[0]), Succ(t[1])))
    if axiom == "non_zero":
        return Neg(eq(ZERO, Succ(t[0])))
    if axiom == "succ_equ":
        return Lor(Neg(eq(Succ(t[0]), Succ(t[1]))), eq(t[0], t[1]))
    if axiom == "pl0":
        return eq(Plus(t[0], ZERO), t[0])
    if axiom == "plS":
        return eq(Plus(t[0], Succ(t[1])), Succ(Plus(t[0], t[1])))
    if axiom == "ml0":
        return eq(Times(t[0], ZERO), ZERO)
    if axiom == "mlS":
        return eq(Times(t[0], Succ(t[1])), Plus(Times(t[0], t[1]), t[0]))
    raise PreconditionError(f"unknown arithmetic axiom {axiom!r}")


# ------------------------------------------------------------ induction

@sexp_tag("induct")
@dataclass(frozen=True)
class Induct(PeanoProof):
    """A[n:=0] -> (forall n (A -> A[n:=S xn])) -> forall n A"""

    a: Formula
    n: int


# ------------------------------------------------------------------ rules

@sexp_tag("mp")
@dataclass(frozen=True)
class MP(PeanoProof):
    """From A -> B (``imp``) and A (``prem``) conclude B.

    The decoration is inferred rather than tabulated: the translation is a
    cut_ad on A, so the degree is max(d1, d2, num_conn(A) + 1) and the
    height sits two above the larger premise height.
    """

    imp: PeanoProof
    prem: PeanoProof

    def __post_init__(self) -> None:
        f, a = conclusion(self.imp), conclusion(self.prem)
        if not (isinstance(f, Lor) and f.left == Neg(a)):
            raise PreconditionError(
                f"modus ponens: {L.show_formula(f)} is not an implication from {L.show_formula(a)}"
            )


@sexp_tag("ug")
@dataclass(frozen=True)
class UG(PeanoProof):
    """Plain generalisation: from A conclude forall n A."""

    sub: PeanoProof
    n: int


@sexp_tag("i_ug")
@dataclass(frozen=True)
class IUG(PeanoProof):
    """Generalisation carrying an instance proof of A[n:=t] for every closed t."""

    sub: PeanoProof
    n: int
    fam: T.Family


@sexp_tag("assume")
@dataclass(frozen=True)
class Assume(PeanoProof):
    """An unjustified leaf; its translation is a bare node, well-formed only for axioms."""

    a: Formula


# ------------------------------------------------------------- conclusions

def _q_formula(a: Formula, n: int) -> Formula:
    # forall n (~A | A[n := S xn])
    return Univ(n, Lor(Neg(a), L.substitute(a, n, Succ(Var(n)))))


def induct_formula(a: Formula, n: int) -> Formula:
    return Lor(Neg(L.substitute(a, n, ZERO)), Lor(Neg(_q_formula(a, n)), Univ(n, a)))


@functools.lru_cache(maxsize=None)
def conclusion(p: PeanoProof) -> Formula:
    if isinstance(p, FOL1):
        return L.implies(p.a, L.implies(p.b, p.a))
    if isinstance(p, FOL2):
        a, b, c = p.a, p.b, p.c
        return L.implies(L.implies(a, L.implies(b, c)), L.implies(L.implies(a, b), L.implies(a, c)))
    if isinstance(p, FOL3):
        a, b = p.a, p.b
        return L.implies(L.implies(Neg(a), Neg(b)), L.implies(L.implies(Neg(a), b), a))
    if isinstance(p, FOL4):
        return L.implies(Univ(p.n, p.a), L.substitute(p.a, p.n, p.t))
    if isinstance(p, FOL5):
        return L.implies(Univ(p.n, L.implies(p.a, p.b)), L.implies(p.a, Univ(p.n, p.b)))
    for name, cls in ARITH.items():
        if isinstance(p, cls):
            return arith_formula(name, _arith_terms(p))
    if isinstance(p, Induct):
        return induct_formula(p.a, p.n)
    if isinstance(p, MP):
        f = conclusion(p.imp)
        assert isinstance(f, Lor)
        return f.right
    if isinstance(p, (UG, IUG)):
        return Univ(p.n, conclusion(p.sub))
    if isinstance(p, Assume):
        return p.a
    raise TypeError(f"not a PA proof: {p!r}")


# ------------------------------------------------------------ substitution

def subst_proof(p: PeanoProof, n: int, t: Term) -> PeanoProof:
    """Replace the free variable xn by the closed term t throughout p."""
    if not L.closed_term(t):
        raise PreconditionError(f"term {L.show_term(t)} is not closed")

    def f(a: Formula) -> Formula:
        return L.substitute(a, n, t)

    def u(s: Term) -> Term:
        return L.term_subst(s, n, t)

    if isinstance(p, FOL1):
        return FOL1(f(p.a), f(p.b))
    if isinstance(p, FOL2):
        return FOL2(f(p.a), f(p.b), f(p.c))
    if isinstance(p, FOL3):
        return FOL3(f(p.a), f(p.b))
    if isinstance(p, FOL4):
        return FOL4(p.a if p.n == n else f(p.a), p.n, u(p.t))
    if isinstance(p, FOL5):
        return FOL5(f(p.a), p.b if p.n == n else f(p.b), p.n)
    if type(p) in ARITH.values():
        return type(p)(*(u(s) for s in _arith_terms(p)))
    if isinstance(p, Induct):
        return p if p.n == n else Induct(f(p.a), p.n)
    if isinstance(p, MP):
        return MP(subst_proof(p.imp, n, t), subst_proof(p.prem, n, t))
    if isinstance(p, UG):
        return p if p.n == n else UG(subst_proof(p.sub, n, t), p.n)
    if isinstance(p, IUG):
        if p.n == n:
            return p
        return IUG(subst_proof(p.sub, n, t), p.n, T.Call("pa_subst_family", (n, t, p.fam)))
    if isinstance(p, Assume):
        return Assume(f(p.a))
    raise TypeError(f"not a PA proof: {p!r}")


@T.register_family("pa_subst")
def _subst_family(t: Term, n: int, p: PeanoProof) -> PeanoProof:
    return subst_proof(p, n, t)


@T.register_family("pa_subst_family")
def _subst_family_family(s: Term, n: int, t: Term, fam: T.Family) -> PeanoProof:
    return subst_proof(fam(s), n, t)


def generalize(p: PeanoProof, n: int) -> IUG:
    """I_UG whose instance family substitutes into p itself."""
    return IUG(p, n, T.Call("pa_subst", (n, p)))


def arith_axiom(axiom: str, quantified: bool = False) -> PeanoProof:
    """The open arithmetic axiom, or with ``quantified`` its universally closed original."""
    cls = ARITH.get(axiom)
    if cls is None:
        raise PreconditionError(f"unknown arithmetic axiom {axiom!r}")
    p: PeanoProof = cls()
    if quantified:
        for v in reversed(range(len(_arith_terms(p)))):
            p = generalize(p, v)
    return p


# ---------------------------------------------------- axiom derivations

def _closed(*fs: Formula) -> None:
    for f in fs:
        if not L.closed(f):
            raise PreconditionError(f"formula not closed: {L.show_formula(f)}")


def derive_FOL1(a: Formula, b: Formula) -> ProofTree:
    _closed(a, b)
    q = weaken(Neg(b), build_LEM(a))
    return rearrange(q, L.implies(a, L.implies(b, a)), units=(a, b))


def derive_FOL2(a: Formula, b: Formula, c: Formula) -> ProofTree:
    """Cut on B between LEM(~A | B) and LEM(~A | (~B | C))."""
    _closed(a, b, c)
    na, nb = Neg(a), Neg(b)
    x = Lor(na, Lor(nb, c))
    y = Lor(na, b)
    units = (na, nb, Neg(x), Neg(y), b, c)
    left = rearrange(build_LEM(y), Lor(Lor(na, Neg(y)), b), units)
    right_d = Lor(Lor(c, Neg(x)), na)
    right = rearrange(build_LEM(x), Lor(nb, right_d), units)
    cut = T.CutCAD(
        Lor(na, Neg(y)), b, right_d, left.degree(), right.degree(), left.height(), right.height(), left, right
    )
    rest = Lor(Neg(y), Lor(c, Neg(x)))
    q = rearrange(cut, Lor(Lor(na, na), rest), units)
    q = T.ContractionAD(na, rest, q.degree(), q.height(), q)
    return rearrange(q, Lor(Neg(x), Lor(Neg(y), Lor(na, c))), units)


def derive_FOL3(a: Formula, b: Formula) -> ProofTree:
    _closed(a, b)
    na, nnna, nnb = Neg(a), Neg(Neg(Neg(a))), Neg(Neg(b))
    y = Lor(Neg(Neg(a)), b)
    r = Lor(Neg(y), a)
    units = (a, b, na, nnna, nnb, Neg(b), Neg(y))
    base = build_LEM(a)  # ~A | A
    base = T.NegationAD(na, a, base.degree(), base.height(), base)  # ~~~A | A
    top = rearrange(weaken(Neg(y), base), Lor(nnna, r), units)
    # ~~B | R by DeMorgan on ~~A, B over d = ~~B | A
    d = Lor(nnb, a)
    l1 = rearrange(weaken(nnb, base), Lor(nnna, d), units)
    r1 = rearrange(weaken(a, build_LEM(Neg(b))), Lor(Neg(b), d), units)
    mid = T.DemorganABD(Neg(Neg(a)), b, d, l1.degree(), r1.degree(), l1.height(), r1.height(), l1, r1)
    mid = rearrange(mid, Lor(nnb, r), units)
    return T.DemorganABD(
        Neg(Neg(a)), Neg(b), r, top.degree(), mid.degree(), top.height(), mid.height(), top, mid
    )


def derive_FOL4(a: Formula, n: int, t: Term) -> ProofTree:
    _closed(Univ(n, a))
    if not L.closed_term(t):
        raise PreconditionError(f"term {L.show_term(t)} is not closed")
    inst = L.substitute(a, n, t)
    q = build_LEM(inst)
    return T.QuantificationAD(a, inst, n, t, q.degree(), q.height(), q)


def derive_FOL5(a: Formula, b: Formula, n: int) -> ProofTree:
    if n in L.free_list(a):
        raise PreconditionError(f"x{n} is free in {L.show_formula(a)}")
    _closed(a, Univ(n, b))
    imp = L.implies(a, b)
    side = Lor(Neg(a), Neg(Univ(n, imp)))
    step = O.succ(lem_height(imp))
    q = T.WRuleAD(b, side, n, 0, step, T.Call("fol5_premise", (a, b, n)))
    return rearrange(q, L.implies(Univ(n, imp), L.implies(a, Univ(n, b))), units=(Neg(a), Univ(n, b), Neg(Univ(n, imp))))


@T.register_family("fol5_premise")
def _fol5_premise(t: Term, a: Formula, b: Formula, n: int) -> ProofTree:
    # B[t] | (~A | ~forall n (~A | B))
    imp = L.implies(a, b)
    bt = L.substitute(b, n, t)
    q = build_LEM(L.implies(a, bt))
    q = T.QuantificationAD(imp, L.implies(a, bt), n, t, q.degree(), q.height(), q)
    side = Lor(Neg(a), Neg(Univ(n, imp)))
    return rearrange(q, Lor(bt, side), units=(Neg(a), bt, Neg(Univ(n, imp))))


ARITH_HEIGHT = {"equ_trans": 2, "equ_succ": 1, "succ_equ": 1}


def derive_arith(axiom: str, terms: Iterable[Term]) -> ProofTree:
    """Proof of the arithmetic axiom instance with the given closed terms."""
    cls = ARITH.get(axiom)
    if cls is None:
        raise PreconditionError(f"unknown arithmetic axiom {axiom!r}")
    terms = tuple(terms)
    arity = len(_arith_terms(cls()))
    if len(terms) != arity:
        raise PreconditionError(f"{axiom} takes {arity} terms, got {len(terms)}")
    for t in terms:
        if not L.closed_term(t):
            raise PreconditionError(f"term {L.show_term(t)} is not closed")
    goal = arith_formula(axiom, terms)
    same = len(terms) >= 2 and L.eval_term(terms[0]) == L.eval_term(terms[1])
    if axiom == "equ_trans":
        t0, t1, t2 = terms
        e01 = Atom(t0, t1)
        if same:
            # ~(t1 = t2) | (t0 = t2) from LEM_term over x0 = t2, then weaken
            q = D._lem_term(Atom(Var(0), t2), 0, t1, t0)
            return weaken(Neg(e01), q)
        q = weaken(goal.right, T.Node(Neg(e01)))
        q = D.exchange(q)
        return T.ord_pad(q, O.nat_ord(ARITH_HEIGHT[axiom]))
    if axiom in ("equ_succ", "succ_equ"):
        assert isinstance(goal, Lor)
        lhs, rhs = goal.left, goal.right
        if same:
            return weaken(lhs, T.Node(rhs))
        return D.exchange(weaken(rhs, T.Node(lhs)))
    return T.Node(goal)


# ---------------------------------------------------------------- induction

def inductive_chain(a: Formula, n: int, m: int) -> Formula:
    """C(0) = ~(~A[0] | A[1]);  C(m+1) = C(m) | ~(~A[m+1] | A[m+2])."""

    def link(k: int) -> Formula:
        return Neg(Lor(Neg(L.substitute(a, n, L.numeral(k))), L.substitute(a, n, L.numeral(k + 1))))

    f = link(0)
    for k in range(1, m + 1):
        f = Lor(f, link(k))
    return f


def inductive_iterate(a: Formula, n: int, m: int) -> Formula:
    """I(m) = (A[m] | ~A[0]) | ~forall n (~A | A[n := S xn])."""
    return Lor(
        Lor(L.substitute(a, n, L.numeral(m)), Neg(L.substitute(a, n, ZERO))),
        Neg(_q_formula(a, n)),
    )


def _check_induction_formula(a: Formula, n: int) -> None:
    if not set(L.free_list(a)) <= {n}:
        raise PreconditionError(
            f"free variables of {L.show_formula(a)} must be exactly [x{n}], got {L.free_list(a)}"
        )


@functools.lru_cache(maxsize=4096)
def derive_iterate(a: Formula, n: int, m: int) -> ProofTree:
    """Degree 0 proof of I(m) at height lem_height(A) + 4m + 1."""
    _check_induction_formula(a, n)
    if m < 0:
        raise PreconditionError("iterate index must be non-negative")
    a0 = L.substitute(a, n, ZERO)
    z, q = Neg(a0), Neg(_q_formula(a, n))
    goal = inductive_iterate(a, n, m)
    if m == 0:
        p = D.exchange(build_LEM(a0))  # A[0] | ~A[0]
        return D.exchange(weaken(q, p))
    ak = L.substitute(a, n, L.numeral(m - 1))
    am = L.substitute(a, n, L.numeral(m))
    units = (ak, am, z, q, Neg(am))
    prev = derive_iterate(a, n, m - 1)
    # A[k] | X and ~A[m] | X with X = I(m)
    left = rearrange(weaken(am, prev), Lor(ak, goal), units)
    left = T.NegationAD(ak, goal, left.degree(), left.height(), left)
    right = rearrange(weaken(Lor(z, q), build_LEM(am)), Lor(Neg(am), goal), units)
    step = T.DemorganABD(Neg(ak), am, goal, 0, 0, left.height(), right.height(), left, right)
    body = Lor(Neg(a), L.substitute(a, n, Succ(Var(n))))
    step = T.QuantificationAD(body, goal, n, L.numeral(m - 1), 0, step.height(), step)
    # Q | ((A[m] | ~A[0]) | Q): gather the two copies of Q and contract them
    rest = Lor(am, z)
    step = rearrange(step, Lor(Lor(q, q), rest), units)
    step = T.ContractionAD(q, rest, 0, step.height(), step)
    return rearrange(step, goal, units)


def iterate_height(a: Formula, m: int) -> O.Ordinal:
    return O.nat_ord(O.ord_to_nat(lem_height(a)) + 4 * m + 1)


def derive_induction(a: Formula, n: int) -> ProofTree:
    """Proof of the closed induction axiom for A with free variable xn."""
    if L.free_list(a) != [n]:
        raise PreconditionError(
            f"free variables of {L.show_formula(a)} must be exactly [x{n}], got {L.free_list(a)}"
        )
    return _induction(a, n)


def _induction(a: Formula, n: int) -> ProofTree:
    _check_induction_formula(a, n)
    z = Neg(L.substitute(a, n, ZERO))
    q = Neg(_q_formula(a, n))
    deg = L.num_conn(a) + 1
    w = T.WRuleAD(a, Lor(z, q), n, deg, O.OMEGA, T.Call("induction_premise", (a, n)))
    return rearrange(w, induct_formula(a, n), units=(z, q, Univ(n, a)))


@T.register_family("induction_premise")
def _induction_premise(t: Term, a: Formula, n: int) -> ProofTree:
    # A[t] | (~A[0] | Q): cut I(m) against LEM_term on A[m] / A[t], m the value of t
    m = L.denumeral(t)
    am, at = L.substitute(a, n, L.numeral(m)), L.substitute(a, n, t)
    z = Neg(L.substitute(a, n, ZERO))
    q = Neg(_q_formula(a, n))
    c = Lor(z, q)
    it = rearrange(derive_iterate(a, n, m), Lor(c, am), units=(am, z, q))
    lem = D._lem_term(a, n, L.numeral(m), t)
    cut = T.CutCAD(c, am, at, it.degree(), lem.degree(), it.height(), lem.height(), it, lem)
    p = D.exchange(cut)
    return T.ord_pad(T.deg_pad(p, L.num_conn(a) + 1), O.OMEGA)


# ---------------------------------------------------------------- translation

def close_except(a: Formula, n: int, c: Term) -> Formula:
    """Close every free variable of a other than xn with c."""
    for i in L.free_list(a):
        if i != n:
            a = L.substitute(a, i, c)
    return a


def translate(p: PeanoProof, c: Term) -> ProofTree:
    """The ω-calculus proof of closure(conclusion(p), c)."""
    if not L.closed_term(c):
        raise PreconditionError(f"closure term {L.show_term(c)} is not closed")
    out = _translate(p, c)
    want = L.closure(conclusion(p), c)
    if out.formula() != want:
        raise PreconditionError(
            f"translation of {type(p).__name__} ends in {L.show_formula(out.formula())}, "
            f"expected {L.show_formula(want)}"
        )
    return out


def _translate(p: PeanoProof, c: Term) -> ProofTree:
    def cl(a: Formula) -> Formula:
        return L.closure(a, c)

    if isinstance(p, FOL1):
        return derive_FOL1(cl(p.a), cl(p.b))
    if isinstance(p, FOL2):
        return derive_FOL2(cl(p.a), cl(p.b), cl(p.c))
    if isinstance(p, FOL3):
        return derive_FOL3(cl(p.a), cl(p.b))
    if isinstance(p, FOL4):
        return derive_FOL4(close_except(p.a, p.n, c), p.n, L.term_close(p.t, c))
    if isinstance(p, FOL5):
        return derive_FOL5(cl(p.a), close_except(p.b, p.n, c), p.n)
    if type(p) in ARITH.values():
        name = next(k for k, v in ARITH.items() if v is type(p))
        return derive_arith(name, [L.term_close(t, c) for t in _arith_terms(p)])
    if isinstance(p, Induct):
        return _induction(close_except(p.a, p.n, c), p.n)
    if isinstance(p, MP):
        t1 = translate(p.prem, c)
        t2 = translate(p.imp, c)
        f = t2.formula()
        assert isinstance(f, Lor)
        return T.CutAD(t1.formula(), f.right, t1.degree(), t2.degree(), t1.height(), t2.height(), t1, t2)
    if isinstance(p, (UG, IUG)):
        body = close_except(conclusion(p.sub), p.n, c)
        deg, alpha = decoration(p.sub)
        if isinstance(p, UG):
            fam = T.Call("translate_ug", (p.sub, p.n, c, deg, alpha))
            w = T.WRuleA(body, p.n, deg, alpha, fam)
            return T.ord_pad(w, O.Cons(alpha, 0, O.ZERO))
        fam = T.Call("translate_iug", (p.sub, p.n, p.fam, c, deg, alpha))
        return T.WRuleA(body, p.n, deg, alpha, fam)
    if isinstance(p, Assume):
        return T.Node(cl(p.a))
    raise TypeError(f"not a PA proof: {p!r}")


def _fit(q: ProofTree, deg: int, alpha: O.Ordinal) -> ProofTree:
    if q.degree() > deg or O.lt(alpha, q.height()):
        raise PreconditionError(
            f"instance proof decorated ({q.degree()}, {O.show_ord(q.height())}) "
            f"exceeds ({deg}, {O.show_ord(alpha)})"
        )
    return T.ord_pad(T.deg_pad(q, deg), alpha)


@T.register_family("translate_ug")
def _translate_ug(t: Term, sub: PeanoProof, n: int, c: Term, deg: int, alpha: O.Ordinal) -> ProofTree:
    return _fit(translate(subst_proof(sub, n, t), c), deg, alpha)


@T.register_family("translate_iug")
def _translate_iug(
    t: Term, sub: PeanoProof, n: int, fam: T.Family, c: Term, deg: int, alpha: O.Ordinal
) -> ProofTree:
    inst = fam(t)
    want = L.substitute(conclusion(sub), n, t)
    if conclusion(inst) != want:
        raise PreconditionError(
            f"instance family at {L.show_term(t)} proves {L.show_formula(conclusion(inst))}, "
            f"expected {L.show_formula(want)}"
        )
    return _fit(translate(inst, c), deg, alpha)


@functools.lru_cache(maxsize=4096)
def decoration(p: PeanoProof) -> tuple[int, O.Ordinal]:
    """(degree, height) of p, read off its translation with the numeral 0."""
    q = translate(p, ZERO)
    return q.degree(), q.height()


# -------------------------------------------------------------- consistency

@dataclass
class ConsistencyReport:
    formula: Formula
    first: T.WFResult
    second: T.WFResult
    danger: ProofTree
    eliminated: ProofTree | None = None
    lines: list[str] = field(default_factory=list)

    @property
    def verdict(self) -> str:
        if not self.first.ok or not self.second.ok:
            return "no contradiction: a translation is not well-formed"
        return "contradiction: degree 0 proof of a dangerous formula"

    def render(self) -> str:
        return "\n".join(self.lines)


def demonstrate_consistency(
    p1: PeanoProof, p2: PeanoProof, samples: Iterable[Term] | None = None
) -> ConsistencyReport:
    """Run the consistency argument on purported proofs of A and ~A."""
    a = conclusion(p1)
    if conclusion(p2) != Neg(a):
        raise PreconditionError(
            f"second proof should conclude {L.show_formula(Neg(a))}, got {L.show_formula(conclusion(p2))}"
        )
    c = ZERO
    t1, t2 = translate(p1, c), translate(p2, c)
    # closure commutes with negation, so t2 ends in ~closure(A)
    assert t2.formula() == Neg(t1.formula())
    samples = T.default_samples() if samples is None else list(samples)
    r1, r2 = T.well_formed(t1, samples), T.well_formed(t2, samples)
    danger = derive_danger_from_contradiction(t1, t2)
    rep = ConsistencyReport(L.closure(a, c), r1, r2, danger)
    rep.lines += [
        f"formula: {L.show_formula(rep.formula)}",
        f"first_well_formed: {str(r1.ok).lower()}",
        f"second_well_formed: {str(r2.ok).lower()}",
    ]
    if not r1.ok:
        rep.lines.append(f"first_failure: {r1.describe()}")
    if not r2.ok:
        rep.lines.append(f"second_failure: {r2.describe()}")
    rep.lines += [
        f"danger_formula: {L.show_formula(danger.formula())}",
        f"danger_dangerous: {str(dangerous_disjunct(danger.formula())).lower()}",
        f"danger_degree: {danger.degree()}",
        f"danger_height: {O.show_ord(danger.height())}",
    ]
    if r1.ok and r2.ok:
        rep.eliminated = cut_elim(danger)
        rep.lines.append(f"eliminated_degree: {rep.eliminated.degree()}")
    rep.lines.append(f"verdict: {rep.verdict}")
    return rep


PA_CONSTRUCTORS: dict[str, type] = {
    "fol1": FOL1,
    "fol2": FOL2,
    "fol3": FOL3,
    "fol4": FOL4,
    "fol5": FOL5,
    **ARITH,
    "induct": Induct,
}


def sample_instances() -> list[PeanoProof]:
    """One instance of each axiom constructor, used by tests and the CLI demo."""
    x0, x1 = Var(0), Var(1)
    e = Atom(x0, x0)
    return [
        FOL1(Atom(ZERO, ZERO), Atom(ZERO, Succ(ZERO))),
        FOL2(Atom(x0, ZERO), Neg(Atom(x1, x0)), Atom(Succ(x0), x1)),
        FOL3(Atom(x0, Succ(ZERO)), Atom(ZERO, x0)),
        FOL4(e, 0, Succ(ZERO)),
        FOL5(Atom(x1, x1), Atom(x0, x1), 0),
        *(cls() for cls in ARITH.values()),
        Induct(Atom(Plus(ZERO, x0), x0), 0),
    ]
