"""Cut-free derivation builders with exact decorations.

``build_LEM(A)`` proves ~A | A at degree 0 and height 2n+1 where n is the
connective count of A.  ``build_LEM_term`` does the same for a formula whose
free variable is instantiated with two terms of equal value.  The helpers
here only use exchange moves, so they never change a decoration.
"""
from __future__ import annotations

from collections import deque

from . import language as L
from . import ordinal as O
from . import prooftree as T
from .language import Atom, Formula, Lor, Neg, Term, Truth, Univ
from .prooftree import PreconditionError, ProofTree


def lem_height(a: Formula) -> O.Ordinal:
    return O.nat_ord(2 * L.num_conn(a) + 1)


# ------------------------------------------------------------ exchange moves

def _moves(f: Formula, opaque: frozenset = frozenset()) -> list[tuple[str, tuple, Formula]]:
    """Exchange rules applicable at the root of f: (rule, formula args, result).

    Disjunctions listed in ``opaque`` are treated as indivisible units.
    """
    out: list[tuple[str, tuple, Formula]] = []

    def split(g: Formula) -> bool:
        return isinstance(g, Lor) and g not in opaque

    if not split(f):
        return out
    out.append(("ab", (f.left, f.right), Lor(f.right, f.left)))
    if split(f.left):
        c, a, b = f.left.left, f.left.right, f.right
        out.append(("cab", (c, a, b), Lor(Lor(c, b), a)))
        out.append(("abd", (c, a, b), Lor(Lor(a, c), b)))
        if split(f.left.left):
            c, a, b, d = f.left.left.left, f.left.left.right, f.left.right, f.right
            out.append(("cabd", (c, a, b, d), Lor(Lor(Lor(c, b), a), d)))
    return out


def _apply(rule: str, args: tuple, p: ProofTree) -> ProofTree:
    d, h = p.degree(), p.height()
    if rule == "ab":
        return T.ExchangeAB(*args, d, h, p)
    if rule == "cab":
        return T.ExchangeCAB(*args, d, h, p)
    if rule == "abd":
        return T.ExchangeABD(*args, d, h, p)
    return T.ExchangeCABD(*args, d, h, p)


def exchange_path(
    src: Formula, dst: Formula, limit: int = 200_000, units: tuple = ()
) -> list[tuple[str, tuple]] | None:
    """Shortest sequence of root exchange moves turning src into dst (breadth first)."""
    opaque = frozenset(u for u in units if isinstance(u, Lor))
    if src == dst:
        return []
    prev: dict[Formula, tuple[Formula, str, tuple] | None] = {src: None}
    queue = deque([src])
    while queue:
        f = queue.popleft()
        for rule, args, g in _moves(f, opaque):
            if g in prev:
                continue
            prev[g] = (f, rule, args)
            if g == dst:
                path = []
                cur = g
                while prev[cur] is not None:
                    back, r, a = prev[cur]  # type: ignore[misc]
                    path.append((r, a))
                    cur = back
                return path[::-1]
            if len(prev) > limit:
                return None
            queue.append(g)
    return None


def rearrange(p: ProofTree, target: Formula, units: tuple = ()) -> ProofTree:
    """Reorder and reassociate p's endsequent into target using exchanges only.

    Passing the disjuncts as ``units`` keeps the search from opening them up.
    """
    path = exchange_path(p.formula(), target, units=units)
    if path is None:
        raise PreconditionError(
            f"cannot rearrange {L.show_formula(p.formula())} into {L.show_formula(target)}"
        )
    for rule, args in path:
        p = _apply(rule, args, p)
    return p


def exchange(p: ProofTree) -> ProofTree:
    """a | b  to  b | a."""
    f = p.formula()
    if not isinstance(f, Lor):
        raise PreconditionError(f"exchange needs a disjunction, got {L.show_formula(f)}")
    return T.ExchangeAB(f.left, f.right, p.degree(), p.height(), p)


def assoc_right(p: ProofTree) -> ProofTree:
    """(C | A) | B  to  C | (A | B) via exchange_abd, exchange_cab, exchange_ab."""
    f = p.formula()
    if not (isinstance(f, Lor) and isinstance(f.left, Lor)):
        raise PreconditionError(f"assoc_right needs (C | A) | B, got {L.show_formula(f)}")
    c, a, b = f.left.left, f.left.right, f.right
    q = _apply("abd", (c, a, b), p)
    q = _apply("cab", (a, c, b), q)
    return _apply("ab", (Lor(a, b), c), q)


def assoc_left(p: ProofTree) -> ProofTree:
    """C | (A | B)  to  (C | A) | B via exchange_ab, exchange_cab, exchange_abd."""
    f = p.formula()
    if not (isinstance(f, Lor) and isinstance(f.right, Lor)):
        raise PreconditionError(f"assoc_left needs C | (A | B), got {L.show_formula(f)}")
    c, a, b = f.left, f.right.left, f.right.right
    q = _apply("ab", (c, Lor(a, b)), p)
    q = _apply("cab", (a, b, c), q)
    return _apply("abd", (a, c, b), q)


def weaken(a: Formula, p: ProofTree, right: bool = False) -> ProofTree:
    """a | E (or E | a when right) from a proof of E; height goes up by one."""
    if not L.closed(a):
        raise PreconditionError(f"formula not closed: {L.show_formula(a)}")
    q = T.WeakeningAD(p.formula(), a, p.degree(), p.height(), p)
    return exchange(q) if right else q


def contract(p: ProofTree) -> ProofTree:
    """a | a  to  a."""
    f = p.formula()
    if not (isinstance(f, Lor) and f.left == f.right):
        raise PreconditionError(f"contraction needs a | a, got {L.show_formula(f)}")
    return T.ContractionA(f.left, p.degree(), p.height(), p)


# --------------------------------------------------------------------- LEM

def _atom_lem(lhs: Atom, rhs: Atom) -> ProofTree:
    """~lhs | rhs for closed atoms of equal truth value, height 1."""
    truth = L.correct_atom(rhs)
    if truth is Truth.CORRECT:
        return weaken(Neg(lhs), T.Node(rhs))
    if truth is Truth.INCORRECT:
        return weaken(rhs, T.Node(Neg(lhs)), right=True)
    raise PreconditionError(f"atom {L.show_formula(rhs)} is not closed")


def build_LEM(a: Formula) -> ProofTree:
    """Degree 0 proof of ~a | a at height exactly 2 * num_conn(a) + 1."""
    if not L.closed(a):
        raise PreconditionError(f"formula not closed: {L.show_formula(a)}")
    return _lem(a)


def _lem(a: Formula) -> ProofTree:
    goal = lem_height(a)
    if isinstance(a, Atom):
        return _atom_lem(a, a)
    if isinstance(a, Neg):
        b = a.body
        q = exchange(_lem(b))
        q = T.NegationAD(b, Neg(b), 0, q.height(), q)
        return T.ord_pad(q, goal)
    if isinstance(a, Lor):
        b, c = a.left, a.right
        left = rearrange(weaken(c, _lem(b)), Lor(Neg(b), a))
        right = rearrange(weaken(b, _lem(c)), Lor(Neg(c), a))
        q = T.DemorganABD(b, c, a, 0, 0, left.height(), right.height(), left, right)
        return T.ord_pad(q, goal)
    assert isinstance(a, Univ)
    body, n = a.body, a.var
    inner = O.nat_ord(2 * L.num_conn(body) + 2)
    q = T.WRuleAD(body, Neg(a), n, 0, inner, T.Call("lem_univ", (body, n)))
    return exchange(q)


@T.register_family("lem_univ")
def _lem_univ_premise(t: Term, body: Formula, n: int) -> ProofTree:
    # B[t] | ~forall n B
    inst = L.substitute(body, n, t)
    q = _lem(inst)
    q = T.QuantificationAD(body, inst, n, t, 0, q.height(), q)
    return exchange(q)


def build_LEM_term(a: Formula, n: int, s: Term, t: Term) -> ProofTree:
    """Degree 0 proof of ~a[n:=s] | a[n:=t] for terms of equal value."""
    if L.free_list(a) != [n]:
        raise PreconditionError(
            f"free variables of {L.show_formula(a)} must be exactly [x{n}], got {L.free_list(a)}"
        )
    for u in (s, t):
        if not L.closed_term(u):
            raise PreconditionError(f"term {L.show_term(u)} is not closed")
    if L.correct_atom(Atom(s, t)) is not Truth.CORRECT:
        raise PreconditionError(f"terms {L.show_term(s)} and {L.show_term(t)} are not equal")
    return _lem_term(a, n, s, t)


def _lem_term(a: Formula, n: int, s: Term, t: Term) -> ProofTree:
    goal = lem_height(a)
    sub_s, sub_t = L.substitute(a, n, s), L.substitute(a, n, t)
    if isinstance(a, Atom):
        assert isinstance(sub_s, Atom) and isinstance(sub_t, Atom)
        return _atom_lem(sub_s, sub_t)
    if isinstance(a, Neg):
        b = a.body
        bs, bt = L.substitute(b, n, s), L.substitute(b, n, t)
        q = exchange(_lem_term(b, n, t, s))  # bs | ~bt
        q = T.NegationAD(bs, Neg(bt), 0, q.height(), q)
        return T.ord_pad(q, goal)
    if isinstance(a, Lor):
        bs, bt = L.substitute(a.left, n, s), L.substitute(a.left, n, t)
        cs, ct = L.substitute(a.right, n, s), L.substitute(a.right, n, t)
        left = rearrange(weaken(ct, _lem_term(a.left, n, s, t)), Lor(Neg(bs), sub_t))
        right = rearrange(weaken(bt, _lem_term(a.right, n, s, t)), Lor(Neg(cs), sub_t))
        q = T.DemorganABD(bs, cs, sub_t, 0, 0, left.height(), right.height(), left, right)
        return T.ord_pad(q, goal)
    assert isinstance(a, Univ)
    if a.var == n or n not in L.free_list(a):
        return _lem(sub_t)
    m, body = a.var, a.body
    inner = O.nat_ord(2 * L.num_conn(body) + 2)
    q = T.WRuleAD(
        L.substitute(body, n, t), Neg(sub_s), m, 0, inner, T.Call("lem_term_univ", (body, n, m, s, t))
    )
    return exchange(q)


@T.register_family("lem_term_univ")
def _lem_term_univ_premise(u: Term, body: Formula, n: int, m: int, s: Term, t: Term) -> ProofTree:
    # B[n:=t][m:=u] | ~forall m B[n:=s]
    inst = L.substitute(body, m, u)
    q = _lem_term(inst, n, s, t)
    bs = L.substitute(body, n, s)
    q = T.QuantificationAD(bs, L.substitute(inst, n, t), m, u, 0, q.height(), q)
    return exchange(q)


@T.register_builder
def _lem_builder(f: Formula) -> ProofTree | None:
    if isinstance(f, Lor) and f.left == Neg(f.right) and L.closed(f.right):
        return build_LEM(f.right)
    return None
