"""Random generators of closed formulas and sound proof trees.

Every tree comes from composing rule applications on trees that are already
well-formed, so the output is well-formed by construction (the tests still
check).  Randomness comes from an explicit ``random.Random`` so corpora are
reproducible from a seed.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import derivations as D
from . import language as L
from . import ordinal as O
from . import prooftree as T
from .language import Atom, Formula, Lor, Meta, Neg, Term, Univ
from .prooftree import ProofTree


def random_term(rng: random.Random, depth: int = 2, var: int | None = None) -> Term:
    if depth <= 0 or rng.random() < 0.35:
        if var is not None and rng.random() < 0.5:
            return L.Var(var)
        return L.numeral(rng.randrange(3))
    pick = rng.randrange(3)
    if pick == 0:
        return L.Succ(random_term(rng, depth - 1, var))
    ctor = L.Plus if pick == 1 else L.Times
    return ctor(random_term(rng, depth - 1, var), random_term(rng, depth - 1, var))


def random_formula(rng: random.Random, conn: int, bound: tuple[int, ...] = ()) -> Formula:
    """A formula with exactly ``conn`` connectives whose free variables lie in ``bound``."""
    var = rng.choice(bound) if bound else None
    if conn == 0:
        return Atom(random_term(rng, 2, var), random_term(rng, 2, var))
    pick = rng.randrange(3)
    if pick == 0:
        return Neg(random_formula(rng, conn - 1, bound))
    if pick == 1:
        k = rng.randrange(conn)
        return Lor(random_formula(rng, k, bound), random_formula(rng, conn - 1 - k, bound))
    n = rng.randrange(3)
    return Univ(n, random_formula(rng, conn - 1, tuple(sorted(set(bound) | {n}))))


def random_closed_formula(rng: random.Random, conn: int) -> Formula:
    return random_formula(rng, conn)


def random_axiom(rng: random.Random) -> Formula:
    while True:
        a = Atom(random_term(rng, 2), random_term(rng, 2))
        if L.is_axiom(a):
            return a
        if L.is_axiom(Neg(a)):
            return Neg(a)


@dataclass
class TreeGen:
    """Grows random well-formed trees bottom up.

    ``max_conn`` bounds the connective count of weakened and cut formulas,
    which keeps degrees (cut formula size + 1) small.
    """

    rng: random.Random
    max_conn: int = 2
    allow_cut: bool = True
    allow_omega: bool = True
    pool: list[ProofTree] = field(default_factory=list)

    def small_formula(self) -> Formula:
        return random_closed_formula(self.rng, self.rng.randrange(self.max_conn + 1))

    def leaf(self) -> ProofTree:
        if self.rng.random() < 0.6:
            return T.Node(random_axiom(self.rng))
        return D.build_LEM(random_closed_formula(self.rng, self.rng.randrange(2)))

    def grow(self, steps: int) -> ProofTree:
        p = self.leaf()
        for _ in range(steps):
            p = self.step(p)
        return p

    def step(self, p: ProofTree) -> ProofTree:
        rng = self.rng
        ops = [self.weaken, self.exchange, self.negation, self.demorgan, self.quantify, self.contract]
        if self.allow_cut:
            ops += [self.cut, self.cut]
        if self.allow_omega:
            ops.append(self.omega)
        for _ in range(8):
            q = rng.choice(ops)(p)
            if q is not None:
                return q
        return self.weaken(p)

    # individual rule applications; each returns None when not applicable

    def weaken(self, p: ProofTree) -> ProofTree:
        return D.weaken(self.small_formula(), p, right=self.rng.random() < 0.5)

    def exchange(self, p: ProofTree) -> ProofTree | None:
        moves = D._moves(p.formula())
        if not moves:
            return None
        rule, args, _ = self.rng.choice(moves)
        return D._apply(rule, args, p)

    def negation(self, p: ProofTree) -> ProofTree:
        f = p.formula()
        if isinstance(f, Lor) and self.rng.random() < 0.7:
            return T.NegationAD(f.left, f.right, p.degree(), p.height(), p)
        return T.NegationA(f, p.degree(), p.height(), p)

    def demorgan(self, p: ProofTree) -> ProofTree | None:
        f = p.formula()
        if isinstance(f, Neg) and self.rng.random() < 0.3:
            q = T.Node(random_axiom(self.rng))
            if isinstance(q.a, Neg):
                return T.DemorganAB(f.body, q.a.body, p.degree(), 0, p.height(), O.ZERO, p, q)
            return None
        a, b = self.small_formula(), self.small_formula()
        l, r = D.weaken(Neg(a), p), D.weaken(Neg(b), p)
        return T.DemorganABD(a, b, f, l.degree(), r.degree(), l.height(), r.height(), l, r)

    def quantify(self, p: ProofTree) -> ProofTree:
        n = self.rng.randrange(3)
        body = random_formula(self.rng, self.rng.randrange(max(1, self.max_conn)), (n,))
        t = random_term(self.rng, 2)
        q = D.weaken(Neg(L.substitute(body, n, t)), p)
        return T.QuantificationAD(body, p.formula(), n, t, q.degree(), q.height(), q)

    def contract(self, p: ProofTree) -> ProofTree:
        f = p.formula()
        if isinstance(f, Lor) and self.rng.random() < 0.5:
            q = D.assoc_left(D.weaken(f.left, p))
            return T.ContractionAD(f.left, f.right, q.degree(), q.height(), q)
        q = D.weaken(f, p)
        return T.ContractionA(f, q.degree(), q.height(), q)

    def falsum_cut(self, p: ProofTree) -> ProofTree:
        """Cut p's endsequent x against a doubly negated false equation.

        x | ~~f comes from weakening p and ~~~f from the axiom ~f, so the cut
        has degree 3 while its height stays p's height plus two.
        """
        f = self.rng.choice((Atom(L.ZERO_T, L.numeral(1)), Atom(L.numeral(2), L.ZERO_T)))
        a = Neg(Neg(f))
        left = D.exchange(D.weaken(a, p))
        right = T.NegationA(Neg(f), 0, O.ZERO, T.Node(Neg(f)))
        return T.CutCA(p.formula(), a, left.degree(), 0, left.height(), O.ONE, left, right)

    def omega(self, p: ProofTree) -> ProofTree:
        # forall n B | E from the template k |-> B[k] | E (a weakening of p)
        n = self.rng.randrange(3)
        body = random_formula(self.rng, self.rng.randrange(max(1, self.max_conn)), (n,))
        f = p.formula()
        tmpl = T.WeakeningAD(f, L.substitute(body, n, Meta("k")), p.degree(), p.height(), p)
        fam = T.Template("k", tmpl)
        return T.WRuleAD(body, f, n, p.degree(), O.succ(p.height()), fam)

    def cut(self, p: ProofTree) -> ProofTree | None:
        """Cut on p's endsequent X, keeping the conclusion meaningful."""
        x = p.formula()
        if isinstance(x, Lor) and L.num_conn(x.left) <= self.max_conn and self.rng.random() < 0.5:
            # cut on the left disjunct u of u | v: (v | u) and ~u | u give v | u
            u, v = x.left, x.right
            q = D.exchange(p)
            lem = D.build_LEM(u)
            return T.CutCAD(v, u, u, q.degree(), 0, q.height(), lem.height(), q, lem)
        if L.num_conn(x) > self.max_conn:
            return None
        lem = D.build_LEM(x)  # ~x | x
        pick = self.rng.randrange(3)
        if pick == 0:
            # x from p and ~x | x: cut_ad gives x
            return T.CutAD(x, x, p.degree(), 0, p.height(), lem.height(), p, lem)
        if pick == 1:
            # c | x (weakened p) and ~x | x: cut_cad gives c | x
            c = self.small_formula()
            q = D.weaken(c, p)
            return T.CutCAD(c, x, x, q.degree(), 0, q.height(), lem.height(), q, lem)
        if isinstance(x, Neg):
            # ~y | y and ~y: cut_ca gives ~y
            y = x.body
            ly = D.build_LEM(y)
            return T.CutCA(x, y, 0, p.degree(), ly.height(), p.height(), ly, p)
        c = self.small_formula()
        q = D.weaken(c, p)
        return T.CutCAD(c, x, x, q.degree(), 0, q.height(), lem.height(), q, lem)


def cut_corpus(seed: int, count: int, max_height: int = 10, degrees: tuple[int, ...] = (1, 2, 3)) -> list[ProofTree]:
    """Finite-height trees with degree in ``degrees`` and height at most max_height."""
    rng = random.Random(seed)
    out: list[ProofTree] = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > count * 400:
            raise RuntimeError("corpus generator is not producing enough trees")
        gen = TreeGen(rng, max_conn=rng.choice((1, 2)), allow_omega=rng.random() < 0.3)
        if rng.random() < 0.3:
            p = gen.falsum_cut(gen.grow(rng.randrange(0, 2)))
        else:
            p = gen.grow(rng.randrange(1, 6))
        h = O.ord_to_nat(p.height())
        if h is None or h > max_height or p.degree() not in degrees:
            continue
        if not tower_fits(h, p.degree()):
            continue
        out.append(p)
    return out


def tower_fits(h: int, degree: int, max_exponent: int = 1 << 17) -> bool:
    """Whether exp2 iterated ``degree`` times on h stays a machine-sized integer.

    Full elimination of a degree 3 proof of height 5 already needs 2^(2^32)
    as a coefficient, so corpora meant for cut_elim stay below that.
    """
    x = h
    for _ in range(degree - 1):
        x = 2**x
        if x > max_exponent:
            return False
    return True


def sound_corpus(seed: int, count: int, steps: int = 5) -> list[ProofTree]:
    """Arbitrary trees from the sound generator (any degree, any height)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        gen = TreeGen(rng, max_conn=rng.choice((0, 1, 2)), allow_cut=rng.random() < 0.7)
        out.append(gen.grow(rng.randrange(0, steps + 1)))
    return out


def leaf_positions(f: Formula, path: tuple = ()) -> list[tuple[tuple, Formula]]:
    """Disjunction leaves of f with their left/right paths."""
    if isinstance(f, Lor):
        return leaf_positions(f.left, path + (0,)) + leaf_positions(f.right, path + (1,))
    return [(path, f)]


def indicator_for(f: Formula, chosen: set[tuple]) -> "SubstIndicator":
    from .inversion import F0, F1, Pair

    def go(g: Formula, path: tuple):
        if isinstance(g, Lor):
            return Pair(go(g.left, path + (0,)), go(g.right, path + (1,)))
        return F1 if path in chosen else F0

    return go(f, ())


@dataclass(frozen=True)
class InversionCase:
    """A tree together with an inversion request against its endsequent."""

    tree: ProofTree
    kind: str  # dubneg, demorgan1, demorgan2 or omega
    target: Formula  # the flagged pattern: ~~E, ~(A | B) or forall n B
    indicator: "SubstIndicator"
    term: Term | None = None


def _introduce(gen: TreeGen, p: ProofTree, kind: str) -> ProofTree:
    rng = gen.rng
    if rng.random() < 0.3:
        # weakening-introduced pattern
        a = gen.small_formula()
        if kind == "dubneg":
            pat: Formula = Neg(Neg(a))
        elif kind == "omega":
            n = rng.randrange(3)
            pat = Univ(n, random_formula(rng, rng.randrange(gen.max_conn + 1), (n,)))
        else:
            pat = Neg(Lor(a, gen.small_formula()))
        return D.weaken(pat, p, right=rng.random() < 0.5)
    if kind == "dubneg":
        return gen.negation(p)
    if kind == "omega":
        return gen.omega(p)
    q = gen.demorgan(p)
    return q if q is not None else D.weaken(Neg(Lor(gen.small_formula(), gen.small_formula())), p)


def _matches(kind: str, f: Formula) -> bool:
    if kind == "dubneg":
        return isinstance(f, Neg) and isinstance(f.body, Neg)
    if kind == "omega":
        return isinstance(f, Univ)
    return isinstance(f, Neg) and isinstance(f.body, Lor)


def inversion_corpus(seed: int, count: int) -> list[InversionCase]:
    """Well-formed trees whose endsequents contain ~~, ~(|) or forall patterns."""
    rng = random.Random(seed)
    kinds = ("dubneg", "demorgan1", "demorgan2", "omega")
    out: list[InversionCase] = []
    while len(out) < count:
        kind = kinds[len(out) % len(kinds)]
        gen = TreeGen(rng, max_conn=rng.choice((1, 2)), allow_cut=rng.random() < 0.5)
        p = _introduce(gen, gen.grow(rng.randrange(0, 3)), kind)
        for _ in range(rng.randrange(0, 3)):
            nxt = rng.choice((gen.exchange, gen.contract, gen.weaken, gen.negation))(p)
            p = nxt if nxt is not None else p
        leaves = [(path, f) for path, f in leaf_positions(p.formula()) if _matches(kind, f)]
        if not leaves:
            continue
        _, target = rng.choice(leaves)
        chosen = {path for path, f in leaves if f == target and rng.random() < 0.8}
        if not chosen:
            chosen = {next(path for path, f in leaves if f == target)}
        term = random_term(rng, 2) if kind == "omega" else None
        out.append(InversionCase(p, kind, target, indicator_for(p.formula(), chosen), term))
    return out
