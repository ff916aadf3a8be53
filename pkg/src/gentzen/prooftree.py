"""Decorated proof trees for the infinitary calculus and their well-formedness check.

Every constructor stores the decorations (degree, height) it claims for its
premises.  ``ptree_formula``, ``ptree_deg`` and ``ptree_ord`` read the
conclusion off the stored data in constant time; ``well_formed`` recomputes
and compares.

Premise order conventions (conclusion <- premise):

* ``ExchangeAB(a, b)``          b|a           <- a|b
* ``ExchangeCAB(c, a, b)``      (c|b)|a       <- (c|a)|b
* ``ExchangeABD(a, b, d)``      (b|a)|d       <- (a|b)|d
* ``ExchangeCABD(c, a, b, d)``  ((c|b)|a)|d   <- ((c|a)|b)|d
* ``ContractionA(a)``           a             <- a|a
* ``ContractionAD(a, d)``       a|d           <- (a|a)|d
* ``WeakeningAD(side, weak)``   weak|side     <- side
* ``NegationA(a)`` / ``NegationAD(a, d)``      ~~a (|d)  <- a (|d)
* ``QuantificationA/AD(a, [d,] n, t)``         ~(forall n a) (|d) <- ~a[n:=t] (|d)
* ``DemorganAB/ABD(a, b, [d])``  ~(a|b) (|d)  <- ~a (|d) and ~b (|d)
* ``WRuleA/AD(a, [d,] n)``       (forall n a) (|d) <- a[n:=t] (|d) for all closed t
* ``CutCA(c, a)``: c <- c|a, ~a;  ``CutAD(a, d)``: d <- a, ~a|d;
  ``CutCAD(c, a, d)``: c|d <- c|a, ~a|d
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Sequence

from . import language as L
from . import ordinal as O
from .language import Formula, Lor, Neg, Term, Univ
from .ordinal import Ordinal
from .serial import sexp_tag, subst_meta


class PreconditionError(ValueError):
    """A builder or transformation was called outside its domain."""


class ProofTree:
    __slots__ = ()

    def formula(self) -> Formula:
        raise NotImplementedError

    def degree(self) -> int:
        raise NotImplementedError

    def height(self) -> Ordinal:
        raise NotImplementedError

    def premises(self) -> list[tuple["ProofTree", int, Ordinal, Formula]]:
        """(subtree, stored degree, stored height, required endsequent) per finite premise."""
        return []

    def params(self) -> list[Formula]:
        """Formula parameters that must be closed."""
        return []

    @property
    def rule(self) -> str:
        return getattr(type(self), "TAG", type(self).__name__)


# ------------------------------------------------------------ premise families

class Family:
    """A total deterministic map from closed terms to proof trees."""

    __slots__ = ()

    def __call__(self, t: Term) -> ProofTree:
        raise NotImplementedError


FAMILY_FUNCS: dict[str, Callable[..., Any]] = {}


def register_family(name: str) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    def deco(fn: Callable[..., Any]) -> Callable[..., Any]:
        FAMILY_FUNCS[name] = fn
        return fn

    return deco


def _check_closed_term(t: Term) -> None:
    if not L.closed_term(t):
        raise ValueError(f"premise families take closed terms, got {L.show_term(t)}")


@dataclass(frozen=True)
class Template(Family):
    """Premise ``body`` with metavariable ``meta`` replaced by the argument."""

    meta: str
    body: Any
    _cache: dict = field(default_factory=dict, compare=False, repr=False, init=False, hash=False)

    def __call__(self, t: Term) -> Any:
        _check_closed_term(t)
        hit = self._cache.get(t)
        if hit is None:
            hit = self._cache[t] = subst_meta(self.body, self.meta, t)
        return hit


@dataclass(frozen=True)
class Call(Family):
    """Premise computed by a registered builder: ``FAMILY_FUNCS[name](t, *args)``."""

    name: str
    args: tuple
    _cache: dict = field(default_factory=dict, compare=False, repr=False, init=False, hash=False)

    def __call__(self, t: Term) -> Any:
        _check_closed_term(t)
        hit = self._cache.get(t)
        if hit is None:
            fn = FAMILY_FUNCS.get(self.name)
            if fn is None:
                from .serial import _ensure_loaded

                _ensure_loaded()
                fn = FAMILY_FUNCS.get(self.name)
            if fn is None:
                raise KeyError(f"no premise builder named {self.name!r}")
            hit = self._cache[t] = fn(t, *self.args)
        return hit


class FnFamily(Family):
    """Wraps an arbitrary python callable; usable in memory, not serialisable."""

    def __init__(self, fn: Callable[[Term], ProofTree]):
        self.fn = fn
        self._cache: dict = {}

    def __call__(self, t: Term) -> ProofTree:
        _check_closed_term(t)
        if t not in self._cache:
            self._cache[t] = self.fn(t)
        return self._cache[t]


# ------------------------------------------------------------------ constructors

def _tall(h: Ordinal) -> Ordinal:
    return O.succ(h)


@sexp_tag("deg_up")
@dataclass(frozen=True)
class DegUp(ProofTree):
    deg: int
    sub: ProofTree

    def formula(self) -> Formula:
        return self.sub.formula()

    def degree(self) -> int:
        return self.deg

    def height(self) -> Ordinal:
        return self.sub.height()


@sexp_tag("ord_up")
@dataclass(frozen=True)
class OrdUp(ProofTree):
    ord: Ordinal
    sub: ProofTree

    def formula(self) -> Formula:
        return self.sub.formula()

    def degree(self) -> int:
        return self.sub.degree()

    def height(self) -> Ordinal:
        return self.ord


@sexp_tag("node")
@dataclass(frozen=True)
class Node(ProofTree):
    a: Formula

    def formula(self) -> Formula:
        return self.a

    def degree(self) -> int:
        return 0

    def height(self) -> Ordinal:
        return O.ZERO

    def params(self) -> list[Formula]:
        return [self.a]


class _Unary(ProofTree):
    """Single-premise rules storing (deg, height, sub) as their last fields."""

    __slots__ = ()
    deg: int
    ord: Ordinal
    sub: ProofTree
    SHORT = True

    def degree(self) -> int:
        return self.deg

    def height(self) -> Ordinal:
        return self.ord if self.SHORT else O.succ(self.ord)

    def premise_formula(self) -> Formula:
        raise NotImplementedError

    def premises(self) -> list[tuple[ProofTree, int, Ordinal, Formula]]:
        return [(self.sub, self.deg, self.ord, self.premise_formula())]


@sexp_tag("exchange_ab")
@dataclass(frozen=True)
class ExchangeAB(_Unary):
    a: Formula
    b: Formula
    deg: int
    ord: Ordinal
    sub: ProofTree

    def formula(self) -> Formula:
        return Lor(self.b, self.a)

    def premise_formula(self) -> Formula:
        return Lor(self.a, self.b)

    def params(self) -> list[Formula]:
        return [self.a, self.b]


@sexp_tag("exchange_cab")
@dataclass(frozen=True)
class ExchangeCAB(_Unary):
    c: Formula
    a: Formula
    b: Formula
    deg: int
    ord: Ordinal
    sub: ProofTree

    def formula(self) -> Formula:
        return Lor(Lor(self.c, self.b), self.a)

    def premise_formula(self) -> Formula:
        return Lor(Lor(self.c, self.a), self.b)

    def params(self) -> list[Formula]:
        return [self.c, self.a, self.b]


@sexp_tag("exchange_abd")
@dataclass(frozen=True)
class ExchangeABD(_Unary):
    a: Formula
    b: Formula
    d: Formula
    deg: int
    ord: Ordinal
    sub: ProofTree

    def formula(self) -> Formula:
        return Lor(Lor(self.b, self.a), self.d)

    def premise_formula(self) -> Formula:
        return Lor(Lor(self.a, self.b), self.d)

    def params(self) -> list[Formula]:
        return [self.a, self.b, self.d]


@sexp_tag("exchange_cabd")
@dataclass(frozen=True)
class ExchangeCABD(_Unary):
    c: Formula
    a: Formula
    b: Formula
    d: Formula
    deg: int
    ord: Ordinal
    sub: ProofTree

    def formula(self) -> Formula:
        return Lor(Lor(Lor(self.c, self.b), self.a), self.d)

    def premise_formula(self) -> Formula:
        return Lor(Lor(Lor(self.c, self.a), self.b), self.d)

    def params(self) -> list[Formula]:
        return [self.c, self.a, self.b, self.d]


@sexp_tag("contraction_a")
@dataclass(frozen=True)
class ContractionA(_Unary):
    a: Formula
    deg: int
    ord: Ordinal
    sub: ProofTree

    def formula(self) -> Formula:
        return self.a

    def premise_formula(self) -> Formula:
        return Lor(self.a, self.a)

    def params(self) -> list[Formula]:
        return [self.a]


@sexp_tag("contraction_ad")
@dataclass(frozen=True)
class ContractionAD(_Unary):
    a: Formula
    d: Formula
    deg: int
    ord: Ordinal
    sub: ProofTree

    def formula(self) -> Formula:
        return Lor(self.a, self.d)

    def premise_formula(self) -> Formula:
        return Lor(Lor(self.a, self.a), self.d)

    def params(self) -> list[Formula]:
        return [self.a, self.d]


@sexp_tag("weakening_ad")
@dataclass(frozen=True)
class WeakeningAD(_Unary):
    side: Formula
    weak: Formula
    deg: int
    ord: Ordinal
    sub: ProofTree
    SHORT = False

    def formula(self) -> Formula:
        return Lor(self.weak, self.side)

    def premise_formula(self) -> Formula:
        return self.side

    def params(self) -> list[Formula]:
        return [self.side, self.weak]


@sexp_tag("negation_a")
@dataclass(frozen=True)
class NegationA(_Unary):
    a: Formula
    deg: int
    ord: Ordinal
    sub: ProofTree
    SHORT = False

    def formula(self) -> Formula:
        return Neg(Neg(self.a))

    def premise_formula(self) -> Formula:
        return self.a

    def params(self) -> list[Formula]:
        return [self.a]


@sexp_tag("negation_ad")
@dataclass(frozen=True)
class NegationAD(_Unary):
    a: Formula
    d: Formula
    deg: int
    ord: Ordinal
    sub: ProofTree
    SHORT = False

    def formula(self) -> Formula:
        return Lor(Neg(Neg(self.a)), self.d)

    def premise_formula(self) -> Formula:
        return Lor(self.a, self.d)

    def params(self) -> list[Formula]:
        return [self.a, self.d]


@sexp_tag("quantification_a")
@dataclass(frozen=True)
class QuantificationA(_Unary):
    a: Formula
    n: int
    t: Term
    deg: int
    ord: Ordinal
    sub: ProofTree
    SHORT = False

    def formula(self) -> Formula:
        return Neg(Univ(self.n, self.a))

    def premise_formula(self) -> Formula:
        return Neg(L.substitute(self.a, self.n, self.t))

    def params(self) -> list[Formula]:
        return [Univ(self.n, self.a)]


@sexp_tag("quantification_ad")
@dataclass(frozen=True)
class QuantificationAD(_Unary):
    a: Formula
    d: Formula
    n: int
    t: Term
    deg: int
    ord: Ordinal
    sub: ProofTree
    SHORT = False

    def formula(self) -> Formula:
        return Lor(Neg(Univ(self.n, self.a)), self.d)

    def premise_formula(self) -> Formula:
        return Lor(Neg(L.substitute(self.a, self.n, self.t)), self.d)

    def params(self) -> list[Formula]:
        return [Univ(self.n, self.a), self.d]


class _Binary(ProofTree):
    __slots__ = ()
    deg1: int
    deg2: int
    ord1: Ordinal
    ord2: Ordinal
    sub1: ProofTree
    sub2: ProofTree

    def degree(self) -> int:
        return max(self.deg1, self.deg2)

    def height(self) -> Ordinal:
        return O.succ(O.ord_max(self.ord1, self.ord2))

    def premise_formulas(self) -> tuple[Formula, Formula]:
        raise NotImplementedError

    def premises(self) -> list[tuple[ProofTree, int, Ordinal, Formula]]:
        f1, f2 = self.premise_formulas()
        return [(self.sub1, self.deg1, self.ord1, f1), (self.sub2, self.deg2, self.ord2, f2)]


@sexp_tag("demorgan_ab")
@dataclass(frozen=True)
class DemorganAB(_Binary):
    a: Formula
    b: Formula
    deg1: int
    deg2: int
    ord1: Ordinal
    ord2: Ordinal
    sub1: ProofTree
    sub2: ProofTree

    def formula(self) -> Formula:
        return Neg(Lor(self.a, self.b))

    def premise_formulas(self) -> tuple[Formula, Formula]:
        return Neg(self.a), Neg(self.b)

    def params(self) -> list[Formula]:
        return [self.a, self.b]


@sexp_tag("demorgan_abd")
@dataclass(frozen=True)
class DemorganABD(_Binary):
    a: Formula
    b: Formula
    d: Formula
    deg1: int
    deg2: int
    ord1: Ordinal
    ord2: Ordinal
    sub1: ProofTree
    sub2: ProofTree

    def formula(self) -> Formula:
        return Lor(Neg(Lor(self.a, self.b)), self.d)

    def premise_formulas(self) -> tuple[Formula, Formula]:
        return Lor(Neg(self.a), self.d), Lor(Neg(self.b), self.d)

    def params(self) -> list[Formula]:
        return [self.a, self.b, self.d]


class _Cut(_Binary):
    __slots__ = ()
    a: Formula

    def degree(self) -> int:
        return max(self.deg1, self.deg2, L.num_conn(self.a) + 1)


@sexp_tag("cut_ca")
@dataclass(frozen=True)
class CutCA(_Cut):
    c: Formula
    a: Formula
    deg1: int
    deg2: int
    ord1: Ordinal
    ord2: Ordinal
    sub1: ProofTree
    sub2: ProofTree

    def formula(self) -> Formula:
        return self.c

    def premise_formulas(self) -> tuple[Formula, Formula]:
        return Lor(self.c, self.a), Neg(self.a)

    def params(self) -> list[Formula]:
        return [self.c, self.a]


@sexp_tag("cut_ad")
@dataclass(frozen=True)
class CutAD(_Cut):
    a: Formula
    d: Formula
    deg1: int
    deg2: int
    ord1: Ordinal
    ord2: Ordinal
    sub1: ProofTree
    sub2: ProofTree

    def formula(self) -> Formula:
        return self.d

    def height(self) -> Ordinal:
        return O.succ(O.succ(O.ord_max(self.ord1, self.ord2)))

    def premise_formulas(self) -> tuple[Formula, Formula]:
        return self.a, Lor(Neg(self.a), self.d)

    def params(self) -> list[Formula]:
        return [self.a, self.d]


@sexp_tag("cut_cad")
@dataclass(frozen=True)
class CutCAD(_Cut):
    c: Formula
    a: Formula
    d: Formula
    deg1: int
    deg2: int
    ord1: Ordinal
    ord2: Ordinal
    sub1: ProofTree
    sub2: ProofTree

    def formula(self) -> Formula:
        return Lor(self.c, self.d)

    def premise_formulas(self) -> tuple[Formula, Formula]:
        return Lor(self.c, self.a), Lor(Neg(self.a), self.d)

    def params(self) -> list[Formula]:
        return [self.c, self.a, self.d]


class _Omega(ProofTree):
    __slots__ = ()
    a: Formula
    n: int
    deg: int
    ord: Ordinal
    fam: Family

    def degree(self) -> int:
        return self.deg

    def height(self) -> Ordinal:
        return O.succ(self.ord)

    def instance(self, t: Term) -> Formula:
        raise NotImplementedError


@sexp_tag("w_rule_a")
@dataclass(frozen=True)
class WRuleA(_Omega):
    a: Formula
    n: int
    deg: int
    ord: Ordinal
    fam: Family

    def formula(self) -> Formula:
        return Univ(self.n, self.a)

    def instance(self, t: Term) -> Formula:
        return L.substitute(self.a, self.n, t)

    def params(self) -> list[Formula]:
        return [Univ(self.n, self.a)]


@sexp_tag("w_rule_ad")
@dataclass(frozen=True)
class WRuleAD(_Omega):
    a: Formula
    d: Formula
    n: int
    deg: int
    ord: Ordinal
    fam: Family

    def formula(self) -> Formula:
        return Lor(Univ(self.n, self.a), self.d)

    def instance(self, t: Term) -> Formula:
        return Lor(L.substitute(self.a, self.n, t), self.d)

    def params(self) -> list[Formula]:
        return [Univ(self.n, self.a), self.d]


SHORT_RULES = (ExchangeAB, ExchangeCAB, ExchangeABD, ExchangeCABD, ContractionA, ContractionAD)
TALL_UNARY = (WeakeningAD, NegationA, NegationAD, QuantificationA, QuantificationAD)
CUTS = (CutCA, CutAD, CutCAD)
OMEGA_RULES = (WRuleA, WRuleAD)


# ---------------------------------------------------------------- extractors

def ptree_formula(p: ProofTree) -> Formula:
    return p.formula()


def ptree_deg(p: ProofTree) -> int:
    return p.degree()


def ptree_ord(p: ProofTree) -> Ordinal:
    return p.height()


# ---------------------------------------------------------------- checking

def default_samples(n: int = 5) -> list[Term]:
    """Numerals 0..n-1 plus the compound closed term 0 + S(0)."""
    return [L.numeral(i) for i in range(n)] + [L.Plus(L.ZERO_T, L.Succ(L.ZERO_T))]


@dataclass(frozen=True)
class WFResult:
    ok: bool
    path: tuple = ()
    rule: str = ""
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def describe(self) -> str:
        if self.ok:
            return "well-formed"
        where = "/".join(str(p) for p in self.path) or "root"
        return f"at {where}: {self.rule}: {self.message}"


_OK = WFResult(True)


def _fail(rule: str, message: str) -> WFResult:
    return WFResult(False, (), rule, message)


def _under(step: Any, res: WFResult) -> WFResult:
    return res if res.ok else WFResult(False, (step,) + res.path, res.rule, res.message)


class _Checker:
    def __init__(self, samples: Sequence[Term]):
        self.samples = list(samples)
        self.memo: dict[int, tuple[ProofTree, WFResult]] = {}

    def check(self, p: ProofTree) -> WFResult:
        hit = self.memo.get(id(p))
        if hit is not None and hit[0] is p:
            return hit[1]
        res = self._check(p)
        self.memo[id(p)] = (p, res)
        return res

    def _check(self, p: ProofTree) -> WFResult:
        rule = p.rule
        if isinstance(p, Node):
            if not L.is_axiom(p.a):
                return _fail(rule, f"{L.show_formula(p.a)} is not an axiom")
            return _OK
        if isinstance(p, DegUp):
            res = _under(0, self.check(p.sub))
            if not res:
                return res
            if not p.deg > p.sub.degree():
                return _fail(rule, f"degree {p.deg} does not raise {p.sub.degree()}")
            return _OK
        if isinstance(p, OrdUp):
            res = _under(0, self.check(p.sub))
            if not res:
                return res
            if not O.is_nf(p.ord):
                return _fail(rule, f"height {O.show_ord(p.ord)} is not in normal form")
            if not O.lt(p.sub.height(), p.ord):
                return _fail(
                    rule,
                    f"height {O.show_ord(p.ord)} does not raise {O.show_ord(p.sub.height())}",
                )
            return _OK
        for i, (sub, d, h, want) in enumerate(p.premises()):
            res = _under(i, self.check(sub))
            if not res:
                return res
            bad = _premise_mismatch(sub, d, h, want)
            if bad:
                return _fail(rule, f"premise {i}: {bad}")
        if isinstance(p, _Omega):
            res = check_omega_node(p, self.samples, self)
            if not res:
                return res
        return _closed_params(p)


def _premise_mismatch(sub: ProofTree, d: int, h: Ordinal, want: Formula) -> str:
    got = sub.formula()
    if got != want:
        return f"endsequent {L.show_formula(got)} should be {L.show_formula(want)}"
    if sub.degree() != d:
        return f"stored degree {d} but premise has degree {sub.degree()}"
    if sub.height() != h:
        return f"stored height {O.show_ord(h)} but premise has height {O.show_ord(sub.height())}"
    return ""


def _closed_params(p: ProofTree) -> WFResult:
    if isinstance(p, WeakeningAD):
        if not L.closed(p.weak):
            return _fail(p.rule, f"weakened formula ({L.show_formula(p.weak)}) not closed")
    if isinstance(p, (QuantificationA, QuantificationAD)) and not L.closed_term(p.t):
        return _fail(p.rule, f"term {L.show_term(p.t)} not closed")
    for f in p.params():
        if not L.closed(f):
            return _fail(p.rule, f"formula parameter {L.show_formula(f)} not closed")
    return _OK


def check_omega_node(p: ProofTree, samples: Iterable[Term], checker: _Checker | None = None) -> WFResult:
    """Check sampled premises of an omega node against the stored schema."""
    if not isinstance(p, _Omega):
        raise TypeError("check_omega_node needs a w_rule node")
    samples = list(samples)
    checker = checker or _Checker(samples)
    for t in samples:
        step = f"t={L.show_term(t)}"
        try:
            sub = p.fam(t)
        except Exception as e:  # a family that cannot produce a premise is malformed
            return WFResult(False, (step,), p.rule, f"premise family failed: {e}")
        res = _under(step, checker.check(sub))
        if not res:
            return res
        bad = _premise_mismatch(sub, p.deg, p.ord, p.instance(t))
        if bad:
            return WFResult(False, (step,), p.rule, bad)
    return _OK


def well_formed(p: ProofTree, samples: Iterable[Term] | None = None) -> WFResult:
    samples = default_samples() if samples is None else list(samples)
    return _Checker(samples).check(p)


# ------------------------------------------------------------ helpers

def deg_pad(p: ProofTree, d: int) -> ProofTree:
    """Raise the degree to exactly d (no-op when already d)."""
    cur = p.degree()
    if cur == d:
        return p
    if cur > d:
        raise ValueError(f"cannot lower degree {cur} to {d}")
    if isinstance(p, DegUp):
        return DegUp(d, p.sub)
    return DegUp(d, p)


def ord_pad(p: ProofTree, h: Ordinal) -> ProofTree:
    """Raise the height to exactly h (no-op when already h)."""
    cur = p.height()
    if cur == h:
        return p
    if not O.lt(cur, h):
        raise ValueError(f"cannot lower height {O.show_ord(cur)} to {O.show_ord(h)}")
    if isinstance(p, OrdUp):
        return OrdUp(h, p.sub)
    return OrdUp(h, p)


def rule_histogram(p: ProofTree) -> dict[str, int]:
    """Constructor counts over the finite part of the tree (omega premises not expanded)."""
    counts: dict[str, int] = {}
    stack = [p]
    seen: set[int] = set()
    while stack:
        q = stack.pop()
        counts[q.rule] = counts.get(q.rule, 0) + 1
        if isinstance(q, (DegUp, OrdUp)):
            stack.append(q.sub)
        else:
            stack.extend(s for s, *_ in q.premises())
    return dict(sorted(counts.items()))


def contains_cut(p: ProofTree, samples: Iterable[Term] | None = None) -> bool:
    samples = default_samples() if samples is None else list(samples)
    if isinstance(p, CUTS):
        return True
    if isinstance(p, (DegUp, OrdUp)):
        return contains_cut(p.sub, samples)
    if isinstance(p, _Omega):
        return any(contains_cut(p.fam(t), samples) for t in samples)
    return any(contains_cut(s, samples) for s, *_ in p.premises())


# ------------------------------------------------------------ provability

BUILDERS: list[Callable[[Formula], ProofTree | None]] = []


def register_builder(fn: Callable[[Formula], ProofTree | None]) -> Callable[[Formula], ProofTree | None]:
    BUILDERS.append(fn)
    return fn


def provable(a: Formula, d: int, alpha: Ordinal, samples: Iterable[Term] | None = None) -> ProofTree | None:
    """Search the registered builders for a proof of a at degree <= d and height alpha.

    None means no builder applies; it says nothing about underivability.
    """
    from .serial import _ensure_loaded

    _ensure_loaded()
    samples = default_samples() if samples is None else list(samples)
    for build in BUILDERS:
        try:
            p = build(a)
        except ValueError:
            continue
        if p is None or p.formula() != a or p.degree() > d:
            continue
        if p.height() != alpha:
            if not (O.is_nf(alpha) and O.lt(p.height(), alpha)):
                continue
            p = ord_pad(p, alpha)
        if well_formed(p, samples):
            return p
    return None


@register_builder
def _node_builder(a: Formula) -> ProofTree | None:
    return Node(a) if L.is_axiom(a) else None


def with_premises(p: ProofTree, subs: Sequence[ProofTree], **fields: Any) -> ProofTree:
    """Rebuild p over new finite premises, restamping the stored decorations."""
    changes = dict(fields)
    if isinstance(p, _Binary):
        s1, s2 = subs
        changes.update(deg1=s1.degree(), deg2=s2.degree(), ord1=s1.height(), ord2=s2.height(), sub1=s1, sub2=s2)
    elif isinstance(p, _Unary):
        (s,) = subs
        changes.update(deg=s.degree(), ord=s.height(), sub=s)
    elif subs:
        raise TypeError(f"{p.rule} has no finite premises to replace")
    return dataclasses.replace(p, **changes) if changes else p
