"""Substitution indicators and the inversion rewrites.

An indicator is a boolean tree shadowing the disjunction structure of an
endsequent.  Flagged positions are where a pattern may be rewritten; the
rewrite walks up the proof, permuting or duplicating the indicator through
short rules and masking principal positions of tall rules and cuts.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from typing import Callable

from . import language as L
from . import ordinal as O
from . import prooftree as T
from .language import Formula, Lor, Neg, Term, Univ


class SubstIndicator:
    __slots__ = ()


@dataclass(frozen=True)
class Flag(SubstIndicator):
    on: bool


@dataclass(frozen=True)
class Pair(SubstIndicator):
    left: SubstIndicator
    right: SubstIndicator


F0 = Flag(False)
F1 = Flag(True)


def show_indicator(s: SubstIndicator) -> str:
    if isinstance(s, Flag):
        return "1" if s.on else "0"
    assert isinstance(s, Pair)
    return f"({show_indicator(s.left)} {show_indicator(s.right)})"


def parse_indicator(text: str) -> SubstIndicator:
    toks = text.replace("(", " ( ").replace(")", " ) ").split()
    pos = 0

    def one() -> SubstIndicator:
        nonlocal pos
        if pos >= len(toks):
            raise ValueError(f"incomplete indicator {text!r}")
        tok = toks[pos]
        pos += 1
        if tok in ("0", "1"):
            return Flag(tok == "1")
        if tok != "(":
            raise ValueError(f"unexpected {tok!r} in indicator {text!r}")
        left, right = one(), one()
        if pos >= len(toks) or toks[pos] != ")":
            raise ValueError(f"expected ')' in indicator {text!r}")
        pos += 1
        return Pair(left, right)

    out = one()
    if pos != len(toks):
        raise ValueError(f"trailing input in indicator {text!r}")
    return out


def fits(a: Formula, s: SubstIndicator) -> bool:
    if isinstance(a, Lor):
        return isinstance(s, Pair) and fits(a.left, s.left) and fits(a.right, s.right)
    return isinstance(s, Flag)


def non_target(a: Formula) -> SubstIndicator:
    """The all-zero indicator fitting a."""
    if isinstance(a, Lor):
        return Pair(non_target(a.left), non_target(a.right))
    return F0


def all_target(a: Formula) -> SubstIndicator:
    if isinstance(a, Lor):
        return Pair(all_target(a.left), all_target(a.right))
    return F1


def has_target(s: SubstIndicator) -> bool:
    if isinstance(s, Flag):
        return s.on
    assert isinstance(s, Pair)
    return has_target(s.left) or has_target(s.right)


def formula_sub(a: Formula, old: Formula, new: Formula, s: SubstIndicator) -> Formula:
    if isinstance(s, Pair):
        if not isinstance(a, Lor):
            raise ValueError(f"indicator {show_indicator(s)} does not fit {L.show_formula(a)}")
        return Lor(formula_sub(a.left, old, new, s.left), formula_sub(a.right, old, new, s.right))
    if isinstance(a, Lor):
        raise ValueError(f"indicator {show_indicator(s)} does not fit {L.show_formula(a)}")
    return new if s.on and a == old else a


# ------------------------------------------------------- indicator propagation

def _pair(s: SubstIndicator) -> tuple[SubstIndicator, SubstIndicator]:
    if not isinstance(s, Pair):
        raise ValueError("indicator does not fit the endsequent")
    return s.left, s.right


def layout(p: T.ProofTree, s: SubstIndicator) -> tuple[dict[str, SubstIndicator], list[SubstIndicator], SubstIndicator | None]:
    """Split s over p's rule.

    Returns (indicator per side-formula field, indicator per finite premise,
    principal flag or None).  For omega nodes the premise list holds the one
    indicator shared by every generated premise.
    """
    if isinstance(p, (T.DegUp, T.OrdUp)):
        return {}, [s], None
    if isinstance(p, T.Node):
        return {}, [], None
    if isinstance(p, T.ExchangeAB):
        sb, sa = _pair(s)
        return {"a": sa, "b": sb}, [Pair(sa, sb)], None
    if isinstance(p, T.ExchangeCAB):
        cb, sa = _pair(s)
        sc, sb = _pair(cb)
        return {"c": sc, "a": sa, "b": sb}, [Pair(Pair(sc, sa), sb)], None
    if isinstance(p, T.ExchangeABD):
        ba, sd = _pair(s)
        sb, sa = _pair(ba)
        return {"a": sa, "b": sb, "d": sd}, [Pair(Pair(sa, sb), sd)], None
    if isinstance(p, T.ExchangeCABD):
        cba, sd = _pair(s)
        cb, sa = _pair(cba)
        sc, sb = _pair(cb)
        return {"c": sc, "a": sa, "b": sb, "d": sd}, [Pair(Pair(Pair(sc, sa), sb), sd)], None
    if isinstance(p, T.ContractionA):
        return {"a": s}, [Pair(s, s)], None
    if isinstance(p, T.ContractionAD):
        sa, sd = _pair(s)
        return {"a": sa, "d": sd}, [Pair(Pair(sa, sa), sd)], None
    if isinstance(p, T.WeakeningAD):
        sw, ss = _pair(s)
        return {"side": ss, "weak": sw}, [ss], None
    if isinstance(p, (T.NegationA, T.QuantificationA, T.DemorganAB, T.WRuleA)):
        prem = [non_target(p.premise_formula())] if isinstance(p, T.NegationA) else []
        if isinstance(p, T.QuantificationA):
            prem = [F0]
        elif isinstance(p, T.DemorganAB):
            prem = [F0, F0]
        elif isinstance(p, T.WRuleA):
            prem = [non_target(p.a)]
        return {}, prem, s
    if isinstance(p, (T.NegationAD, T.QuantificationAD, T.DemorganABD, T.WRuleAD)):
        sp, sd = _pair(s)
        if isinstance(p, T.NegationAD):
            prem = [Pair(non_target(p.a), sd)]
        elif isinstance(p, T.QuantificationAD):
            prem = [Pair(F0, sd)]
        elif isinstance(p, T.DemorganABD):
            prem = [Pair(F0, sd), Pair(F0, sd)]
        else:
            prem = [Pair(non_target(p.a), sd)]
        return {"d": sd}, prem, sp
    if isinstance(p, T.CutCA):
        return {"c": s}, [Pair(s, non_target(p.a)), F0], None
    if isinstance(p, T.CutAD):
        return {"d": s}, [non_target(p.a), Pair(F0, s)], None
    if isinstance(p, T.CutCAD):
        sc, sd = _pair(s)
        return {"c": sc, "d": sd}, [Pair(sc, non_target(p.a)), Pair(F0, sd)], None
    raise TypeError(f"unknown proof constructor {type(p).__name__}")


def principal_formula(p: T.ProofTree) -> Formula | None:
    """The formula a tall rule introduces (without its side formula)."""
    if isinstance(p, (T.NegationA, T.NegationAD)):
        return Neg(Neg(p.a))
    if isinstance(p, (T.QuantificationA, T.QuantificationAD)):
        return Neg(Univ(p.n, p.a))
    if isinstance(p, (T.DemorganAB, T.DemorganABD)):
        return Neg(Lor(p.a, p.b))
    if isinstance(p, (T.WRuleA, T.WRuleAD)):
        return Univ(p.n, p.a)
    return None


def _subs_fields(p: T.ProofTree) -> list[str]:
    if isinstance(p, T._Binary):
        return ["sub1", "sub2"]
    if isinstance(p, T._Omega):
        return ["fam"]
    if isinstance(p, T.Node):
        return []
    return ["sub"]


def _premise_trees(p: T.ProofTree) -> list[T.ProofTree]:
    if isinstance(p, (T.DegUp, T.OrdUp)):
        return [p.sub]
    return [sub for sub, *_ in p.premises()]


# ----------------------------------------------------------- generic rewrite

def pad(q: T.ProofTree, deg: int, height: O.Ordinal) -> T.ProofTree:
    return T.ord_pad(T.deg_pad(q, deg), height)


class _Rewrite:
    """Decoration-preserving rewrite of ``old`` into ``new`` at flagged positions."""

    def __init__(self, kind: str, old: Formula, new: Formula, t: Term | None = None):
        self.kind, self.old, self.new, self.t = kind, old, new, t
        self.memo: dict[tuple[int, SubstIndicator], tuple[T.ProofTree, T.ProofTree]] = {}

    def run(self, p: T.ProofTree, s: SubstIndicator) -> T.ProofTree:
        if not has_target(s):
            return p
        key = (id(p), s)
        hit = self.memo.get(key)
        if hit is not None and hit[0] is p:
            return hit[1]
        out = self._run(p, s)
        self.memo[key] = (p, out)
        return out

    def _run(self, p: T.ProofTree, s: SubstIndicator) -> T.ProofTree:
        params, prem, principal = layout(p, s)
        if principal is not None and isinstance(principal, Flag) and principal.on and principal_formula(p) == self.old:
            return self.principal(p, prem)
        changes: dict = {}
        for name, ind in params.items():
            f = getattr(p, name)
            g = formula_sub(f, self.old, self.new, ind)
            if g != f:
                changes[name] = g
        if isinstance(p, T._Omega):
            if has_target(prem[0]):
                changes["fam"] = T.Call("invert", (self.kind, self.old, self.new, self.t, prem[0], p.fam))
        else:
            for name, sub, ind in zip(_subs_fields(p), _premise_trees(p), prem):
                q = self.run(sub, ind)
                if q is not sub:
                    changes[name] = q
        if not changes:
            return p
        return dataclasses.replace(p, **changes)

    def principal(self, p: T.ProofTree, prem: list[SubstIndicator]) -> T.ProofTree:
        deg, height = p.degree(), p.height()
        if self.kind == "dubneg" and isinstance(p, (T.NegationA, T.NegationAD)):
            return pad(self.run(p.sub, prem[0]), deg, height)
        if self.kind in ("demorgan1", "demorgan2") and isinstance(p, (T.DemorganAB, T.DemorganABD)):
            i = 0 if self.kind == "demorgan1" else 1
            chosen = (p.sub1, p.sub2)[i]
            return pad(self.run(chosen, prem[i]), deg, height)
        if self.kind == "omega" and isinstance(p, (T.WRuleA, T.WRuleAD)):
            assert self.t is not None
            return pad(self.run(p.fam(self.t), prem[0]), deg, height)
        raise AssertionError(f"{self.kind} rewrite has no principal case for {p.rule}")


@T.register_family("invert")
def _invert_family(t: Term, kind: str, old: Formula, new: Formula, at: Term | None, s: SubstIndicator, fam: T.Family) -> T.ProofTree:
    return _Rewrite(kind, old, new, at).run(fam(t), s)


def _start(p: T.ProofTree, s: SubstIndicator) -> None:
    if not fits(p.formula(), s):
        raise ValueError(f"indicator {show_indicator(s)} does not fit {L.show_formula(p.formula())}")


def invert_dubneg(p: T.ProofTree, e: Formula, s: SubstIndicator) -> T.ProofTree:
    """Turn flagged occurrences of ~~e into e."""
    _start(p, s)
    return _Rewrite("dubneg", Neg(Neg(e)), e).run(p, s)


def invert_demorgan_1(p: T.ProofTree, a: Formula, b: Formula, s: SubstIndicator) -> T.ProofTree:
    """Turn flagged occurrences of ~(a | b) into ~a."""
    _start(p, s)
    return _Rewrite("demorgan1", Neg(Lor(a, b)), Neg(a)).run(p, s)


def invert_demorgan_2(p: T.ProofTree, a: Formula, b: Formula, s: SubstIndicator) -> T.ProofTree:
    """Turn flagged occurrences of ~(a | b) into ~b."""
    _start(p, s)
    return _Rewrite("demorgan2", Neg(Lor(a, b)), Neg(b)).run(p, s)


def invert_omega(p: T.ProofTree, e: Formula, s: SubstIndicator, t: Term) -> T.ProofTree:
    """Turn flagged occurrences of e = forall n a into a[n := t]."""
    if not isinstance(e, Univ):
        raise ValueError(f"omega inversion needs a universal formula, got {L.show_formula(e)}")
    if not L.closed_term(t):
        raise ValueError(f"omega inversion needs a closed term, got {L.show_term(t)}")
    _start(p, s)
    return _Rewrite("omega", e, L.substitute(e.body, e.var, t), t).run(p, s)


def replace_weakened(p: T.ProofTree, old: Formula, new: Formula, s: SubstIndicator) -> T.ProofTree:
    """Replace a flagged formula that no rule can introduce except weakening.

    Used for false atoms and negated true atoms: such a formula is never an
    axiom nor the principal formula of a tall rule, so every flagged copy
    traces back to a weakening whose weakened formula can simply be swapped.
    ``new`` must be closed.
    """
    if not L.closed(new):
        raise ValueError(f"replacement {L.show_formula(new)} is not closed")
    _start(p, s)
    return _Rewrite("weakened", old, new).run(p, s)


INVERSIONS: dict[str, Callable[..., T.ProofTree]] = {
    "dubneg": invert_dubneg,
    "demorgan1": invert_demorgan_1,
    "demorgan2": invert_demorgan_2,
    "omega": invert_omega,
}
