"""Ordinal notations below epsilon-zero.

A notation is either ``ZERO`` or ``Cons(a, n, b)``, read as w^a * (n+1) + b.
All operations are pure and work on immutable values.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Any, Callable, Iterator


class ContractViolation(RuntimeError):
    """Raised when a recursion guard sees a measure that did not decrease."""


class Ordinal:
    __slots__ = ()

    def __str__(self) -> str:
        return show_ord(self)


@dataclass(frozen=True, repr=False)
class _Zero(Ordinal):
    def __repr__(self) -> str:
        return "Zero"


@dataclass(frozen=True, repr=False, eq=False)
class Cons(Ordinal):
    exp: Ordinal
    count: int
    rest: Ordinal

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError("coefficient index must be non-negative")

    # notations are compared constantly; hash once and compare without tuples
    def __eq__(self, other: object) -> bool:
        return type(other) is Cons and compare(self, other) == 0

    def __hash__(self) -> int:
        try:
            return self._hash  # type: ignore[has-type]
        except AttributeError:
            h = hash((self.exp, self.count, self.rest))
            object.__setattr__(self, "_hash", h)
            return h

    def __repr__(self) -> str:
        return f"Cons({self.exp!r},{self.count},{self.rest!r})"


ZERO: Ordinal = _Zero()
ONE: Ordinal = Cons(ZERO, 0, ZERO)
OMEGA: Ordinal = Cons(ONE, 0, ZERO)


def compare(a: Ordinal, b: Ordinal) -> int:
    """Three-way comparison (-1, 0, 1) by zero / head / coefficient / tail."""
    while True:
        if a is b:
            return 0
        za, zb = type(a) is _Zero, type(b) is _Zero
        if za or zb:
            return 0 if za and zb else (-1 if za else 1)
        c = compare(a.exp, b.exp)  # type: ignore[attr-defined]
        if c:
            return c
        if a.count != b.count:  # type: ignore[attr-defined]
            return -1 if a.count < b.count else 1  # type: ignore[attr-defined]
        a, b = a.rest, b.rest  # type: ignore[attr-defined]


def lt(a: Ordinal, b: Ordinal) -> bool:
    return compare(a, b) < 0


def le(a: Ordinal, b: Ordinal) -> bool:
    return compare(a, b) <= 0


def is_nf(a: Ordinal) -> bool:
    while type(a) is Cons:
        if not is_nf(a.exp):
            return False
        r = a.rest
        if type(r) is Cons and compare(r.exp, a.exp) >= 0:
            return False
        a = r
    return True


def nat_ord(n: int) -> Ordinal:
    if n < 0:
        raise ValueError("negative natural")
    return ZERO if n == 0 else Cons(ZERO, n - 1, ZERO)


def ord_to_nat(a: Ordinal) -> int | None:
    """The natural number denoted by a, or None for infinite notations."""
    if isinstance(a, _Zero):
        return 0
    assert isinstance(a, Cons)
    if a.exp == ZERO and a.rest == ZERO:
        return a.count + 1
    return None


def is_finite(a: Ordinal) -> bool:
    return ord_to_nat(a) is not None


def _terms(a: Ordinal) -> list[tuple[Ordinal, int]]:
    """Flatten to (exponent, multiplicity) pairs, multiplicity >= 1."""
    out = []
    while isinstance(a, Cons):
        out.append((a.exp, a.count + 1))
        a = a.rest
    return out


def _build(terms: list[tuple[Ordinal, int]]) -> Ordinal:
    acc = ZERO
    for e, c in reversed(terms):
        acc = Cons(e, c - 1, acc)
    return acc


def succ(a: Ordinal) -> Ordinal:
    if isinstance(a, _Zero):
        return ONE
    assert isinstance(a, Cons)
    if a.exp == ZERO:
        return Cons(ZERO, a.count + 1, ZERO)
    return Cons(a.exp, a.count, succ(a.rest))


def pred(a: Ordinal) -> Ordinal:
    """Predecessor of a successor notation; Zero maps to Zero."""
    if isinstance(a, _Zero):
        return ZERO
    terms = _terms(a)
    e, c = terms[-1]
    if e != ZERO:
        raise ValueError(f"pred of limit notation {show_ord(a)}")
    terms = terms[:-1] + ([(e, c - 1)] if c > 1 else [])
    return _build(terms)


def is_limit(a: Ordinal) -> bool:
    return isinstance(a, Cons) and _terms(a)[-1][0] != ZERO


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    if type(b) is _Zero:
        return a
    if type(a) is _Zero:
        return b
    assert isinstance(a, Cons) and isinstance(b, Cons)
    c = compare(a.exp, b.exp)
    if c < 0:
        return b
    if c == 0:
        return Cons(a.exp, a.count + b.count + 1, b.rest)
    return Cons(a.exp, a.count, add(a.rest, b))


def mult(a: Ordinal, b: Ordinal) -> Ordinal:
    if isinstance(a, _Zero) or isinstance(b, _Zero):
        return ZERO
    lead, c1 = _terms(a)[0]
    tail_a = a.rest  # type: ignore[attr-defined]
    out: list[tuple[Ordinal, int]] = []
    for e, d in _terms(b):
        if e == ZERO:
            # a * d = w^lead * (c1*d) + tail of a
            out.append((lead, c1 * d))
            out.extend(_terms(tail_a))
        else:
            out.append((add(lead, e), d))
    return _build(out)


def _minus_one(e: Ordinal) -> Ordinal:
    # -1 + e for e >= 1
    n = ord_to_nat(e)
    return nat_ord(n - 1) if n is not None else e


def exp2(a: Ordinal) -> Ordinal:
    """2^a in normal form, computed as w^g * 2^k for a = w*g + k."""
    k = 0
    gamma: list[tuple[Ordinal, int]] = []
    for e, c in _terms(a):
        if e == ZERO:
            k = c
        else:
            gamma.append((_minus_one(e), c))
    return Cons(_build(gamma), 2**k - 1, ZERO)


def ord_max(a: Ordinal, b: Ordinal) -> Ordinal:
    return b if lt(a, b) else a


def transfinite_recurse(measure: Ordinal, step: Callable[..., Any], *args: Any) -> Any:
    """Run ``step(measure, recurse, *args)``.

    ``recurse(m, *more)`` re-enters ``step`` at measure ``m`` and raises
    ContractViolation unless ``m`` is strictly below the current measure.
    Notation trees are finite and each accepted call strictly descends,
    so the chain of calls is finite.
    """

    def recurse(smaller: Ordinal, *more: Any) -> Any:
        if not lt(smaller, measure):
            raise ContractViolation(
                f"recursive measure {show_ord(smaller)} is not below {show_ord(measure)}"
            )
        return transfinite_recurse(smaller, step, *more)

    return step(measure, recurse, *args)


def enumerate_nf(depth: int, max_coeff: int) -> list[Ordinal]:
    """All nf notations of tree height <= depth whose coefficients n+1 are <= max_coeff.

    Height counts both the exponent and the tail as children, so depth 3
    with coefficients up to 2 yields 387 notations.
    """
    if depth <= 0:
        return [ZERO]
    prev = enumerate_nf(depth - 1, max_coeff)
    out = {ZERO}
    for a in prev:
        for b in prev:
            if isinstance(b, Cons) and not lt(b.exp, a):
                continue
            for n in range(max_coeff):
                out.add(Cons(a, n, b))
    return sorted(out, key=_sort_key)


def _sort_key(a: Ordinal) -> tuple:
    # lexicographic tuple that agrees with lt on nf values
    return tuple((_sort_key(e), c) for e, c in _terms(a))


# ---------------------------------------------------------------- text form

def show_ord(a: Ordinal) -> str:
    if isinstance(a, _Zero):
        return "0"
    return " + ".join(f"w^{_show_exp(e)}*{c}" for e, c in _terms(a))


def _show_exp(e: Ordinal) -> str:
    if isinstance(e, _Zero):
        return "0"
    assert isinstance(e, Cons)
    if e.count == 0 and e.rest == ZERO:
        return "w^" + _show_exp(e.exp)
    return "(" + show_ord(e) + ")"


_TOKEN = re.compile(r"\s*(w\^|\d+|[()*+])")


def _tokens(text: str) -> Iterator[tuple[str, int]]:
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad ordinal syntax at position {pos}: {text!r}")
        yield m.group(1), m.start(1)
        pos = m.end()


def parse_ord(text: str) -> Ordinal:
    toks = list(_tokens(text))
    i = 0

    def peek() -> str | None:
        return toks[i][0] if i < len(toks) else None

    def take(expected: str | None = None) -> str:
        nonlocal i
        if i >= len(toks):
            raise ValueError(f"unexpected end of ordinal {text!r}")
        tok, at = toks[i]
        if expected is not None and tok != expected:
            raise ValueError(f"expected {expected!r} at position {at} in {text!r}")
        i += 1
        return tok

    def ordinal() -> Ordinal:
        if peek() == "0":
            take()
            return ZERO
        terms = [term()]
        while peek() == "+":
            take()
            terms.append(term())
        return _build(terms)

    def term() -> tuple[Ordinal, int]:
        take("w^")
        e = atom()
        c = 1
        if peek() == "*":
            take()
            c = int(take())
            if c < 1:
                raise ValueError(f"coefficient must be positive in {text!r}")
        return e, c

    def atom() -> Ordinal:
        tok = peek()
        if tok == "0":
            take()
            return ZERO
        if tok == "(":
            take()
            inner = ordinal()
            take(")")
            return inner
        if tok == "w^":
            take()
            return Cons(atom(), 0, ZERO)
        raise ValueError(f"bad exponent in ordinal {text!r}")

    result = ordinal()
    if i != len(toks):
        raise ValueError(f"trailing input at position {toks[i][1]} in {text!r}")
    return result
