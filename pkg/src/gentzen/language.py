"""Terms and formulas of the infinitary arithmetic language.

Terms are built from 0, S, +, * and variables ``x<i>``.  A ``Meta`` term is
a placeholder used only inside premise templates; it is instantiated with a
closed term before any checking happens.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable


class Term:
    __slots__ = ()

    def __str__(self) -> str:
        return show_term(self)


@dataclass(frozen=True)
class ZeroT(Term):
    pass


@dataclass(frozen=True)
class Succ(Term):
    arg: Term


@dataclass(frozen=True)
class Plus(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Times(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Var(Term):
    index: int


@dataclass(frozen=True)
class Meta(Term):
    name: str = "k"


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        return show_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    left: Term
    right: Term


@dataclass(frozen=True)
class Neg(Formula):
    body: Formula


@dataclass(frozen=True)
class Lor(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Univ(Formula):
    var: int
    body: Formula


ZERO_T = ZeroT()


class Truth(enum.Enum):
    CORRECT = "correct"
    INCORRECT = "incorrect"
    UNDETERMINED = "undetermined"


# ------------------------------------------------------------------ terms

def _value(t: Term) -> int | None:
    if isinstance(t, ZeroT):
        return 0
    if isinstance(t, Succ):
        v = _value(t.arg)
        return None if v is None else v + 1
    if isinstance(t, (Plus, Times)):
        a, b = _value(t.left), _value(t.right)
        if a is None or b is None:
            return None
        return a + b if isinstance(t, Plus) else a * b
    return None


def eval_term(t: Term) -> int:
    """0 for terms with variables, otherwise one more than the arithmetic value."""
    v = _value(t)
    return 0 if v is None else v + 1


def closed_term(t: Term) -> bool:
    return _value(t) is not None


def term_vars(t: Term) -> set[int]:
    if isinstance(t, Var):
        return {t.index}
    if isinstance(t, Succ):
        return term_vars(t.arg)
    if isinstance(t, (Plus, Times)):
        return term_vars(t.left) | term_vars(t.right)
    return set()


def has_meta(t: Term) -> bool:
    if isinstance(t, Meta):
        return True
    if isinstance(t, Succ):
        return has_meta(t.arg)
    if isinstance(t, (Plus, Times)):
        return has_meta(t.left) or has_meta(t.right)
    return False


def numeral(m: int) -> Term:
    t: Term = ZERO_T
    for _ in range(m):
        t = Succ(t)
    return t


def denumeral(t: Term) -> int:
    """The natural number a closed term denotes."""
    v = _value(t)
    if v is None:
        raise ValueError(f"term {show_term(t)} is not closed")
    return v


def term_subst(t: Term, n: int, s: Term) -> Term:
    if isinstance(t, Var):
        return s if t.index == n else t
    if isinstance(t, Succ):
        return Succ(term_subst(t.arg, n, s))
    if isinstance(t, Plus):
        return Plus(term_subst(t.left, n, s), term_subst(t.right, n, s))
    if isinstance(t, Times):
        return Times(term_subst(t.left, n, s), term_subst(t.right, n, s))
    return t


def term_meta_subst(t: Term, name: str, s: Term) -> Term:
    if isinstance(t, Meta):
        return s if t.name == name else t
    if isinstance(t, Succ):
        return Succ(term_meta_subst(t.arg, name, s))
    if isinstance(t, Plus):
        return Plus(term_meta_subst(t.left, name, s), term_meta_subst(t.right, name, s))
    if isinstance(t, Times):
        return Times(term_meta_subst(t.left, name, s), term_meta_subst(t.right, name, s))
    return t


def term_close(t: Term, c: Term) -> Term:
    """Replace every variable in t by c."""
    for i in sorted(term_vars(t)):
        t = term_subst(t, i, c)
    return t


# --------------------------------------------------------------- formulas

def correct_atom(a: Atom) -> Truth:
    x, y = eval_term(a.left), eval_term(a.right)
    if x == 0 or y == 0:
        return Truth.UNDETERMINED
    return Truth.CORRECT if x == y else Truth.INCORRECT


def is_axiom(f: Formula) -> bool:
    if isinstance(f, Atom):
        return correct_atom(f) is Truth.CORRECT
    if isinstance(f, Neg) and isinstance(f.body, Atom):
        return correct_atom(f.body) is Truth.INCORRECT
    return False


def _free(f: Formula) -> set[int]:
    if isinstance(f, Atom):
        return term_vars(f.left) | term_vars(f.right)
    if isinstance(f, Neg):
        return _free(f.body)
    if isinstance(f, Lor):
        return _free(f.left) | _free(f.right)
    assert isinstance(f, Univ)
    return _free(f.body) - {f.var}


def free_list(f: Formula) -> list[int]:
    return sorted(_free(f))


def closed(f: Formula) -> bool:
    return not _free(f) and not formula_has_meta(f)


def formula_has_meta(f: Formula) -> bool:
    if isinstance(f, Atom):
        return has_meta(f.left) or has_meta(f.right)
    if isinstance(f, Neg):
        return formula_has_meta(f.body)
    if isinstance(f, Lor):
        return formula_has_meta(f.left) or formula_has_meta(f.right)
    assert isinstance(f, Univ)
    return formula_has_meta(f.body)


def substitute(f: Formula, n: int, t: Term) -> Formula:
    """Replace free occurrences of x_n by t; stops under a binder for n."""
    if isinstance(f, Atom):
        return Atom(term_subst(f.left, n, t), term_subst(f.right, n, t))
    if isinstance(f, Neg):
        return Neg(substitute(f.body, n, t))
    if isinstance(f, Lor):
        return Lor(substitute(f.left, n, t), substitute(f.right, n, t))
    assert isinstance(f, Univ)
    if f.var == n:
        return f
    return Univ(f.var, substitute(f.body, n, t))


def meta_subst(f: Formula, name: str, t: Term) -> Formula:
    if isinstance(f, Atom):
        return Atom(term_meta_subst(f.left, name, t), term_meta_subst(f.right, name, t))
    if isinstance(f, Neg):
        return Neg(meta_subst(f.body, name, t))
    if isinstance(f, Lor):
        return Lor(meta_subst(f.left, name, t), meta_subst(f.right, name, t))
    assert isinstance(f, Univ)
    return Univ(f.var, meta_subst(f.body, name, t))


def closure(f: Formula, c: Term) -> Formula:
    if not closed_term(c):
        raise ValueError(f"closure needs a closed term, got {show_term(c)}")
    for i in free_list(f):
        f = substitute(f, i, c)
    return f


def num_conn(f: Formula) -> int:
    if isinstance(f, Atom):
        return 0
    if isinstance(f, Neg):
        return 1 + num_conn(f.body)
    if isinstance(f, Lor):
        return 1 + num_conn(f.left) + num_conn(f.right)
    assert isinstance(f, Univ)
    return 1 + num_conn(f.body)


def lor_all(parts: Iterable[Formula]) -> Formula:
    """Right-nested disjunction of a non-empty sequence."""
    items = list(parts)
    out = items[-1]
    for p in reversed(items[:-1]):
        out = Lor(p, out)
    return out


def implies(a: Formula, b: Formula) -> Formula:
    return Lor(Neg(a), b)


# ------------------------------------------------------------- text syntax

def show_term(t: Term) -> str:
    if isinstance(t, ZeroT):
        return "0"
    if isinstance(t, Succ):
        return f"S({show_term(t.arg)})"
    if isinstance(t, Plus):
        return f"({show_term(t.left)} + {show_term(t.right)})"
    if isinstance(t, Times):
        return f"({show_term(t.left)} * {show_term(t.right)})"
    if isinstance(t, Var):
        return f"x{t.index}"
    assert isinstance(t, Meta)
    return t.name


def show_formula(f: Formula) -> str:
    if isinstance(f, Atom):
        return f"{show_term(f.left)} = {show_term(f.right)}"
    if isinstance(f, Neg):
        return "~" + show_formula(f.body)
    if isinstance(f, Lor):
        return f"({show_formula(f.left)} \\/ {show_formula(f.right)})"
    assert isinstance(f, Univ)
    return f"forall x{f.var}, {show_formula(f.body)}"


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.reason = message
        self.pos = pos
        self.line = line
        self.column = col


class _Reader:
    def __init__(self, text: str, metas: frozenset[str] = frozenset()):
        self.text = text
        self.pos = 0
        self.metas = metas

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str) -> None:
        if not self.peek(s):
            raise ParseError(f"expected {s!r}", self.text, self.pos)
        self.pos += len(s)

    def index(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected variable index", self.text, self.pos)
        return int(self.text[start:self.pos])

    def ident(self) -> str | None:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and (self.text[self.pos].isalnum() or self.text[self.pos] == "_"):
            self.pos += 1
        word = self.text[start:self.pos]
        if word in self.metas:
            return word
        self.pos = start
        return None

    def term(self) -> Term:
        self.skip()
        if self.peek("0"):
            self.pos += 1
            return ZERO_T
        if self.peek("S("):
            self.pos += 2
            inner = self.term()
            self.expect(")")
            return Succ(inner)
        if self.peek("x"):
            self.pos += 1
            return Var(self.index())
        if self.peek("("):
            self.pos += 1
            left = self.term()
            if self.peek("+"):
                self.pos += 1
                ctor: type = Plus
            elif self.peek("*"):
                self.pos += 1
                ctor = Times
            else:
                raise ParseError("expected '+' or '*'", self.text, self.pos)
            right = self.term()
            self.expect(")")
            return ctor(left, right)
        name = self.ident()
        if name is not None:
            return Meta(name)
        raise ParseError("expected a term", self.text, self.pos)

    def formula(self) -> Formula:
        self.skip()
        if self.peek("~"):
            self.pos += 1
            return Neg(self.formula())
        if self.peek("forall"):
            self.pos += len("forall")
            self.expect("x")
            n = self.index()
            self.expect(",")
            return Univ(n, self.formula())
        if self.peek("(") and not self._group_is_term():
            self.pos += 1
            left = self.formula()
            self.expect("\\/")
            right = self.formula()
            self.expect(")")
            return Lor(left, right)
        left_t = self.term()
        self.expect("=")
        return Atom(left_t, self.term())

    def _group_is_term(self) -> bool:
        # a parenthesised group is a term exactly when '=' follows its close
        depth, i = 0, self.pos
        while i < len(self.text):
            ch = self.text[i]
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
                if depth == 0:
                    rest = self.text[i + 1:].lstrip()
                    return rest.startswith("=")
            i += 1
        return False

    def finish(self) -> None:
        self.skip()
        if self.pos != len(self.text):
            raise ParseError("unexpected trailing input", self.text, self.pos)


def parse_term(text: str, metas: Iterable[str] = ()) -> Term:
    r = _Reader(text, frozenset(metas))
    t = r.term()
    r.finish()
    return t


def parse_formula(text: str, metas: Iterable[str] = ()) -> Formula:
    r = _Reader(text, frozenset(metas))
    f = r.formula()
    r.finish()
    return f
