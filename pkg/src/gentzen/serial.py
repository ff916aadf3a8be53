"""S-expression reading and writing for proof objects.

Values are self-describing, so the reader needs no schema:

* a double-quoted string is a formula in the text syntax
* ``(term "...")``, ``(ord "...")`` and ``(ind "...")`` wrap terms,
  ordinals and substitution indicators
* a bare integer is a natural number, a bare symbol is a name
* ``(tag field...)`` builds the dataclass registered under ``tag``
* ``(template k BODY)`` binds the metavariable ``k`` inside BODY
"""
from __future__ import annotations

import dataclasses
import re
from typing import Any, Callable, Iterator

from . import language as L
from . import ordinal as O

TAGS: dict[str, type] = {}


def sexp_tag(tag: str) -> Callable[[type], type]:
    def deco(cls: type) -> type:
        cls.TAG = tag  # type: ignore[attr-defined]
        TAGS[tag] = cls
        return cls

    return deco


class SexpError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int = 0):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{message} at line {line}, column {col}")
        self.line = line
        self.column = col


# ------------------------------------------------------------------ reader

_TOK = re.compile(r'\s*(?:(;[^\n]*)|(\()|(\))|"([^"]*)"|([^\s()"]+))')


class _Sym(str):
    pass


class _Str(str):
    pass


def _tokenize(text: str) -> Iterator[tuple[Any, int]]:
    pos = 0
    while True:
        m = _TOK.match(text, pos)
        if not m or m.end() == pos:
            rest = text[pos:]
            if rest.strip():
                raise SexpError("unreadable input", text, pos + len(rest) - len(rest.lstrip()))
            return
        pos = m.end()
        if m.group(1) is not None:
            continue
        if m.group(2):
            yield "(", m.start(2)
        elif m.group(3):
            yield ")", m.start(3)
        elif m.group(4) is not None:
            yield _Str(m.group(4)), m.start(4) - 1
        else:
            yield _Sym(m.group(5)), m.start(5)


def _read_raw(text: str) -> Any:
    """Nested python lists of _Sym/_Str, each list tagged with its offset."""
    stack: list[list] = []
    top: list = []
    for tok, pos in _tokenize(text):
        if tok == "(" and not isinstance(tok, _Str):
            stack.append(top)
            top = _Pos([], pos)
        elif tok == ")" and not isinstance(tok, _Str):
            if not stack:
                raise SexpError("unbalanced ')'", text, pos)
            done = top
            top = stack.pop()
            top.append(done)
        else:
            top.append(_Located(tok, pos))
    if stack:
        raise SexpError("missing ')'", text, len(text))
    if len(top) != 1:
        raise SexpError("expected exactly one expression", text, 0)
    return top[0]


class _Pos(list):
    def __init__(self, items: list, pos: int):
        super().__init__(items)
        self.pos = pos


class _Located:
    __slots__ = ("value", "pos")

    def __init__(self, value: Any, pos: int):
        self.value = value
        self.pos = pos


def _ensure_loaded() -> None:
    # importing registers every tagged class and family function
    from . import cutelim, derivations, inversion, peano, prooftree  # noqa: F401


def read(text: str) -> Any:
    _ensure_loaded()
    raw = _read_raw(text)
    return _decode(raw, text, frozenset())


def _decode(node: Any, text: str, metas: frozenset[str]) -> Any:
    if isinstance(node, _Located):
        v = node.value
        if isinstance(v, _Str):
            try:
                return L.parse_formula(str(v), metas)
            except L.ParseError as e:
                # point inside the string literal (exact when it has no escapes)
                raise SexpError(f"bad formula {str(v)!r}: {e.reason}", text, node.pos + 1 + e.pos) from None
        if re.fullmatch(r"\d+", v):
            return int(v)
        if v == "nil":
            return None
        if v in ("true", "false"):
            return v == "true"
        return str(v)
    assert isinstance(node, _Pos)
    if not node:
        raise SexpError("empty list", text, node.pos)
    head = node[0]
    if not isinstance(head, _Located) or not isinstance(head.value, _Sym):
        raise SexpError("expected a constructor name", text, node.pos)
    tag = str(head.value)
    args = node[1:]
    if tag in ("term", "ord", "ind"):
        if len(args) != 1 or not isinstance(args[0], _Located) or not isinstance(args[0].value, _Str):
            raise SexpError(f"({tag} ...) takes one string", text, node.pos)
        body = str(args[0].value)
        try:
            if tag == "term":
                return L.parse_term(body, metas)
            if tag == "ord":
                return O.parse_ord(body)
            from .inversion import parse_indicator

            return parse_indicator(body)
        except ValueError as e:
            raise SexpError(f"bad {tag} {body!r}: {e}", text, args[0].pos) from None
    if tag == "template":
        if len(args) != 2 or not isinstance(args[0], _Located):
            raise SexpError("(template k BODY) expected", text, node.pos)
        name = str(args[0].value)
        body = args[1]
        from .prooftree import Call, Template

        if isinstance(body, _Pos) and body and isinstance(body[0], _Located) and body[0].value == "call":
            if len(body) < 2:
                raise SexpError("(call NAME ...) expected", text, body.pos)
            fname = str(body[1].value)
            fargs = tuple(_decode(a, text, metas) for a in body[2:])
            return Call(fname, fargs)
        return Template(name, _decode(body, text, metas | {name}))
    cls = TAGS.get(tag)
    if cls is None:
        raise SexpError(f"unknown constructor {tag!r}", text, node.pos)
    fields = [f for f in dataclasses.fields(cls) if f.init]
    if len(args) != len(fields):
        raise SexpError(f"{tag} expects {len(fields)} arguments, got {len(args)}", text, node.pos)
    values = [_decode(a, text, metas) for a in args]
    try:
        return cls(*values)
    except (TypeError, ValueError) as e:
        raise SexpError(f"cannot build {tag}: {e}", text, node.pos) from None


# ------------------------------------------------------------------ writer

def _q(s: str) -> str:
    return '"' + s + '"'


def write(obj: Any, indent: int = 0) -> str:
    """Deterministic rendering; nested constructors go on their own lines."""
    return _write(obj, indent)


def _atom(obj: Any) -> str | None:
    if obj is None:
        return "nil"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return obj
    if isinstance(obj, L.Formula):
        return _q(L.show_formula(obj))
    if isinstance(obj, L.Term):
        return f"(term {_q(L.show_term(obj))})"
    if isinstance(obj, O.Ordinal):
        return f"(ord {_q(O.show_ord(obj))})"
    from .inversion import SubstIndicator, show_indicator

    if isinstance(obj, SubstIndicator):
        return f"(ind {_q(show_indicator(obj))})"
    return None


def _write(obj: Any, indent: int) -> str:
    a = _atom(obj)
    if a is not None:
        return a
    pad = " " * indent
    from .prooftree import Call, Template

    if isinstance(obj, Template):
        return f"(template {obj.meta}\n{pad}  {_write(obj.body, indent + 2)})"
    if isinstance(obj, Call):
        parts = [f"(call {obj.name}"]
        return _join(parts, obj.args, indent, prefix=f"(template k ", suffix=")")
    tag = getattr(type(obj), "TAG", None)
    if tag is None:
        raise TypeError(f"cannot serialise {type(obj).__name__}")
    vals = [getattr(obj, f.name) for f in dataclasses.fields(obj) if f.init]
    return _join([f"({tag}"], vals, indent)


def _join(head: list[str], vals: Any, indent: int, prefix: str = "", suffix: str = "") -> str:
    pad = " " * (indent + 2)
    simple: list[str] = []
    nested: list[str] = []
    for v in vals:
        a = _atom(v)
        if a is not None and not nested:
            simple.append(a)
        else:
            nested.append(a if a is not None else _write(v, indent + 2))
    line = " ".join(head + simple)
    if nested:
        line += "".join("\n" + pad + n for n in nested)
    return prefix + line + ")" + suffix


def subst_meta(obj: Any, name: str, t: L.Term) -> Any:
    """Instantiate metavariable ``name`` with ``t`` throughout a proof object."""
    if isinstance(obj, L.Formula):
        return L.meta_subst(obj, name, t)
    if isinstance(obj, L.Term):
        return L.term_meta_subst(obj, name, t)
    if isinstance(obj, tuple):
        return tuple(subst_meta(x, name, t) for x in obj)
    from .prooftree import Call, Template

    if isinstance(obj, Template):
        if obj.meta == name:
            return obj
        return Template(obj.meta, subst_meta(obj.body, name, t))
    if isinstance(obj, Call):
        return Call(obj.name, subst_meta(obj.args, name, t))
    if dataclasses.is_dataclass(obj) and getattr(type(obj), "TAG", None):
        changes = {}
        for f in dataclasses.fields(obj):
            if not f.init:
                continue
            old = getattr(obj, f.name)
            new = subst_meta(old, name, t)
            if new is not old:
                changes[f.name] = new
        return dataclasses.replace(obj, **changes) if changes else obj
    return obj
