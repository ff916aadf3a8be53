"""Command-line front end.

Proof objects travel as s-expressions (see ``gentzen.serial``).  Every
command writes its artifact to ``--out`` (or stdout) and a report made of
``key: value`` lines to ``--report`` (or stdout when the artifact went to a
file, stderr otherwise).

Exit status: 0 success, 1 verification failure or failed precondition,
2 usage or parse error.
"""
from __future__ import annotations

import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

import click

from . import cutelim as C
from . import derivations as D
from . import inversion as I
from . import language as L
from . import ordinal as O
from . import peano as P
from . import prooftree as T
from . import serial

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


@dataclass
class Report:
    command: str
    entries: list[tuple[str, str]] = field(default_factory=list)

    def add(self, key: str, value: Any) -> None:
        if isinstance(value, bool):
            value = "true" if value else "false"
        elif isinstance(value, O.Ordinal):
            value = O.show_ord(value)
        elif isinstance(value, L.Formula):
            value = L.show_formula(value)
        self.entries.append((key, str(value)))

    def tree(self, prefix: str, p: T.ProofTree) -> None:
        self.add(f"{prefix}formula", p.formula())
        self.add(f"{prefix}degree", p.degree())
        self.add(f"{prefix}height", p.height())

    def render(self) -> str:
        lines = [f"command: {self.command}"] + [f"{k}: {v}" for k, v in self.entries]
        return "\n".join(lines) + "\n"


class _Ctx:
    def __init__(self, out: str | None, report: str | None, samples: int):
        self.out, self.report_path = out, report
        self.samples = T.default_samples(samples)

    def emit(self, artifact: str | None, rep: Report) -> None:
        if artifact is not None:
            if self.out:
                Path(self.out).write_text(artifact)
            else:
                click.echo(artifact, nl=False)
        text = rep.render()
        if self.report_path:
            Path(self.report_path).write_text(text)
        elif artifact is None or self.out:
            click.echo(text, nl=False)
        else:
            click.echo(text, nl=False, err=True)


def _common(fn: Callable) -> Callable:
    fn = click.option("--omega-samples", "samples", type=click.IntRange(0), default=5, show_default=True,
                      help="Check ω-rule premises at numerals 0..N-1 plus one compound term.")(fn)
    fn = click.option("--report", "report", type=click.Path(dir_okay=False), default=None,
                      help="Write the key: value report to this file.")(fn)
    fn = click.option("--out", "out", type=click.Path(dir_okay=False), default=None,
                      help="Write the produced proof to this file instead of stdout.")(fn)
    return fn


class _Fail(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _run(body: Callable[[], int]) -> None:
    try:
        code = body()
    except _Fail as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(e.code)
    except (L.ParseError, serial.SexpError) as e:
        click.echo(f"parse error: {e}", err=True)
        sys.exit(EXIT_USAGE)
    except (ValueError, KeyError) as e:
        click.echo(f"error: {e}", err=True)
        sys.exit(EXIT_FAIL)
    sys.exit(code)


def _read_obj(path: str) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise _Fail(f"cannot read {path}: {e.strerror}", EXIT_USAGE) from None
    return serial.read(text)


def _read_tree(path: str) -> T.ProofTree:
    obj = _read_obj(path)
    if not isinstance(obj, T.ProofTree):
        raise _Fail(f"{path} does not contain a proof tree", EXIT_USAGE)
    return obj


def _dump(p: Any) -> str:
    return serial.write(p) + "\n"


def _histogram(p: T.ProofTree) -> str:
    return ",".join(f"{k}={v}" for k, v in T.rule_histogram(p).items())


def _verify(rep: Report, p: T.ProofTree, samples: list, key: str = "well_formed") -> bool:
    res = T.well_formed(p, samples)
    rep.add(key, res.ok)
    if not res.ok:
        rep.add("diagnostic", res.describe())
    return res.ok


# ------------------------------------------------------------------ commands

@click.group()
@click.version_option(package_name="artifact")
def main() -> None:
    """Check, transform and derive infinitary arithmetic proof trees."""


@main.command()
@click.argument("path")
@_common
def check(path: str, out: str | None, report: str | None, samples: int) -> None:
    """Check that the proof tree in PATH is well-formed."""

    def body() -> int:
        ctx = _Ctx(out, report, samples)
        p = _read_tree(path)
        rep = Report(f"check {path}")
        rep.tree("", p)
        rep.add("rules", _histogram(p))
        rep.add("omega_samples", len(ctx.samples))
        ok = _verify(rep, p, ctx.samples)
        ctx.emit(None, rep)
        return EXIT_OK if ok else EXIT_FAIL

    _run(body)


@main.command()
@click.argument("path")
@click.option("--once", is_flag=True, help="Lower the degree by one instead of reaching degree 0.")
@_common
def eliminate(path: str, once: bool, out: str | None, report: str | None, samples: int) -> None:
    """Remove cuts from the proof tree in PATH."""

    def body() -> int:
        ctx = _Ctx(out, report, samples)
        p = _read_tree(path)
        rep = Report(f"eliminate {path}" + (" --once" if once else ""))
        rep.tree("input_", p)
        if not _verify(rep, p, ctx.samples, "input_well_formed"):
            ctx.emit(None, rep)
            return EXIT_FAIL
        steps = 1 if once and p.degree() > 0 else p.degree()
        q = C.reduce_once(p) if steps == 1 and once else C.cut_elim(p)
        rep.tree("output_", q)
        rep.add("reductions", steps)
        rep.add("height_bound", C.exp2_iter(p.height(), steps))
        rep.add("rules", _histogram(q))
        ok = _verify(rep, q, ctx.samples, "output_well_formed") and q.formula() == p.formula()
        rep.add("endsequent_preserved", q.formula() == p.formula())
        ctx.emit(_dump(q), rep)
        return EXIT_OK if ok else EXIT_FAIL

    _run(body)


INVERSIONS = ("dubneg", "demorgan1", "demorgan2", "omega")


@main.command()
@click.argument("kind", type=click.Choice(INVERSIONS))
@click.argument("path")
@click.argument("formula")
@click.argument("indicator")
@click.option("--right", "right", default=None, help="Right disjunct B for the DeMorgan inversions.")
@click.option("--term", "term", default=None, help="Closed instance term for the omega inversion.")
@_common
def invert(kind: str, path: str, formula: str, indicator: str, right: str | None, term: str | None,
           out: str | None, report: str | None, samples: int) -> None:
    """Apply an inversion to the tree in PATH at the positions flagged by INDICATOR.

    FORMULA is E for dubneg (rewrites ~~E), the left disjunct A for the
    DeMorgan inversions (with --right B), and the universal formula for omega
    (with --term).
    """

    def body() -> int:
        ctx = _Ctx(out, report, samples)
        p = _read_tree(path)
        e = L.parse_formula(formula)
        s = I.parse_indicator(indicator)
        rep = Report(f"invert {kind} {path}")
        rep.tree("input_", p)
        if kind == "dubneg":
            q = I.invert_dubneg(p, e, s)
        elif kind in ("demorgan1", "demorgan2"):
            if right is None:
                raise _Fail(f"{kind} needs --right", EXIT_USAGE)
            b = L.parse_formula(right)
            fn = I.invert_demorgan_1 if kind == "demorgan1" else I.invert_demorgan_2
            q = fn(p, e, b, s)
        else:
            if term is None:
                raise _Fail("omega needs --term", EXIT_USAGE)
            q = I.invert_omega(p, e, s, L.parse_term(term))
        rep.tree("output_", q)
        ok = _verify(rep, q, ctx.samples, "output_well_formed")
        ctx.emit(_dump(q), rep)
        return EXIT_OK if ok else EXIT_FAIL

    _run(body)


@main.group()
def derive() -> None:
    """Build proofs from the derivation library."""


def _derive_cmd(name: str, params: list[click.Parameter], build: Callable[..., Any], help: str) -> None:
    def callback(out: str | None, report: str | None, samples: int, **kw: Any) -> None:
        def body() -> int:
            ctx = _Ctx(out, report, samples)
            p = build(**kw)
            rep = Report(" ".join(["derive", name] + [str(v) for v in _flat(kw.values())]))
            rep.tree("", p)
            rep.add("rules", _histogram(p))
            ok = _verify(rep, p, ctx.samples)
            ctx.emit(_dump(p), rep)
            return EXIT_OK if ok else EXIT_FAIL

        _run(body)

    cmd = click.Command(name, callback=callback, params=params, help=help)
    cmd.params += [
        click.Option(["--out"], default=None, type=click.Path(dir_okay=False), help="Output file."),
        click.Option(["--report"], default=None, type=click.Path(dir_okay=False), help="Report file."),
        click.Option(["--omega-samples", "samples"], type=click.IntRange(0), default=5, show_default=True,
                     help="Number of numeral samples for ω-rule checks."),
    ]
    derive.add_command(cmd)


def _flat(vals: Any) -> list:
    out: list = []
    for v in vals:
        if isinstance(v, (tuple, list)):
            out.extend(v)
        else:
            out.append(v)
    return out


def _f(s: str) -> L.Formula:
    return L.parse_formula(s)


def _t(s: str) -> L.Term:
    return L.parse_term(s)


def _arg(name: str, **kw: Any) -> click.Argument:
    return click.Argument([name], **kw)


_derive_cmd("lem", [_arg("formula")], lambda formula: D.build_LEM(_f(formula)),
            "Excluded middle ~A \\/ A for a closed formula A.")
_derive_cmd("lem-term", [_arg("formula"), _arg("n", type=int), _arg("s"), _arg("t")],
            lambda formula, n, s, t: D.build_LEM_term(_f(formula), n, _t(s), _t(t)),
            "~A[n:=S] \\/ A[n:=T] for closed terms S and T of equal value.")
_derive_cmd("induction", [_arg("formula"), _arg("n", type=int)],
            lambda formula, n: P.derive_induction(_f(formula), n),
            "The induction axiom for A over the variable xN.")
_derive_cmd("iterate", [_arg("formula"), _arg("n", type=int), _arg("m", type=click.IntRange(0))],
            lambda formula, n, m: P.derive_iterate(_f(formula), n, m),
            "The inductive iterate I(M) for A over xN.")
_derive_cmd("pa-axiom", [_arg("axiom", type=click.Choice(sorted(P.ARITH))), _arg("terms", nargs=-1)],
            lambda axiom, terms: P.derive_arith(axiom, [_t(x) for x in terms]),
            "An instance of an arithmetic axiom at the given closed terms.")
_derive_cmd("fol1", [_arg("a"), _arg("b")], lambda a, b: P.derive_FOL1(_f(a), _f(b)),
            "A -> (B -> A).")
_derive_cmd("fol2", [_arg("a"), _arg("b"), _arg("c")], lambda a, b, c: P.derive_FOL2(_f(a), _f(b), _f(c)),
            "(A -> (B -> C)) -> ((A -> B) -> (A -> C)).")
_derive_cmd("fol3", [_arg("a"), _arg("b")], lambda a, b: P.derive_FOL3(_f(a), _f(b)),
            "(~A -> ~B) -> ((~A -> B) -> A).")
_derive_cmd("fol4", [_arg("a"), _arg("n", type=int), _arg("t")],
            lambda a, n, t: P.derive_FOL4(_f(a), n, _t(t)), "(forall xN A) -> A[N:=T].")
_derive_cmd("fol5", [_arg("a"), _arg("b"), _arg("n", type=int)],
            lambda a, b, n: P.derive_FOL5(_f(a), _f(b), n),
            "(forall xN (A -> B)) -> (A -> forall xN B) with xN not free in A.")


@main.command()
@click.argument("path")
@click.argument("term")
@_common
def translate(path: str, term: str, out: str | None, report: str | None, samples: int) -> None:
    """Translate the PA proof in PATH into a proof tree, closing free variables with TERM."""

    def body() -> int:
        ctx = _Ctx(out, report, samples)
        pa = _read_obj(path)
        if not isinstance(pa, P.PeanoProof):
            raise _Fail(f"{path} does not contain a PA proof", EXIT_USAGE)
        c = L.parse_term(term)
        rep = Report(f"translate {path} {term}")
        rep.add("conclusion", P.conclusion(pa))
        q = P.translate(pa, c)
        rep.tree("", q)
        deg, h = P.decoration(pa)
        rep.add("decoration_matches", (q.degree(), q.height()) == (deg, h))
        rep.add("rules", _histogram(q))
        ok = _verify(rep, q, ctx.samples)
        ctx.emit(_dump(q), rep)
        return EXIT_OK if ok and (q.degree(), q.height()) == (deg, h) else EXIT_FAIL

    _run(body)


@main.command()
@click.argument("first")
@click.argument("second")
@_common
def consistency(first: str, second: str, out: str | None, report: str | None, samples: int) -> None:
    """Run the consistency argument on PA proofs of A (FIRST) and ~A (SECOND)."""

    def body() -> int:
        ctx = _Ctx(out, report, samples)
        p1, p2 = _read_obj(first), _read_obj(second)
        for path, obj in ((first, p1), (second, p2)):
            if not isinstance(obj, P.PeanoProof):
                raise _Fail(f"{path} does not contain a PA proof", EXIT_USAGE)
        res = P.demonstrate_consistency(p1, p2, ctx.samples)
        rep = Report(f"consistency {first} {second}")
        for line in res.lines:
            k, _, v = line.partition(": ")
            rep.entries.append((k, v))
        ctx.emit(_dump(res.danger), rep)
        return EXIT_OK

    _run(body)


if __name__ == "__main__":  # pragma: no cover
    main()
