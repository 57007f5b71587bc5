"""Command-line front end.

Exit codes: 0 verified / member, 1 refuted / non-member (a witness is
printed), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import albert as al
from . import diassoc as da
from . import diterm as dt
from . import grassmann as gr
from . import membership as mb
from . import speciality as sp
from .diassoc import Dipoly
from .errors import DialgebraError, ParseError
from .order import as_order
from .diterm import TermPoly
from .parsing import parse, parse_assoc, parse_dipoly, parse_term_poly

OK, REFUTED, ERROR = 0, 1, 2


class Context:
    def __init__(self, args):
        self.args = args
        self.order = as_order(args.order.split(",") if args.order else None)
        self.json = args.json

    def show(self, f) -> str:
        return f.to_string(self.order)


def _is_term_text(text: str) -> bool:
    return isinstance(parse(text), TermPoly)


def _dipoly_or_assoc(text: str):
    return parse_dipoly(text) if "^" in text else parse_assoc(text)


# -- subcommands ------------------------------------------------------------------------
# each returns (exit code, report dict, human-readable text)

def cmd_expand(ctx, text):
    f = parse_term_poly(text)
    r = dt.J_di(f) if f.is_dialgebraic() else dt.J(f)
    return OK, {"input": ctx.show(f), "expansion": ctx.show(r)}, ctx.show(r)


def cmd_psi(ctx, text):
    z = ctx.args.var
    if not z:
        raise DialgebraError("psi needs --var")
    if _is_term_text(text):
        f = parse_term_poly(text)
        r = dt.psi_alg(f, z)
    else:
        f = parse_assoc(text)
        r = da.psi_as(f, z)
    return OK, {"input": ctx.show(f), "var": z, "result": ctx.show(r)}, ctx.show(r)


def cmd_bar(ctx, text):
    f = parse_dipoly(text)
    r = da.bar(f)
    return OK, {"input": ctx.show(f), "bar": ctx.show(r)}, ctx.show(r)


def cmd_star(ctx, text):
    f = _dipoly_or_assoc(text)
    r = da.involution(f)
    return OK, {"input": ctx.show(f), "star": ctx.show(r), "symmetric": r == f}, ctx.show(r)


def cmd_grassmann(ctx, text):
    f = parse_dipoly(text)
    r = gr.sigma(f, ctx.order)
    return OK, {"input": ctx.show(f), "normal_form": ctx.show(r), "zero": not r}, ctx.show(r)


def cmd_is_jordan(ctx, text):
    f = _dipoly_or_assoc(text)
    if isinstance(f, Dipoly):
        cert = mb.is_jordan_dipolynomial(f, method=ctx.args.method, bound=ctx.args.bound,
                                         order=ctx.order)
    else:
        cert = mb.is_jordan_polynomial(f, bound=ctx.args.bound, order=ctx.order)
    report = {"input": ctx.show(f), "member": cert.verdict}
    if cert.verdict:
        report["preimage"] = ctx.show(cert.preimage)
        lines = ["member", "preimage: " + report["preimage"]]
        return OK, report, "\n".join(lines)
    report["residual"] = ctx.show(cert.residual)
    lines = ["not a member", "residual: " + report["residual"]]
    if isinstance(f, Dipoly):
        s = gr.sigma(f, ctx.order)
        if s:
            report["sigma_witness"] = ctx.show(s)
            lines.append("grassmann image (nonzero, kills Jordan dipolynomials of degree > 1): "
                         + report["sigma_witness"])
    return REFUTED, report, "\n".join(lines)


def cmd_herm_decompose(ctx, text):
    f = parse_dipoly(text)
    dec = mb.herm_decompose(f, bound=ctx.args.bound, order=ctx.order)
    report = {
        "input": ctx.show(f),
        "expression": ctx.show(dec.expression),
        "atoms": {k: ctx.show(v) for k, v in sorted(dec.atoms.items())},
        "uses_tetrads": dec.uses_tetrads,
    }
    return OK, report, report["expression"]


def cmd_holds_special(ctx, text):
    f = parse_term_poly(text)
    exp = mb.special_expansion(f)
    report = {"input": ctx.show(f), "holds": not exp, "expansion": ctx.show(exp)}
    if not exp:
        return OK, report, "identity of all special Jordan (di)algebras"
    return REFUTED, report, "fails; expansion: " + report["expansion"]


def cmd_macdonald(ctx, text):
    z = ctx.args.var
    if not z:
        raise DialgebraError("macdonald needs --var")
    rep = mb.macdonald_check(parse_term_poly(text), z)
    report = {"input": text, "holds_for_all": rep.holds_for_all,
              "expansion": ctx.show(rep.expansion), "message": rep.message}
    text_out = rep.message if rep.holds_for_all else rep.message + "\n" + report["expansion"]
    return (OK if rep.holds_for_all else REFUTED), report, text_out


def _generators(ctx):
    return [parse_dipoly(g) for g in (ctx.args.gen or [])]


def _gens(ctx):
    names = ctx.order.names or ("x", "y")
    if len(names) != 2:
        raise DialgebraError("this command works with two generators; use --order x,y")
    return names


def cmd_ideal(ctx, _text=None):
    d = ctx.args.degree
    if d is None:
        raise DialgebraError("ideal needs --degree")
    ideal = sp.GradedIdeal(_generators(ctx), _gens(ctx), ctx.args.bound, ctx.order)
    basis = ideal.basis(d)
    ranks = {n: ideal.rank(n) for n in range(1, d + 1)}
    report = {"generators": [ctx.show(g) for g in ideal.generators], "degree": d,
              "ranks": ranks, "basis": [ctx.show(b) for b in basis]}
    lines = [f"rank of degree {n}: {r}" for n, r in ranks.items()]
    lines += ["  " + s for s in report["basis"]]
    return OK, report, "\n".join(lines)


def cmd_quotient_special(ctx, _text=None):
    rep = sp.quotient_speciality_check(_generators(ctx), _gens(ctx), ctx.args.bound, ctx.order)
    entries = [{"generator": ctx.show(v.generator), "tetrad": ctx.show(v.tetrad),
                "member": v.member, "residual": ctx.show(v.residual)} for v in rep.tetrads]
    report = {"special": rep.special, "tetrads": entries, "ranks": rep.ranks}
    lines = ["special" if rep.special else "not special"]
    for e in entries:
        lines.append(f"  {e['tetrad']}: {'in ideal' if e['member'] else 'NOT in ideal'}")
    return (OK if rep.special else REFUTED), report, "\n".join(lines)


def cmd_verify_theorem3(ctx, _text=None):
    c = sp.verify_theorem3(bound=max(ctx.args.bound, 5))
    report = {
        "k": ctx.show(c.k), "f": ctx.show(c.f),
        "f_matches_closed_form": c.matches_closed_form,
        "f_symmetric": c.f_symmetric, "k_in_ideal": c.k_in_ideal,
        "ideal_ranks": c.ranks, "f_in_I5": c.f_in_ideal,
        "residual": ctx.show(c.residual),
        "tetrads": [{"tetrad": ctx.show(v.tetrad), "member": v.member} for v in c.tetrads.tetrads],
        "exceptional": c.exceptional,
    }
    lines = [
        "k = " + report["k"],
        "f = {k x x^ y} = " + report["f"],
        f"f equals {{x x x x^ y}} - {{y y x x^ y}}: {c.matches_closed_form}",
        "ideal ranks: " + ", ".join(f"I{n}={r}" for n, r in c.ranks.items()),
        "f not in I5" if not c.f_in_ideal else "f IN I5",
        "quotient is exceptional" if c.exceptional else "certificate FAILED",
    ]
    return (OK if c.exceptional else REFUTED), report, "\n".join(lines)


def cmd_certify_sid(ctx, text):
    if ctx.args.g8:
        g = al.load_g8()
    else:
        g = parse_term_poly(text)
    if not dt.is_multilinear(g):
        g = dt.full_linearization(g)
    cert = al.certify_sidentity(g, seed=ctx.args.seed, trials=ctx.args.trials)
    report = cert.to_json()
    lines = [f"verdict: {cert.verdict}",
             f"special side zero: {cert.special_side_zero}"]
    if cert.witness is not None:
        lines.append("albert witness found (coordinates in --json output)")
        for z, e in sorted(report["dialgebra_side"].items()):
            lines.append(f"  dot on {z}: special side zero {e['special_zero']}, "
                         f"albert value nonzero {e['albert_nonzero']}")
    return (OK if cert.positive else REFUTED), report, "\n".join(lines)


def _albert_value(spec: str, rng) -> al.AlbertElement:
    spec = spec.strip()
    if spec == "unit":
        return al.AlbertElement.unit()
    if spec == "random":
        return al.random_element(rng)
    if spec in al.albert_labels():
        return al.AlbertElement.basis(al.albert_labels().index(spec))
    parts = spec.split(",")
    if len(parts) != al.DIM:
        raise DialgebraError(f"an Albert element needs 27 comma-separated rationals, got {len(parts)}")
    return al.AlbertElement.from_coords(parts)


def cmd_eval_albert(ctx, text):
    f = parse_term_poly(text)
    rng = random.Random(ctx.args.seed)
    values = {}
    for item in ctx.args.assign or []:
        name, _, spec = item.partition("=")
        values[name.strip()] = _albert_value(spec, rng)
    for v in sorted(dt.term_variables(f)):
        if v not in values:
            values[v] = al.random_element(rng)
    r = al.evaluate_albert(f, values)
    report = {"input": ctx.show(f),
              "assignment": {k: v.to_strings() for k, v in sorted(values.items())},
              "value": r.to_strings(), "zero": not r}
    return OK, report, "[" + ", ".join(report["value"]) + "]"


COMMANDS = {
    "expand": (cmd_expand, "Jordan expansion of a term polynomial"),
    "psi": (cmd_psi, "point every operation at --var"),
    "bar": (cmd_bar, "forget the central-letter marks"),
    "star": (cmd_star, "apply the involution"),
    "grassmann": (cmd_grassmann, "normal form in the Grassmann dialgebra"),
    "is-jordan": (cmd_is_jordan, "decide Jordan (di)polynomial membership"),
    "herm-decompose": (cmd_herm_decompose, "express a symmetric dipolynomial via generators and tetrads"),
    "holds-special": (cmd_holds_special, "identity of all special Jordan (di)algebras?"),
    "macdonald": (cmd_macdonald, "identity check for f(x, y, z^) linear in z"),
    "ideal": (cmd_ideal, "graded component of an ideal (--gen, --degree)"),
    "quotient-special": (cmd_quotient_special, "tetrad criterion for speciality of a quotient"),
    "verify-theorem3": (cmd_verify_theorem3, "certify the exceptional two-generated quotient"),
    "certify-sid": (cmd_certify_sid, "certify an s-identity by Albert evaluation"),
    "eval-albert": (cmd_eval_albert, "evaluate a term polynomial in the Albert algebra"),
}
NO_INPUT = {"ideal", "quotient-special", "verify-theorem3"}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized steps")
    common.add_argument("--order", help="generator order, e.g. x,y,z")
    common.add_argument("--bound", type=int, default=mb.DEFAULT_BOUND, help="total-degree bound")
    common.add_argument("--file", help="read expressions from a file, one per line")

    parser = argparse.ArgumentParser(prog="dijordan", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, helptext) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=helptext)
        if name not in NO_INPUT:
            p.add_argument("expr", nargs="*", help="expression(s)")
        if name in ("psi", "macdonald"):
            p.add_argument("--var", required=False)
        if name == "is-jordan":
            p.add_argument("--method", choices=["auto", "fast", "span"], default="auto")
        if name in ("ideal", "quotient-special"):
            p.add_argument("--gen", action="append", help="generator dipolynomial (repeatable)")
        if name == "ideal":
            p.add_argument("--degree", type=int)
        if name == "certify-sid":
            p.add_argument("--g8", action="store_true", help="use the stored Glennie identity")
            p.add_argument("--trials", type=int, default=8)
        if name == "eval-albert":
            p.add_argument("--assign", action="append",
                           help="name=VALUE with VALUE 27 rationals, 'unit', 'random' or a basis label")
    return parser


def _inputs(args) -> list:
    if args.command in NO_INPUT or (args.command == "certify-sid" and args.g8):
        return [None]
    exprs = list(args.expr)
    if args.file:
        with open(args.file) as fh:
            for line in fh:
                line = line.split("#", 1)[0].strip() if not line.lstrip().startswith("#") else ""
                if line:
                    exprs.append(line)
    if not exprs:
        raise DialgebraError("no expression given")
    return exprs


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    ctx = Context(args)
    fn = COMMANDS[args.command][0]
    try:
        inputs = _inputs(args)
    except (DialgebraError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return ERROR
    code = OK
    reports = []
    for text in inputs:
        try:
            rc, report, human = fn(ctx, text)
        except ParseError as exc:
            print(f"error: {exc}\n{exc.pointer()}", file=sys.stderr)
            return ERROR
        except (DialgebraError, ValueError) as exc:
            print(f"error: {exc}", file=sys.stderr)
            return ERROR
        code = max(code, rc)
        if ctx.json:
            reports.append(report)
        else:
            print(human)
    if ctx.json:
        print(json.dumps(reports[0] if len(reports) == 1 else reports, indent=2, default=str))
    return code


if __name__ == "__main__":
    sys.exit(main())
