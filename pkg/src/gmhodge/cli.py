"""Command-line frontend: request dispatch, text and JSON serialization.

Rationals serialize as strings "p/q" (or "p"); t-polynomials as coefficient
arrays lowest degree first; matrices as row-major nested arrays.  Text
output mirrors the classical session layout: scalar line, matrix block,
determinant line.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .brieskorn import (
    ModuleClass,
    NotTame,
    WatchdogError,
    make_context,
    n0_reduce_prime,
    reduce_n,
    reduce_top,
)
from .gaussmanin import GMData, ValidationFailed, char_S, present_fraction, squarefree_S
from .mhs import SingularBasis, _present_row, changebase, dbeta, imk, muldF
from .parser import ParseError, parse_poly, parse_tpoly
from .picardfuchs import pfeq
from .poly import BadWeights, MultiPoly, WeightedVars, monomial_string
from .tpoly import TFrac, TPoly

COMMANDS = (
    "okbase",
    "abeta",
    "s",
    "sqfree-s",
    "linear",
    "linearp",
    "nabla",
    "nablamat",
    "dbeta",
    "imk",
    "changebase",
    "pfeq",
    "muldf",
)


class Request:
    __slots__ = ("poly", "vars", "weights", "command", "form", "s", "generic", "iterate")

    def __init__(self, poly, vars, weights, command, form=None, s=None,
                 generic=False, iterate=1):
        self.poly = poly
        self.vars = list(vars)
        self.weights = [int(x) for x in weights]
        self.command = command
        self.form = form
        self.s = s
        self.generic = bool(generic)
        self.iterate = int(iterate)

    @classmethod
    def from_json(cls, obj):
        args = obj.get("args") or {}
        return cls(
            obj["poly"],
            obj["vars"],
            obj["weights"],
            obj["command"],
            form=args.get("form"),
            s=args.get("s"),
            generic=args.get("generic", False),
            iterate=args.get("iterate", 1),
        )


class Response:
    __slots__ = ("ok", "command", "result", "diagnostics", "error")

    def __init__(self, ok, command, result=None, diagnostics=None, error=None):
        self.ok = ok
        self.command = command
        self.result = result
        self.diagnostics = diagnostics
        self.error = error

    def to_json(self):
        return {
            "ok": self.ok,
            "command": self.command,
            "result": self.result,
            "diagnostics": self.diagnostics,
            "error": self.error,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj["ok"], obj["command"], obj["result"],
                   obj["diagnostics"], obj["error"])


# -- serialization helpers -------------------------------------------------


def ser_q(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def des_q(s: str) -> Fraction:
    return Fraction(s)


def ser_tpoly(p: TPoly):
    return [ser_q(c) for c in p.coeffs]


def des_tpoly(arr) -> TPoly:
    return TPoly([Fraction(s) for s in arr])


def ser_tfrac(x: TFrac):
    return {"num": ser_tpoly(x.num), "den": ser_tpoly(x.den)}


def des_tfrac(obj) -> TFrac:
    return TFrac(des_tpoly(obj["num"]), des_tpoly(obj["den"]))


def _frac_pair_text(x: TFrac) -> str:
    num, den = present_fraction(x)
    if den == TPoly.one():
        return num.to_string()
    ns = num.to_string()
    if " " in ns:
        ns = f"({ns})"
    return f"{ns}/({den.to_string()})"


def _frac_pair_json(x: TFrac):
    num, den = present_fraction(x)
    return {"num": ser_tpoly(num), "den": ser_tpoly(den)}


# -- command implementations ------------------------------------------------


def _class_from_form(ctx, P):
    res = reduce_top(P, ctx)
    return ModuleClass.from_polys("second", res.coeffs)


def run(request: Request) -> Response:
    """Execute one request; all failures become structured error responses."""
    try:
        return _run(request)
    except ParseError as exc:
        return Response(False, request.command, error={
            "type": "ParseError", "message": exc.message,
            "line": exc.line, "col": exc.col})
    except NotTame as exc:
        return Response(False, request.command, error={
            "type": "NotTame", "message": str(exc)})
    except BadWeights as exc:
        return Response(False, request.command, error={
            "type": "BadWeights", "message": str(exc)})
    except ValidationFailed as exc:
        return Response(False, request.command, error={
            "type": "ValidationFailed", "message": str(exc)})
    except (SingularBasis, WatchdogError, ValueError, ZeroDivisionError) as exc:
        return Response(False, request.command, error={
            "type": type(exc).__name__, "message": str(exc)})


def _run(request: Request) -> Response:
    if request.command not in COMMANDS:
        raise ValueError(f"unknown command {request.command!r}")
    w = WeightedVars(request.vars, request.weights)
    f = parse_poly(request.poly, w.names)
    ctx = make_context(f, w)
    names = w.names
    diagnostics = {
        "mu": ctx.mu,
        "d": ctx.d,
        "abeta": [ser_q(a) for a in ctx.A],
        "exceptional": None,
    }
    monos = [monomial_string(m, names) for m in ctx.basis.monomials]
    cmd = request.command

    def user_S():
        if request.s is None:
            return None
        return parse_tpoly(request.s)

    if cmd == "okbase":
        result = {"monomials": monos}
    elif cmd == "abeta":
        result = {"abeta": [ser_q(a) for a in ctx.A]}
    elif cmd == "s":
        result = {"s": ser_tpoly(char_S(ctx))}
    elif cmd == "sqfree-s":
        result = {"s": ser_tpoly(squarefree_S(ctx))}
    elif cmd == "linear":
        P = _need_form(request, names)
        res = reduce_top(P, ctx)
        result = {"coeffs": [ser_tpoly(p) for p in res.coeffs]}
    elif cmd == "linearp":
        P = _need_form(request, names)
        if ctx.n == 0:
            res = n0_reduce_prime(P, ctx)
            result = {
                "coeffs": [ser_tpoly(p) for p in res.coeffs],
                "constant": ser_tpoly(res.p0),
            }
        else:
            res = reduce_n(ctx.eta().scale_poly(P), ctx)
            result = {"coeffs": [ser_tpoly(p) for p in res.coeffs]}
    elif cmd == "nabla":
        P = _need_form(request, names)
        gm = GMData(ctx, user_S())
        cls = gm.nabla_iter(_class_from_form(ctx, P), request.iterate)
        result = {"coeffs": [ser_tfrac(c) for c in cls.coords]}
    elif cmd == "nablamat":
        gm = GMData(ctx, user_S())
        mat = gm.matrix()
        result = {
            "scale": _frac_pair_json(TFrac(TPoly.one(), mat.S * mat.clearing)),
            "body": [[ser_tpoly(p) for p in row] for row in mat.body],
        }
    elif cmd == "dbeta":
        D = dbeta(ctx, generic=request.generic)
        diagnostics["exceptional"] = ser_tpoly(D.exceptional)
        result = {
            "dbeta": D.dbeta,
            "mode": D.mode,
            "exceptional": ser_tpoly(D.exceptional),
        }
    elif cmd == "imk":
        D = dbeta(ctx, generic=request.generic)
        diagnostics["exceptional"] = ser_tpoly(D.exceptional)
        sets = imk(ctx, D)
        result = {
            "mid": [
                {"k": k, "monomials": [monos[i] for i in members]}
                for k, members in sets.mid
            ],
            "top": [
                {"k": k, "monomials": [monos[i] for i in members]}
                for k, members in sets.top
            ],
        }
    elif cmd == "changebase":
        D = dbeta(ctx, generic=request.generic)
        diagnostics["exceptional"] = ser_tpoly(D.exceptional)
        S = user_S()
        if S is None:
            S = char_S(ctx)
        basis = changebase(ctx, S, D)
        result = {
            "scalars": [_frac_pair_json(s) for s in basis.scalars()],
            "matrix": [[ser_tpoly(p) for p in row] for row in basis.matrix()],
            "det": ser_tpoly(basis.det),
            "labels": [
                {
                    "weight": r.m,
                    "hodge": r.k,
                    "monomial": monos[r.position],
                    "iterate": r.iterate,
                }
                for r in basis.rows
            ],
        }
    elif cmd == "pfeq":
        P = _need_form(request, names)
        eq = pfeq(ctx, P, user_S())
        result = {
            "coeffs": [ser_tpoly(p) for p in eq.padded],
            "order": eq.order,
        }
    elif cmd == "muldf":
        A = muldF(ctx, shifted=True)
        entries = []
        for i in range(ctx.mu):
            row = []
            for j in range(ctx.mu):
                c = A.contents[i][j]
                if c.is_zero():
                    row.append(None)
                else:
                    row.append({"c": ser_tpoly(c.as_poly()), "k": A.K[i][j]})
            entries.append(row)
        result = {"entries": entries}
    else:  # pragma: no cover
        raise ValueError(cmd)
    return Response(True, cmd, result=result, diagnostics=diagnostics)


def _need_form(request, names):
    if request.form is None:
        raise ValueError(f"{request.command} requires --form")
    return parse_poly(request.form, names)


# -- text rendering ----------------------------------------------------------


def render_text(resp: Response) -> str:
    if not resp.ok:
        err = resp.error
        loc = ""
        if err.get("line") is not None:
            loc = f" (line {err['line']}, column {err['col']})"
        return f"error[{err['type']}]: {err['message']}{loc}"
    r = resp.result
    cmd = resp.command
    lines = []
    if cmd == "okbase":
        lines.extend(r["monomials"])
    elif cmd == "abeta":
        lines.extend(r["abeta"])
    elif cmd in ("s", "sqfree-s"):
        lines.append(des_tpoly(r["s"]).to_string())
    elif cmd in ("linear", "linearp"):
        lines.append(", ".join(des_tpoly(p).to_string() for p in r["coeffs"]))
        if "constant" in r:
            lines.append(f"constant: {des_tpoly(r['constant']).to_string()}")
    elif cmd == "nabla":
        lines.append(", ".join(des_tfrac(c).to_string() for c in r["coeffs"]))
    elif cmd == "nablamat":
        num = des_tpoly(r["scale"]["num"]).to_string()
        den = des_tpoly(r["scale"]["den"]).to_string()
        lines.append(f"{num}/({den})")
        lines.append("")
        lines.extend(_matrix_lines(r["body"]))
    elif cmd == "dbeta":
        lines.append(",".join(str(v) for v in r["dbeta"]))
        lines.append(f"exceptional: {des_tpoly(r['exceptional']).to_string()}")
    elif cmd == "imk":
        for block, label in ((r["mid"], "I_{n}"), (r["top"], "I_{n+1}")):
            for entry in block:
                lines.append(
                    f"{label}^{entry['k']}: " + ", ".join(entry["monomials"])
                )
    elif cmd == "changebase":
        lines.append(",".join(_scalar_text(s) for s in r["scalars"]))
        lines.append("")
        lines.extend(_matrix_lines(r["matrix"]))
        lines.append(f"det: {des_tpoly(r['det']).to_string()}")
    elif cmd == "pfeq":
        lines.append(", ".join(des_tpoly(p).to_string() for p in r["coeffs"]))
    elif cmd == "muldf":
        for row in r["entries"]:
            cells = []
            for cell in row:
                if cell is None:
                    cells.append("0")
                    continue
                c = des_tpoly(cell["c"]).to_string()
                k = cell["k"]
                if " " in c or (k and ("*" in c or "/" in c)):
                    c = f"({c})"
                if k == 0:
                    cells.append(c)
                elif k == 1:
                    cells.append(f"{c}*x0")
                else:
                    cells.append(f"{c}*x0^{k}")
            lines.append(", ".join(cells))
    return "\n".join(lines)


def _scalar_text(s):
    num = des_tpoly(s["num"]).to_string()
    den = des_tpoly(s["den"]).to_string()
    if den == "1":
        return num
    if " " in num:
        num = f"({num})"
    return f"{num}/({den})"


def _matrix_lines(mat):
    return [", ".join(des_tpoly(p).to_string() for p in row) for row in mat]


# -- batch mode --------------------------------------------------------------


def batch(lines):
    """One JSON response per JSONL request line; failures stay line-local."""
    responses = []
    for line in lines:
        line = line.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
            req = Request.from_json(obj)
        except (KeyError, TypeError, json.JSONDecodeError) as exc:
            responses.append(Response(False, None, error={
                "type": "BadRequest", "message": str(exc)}))
            continue
        responses.append(run(req))
    return responses


# -- entry point --------------------------------------------------------------


def _build_argparser():
    shared = argparse.ArgumentParser(add_help=False)
    for flag, kw in (
        ("--vars", {"help": "comma-separated variable names"}),
        ("--weights", {"help": "comma-separated positive integer weights"}),
        ("--poly", {"help": "the polynomial f"}),
        ("--format", {"choices": ("text", "json")}),
    ):
        shared.add_argument(flag, default=argparse.SUPPRESS, **kw)
    ap = argparse.ArgumentParser(
        prog="gmhodge",
        parents=[shared],
        description="Exact Brieskorn-module, Gauss-Manin and Picard-Fuchs computations "
                    "for tame polynomials over Q.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name, form=False, s=False, generic=False, iterate=False):
        p = sub.add_parser(name, parents=[shared])
        if form:
            p.add_argument("--form", help="polynomial defining the class")
        if s:
            p.add_argument("--s", help="polynomial S(t) with S(f) in jacob(f)")
        if generic:
            p.add_argument("--generic", action="store_true",
                           help="treat t as a generic value")
        if iterate:
            p.add_argument("--iterate", type=int, default=1)
        return p

    add("okbase")
    add("abeta")
    add("s")
    add("sqfree-s")
    add("linear", form=True)
    add("linearp", form=True)
    add("nabla", form=True, s=True, iterate=True)
    add("nablamat", s=True)
    add("dbeta", generic=True)
    add("imk", generic=True)
    add("changebase", s=True, generic=True)
    add("pfeq", form=True, s=True)
    bp = sub.add_parser("batch")
    bp.add_argument("file", help="newline-delimited JSON requests")
    add("muldf")
    return ap


def main(argv=None) -> int:
    ap = _build_argparser()
    ns = ap.parse_args(argv)
    for attr, default in (("vars", None), ("weights", None), ("poly", None),
                          ("format", "text")):
        if not hasattr(ns, attr):
            setattr(ns, attr, default)
    if ns.command == "batch":
        try:
            with open(ns.file, "r", encoding="utf-8") as fh:
                lines = fh.readlines()
        except OSError as exc:
            print(f"error[IO]: {exc}", file=sys.stderr)
            return 1
        failed = False
        for resp in batch(lines):
            print(json.dumps(resp.to_json()))
            failed = failed or not resp.ok
        return 1 if failed else 0

    missing = [flag for flag, val in
               (("--vars", ns.vars), ("--weights", ns.weights), ("--poly", ns.poly))
               if not val]
    if missing:
        ap.error(f"missing {', '.join(missing)}")
    req = Request(
        ns.poly,
        [v.strip() for v in ns.vars.split(",")],
        [int(x) for x in ns.weights.split(",")],
        ns.command,
        form=getattr(ns, "form", None),
        s=getattr(ns, "s", None),
        generic=getattr(ns, "generic", False),
        iterate=getattr(ns, "iterate", 1),
    )
    resp = run(req)
    if ns.format == "json":
        print(json.dumps(resp.to_json()))
    else:
        out = render_text(resp)
        print(out, file=sys.stderr if not resp.ok else sys.stdout)
    return 0 if resp.ok else 1


if __name__ == "__main__":
    sys.exit(main())
