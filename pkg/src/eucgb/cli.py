"""Command-line front end.

Input files are either JSON (the matrix schema, or a bare list of rows) or
plain text with one polynomial or vector per line; blank lines and lines
starting with ``#`` are ignored.  ``-`` reads standard input.

Exit status: 0 on success, 1 on a mathematical negative (non-member, no
solution), 2 on input errors.
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from fractions import Fraction

from .division import euclidean_divide
from .euclid import QQ
from .groebner import reduced_strong_groebner, spoly_of_set
from .linsys import PolyMatrix, gnf, hermite_normal_form, kernel, row_reduce, solve
from .parsing import ParseError, format_element, format_polynomial, format_vector, parse_element
from .polyvec import (
    AdmissibleOrder,
    LexOrder,
    MatrixOrder,
    PolyRing,
    PolyVector,
    RingMismatchError,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT = 0, 1, 2

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")


class InputError(Exception):
    """Bad command-line input; reported on stderr with exit status 2."""


# ---------------------------------------------------------------------------
# loading


class Source:
    """A loaded input: optional JSON header plus the raw element strings."""

    def __init__(self, path: str, header: dict, rows: list, rhs: list | None, lines: list[int]):
        self.path = path
        self.header = header
        self.rows = rows
        self.rhs = rhs
        self.lines = lines


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from exc


def load_source(path: str) -> Source:
    text = _read(path)
    stripped = text.lstrip()
    if stripped[:1] in ("{", "["):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}:{exc.lineno}:{exc.colno}: invalid JSON: {exc.msg}") from exc
        if isinstance(data, list):
            data = {"matrix": data}
        if not isinstance(data, dict) or "matrix" not in data:
            raise InputError(f"{path}: JSON input needs a \"matrix\" field")
        rows = data["matrix"]
        if not isinstance(rows, list) or not all(isinstance(r, (list, str)) for r in rows):
            raise InputError(f"{path}: \"matrix\" must be a list of rows")
        return Source(path, data, rows, data.get("rhs"), list(range(1, len(rows) + 1)))
    rows, lines = [], []
    for n, line in enumerate(text.splitlines(), start=1):
        s = line.strip()
        if s and not s.startswith("#"):
            rows.append(s)
            lines.append(n)
    return Source(path, {}, rows, None, lines)


def _collect_names(obj, out: list):
    if isinstance(obj, str):
        out.extend(_NAME.findall(obj))
    elif isinstance(obj, list):
        for x in obj:
            _collect_names(x, out)


def build_ring(args, src: Source) -> PolyRing:
    ring_hdr = src.header.get("ring", {}) if isinstance(src.header.get("ring", {}), dict) else {}
    coeff = args.ring or ring_hdr.get("coeff", "Q" if args.command == "rref" else "Z")
    if args.vars:
        names = [v.strip() for v in args.vars.split(",") if v.strip()]
    elif "vars" in ring_hdr:
        names = list(ring_hdr["vars"])
    else:
        found: list[str] = []
        _collect_names(src.rows, found)
        _collect_names(src.rhs or [], found)
        names = sorted(set(found)) or ["x"]
    try:
        return PolyRing(coeff, names)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _monomial_order(spec) -> tuple:
    """A term order and optional component permutation from a JSON order object."""
    if spec is None or spec == "lex":
        return LexOrder(), None
    if isinstance(spec, list) and spec and all(isinstance(r, list) for r in spec) \
            and all(isinstance(x, (int, float)) for r in spec for x in r):
        return MatrixOrder(spec), None
    if not isinstance(spec, dict):
        raise InputError(f"cannot read order {spec!r}")
    kind = spec.get("type", "lex")
    perm = spec.get("perm")
    if kind == "lex":
        return LexOrder(), perm
    if kind == "matrix":
        return MatrixOrder(spec["matrix"]), perm
    raise InputError(f"unknown order type {kind!r}")


def build_order(args, src: Source) -> AdmissibleOrder:
    spec = src.header.get("order")
    if args.order:
        if args.order == "lex":
            spec = "lex"
        elif args.order.startswith("matrix:"):
            spec = json.loads(_read(args.order[len("matrix:"):]))
            if isinstance(spec, list) and spec and isinstance(spec[0], list):
                spec = {"type": "matrix", "matrix": spec}
        else:
            raise InputError(f"--order must be lex or matrix:<file>, got {args.order!r}")
    try:
        if isinstance(spec, list) and spec and all(isinstance(s, (dict, str)) for s in spec):
            parts = [_monomial_order(s) for s in spec]
            return AdmissibleOrder([p[0] for p in parts])
        term, perm = _monomial_order(spec)
        return AdmissibleOrder(term, perm)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"invalid order: {exc}") from exc


def _parse(text, ring: PolyRing, src: Source, line: int) -> PolyVector:
    if isinstance(text, (int, Fraction)) and not isinstance(text, bool):
        text = str(text)
    if not isinstance(text, str):
        raise InputError(f"{src.path}:{line}: expected a polynomial string, got {text!r}")
    try:
        return parse_element(text, ring)
    except ParseError as exc:
        raise InputError(f"{src.path}:{line}:{exc.col}: {exc.message}") from exc


def parse_elements(src: Source, ring: PolyRing) -> list[PolyVector]:
    out = []
    for row, line in zip(src.rows, src.lines):
        if isinstance(row, list):
            out.append(PolyVector.from_entries(ring, [_parse(e, ring, src, line) for e in row]))
        else:
            out.append(_parse(row, ring, src, line))
    ranks = {v.rank for v in out}
    if len(ranks) > 1:
        raise InputError(f"{src.path}: elements of different ranks {sorted(ranks)}")
    return out


def parse_matrix(src: Source, ring: PolyRing) -> PolyMatrix:
    rows = parse_elements(src, ring)
    if not rows:
        raise InputError(f"{src.path}: empty matrix")
    return PolyMatrix(ring, rows[0].rank, rows)


def _scalar_rows(src: Source, ring: PolyRing) -> list[list]:
    out = []
    for v in parse_elements(src, ring):
        if v.total_degree() > 0:
            raise InputError(f"{src.path}: matrix entries must be constants")
        out.append([v.coeff((ring.zero_exponent, j)) for j in range(v.rank)])
    return out


# ---------------------------------------------------------------------------
# output


def _fmt_scalar(c) -> str:
    return str(c)


def _scalar_matrix_text(M: list[list]) -> str:
    return "[" + ",".join("[" + ",".join(_fmt_scalar(c) for c in row) + "]" for row in M) + "]"


class Output:
    def __init__(self, args, src: Source, ring: PolyRing, order: AdmissibleOrder):
        self.json = args.format == "json"
        self.src = src
        self.ring = ring
        self.order = order
        self.lines: list[str] = []
        self.result: dict = {}

    def elem(self, v: PolyVector) -> str:
        return format_element(v, self.order)

    def vec(self, v: PolyVector) -> str:
        return format_vector(v, self.order)

    def render(self) -> str:
        if not self.json:
            return "".join(line + "\n" for line in self.lines)
        doc = dict(self.src.header)
        doc["ring"] = {"coeff": self.ring.domain.name, "vars": list(self.ring.variables)}
        if "matrix" not in doc:
            doc["input"] = list(self.src.rows)
        doc["result"] = self.result
        return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_gb(args, out: Output) -> int:
    gens = [g for g in parse_elements(out.src, out.ring) if g]
    if not gens:
        out.lines.append("0")
        out.result["basis"] = []
        return EXIT_OK
    G = reduced_strong_groebner(gens, out.order, coprime=not args.no_coprime_skip)
    out.lines.extend(out.elem(g) for g in G)
    out.result["basis"] = [out.elem(g) for g in G]
    return EXIT_OK


def _column_orders(out: Output, ncols: int):
    order = out.order
    if order.term_orders is not None:
        if len(order.term_orders) != ncols:
            raise InputError(f"{len(order.term_orders)} column orders for a matrix with {ncols} columns")
        return list(order.term_orders)
    return order.term_order(0)


def cmd_gnf(args, out: Output) -> int:
    A = parse_matrix(out.src, out.ring)
    res = gnf(A, _column_orders(out, A.ncols), coprime=not args.no_coprime_skip)
    out.order = res.order
    rows = [out.vec(r) for r in res.H.rows]
    out.lines.extend(rows)
    out.result["matrix"] = [[format_polynomial(r, res.order, j) for j in range(r.rank)] for r in res.H.rows]
    return EXIT_OK


def _rhs(out: Output) -> tuple[PolyMatrix, PolyVector]:
    """System and right-hand side: the JSON ``rhs`` field, else the last column."""
    src, ring = out.src, out.ring
    if src.rhs is not None:
        A = parse_matrix(src, ring)
        b = [_parse(e, ring, src, 0) for e in src.rhs]
        if len(b) != A.shape[0]:
            raise InputError(f"right-hand side has {len(b)} entries, matrix shape is {A.shape[0]}x{A.shape[1]}")
        return A, PolyVector.from_entries(ring, b)
    aug = parse_matrix(src, ring)
    if aug.ncols < 2:
        raise InputError("text input to solve needs rows (a_1, ..., a_s, b) with s >= 1")
    A = PolyMatrix(ring, aug.ncols - 1, [r.restrict(0, aug.ncols - 1) for r in aug.rows])
    b = PolyVector.from_entries(ring, [r.entry(aug.ncols - 1) for r in aug.rows])
    return A, b


def cmd_solve(args, out: Output) -> int:
    A, b = _rhs(out)
    orders = None
    if out.order.term_orders is not None or out.order.term_order(0) != LexOrder():
        t = out.order.term_order(0) if out.order.term_orders is None else None
        if t is None:
            raise InputError("solve takes a single term order")
        orders = (t, t, [t] * A.ncols)
    res = solve(A, b, orders, coprime=not args.no_coprime_skip)
    kernel_rows = [out.vec(r) for r in res.kernel.rows]
    if res.solvable:
        out.lines.append("solution: " + out.vec(res.particular))
        out.result["solvable"] = True
        out.result["particular"] = out.vec(res.particular)
    else:
        out.lines.append("no solution")
        out.lines.append("colon ideal: " + ", ".join(out.elem(p) for p in res.colon_basis))
        out.result["solvable"] = False
        out.result["colon_ideal"] = [out.elem(p) for p in res.colon_basis]
    out.lines.append("kernel:")
    out.lines.extend(kernel_rows)
    out.result["kernel"] = kernel_rows
    return EXIT_OK if res.solvable else EXIT_NEGATIVE


def cmd_kernel(args, out: Output) -> int:
    A = parse_matrix(out.src, out.ring)
    D = kernel(A, coprime=not args.no_coprime_skip)
    rows = [out.vec(r) for r in D.rows]
    out.lines.extend(rows)
    out.result["kernel"] = rows
    return EXIT_OK


def _target_and_rest(out: Output, what: str, minimum: int) -> tuple[PolyVector, list[PolyVector]]:
    elems = parse_elements(out.src, out.ring)
    if len(elems) < minimum:
        raise InputError(f"{what} needs {minimum} elements, got {len(elems)}")
    return elems[0], elems[1:]


def cmd_member(args, out: Output) -> int:
    f, gens = _target_and_rest(out, "member (candidate, then generators)", 2)
    gens = [g for g in gens if g]
    ok = f.is_zero()
    if not ok and gens:
        G = reduced_strong_groebner(gens, out.order, coprime=not args.no_coprime_skip)
        ok = euclidean_divide(f, G, out.order).remainder.is_zero()
    out.lines.append("true" if ok else "false")
    out.result["member"] = ok
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_divide(args, out: Output) -> int:
    f, divisors = _target_and_rest(out, "divide (dividend, then divisors)", 2)
    if f.is_zero() or any(g.is_zero() for g in divisors):
        raise InputError("dividend and divisors must be nonzero")
    expr = euclidean_divide(f, divisors, out.order)
    quotients = [out.ring.zero(1) for _ in divisors]
    for a, gamma, g in expr.steps:
        i = divisors.index(g)
        quotients[i] = quotients[i].add_scaled(a, gamma, out.ring.constant(out.ring.domain.one))
    for i, q in enumerate(quotients, start=1):
        out.lines.append(f"q{i}: {format_polynomial(q, out.order)}")
    out.lines.append("remainder: " + out.elem(expr.remainder))
    out.result["quotients"] = [format_polynomial(q, out.order) for q in quotients]
    out.result["remainder"] = out.elem(expr.remainder)
    return EXIT_OK


def cmd_spoly(args, out: Output) -> int:
    elems = parse_elements(out.src, out.ring)
    if len(elems) != 2 or not all(elems):
        raise InputError(f"spoly needs exactly two nonzero elements, got {len(elems)}")
    s = spoly_of_set(elems[0], elems[1], out.order)
    out.lines.append(out.elem(s))
    out.result["spoly"] = out.elem(s)
    return EXIT_OK


def _scalar_cmd(out: Output, fn) -> int:
    M = fn(_scalar_rows(out.src, out.ring))
    out.lines.append(_scalar_matrix_text(M))
    out.result["matrix"] = [[c if isinstance(c, int) else str(c) for c in row] for row in M]
    return EXIT_OK


def cmd_hnf(args, out: Output) -> int:
    if out.ring.domain is QQ:
        raise InputError("hnf needs --ring Z")
    return _scalar_cmd(out, hermite_normal_form)


def cmd_rref(args, out: Output) -> int:
    return _scalar_cmd(out, row_reduce)


COMMANDS = {
    "gb": (cmd_gb, "reduced strong Gröbner basis of the listed elements"),
    "gnf": (cmd_gnf, "Gröbner normal form of a matrix"),
    "solve": (cmd_solve, "solve A x = b"),
    "kernel": (cmd_kernel, "kernel basis of a matrix"),
    "member": (cmd_member, "module membership of the first element"),
    "divide": (cmd_divide, "Euclidean division of the first element by the rest"),
    "spoly": (cmd_spoly, "S-polynomial vector of two elements"),
    "hnf": (cmd_hnf, "Hermite normal form of an integer matrix"),
    "rref": (cmd_rref, "reduced row echelon form of a rational matrix"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eucgb", description="Strong Gröbner bases over Z[x] and Q[x].")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="input file, or - for stdin")
    common.add_argument("--order", help="lex or matrix:<file>")
    common.add_argument("--ring", choices=["Z", "Q"], help="coefficient domain (default Z)")
    common.add_argument("--vars", help="comma separated variables, most significant first")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--no-coprime-skip", action="store_true", help="disable the coprime pair criterion")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    log = logging.getLogger("eucgb")
    handler = None
    if os.environ.get("GB_TRACE") == "1":
        handler = logging.StreamHandler(stderr)
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        log.addHandler(handler)
        log.setLevel(logging.DEBUG)
    try:
        src = load_source(args.input)
        ring = build_ring(args, src)
        order = build_order(args, src)
        out = Output(args, src, ring, order)
        status = COMMANDS[args.command][0](args, out)
    except InputError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    except (RingMismatchError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT
    finally:
        if handler is not None:
            log.removeHandler(handler)
            log.setLevel(logging.NOTSET)
    stdout.write(out.render())
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
