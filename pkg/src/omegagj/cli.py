"""Command-line front end: matrix/RHS files and the five subcommands."""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import List, Optional, Tuple

from .canon import is_lrrf, is_qhf, rank_nullity, verify_row_equivalence
from .engine import (
    CertificateViolation,
    PivotFloor,
    certified_stable,
    prefix_stability,
    run_to,
    snapshot,
)
from .matrices import BUILTINS, RowFiniteMatrix, make_explicit, make_stencil
from .reorder import extended_run, one_shot_state, qhf_prefix_stability
from .rows import Row, dense_width
from .scalars import RATIONAL, Field, LinForm
from .solver import general_solution, transform_rhs


class ParseError(Exception):
    """A matrix or RHS file the grammar rejects; carries the line number."""

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__("line %d: %s" % (line, reason))


class MatrixSpec:
    """Parsed matrix description: field, kind, body, optional pivot floor."""

    def __init__(self, field: Field, kind: str, body, floor: Optional[Tuple[int, int]] = None):
        self.field = field
        self.kind = kind
        self.body = body
        self.floor = floor

    def __eq__(self, other):
        return (
            isinstance(other, MatrixSpec)
            and self.field == other.field
            and self.kind == other.kind
            and self.body == other.body
            and self.floor == other.floor
        )

    def build(self) -> RowFiniteMatrix:
        if self.kind == "stencil":
            matrix = make_stencil(self.field, self.body)
        elif self.kind == "explicit":
            top = max(self.body) + 1 if self.body else 0
            rows = [
                Row.from_pairs(self.field, self.body.get(k, []))
                for k in range(top)
            ]
            matrix = make_explicit(self.field, rows)
        else:
            matrix = BUILTINS[self.body]()
            if matrix.field != self.field:
                raise ParseError(0, "builtin %s is over a different field" % self.body)
        if self.floor is not None:
            matrix.certificate = PivotFloor.affine(*self.floor)
        return matrix


_FLOOR_RE = re.compile(r"^m\*(-?\d+)(?:([+-]\d+))?$")


def parse_spec(text: str) -> MatrixSpec:
    """Parse the line-oriented matrix grammar; '#' starts a comment."""
    field: Optional[Field] = None
    kind: Optional[str] = None
    stencil: Optional[List[Tuple[int, object]]] = None
    rows: dict = {}
    tail: Optional[str] = None
    builtin: Optional[str] = None
    floor: Optional[Tuple[int, int]] = None

    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head, rest = parts[0], parts[1:]
        if head == "field":
            field = _parse_field(lineno, rest)
        elif head == "kind":
            if len(rest) != 1 or rest[0] not in ("stencil", "explicit", "builtin"):
                raise ParseError(lineno, "kind must be stencil, explicit or builtin")
            kind = rest[0]
        elif head == "stencil":
            if field is None:
                raise ParseError(lineno, "stencil before field")
            stencil = []
            seen = set()
            for tok in rest:
                off, val = _parse_pair(lineno, field, tok)
                if off in seen:
                    raise ParseError(lineno, "duplicate stencil offset %d" % off)
                seen.add(off)
                stencil.append((off, val))
        elif head == "row":
            if field is None:
                raise ParseError(lineno, "row before field")
            if not rest:
                raise ParseError(lineno, "row needs an index")
            try:
                k = int(rest[0])
            except ValueError:
                raise ParseError(lineno, "bad row index %r" % rest[0])
            if k < 0 or k in rows:
                raise ParseError(lineno, "bad or repeated row index %d" % k)
            pairs = []
            seen = set()
            for tok in rest[1:]:
                col, val = _parse_pair(lineno, field, tok)
                if col < 0 or col in seen:
                    raise ParseError(lineno, "bad or repeated column %d" % col)
                seen.add(col)
                pairs.append((col, val))
            rows[k] = pairs
        elif head == "tail":
            if rest != ["zero"]:
                raise ParseError(lineno, "only 'tail zero' is supported")
            tail = "zero"
        elif head == "builtin":
            if len(rest) != 1 or rest[0] not in BUILTINS:
                raise ParseError(
                    lineno, "unknown builtin (have: %s)" % ", ".join(sorted(BUILTINS))
                )
            builtin = rest[0]
        elif head == "floor":
            if len(rest) != 1:
                raise ParseError(lineno, "floor needs one rule like m*1+1")
            m = _FLOOR_RE.match(rest[0])
            if not m:
                raise ParseError(lineno, "bad floor rule %r" % rest[0])
            floor = (int(m.group(1)), int(m.group(2) or 0))
        else:
            raise ParseError(lineno, "unknown directive %r" % head)

    if field is None:
        raise ParseError(0, "missing field line")
    if kind is None:
        raise ParseError(0, "missing kind line")
    if kind == "stencil":
        if stencil is None:
            raise ParseError(0, "kind stencil needs a stencil line")
        return MatrixSpec(field, kind, stencil, floor)
    if kind == "explicit":
        if tail != "zero":
            raise ParseError(0, "kind explicit needs 'tail zero'")
        return MatrixSpec(field, kind, rows, floor)
    if builtin is None:
        raise ParseError(0, "kind builtin needs a builtin line")
    return MatrixSpec(field, kind, builtin, floor)


def _parse_field(lineno: int, rest: List[str]) -> Field:
    if rest == ["rational"]:
        return RATIONAL
    if len(rest) == 2 and rest[0] == "gf":
        try:
            return Field.gf(int(rest[1]))
        except (ValueError, TypeError) as exc:
            raise ParseError(lineno, str(exc))
    raise ParseError(lineno, "field must be 'rational' or 'gf P'")


def _parse_pair(lineno: int, field: Field, tok: str):
    idx, sep, val = tok.partition(":")
    if not sep:
        raise ParseError(lineno, "expected idx:value, got %r" % tok)
    try:
        return int(idx), field.parse(val)
    except (ValueError, ZeroDivisionError):
        raise ParseError(lineno, "bad entry %r" % tok)


def render_spec(spec: MatrixSpec) -> str:
    """Canonical text for a spec; parse(render(s)) == s."""
    F = spec.field
    lines = [
        "field rational" if F.kind == "rational" else "field gf %d" % F.p,
        "kind %s" % spec.kind,
    ]
    if spec.kind == "stencil":
        lines.append(
            "stencil "
            + " ".join("%d:%s" % (o, F.format(v)) for o, v in sorted(spec.body))
        )
    elif spec.kind == "explicit":
        for k in sorted(spec.body):
            pairs = " ".join("%d:%s" % (c, F.format(v)) for c, v in sorted(spec.body[k]))
            lines.append(("row %d " % k + pairs).rstrip())
        lines.append("tail zero")
    else:
        lines.append("builtin %s" % spec.body)
    if spec.floor is not None:
        a, b = spec.floor
        lines.append("floor m*%d%s" % (a, "%+d" % b if b else ""))
    return "\n".join(lines) + "\n"


def parse_rhs(text: str):
    """RHS file: one 'rhs symbolic NAME' or 'rhs explicit v0 v1 ...' line."""
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] != "rhs" or len(parts) < 2:
            raise ParseError(lineno, "expected an rhs line")
        if parts[1] == "symbolic":
            if len(parts) != 3 or not parts[2].isidentifier():
                raise ParseError(lineno, "rhs symbolic needs one symbol name")
            return ("symbolic", parts[2])
        if parts[1] == "explicit":
            return ("explicit", parts[2:])
        raise ParseError(lineno, "rhs must be symbolic or explicit")
    raise ParseError(0, "missing rhs line")


def resolve_matrix(arg: str) -> RowFiniteMatrix:
    if arg.startswith("builtin:"):
        name = arg[len("builtin:"):]
        if name not in BUILTINS:
            raise ParseError(0, "unknown builtin %r" % name)
        return BUILTINS[name]()
    if arg in BUILTINS and not os.path.exists(arg):
        return BUILTINS[arg]()
    try:
        with open(arg) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(0, "cannot read matrix %r: %s" % (arg, exc))
    return parse_spec(text).build()


def resolve_rhs(arg: str):
    if arg.startswith("symbolic:"):
        name = arg[len("symbolic:"):]
        if not name.isidentifier():
            raise ParseError(0, "bad symbol name %r" % name)
        return ("symbolic", name)
    try:
        with open(arg) as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(0, "cannot read rhs %r: %s" % (arg, exc))
    return parse_rhs(text)


def _dense_line(field: Field, row: Row, width: int) -> str:
    return "\t".join(field.format(v) for v in row.dense(width))


def _emit_rows(out, label: str, field: Field, rows: List[Row]) -> None:
    width = max(1, dense_width(rows))
    print("# %s" % label, file=out)
    for r in rows:
        print(_dense_line(field, r, width), file=out)


def cmd_reduce(args, out) -> int:
    matrix = resolve_matrix(args.matrix)
    if args.strategy == "lps":
        print(
            "warning: leftmost pivots let early rows drift; "
            "prefixes may never stabilize",
            file=sys.stderr,
        )
    state = run_to(matrix, args.stages, args.strategy)
    sections = [s.strip() for s in args.emit.split(",") if s.strip()]
    snap = snapshot(state)
    if args.format == "json":
        keep = {"rows", "passage", "pivots", "pivot_history", "last_changed"}
        alias = {"history": "pivot_history"}
        doc = {"stage": snap["stage"], "strategy": snap["strategy"]}
        for s in sections:
            key = alias.get(s, s)
            if key not in keep:
                raise ParseError(0, "unknown emit section %r" % s)
            doc[key] = snap[key]
        print(json.dumps(doc), file=out)
        return 0
    for s in sections:
        if s == "rows":
            _emit_rows(out, "rows", state.field, state.rows)
        elif s == "passage":
            _emit_rows(out, "passage", state.field, state.passage)
        elif s == "pivots":
            print("# pivots", file=out)
            for col in sorted(state.pivots):
                print("%d\t%d" % (col, state.pivots[col]), file=out)
        elif s == "history":
            print("# history", file=out)
            for n, col in enumerate(state.pivot_history):
                print("%d\t%d" % (n, -1 if col is None else col), file=out)
        elif s == "last_changed":
            print("# last_changed", file=out)
            for i, n in enumerate(state.last_changed):
                print("%d\t%d" % (i, n), file=out)
        else:
            raise ParseError(0, "unknown emit section %r" % s)
    return 0


def cmd_qhf(args, out) -> int:
    matrix = resolve_matrix(args.matrix)
    if args.strategy != "rps":
        raise ParseError(0, "qhf is defined for the rps strategy only")
    rs = extended_run(
        matrix, args.stages, args.strategy, oracle_stages=True if args.oracle else None
    )
    if args.format == "json":
        doc = {
            "stage": rs.stage,
            "permutation": rs.permutation,
            "q_rows": [str(r) for r in rs.q_rows],
            "q_passage": [str(r) for r in rs.q_passage],
        }
        if args.prefix is not None:
            doc["prefix"] = args.prefix
            doc["delta"] = qhf_prefix_stability(rs, args.prefix)
            doc["last_change"] = prefix_stability(rs, args.prefix)
        print(json.dumps(doc), file=out)
        return 0
    _emit_rows(out, "q_rows", matrix.field, rs.q_rows)
    print("# permutation", file=out)
    print(" ".join(str(i) for i in rs.permutation), file=out)
    if args.prefix is not None:
        print("last_change_%d = %d" % (args.prefix, prefix_stability(rs, args.prefix)), file=out)
        print("delta_%d = %d" % (args.prefix, qhf_prefix_stability(rs, args.prefix)), file=out)
    return 0


def cmd_solve(args, out) -> int:
    matrix = resolve_matrix(args.matrix)
    state = run_to(matrix, args.stages, args.strategy)
    kind, payload = resolve_rhs(args.rhs)
    if kind == "symbolic":
        rhs = payload
    else:
        try:
            rhs = [matrix.field.parse(v) for v in payload]
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(0, "bad rhs value: %s" % exc)
    k = transform_rhs(state.passage, rhs)
    horizon = args.horizon if args.horizon is not None else args.stages
    result = general_solution(state, k, horizon)
    if args.format == "json":
        doc = {
            "constraints": [_constraint_text(f) for f in result.constraints],
            "general": [
                {
                    "column": j,
                    "value": str(result.general.entry(j)),
                    "provenance": result.general.provenance[j],
                }
                for j in range(horizon + 1)
            ],
            "deficiency": result.deficiency_over_horizon,
            "horizon": result.horizon,
        }
        print(json.dumps(doc), file=out)
        return 0
    print("# constraints", file=out)
    for f in result.constraints:
        print(_constraint_text(f), file=out)
    print("# general", file=out)
    for j in range(horizon + 1):
        print(
            "x_%d = %s\t[%s]"
            % (j, result.general.entry(j), result.general.provenance[j]),
            file=out,
        )
    print("deficiency = %d" % result.deficiency_over_horizon, file=out)
    return 0


def _constraint_text(f: LinForm) -> str:
    lead = max(f.terms) if f.terms else None
    return f.render(leading=lead) + " = 0"


def cmd_verify(args, out) -> int:
    matrix = resolve_matrix(args.matrix)
    if args.check in ("qhf", "roweq") and args.strategy != "rps":
        raise ParseError(0, "check %s is defined for the rps strategy only" % args.check)
    if args.check == "lrrf":
        state = run_to(matrix, args.stages, args.strategy)
        ok = bool(is_lrrf(state.rows))
    elif args.check == "qhf":
        rs = extended_run(matrix, args.stages, args.strategy)
        ok = bool(is_qhf(rs.q_rows))
    elif args.check == "roweq":
        rs = extended_run(matrix, args.stages, args.strategy)
        ok = verify_row_equivalence(rs.q_passage, matrix, rs.q_rows, args.stages)
    else:
        state = run_to(matrix, args.stages, args.strategy)
        shot = one_shot_state(matrix, args.stages, args.strategy)
        ok = (
            state.rows == shot.rows
            and state.passage == shot.passage
            and state.pivots == shot.pivots
        )
    print("check %s: %s" % (args.check, "ok" if ok else "failed"), file=out)
    return 0 if ok else 1


def cmd_stability(args, out) -> int:
    matrix = resolve_matrix(args.matrix)
    state = run_to(matrix, args.stages, args.strategy)
    print("# last_changed", file=out)
    for i, n in enumerate(state.last_changed):
        print("%d\t%d" % (i, n), file=out)
    if args.prefix is not None:
        print(
            "prefix %d last_change = %d"
            % (args.prefix, prefix_stability(state, args.prefix)),
            file=out,
        )
        print(
            "prefix %d status = %s"
            % (args.prefix, certified_stable(state, args.prefix)),
            file=out,
        )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="omegagj",
        description="Staged rightmost-pivot elimination of row-finite matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    handlers = {
        "reduce": cmd_reduce,
        "qhf": cmd_qhf,
        "solve": cmd_solve,
        "verify": cmd_verify,
        "stability": cmd_stability,
    }
    for name, fn in handlers.items():
        p = sub.add_parser(name)
        p.set_defaults(handler=fn)
        p.add_argument("matrix_pos", nargs="?", metavar="MATRIX", default=None)
        p.add_argument("--matrix", help="spec file, builtin name, or builtin:NAME")
        p.add_argument("--stages", type=int, required=True, metavar="N")
        p.add_argument("--strategy", choices=("rps", "lps"), default="rps")
        p.add_argument("--format", choices=("tsv", "json"), default="tsv")
        if name == "reduce":
            p.add_argument("--emit", default="rows")
        if name in ("qhf", "stability"):
            p.add_argument("--prefix", type=int, default=None, metavar="K")
        if name == "qhf":
            p.add_argument("--oracle", action="store_true")
        if name == "solve":
            p.add_argument("--rhs", default="symbolic:c")
            p.add_argument("--horizon", type=int, default=None, metavar="H")
        if name == "verify":
            p.add_argument(
                "--check", choices=("lrrf", "qhf", "roweq", "oracle"), required=True
            )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    matrix = args.matrix or args.matrix_pos
    try:
        if matrix is None:
            raise ParseError(0, "no matrix given (use --matrix or a positional name)")
        if args.stages < 0:
            raise ParseError(0, "--stages must be >= 0")
        args.matrix = matrix
        return args.handler(args, sys.stdout)
    except ParseError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except CertificateViolation as exc:
        print("certificate violation: %s" % exc, file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
