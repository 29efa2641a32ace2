"""Command line front end.

Every subcommand calls one library function and prints its serialized
result, either as JSON (``--json``, the full :class:`CommandResult`) or as an
aligned plain-text table.  Exit status: 0 success, 2 usage or malformed
input, 3 domain error, 4 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Optional, Sequence

from symcurves import linear_series as ls
from symcurves import ns_calculus as ns
from symcurves.errors import ResourceGuardError, StageError, SymcurvesError
from symcurves.plane_embedding import quintic as qc
from symcurves.plane_embedding.points import Divisor3, ProjectivePoint, json_int
from symcurves.plane_embedding.veronese import collinear_p10, phi3, veronese3

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_RESOURCE = 0, 2, 3, 4


class UsageError(Exception):
    code = "usage_error"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class CommandResult:
    command: str
    inputs: dict
    outputs: dict
    exit_code: int = EXIT_OK
    as_json: bool = field(default=False, compare=False, repr=False)

    def to_dict(self) -> dict:
        return {"command": self.command, "inputs": self.inputs,
                "outputs": self.outputs, "exit_code": self.exit_code}


# argument readers -------------------------------------------------------

def _read_source(text: str) -> str:
    path = Path(text)
    if path.suffix == ".json" or path.is_file():
        try:
            return path.read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {text}: {exc}") from exc
    return text


def _parse_divisor(text: str) -> Divisor3:
    source = _read_source(text)
    stripped = source.strip()
    if stripped.startswith(("{", "[")):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise UsageError(f"malformed divisor JSON: {exc}") from exc
        pts = data["points"] if isinstance(data, dict) else data
        return Divisor3(ProjectivePoint.parse(",".join(str(c) for c in p)) for p in pts)
    return Divisor3.parse(stripped)


def _parse_classes(text: str, space: ns.SymmetricProductSpace) -> list[ns.DivisorClass]:
    out = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        try:
            a, b = (int(v) for v in chunk.split(","))
        except ValueError as exc:
            raise UsageError(f"class {chunk!r} is not 'xi,theta'") from exc
        out.append(ns.DivisorClass(space, a, b))
    return out


# command bodies ---------------------------------------------------------

def _ns_intersect(args) -> dict:
    space = ns.SymmetricProductSpace(args.g, args.n)
    classes = _parse_classes(args.classes, space)
    return {"classes": [c.to_dict() for c in classes],
            "intersection": json_int(ns.top_intersection(classes))}


def _ns_degree(args) -> dict:
    space = ns.SymmetricProductSpace(args.g, args.n)
    if args.kind == "sym":
        cls, value = ns.sym_class(space, args.d), ns.sym_degree(space, args.d)
    else:
        cls, value = ns.alt_class(space, args.d), ns.alt_degree(space, args.d)
    return {"class": cls.to_dict(), "degree": json_int(value)}


def _series_max_r9(args) -> dict:
    curve = ls.CurveClass(args.g, args.hyperelliptic, args.trigonal)
    return {"max_r": ls.max_r_degree9(curve)}


def _series_castelnuovo(args) -> dict:
    return {"genus_bound": json_int(ls.castelnuovo_genus_bound(args.d, args.r))}


def _series_search(args) -> dict:
    return ls.min_alt_embedding_degree_search(args.g_min, args.g_max, args.d_max,
                                              workers=args.workers).to_dict()


def _embed_phi(args) -> dict:
    divisor = _parse_divisor(args.divisor)
    return {"divisor": divisor.to_list(), "image": phi3(divisor).to_list()}


def _embed_veronese(args) -> dict:
    point = ProjectivePoint.parse(args.point)
    return {"point": point.to_list(), "image": veronese3(point).to_list()}


def _embed_collinear(args) -> dict:
    pts = [ProjectivePoint.parse(c) for c in _read_source(args.points).split(";") if c.strip()]
    if len(pts) != 3:
        raise UsageError(f"expected 3 points, got {len(pts)}")
    return {"points": [p.to_list() for p in pts], "collinear": collinear_p10(*pts)}


def _quintic_construct(args) -> dict:
    return qc.construct_quintic(seed=args.seed, certify=args.certify).to_dict()


def _quintic_verify(args) -> dict:
    return qc.verify_quintic_noncollinearity(seed=args.seed, certify=args.certify).to_dict()


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="symcurves", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def command(group_parsers, name: str, fn: Callable, help: str):
        p = group_parsers.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="emit the full JSON command result")
        p.set_defaults(fn=fn)
        return p

    g = groups.add_parser("ns", help="intersection numbers on C(n)").add_subparsers(
        dest="command", required=True, parser_class=_Parser)
    p = command(g, "intersect", _ns_intersect, "intersect n classes 'xi,theta;...'")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--classes", required=True,
                   help="semicolon separated 'xi,theta' pairs; use --classes=... if it starts with '-'")
    p = command(g, "degree", _ns_degree, "top self-intersection of L(n)^s or L(n)^a")
    p.add_argument("--kind", choices=["sym", "alt"], required=True)
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)

    g = groups.add_parser("series", help="linear series bounds").add_subparsers(
        dest="command", required=True, parser_class=_Parser)
    p = command(g, "max-r9", _series_max_r9, "largest r of a g^r_9")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--hyperelliptic", action="store_true")
    p.add_argument("--trigonal", action="store_true")
    p = command(g, "castelnuovo", _series_castelnuovo, "Castelnuovo genus bound")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p = command(g, "search", _series_search, "small-degree search for L(3)^a")
    p.add_argument("--g-min", type=int, required=True)
    p.add_argument("--g-max", type=int, required=True)
    p.add_argument("--d-max", type=int, default=None)
    p.add_argument("--workers", type=int, default=None,
                   help=f"worker processes (default ${ls.WORKERS_ENV} or 1)")

    g = groups.add_parser("embed", help="the map C(3) -> P^9").add_subparsers(
        dest="command", required=True, parser_class=_Parser)
    p = command(g, "phi", _embed_phi, "image of a point triple")
    p.add_argument("--divisor", required=True, help="'a,b,c;d,e,f;g,h,i' or a JSON file")
    p = command(g, "veronese", _embed_veronese, "cubic Veronese image of a point")
    p.add_argument("--point", required=True)
    p = command(g, "collinear", _embed_collinear, "are three points of P^9 collinear")
    p.add_argument("--points", required=True, help="three 10-vectors separated by ';' or a file")

    g = groups.add_parser("quintic", help="plane quintic construction").add_subparsers(
        dest="command", required=True, parser_class=_Parser)
    for name, fn in (("construct", _quintic_construct), ("verify", _quintic_verify)):
        p = command(g, name, fn, f"{name} the quintic for a seed")
        p.add_argument("--seed", type=int, default=qc.DEFAULT_SEED)
        p.add_argument("--certify", action="store_true", help="certify smoothness by elimination")
    return parser


def _error_exit_code(exc: Exception) -> int:
    if isinstance(exc, UsageError):
        return EXIT_USAGE
    if isinstance(exc, ResourceGuardError) or (
            isinstance(exc, StageError) and isinstance(exc.cause, ResourceGuardError)):
        return EXIT_RESOURCE
    return EXIT_DOMAIN


def run(argv: Optional[Sequence[str]] = None) -> CommandResult:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return CommandResult(" ".join(a for a in argv[:2] if not a.startswith("-")), {"argv": argv},
                             {"error": {"code": UsageError.code, "message": str(exc)}}, EXIT_USAGE,
                             as_json="--json" in argv)
    command = f"{args.group} {args.command}"
    inputs = {k: v for k, v in sorted(vars(args).items())
              if k not in ("fn", "group", "command", "json")}
    try:
        outputs = args.fn(args)
    except (SymcurvesError, UsageError) as exc:
        return CommandResult(command, inputs,
                             {"error": {"code": exc.code, "message": str(exc)}},
                             _error_exit_code(exc), as_json=args.json)
    except (KeyError, TypeError) as exc:
        return CommandResult(command, inputs,
                             {"error": {"code": "malformed_input", "message": str(exc)}},
                             EXIT_USAGE, as_json=args.json)
    return CommandResult(command, inputs, outputs, as_json=args.json)


# plain-text rendering ----------------------------------------------------

def _cell(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_cell(x) for x in v) + "]"
    if isinstance(v, dict):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def _table(rows: list[dict]) -> list[str]:
    if not rows:
        return ["  (none)"]
    keys = list(dict.fromkeys(k for r in rows for k in r))
    cells = [[_cell(r.get(k)) for k in keys] for r in rows]
    widths = [max(len(k), *(len(c[i]) for c in cells)) for i, k in enumerate(keys)]
    lines = ["  " + "  ".join(k.ljust(w) for k, w in zip(keys, widths))]
    lines += ["  " + "  ".join(c.ljust(w) for c, w in zip(row, widths)) for row in cells]
    return [line.rstrip() for line in lines]


def render_text(result: CommandResult) -> str:
    lines = [f"# {result.command}"]
    scalars = {k: v for k, v in result.outputs.items()
               if not (isinstance(v, list) and v and isinstance(v[0], dict))}
    width = max((len(k) for k in scalars), default=0)
    for k, v in scalars.items():
        if isinstance(v, dict) and k == "error":
            lines.append(f"error: {v['code']}: {v['message']}")
        else:
            lines.append(f"{k.ljust(width)}  {_cell(v)}")
    for k, v in result.outputs.items():
        if k not in scalars:
            lines.append(f"{k}:")
            lines.extend(_table(v))
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    result = run(argv)
    if result.as_json:
        print(json.dumps(result.to_dict(), indent=2))
    else:
        stream = sys.stdout if result.exit_code == 0 else sys.stderr
        print(render_text(result), file=stream)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
