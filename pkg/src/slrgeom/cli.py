"""Command line front end.

Exit codes: 0 ok, 1 verification failure, 2 argument or domain error,
3 I/O error, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import ast
import csv
import io
import math
import operator
import os
import sys

import numpy as np

from slrgeom import __version__, verify
from slrgeom.densities import MODES, TableError, generate_table
from slrgeom.errors import GeometryError, NumericalError
from slrgeom.formats import FORMATS, OutputSpec, render
from slrgeom.geodesics import GeodesicInitial, closed_form_polar, euclidean_coords, geodesic_ode
from slrgeom.mesh import MeshSpec, build_mesh, write_obj
from slrgeom.tilings import TilingParams, is_valid

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_NUMERIC = 4


class UsageError(Exception):
    pass


_BINOPS = {ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
           ast.Div: operator.truediv, ast.Pow: operator.pow}
_NAMES = {"pi": math.pi, "e": math.e}


def parse_real(text):
    """Float or simple arithmetic expression such as ``pi/4`` or ``2*pi/5``."""
    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id in _NAMES:
            return _NAMES[node.id]
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        raise ValueError
    try:
        value = ev(ast.parse(text.strip(), mode="eval"))
    except (SyntaxError, ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None
    if not math.isfinite(value):
        raise argparse.ArgumentTypeError(f"not finite: {text!r}")
    return value


def parse_int_set(text):
    """``"3,4,7"``, ``"3..10"`` or a mix; ranges are inclusive."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = (int(x) for x in part.split(".."))
                if hi < lo:
                    raise ValueError
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"bad integer list or range: {part!r}") from None
    return out


def parse_pairs(text):
    """Comma-separated ``P:Q`` items; ``P`` and ``Q`` may be ranges ``a..b``."""
    pairs = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        if item.count(":") != 1:
            raise UsageError(f"pair must look like p:q, got {item!r}")
        ps, qs = item.split(":")
        for p in parse_int_set(ps):
            for q in parse_int_set(qs):
                pairs.append((p, q))
    return pairs


def parse_resolution(text):
    try:
        na, nz = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"resolution must be 'angular,axial', got {text!r}") from None
    return na, nz


def _jobs(value):
    if value is not None:
        return value
    env = os.environ.get("SLR_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"SLR_JOBS must be an integer, got {env!r}") from None
    return 1


def _emit(text, path):
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def cmd_table(args):
    pairs = []
    if args.pairs:
        pairs += parse_pairs(args.pairs)
    if args.p or args.q:
        if not (args.p and args.q):
            raise UsageError("--p and --q must be given together")
        pairs += [(p, q) for p in parse_int_set(args.p) for q in parse_int_set(args.q)]
    if not pairs and not args.allow_empty:
        raise UsageError("no pairs given (use --pairs or --p/--q)")
    if args.skip_invalid:
        pairs = [pq for pq in pairs if is_valid(*pq)]
    spec = OutputSpec(args.format, args.output, args.precision)
    rows = generate_table(args.mode, pairs, jobs=_jobs(args.jobs))
    meta = f"slrgeom {__version__} table {args.mode}" if args.meta else None
    _emit(render(rows, spec, meta), spec.path)
    return EXIT_OK


def _fmt(x, precision):
    return f"{x:.{precision}f}" if math.isfinite(x) else repr(x)


def cmd_geodesic(args):
    if args.steps < 2:
        raise UsageError("--steps must be at least 2")
    if not args.s_end > 0:
        raise UsageError("--s-end must be positive")
    init = GeodesicInitial(args.lam, args.alpha)
    s_values = np.linspace(0.0, args.s_end, args.steps)
    closed = []
    for s in s_values:
        r, th, ph = closed_form_polar(float(s), init.alpha)
        th += init.lam
        closed.append((float(s), r, th, ph, *euclidean_coords(r, th, ph)))

    numeric, failure = None, None
    if args.ode:
        try:
            numeric = geodesic_ode(init, args.s_end, tol=args.tol, s_eval=s_values)
        except NumericalError as exc:
            failure = exc

    header = ["s", "r", "theta", "phi", "X", "Y", "Z"]
    if numeric is not None:
        header += ["r_ode", "theta_ode", "phi_ode"]
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    worst = 0.0
    for i, row in enumerate(closed):
        cells = [_fmt(v, args.precision) for v in row]
        if numeric is not None:
            n = numeric[i]
            cells += [_fmt(v, args.precision) for v in (n.r, n.theta, n.phi)]
            worst = max(worst, abs(n.r - row[1]), abs(n.theta - row[2]), abs(n.phi - row[3]))
        w.writerow(cells)
    if numeric is not None:
        buf.write(f"# max_deviation={worst:.3e}\n")
    _emit(buf.getvalue(), args.output)
    if failure is not None:
        print(f"error: {failure}", file=sys.stderr)
        return EXIT_NUMERIC
    return EXIT_OK


def cmd_mesh(args):
    res = args.resolution
    if args.kind == "cylinder":
        if args.r is None or args.psi is None:
            raise UsageError("cylinder mesh needs --r and --psi")
        spec = MeshSpec("cylinder", args.psi, res, r=args.r)
    else:
        if args.p is None or args.q is None:
            raise UsageError("prism mesh needs --p and --q")
        params = TilingParams(args.p, args.q)
        psi = args.psi if args.psi is not None else params.psi
        spec = MeshSpec("prism", psi, res, params=params)
    mesh = build_mesh(spec)
    if args.output is None or args.output == "-":
        write_obj(mesh, sys.stdout)
    else:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            write_obj(mesh, fh)
    return EXIT_OK


def cmd_verify(args):
    results = verify.run(args.suite)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    worst = max((r.worst for r in results), default=0.0)
    print(f"{len(results) - len(failed)}/{len(results)} checks passed; worst residual {worst:.3e}")
    return EXIT_VERIFY if failed else EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="slrgeom", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"slrgeom {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    t = sub.add_parser("table", help="packing or covering density table")
    t.add_argument("mode", choices=MODES)
    t.add_argument("--pairs", help="comma list of p:q items, ranges allowed: 3:7,7:3,3..5:10")
    t.add_argument("--p", help="p values (list or range); cross product with --q")
    t.add_argument("--q", help="q values (list or range)")
    t.add_argument("--skip-invalid", action="store_true", help="drop invalid pairs instead of failing")
    t.add_argument("--allow-empty", action="store_true", help=argparse.SUPPRESS)
    t.add_argument("--format", choices=FORMATS, default="csv")
    t.add_argument("--output", "-o", help="output file (default: stdout)")
    t.add_argument("--precision", type=int, default=5, help="decimals in csv/md (1-15)")
    t.add_argument("--jobs", type=int, help="worker threads (default: $SLR_JOBS or 1)")
    t.add_argument("--meta", action="store_true", help="prepend a provenance line")
    t.set_defaults(func=cmd_table)

    g = sub.add_parser("geodesic", help="sample a geodesic from the origin")
    g.add_argument("--alpha", type=parse_real, required=True, help="altitude, e.g. pi/4")
    g.add_argument("--lambda", dest="lam", type=parse_real, default=0.0, help="longitude")
    g.add_argument("--s-end", type=parse_real, required=True)
    g.add_argument("--steps", type=int, default=11, help="number of samples incl. s=0")
    g.add_argument("--ode", action="store_true", help="add integrated columns and deviation footer")
    g.add_argument("--tol", type=float, default=1e-10, help="integrator tolerance")
    g.add_argument("--precision", type=int, default=10)
    g.add_argument("--output", "-o")
    g.set_defaults(func=cmd_geodesic)

    m = sub.add_parser("mesh", help="Wavefront OBJ of a cylinder or prism side surface")
    m.add_argument("kind", choices=("cylinder", "prism"))
    m.add_argument("--r", type=parse_real, help="cylinder radius")
    m.add_argument("--p", type=int)
    m.add_argument("--q", type=int)
    m.add_argument("--psi", type=parse_real, help="height (prism default: tiling height)")
    m.add_argument("--resolution", type=parse_resolution, default=(32, 8), help="angular,axial")
    m.add_argument("--output", "-o")
    m.set_defaults(func=cmd_mesh)

    v = sub.add_parser("verify", help="run built-in reproduction checks")
    v.add_argument("suite", choices=(*verify.SUITES, "all"))
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, TableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
