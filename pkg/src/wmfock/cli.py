"""Command-line front end.

Exit codes: 0 success, 1 a cross-check found a mismatch, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from importlib import resources

import numpy as np

from wmfock import fock, measures, moments, partitions, paths
from wmfock.algebra import LambdaPoly

# -- helpers ------------------------------------------------------------------------


def parse_exact(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def parse_float(text: str) -> float:
    try:
        if "/" in text:
            return float(Fraction(text))
        return float(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(float(t)) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of integers: {text!r}") from None


def parse_float_list(text: str) -> list[float]:
    return [parse_float(t) for t in text.split(",") if t.strip()]


def number_json(x):
    """ints stay ints, other rationals become floats with an exact string."""
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return {"value": int(x.numerator)}
        return {"value": float(x), "exact": f"{x.numerator}/{x.denominator}"}
    if isinstance(x, int):
        return {"value": x}
    return {"value": float(x)}


def lambda_json(lam):
    if lam is None:
        return None
    if isinstance(lam, Fraction):
        return str(lam) if lam.denominator != 1 else int(lam)
    return lam


def poly_entry(n: int, p: LambdaPoly) -> dict:
    return {"n": n, "poly": p.to_json(), "text": p.render()}


def load_schema(name: str) -> dict:
    """JSON schema shipped for the output of subcommand ``name``."""
    text = resources.files("wmfock").joinpath("schemas", f"{name}.json").read_text()
    return json.loads(text)


class Output:
    def __init__(self, args):
        self.path = getattr(args, "out", None)

    def write(self, text: str):
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands ---------------------------------------------------------------------


def cmd_moments(args) -> int:
    if args.paper_seed and (args.space != "wm" or args.m != 1):
        raise UsageError("--paper-seed applies to --space wm --m 1 only")
    out = {"space": args.space, "m": args.m, "n_max": args.n_max}
    rows = []
    if args.scaled:
        if args.lambda_ is None:
            raise UsageError("--scaled needs --lambda")
        lam = float(args.lambda_)
        out["mode"] = "scaled"
        out["lambda"] = lam
        for n in range(args.n_max + 1):
            rows.append({"n": n, "value": moments.scaled_moment(args.m, n, lam, args.space)})
    else:
        out["mode"] = "exact"
        out["lambda"] = lambda_json(args.lambda_)
        for n in range(args.n_max + 1):
            if args.paper_seed:
                p = moments.b1_moment(n, paper_seed=True)
            else:
                p = moments.moment_poly(args.space, args.m, n)
            if args.lambda_ is None:
                rows.append(poly_entry(n, p))
            else:
                rows.append({"n": n, **number_json(p(args.lambda_))})
    out["moments"] = rows
    Output(args).write(dump_json(out))
    return 0


def cmd_oracle(args) -> int:
    lam = args.lambda_
    seq = fock.vacuum_moments(args.space, args.m, lam, args.n, args.variant)
    rows = []
    for n, v in enumerate(seq):
        if lam is None:
            rows.append(poly_entry(n, v))
        else:
            rows.append({"n": n, **number_json(v)})
    out = {
        "space": args.space,
        "m": args.m,
        "lambda": lambda_json(lam),
        "variant": args.variant,
        "moments": rows,
    }
    Output(args).write(dump_json(out))
    return 0


def cmd_paths(args) -> int:
    if args.kind == "motzkin":
        words = paths.enumerate_motzkin(args.n)
        weighted = paths.weighted_count_motzkin(args.n)
    else:
        words = paths.enumerate_riordan(args.n)
        weighted = paths.weighted_count_riordan(args.n)
    if args.output == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["word", "level_steps", "irreducible_factors"])
        for word in words:
            w.writerow([paths.word_to_string(word), paths.count_level(word), len(paths.decompose_irreducible(word))])
        Output(args).write(buf.getvalue())
        return 0
    out = {
        "kind": args.kind,
        "n": args.n,
        "count": len(words),
        "weighted": weighted.to_json(),
        "words": [paths.word_to_string(w) for w in words],
    }
    Output(args).write(dump_json(out))
    return 0


def cmd_partitions(args) -> int:
    if args.cls == "interval":
        elems = partitions.enumerate_interval_partitions(args.n, min_part=args.min_part)
        if args.forest != "none":
            raise UsageError("--forest needs a labeled class")
        out = {
            "class": "interval",
            "n": args.n,
            "count": len(elems),
            "elements": [{"blocks": p.to_json()} for p in elems],
        }
        Output(args).write(dump_json(out))
        return 0
    if args.cls == "wm":
        elems = partitions.enumerate_ANC_wm(args.m, args.n)
    else:
        elems = partitions.enumerate_ANC_m(args.m, args.n)
    if args.forest != "none":
        render = partitions.forest_to_dot if args.forest == "dot" else partitions.forest_to_text
        chunks = []
        for lp in elems:
            chunks.append(f"# {json.dumps(lp.to_json())}\n" + render(partitions.nesting_forest(lp)))
        Output(args).write("".join(chunks))
        return 0
    out = {
        "class": args.cls,
        "m": args.m,
        "n": args.n,
        "count": len(elems),
        "weighted": partitions.weighted_sum(elems).to_json(),
        "elements": [lp.to_json() for lp in elems],
    }
    Output(args).write(dump_json(out))
    return 0


def _law(args):
    return measures.LAWS[args.law](float(args.lambda_))


def _atoms_json(mu):
    return [{"x": float(x), "mass": float(w)} for x, w in mu.atoms]


def _density_csv(mu, n_points) -> str:
    x, d = measures.density_grid(mu, n_points)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "density"])
    for xi, di in zip(x, d):
        w.writerow([repr(float(xi)), repr(float(di))])
    return buf.getvalue()


def cmd_measure(args) -> int:
    mu = _law(args)
    if args.output == "csv" and not args.density_grid:
        raise UsageError("--output csv needs --density-grid")
    if args.atoms:
        Output(args).write(dump_json(_atoms_json(mu)))
        return 0
    if args.density_grid:
        Output(args).write(_density_csv(mu, args.density_grid))
        return 0
    p = mu.params
    out = {
        "law": args.law,
        "lambda": float(args.lambda_),
        "params": None if p is None else {"a": p.a, "b": p.b, "c": p.c, "alpha": p.alpha},
        "support": None if mu.support is None else [float(mu.support[0]), float(mu.support[1])],
        "atoms": _atoms_json(mu),
        "ac_mass": measures.measure_moment_quadrature(mu, 0) - mu.atom_mass(),
        "moments": [measures.measure_moment_quadrature(mu, n) for n in range(7)],
    }
    Output(args).write(dump_json(out))
    return 0


def cmd_density(args) -> int:
    mu = _law(args)
    if args.output == "json":
        x, d = measures.density_grid(mu, args.density_grid)
        out = {
            "law": args.law,
            "lambda": float(args.lambda_),
            "support": None if mu.support is None else [float(mu.support[0]), float(mu.support[1])],
            "atoms": _atoms_json(mu),
            "grid": [{"x": float(a), "density": float(b)} for a, b in zip(x, d)],
        }
        Output(args).write(dump_json(out))
        return 0
    Output(args).write(_density_csv(mu, args.density_grid))
    atoms = dump_json(_atoms_json(mu))
    if args.atoms_out:
        with open(args.atoms_out, "w") as fh:
            fh.write(atoms)
    elif args.out:
        with open(args.out + ".atoms.json", "w") as fh:
            fh.write(atoms)
    else:
        sys.stderr.write(atoms)
    return 0


def convolution_radius(m: int, lam: float) -> float:
    # each summand has norm at most 2 + |lam|
    return m * (2.0 + abs(lam)) + 1.0


def cmd_convolve(args) -> int:
    lam = float(args.lambda_)
    base = measures.mu1(lam) if args.space == "wm" else measures.rho(lam)
    H = measures.monotone_convolve(base.cauchy, args.m)
    R = convolution_radius(args.m, lam)
    vals = measures.contour_moments(H, args.n_max, R, N=args.nodes)
    out = {
        "space": args.space,
        "m": args.m,
        "lambda": lam,
        "radius": R,
        "moments": [{"n": n, "value": v} for n, v in enumerate(vals)],
    }
    Output(args).write(dump_json(out))
    return 0


def cmd_clt(args) -> int:
    lam = float(args.lambda_)
    rows = []
    for n in range(args.n_min, args.n_max + 1):
        limit = moments.limit_moment_combinatorial(n, lam)
        runs = []
        for m in args.m_list:
            v = moments.scaled_moment(m, n, lam, args.space)
            runs.append({"m": m, "value": v, "error": abs(v - limit)})
        order = None
        errs = [r["error"] for r in runs]
        if len(runs) >= 2 and all(e > 1e-13 for e in errs):
            logm = np.log([r["m"] for r in runs])
            order = float(-np.polyfit(logm, np.log(errs), 1)[0])
        rows.append({"n": n, "limit": limit, "runs": runs, "order": order})
    out = {"space": args.space, "lambda": lam, "m_list": args.m_list, "rows": rows}
    Output(args).write(dump_json(out))
    return 0


def run_crosscheck(
    spaces=("wm", "mono"),
    m_max: int = 3,
    n_max: int = 10,
    lambdas=(0.5, 1.0, 2.0),
    paper_seed: bool = False,
    printed_recursion: bool = False,
    tol: float = 1e-7,
) -> dict:
    """Compare every route that computes the same moments; returns a report."""
    routes: dict[str, dict] = {}

    def route(name):
        return routes.setdefault(name, {"checks": 0, "mismatches": []})

    def record(name, ok, witness):
        r = route(name)
        r["checks"] += 1
        if not ok:
            r["mismatches"].append(witness)

    # paths vs the single-operator recursions; b_1n first so that the
    # first witness under a bad seed is the induced b_13 mismatch
    for n in range(n_max + 1):
        dp = paths.weighted_count_riordan(n)
        rec = moments.b1_moment(n, paper_seed)
        record("paths-vs-recursion", dp == rec, {
            "quantity": "b_1n(l)", "m": 1, "n": n,
            "values": {"riordan_dp": dp.render(), "recursion": rec.render()},
        })
    for n in range(n_max + 1):
        dp = paths.weighted_count_motzkin(n)
        rec = moments.motzkin_poly_recursive(n, paper_seed)
        record("paths-vs-recursion", dp == rec, {
            "quantity": "M_n(l)", "m": 1, "n": n,
            "values": {"motzkin_dp": dp.render(), "recursion": rec.render()},
        })

    for space in spaces:
        enum = partitions.enumerate_ANC_wm if space == "wm" else partitions.enumerate_ANC_m
        for m in range(1, m_max + 1):
            oracle = fock.vacuum_moments(space, m, None, n_max)
            for n in range(n_max + 1):
                rec = moments.moment_poly(space, m, n)
                en = partitions.weighted_sum(enum(m, n)) if n > 0 else LambdaPoly.one()
                record("enumeration-vs-recursion", en == rec, {
                    "space": space, "m": m, "n": n,
                    "values": {"enumeration": en.render(), "recursion": rec.render()},
                })
                record("oracle-vs-recursion", oracle[n] == rec, {
                    "space": space, "m": m, "n": n,
                    "values": {"oracle": oracle[n].render(), "recursion": rec.render()},
                })
                if printed_recursion:
                    pr = moments.printed_recursion(m, n)
                    record("printed-recursion-vs-enumeration", pr == en, {
                        "space": space, "m": m, "n": n,
                        "values": {"printed": pr.render(), "enumeration": en.render()},
                    })
            for lam in lambdas:
                for name, vals in _analytic_routes(space, m, lam, n_max).items():
                    for n, v in enumerate(vals):
                        exact = float(moments.moment_poly(space, m, n)(Fraction(lam)))
                        ok = abs(v - exact) <= tol * max(1.0, abs(exact))
                        record("analytic-vs-combinatorial", ok, {
                            "space": space, "m": m, "n": n, "lambda": lam,
                            "values": {name: v, "recursion": exact},
                        })
    core = [k for k in routes if k != "printed-recursion-vs-enumeration"]
    core_bad = sum(len(routes[k]["mismatches"]) for k in core)
    agree = sum(1 for k in core if not routes[k]["mismatches"])
    if core_bad:
        summary = f"{agree} of {len(core)} routes agree, {core_bad} mismatches"
    else:
        summary = f"all {len(core)} routes agree, 0 mismatches"
    total = core_bad
    if "printed-recursion-vs-enumeration" in routes:
        bad = len(routes["printed-recursion-vs-enumeration"]["mismatches"])
        total += bad
        summary += f"; printed recursion differs from enumeration in {bad} cases"
    return {"routes": routes, "mismatches": total, "summary": summary}


def _analytic_routes(space: str, m: int, lam: float, n_max: int) -> dict:
    base = measures.mu1(lam) if space == "wm" else measures.rho(lam)
    out = {}
    if m == 1:
        R = measures.default_radius(base)
        out["contour"] = measures.contour_moments(base.cauchy, n_max, R)
        out["jacobi"] = [float(measures.moments_from_jacobi(base.jacobi, n)) for n in range(n_max + 1)]
        out["quadrature"] = [measures.measure_moment_quadrature(base, n) for n in range(n_max + 1)]
    else:
        H = measures.monotone_convolve(base.cauchy, m)
        out["convolution-contour"] = measures.contour_moments(H, n_max, convolution_radius(m, lam))
    return out


def cmd_crosscheck(args) -> int:
    spaces = ("wm", "mono") if args.space == "both" else (args.space,)
    report = run_crosscheck(
        spaces=spaces,
        m_max=args.m_max,
        n_max=args.n_max,
        lambdas=tuple(args.lambdas),
        paper_seed=args.paper_seed,
        printed_recursion=args.printed_recursion,
        tol=args.tol,
    )
    if not args.verbose:
        # keep the first witness per route; counts tell the rest
        for r in report["routes"].values():
            r["mismatch_count"] = len(r["mismatches"])
            r["mismatches"] = r["mismatches"][:1]
    report["options"] = {
        "space": args.space,
        "m_max": args.m_max,
        "n_max": args.n_max,
        "lambdas": list(args.lambdas),
        "paper_seed": args.paper_seed,
        "printed_recursion": args.printed_recursion,
    }
    Output(args).write(dump_json(report))
    sys.stderr.write(report["summary"] + "\n")
    return 1 if report["mismatches"] else 0


# -- parser -----------------------------------------------------------------------------


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    # the global flags are accepted before or after the subcommand; the
    # subcommand copies use SUPPRESS so they don't clobber the global value
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("json", "csv"), default=argparse.SUPPRESS)
    common.add_argument("--out", metavar="FILE", default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="wmfock",
        description="Vacuum moments and laws of nonsymmetric position operators.",
    )
    parser.add_argument("--output", choices=("json", "csv"), default=None)
    parser.add_argument("--out", metavar="FILE", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", parents=[common], help="exact or scaled moment tables")
    p.add_argument("--space", choices=("wm", "mono"), default="wm")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--lambda", dest="lambda_", type=parse_exact, default=None,
                   help="intensity value substituted into the polynomials (exact rational)")
    p.add_argument("--scaled", action="store_true",
                   help="b(lambda*sqrt(m))/m^(n/2) in floating point")
    p.add_argument("--paper-seed", action="store_true",
                   help="use M_1(l) = 0 in the Motzkin recursion (m = 1, wm only)")
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("oracle", parents=[common], help="moments from the Fock-space operators")
    p.add_argument("--space", choices=("wm", "mono"), default="wm")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--lambda", dest="lambda_", type=parse_exact, default=None)
    p.add_argument("--n", type=int, default=8)
    p.add_argument("--variant", choices=("a0", "identity"), default="a0")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("paths", parents=[common], help="enumerate Motzkin or Riordan words")
    p.add_argument("--kind", choices=("motzkin", "riordan"), default="motzkin")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_paths)

    p = sub.add_parser("partitions", parents=[common], help="enumerate labeled partition classes")
    p.add_argument("--class", dest="cls", choices=("wm", "mono", "interval"), default="wm")
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--min-part", type=int, default=1)
    p.add_argument("--forest", choices=("none", "text", "dot"), default="none")
    p.set_defaults(func=cmd_partitions)

    for name, helptext in (("measure", "summary, atoms or density of a named law"),
                           ("density", "density table for plotting, plus atoms")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--law", choices=tuple(measures.LAWS), required=True)
        p.add_argument("--lambda", dest="lambda_", type=parse_float, required=True)
        if name == "measure":
            p.add_argument("--density-grid", type=int, default=None)
            p.add_argument("--atoms", action="store_true")
            p.set_defaults(func=cmd_measure)
        else:
            p.add_argument("--density-grid", type=int, default=400)
            p.add_argument("--atoms-out", default=None)
            p.set_defaults(func=cmd_density)

    p = sub.add_parser("convolve", parents=[common], help="moments of the m-fold monotone convolution")
    p.add_argument("--space", choices=("wm", "mono"), default="wm")
    p.add_argument("--m", type=int, default=2)
    p.add_argument("--lambda", dest="lambda_", type=parse_float, required=True)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--nodes", type=int, default=4096)
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("clt", parents=[common], help="convergence of scaled moments to the limit law")
    p.add_argument("--space", choices=("wm", "mono"), default="wm")
    p.add_argument("--lambda", dest="lambda_", type=parse_float, default=1.0)
    p.add_argument("--n-min", type=int, default=2)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--m-list", type=parse_int_list, default=[100, 1000, 10000])
    p.set_defaults(func=cmd_clt)

    p = sub.add_parser("crosscheck", parents=[common], help="run every route and compare")
    p.add_argument("--space", choices=("wm", "mono", "both"), default="both")
    p.add_argument("--m-max", type=int, default=3)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--lambdas", type=parse_float_list, default=[0.5, 1.0, 2.0])
    p.add_argument("--tol", type=float, default=1e-7)
    p.add_argument("--paper-seed", action="store_true",
                   help="seed the Motzkin recursion with M_1(l) = 0")
    p.add_argument("--printed-recursion", action="store_true",
                   help="also compare the recursion without factor-count tracking")
    p.add_argument("--verbose", action="store_true", help="list every mismatch")
    p.set_defaults(func=cmd_crosscheck)
    return parser


_CSV_COMMANDS = {"paths", "measure", "density"}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.output is None:
        args.output = "csv" if args.command == "density" else "json"
    if args.output == "csv" and args.command not in _CSV_COMMANDS:
        parser.error(f"--output csv is not available for {args.command}")
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except (ValueError, fock.CapError) as exc:
        sys.stderr.write(f"wmfock: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
