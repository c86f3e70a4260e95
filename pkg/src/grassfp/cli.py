"""Command-line interface: ``grassfp <command> [options]``.

Exit codes: 0 success, 1 invariant violation, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__
from .closed_form import RhoFunction, galkin_check, limit_check, rho_closed_form
from .errors import GrassfpError, InvariantViolation, ParameterError
from .filtration import FilteredFamily, fpd_bullet, fusion_coefficient
from .littlewood_richardson import lr_coefficient
from .partitions import Partition, gr_context, hook_dimension
from .quantum import cached_table, multiplication_matrix, quantum_product
from .spectral import (
    DEFAULT_MAX_ITER,
    DEFAULT_TOL,
    check_ring_homomorphism,
    fpdim_basis,
    perron_root,
    ring_from_table,
)

SCHEMA_VERSION = 1
EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def num(x: float) -> str:
    """Float as a decimal string with 15 significant digits."""
    return f"{x:#.15g}"


class Record:
    """One self-describing output record per invocation."""

    def __init__(self, command: str, parameters: dict):
        self.command = command
        self.parameters = parameters
        self.results: dict = {}
        self.provenance: dict = {}
        self.columns: list[str] | None = None
        self.rows: list[list] = []
        self.violations: list[str] = []

    def as_dict(self) -> dict:
        out = {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "provenance": self.provenance,
            "violations": self.violations,
        }
        if self.columns is not None:
            out["results"] = dict(self.results, table={"columns": self.columns, "rows": self.rows})
        return out

    def render(self) -> str:
        lines = [f"# {self.command} " + " ".join(f"{k}={v}" for k, v in self.parameters.items())]
        for key, value in self.results.items():
            lines.append(f"{key}: {value}")
        if self.columns is not None:
            widths = [max(len(str(c)), *(len(str(r[i])) for r in self.rows)) if self.rows else len(str(c))
                      for i, c in enumerate(self.columns)]
            lines.append("  ".join(str(c).ljust(w) for c, w in zip(self.columns, widths)))
            for row in self.rows:
                lines.append("  ".join(str(v).ljust(w) for v, w in zip(row, widths)))
        for key, value in self.provenance.items():
            lines.append(f"[{key}] {value}")
        for v in self.violations:
            lines.append(f"VIOLATION: {v}")
        return "\n".join(line.rstrip() for line in lines)


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ParameterError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _need(args, *names):
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n, None) is None]
    if missing:
        raise UsageError(f"{args.command}: missing {', '.join(missing)}")


def _table(args, ctx, mode):
    return cached_table(ctx, mode, use_cache=not args.no_cache, threads=args.threads)


def cmd_rho(args) -> Record:
    _need(args, "k", "n", "lam")
    ctx = gr_context(args.k, args.n)
    lam = ctx.check(args.lam)
    rec = Record("rho", {"k": args.k, "n": args.n, "lambda": str(lam)})
    value = rho_closed_form(RhoFunction.of(lam, args.k), args.n)
    rec.results["rho"] = num(value)
    rec.provenance["method"] = "closed-form sine product"
    if args.exact_check:
        mat = multiplication_matrix(lam, _table(args, ctx, "quantum")).matrix
        res = perron_root(mat, args.tol, args.max_iter)
        rec.results["spectral_radius"] = num(res.radius)
        rec.results["gap"] = num(abs(res.radius - value))
        rec.provenance.update(spectral_method=res.method, iterations=res.iterations,
                              residual=num(res.residual), tol=args.tol)
    return rec


def cmd_dim(args) -> Record:
    _need(args, "k", "lam")
    rec = Record("dim", {"k": args.k, "lambda": str(args.lam)})
    rec.results["dim"] = hook_dimension(args.lam, args.k)
    rec.provenance["method"] = "hook-length formula, exact integers"
    return rec


def cmd_lr(args) -> Record:
    _need(args, "lam", "mu", "nu")
    rec = Record("lr", {"lambda": str(args.lam), "mu": str(args.mu), "nu": str(args.nu)})
    rec.results["coefficient"] = lr_coefficient(args.lam, args.mu, args.nu)
    rec.provenance["method"] = "LR tableau enumeration"
    return rec


def cmd_qprod(args) -> Record:
    _need(args, "k", "n", "lam", "mu")
    ctx = gr_context(args.k, args.n)
    lam, mu = ctx.check(args.lam), ctx.check(args.mu)
    rec = Record("qprod", {"k": args.k, "n": args.n, "lambda": str(lam), "mu": str(mu), "mode": args.mode})
    if args.mode == "quantum":
        exp = quantum_product(lam, mu, ctx)
    else:
        exp = _table(args, ctx, "classical").product(lam, mu)
    rec.columns = ["nu", "d", "coeff"]
    for (nu, d), c in sorted(exp.items(), key=lambda t: (t[0][1], ctx.index[t[0][0]])):
        rec.rows.append([str(nu), d, c])
    rec.provenance["method"] = "rim-hook reduction of LR expansion" if args.mode == "quantum" else "LR, truncated to the box"
    return rec


def cmd_fpdim(args) -> Record:
    _need(args, "k")
    if args.n is None and args.r is None:
        raise UsageError("fpdim: give --n or --r")
    n = args.n if args.n is not None else args.k + args.r
    ctx = gr_context(args.k, n)
    rec = Record("fpdim", {"k": args.k, "n": n, "mode": args.mode})
    ring = ring_from_table(_table(args, ctx, args.mode))
    report = fpdim_basis(ring, args.tol, args.max_iter, threads=args.threads)
    rec.columns = ["lambda", "fpdim", "closed_form", "method", "iterations"]
    for lam, value, method, its in zip(ctx.basis, report.radii, report.methods, report.iterations):
        closed = num(rho_closed_form(RhoFunction.of(lam, args.k), n)) if args.mode == "quantum" else "-"
        rec.rows.append([str(lam), num(value), closed, method, its])
    if args.check_hom:
        bad = check_ring_homomorphism(ring, report, 1e-6)
        rec.results["homomorphism_violations"] = len(bad)
        rec.violations += [f"{ctx.basis[i]}*{ctx.basis[j]}: {num(lhs)} vs {num(rhs)}" for i, j, lhs, rhs in bad]
    rec.provenance["tol"] = args.tol
    return rec


def cmd_fusion(args) -> Record:
    _need(args, "k", "r", "lam", "mu")
    fam = FilteredFamily(args.k, "verlinde")
    rec = Record("fusion", {"k": args.k, "r": args.r, "lambda": str(args.lam), "mu": str(args.mu)})
    if args.nu is not None:
        rec.parameters["nu"] = str(args.nu)
        rec.results["coefficient"] = fusion_coefficient(fam, args.lam, args.mu, args.nu, args.r)
    else:
        labels = fam.labels(args.r)
        rec.columns = ["nu", "coeff"]
        for nu in labels:
            c = fusion_coefficient(fam, args.lam, args.mu, nu, args.r)
            if c:
                rec.rows.append([str(nu), c])
    rec.provenance["method"] = "quantum product of Gr(k, k+r) at q=1"
    return rec


def cmd_limit(args) -> Record:
    _need(args, "k", "lam")
    lam = args.lam
    first = lam[0] if lam else 0
    r_max = args.r_max
    rec = Record("limit", {"k": args.k, "lambda": str(lam), "r_max": r_max})
    fam = FilteredFamily(args.k, "verlinde")
    start = max(first, 1)
    if r_max <= start:
        raise UsageError(f"--r-max must exceed {start}")
    rep = fpd_bullet(fam, lam, range(start, r_max + 1), tol=args.limit_tol)
    rf = RhoFunction.of(lam, args.k)
    cf = limit_check(rf, [args.k + r for r in range(start, r_max + 1)])
    rec.results.update(
        target=rep.target,
        last_value=num(rep.raw_limit),
        extrapolated=num(rep.extrapolated),
        final_gap=num(rep.target - rep.raw_limit),
        strictly_increasing=rep.strictly_increasing,
        converged=rep.converged,
    )
    rec.results["asymptotic_constant"] = num(cf.asymptotic_constant)
    methods = sorted({v.method for v in rep.levels})
    rec.provenance.update(methods=",".join(methods), max_closed_form_gap=num(rep.max_closed_form_gap),
                          tol=args.limit_tol)
    if rep.max_closed_form_gap > 1e-8:
        rec.violations.append(f"spectral and closed form differ by {rep.max_closed_form_gap}")
    return rec


def cmd_galkin(args) -> Record:
    rec = Record("galkin", {"k_max": args.k_max, "n_max": args.n_max})
    equalities = []
    checked = 0
    for n in range(2, args.n_max + 1):
        for k in range(1, min(args.k_max, n - 1) + 1):
            rep = galkin_check(k, n)
            checked += 1
            if rep.equality:
                equalities.append(f"({k},{n})")
            if not rep.consistent:
                rec.violations.append(f"k={k} n={n}: n*rho={num(rep.lhs)} rhs={rep.rhs}")
    rec.results.update(checked=checked, violations=len(rec.violations),
                       equality_cases=" ".join(equalities))
    return rec


def cmd_verify(args) -> Record:
    from . import verify

    rec = Record("verify", {"suite": args.suite})
    for name, bad in verify.run(args.suite).items():
        rec.results[name] = "pass" if not bad else f"FAIL ({len(bad)})"
        rec.violations += [f"{name}: {b}" for b in bad]
    return rec


COMMANDS = {
    "rho": cmd_rho, "dim": cmd_dim, "lr": cmd_lr, "qprod": cmd_qprod, "fpdim": cmd_fpdim,
    "fusion": cmd_fusion, "limit": cmd_limit, "galkin": cmd_galkin, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON record")
    common.add_argument("--tol", type=float, default=DEFAULT_TOL)
    common.add_argument("--max-iter", type=int, default=DEFAULT_MAX_ITER)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--no-cache", action="store_true", help="do not read or write table cache")

    def shape(p, *names):
        for name in names:
            dest = "lam" if name == "lambda" else name
            p.add_argument(f"--{name}", dest=dest, type=_partition, metavar="PARTS")

    parser = argparse.ArgumentParser(prog="grassfp", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rho", parents=[common], help="closed-form spectral radius")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    shape(p, "lambda")
    p.add_argument("--exact-check", action="store_true", help="also run power iteration")

    p = sub.add_parser("dim", parents=[common], help="hook-length dimension of S_lambda(C^k)")
    p.add_argument("--k", type=int)
    shape(p, "lambda")

    p = sub.add_parser("lr", parents=[common], help="Littlewood-Richardson coefficient")
    shape(p, "lambda", "mu", "nu")

    p = sub.add_parser("qprod", parents=[common], help="quantum (or classical) product")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    shape(p, "lambda", "mu")
    p.add_argument("--mode", choices=["quantum", "classical"], default="quantum")

    p = sub.add_parser("fpdim", parents=[common], help="FPdim of every basis element")
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--mode", choices=["quantum", "classical"], default="quantum")
    p.add_argument("--check-hom", action="store_true", help="check FPdim is a ring homomorphism")

    p = sub.add_parser("fusion", parents=[common], help="Verlinde fusion coefficients of U(k)")
    p.add_argument("--k", type=int)
    p.add_argument("--r", type=int)
    shape(p, "lambda", "mu", "nu")

    p = sub.add_parser("limit", parents=[common], help="FPdim along the Verlinde filtration")
    p.add_argument("--k", type=int)
    shape(p, "lambda")
    p.add_argument("--r-max", type=int, default=200)
    p.add_argument("--limit-tol", type=float, default=1e-3)

    p = sub.add_parser("galkin", parents=[common], help="Galkin lower bound scan")
    p.add_argument("--k-max", type=int, default=5)
    p.add_argument("--n-max", type=int, default=30)

    p = sub.add_parser("verify", parents=[common], help="run an invariant suite")
    from .verify import SUITES

    p.add_argument("suite", choices=["all", *SUITES])
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        rec = COMMANDS[args.command](args)
    except (UsageError, ParameterError) as exc:
        print(f"grassfp {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantViolation as exc:
        print(f"grassfp {args.command}: invariant violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except GrassfpError as exc:
        print(f"grassfp {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    if args.json:
        print(json.dumps(rec.as_dict(), sort_keys=True, default=_json_default))
    else:
        print(rec.render())
    return EXIT_VIOLATION if rec.violations else EXIT_OK


def _json_default(obj):
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return num(float(obj))
    raise TypeError(f"cannot serialize {type(obj).__name__}")


if __name__ == "__main__":
    sys.exit(main())
