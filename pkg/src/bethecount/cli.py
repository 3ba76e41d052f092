"""Command-line front end.

    bethecount count  --r 1 --twos 1 --L 4 --M 2
    bethecount mu     --r 2 --twos 2 --L 2 --M 2,1 --explain
    bethecount symmetry --r 3 --zeros "t1,t3"
    bethecount check  --r 2 --twos 1 --L 4 --dplus a2
    bethecount verify --max-L 3

Exit codes: 0 success, 1 check failed, 2 bad input, 3 resource guard.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time

from . import characters, counting, occupancy, peeling, rootsys, superalg
from .errors import SizeGuardError, ValidationError

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


def _ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(t) for t in text.split(",") if t.strip())
    except ValueError:
        raise ValidationError(f"expected comma-separated integers, got {text!r}") from None


def _sites(text: str) -> list[tuple[int, ...]]:
    return [_ints(part) for part in text.split(";") if part.strip()]


def _emit(rows: list[dict], fmt: str, out, columns: list[str] | None = None):
    if fmt == "json":
        out.write("[\n" + ",\n".join(json.dumps(row) for row in rows) + "\n]\n")
        return
    columns = columns or (list(rows[0]) if rows else [])

    def cell(v):
        if isinstance(v, list):
            return " ".join(cell(x) for x in v) if v and isinstance(v[0], list) else ",".join(map(str, v))
        if isinstance(v, bool):
            return "pass" if v else "FAIL"
        return str(v)

    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([cell(row.get(c, "")) for c in columns])
        out.write(buf.getvalue())
        return
    table = [columns] + [[cell(row.get(c, "")) for c in columns] for row in rows]
    widths = [max(len(r[i]) for r in table) for i in range(len(columns))]
    for r in table:
        out.write("  ".join(v.rjust(w) for v, w in zip(r, widths)).rstrip() + "\n")


def _super(args):
    if args.super is None:
        return None
    mn = _ints(args.super)
    if mn not in occupancy.SUPPORTED_SUPER:
        raise ValidationError(f"--super must be 1,1 or 1,2, got {args.super}")
    return mn


def _spec(args) -> occupancy.SpinChainSpec:
    if args.r is None:
        raise ValidationError("--r (or --super) is required")
    return occupancy.SpinChainSpec(args.r, args.twos, args.L)


def _decomp(args, r):
    if args.dplus is not None and args.zeros is not None:
        raise ValidationError("--dplus and --zeros are mutually exclusive")
    if args.dplus is not None:
        return rootsys.decomposition_from_subset(r, rootsys.parse_root_list(args.dplus, r))
    if args.zeros is not None:
        return rootsys.preserved_roots(r, rootsys.parse_zeros(args.zeros, r))
    return None


def cmd_count(args, out) -> int:
    mn = _super(args)
    if mn == (1, 1):
        args.r = 1
    if mn == (1, 2):
        if args.M is None:
            raise ValidationError("count --super 1,2 needs --M")
        M1, M2 = _ints(args.M)
        rows = [{"M": [M1, M2], "c": str(occupancy.tj_c(args.twos, args.L, M1, M2))}]
        _emit(rows, args.format, out)
        return EXIT_OK
    if args.sites is not None:
        if args.r is None or args.M is None:
            raise ValidationError("--sites needs --r and --M")
        M = _ints(args.M)
        value = occupancy.mixed_c(_sites(args.sites), args.r, M)
        _emit([{"M": list(M), "c": str(value)}], args.format, out)
        return EXIT_OK
    spec = _spec(args)
    if args.impurity is not None:
        if args.M is None:
            raise ValidationError("--impurity needs --M")
        M = _ints(args.M)
        value = occupancy.kondo_c(spec, args.impurity, M)
        _emit([{"M": list(M), "c": str(value)}], args.format, out)
        return EXIT_OK
    if args.M is not None:
        M = _ints(args.M)
        _emit([{"M": list(M), "c": str(occupancy.c_coefficient(spec, M))}], args.format, out)
    else:
        _emit(counting.count_table(spec), args.format, out, ["M", "c"])
    return EXIT_OK


def cmd_mu(args, out) -> int:
    mn = _super(args)
    if mn is not None:
        if args.M is not None:
            M = _ints(args.M)
            value = superalg.mu_super(mn, args.twos, args.L, M)
            rows = [{"M": list(M), "mu": str(value), "dim": str(superalg.dim_super(mn, args.L, M))}]
        else:
            rows = [{"M": list(M), "mu": str(superalg.mu_super(mn, args.twos, args.L, M)),
                     "dim": str(superalg.dim_super(mn, args.L, M))}
                    for M in superalg.iter_super_magnons(mn, args.twos, args.L)]
        if args.explain:
            box = _ints(args.M) if args.M is not None else (args.twos * args.L,) * (sum(mn) - 1)
            _explain(characters.super_inverse(*mn, box=box), args, out)
        _emit(rows, args.format, out, ["M", "mu", "dim"])
        return EXIT_OK

    spec = _spec(args)
    decomp = _decomp(args, spec.rank)
    if args.explain:
        inv = (characters.verma_inverse(rootsys.positive_roots(spec.rank), spec.rank)
               if decomp is None else characters.partial_inverse(decomp))
        _explain(inv, args, out)
    charge = _ints(args.charge) if args.charge else counting.default_charge(decomp)
    if args.M is not None:
        M = _ints(args.M)
        if decomp is None:
            lam = counting.young_from_magnons(spec, M)
            row = {"M": list(M), "lambda": list(lam) if lam else None,
                   "mu": str(counting.mu_untwisted(spec, M)),
                   "dim": str(counting.dim_irrep(lam) if lam else 0)}
        else:
            lab = counting.branch_label(spec, M, decomp)
            row = {"M": list(M), "Lambda": [list(c) for c in lab.components] if lab else None,
                   "mu": str(counting.mu_partial(spec, M, decomp)),
                   "dim": str(counting.dim_branched(lab) if lab else 0)}
            if lab and charge:
                row["charges"] = [charge[0] + charge[1] * x for x in lab.u1_rows]
        rows = [row]
    else:
        rows = counting.mu_table(spec, decomp, charge=charge, nonzero=args.nonzero)
    _emit(rows, args.format, out)
    return EXIT_OK


def _explain(inv, args, out):
    formula = characters.explain(inv, "c")
    if args.format == "json":
        sys.stderr.write(formula + "\n")
    else:
        out.write(f"# mu = {formula}\n")


def cmd_symmetry(args, out) -> int:
    if args.r is None:
        raise ValidationError("--r is required")
    if args.zeros is None and args.dplus is None:
        args.zeros = ""
    decomp = _decomp(args, args.r)
    row = {"algebra": decomp.describe(),
           "blocks": [list(b) for b in decomp.blocks],
           "preserved_roots": [r.name for r in decomp.preserved_roots],
           "u1": decomp.n_u1}
    if args.format == "human":
        out.write(f"{row['algebra']}\n")
        out.write(f"blocks: {' '.join('{' + ','.join(map(str, b)) + '}' for b in decomp.blocks)}\n")
        out.write(f"preserved roots: {', '.join(row['preserved_roots']) or '(none)'}\n")
    else:
        _emit([row], args.format, out)
    return EXIT_OK


def cmd_check(args, out) -> int:
    mn = _super(args)
    if mn is not None:
        report = superalg.super_completeness(mn, args.twos, args.L)
    elif args.impurity is not None:
        spec = _spec(args)
        report = counting.mixed_completeness([(args.impurity,)] + [(spec.twos,)] * spec.length, spec.rank)
    else:
        spec = _spec(args)
        report = counting.completeness_check(spec, _decomp(args, spec.rank))
    _emit([report.as_dict()], args.format, out, ["total", "target", "labels", "pass"])
    return EXIT_OK if report.passed else EXIT_FAIL


def verify_suite(max_L: int = 5, perturb: bool = False):
    """Cross-check the counting paths against their oracles; yields ``(name, ok, seconds)``."""
    def timed(name, fn):
        t0 = time.perf_counter()
        ok = fn()
        return name, ok, time.perf_counter() - t0

    def c_vs_brute():
        for r in range(1, 4):
            for twos in range(1, 4):
                for L in range(1, min(max_L, 5) + 1):
                    spec = occupancy.SpinChainSpec(r, twos, L)
                    fast = dict(occupancy.c_table(spec))
                    if perturb:
                        key = next(iter(sorted(fast)))
                        fast[key] += 1
                    if fast != dict(occupancy.brute_force_table(spec)):
                        return False
        return True

    def mu_vs_hook():
        for r in range(1, 5):
            for L in range(1, min(max_L + 3, 8) + 1):
                spec = occupancy.SpinChainSpec(r, 1, L)
                for M in occupancy.iter_magnons(r, L):
                    lam = counting.young_from_magnons(spec, M)
                    want = counting.hook_length_mu(lam) if lam else 0
                    if counting.mu_untwisted(spec, M) != want:
                        return False
        return True

    def mu_vs_peel():
        for r in range(1, 3):
            for twos in range(1, 3):
                for L in range(1, min(max_L, 4) + 1):
                    spec = occupancy.SpinChainSpec(r, twos, L)
                    table = peeling.peel(spec)
                    if any(counting.mu_untwisted(spec, M) != table.get(M, 0)
                           for M in occupancy.iter_magnons(r, spec.size)):
                        return False
        return True

    yield timed("c == brute force", c_vs_brute)
    yield timed("mu == hook length (s=1/2)", mu_vs_hook)
    yield timed("mu == character peeling", mu_vs_peel)


def cmd_verify(args, out) -> int:
    rows = []
    for name, ok, secs in verify_suite(args.max_L, args.perturb):
        rows.append({"check": name, "pass": ok, "seconds": f"{secs:.2f}"})
    _emit(rows, args.format, out, ["check", "pass", "seconds"])
    return EXIT_OK if all(r["pass"] for r in rows) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bethecount", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, chain=True):
        p.add_argument("--r", type=int, help="rank of su(r+1)")
        p.add_argument("--format", choices=["json", "csv", "human"], default="human")
        if chain:
            p.add_argument("--super", help="superalgebra as m,n (1,1 or 1,2)")
            p.add_argument("--twos", type=int, default=1, help="twice the site spin")
            p.add_argument("--L", type=int, default=1, help="chain length")
            p.add_argument("--M", help="comma-separated magnon numbers; omit for a full table")

    def twist(p):
        p.add_argument("--dplus", help="preserved roots, e.g. 'a1,a2+a3'")
        p.add_argument("--zeros", help="vanishing twist combinations, e.g. 't1,t2+t3'")

    p = sub.add_parser("count", help="restricted-occupancy coefficients c(M)")
    common(p)
    p.add_argument("--impurity", type=int, help="2s' of a single impurity site")
    p.add_argument("--sites", help="per-site diagrams, e.g. '2;1;2,1'")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("mu", help="multiplicities / branching coefficients")
    common(p)
    twist(p)
    p.add_argument("--explain", action="store_true", help="print the difference stencil")
    p.add_argument("--charge", help="u(1) charge a,b meaning a + b*row")
    p.add_argument("--nonzero", action="store_true", help="drop rows with mu = 0")
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("symmetry", help="unbroken subalgebra of a twist pattern")
    common(p, chain=False)
    twist(p)
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("check", help="Hilbert-space completeness")
    common(p)
    twist(p)
    p.add_argument("--impurity", type=int, help="2s' of a single impurity site")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", help="oracle cross-check suite")
    p.add_argument("--max-L", type=int, default=5, dest="max_L")
    p.add_argument("--format", choices=["json", "csv", "human"], default="human")
    p.add_argument("--perturb", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except ValidationError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except SizeGuardError as exc:
        sys.stderr.write(f"resource guard: {exc}\n")
        return EXIT_GUARD


def main_entry():
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
