"""Command-line front end: ``grslice <command> ...``.

Exit codes: 0 pass, 2 usage, 3 certificate failure or budget,
4 lattice precondition, 5 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from itertools import combinations

from . import lattice, poisson
from .certify import MINOR_CAP, certify_reduced
from .errors import (
    BudgetExceeded,
    GrsliceError,
    InvalidSize,
    LabelInvalid,
    LatticeError,
    MinorExplosion,
    SearchExhausted,
    SizeBudgetExceeded,
    TruncationExceeded,
)
from .groebner import Budget
from .slices import slice_generators

EXIT_OK, EXIT_USAGE, EXIT_CERT, EXIT_LATTICE, EXIT_VERIFY = 0, 2, 3, 4, 5


class UsageError(Exception):
    pass


def _emit(obj, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        _emit_text(obj, out, "")


def _emit_text(obj, out, prefix: str) -> None:
    if isinstance(obj, dict):
        for key in sorted(obj):
            value = obj[key]
            name = f"{prefix}{key}"
            if isinstance(value, (dict, list)) and value and not _flat_list(value):
                _emit_text(value, out, name + ".")
            else:
                out.write(f"{name}: {_scalar(value)}\n")
    elif isinstance(obj, list):
        for pos, value in enumerate(obj):
            if isinstance(value, (dict, list)):
                _emit_text(value, out, f"{prefix}{pos}.")
            else:
                out.write(f"{prefix}{pos}: {_scalar(value)}\n")


def _flat_list(value) -> bool:
    return isinstance(value, list) and all(not isinstance(v, (dict, list)) for v in value)


def _scalar(value) -> str:
    if isinstance(value, list):
        return ", ".join(_scalar(v) for v in value)
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def cmd_generators(args, out) -> int:
    if args.n < 2 or args.k < 1:
        raise UsageError(f"need n >= 2 and k >= 1, got n={args.n}, k={args.k}")
    gens = slice_generators(args.n, args.k)
    report = {
        "n": args.n,
        "k": args.k,
        "ambient_dim": args.k * args.n * args.n,
        "expected_dim": args.k * args.n * (args.n - 1),
        "generator_count": len(gens),
        "generators": [g.to_text() for g in gens],
    }
    if args.format == "json":
        _emit(report, "json", out)
    else:
        out.write(f"n: {args.n}\nk: {args.k}\nambient_dim: {report['ambient_dim']}\n")
        out.write(f"expected_dim: {report['expected_dim']}\ngenerator_count: {len(gens)}\n")
        for r, g in enumerate(report["generators"], start=1):
            out.write(f"det^({r}) = {g}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# certify
# ---------------------------------------------------------------------------

def _strip_timings(obj):
    if isinstance(obj, dict):
        return {k: _strip_timings(v) for k, v in obj.items() if not k.endswith("_seconds")}
    return obj


def _parse_instances(text: str) -> list:
    out = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            n, k = (int(x) for x in chunk.split(","))
        except ValueError as exc:
            raise UsageError(f"malformed instance {chunk!r}; expected n,k") from exc
        out.append((n, k))
    if not out:
        raise UsageError("empty instance list")
    return out


def certify_record(n: int, k: int, budget: Budget, cap: int = MINOR_CAP, witness: bool = True, timings: bool = False) -> tuple:
    """``(record, passed)`` for one instance; budget failures keep the partial certificate."""
    try:
        cert = certify_reduced(n, k, budget, cap, witness)
        record = cert.to_dict()
        passed = cert.is_reduced_certified
    except (BudgetExceeded, MinorExplosion) as exc:
        record = exc.certificate.to_dict()
        passed = False
    except (SearchExhausted, SizeBudgetExceeded) as exc:
        record = {"n": n, "k": k, "error": f"{type(exc).__name__}: {exc}"}
        passed = False
    return (record if timings else _strip_timings(record)), passed


def cmd_certify(args, out) -> int:
    instances = _parse_instances(args.batch) if args.batch else [(args.n, args.k)]
    for n, k in instances:
        if n < 2 or k < 1:
            raise UsageError(f"need n >= 2 and k >= 1, got n={n}, k={k}")
    budget = Budget.from_env(max_pairs=args.max_pairs, max_degree=args.max_degree, max_seconds=args.max_seconds)

    def run(inst):
        return certify_record(inst[0], inst[1], budget, args.minor_cap, not args.no_witness, args.timings)

    if len(instances) == 1:
        results = [run(instances[0])]
    else:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            results = list(pool.map(run, instances))
    records = [r for r, _ in results]
    _emit(records[0] if not args.batch else records, args.format, out)
    return EXIT_OK if all(p for _, p in results) else EXIT_CERT


# ---------------------------------------------------------------------------
# lattice
# ---------------------------------------------------------------------------

def _coweight(text: str, n: int) -> lattice.Coweight:
    if text is None:
        raise UsageError("missing coweight argument")
    try:
        lam = lattice.parse_coweight(text, n)
    except (ValueError, LatticeError) as exc:
        raise UsageError(str(exc)) from exc
    return lam


def cmd_lattice(args, out) -> int:
    if args.n < 2:
        raise UsageError("need n >= 2")
    op = args.op
    if op == "meet":
        result = lattice.meet(_coweight(args.a, args.n), _coweight(args.b, args.n))
        report = {"meet": lattice.format_coords(result)}
    elif op == "dim":
        report = {"dim": lattice.dim_orbit(_coweight(args.a, args.n))}
    elif op == "triangle":
        try:
            apex_a, apex_b = Fraction(args.a), Fraction(args.b)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise UsageError("triangle needs --a and --b apex coordinates") from exc
        report = {"sample": lattice.format_coords(lattice.triangle_coweight(args.n, apex_a, apex_b))}
    else:
        seeds = [_coweight(s, args.n) for s in (args.a or "").split(";") if s.strip()]
        if not seeds:
            raise UsageError("closure needs seeds in --a, separated by ';'")
        closure = lattice.generate_closure(seeds, args.bound)
        items = sorted(closure, key=lambda lam: (lam.height, lam.coords))
        report = {
            "closure": [lattice.format_coords(lam) for lam in items],
            "count": len(items),
            "all_two_adjacent": all(lattice.is_two_adjacent_fundamental(lam) for lam in items),
        }
    if args.format == "json":
        _emit(report, "json", out)
    else:
        for key in sorted(report):
            value = report[key]
            if isinstance(value, list):
                out.write(f"{key}:\n" + "".join(f"  {v}\n" for v in value))
            else:
                out.write(f"{_scalar(value)}\n" if len(report) == 1 else f"{key}: {_scalar(value)}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# poisson
# ---------------------------------------------------------------------------

def _parse_label(text: str, n: int) -> poisson.MinorLabel:
    """``i:rows:cols`` with rows and cols as comma lists, e.g. ``2:1,2:1,3``."""
    try:
        i, rows, cols = text.split(":")
        label = poisson.MinorLabel(int(i), tuple(int(x) for x in rows.split(",")), tuple(int(x) for x in cols.split(",")))
    except ValueError as exc:
        raise UsageError(f"malformed label {text!r}; expected i:rows:cols") from exc
    label.validate(n)
    return label


def all_labels(n: int) -> list:
    return [poisson.MinorLabel(i, I, J) for i in range(1, n + 1)
            for I in combinations(range(1, n + 1), i) for J in combinations(range(1, n + 1), i)]


def cmd_poisson_verify(args, out) -> int:
    n, N = args.n, args.N
    if n < 2 or N < 1:
        raise UsageError("need n >= 2 and N >= 1")
    check = args.check
    if check == "axioms":
        verdicts = poisson.verify_axioms(n, N, args.sample, args.seed)
    elif check == "minors":
        chart = poisson.GroupChart(n, N)
        firsts = [_parse_label(args.label1, n)] if args.label1 else all_labels(n)
        seconds = [_parse_label(args.label2, n)] if args.label2 else all_labels(n)
        verdicts = [poisson.verify_minor_bracket_identity(a, b, chart) for a in firsts for b in seconds]
    elif check == "lemma-f":
        if args.kk is None or args.j is None:
            raise UsageError("lemma-f needs --j and --kk")
        if not 1 <= args.j <= n - 1 or args.kk < 1:
            raise UsageError("need 1 <= j <= n-1 and kk >= 1")
        chart = poisson.GroupChart(n, N)
        if args.label:
            labels = [_parse_label(args.label, n)]
        else:
            labels = [poisson.MinorLabel(i, poisson.highest(i), J) for i in range(1, n + 1)
                      for J in combinations(range(1, n + 1), i)]
        verdicts = [poisson.verify_lemma_bracket_f(args.j, args.kk, lab, chart) for lab in labels]
    else:
        if args.k is None:
            raise UsageError("ideal-compare needs --k")
        budget = Budget.from_env()
        try:
            verdicts = [poisson.compare_ideals_mu_zero(n, args.k, N, budget)]
        except BudgetExceeded as exc:
            verdicts = [poisson.Verdict("ideal-compare", {"n": n, "k": args.k}, N, False, f"BudgetExceeded: {exc}")]
    records = [v.to_dict() for v in verdicts]
    ok = all(v.verdict for v in verdicts)
    if args.format == "json":
        _emit(records, "json", out)
    else:
        for r in records:
            line = f"{r['check']} N={r['truncation']} {json.dumps(r['parameters'], sort_keys=True)}: {'pass' if r['verdict'] else 'FAIL'}"
            out.write(line + "\n")
            if r["witness"]:
                out.write(f"  witness: {r['witness']}\n")
    return EXIT_OK if ok else EXIT_VERIFY


# ---------------------------------------------------------------------------
# report
# ---------------------------------------------------------------------------

def cmd_report(args, out) -> int:
    from .plotting import write_report

    instances = _parse_instances(args.instances)
    budget = Budget.from_env(max_pairs=args.max_pairs, max_degree=args.max_degree, max_seconds=args.max_seconds)
    paths, ok = write_report(args.out, instances, budget, args.lattice_n, args.bound)
    for p in paths:
        out.write(f"{p}\n")
    return EXIT_OK if ok else EXIT_CERT


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grslice", description="Affine Grassmannian slice toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def fmt(p):
        p.add_argument("--format", choices=["text", "json"], default="text")

    def budgets(p):
        p.add_argument("--max-pairs", type=int, default=None, help="pair-reduction cap (default 10^6)")
        p.add_argument("--max-degree", type=int, default=None, help="intermediate degree cap (default 40)")
        p.add_argument("--max-seconds", type=float, default=None, help="wall-clock cap per Groebner run (default none)")

    p = sub.add_parser("generators", help="print det^(r) for the slice of kn varpi_1")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    fmt(p)

    p = sub.add_parser("certify", help="reducedness certificate")
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--batch", help="instances 'n,k;n,k;...' run in parallel, reported in input order")
    p.add_argument("--workers", type=int, default=4)
    p.add_argument("--minor-cap", type=int, default=MINOR_CAP)
    p.add_argument("--no-witness", action="store_true", help="skip the smooth-point search")
    p.add_argument("--timings", action="store_true", help="include wall times (output is then not byte-stable)")
    budgets(p)
    p.add_argument("--format", choices=["text", "json"], default="json")

    p = sub.add_parser("lattice", help="coweight calculus")
    p.add_argument("op", choices=["meet", "closure", "dim", "triangle"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", help="coweight (comma-separated coroot coordinates); closure seeds separated by ';'; triangle apex x")
    p.add_argument("--b", help="second coweight; triangle apex height")
    p.add_argument("--bound", default="12", help="height bound for closure")
    fmt(p)

    p = sub.add_parser("poisson-verify", help="symbolic checks of the Poisson bracket")
    p.add_argument("check", choices=["axioms", "minors", "lemma-f", "ideal-compare"])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--N", type=int, default=3)
    p.add_argument("--k", type=int)
    p.add_argument("--j", type=int)
    p.add_argument("--kk", type=int)
    p.add_argument("--label", help="gamma label i:rows:cols for lemma-f")
    p.add_argument("--label1")
    p.add_argument("--label2")
    p.add_argument("--sample", type=int, help="number of Jacobi triples to sample")
    p.add_argument("--seed", type=int, default=0)
    fmt(p)

    p = sub.add_parser("report", help="write CSV tables and PNG figures")
    p.add_argument("--out", required=True)
    p.add_argument("--instances", default="2,1;2,2;3,1")
    p.add_argument("--lattice-n", type=int, default=3)
    p.add_argument("--bound", default="12")
    budgets(p)
    return parser


COMMANDS = {
    "generators": cmd_generators,
    "certify": cmd_certify,
    "lattice": cmd_lattice,
    "poisson-verify": cmd_poisson_verify,
    "report": cmd_report,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, InvalidSize, LabelInvalid, TruncationExceeded) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except LatticeError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_LATTICE
    except GrsliceError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_CERT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
