"""CSV tables and PNG figures for the ``report`` command."""

from __future__ import annotations

import csv
import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from . import lattice  # noqa: E402
from .groebner import Budget  # noqa: E402

# PNG metadata carries the matplotlib version by default; drop it for stable bytes
_PNG_META = {"Software": None}

CERT_COLUMNS = [
    "n", "k", "ambient_dim", "generator_count", "variety_dim", "is_complete_intersection",
    "singular_locus_dim", "is_reduced_certified", "tangent_dim", "spairs_reduced", "basis_size", "error",
]


def certificate_rows(instances, budget: Budget) -> tuple:
    from .cli import certify_record

    rows, ok = [], True
    for n, k in instances:
        record, passed = certify_record(n, k, budget)
        ok = ok and passed
        gb = record.get("stats", {}).get("groebner", {})
        row = {c: record.get(c) for c in CERT_COLUMNS}
        row["spairs_reduced"] = gb.get("spairs_reduced")
        row["basis_size"] = gb.get("basis_size")
        rows.append(row)
    return rows, ok


def _write_csv(path: str, columns, rows) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.DictWriter(fh, fieldnames=columns, lineterminator="\n")
        writer.writeheader()
        for row in rows:
            writer.writerow({c: "" if row.get(c) is None else row[c] for c in columns})


def plot_dimensions(rows, path: str) -> None:
    labels = [f"({r['n']},{r['k']})" for r in rows]
    xs = range(len(rows))
    width = 0.27
    fig, ax = plt.subplots(figsize=(6, 3.5))
    series = [("ambient_dim", "ambient"), ("variety_dim", "variety"), ("singular_locus_dim", "singular locus")]
    for pos, (key, name) in enumerate(series):
        vals = [r[key] if r[key] is not None else 0 for r in rows]
        ax.bar([x + (pos - 1) * width for x in xs], vals, width, label=name)
    ax.set_xticks(list(xs))
    ax.set_xticklabels(labels)
    ax.set_xlabel("(n, k)")
    ax.set_ylabel("dimension")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata=_PNG_META)
    plt.close(fig)


def closure_rows(n: int, bound) -> list:
    datum = lattice.RootDatum.type_a(n)
    seeds = [datum.fundamental(i) * (k * n) for k in (1, 2, 3) for i in (1, n - 1)]
    closure = lattice.generate_closure(seeds, bound)
    rows = []
    for lam in sorted(closure, key=lambda x: (x.height, x.coords)):
        rows.append({
            "coords": lattice.format_coords(lam),
            "pairings": ",".join(str(p) for p in lam.pairings()),
            "height": str(lam.height),
            "dim_orbit": lattice.dim_orbit(lam),
            "two_adjacent": lattice.is_two_adjacent_fundamental(lam),
        })
    return rows


def plot_closure(rows, n: int, path: str) -> None:
    """Closure elements by their first two fundamental coordinates."""
    fig, ax = plt.subplots(figsize=(4.5, 4.5))
    for flag, marker, name in ((True, "o", "two-adjacent"), (False, "x", "other")):
        pts = [tuple(int(v) for v in r["pairings"].split(",")[:2]) for r in rows if r["two_adjacent"] == flag]
        if pts:
            ax.scatter([p[0] for p in pts], [p[1] for p in pts], marker=marker, label=name)
    ax.set_xlabel(r"$\langle\lambda, \alpha_1\rangle$")
    ax.set_ylabel(r"$\langle\lambda, \alpha_2\rangle$")
    ax.set_title(f"meet/summand closure, n = {n}")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=100, metadata=_PNG_META)
    plt.close(fig)


def write_report(out_dir: str, instances, budget: Budget, lattice_n: int = 3, bound="12") -> tuple:
    os.makedirs(out_dir, exist_ok=True)
    rows, ok = certificate_rows(instances, budget)
    paths = [os.path.join(out_dir, name) for name in
             ("certificates.csv", "dimensions.png", "closure.csv", "closure.png")]
    _write_csv(paths[0], CERT_COLUMNS, rows)
    plot_dimensions(rows, paths[1])
    crow = closure_rows(lattice_n, bound)
    _write_csv(paths[2], ["coords", "pairings", "height", "dim_orbit", "two_adjacent"], crow)
    plot_closure(crow, lattice_n, paths[3])
    return paths, ok
