"""Reducedness certificates for the slice ideals.

The pipeline checks Serre's criterion in computable form:

* S1 -- the ideal is a complete intersection (Groebner dimension equals
  ambient dimension minus the number of generators), hence Cohen-Macaulay.
* R0 -- the locus where the Jacobian drops rank has dimension strictly
  below the variety, so the scheme is generically smooth.

Together these give reducedness.  The tangent-space witness
(:func:`find_smooth_point`) independently exhibits a point whose tangent
dimension equals the expected orbit dimension.
"""

from __future__ import annotations

import random
import time
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from math import comb
from typing import Sequence

from gmpy2 import mpq

from .errors import BudgetExceeded, MinorExplosion, PointNotOnVariety, SearchExhausted
from .groebner import GREVLEX, Budget, buchberger, krull_dimension
from .polynomial import Polynomial, VarTable, format_rational
from .slices import slice_generators, x_name

MINOR_CAP = 5000


@dataclass
class Certificate:
    n: int
    k: int
    ambient_dim: int
    generator_count: int
    variety_dim: int | None = None
    is_complete_intersection: bool = False
    singular_locus_dim: int | None = None
    is_reduced_certified: bool = False
    tangent_point: list | None = None
    tangent_dim: int | None = None
    stats: dict = field(default_factory=dict)
    error: str | None = None

    def to_dict(self) -> dict:
        return asdict(self)


def jacobian(gens: Sequence[Polynomial]) -> list:
    """Matrix of partials ``d gen_i / d var_j`` over the generators' table."""
    if not gens:
        return []
    nvars = len(gens[0].table)
    return [[g.diff(j) for j in range(nvars)] for g in gens]


def exact_rank(rows: list) -> int:
    """Rank of a rational matrix by fraction-exact Gaussian elimination."""
    m = [[mpq(x) for x in row] for row in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pv = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / pv
                m[r] = [a - f * b for a, b in zip(m[r], m[rank])]
        rank += 1
    return rank


def _poly_det(rows: list, table: VarTable) -> Polynomial:
    # cofactor expansion of a small polynomial matrix, memoised on columns
    size = len(rows)
    memo: dict = {}

    def minor(r, cols):
        if r == size:
            return Polynomial.constant(table, 1)
        if cols in memo:
            return memo[cols]
        total = Polynomial.zero(table)
        for pos, c in enumerate(cols):
            entry = rows[r][c]
            if entry.is_zero():
                continue
            term = entry * minor(r + 1, cols[:pos] + cols[pos + 1:])
            total = total - term if pos % 2 else total + term
        memo[cols] = total
        return total

    return minor(0, tuple(range(size)))


def jacobian_minors(gens: Sequence[Polynomial], size: int, cap: int = MINOR_CAP) -> list:
    J = jacobian(gens)
    nvars = len(gens[0].table)
    if comb(nvars, size) > cap:
        raise MinorExplosion(f"binomial({nvars}, {size}) = {comb(nvars, size)} exceeds cap {cap}")
    table = gens[0].table
    minors = []
    for rows in combinations(range(len(J)), size):
        for cols in combinations(range(nvars), size):
            d = _poly_det([[J[r][c] for c in cols] for r in rows], table)
            if not d.is_zero():
                minors.append(d)
    return minors


def singular_locus_dim(gens: Sequence[Polynomial], codim: int, budget: Budget | None = None, cap: int = MINOR_CAP) -> int:
    """Dimension of V(I + codim x codim Jacobian minors); -1 when empty."""
    minors = jacobian_minors(gens, codim, cap)
    gb = buchberger(list(gens) + minors, GREVLEX, budget)
    return krull_dimension(gb)


def complete_intersection_cert(n: int, k: int, budget: Budget | None = None) -> Certificate:
    gens = slice_generators(n, k)
    cert = Certificate(n=n, k=k, ambient_dim=k * n * n, generator_count=len(gens))
    start = time.monotonic()
    try:
        gb = buchberger(gens, GREVLEX, budget)
    except BudgetExceeded as exc:
        cert.stats = {"groebner": exc.stats}
        cert.error = f"BudgetExceeded: {exc}"
        exc.certificate = cert
        raise
    cert.variety_dim = krull_dimension(gb)
    cert.is_complete_intersection = cert.ambient_dim - cert.variety_dim == cert.generator_count
    cert.stats = {"groebner": dict(gb.stats), "ci_seconds": round(time.monotonic() - start, 6)}
    return cert


def certify_reduced(n: int, k: int, budget: Budget | None = None, cap: int = MINOR_CAP, witness: bool = True) -> Certificate:
    """Run the full pipeline; budget failures carry the partial certificate."""
    cert = complete_intersection_cert(n, k, budget)
    if cert.is_complete_intersection:
        gens = slice_generators(n, k)
        start = time.monotonic()
        try:
            minors = jacobian_minors(gens, cert.generator_count, cap)
            gb = buchberger(list(gens) + minors, GREVLEX, budget)
        except (BudgetExceeded, MinorExplosion) as exc:
            cert.error = f"{type(exc).__name__}: {exc}"
            if isinstance(exc, BudgetExceeded):
                cert.stats["singular_groebner"] = exc.stats
            exc.certificate = cert
            raise
        cert.singular_locus_dim = krull_dimension(gb)
        cert.stats["singular_groebner"] = dict(gb.stats)
        cert.stats["jacobian_minors"] = len(minors)
        cert.stats["singular_seconds"] = round(time.monotonic() - start, 6)
        cert.is_reduced_certified = cert.singular_locus_dim < cert.variety_dim
    if witness:
        point = find_smooth_point(n, k)
        cert.tangent_point = [[[format_rational(v) for v in row] for row in mat] for mat in point_matrices(point, n, k)]
        cert.tangent_dim = tangent_dim_at(slice_generators(n, k), point)
    return cert


def certify_ideal(gens: Sequence[Polynomial], budget: Budget | None = None, cap: int = MINOR_CAP) -> dict:
    """The same R0 + S1 test for an arbitrary generator list."""
    gb = buchberger(gens, GREVLEX, budget)
    nvars = len(gens[0].table)
    dim = krull_dimension(gb)
    ci = nvars - dim == len(gens)
    sing = singular_locus_dim(gens, len(gens), budget, cap) if ci else None
    return {
        "variety_dim": dim,
        "is_complete_intersection": ci,
        "singular_locus_dim": sing,
        "is_reduced_certified": bool(ci and sing is not None and sing < dim),
    }


def tangent_dim_at(gens: Sequence[Polynomial], point) -> int:
    """``#vars - rank J(point)``; ``point`` maps names to rationals or is a vector."""
    table = gens[0].table
    if not isinstance(point, dict):
        point = dict(zip(table.names, point))
    for g in gens:
        if g.evaluate(point) != 0:
            raise PointNotOnVariety(f"generator does not vanish at the point: {g.to_text()}")
    J = jacobian(gens)
    values = [[entry.evaluate(point) if not entry.is_zero() else mpq(0) for entry in row] for row in J]
    return len(table) - exact_rank(values)


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][l] * b[l][j] for l in range(n)), mpq(0)) for j in range(n)] for i in range(n)]


def unipotent_product_point(factors: Sequence, n: int, k: int) -> dict:
    """Chart coordinates of ``(I + N_1 t^-1) ... (I + N_m t^-1)``, m <= k."""
    # coefficient matrices of the running product, index = power of t^-1
    coeffs = [[[mpq(int(i == j)) for j in range(n)] for i in range(n)]]
    for N in factors:
        N = [[mpq(x) for x in row] for row in N]
        shifted = [_matmul(c, N) for c in coeffs]
        new = [[list(r) for r in mat] for mat in coeffs] + [[[mpq(0)] * n for _ in range(n)]]
        for s, mat in enumerate(shifted):
            for i in range(n):
                for j in range(n):
                    new[s + 1][i][j] += mat[i][j]
        coeffs = new
    point = {}
    for s in range(1, k + 1):
        mat = coeffs[s] if s < len(coeffs) else [[mpq(0)] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                point[x_name(i + 1, j + 1, s)] = mat[i][j]
    return point


def point_matrices(point: dict, n: int, k: int) -> list:
    return [[[point[x_name(i, j, s)] for j in range(1, n + 1)] for i in range(1, n + 1)] for s in range(1, k + 1)]


def _jordan(n: int, transpose: bool = False):
    J = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        if transpose:
            J[i + 1][i] = 1
        else:
            J[i][i + 1] = 1
    return J


def _random_nilpotent(n: int, rng: random.Random):
    U = [[rng.randint(-2, 2) if j > i else 0 for j in range(n)] for i in range(n)]
    perm = list(range(n))
    rng.shuffle(perm)
    # P U P^{-1} stays nilpotent and keeps entries in [-2, 2]
    return [[U[perm[i]][perm[j]] for j in range(n)] for i in range(n)]


def find_smooth_point(n: int, k: int, attempts: int = 200, seed: int = 0) -> dict:
    """A point of the slice whose tangent dimension equals kn(n-1)."""
    gens = slice_generators(n, k)
    target = k * n * (n - 1)
    blocks = [_jordan(n), _jordan(n, transpose=True)]
    candidates = [list(c) for c in product(blocks, repeat=k)]
    rng = random.Random(seed)
    for _ in range(attempts):
        candidates.append([_random_nilpotent(n, rng) for _ in range(k)])
    for factors in candidates:
        point = unipotent_product_point(factors, n, k)
        if tangent_dim_at(gens, point) == target:
            return point
    raise SearchExhausted(f"no smooth point found for n={n}, k={k} after {len(candidates)} candidates")
