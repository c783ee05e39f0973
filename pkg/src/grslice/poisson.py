"""Rational r-matrix Poisson bracket on truncated charts of G_1[[t^-1]] for SL_n.

A :class:`GroupChart` of order ``N`` has coordinates ``g[i][j][s]``
(``1 <= s <= N``) for ``g(t) = I + sum_s g^(s) t^-s``; the SL condition
contributes the relations ``det(g(t)) = 1`` up to order ``N``.

Brackets of generators come from the coefficient recursion of

    (u - v) {g_ij(u), g_kl(v)} = g_il(u) g_kj(v) - g_kj(u) g_il(v),

which is the minor-bracket formula for the vector representation with the
trace-form Casimir (the scalar part of the sl_n Casimir cancels).  Solving
the recursion with ``{g^(0), .} = 0`` gives

    {g_ij^(r), g_kl^(s)} = sum_{t=0}^{r-1} g_il^(r-1-t) g_kj^(s+t) - g_kj^(r-1-t) g_il^(s+t).

Everything is extended to polynomials by the Leibniz rule.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Sequence

from gmpy2 import mpq

from .errors import LabelInvalid, TruncationExceeded
from .groebner import GREVLEX, Budget, buchberger, eliminate, ideal_equal
from .lattice import Coweight, RootDatum, dual_star, pair_simple_root, threshold_data
from .polynomial import Polynomial, VarTable
from .slices import build_generic_X, det_t, slice_generators, slice_vartable, x_name

# Global sign of the bracket; +1 reproduces the displayed minor identity.
BRACKET_SIGN = 1
# Action of g on dual vectors: -1 is (x.beta)(w) = -beta(x.w), +1 the transpose rule.
CONTRAGREDIENT = -1
TRANSPOSE = 1


# ---------------------------------------------------------------------------
# exterior powers of the vector representation
# ---------------------------------------------------------------------------

def _sort_sign(seq: list):
    """Sorted tuple and permutation sign; None if a repeat kills the wedge."""
    if len(set(seq)) != len(seq):
        return None, 0
    sign = 1
    arr = list(seq)
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j] > arr[j + 1]:
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
                sign = -sign
    return tuple(arr), sign


def ext_apply(x: dict, vec: dict) -> dict:
    """Action of a matrix ``x`` on a vector of Lambda^i (dict subset -> coeff)."""
    out: dict = {}
    for J, c in vec.items():
        for pos, col in enumerate(J):
            for (a, b), val in x.items():
                if b != col:
                    continue
                new = list(J)
                new[pos] = a
                K, sign = _sort_sign(new)
                if K is None:
                    continue
                out[K] = out.get(K, 0) + sign * val * c
    return {K: c for K, c in out.items() if c}


def ext_apply_dual(x: dict, beta: dict, convention: int = CONTRAGREDIENT) -> dict:
    """Action on a dual vector, coordinates in the basis dual to ``e_K``."""
    out: dict = {}
    for (a, b), val in x.items():
        # transpose of E_ab acts as E_ba on coordinates
        for K, c in ext_apply({(b, a): val}, beta).items():
            out[K] = out.get(K, 0) + convention * c
    return {K: c for K, c in out.items() if c}


def weight_pairing_root(j: int, J: Iterable[int]) -> int:
    """``(alpha_j, wt(e_J))`` under the trace form."""
    J = set(J)
    return int(j in J) - int(j + 1 in J)


@dataclass(frozen=True)
class MinorLabel:
    i: int
    row_set: tuple
    col_set: tuple

    def __post_init__(self):
        object.__setattr__(self, "row_set", tuple(sorted(self.row_set)))
        object.__setattr__(self, "col_set", tuple(sorted(self.col_set)))

    def validate(self, n: int) -> None:
        for s in (self.row_set, self.col_set):
            if len(s) != self.i or len(set(s)) != self.i or any(not 1 <= x <= n for x in s):
                raise LabelInvalid(f"{self} is not a valid label for n={n}")

    def weight(self, n: int) -> tuple:
        """``varpi_i - wt(e_{col_set})`` in simple-root coordinates for SL_n."""
        return root_coords_below_top(self.i, self.col_set, n)


def root_coords_below_top(i: int, J: Sequence[int], n: int) -> tuple:
    """Coefficients ``d_l`` with ``varpi_i - wt(e_J) = sum_l d_l alpha_l``."""
    Jset = set(J)
    return tuple(min(l, i) - sum(1 for m in Jset if m <= l) for l in range(1, n))


def highest(i: int) -> tuple:
    return tuple(range(1, i + 1))


@dataclass
class DualBasisTable:
    """Trace-form dual bases ``{h_i, e_a, f_a}`` and ``{h^i, f_a, e_a}`` of sl_n."""

    n: int
    basis: list = field(default_factory=list)
    dual: list = field(default_factory=list)

    def __post_init__(self):
        n = self.n
        basis, dual = [], []
        for i in range(1, n):
            basis.append({(i, i): mpq(1), (i + 1, i + 1): mpq(-1)})
            dual.append({(a, a): mpq(1 if a <= i else 0) - mpq(i, n) for a in range(1, n + 1)})
        for a, b in combinations(range(1, n + 1), 2):
            basis.append({(a, b): mpq(1)})
            dual.append({(b, a): mpq(1)})
            basis.append({(b, a): mpq(1)})
            dual.append({(a, b): mpq(1)})
        self.basis, self.dual = basis, dual

    @staticmethod
    def trace_form(x: dict, y: dict) -> mpq:
        return sum((vx * y.get((b, a), 0) for (a, b), vx in x.items()), mpq(0))

    def casimir_pairing(self, x: dict, y: dict) -> mpq:
        """``sum_a (J_a, x)(J^a, y)``; equals ``(x, y)`` on sl_n."""
        tf = self.trace_form
        return sum((tf(Ja, x) * tf(Jb, y) for Ja, Jb in zip(self.basis, self.dual)), mpq(0))


# ---------------------------------------------------------------------------
# series
# ---------------------------------------------------------------------------

class SeriesU:
    """Truncated power series in ``u^-1``: ``coeffs[s]`` multiplies ``u^-s``."""

    __slots__ = ("table", "coeffs")

    def __init__(self, table: VarTable, coeffs: Sequence[Polynomial], N: int | None = None):
        coeffs = list(coeffs)
        N = len(coeffs) - 1 if N is None else N
        zero = Polynomial.zero(table)
        coeffs = (coeffs + [zero] * (N + 1))[: N + 1]
        self.table = table
        self.coeffs = coeffs

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, s: int) -> Polynomial:
        return self.coeffs[s]

    def _check(self, other):
        if other.N != self.N:
            raise ValueError("series truncated at different orders")

    def __add__(self, other):
        self._check(other)
        return SeriesU(self.table, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return SeriesU(self.table, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return SeriesU(self.table, [-a for a in self.coeffs])

    def scale(self, c) -> "SeriesU":
        return SeriesU(self.table, [a * c for a in self.coeffs])

    def __mul__(self, other):
        if not isinstance(other, SeriesU):
            return self.scale(other)
        self._check(other)
        N = self.N
        out = [Polynomial.zero(self.table) for _ in range(N + 1)]
        for a, ca in enumerate(self.coeffs):
            if ca.is_zero():
                continue
            for b in range(N + 1 - a):
                cb = other.coeffs[b]
                if not cb.is_zero():
                    out[a + b] = out[a + b] + ca * cb
        return SeriesU(self.table, out)

    def inverse(self) -> "SeriesU":
        c0 = self.coeffs[0]
        if not c0.is_constant() or c0.is_zero():
            raise ZeroDivisionError("series needs an invertible constant term")
        inv0 = 1 / c0.constant_term()
        out = [Polynomial.constant(self.table, inv0)]
        for s in range(1, self.N + 1):
            acc = Polynomial.zero(self.table)
            for t in range(1, s + 1):
                if not self.coeffs[t].is_zero():
                    acc = acc + self.coeffs[t] * out[s - t]
            out.append(acc * (-inv0))
        return SeriesU(self.table, out)

    def __truediv__(self, other: "SeriesU") -> "SeriesU":
        return self * other.inverse()


_EXACT = -(10 ** 9)


class Laurent:
    """Two-sided series in ``v``; ``terms[e]`` multiplies ``v^e``.

    Coefficients are trustworthy for exponents ``>= low``; ``low`` equal to
    the module constant ``_EXACT`` marks a finite exact expression.
    """

    def __init__(self, table: VarTable, terms: dict, low: int = _EXACT):
        self.table = table
        self.terms = {e: c for e, c in terms.items() if not c.is_zero() and e >= low}
        self.low = low

    @classmethod
    def from_series(cls, s: SeriesU) -> "Laurent":
        return cls(s.table, {-e: c for e, c in enumerate(s.coeffs)}, -s.N)

    @property
    def top(self) -> int:
        return max(self.terms, default=_EXACT)

    def coeff(self, e: int) -> Polynomial:
        if e < self.low:
            raise TruncationExceeded(f"coefficient of v^{e} lies below the truncation v^{self.low}")
        return self.terms.get(e, Polynomial.zero(self.table))

    def shift(self, k: int) -> "Laurent":
        low = self.low if self.low == _EXACT else self.low + k
        return Laurent(self.table, {e + k: c for e, c in self.terms.items()}, low)

    def __add__(self, other: "Laurent") -> "Laurent":
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms[e] + c if e in terms else c
        return Laurent(self.table, terms, max(self.low, other.low))

    def __neg__(self):
        return Laurent(self.table, {e: -c for e, c in self.terms.items()}, self.low)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "Laurent":
        return Laurent(self.table, {e: p * c for e, p in self.terms.items()}, self.low)

    def __mul__(self, other):
        if not isinstance(other, Laurent):
            return self.scale(other)
        lows = []
        if self.low != _EXACT:
            lows.append(self.low + max(other.top, 0) if other.terms else self.low)
        if other.low != _EXACT:
            lows.append(other.low + max(self.top, 0) if self.terms else other.low)
        low = max(lows) if lows else _EXACT
        terms: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                if a + b < low:
                    continue
                terms[a + b] = terms[a + b] + ca * cb if a + b in terms else ca * cb
        return Laurent(self.table, terms, low)

    def degree(self) -> int:
        return self.top


def residue_plus(T: Laurent) -> Laurent:
    """Nonnegative-power part ``T(v)_+`` (exact polynomial in v)."""
    if T.low > 0:
        raise TruncationExceeded("constant term of T is below its truncation")
    return Laurent(T.table, {e: c for e, c in T.terms.items() if e >= 0})


def residue_kernel(T: Laurent) -> Laurent:
    """``Res_u(u^-1/(1 - u^-1 v) T(u))`` computed directly from the geometric kernel."""
    out = {}
    # kernel = sum_{m>=0} u^{-1-m} v^m; the u^-1 coefficient pairs it with u^m in T
    for m in range(0, max(T.top, -1) + 1):
        c = T.terms.get(m)
        if c is not None:
            out[m] = c
    return Laurent(T.table, out)


# ---------------------------------------------------------------------------
# the chart and its bracket
# ---------------------------------------------------------------------------

def g_name(i: int, j: int, s: int) -> str:
    return x_name(i, j, s, "g")


class GroupChart:
    def __init__(self, n: int, N: int):
        if n < 2 or N < 1:
            raise ValueError("need n >= 2 and N >= 1")
        self.n, self.N = n, N
        self.table = slice_vartable(n, N, "g")
        self.matrix = build_generic_X(n, N, "g", self.table)
        det = det_t(self.matrix, truncate=N)
        self.relations = [det.coeff(s) for s in range(1, N + 1)]
        self._weights = [int(name.rsplit("[", 1)[1].rstrip("]")) for name in self.table.names]
        self._coords = [tuple(int(x) for x in name[2:-1].split("][")) for name in self.table.names]
        self._bracket_cache: dict = {}
        self._minor_cache: dict = {}
        self._images = self._solve_relations()

    def var(self, i: int, j: int, s: int) -> Polynomial:
        if s == 0:
            return Polynomial.constant(self.table, int(i == j))
        if s > self.N:
            raise TruncationExceeded(f"g[{i}][{j}][{s}] lies beyond the truncation N={self.N}")
        return Polynomial.var(self.table, g_name(i, j, s))

    def weight(self, p: Polynomial) -> set:
        return p.weighted_degrees(self._weights)

    def closed_relations(self) -> list:
        """All coefficients of ``det(I + sum_{s<=N} g^(s) t^-s) - 1``.

        Valid on any ideal that already contains every ``g^(s)`` with ``s > N``.
        """
        det = det_t(self.matrix)
        return [det.coeff(r) for r in range(1, self.n * self.N + 1)]

    def _solve_relations(self) -> dict:
        # det^(s) = g[n][n][s] + (terms without g[n][n][s]): solve for it
        n = self.n
        images: dict = {}
        for s in range(1, self.N + 1):
            idx = self.table.index(g_name(n, n, s))
            img = Polynomial.var(self.table, g_name(n, n, s)) - self.relations[s - 1]
            if images:
                img = img.substitute(images)
            images[idx] = img
        return images

    def reduce(self, p: Polynomial) -> Polynomial:
        """Normal form modulo the chart relations (eliminates ``g[n][n][s]``)."""
        return p.substitute(self._images)

    # bracket ---------------------------------------------------------------
    def generator_bracket(self, a: int, b: int) -> Polynomial:
        key = (a, b)
        cached = self._bracket_cache.get(key)
        if cached is not None:
            return cached
        i, j, r = self._coords[a]
        k, l, s = self._coords[b]
        if r + s - 1 > self.N:
            raise TruncationExceeded(
                f"{{{self.table.names[a]}, {self.table.names[b]}}} needs order {r + s - 1} > N={self.N}")
        total = Polynomial.zero(self.table)
        for t in range(r):
            total = total + self.var(i, l, r - 1 - t) * self.var(k, j, s + t)
            total = total - self.var(k, j, r - 1 - t) * self.var(i, l, s + t)
        if BRACKET_SIGN != 1:
            total = total * BRACKET_SIGN
        self._bracket_cache[key] = total
        return total

    def bracket(self, p: Polynomial, q: Polynomial) -> Polynomial:
        total = Polynomial.zero(self.table)
        vp, vq = p.variables(), q.variables()
        if not vp or not vq:
            return total
        dq = {b: q.diff(b) for b in vq}
        for a in vp:
            da = p.diff(a)
            for b in vq:
                gb = self.generator_bracket(a, b)
                if not gb.is_zero():
                    total = total + da * dq[b] * gb
        return total

    # minors ----------------------------------------------------------------
    def minor_series(self, rows: tuple, cols: tuple) -> SeriesU:
        key = (rows, cols)
        if key not in self._minor_cache:
            sub = self.matrix.submatrix([r - 1 for r in rows], [c - 1 for c in cols])
            d = det_t(sub, truncate=self.N)
            self._minor_cache[key] = SeriesU(self.table, d.coeffs, self.N)
        return self._minor_cache[key]

    def delta(self, beta: dict, gamma: dict) -> SeriesU:
        """``Delta_{beta, gamma}(u)`` for vectors of Lambda^i given in coordinates."""
        total = SeriesU(self.table, [], self.N)
        for I, cb in beta.items():
            for J, cg in gamma.items():
                total = total + self.minor_series(I, J).scale(cb * cg)
        return total


def delta_series(label: MinorLabel, chart: GroupChart) -> SeriesU:
    label.validate(chart.n)
    return chart.minor_series(label.row_set, label.col_set)


def bracket(p: Polynomial, q: Polynomial, chart: GroupChart) -> Polynomial:
    return chart.bracket(p, q)


def f_series(i: int, chart: GroupChart) -> SeriesU:
    """``Delta_{v_i*, f_i v_i}(u) / Delta_{v_i*, v_i}(u)``."""
    top = {highest(i): mpq(1)}
    fi = {(i + 1, i): mpq(1)}
    num = chart.delta(top, ext_apply(fi, top))
    den = chart.delta(top, top)
    return num / den


# ---------------------------------------------------------------------------
# verifications
# ---------------------------------------------------------------------------

@dataclass
class Verdict:
    check: str
    parameters: dict
    truncation: int
    verdict: bool
    witness: str | None = None

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "parameters": self.parameters,
            "truncation": self.truncation,
            "verdict": self.verdict,
            "witness": self.witness,
        }


def _label_vectors(label: MinorLabel):
    return {label.row_set: mpq(1)}, {label.col_set: mpq(1)}


def minor_bracket_residuals(label1: MinorLabel, label2: MinorLabel, chart: GroupChart,
                            convention: int = CONTRAGREDIENT) -> list:
    """Nonzero residuals of the minor-bracket identity, coefficientwise."""
    label1.validate(chart.n)
    label2.validate(chart.n)
    b1, c1 = _label_vectors(label1)
    b2, c2 = _label_vectors(label2)
    A = chart.delta(b1, c1)
    B = chart.delta(b2, c2)
    table = DualBasisTable(chart.n)
    right_u, right_v, left_u, left_v = [], [], [], []
    for Ja, Jb in zip(table.basis, table.dual):
        right_u.append(chart.delta(b1, ext_apply(Ja, c1)))
        right_v.append(chart.delta(b2, ext_apply(Jb, c2)))
        left_u.append(chart.delta(ext_apply_dual(Ja, b1, convention), c1))
        left_v.append(chart.delta(ext_apply_dual(Jb, b2, convention), c2))
    residuals = []
    N = chart.N
    for r in range(N):
        for s in range(N - r):
            lhs = chart.bracket(A[r + 1], B[s]) - chart.bracket(A[r], B[s + 1])
            rhs = Polynomial.zero(chart.table)
            for x, y, z, w in zip(right_u, right_v, left_u, left_v):
                rhs = rhs + x[r] * y[s] - z[r] * w[s]
            diff = chart.reduce(lhs - rhs)
            if not diff.is_zero():
                residuals.append(((r, s), diff))
    return residuals


def verify_minor_bracket_identity(label1: MinorLabel, label2: MinorLabel, chart: GroupChart,
                                  convention: int = CONTRAGREDIENT) -> Verdict:
    res = minor_bracket_residuals(label1, label2, chart, convention)
    params = {"n": chart.n, "label1": _label_dict(label1), "label2": _label_dict(label2)}
    return Verdict("minors", params, chart.N, not res, None if not res else f"{res[0][0]}: {res[0][1].to_text()}")


def _label_dict(label: MinorLabel) -> dict:
    return {"i": label.i, "rows": list(label.row_set), "cols": list(label.col_set)}


def _bracket_series(x: Polynomial, series: SeriesU, chart: GroupChart, smax: int) -> Laurent:
    terms = {-s: chart.bracket(x, series[s]) for s in range(smax + 1)}
    return Laurent(chart.table, terms, -smax)


def lemma_f_sides(j: int, k: int, gamma_label: MinorLabel, chart: GroupChart):
    """Both sides of the bracket-with-f_j identity, plus p and the q_alpha."""
    n, N = chart.n, chart.N
    gamma_label.validate(n)
    i = gamma_label.i
    if gamma_label.row_set != highest(i):
        raise LabelInvalid("the f_j bracket identity uses beta = v_i^*, the principal rows")
    if N < k + 1:
        raise TruncationExceeded(f"f_j^({k + 1}) needs N >= {k + 1}")
    top_i = {highest(i): mpq(1)}
    gamma = {gamma_label.col_set: mpq(1)}
    fj = f_series(j, chart)
    lhs = _bracket_series(fj[k + 1], chart.delta(top_i, gamma), chart, N - k)

    def D(vec):
        return Laurent.from_series(chart.delta(top_i, vec))

    fj_mat = {(j + 1, j): mpq(1)}
    rhs = D(ext_apply(fj_mat, gamma)).shift(k)

    p = -residue_plus(Laurent.from_series(fj).shift(k))
    pairing = weight_pairing_root(j, gamma_label.col_set)
    if pairing:
        rhs = rhs + (p * D(gamma)).scale(pairing)

    top_j = {highest(j): mpq(1)}
    den = chart.delta(top_j, top_j)
    inv = den.inverse()
    fj_vj = ext_apply(fj_mat, top_j)
    qs = {}
    for a, b in combinations(range(1, n + 1), 2):
        f_alpha = {(b, a): mpq(1)}
        e_alpha = {(a, b): mpq(1)}
        first = chart.delta(top_j, ext_apply(f_alpha, fj_vj)) * inv
        second = chart.delta(top_j, fj_vj) * chart.delta(top_j, ext_apply(f_alpha, top_j)) * inv * inv
        q = residue_plus(Laurent.from_series(first - second).shift(k))
        qs[(a, b)] = q
        e_gamma = ext_apply(e_alpha, gamma)
        if e_gamma and q.terms:
            rhs = rhs + q * D(e_gamma)
    return lhs, rhs, p, qs


def lemma_f_residuals(j: int, k: int, gamma_label: MinorLabel, chart: GroupChart) -> list:
    lhs, rhs, p, qs = lemma_f_sides(j, k, gamma_label, chart)
    low = max(lhs.low, rhs.low)
    residuals = []
    for e in range(k, low - 1, -1):
        diff = chart.reduce(lhs.coeff(e) - rhs.coeff(e))
        if not diff.is_zero():
            residuals.append((e, diff))
    return residuals


def verify_lemma_bracket_f(j: int, k: int, label: MinorLabel, chart: GroupChart) -> Verdict:
    lhs, rhs, p, qs = lemma_f_sides(j, k, label, chart)
    degrees_ok = p.degree() <= k - 1 and all(q.degree() <= k - 1 for q in qs.values())
    res = lemma_f_residuals(j, k, label, chart)
    witness = None
    if res:
        witness = f"v^{res[0][0]}: {res[0][1].to_text()}"
    elif not degrees_ok:
        witness = f"degree bound violated: deg p = {p.degree()}, deg q = {[q.degree() for q in qs.values()]}"
    params = {"n": chart.n, "j": j, "k": k, "label": _label_dict(label)}
    return Verdict("lemma-f", params, chart.N, not res and degrees_ok, witness)


# ---------------------------------------------------------------------------
# generator sets and the ideal comparison
# ---------------------------------------------------------------------------

def generator_thresholds(lam: Coweight, mu: Coweight) -> dict:
    """``{(i, gamma): m_i + <mu*, varpi_i - wt(gamma)>}`` over fundamental reps."""
    data = threshold_data(lam, mu)
    n = lam.datum.rank + 1
    mu_star = dual_star(mu)
    pairs = [pair_simple_root(mu_star, l) for l in range(1, n)]
    out = {}
    for i in range(1, n):
        for J in combinations(range(1, n + 1), i):
            d = root_coords_below_top(i, J, n)
            shift = sum((c * p for c, p in zip(d, pairs)), Fraction(0))
            out[(i, J)] = data.m[i - 1] + shift
    return out


def slice_generator_set(lam: Coweight, mu: Coweight, chart: GroupChart) -> list:
    """All nonzero ``Delta^(s)_{beta,gamma}`` above threshold with ``s <= N``."""
    out = []
    thresholds = generator_thresholds(lam, mu)
    n = chart.n
    for (i, J), thr in sorted(thresholds.items()):
        for I in combinations(range(1, n + 1), i):
            series = chart.minor_series(I, J)
            for s in range(int(thr) + 1, chart.N + 1):
                if s > thr and not series[s].is_zero():
                    out.append(series[s])
    return out


def poisson_generators(mu: Coweight, chart: GroupChart, convention: int = CONTRAGREDIENT) -> list:
    """Poisson generators of O(Gr_mu) with their weights, up to order N."""
    n, N = chart.n, chart.N
    pairs = [pair_simple_root(dual_star(mu), i) for i in range(1, n)]
    out = []
    for i in range(1, n):
        top = {highest(i): mpq(1)}
        e_top = ext_apply_dual({(i, i + 1): mpq(1)}, top, convention)
        lead = chart.delta(top, top)
        raised = chart.delta(e_top, top)
        fi = f_series(i, chart)
        for s in range(1, N + 1):
            out.append((s, raised[s]))
            out.append((s, lead[s]))
            if s > pairs[i - 1]:
                out.append((s, fi[s]))
    return [(w, p) for w, p in out if not p.is_zero()]


def kn_varpi_one(n: int, k: int) -> Coweight:
    datum = RootDatum.type_a(n)
    return datum.fundamental(1) * (k * n)


def compare_ideals_mu_zero(n: int, k: int, N: int, budget: Budget | None = None) -> Verdict:
    """Eliminate ``s > k`` from the mu = 0 generator set and compare with det^(r)."""
    if N < k + 1:
        raise TruncationExceeded("compare_ideals_mu_zero needs N >= k + 1")
    chart = GroupChart(n, N)
    lam = kn_varpi_one(n, k)
    zero = RootDatum.type_a(n).zero()
    gens = slice_generator_set(lam, zero, chart) + chart.closed_relations()
    keep = [g_name(i, j, s) for i in range(1, n + 1) for j in range(1, n + 1) for s in range(1, k + 1)]
    elim = eliminate(gens, keep, budget)
    kept_table = VarTable(keep)
    rename = {x_name(i, j, s): g_name(i, j, s) for i in range(1, n + 1) for j in range(1, n + 1) for s in range(1, k + 1)}
    target = [p.remap(kept_table, rename) for p in slice_generators(n, k)]
    ok = ideal_equal(elim, target, GREVLEX, budget)
    witness = None
    if not ok:
        witness = " ; ".join(p.to_text() for p in elim)
    return Verdict("ideal-compare", {"n": n, "k": k}, N, ok, witness)


def eliminated_ideal_mu_zero(n: int, k: int, N: int, budget: Budget | None = None) -> list:
    chart = GroupChart(n, N)
    gens = slice_generator_set(kn_varpi_one(n, k), RootDatum.type_a(n).zero(), chart) + chart.closed_relations()
    keep = [g_name(i, j, s) for i in range(1, n + 1) for j in range(1, n + 1) for s in range(1, k + 1)]
    return eliminate(gens, keep, budget)


# ---------------------------------------------------------------------------
# bracket axioms
# ---------------------------------------------------------------------------

def generator_triples(chart: GroupChart, max_order: int):
    """Unordered triples of chart generators with order sum <= max_order."""
    idx = range(len(chart.table))
    w = chart._weights
    for a, b, c in combinations_with_replacement(idx, 3):
        if w[a] + w[b] + w[c] <= max_order:
            yield a, b, c


def _gen(chart, a):
    return Polynomial.var(chart.table, chart.table.names[a])


def jacobiator(chart: GroupChart, a: int, b: int, c: int) -> Polynomial:
    x, y, z = _gen(chart, a), _gen(chart, b), _gen(chart, c)
    br = chart.bracket
    return chart.reduce(br(x, br(y, z)) + br(y, br(z, x)) + br(z, br(x, y)))


def verify_axioms(n: int, N: int, sample: int | None = None, seed: int = 0) -> list:
    """Antisymmetry, Leibniz and Jacobi on generators; one verdict per axiom."""
    chart = GroupChart(n, N)
    w = chart._weights
    nv = len(chart.table)
    pairs = [(a, b) for a in range(nv) for b in range(nv) if w[a] + w[b] - 1 <= N]
    triples = list(generator_triples(chart, N))
    if sample is not None and sample < len(triples):
        rng = random.Random(seed)
        triples = sorted(rng.sample(triples, sample))
    verdicts = []

    bad = None
    for a, b in pairs:
        x, y = _gen(chart, a), _gen(chart, b)
        s = chart.bracket(x, y) + chart.bracket(y, x)
        if not s.is_zero():
            bad = f"{{{chart.table.names[a]}, {chart.table.names[b]}}}: {s.to_text()}"
            break
    verdicts.append(Verdict("antisymmetry", {"n": n, "pairs": len(pairs)}, N, bad is None, bad))

    bad = None
    for a, b, c in triples:
        for p, q, r in ((a, b, c), (b, c, a), (c, a, b)):
            x, y, z = _gen(chart, p), _gen(chart, q), _gen(chart, r)
            s = chart.bracket(x, y * z) - chart.bracket(x, y) * z - y * chart.bracket(x, z)
            if not s.is_zero():
                bad = s.to_text()
                break
        if bad:
            break
    verdicts.append(Verdict("leibniz", {"n": n, "triples": len(triples)}, N, bad is None, bad))

    bad = None
    for a, b, c in triples:
        s = jacobiator(chart, a, b, c)
        if not s.is_zero():
            bad = f"({chart.table.names[a]}, {chart.table.names[b]}, {chart.table.names[c]}): {s.to_text()}"
            break
    verdicts.append(Verdict("jacobi", {"n": n, "triples": len(triples)}, N, bad is None, bad))

    bad = None
    dets = chart.closed_relations()[:N]
    for r, p in enumerate(dets, start=1):
        for s, q in enumerate(dets, start=1):
            if r + s - 1 > N:
                continue
            v = chart.reduce(chart.bracket(p, q))
            if not v.is_zero():
                bad = f"det^({r}), det^({s}): {v.to_text()}"
    verdicts.append(Verdict("determinant-central", {"n": n}, N, bad is None, bad))
    return verdicts


def closure_residuals(chart: GroupChart, lam: Coweight, mu: Coweight, budget: Budget | None = None) -> list:
    """Brackets of O(Gr_mu) generators with ideal generators that leave the ideal."""
    ideal_gens = slice_generator_set(lam, mu, chart)
    weighted = [(min(chart.weight(p)), p) for p in ideal_gens]
    gb = buchberger(ideal_gens + chart.relations, GREVLEX, budget)
    bad = []
    for wx, x in poisson_generators(mu, chart):
        for wy, y in weighted:
            if wx + wy - 1 > chart.N:
                continue
            r = gb.normal_form(chart.bracket(x, y))
            if not r.is_zero():
                bad.append((x, y, r))
    return bad
