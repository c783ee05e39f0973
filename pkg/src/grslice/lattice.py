"""Coweight combinatorics for a symmetrizable Cartan datum.

Coweights are stored in the simple-coroot basis with exact rational
coordinates: ``Coweight((a_1, ..., a_r))`` means ``sum a_i alpha_i``.
Simple-root indices in the public API are 1-based, matching the usual
mathematical labelling of Dynkin nodes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable

from .errors import (
    ApexOutOfRange,
    DifferenceNotInCorootLattice,
    NonDominantInput,
    NonIntegralCoweight,
    NotDominated,
    UnsupportedType,
)


def _frac(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True)
class RootDatum:
    """Cartan matrix ``a_ij`` plus symmetrizers ``d_i``."""

    cartan: tuple
    symmetrizers: tuple

    def __post_init__(self):
        cartan = tuple(tuple(int(a) for a in row) for row in self.cartan)
        r = len(cartan)
        if r == 0 or any(len(row) != r for row in cartan):
            raise ValueError("Cartan matrix must be square and nonempty")
        d = tuple(int(x) for x in self.symmetrizers)
        if len(d) != r or any(x <= 0 for x in d):
            raise ValueError("need one positive symmetrizer per node")
        for i in range(r):
            if cartan[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(r):
                if i != j and cartan[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if d[i] * cartan[i][j] != d[j] * cartan[j][i]:
                    raise ValueError("symmetrizers do not symmetrize the Cartan matrix")
        object.__setattr__(self, "cartan", cartan)
        object.__setattr__(self, "symmetrizers", d)

    @classmethod
    def type_a(cls, n: int) -> "RootDatum":
        """Root datum of SL_n (type A_{n-1})."""
        if n < 2:
            raise ValueError("SL_n needs n >= 2")
        r = n - 1
        cartan = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r)] for i in range(r)]
        return cls(cartan, (1,) * r)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def is_type_a(self) -> bool:
        return self == RootDatum.type_a(self.rank + 1)

    def fundamental(self, i: int) -> "Coweight":
        """Fundamental coweight ``varpi_i`` in coroot coordinates."""
        r = self.rank
        _check_index(i, r)
        # solve sum_k c_k a_{jk} = delta_{ij}
        rows = [[Fraction(self.cartan[j][k]) for k in range(r)] + [Fraction(int(j == i - 1))] for j in range(r)]
        for col in range(r):
            piv = next(p for p in range(col, r) if rows[p][col] != 0)
            rows[col], rows[piv] = rows[piv], rows[col]
            pv = rows[col][col]
            rows[col] = [x / pv for x in rows[col]]
            for p in range(r):
                if p != col and rows[p][col] != 0:
                    f = rows[p][col]
                    rows[p] = [a - f * b for a, b in zip(rows[p], rows[col])]
        return Coweight(tuple(rows[j][r] for j in range(r)), self)

    def simple_coroot(self, i: int) -> "Coweight":
        _check_index(i, self.rank)
        return Coweight(tuple(Fraction(int(j == i - 1)) for j in range(self.rank)), self)

    def zero(self) -> "Coweight":
        return Coweight((Fraction(0),) * self.rank, self)


def _check_index(j: int, rank: int) -> None:
    if not 1 <= j <= rank:
        raise IndexError(f"simple root index {j} outside 1..{rank}")


@dataclass(frozen=True)
class Coweight:
    coords: tuple
    datum: RootDatum = field(compare=True)

    def __post_init__(self):
        coords = tuple(_frac(c) for c in self.coords)
        if len(coords) != self.datum.rank:
            raise ValueError(f"expected {self.datum.rank} coordinates, got {len(coords)}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def of(cls, coords: Iterable, n: int | None = None, datum: RootDatum | None = None) -> "Coweight":
        coords = tuple(coords)
        if datum is None:
            datum = RootDatum.type_a(n if n is not None else len(coords) + 1)
        return cls(coords, datum)

    def _same(self, other: "Coweight") -> None:
        if self.datum != other.datum:
            raise ValueError("coweights belong to different root data")

    def __add__(self, other: "Coweight") -> "Coweight":
        self._same(other)
        return Coweight(tuple(a + b for a, b in zip(self.coords, other.coords)), self.datum)

    def __sub__(self, other: "Coweight") -> "Coweight":
        self._same(other)
        return Coweight(tuple(a - b for a, b in zip(self.coords, other.coords)), self.datum)

    def __neg__(self) -> "Coweight":
        return Coweight(tuple(-a for a in self.coords), self.datum)

    def __mul__(self, c) -> "Coweight":
        c = _frac(c)
        return Coweight(tuple(c * a for a in self.coords), self.datum)

    __rmul__ = __mul__

    @property
    def is_integral(self) -> bool:
        """True iff the coweight lies in the coroot lattice."""
        return all(c.denominator == 1 for c in self.coords)

    @property
    def height(self) -> Fraction:
        return sum(self.coords, Fraction(0))

    def pairings(self) -> tuple:
        """Fundamental coordinates ``<lambda, alpha_j^vee>`` for all j."""
        return tuple(pair_simple_root(self, j) for j in range(1, self.datum.rank + 1))

    def to_strings(self) -> list:
        return [f"{c.numerator}/{c.denominator}" for c in self.coords]

    def __str__(self):
        return ",".join(str(c) for c in self.coords)


def pair_simple_root(lam: Coweight, j: int) -> Fraction:
    """``<lambda, alpha_j^vee> = sum_i c_i a_{ji}``."""
    _check_index(j, lam.datum.rank)
    row = lam.datum.cartan[j - 1]
    return sum((c * a for c, a in zip(lam.coords, row)), Fraction(0))


def is_dominant(lam: Coweight) -> bool:
    return all(p >= 0 for p in lam.pairings())


def meet(lam: Coweight, mu: Coweight) -> Coweight:
    """Coordinatewise minimum in the coroot basis."""
    lam._same(mu)
    if not (lam - mu).is_integral:
        raise DifferenceNotInCorootLattice(f"{lam} - {mu} is not in the coroot lattice")
    return Coweight(tuple(min(a, b) for a, b in zip(lam.coords, mu.coords)), lam.datum)


def rational_min(lam: Coweight, mu: Coweight) -> Coweight:
    """Coordinatewise minimum without the lattice restriction."""
    lam._same(mu)
    return Coweight(tuple(min(a, b) for a, b in zip(lam.coords, mu.coords)), lam.datum)


def is_summand(mu: Coweight, lam: Coweight) -> bool:
    if not (is_dominant(mu) and is_dominant(lam)):
        raise NonDominantInput("summand test needs dominant inputs")
    return is_dominant(lam - mu)


def dual_star(lam: Coweight) -> Coweight:
    """``lambda* = -w_0 lambda``; coordinate reversal in type A."""
    if not lam.datum.is_type_a:
        raise UnsupportedType("dual_star is only implemented for type A")
    return Coweight(tuple(reversed(lam.coords)), lam.datum)


def dim_orbit(lam: Coweight) -> int:
    """``<lambda, 2 rho^vee>``, the dimension of the orbit Gr^lambda."""
    if not lam.is_integral:
        raise NonIntegralCoweight(f"{lam} is not in the coroot lattice")
    if not is_dominant(lam):
        raise NonDominantInput(f"{lam} is not dominant")
    return int(2 * lam.height)


@dataclass(frozen=True)
class TriangleFunction:
    """Piecewise-linear f on [0, n] through (0, 0), (apex_a, apex_b), (n, 0)."""

    n: int
    apex_a: Fraction
    apex_b: Fraction

    def __post_init__(self):
        a, b = _frac(self.apex_a), _frac(self.apex_b)
        if self.n < 2 or not (1 <= a <= self.n - 1) or b < 0:
            raise ApexOutOfRange(f"apex ({a}, {b}) not allowed for n={self.n}")
        object.__setattr__(self, "apex_a", a)
        object.__setattr__(self, "apex_b", b)

    @property
    def left_slope(self) -> Fraction:
        return self.apex_b / self.apex_a

    @property
    def right_slope(self) -> Fraction:
        # magnitude of the descending slope
        return self.apex_b / (self.n - self.apex_a)

    def __call__(self, x) -> Fraction:
        x = _frac(x)
        return min(self.left_slope * x, self.right_slope * (self.n - x))

    def minimum(self, other: "TriangleFunction") -> "TriangleFunction":
        """Pointwise minimum; again a triangle since f = min(left line, right line)."""
        if other.n != self.n:
            raise ValueError("triangles over different intervals")
        sl = min(self.left_slope, other.left_slope)
        sr = min(self.right_slope, other.right_slope)
        if sl == 0 or sr == 0:
            return TriangleFunction(self.n, min(self.apex_a, other.apex_a), Fraction(0))
        a = sr * self.n / (sl + sr)
        return TriangleFunction(self.n, a, sl * a)

    def sample(self) -> Coweight:
        """Discrete sampling ``sum_{i=1}^{n-1} f(i) alpha_i``."""
        return Coweight(tuple(self(i) for i in range(1, self.n)), RootDatum.type_a(self.n))


def triangle_coweight(n: int, apex_a, apex_b) -> Coweight:
    return TriangleFunction(n, _frac(apex_a), _frac(apex_b)).sample()


def summands(lam: Coweight) -> list:
    """All integral dominant mu with lambda - mu dominant and integral."""
    if not is_dominant(lam):
        raise NonDominantInput(f"{lam} is not dominant")
    # dominant coweights have nonnegative coroot coordinates, so 0 <= mu <= lambda
    ranges = []
    for c in lam.coords:
        lo = c - int(c) if c.denominator != 1 else Fraction(0)
        ranges.append([lo + t for t in range(int(c - lo) + 1)])
    found = []
    for coords in product(*ranges):
        mu = Coweight(coords, lam.datum)
        if is_dominant(mu) and is_dominant(lam - mu):
            found.append(mu)
    return found


def generate_closure(seeds: Iterable[Coweight], height_bound) -> set:
    """Smallest set holding the seeds and closed under meets and summands.

    Every seed and everything derived from it is explored (the result is
    finite because each derived coweight is bounded coordinatewise by a
    seed); the returned set keeps only elements with height <= bound.
    """
    seeds = list(seeds)
    for s in seeds:
        if not (is_dominant(s) and s.is_integral):
            raise NonDominantInput(f"seed {s} must be dominant and integral")
    seen: set = set()
    queue = deque()
    for s in seeds:
        if s not in seen:
            seen.add(s)
            queue.append(s)
    while queue:
        lam = queue.popleft()
        new = list(summands(lam))
        for other in list(seen):
            if (lam - other).is_integral:
                new.append(meet(lam, other))
        for mu in new:
            if mu not in seen:
                seen.add(mu)
                queue.append(mu)
    bound = _frac(height_bound)
    return {lam for lam in seen if lam.height <= bound}


def two_adjacent_support(lam: Coweight):
    """Index i with support of the pairings inside {i, i+1}, else None."""
    support = [j for j, p in enumerate(lam.pairings(), start=1) if p != 0]
    if not support:
        return 1
    if len(support) == 1:
        return min(support[0], max(1, lam.datum.rank - 1))
    if len(support) == 2 and support[1] == support[0] + 1:
        return support[0]
    return None


def is_two_adjacent_fundamental(lam: Coweight) -> bool:
    return two_adjacent_support(lam) is not None


def two_adjacent_cone(n: int, height_bound, integral: bool = True) -> set:
    """Dominant ``a varpi_i + b varpi_{i+1}`` of height <= bound.

    With ``integral=True`` only coroot-lattice points are kept; the
    fundamental-coordinate grid is walked, so ``a`` and ``b`` are integers.
    """
    datum = RootDatum.type_a(n)
    bound = _frac(height_bound)
    fund = [datum.fundamental(i) for i in range(1, n)]
    out = set()
    pairs = [(i, i + 1) for i in range(1, n - 1)] or [(1, 1)]
    for i, j in pairs:
        a = 0
        while True:
            grew = False
            b = 0
            while True:
                lam = fund[i - 1] * a + (fund[j - 1] * b if j != i else datum.zero())
                if lam.height > bound:
                    break
                grew = True
                if lam.is_integral or not integral:
                    out.add(lam)
                b += 1
                if j == i:
                    break
            if not grew:
                break
            a += 1
    return out


@dataclass(frozen=True)
class ThresholdData:
    m: tuple
    mu_star_pairings: tuple


def threshold_data(lam: Coweight, mu: Coweight) -> ThresholdData:
    """``m_i`` from ``lambda - mu = sum m_i alpha_{i*}`` and ``mu_i = <mu*, alpha_i^vee>``."""
    if not lam.datum.is_type_a:
        raise UnsupportedType("i* is only implemented for type A")
    diff = lam - mu
    if not diff.is_integral or any(c < 0 for c in diff.coords):
        raise NotDominated(f"{mu} is not below {lam} in the coroot cone")
    r = lam.datum.rank
    n = r + 1
    m = tuple(int(diff.coords[(n - i) - 1]) for i in range(1, n))
    mu_star = dual_star(mu)
    pair = tuple(pair_simple_root(mu_star, i) for i in range(1, r + 1))
    return ThresholdData(m, pair)


def parse_coweight(text: str, n: int) -> Coweight:
    """Comma-separated rationals in coroot coordinates, e.g. ``"2,1"`` or ``"1/2"``."""
    parts = [p for p in text.split(",")]
    try:
        coords = tuple(Fraction(p.strip()) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed coweight {text!r}") from exc
    return Coweight(coords, RootDatum.type_a(n))


def format_coords(lam: Coweight) -> str:
    return ",".join(str(c) for c in lam.coords)
