"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Polynomial` is a map from exponent tuples to nonzero ``mpq``
coefficients, attached to a :class:`VarTable` that fixes the variable order.
Exponent tuples are dense (one slot per variable in the table); zero
exponents are simply zero entries.

Text format (round-trips exactly through :meth:`Polynomial.to_text` and
:meth:`Polynomial.parse`)::

    3/2*x[1][1][1]^2*x[1][2][1]^1 + -1*x[2][2][1]^1 + 1

Terms are joined by ``" + "`` in descending graded reverse lexicographic
order, every variable carries an explicit exponent, and the zero polynomial
is written ``0``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from gmpy2 import mpq

from .errors import MissingAssignment, UnknownVariable, VarTableMismatch

Monomial = tuple  # dense exponent tuple, one entry per table variable

_FORBIDDEN = set(" *^+")


def to_mpq(value) -> mpq:
    if isinstance(value, str):
        return mpq(value.strip())
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    return mpq(value)


def format_rational(value) -> str:
    """``p/q`` string for a rational, ``p`` when the denominator is 1."""
    q = to_mpq(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def grevlex_key(mono: Monomial) -> tuple:
    """Sort key realising graded reverse lex with variable 0 largest."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


class VarTable:
    """Ordered, immutable list of variable names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        index = {}
        for i, name in enumerate(names):
            if not name or _FORBIDDEN & set(name):
                raise ValueError(f"invalid variable name {name!r}")
            if name in index:
                raise ValueError(f"duplicate variable name {name!r}")
            index[name] = i
        self.names = names
        self._index = index

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        return isinstance(other, VarTable) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VarTable({list(self.names)!r})"

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(f"variable {name!r} not in table") from None

    def zero_monomial(self) -> Monomial:
        return (0,) * len(self.names)

    def variable_monomial(self, i: int) -> Monomial:
        mono = [0] * len(self.names)
        mono[i] = 1
        return tuple(mono)


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


class Polynomial:
    """Immutable polynomial over a :class:`VarTable`."""

    __slots__ = ("table", "terms")

    def __init__(self, table: VarTable, terms: Mapping[Monomial, object] | None = None):
        self.table = table
        clean = {}
        if terms:
            nvars = len(table)
            for mono, c in terms.items():
                c = to_mpq(c)
                if c:
                    mono = tuple(mono)
                    if len(mono) != nvars:
                        raise ValueError("monomial length does not match table")
                    clean[mono] = c
        self.terms = clean

    @classmethod
    def _raw(cls, table, terms):
        # terms already canonical: mpq coefficients, no zeros
        p = cls.__new__(cls)
        p.table = table
        p.terms = terms
        return p

    # construction -----------------------------------------------------
    @classmethod
    def zero(cls, table: VarTable) -> "Polynomial":
        return cls._raw(table, {})

    @classmethod
    def constant(cls, table: VarTable, c) -> "Polynomial":
        c = to_mpq(c)
        return cls._raw(table, {table.zero_monomial(): c} if c else {})

    @classmethod
    def var(cls, table: VarTable, name: str) -> "Polynomial":
        return cls._raw(table, {table.variable_monomial(table.index(name)): mpq(1)})

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.table is not self.table and other.table != self.table:
                raise VarTableMismatch("polynomials live over different variable tables")
            return other
        return Polynomial.constant(self.table, other)

    # queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self.terms)

    def constant_term(self) -> mpq:
        return self.terms.get(self.table.zero_monomial(), mpq(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self.terms), default=-1)

    def weighted_degrees(self, weights: Sequence[int]) -> set:
        return {sum(w * e for w, e in zip(weights, m)) for m in self.terms}

    def variables(self) -> list:
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return sorted(used)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.table == other.table and self.terms == other.terms
        if isinstance(other, (int, Fraction)) or type(other) is type(mpq(0)):
            return self.terms == Polynomial.constant(self.table, other).terms
        return NotImplemented

    def __hash__(self):
        return hash((self.table, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"

    def __str__(self):
        return self.to_text()

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            if s is None:
                out[m] = c
            else:
                s = s + c
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial._raw(self.table, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.table, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = to_mpq(other)
            if not c:
                return Polynomial.zero(self.table)
            return Polynomial._raw(self.table, {m: v * c for m, v in self.terms.items()})
        other = self._coerce(other)
        if len(self.terms) > len(other.terms):
            a, b = other.terms, self.terms
        else:
            a, b = self.terms, other.terms
        out: dict = {}
        get = out.get
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = get(m, 0) + ca * cb
        return Polynomial._raw(self.table, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = Polynomial.constant(self.table, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def scale(self, c) -> "Polynomial":
        return self * to_mpq(c)

    def mul_monomial(self, mono: Monomial, c=1) -> "Polynomial":
        c = to_mpq(c)
        return Polynomial._raw(
            self.table, {_mono_mul(m, mono): v * c for m, v in self.terms.items()} if c else {}
        )

    # calculus / evaluation ---------------------------------------------------
    def diff(self, var) -> "Polynomial":
        """Formal partial derivative with respect to ``var`` (name or index)."""
        i = self.table.index(var) if isinstance(var, str) else var
        if not 0 <= i < len(self.table):
            raise UnknownVariable(f"variable index {i} out of range")
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] = e - 1
                out[tuple(mm)] = c * e
        return Polynomial._raw(self.table, out)

    def evaluate(self, point: Mapping) -> mpq:
        """Exact value at ``point`` (variable name -> rational)."""
        values = {}
        for i in self.variables():
            name = self.table.names[i]
            if name not in point:
                raise MissingAssignment(f"no value for {name}")
            values[i] = to_mpq(point[name])
        total = mpq(0)
        for m, c in self.terms.items():
            term = c
            for i, e in enumerate(m):
                if e:
                    term *= values[i] ** e
            total += term
        return total

    def substitute(self, images: Mapping[int, "Polynomial"]) -> "Polynomial":
        """Replace variable ``i`` by ``images[i]`` (same table)."""
        result = Polynomial.zero(self.table)
        powers: dict = {}
        for m, c in self.terms.items():
            rest = list(m)
            term = None
            for i, img in images.items():
                e = m[i]
                if e:
                    rest[i] = 0
                    key = (i, e)
                    if key not in powers:
                        powers[key] = img ** e
                    term = powers[key] if term is None else term * powers[key]
            mono_part = Polynomial._raw(self.table, {tuple(rest): c})
            result = result + (mono_part if term is None else mono_part * term)
        return result

    def remap(self, table: VarTable, rename: Mapping[str, str] | None = None) -> "Polynomial":
        """Move onto ``table``; variables are matched by (optionally renamed) name."""
        rename = rename or {}
        targets = []
        for name in self.table.names:
            target = rename.get(name, name)
            targets.append(table.index(target) if target in table else None)
        nv = len(table)
        out = {}
        for m, c in self.terms.items():
            mm = [0] * nv
            for i, e in enumerate(m):
                if e:
                    j = targets[i]
                    if j is None:
                        raise UnknownVariable(f"{self.table.names[i]} has no image in target table")
                    mm[j] += e
            mm = tuple(mm)
            out[mm] = out.get(mm, 0) + c
        return Polynomial(table, out)

    # text format -------------------------------------------------------------
    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda mc: grevlex_key(mc[0]), reverse=True)

    def to_text(self) -> str:
        if not self.terms:
            return "0"
        names = self.table.names
        parts = []
        for m, c in self.sorted_terms():
            factors = [format_rational(c)]
            factors += [f"{names[i]}^{e}" for i, e in enumerate(m) if e]
            parts.append("*".join(factors))
        return " + ".join(parts)

    @classmethod
    def parse(cls, text: str, table: VarTable) -> "Polynomial":
        text = text.strip()
        if text == "0":
            return cls.zero(table)
        terms: dict = {}
        for chunk in text.split(" + "):
            coeff, *factors = chunk.split("*")
            mono = [0] * len(table)
            for f in factors:
                name, _, exp = f.rpartition("^")
                if not name:
                    raise ValueError(f"factor {f!r} lacks an explicit exponent")
                mono[table.index(name)] += int(exp)
            mono = tuple(mono)
            terms[mono] = terms.get(mono, 0) + to_mpq(coeff)
        return cls(table, terms)


def poly_arith(p: Polynomial, q: Polynomial, op: str) -> Polynomial:
    if p.table != q.table:
        raise VarTableMismatch("polynomials live over different variable tables")
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"unknown operation {op!r}")


def poly_diff(p: Polynomial, v: str) -> Polynomial:
    return p.diff(v)


def poly_eval(p: Polynomial, point: Mapping) -> mpq:
    return p.evaluate(point)
