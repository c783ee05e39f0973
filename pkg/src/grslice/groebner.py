"""Buchberger's algorithm over Q with Gebauer-Moeller pair elimination.

The kernel is deterministic: pairs are chosen by the normal strategy
(smallest lcm first, ties broken by the pair's position), so identical
inputs give identical bases and identical statistics.
"""

from __future__ import annotations

import heapq
import os
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence


from .errors import BudgetExceeded, VarTableMismatch
from .polynomial import Polynomial, VarTable


@dataclass(frozen=True)
class TermOrder:
    """``grevlex`` | ``lex`` | ``block``; variable 0 is the largest variable.

    ``block`` compares the first ``split`` variables by grevlex and breaks
    ties with grevlex on the rest, which makes it an elimination order for
    the first block.
    """

    kind: str = "grevlex"
    split: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown term order {self.kind!r}")

    def key_function(self):
        if self.kind == "grevlex":
            return lambda m: (sum(m),) + tuple(-e for e in reversed(m))
        if self.kind == "lex":
            return tuple
        split = self.split

        def block_key(m):
            a, b = m[:split], m[split:]
            return (sum(a),) + tuple(-e for e in reversed(a)) + (sum(b),) + tuple(-e for e in reversed(b))

        return block_key

    def __str__(self):
        return self.kind if self.kind != "block" else f"block({self.split})"


GREVLEX = TermOrder("grevlex")


@dataclass
class Budget:
    max_pairs: int = 1_000_000
    max_degree: int = 40
    max_seconds: float | None = None

    @classmethod
    def from_env(cls, **overrides) -> "Budget":
        """Defaults, then ``GRSLICE_MAX_PAIRS`` etc., then explicit overrides."""
        budget = cls()
        env = os.environ
        if "GRSLICE_MAX_PAIRS" in env:
            budget.max_pairs = int(env["GRSLICE_MAX_PAIRS"])
        if "GRSLICE_MAX_DEGREE" in env:
            budget.max_degree = int(env["GRSLICE_MAX_DEGREE"])
        if "GRSLICE_MAX_SECONDS" in env:
            budget.max_seconds = float(env["GRSLICE_MAX_SECONDS"])
        for name, value in overrides.items():
            if value is not None:
                setattr(budget, name, value)
        return budget


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b) -> bool:
    return not any(x and y for x, y in zip(a, b))


class _Reducer:
    """Monic polynomials (as dicts) indexed for leading-term division."""

    def __init__(self, key):
        self.key = key
        self.polys: list = []   # list of dict terms
        self.leads: list = []   # leading monomials
        self.active: list = []  # indices usable as reducers

    def add(self, terms: dict, lead) -> int:
        self.polys.append(terms)
        self.leads.append(lead)
        return len(self.polys) - 1

    def find_divisor(self, mono, pool):
        leads = self.leads
        for i in pool:
            if _divides(leads[i], mono):
                return i
        return None

    def reduce(self, f: dict, pool, tail: bool = True) -> dict:
        key = self.key
        f = dict(f)
        heap = [(tuple(-x for x in key(m)), m) for m in f]
        heapq.heapify(heap)
        rem = {}
        leads, polys = self.leads, self.polys
        while heap:
            _, m = heapq.heappop(heap)
            c = f.pop(m, None)
            if c is None:
                continue
            i = self.find_divisor(m, pool)
            if i is None:
                if not tail:
                    rem[m] = c
                    rem.update(f)
                    return rem
                rem[m] = c
                continue
            q = tuple(x - y for x, y in zip(m, leads[i]))
            lead = leads[i]
            for mg, cg in polys[i].items():
                if mg == lead:
                    continue
                mm = tuple(x + y for x, y in zip(mg, q))
                old = f.get(mm)
                if old is None:
                    f[mm] = -c * cg
                    heapq.heappush(heap, (tuple(-x for x in key(mm)), mm))
                else:
                    new = old - c * cg
                    if new:
                        f[mm] = new
                    else:
                        del f[mm]
        return rem


def _monic(terms: dict, key):
    lead = max(terms, key=key)
    inv = 1 / terms[lead]
    if inv == 1:
        return dict(terms), lead
    return {m: c * inv for m, c in terms.items()}, lead


@dataclass
class GroebnerBasis:
    generators: list
    order: TermOrder
    table: VarTable
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        self._key = self.order.key_function()
        self._reducer = _Reducer(self._key)
        pool = []
        for g in self.generators:
            lead = max(g.terms, key=self._key)
            pool.append(self._reducer.add(g.terms, lead))
        self._pool = pool

    @property
    def leading_monomials(self) -> list:
        return list(self._reducer.leads)

    def normal_form(self, p: Polynomial) -> Polynomial:
        if p.table != self.table:
            raise VarTableMismatch("polynomial and basis use different variable tables")
        if p.is_zero():
            return p
        return Polynomial._raw(self.table, self._reducer.reduce(p.terms, self._pool))

    def contains(self, p: Polynomial) -> bool:
        return self.normal_form(p).is_zero()

    def is_unit(self) -> bool:
        return any(not any(m) for m in self._reducer.leads)

    def texts(self) -> list:
        return [g.to_text() for g in self.generators]


def buchberger(gens: Sequence[Polynomial], order: TermOrder = GREVLEX, budget: Budget | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    table = gens[0].table
    for g in gens:
        if g.table != table:
            raise VarTableMismatch("generators over different variable tables")
    budget = budget or Budget.from_env()
    key = order.key_function()
    red = _Reducer(key)
    stats = {"pairs_considered": 0, "spairs_reduced": 0, "zero_reductions": 0, "pairs_eliminated": 0,
             "max_degree": 0, "basis_size": 0}
    start = time.monotonic()

    def check_budget(deg):
        if deg > stats["max_degree"]:
            stats["max_degree"] = deg
        if deg > budget.max_degree:
            raise BudgetExceeded(f"intermediate degree {deg} exceeds cap {budget.max_degree}", dict(stats))
        # every pair formed counts, including those the criteria discard
        if stats["pairs_considered"] > budget.max_pairs:
            raise BudgetExceeded(f"critical pairs exceed cap {budget.max_pairs}", dict(stats))
        if budget.max_seconds is not None and time.monotonic() - start > budget.max_seconds:
            raise BudgetExceeded(f"time cap of {budget.max_seconds}s exceeded", dict(stats))

    G: list = []
    B: list = []

    def update(h: int):
        nonlocal G, B
        lh = red.leads[h]
        C = list(G)
        D = []
        lcms = {g: _lcm(lh, red.leads[g]) for g in C}
        stats["pairs_considered"] += len(C)
        check_budget(0)
        while C:
            g1 = C.pop(0)
            l1 = lcms[g1]
            if _coprime(lh, red.leads[g1]):
                D.append(g1)
                continue
            if any(_divides(lcms[g2], l1) for g2 in C) or any(_divides(lcms[g2], l1) for g2 in D):
                stats["pairs_eliminated"] += 1
                continue
            D.append(g1)
        E = []
        for g in D:
            if _coprime(lh, red.leads[g]):
                stats["pairs_eliminated"] += 1
            else:
                E.append((g, h, lcms[g]))
        kept = []
        for (g1, g2, l12) in B:
            if (_divides(lh, l12) and _lcm(red.leads[g1], lh) != l12 and _lcm(lh, red.leads[g2]) != l12):
                stats["pairs_eliminated"] += 1
            else:
                kept.append((g1, g2, l12))
        B = kept + E
        G = [g for g in G if not _divides(lh, red.leads[g])] + [h]

    seed = []
    for g in gens:
        if not g.is_zero():
            terms, lead = _monic(g.terms, key)
            seed.append((key(lead), terms))
    seed.sort(key=lambda t: t[0])
    for _, terms in seed:
        h = red.reduce(terms, G)
        if not h:
            continue
        h, lead = _monic(h, key)
        check_budget(max(sum(m) for m in h))
        idx = red.add(h, lead)
        if not any(lead):
            G, B = [idx], []
            break
        update(idx)

    while B:
        best = min(range(len(B)), key=lambda t: (sum(B[t][2]), key(B[t][2]), B[t][0], B[t][1]))
        g1, g2, l = B.pop(best)
        stats["spairs_reduced"] += 1
        f1, f2 = red.polys[g1], red.polys[g2]
        q1 = tuple(x - y for x, y in zip(l, red.leads[g1]))
        q2 = tuple(x - y for x, y in zip(l, red.leads[g2]))
        s = {}
        for m, c in f1.items():
            s[tuple(x + y for x, y in zip(m, q1))] = c
        for m, c in f2.items():
            mm = tuple(x + y for x, y in zip(m, q2))
            v = s.get(mm, 0) - c
            if v:
                s[mm] = v
            else:
                s.pop(mm, None)
        check_budget(sum(l))
        if not s:
            stats["zero_reductions"] += 1
            continue
        h = red.reduce(s, G)
        if not h:
            stats["zero_reductions"] += 1
            continue
        h, lead = _monic(h, key)
        check_budget(max(sum(m) for m in h))
        idx = red.add(h, lead)
        if not any(lead):
            G, B = [idx], []
            break
        update(idx)

    # inter-reduce into the reduced basis
    G.sort(key=lambda i: key(red.leads[i]))
    final = []
    for pos, i in enumerate(G):
        others = [j for j in G if j != i]
        terms = red.reduce(red.polys[i], others)
        terms, lead = _monic(terms, key)
        final.append((key(lead), terms))
    final.sort(key=lambda t: t[0])
    polys = [Polynomial._raw(table, terms) for _, terms in final]
    stats["basis_size"] = len(polys)
    return GroebnerBasis(polys, order, table, stats)


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    return gb.normal_form(p)


def spoly_check(gb: GroebnerBasis) -> bool:
    """Post-hoc Buchberger criterion: every S-polynomial reduces to zero."""
    red = gb._reducer
    n = len(gb.generators)
    for a in range(n):
        for b in range(a + 1, n):
            la, lb = red.leads[a], red.leads[b]
            l = _lcm(la, lb)
            qa = tuple(x - y for x, y in zip(l, la))
            qb = tuple(x - y for x, y in zip(l, lb))
            s = gb.generators[a].mul_monomial(qa) - gb.generators[b].mul_monomial(qb)
            if not gb.normal_form(s).is_zero():
                return False
    return True


def ideal_equal(A: Sequence[Polynomial], B: Sequence[Polynomial], order: TermOrder = GREVLEX, budget: Budget | None = None) -> bool:
    """Mutual membership of the ideals generated by ``A`` and ``B``."""
    A = [p for p in A if not p.is_zero()]
    B = [p for p in B if not p.is_zero()]
    if not A or not B:
        return not A and not B
    ga = buchberger(A, order, budget)
    gb = buchberger(B, order, budget)
    return all(gb.contains(p) for p in A) and all(ga.contains(p) for p in B)


def _min_hitting_set(supports: list, best: int) -> int:
    """Size of a smallest variable set meeting every support (branch and bound)."""
    if not supports:
        return 0
    if best <= 0:
        return best + 1
    target = min(supports, key=len)
    result = best
    for v in sorted(target):
        rest = [s for s in supports if v not in s]
        sub = _min_hitting_set(rest, result - 1)
        if sub + 1 < result:
            result = sub + 1
    return result


def krull_dimension(gb: GroebnerBasis) -> int:
    """Dimension of ``Q[vars]/I``; -1 for the unit ideal."""
    nvars = len(gb.table)
    leads = gb.leading_monomials
    if any(not any(m) for m in leads):
        return -1
    supports = {frozenset(i for i, e in enumerate(m) if e) for m in leads}
    minimal = [s for s in supports if not any(t < s for t in supports)]
    return nvars - _min_hitting_set(minimal, nvars + 1)


def eliminate(gens: Sequence[Polynomial], keep: Iterable[str], budget: Budget | None = None) -> list:
    """Generators of ``I ∩ Q[keep]``, as polynomials over a table of the kept variables."""
    gens = [g for g in gens if not g.is_zero()]
    keep = set(keep)
    table = gens[0].table if gens else None
    if table is None:
        return []
    drop = [v for v in table.names if v not in keep]
    kept = [v for v in table.names if v in keep]
    block_table = VarTable(drop + kept)
    moved = [g.remap(block_table) for g in gens]
    gb = buchberger(moved, TermOrder("block", len(drop)), budget)
    kept_table = VarTable(kept)
    nd = len(drop)
    out = []
    for g in gb.generators:
        if all(not any(m[:nd]) for m in g.terms):
            out.append(g.remap(kept_table))
    return out
