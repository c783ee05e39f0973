from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from grslice.errors import (
    ApexOutOfRange,
    DifferenceNotInCorootLattice,
    NonIntegralCoweight,
    NotDominated,
    UnsupportedType,
)
from grslice.lattice import (
    Coweight,
    RootDatum,
    TriangleFunction,
    dim_orbit,
    dual_star,
    generate_closure,
    is_dominant,
    is_summand,
    is_two_adjacent_fundamental,
    meet,
    pair_simple_root,
    rational_min,
    threshold_data,
    triangle_coweight,
    two_adjacent_cone,
)


def cw(*coords):
    return Coweight.of(coords)


def dominant_integral(rank, bound):
    datum = RootDatum.type_a(rank + 1)
    return [Coweight(c, datum) for c in product(range(bound + 1), repeat=rank) if is_dominant(Coweight(c, datum))]


def test_type_a_cartan():
    d = RootDatum.type_a(4)
    assert d.cartan == ((2, -1, 0), (-1, 2, -1), (0, -1, 2))
    assert d.symmetrizers == (1, 1, 1)


def test_rejects_bad_cartan():
    with pytest.raises(ValueError):
        RootDatum(((2, 1), (1, 2)), (1, 1))
    with pytest.raises(ValueError):
        RootDatum(((2, -1), (-2, 2)), (1, 1))


def test_non_type_a_accepts_symmetrizable_b2():
    b2 = RootDatum(((2, -1), (-2, 2)), (2, 1))
    lam = Coweight((1, 1), b2)
    with pytest.raises(UnsupportedType):
        threshold_data(lam, lam)


def test_pairings():
    assert pair_simple_root(cw(1), 1) == 2
    assert pair_simple_root(cw(Fraction(2, 3), Fraction(1, 3)), 1) == 1
    for n in range(2, 6):
        lam = Coweight.of(range(n - 1, 0, -1))
        assert lam == RootDatum.type_a(n).fundamental(1) * n
        assert pair_simple_root(lam, 1) == n


def test_fundamental_coweights():
    d = RootDatum.type_a(3)
    assert d.fundamental(1).coords == (Fraction(2, 3), Fraction(1, 3))
    assert d.fundamental(2).coords == (Fraction(1, 3), Fraction(2, 3))


def test_dominance_examples():
    assert is_dominant(RootDatum.type_a(3).fundamental(1))
    assert not is_dominant(-cw(1))
    assert is_dominant(cw(1, 1))


def test_meet_examples():
    lam = cw(2, 1)
    assert meet(lam, lam) == lam
    assert meet(cw(2, 1), cw(1, 2)) == cw(1, 1)
    with pytest.raises(DifferenceNotInCorootLattice):
        meet(cw(1), cw(Fraction(1, 2)))


def test_summand_examples():
    assert is_summand(cw(0, 0), cw(2, 1))
    # (2,1) - (1,1) = (1,0) pairs to (2,-1) with the simple roots
    assert not is_summand(cw(1, 1), cw(2, 1))
    assert is_summand(cw(1), cw(3))


def test_dual_star():
    assert dual_star(cw(5)) == cw(5)
    assert dual_star(cw(2, 1)) == cw(1, 2)
    assert dual_star(cw(3, 2, 1)) == cw(1, 2, 3)


def test_dual_star_matches_longest_element():
    # -w0 on coroot coordinates of A_3: w0 sends alpha_i to -alpha_{4-i}
    lam = cw(5, 3, 1)
    w0 = tuple(-c for c in reversed(lam.coords))
    assert dual_star(lam).coords == tuple(-c for c in w0)


def test_dim_orbit():
    assert dim_orbit(cw(1)) == 2
    assert dim_orbit(cw(2, 1)) == 6
    assert dim_orbit(cw(0, 0)) == 0
    with pytest.raises(NonIntegralCoweight):
        dim_orbit(cw(Fraction(1, 2)))
    for n in range(2, 6):
        for k in range(1, 4):
            lam = RootDatum.type_a(n).fundamental(1) * (k * n)
            assert dim_orbit(lam) == k * n * (n - 1)


def test_triangle_examples():
    assert triangle_coweight(3, 1, Fraction(2, 3)) == RootDatum.type_a(3).fundamental(1)
    assert triangle_coweight(3, 2, Fraction(2, 3)) == RootDatum.type_a(3).fundamental(2)
    assert triangle_coweight(2, 1, 1) == cw(1)
    with pytest.raises(ApexOutOfRange):
        triangle_coweight(3, 0, 1)


apex = st.tuples(st.fractions(1, 4, max_denominator=3), st.fractions(0, 5, max_denominator=3))


@settings(max_examples=80, deadline=None)
@given(apex, apex)
def test_triangle_sampling_respects_min(p, q):
    f, g = TriangleFunction(5, *p), TriangleFunction(5, *q)
    h = f.minimum(g)
    for i in range(6):
        assert h(i) == min(f(i), g(i))
    assert h.sample() == rational_min(f.sample(), g.sample())


def test_closure_examples():
    assert generate_closure([], 5) == set()
    assert cw(1, 1) in generate_closure([cw(2, 1), cw(1, 2)], 3)
    assert generate_closure([cw(1)], 10) == {cw(0), cw(1)}


def test_two_adjacent():
    assert not is_two_adjacent_fundamental(cw(1, 1, 1))  # pairings (1,0,1)
    assert is_two_adjacent_fundamental(cw(1, 1))
    assert is_two_adjacent_fundamental(cw(0, 0, 0))


def test_two_adjacent_cone_rational_contains_fundamentals():
    rational = two_adjacent_cone(3, 2, integral=False)
    integral = two_adjacent_cone(3, 2, integral=True)
    assert RootDatum.type_a(3).fundamental(1) in rational
    assert integral <= rational
    assert all(lam.is_integral for lam in integral)


def test_threshold_data():
    t = threshold_data(cw(1), cw(0))
    assert t.m == (1,) and t.mu_star_pairings == (0,)
    for n in range(2, 5):
        for k in range(1, 3):
            lam = RootDatum.type_a(n).fundamental(1) * (k * n)
            t = threshold_data(lam, RootDatum.type_a(n).zero())
            assert t.m == tuple(k * i for i in range(1, n))
    assert threshold_data(cw(2, 1), cw(2, 1)).m == (0, 0)
    with pytest.raises(NotDominated):
        threshold_data(cw(1, 1), cw(2, 1))


@pytest.mark.parametrize("rank", [1, 2, 3])
def test_meet_algebra_exhaustive(rank):
    weights = dominant_integral(rank, 6 if rank < 3 else 4)
    for a in weights:
        assert meet(a, a) == a
        for b in weights:
            ab = meet(a, b)
            assert ab == meet(b, a)
            assert dual_star(ab) == meet(dual_star(a), dual_star(b))
    for a, b, c in product(weights[:12], repeat=3):
        assert meet(meet(a, b), c) == meet(a, meet(b, c))


def test_dual_star_involution():
    for lam in dominant_integral(3, 4):
        assert dual_star(dual_star(lam)) == lam
