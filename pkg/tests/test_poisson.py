import random
from functools import lru_cache
from itertools import combinations

import pytest
from gmpy2 import mpq
from hypothesis import given, settings
from hypothesis import strategies as st

import grslice.poisson as P
from grslice.errors import LabelInvalid, TruncationExceeded
from grslice.lattice import RootDatum
from grslice.polynomial import Polynomial, VarTable
from grslice.slices import minor_degree_check


def g(chart, i, j, s):
    return chart.var(i, j, s)


@pytest.fixture(scope="module")
def chart24():
    return P.GroupChart(2, 4)


# --------------------------------------------------------------------------- series

def test_vector_minor_series():
    c = P.GroupChart(2, 2)
    s = P.delta_series(P.MinorLabel(1, (1,), (1,)), c)
    assert s.coeffs == [Polynomial.constant(c.table, 1), g(c, 1, 1, 1), g(c, 1, 1, 2)]


def test_principal_minor_is_one_on_the_chart():
    c = P.GroupChart(2, 3)
    s = P.delta_series(P.MinorLabel(2, (1, 2), (1, 2)), c)
    assert s[0] == 1
    assert all(c.reduce(s[r]).is_zero() for r in range(1, 4))


def test_two_by_two_minor_order_one():
    c = P.GroupChart(3, 1)
    s = P.delta_series(P.MinorLabel(2, (1, 2), (1, 3)), c)
    assert s[0].is_zero()
    assert s[1] == g(c, 2, 3, 1)


def test_label_validation():
    c = P.GroupChart(3, 1)
    with pytest.raises(LabelInvalid):
        P.delta_series(P.MinorLabel(2, (1,), (1, 2)), c)
    with pytest.raises(LabelInvalid):
        P.delta_series(P.MinorLabel(1, (4,), (1,)), c)


def test_series_inverse():
    c = P.GroupChart(2, 4)
    s = P.delta_series(P.MinorLabel(1, (1,), (1,)), c)
    one = s * s.inverse()
    assert one[0] == 1 and all(one[r].is_zero() for r in range(1, 5))


def test_f_series_examples():
    c = P.GroupChart(2, 2)
    f = P.f_series(1, c)
    assert f[0].is_zero()
    assert f[1] == g(c, 1, 2, 1)
    assert f[2] == g(c, 1, 2, 2) - g(c, 1, 2, 1) * g(c, 1, 1, 1)
    c3 = P.GroupChart(3, 1)
    assert P.f_series(1, c3)[1] == g(c3, 1, 2, 1)
    assert all(P.f_series(i, P.GroupChart(4, 2))[0].is_zero() for i in (1, 2, 3))


def _laurent(d):
    t = VarTable(["a"])
    return P.Laurent(t, {e: Polynomial.constant(t, c) for e, c in d.items()})


def test_residue_plus_examples():
    r = P.residue_plus(_laurent({2: 1, 0: 1, -1: 1}))
    assert {e: c.constant_term() for e, c in r.terms.items()} == {2: 1, 0: 1}
    assert P.residue_plus(_laurent({-3: 1})).terms == {}
    assert {e: c.constant_term() for e, c in P.residue_plus(_laurent({0: 5})).terms.items()} == {0: 5}


laurent_data = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5).filter(bool), max_size=6)


@settings(max_examples=80, deadline=None)
@given(laurent_data, st.integers(0, 3))
def test_residue_plus_matches_kernel(d, k):
    T = _laurent(d).shift(k)
    assert P.residue_plus(T).terms == P.residue_kernel(T).terms
    expected = {e + k: v for e, v in d.items() if e + k >= 0}
    assert {e: c.constant_term() for e, c in P.residue_plus(T).terms.items()} == expected


def test_truncated_laurent_product_tracks_validity():
    c = P.GroupChart(2, 3)
    A = P.Laurent.from_series(P.delta_series(P.MinorLabel(1, (1,), (1,)), c))
    prod = A.shift(2) * A
    assert prod.low == -1
    with pytest.raises(TruncationExceeded):
        prod.coeff(-2)


# --------------------------------------------------------------------------- bracket

def test_bracket_examples():
    c = P.GroupChart(2, 2)
    x, y = g(c, 1, 1, 1), g(c, 1, 2, 1)
    assert c.bracket(x, x).is_zero()
    assert P.bracket(x, y, c) == -y
    assert c.bracket(Polynomial.constant(c.table, 7), x * y).is_zero()


def recursion_oracle(n, N):
    """Generator brackets obtained by running the (u - v) recursion literally."""
    c = P.GroupChart(n, N)

    def gg(i, j, s):
        if s == 0:
            return Polynomial.constant(c.table, int(i == j))
        return g(c, i, j, s)

    @lru_cache(maxsize=None)
    def br(i, j, r, k, l, s):
        # {g_ij^(r), g_kl^(s)}: peel r using {A^(r), B^(s)} = {A^(r-1), B^(s+1)} + C^(r-1, s)
        if r == 0:
            return Polynomial.zero(c.table)
        prev = br(i, j, r - 1, k, l, s + 1)
        return prev + gg(i, l, r - 1) * gg(k, j, s) - gg(k, j, r - 1) * gg(i, l, s)

    return c, br


@pytest.mark.parametrize("n,N", [(2, 4), (3, 3)])
def test_closed_form_matches_recursion(n, N):
    c, br = recursion_oracle(n, N)
    names = c.table.names
    for a, na in enumerate(names):
        for b, nb in enumerate(names):
            i, j, r = c._coords[a]
            k, l, s = c._coords[b]
            if r + s - 1 > N:
                with pytest.raises(TruncationExceeded):
                    c.generator_bracket(a, b)
                continue
            assert c.generator_bracket(a, b) == br(i, j, r, k, l, s)


def test_truncation_error(chart24):
    with pytest.raises(TruncationExceeded):
        chart24.bracket(g(chart24, 1, 1, 3), g(chart24, 1, 2, 3))
    with pytest.raises(TruncationExceeded):
        chart24.var(1, 1, 5)


def test_axioms_exhaustive_n2():
    for N in range(1, 5):
        for v in P.verify_axioms(2, N):
            assert v.verdict, v.to_dict()


def test_axioms_sampled_n3():
    verdicts = P.verify_axioms(3, 3, sample=60, seed=1)
    assert all(v.verdict for v in verdicts)
    assert verdicts[2].parameters["triples"] == 60


@settings(max_examples=25, deadline=None)
@given(st.randoms(use_true_random=False))
def test_bracket_of_products_is_antisymmetric(rng):
    c = P.GroupChart(2, 3)
    gens = [Polynomial.var(c.table, nm) for nm in c.table.names if nm.endswith("[1]")]
    p = rng.choice(gens) * rng.choice(gens) + rng.randint(-2, 2)
    q = rng.choice(gens) + rng.choice(gens) * rng.randint(-2, 2)
    assert (c.bracket(p, q) + c.bracket(q, p)).is_zero()


def test_determinant_coefficients_are_central():
    for N in range(1, 5):
        c = P.GroupChart(2, N)
        dets = c.relations
        for p in dets:
            for x in c.table.names:
                gx = Polynomial.var(c.table, x)
                if max(c.weight(p)) + max(c.weight(gx)) - 1 <= N:
                    assert c.reduce(c.bracket(p, gx)).is_zero()


# --------------------------------------------------------------------------- representations

def test_dual_basis_reproduces_trace_form():
    rng = random.Random(3)
    for n in (2, 3, 4):
        table = P.DualBasisTable(n)
        for _ in range(5):
            X = {(a, b): mpq(rng.randint(-3, 3)) for a in range(1, n + 1) for b in range(1, n + 1)}
            Y = {(a, b): mpq(rng.randint(-3, 3)) for a in range(1, n + 1) for b in range(1, n + 1)}
            for M in (X, Y):
                tr = sum(M[(a, a)] for a in range(1, n + 1))
                M[(n, n)] -= tr
            assert table.casimir_pairing(X, Y) == table.trace_form(X, Y)


def test_exterior_action_signs():
    # E_31 e_{1,2} = e_{3,2} = -e_{2,3}
    assert P.ext_apply({(3, 1): mpq(1)}, {(1, 2): mpq(1)}) == {(2, 3): -1}
    assert P.ext_apply({(1, 1): mpq(1)}, {(1, 2): mpq(1)}) == {(1, 2): 1}
    assert P.ext_apply_dual({(1, 2): mpq(1)}, {(1,): mpq(1)}) == {(2,): -1}
    assert P.ext_apply_dual({(1, 2): mpq(1)}, {(1,): mpq(1)}, P.TRANSPOSE) == {(2,): 1}


def test_weight_pairing():
    assert P.weight_pairing_root(1, (1,)) == 1
    assert P.weight_pairing_root(1, (2,)) == -1
    assert P.weight_pairing_root(1, (1, 2)) == 0


def labels(n):
    return [P.MinorLabel(i, I, J) for i in range(1, n + 1)
            for I in combinations(range(1, n + 1), i) for J in combinations(range(1, n + 1), i)]


def test_minor_identity_examples():
    c2 = P.GroupChart(2, 3)
    vec = P.MinorLabel(1, (1,), (1,))
    assert P.verify_minor_bracket_identity(vec, vec, c2).verdict
    det = P.MinorLabel(2, (1, 2), (1, 2))
    for other in labels(2):
        assert P.verify_minor_bracket_identity(det, other, c2).verdict
    c3 = P.GroupChart(3, 2)
    v = P.verify_minor_bracket_identity(P.MinorLabel(1, (1,), (2,)), P.MinorLabel(2, (1, 2), (1, 3)), c3)
    assert v.verdict and v.truncation == 2


def test_minor_identity_all_labels_n3():
    c = P.GroupChart(3, 2)
    for a in labels(3):
        for b in labels(3):
            assert not P.minor_bracket_residuals(a, b, c)


def test_minor_identity_is_insensitive_to_dual_convention():
    # both left-hand factors carry the dual action, so the sign squares away
    c = P.GroupChart(3, 2)
    for a, b in [(labels(3)[0], labels(3)[12]), (labels(3)[5], labels(3)[9])]:
        assert P.verify_minor_bracket_identity(a, b, c, P.TRANSPOSE).verdict


def test_minor_identity_detects_a_wrong_sign(monkeypatch):
    monkeypatch.setattr(P, "BRACKET_SIGN", -1)
    c = P.GroupChart(2, 2)
    vec = P.MinorLabel(1, (1,), (2,))
    assert not P.verify_minor_bracket_identity(vec, P.MinorLabel(1, (2,), (1,)), c).verdict


# --------------------------------------------------------------------------- bracket with f_j

@pytest.mark.parametrize("k", [1, 2])
def test_f_bracket_n2(k):
    c = P.GroupChart(2, k + 3)
    for lab in [P.MinorLabel(1, (1,), (1,)), P.MinorLabel(1, (1,), (2,)), P.MinorLabel(2, (1, 2), (1, 2))]:
        v = P.verify_lemma_bracket_f(1, k, lab, c)
        assert v.verdict, v.witness


def test_f_bracket_n3():
    c = P.GroupChart(3, 3)
    for j in (1, 2):
        for i in (1, 2):
            for J in combinations(range(1, 4), i):
                assert P.verify_lemma_bracket_f(j, 1, P.MinorLabel(i, P.highest(i), J), c).verdict


def test_f_bracket_degree_bounds():
    c = P.GroupChart(2, 5)
    _, _, p, qs = P.lemma_f_sides(1, 2, P.MinorLabel(1, (1,), (2,)), c)
    assert p.degree() <= 1
    assert all(q.degree() <= 1 for q in qs.values())
    assert p.terms[1] == -g(c, 1, 2, 1)


def test_f_bracket_fails_under_the_opposite_sign(monkeypatch):
    monkeypatch.setattr(P, "BRACKET_SIGN", -1)
    c = P.GroupChart(2, 5)
    assert not P.verify_lemma_bracket_f(1, 2, P.MinorLabel(1, (1,), (2,)), c).verdict


def test_f_bracket_requires_principal_rows():
    c = P.GroupChart(2, 4)
    with pytest.raises(LabelInvalid):
        P.verify_lemma_bracket_f(1, 1, P.MinorLabel(1, (2,), (1,)), c)
    with pytest.raises(TruncationExceeded):
        P.verify_lemma_bracket_f(1, 3, P.MinorLabel(1, (1,), (1,)), P.GroupChart(2, 3))


def test_f_bracket_verdict_is_stable_in_truncation():
    lab = P.MinorLabel(1, (1,), (2,))
    assert all(P.verify_lemma_bracket_f(1, 1, lab, P.GroupChart(2, N)).verdict for N in (2, 3, 4, 5))


# --------------------------------------------------------------------------- ideals

def _sl(n):
    return RootDatum.type_a(n)


def test_generator_set_sl2():
    c = P.GroupChart(2, 3)
    gens = P.slice_generator_set(_sl(2).fundamental(1) * 2, _sl(2).zero(), c)
    expected = {g(c, i, j, s) for i in (1, 2) for j in (1, 2) for s in (2, 3)}
    assert set(gens) == expected


def test_generator_set_equal_weights():
    c = P.GroupChart(2, 3)
    mu = _sl(2).fundamental(1) * 2
    gens = P.slice_generator_set(mu, mu, c)
    expected = {g(c, i, 1, s) for i in (1, 2) for s in (1, 2, 3)} | {g(c, i, 2, 3) for i in (1, 2)}
    assert set(gens) == expected


@pytest.mark.parametrize("n,k", [(2, 1), (2, 2), (3, 1), (3, 2)])
def test_thresholds_match_minor_degrees(n, k):
    th = P.generator_thresholds(P.kn_varpi_one(n, k), _sl(n).zero())
    for (i, J), value in th.items():
        assert value == k * i
    assert all(minor_degree_check(n, k, i) for i in range(1, n))


def test_root_coordinates_of_weights():
    # varpi_1 - wt(e_3) = alpha_1 + alpha_2 in SL_3
    assert P.root_coords_below_top(1, (3,), 3) == (1, 1)
    assert P.root_coords_below_top(2, (1, 2), 3) == (0, 0)
    assert P.root_coords_below_top(2, (2, 3), 3) == (1, 1)
    assert P.MinorLabel(1, (1,), (3,)).weight(3) == (1, 1)


@pytest.mark.parametrize("n,k,N", [(2, 1, 2), (2, 1, 3), (2, 2, 3)])
def test_ideal_comparison(n, k, N):
    v = P.compare_ideals_mu_zero(n, k, N)
    assert v.verdict, v.witness


def test_eliminated_ideal_is_trace_and_determinant():
    from grslice.groebner import ideal_equal

    out = P.eliminated_ideal_mu_zero(2, 1, 2)
    t = out[0].table
    v = {nm: Polynomial.var(t, nm) for nm in t.names}
    trace = v["g[1][1][1]"] + v["g[2][2][1]"]
    det = v["g[1][1][1]"] * v["g[2][2][1]"] - v["g[1][2][1]"] * v["g[2][1][1]"]
    assert ideal_equal(out, [trace, det])


def test_comparison_needs_room():
    with pytest.raises(TruncationExceeded):
        P.compare_ideals_mu_zero(2, 2, 2)


def test_closure_under_brackets():
    c = P.GroupChart(2, 3)
    assert P.closure_residuals(c, P.kn_varpi_one(2, 1), _sl(2).zero()) == []


def test_poisson_generators_are_minors():
    c = P.GroupChart(2, 2)
    gens = dict((p.to_text(), w) for w, p in P.poisson_generators(_sl(2).zero(), c))
    # e_1 acting on v_1^* gives -e_2^*, so the raised minor is -g_21
    assert gens[(-g(c, 2, 1, 1)).to_text()] == 1
    assert gens[g(c, 1, 1, 1).to_text()] == 1
    assert gens[g(c, 1, 2, 1).to_text()] == 1


def test_verdict_records():
    c = P.GroupChart(2, 3)
    d = P.verify_lemma_bracket_f(1, 1, P.MinorLabel(1, (1,), (1,)), c).to_dict()
    assert set(d) == {"check", "parameters", "truncation", "verdict", "witness"}
    assert d["truncation"] == 3 and d["witness"] is None
