from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homchar import indexed
from homchar.cobar import Cobar
from homchar.graded import tadd
from homchar.hopf import BUILTINS, UpperTriangularHopf, builtin
from homchar.randgen import WordSampler, make_rng, random_element, random_mc

seeds = st.integers(0, 2**32 - 1)


def setup(name, N=4, seed=0):
    A = builtin(name)
    return A, Cobar(A, N), WordSampler(A), make_rng(seed)


@pytest.mark.parametrize("name", sorted(BUILTINS))
@settings(max_examples=10, deadline=None)
@given(seed=seeds)
def test_kappa_identities(name, seed):
    A, C, S, rng = setup(name, 4, seed)
    u = random_element(rng, S, rng.randint(-1, 2), 2)
    v = random_element(rng, S, rng.randint(-1, 2), 2)
    k = lambda x: indexed.kappa(A, x)
    assert k(k(u)) == u
    # kappa(u) kappa(v) = (-1)^{len(v)|u|} kappa(uv), word by word
    for wu, cu in u.items():
        for wv, cv in v.items():
            lhs = indexed.concat(k({wu: cu}), k({wv: cv}))
            s = -1 if (len(wv) * A.word_degree(wu)) & 1 else 1
            assert lhs == {w: s * c for w, c in k({wu + wv: cu * cv}).items()}


@pytest.mark.parametrize("name", sorted(BUILTINS))
@settings(max_examples=6, deadline=None)
@given(seed=seeds)
def test_reconciled_formulas_match_cobar(name, seed):
    A, C, S, rng = setup(name, 4, seed)
    a, b = random_mc(rng, C, S), random_mc(rng, C, S)
    for inp in (a, tadd(a, random_element(rng, S, 1, 4))):
        assert indexed.compare_form(C, inp).ok
    f = random_element(rng, S, rng.randint(-1, 2), 4)
    g = random_element(rng, S, rng.randint(-1, 2), 4)
    assert indexed.compare_diff(C, f, a, b).ok
    assert indexed.compare_diff(C, f, random_element(rng, S, 1, 4), b).ok  # twists need not be MC
    assert indexed.compare_mult(C, f, g).ok


def test_first_difference_reports_lowest_weight():
    assert indexed.first_difference({0: {}, 1: {("a",): 1}, 2: {}}, {0: {}, 1: {}, 2: {("b",): 1}}) == 1
    assert indexed.first_difference({1: {}}, {1: {}}) is None


def test_weight_one_hom_differential_is_multiplication_by_one_minus_g():
    # Hom(xy^-1, 1) in weight 0 -> 1 on the scalar f_0 = 1: components a_1 f_0 - f_0 b_1
    A = UpperTriangularHopf()
    C = Cobar(A, 2)
    g = {((1, -1, 0),): F(1)}
    one = C.unit_letter()
    D = indexed.diff_normative(C, C.one(), g, one)
    # (-1)^n normalization at n = 1 gives exactly 1 - xy^-1
    assert D[1] == {((0, 0, 0),): 1, ((1, -1, 0),): -1}
    at = indexed.components(indexed.kappa(A, g), 2)
    bt = indexed.components(indexed.kappa(A, one), 2)
    ft = indexed.components(C.one(), 2)
    assert indexed.diff_reconciled(A, at, ft, bt, 0, 1) == D[1]
    # the printed sums start at k = 1 and so miss both boundary terms
    assert indexed.diff_printed(A, at, ft, bt, 0, 1) == {}


def test_printed_mult_differs_somewhere():
    A, C, S, rng = setup("exterior", 4, 2)
    hits = 0
    for _ in range(20):
        f = random_element(rng, S, rng.randint(-1, 2), 4)
        g = random_element(rng, S, rng.randint(-1, 2), 4)
        cmp = indexed.compare_mult(C, f, g)
        assert cmp.ok
        hits += cmp.printed_diff is not None
    assert hits > 0
