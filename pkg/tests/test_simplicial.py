import random
from fractions import Fraction as F

import pytest

from homchar.cobar import Cobar
from homchar.graded import sign
from homchar.hopf import builtin
from homchar.simplicial import (
    ConvolutionAlgebra,
    FatTotalization,
    LComplex,
    MooreComplex,
    NotMonotone,
    SimplicialIdentityError,
    SimplicialVectorSpace,
    _apply_signs,
    _transport,
    algebra_view,
    chains,
    convolution_checks,
    l_coproduct,
    l_cosimplicial_map,
    l_diff,
    l_invariant_checks,
    matching_map_check,
    resolution_map_checks,
    standard_simplex,
    totalization_vs_cobar,
)

from conftest import ALL, FINITE


# -- L^n -------------------------------------------------------------------------------
@pytest.mark.parametrize("n", range(6))
def test_l_dimension(n):
    assert LComplex(n).dim == 2 ** (n + 1) - 1


def test_l_small_examples():
    assert l_diff({(0, 1): 1}) == {(1,): 1, (0,): -1}
    assert l_coproduct({(0,): 1}) == {((0,), (0,)): 1}
    assert l_coproduct({(0, 1): 1}) == {((0,), (0, 1)): 1, ((0, 1), (1,)): 1}


def test_l_invariants():
    for c in l_invariant_checks(5):
        assert c.ok, (c.name, c.detail)


def test_degenerate_map_kills_edge():
    f = l_cosimplicial_map((0, 0), 1, 0)
    assert f({(0, 1): 1}) == {}
    assert f({(1,): 1}) == {(0,): 1}


def test_not_monotone():
    with pytest.raises(NotMonotone):
        l_cosimplicial_map((1, 0), 1, 1)
    with pytest.raises(NotMonotone):
        l_cosimplicial_map((0, 3), 1, 2)


# -- Moore complex ---------------------------------------------------------------------
@pytest.mark.parametrize("n", range(4))
def test_moore_complex_of_simplex_is_l(n):
    M = MooreComplex(standard_simplex(n))
    assert M.d_squared_zero()
    for k in range(n + 1):
        expected = [c for c in chains(n) if len(c) == k + 1]
        assert sorted(M.basis(k)) == sorted(expected)
        for c in expected:
            assert M.d(k, {c: 1}) == l_diff({c: 1})


def test_moore_rejects_broken_faces():
    X = standard_simplex(2)
    bad = SimplicialVectorSpace(X.bases, lambda i, b: {b[:i] + b[i + 1:]: 1 if i != 1 else 2}, X.degeneracy, X.top)
    with pytest.raises(SimplicialIdentityError):
        MooreComplex(bad)


# -- convolution algebras and the resolution map ----------------------------------------
@pytest.mark.parametrize("name", ["z2", "exterior"])
def test_convolution_algebra(name):
    for c in convolution_checks(builtin(name), n_max=2):
        assert c.ok, (c.name, c.detail)


@pytest.mark.parametrize("name", ["z2", "exterior"])
def test_resolution_map(name):
    checks = resolution_map_checks(builtin(name), n_max=2, rng=random.Random(1), samples=8)
    names = {c.name for c in checks}
    assert "resolution.homotopy" in names and "resolution.quasi_iso" in names
    for c in checks:
        assert c.ok, (c.name, c.detail)


def test_r_multiplicative_by_hand():
    A = builtin("z2")
    H = ConvolutionAlgebra(algebra_view(A), 2)
    for a in A.basis():
        for b in A.basis():
            x, y = {a: F(1)}, {b: F(1)}
            assert H.mul(H.r(x), H.r(y)) == H.r(A.mul(x, y))


def test_homotopy_needs_sign_on_even_cycles():
    A = builtin("exterior-neg")
    H = ConvolutionAlgebra(algebra_view(A), 1)
    # s = r(1) + D(u) is a closed degree-0 map with s(f_01) != 0
    s = H.add(H.r({"1": F(1)}), H.D({(1,): {"t": F(1)}}))
    assert H.degree(s) == 0 and H.D(s) == {} and s.get((0, 1))
    lhs = H.add(H.r(s.get((0,), {})), s, -1)
    assert lhs == H.D(H.homotopy_t(s))
    assert lhs != H.D(H.homotopy_t(s, literal=True))


@pytest.mark.parametrize("name", ["z2", "exterior"])
@pytest.mark.parametrize("n", range(4))
def test_matching_map(name, n):
    res = matching_map_check(builtin(name), n)
    assert set(res) == {"subcomplex", "subcoalgebra", "limit_dim", "hom_lbar_dim", "rank", "surjective"}
    assert res["subcomplex"] and res["subcoalgebra"] and res["surjective"]
    assert res["limit_dim"] == res["hom_lbar_dim"] == res["rank"]


# -- the fat totalization ----------------------------------------------------------------
def _words(A, N, window=None):
    return [w for n in range(N + 1) for w in A.words(n, window)]


@pytest.mark.parametrize("name", FINITE)
def test_totalization_structure(name):
    A = builtin(name)
    T = FatTotalization(A, 3)
    words = _words(A, 3)
    rng = random.Random(0)
    for w in words:
        x = {w: F(1)}
        assert T.d(T.d(x)) == {}
        assert T.d(x) == T.d_via_transformations(x)
        assert T.mul(T.one(), x) == x == T.mul(x, T.one())
    pairs = [(u, v) for u in words for v in words if len(u) + len(v) <= 3]
    for u, v in rng.sample(pairs, min(60, len(pairs))):
        x, y = {u: F(1)}, {v: F(1)}
        assert T.mul(x, y) == T.mul_via_transformations(x, y)
        p = T.word_degree(u)
        assert T.d(T.mul(x, y)) == _add(T.mul(T.d(x), y), T.mul(x, T.d(y)), sign(p))
    triples = [(u, v, w) for u in words for v in words for w in words if len(u) + len(v) + len(w) <= 3]
    for u, v, w in rng.sample(triples, min(60, len(triples))):
        x, y, z = {u: F(1)}, {v: F(1)}, {w: F(1)}
        assert T.mul(T.mul(x, y), z) == T.mul(x, T.mul(y, z))


def _add(x, y, c=1):
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, 0) + c * v
    return {k: v for k, v in out.items() if v}


def test_totalization_level_zero_is_ground_field():
    A = builtin("z2")
    T = FatTotalization(A, 0)
    x = {(): F(3)}
    assert T.d(x) == {}
    assert T.mul(x, x) == {(): F(9)}


CERT_CASES = [(n, 3, (1, 1) if n == "upper-triangular" else None) for n in ALL]


@pytest.mark.parametrize("name,N,window", CERT_CASES)
def test_totalization_vs_cobar_certificate(name, N, window):
    cert = totalization_vs_cobar(builtin(name), N, window=window, max_pairs=400, rng=random.Random(0))
    assert cert.ok, cert.describe()
    assert cert.signs[0] == 1


@pytest.mark.parametrize("name,N,window", CERT_CASES)
def test_uniform_intertwiner(name, N, window):
    # kappa_right, the internal parity and the weight signs (-1)^{n(n+1)/2} work everywhere
    A = builtin(name)
    T, C = FatTotalization(A, N), Cobar(A, N)
    signs = tuple(sign(n * (n + 1) // 2) for n in range(N + 1))
    phi = lambda x: _apply_signs(_transport(A, ("kappa_right", True), x), signs)
    words = _words(A, N, window)
    rng = random.Random(2)
    for w in rng.sample(words, min(150, len(words))):
        x = {w: F(1)}
        assert phi(T.d(x)) == C.coaug_diff(phi(x))
    pairs = [(u, v) for u in words for v in words if len(u) + len(v) <= N]
    for u, v in rng.sample(pairs, min(150, len(pairs))):
        x, y = {u: F(1)}, {v: F(1)}
        assert phi(T.mul(x, y)) == C.mul(phi(x), phi(y))
