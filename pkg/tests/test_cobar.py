from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from homchar.cobar import (
    Cobar,
    NotInvertible,
    NotMaurerCartan,
    cdg_morphism_check,
    compose_cdg,
    gauge_isomorphism_witness,
)
from homchar.graded import sign, tadd, tscale, weight_part
from homchar.hopf import BUILTINS, UpperTriangularHopf, builtin
from homchar.randgen import WordSampler, grouplikes, make_rng, random_element, random_invertible, random_mc

ONE, X, Y, Z = (0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)
seeds = st.integers(0, 2**32 - 1)


def setup(name, N=4, seed=0):
    A = builtin(name)
    C = Cobar(A, N)
    return A, C, WordSampler(A), make_rng(seed)


# -- differentials -------------------------------------------------------------------
def test_generator_differential_z2():
    A, C, _, _ = setup("z2")
    # d[c] = -[d c] - sum (-1)^{|c'|} [c'|c'']; degree-0 here
    assert C.diff({("e0",): F(1)}) == {("e0", "e0"): -1, ("e1", "e1"): -1}


def test_generator_differential_is_minus_coproduct_when_d_vanishes():
    A = UpperTriangularHopf()
    C = Cobar(A, 3)
    assert C.diff({(Z,): F(1)}) == {(X, Z): -1, (Z, Y): -1}


def test_coaugmented_differential():
    A = UpperTriangularHopf()
    C = Cobar(A, 3)
    assert C.coaug_diff(C.one()) == {}
    assert C.coaug_diff({(Z,): F(1)}) == {(X, Z): -1, (Z, Y): -1, (ONE, Z): 1, (Z, ONE): 1}


def test_differential_sign_across_letters():
    # exterior: letter [t] has degree 2, [1] degree 1
    A, C, _, _ = setup("exterior", 3)
    d1 = C.diff({("1",): F(1)})
    assert d1 == {("1", "1"): -1}
    dt = C.diff({("t",): F(1)})
    # Delta(t) = t|1 + 1|t, with (-1)^{|c'|}
    assert dt == {("t", "1"): 1, ("1", "t"): -1}
    # derivation: d([1][t]) = d[1][t] - [1]d[t]
    assert C.diff({("1", "t"): F(1)}) == tadd(C.mul(d1, {("t",): F(1)}), C.mul({("1",): F(1)}, dt), -1)


def test_products():
    A, C, _, _ = setup("upper-triangular", 2)
    z = {(Z,): F(1)}
    assert C.mul(C.one(), z) == z == C.mul(z, C.one())
    assert C.mul(z, z) == {(Z, Z): 1}
    assert C.mul({(Z, Z): F(1)}, z) == {}  # truncated at N = 2


@pytest.mark.parametrize("name", sorted(BUILTINS))
@settings(max_examples=15, deadline=None)
@given(seed=seeds)
def test_d_squared(name, seed):
    A, C, S, rng = setup(name, 4, seed)
    x = random_element(rng, S, rng.randint(-1, 2), 4)
    assert C.diff(C.diff(x)) == {}
    assert C.coaug_diff(C.coaug_diff(x)) == {}


@pytest.mark.parametrize("name", ["z2", "exterior-neg", "koszul-dg", "upper-triangular"])
@settings(max_examples=15, deadline=None)
@given(seed=seeds)
def test_leibniz(name, seed):
    A, C, S, rng = setup(name, 4, seed)
    x = random_element(rng, S, rng.randint(-1, 2), 4)
    y = random_element(rng, S, rng.randint(-1, 2), 4)
    rhs = tadd(C.mul(C.diff(x), y), C.mul(x, C.diff(y)), sign(C.degree(x) or 0))
    assert C.diff(C.mul(x, y)) == rhs


@pytest.mark.parametrize("name", ["z3", "exterior", "koszul-dg"])
@settings(max_examples=10, deadline=None)
@given(seed=seeds)
def test_truncation_is_a_quotient(name, seed):
    A, C, S, rng = setup(name, 3, seed)
    C4 = Cobar(A, 4)
    x = random_element(rng, S, rng.randint(-1, 2), 4)
    y = random_element(rng, S, rng.randint(-1, 2), 4)
    low = lambda v: {w: c for w, c in v.items() if len(w) <= 3}
    assert C.diff(C.truncate(x)) == low(C4.diff(x))
    assert C.mul(C.truncate(x), C.truncate(y)) == low(C4.mul(x, y))


# -- Maurer-Cartan ----------------------------------------------------------------------
@pytest.mark.parametrize("name", sorted(BUILTINS))
def test_grouplike_characters_are_mc(name):
    A, C, _, _ = setup(name, 4)
    for g in grouplikes(A):
        assert C.is_mc(C.letter(g))
    assert C.mc_curvature(C.unit_letter()) == {}


def test_non_character_residual_z2():
    A, C, _, _ = setup("z2", 4)
    R = C.mc_residuals({("e0",): F(1)})
    assert R[2] == {("e1", "e1"): -1}
    assert all(not R[n] for n in (0, 1, 3, 4))
    with pytest.raises(NotMaurerCartan):
        C.require_mc({("e0",): F(1)})


def test_twist_by_zero_and_by_unit():
    A, C, S, rng = setup("exterior-neg", 4, 3)
    one = C.unit_letter()
    for _ in range(10):
        x = random_element(rng, S, rng.randint(-1, 2), 4)
        assert C.twisted_diff(x, {}, {}) == C.diff(x)
    for l in A.basis():
        g = {(l,): F(1)}
        assert C.twisted_diff(g, one, one) == C.coaug_diff(g)


@pytest.mark.parametrize("name", sorted(BUILTINS))
@settings(max_examples=10, deadline=None)
@given(seed=seeds)
def test_twisted_d_squared(name, seed):
    A, C, S, rng = setup(name, 4, seed)
    a, b = random_mc(rng, C, S), random_mc(rng, C, S)
    x = random_element(rng, S, rng.randint(-1, 2), 4)
    assert C.twisted_diff(C.twisted_diff(x, a, b), a, b) == {}


# -- gauge ------------------------------------------------------------------------------
def test_identity_gauge():
    A, C, S, rng = setup("z3", 4, 1)
    a = random_mc(rng, C, S)
    assert C.gauge_act(C.one(), a) == a
    W = gauge_isomorphism_witness(C, C.one(), a)
    assert W.closed and W.invertible and W.source == a


@settings(max_examples=10, deadline=None)
@given(seed=seeds)
def test_pure_gauge_is_mc(seed):
    A, C, S, rng = setup("exterior", 4, seed)
    f = random_invertible(rng, C, S)
    fa = C.gauge_act(f, {})
    assert fa == C.mul(f, C.diff(C.inverse(f)))
    assert C.is_mc(fa)


def test_noninvertible_rejected():
    A, C, S, rng = setup("z2", 3)
    with pytest.raises(NotInvertible):
        C.inverse({("e0", "e0", "e1"): F(1)})
    with pytest.raises(ValueError):
        C.gauge_act({("e0",): F(1)}, C.unit_letter())


@pytest.mark.parametrize("name", sorted(BUILTINS))
@settings(max_examples=8, deadline=None)
@given(seed=seeds)
def test_gauge_group_action_and_witness(name, seed):
    A, C, S, rng = setup(name, 4, seed)
    a = random_mc(rng, C, S)
    f, g = random_invertible(rng, C, S), random_invertible(rng, C, S)
    assert C.is_mc(C.gauge_act(f, a))
    assert C.gauge_act(C.mul(f, g), a) == C.gauge_act(f, C.gauge_act(g, a))
    W = gauge_isomorphism_witness(C, f, a)
    assert W.closed and W.invertible


def test_z2_degree_zero_elements_are_scalars():
    A, C, _, _ = setup("z2", 4)
    for n in range(1, 5):
        assert all(C.word_degree(w) != 0 for w in A.words(n))


def test_witness_at_unit_object_exterior_neg():
    A, C, _, _ = setup("exterior-neg", 4)
    # [t] has degree 0 and counit e(t) = 0
    f = {(): F(1), ("t",): F(3, 2)}
    W = gauge_isomorphism_witness(C, f, C.unit_letter())
    assert W.closed and W.invertible
    assert C.mul(f, W.inverse) == C.one()


# -- CDG morphisms ---------------------------------------------------------------------
def test_cdg_identity():
    A, C, S, rng = setup("z2", 4, 2)
    a = random_mc(rng, C, S)
    xs = [random_element(rng, S, 1, 4) for _ in range(3)]
    assert cdg_morphism_check(C, a, a, {}, xs).ok


def test_cdg_unit_twist_change_element():
    A, C, S, rng = setup("upper-triangular", 4, 2)
    one = C.unit_letter()
    xs = [random_element(rng, S, d, 4) for d in (0, 1, 2)]
    # the change element is a - b = 1_A; its (curve2) residual is the MC residual of 1_A
    good = cdg_morphism_check(C, one, {}, one, xs)
    assert good.ok and good.curve2 == C.mc_curvature(one) == {}
    # with -1_A the residual is d(-1) + 1 = 2[1|1]
    bad = cdg_morphism_check(C, one, {}, tscale(one, -1), [])
    assert bad.curve2 == {(ONE, ONE): 2}


@settings(max_examples=10, deadline=None)
@given(seed=seeds)
def test_cdg_composition(seed):
    A, C, S, rng = setup("exterior-neg", 4, seed)
    a, b, c = (random_mc(rng, C, S) for _ in range(3))
    xs = [random_element(rng, S, rng.randint(-1, 2), 4) for _ in range(3)]
    first, second = tadd(a, b, -1), tadd(b, c, -1)
    assert cdg_morphism_check(C, a, b, first, xs).ok
    assert cdg_morphism_check(C, a, c, compose_cdg(second, first), xs).ok
