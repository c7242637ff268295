from fractions import Fraction as F

from hypothesis import given
from hypothesis import strategies as st

from homchar.graded import fmt_tensor, koszul_sign, sign, tadd, transposition_sign, tscale, weight_part


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=7), st.randoms(use_true_random=False))
def test_koszul_sign_independent_of_decomposition(degrees, rnd):
    perm = list(range(len(degrees)))
    rnd.shuffle(perm)
    assert koszul_sign(degrees, perm) == transposition_sign(degrees, perm)


@given(st.lists(st.integers(-3, 3), min_size=1, max_size=6))
def test_identity_permutation_has_sign_one(degrees):
    assert koszul_sign(degrees, list(range(len(degrees)))) == 1


@given(st.integers(-4, 4), st.integers(-4, 4))
def test_single_swap(p, q):
    assert koszul_sign([p, q], [1, 0]) == sign(p * q)


@given(st.lists(st.integers(-2, 2), min_size=2, max_size=6), st.randoms(use_true_random=False))
def test_sign_multiplicative_under_composition(degrees, rnd):
    n = len(degrees)
    p = list(range(n))
    rnd.shuffle(p)
    q = list(range(n))
    rnd.shuffle(q)
    # apply p, then q to the rearranged sequence
    after_p = [degrees[i] for i in p]
    composed = [p[i] for i in q]
    assert koszul_sign(degrees, composed) == koszul_sign(degrees, p) * koszul_sign(after_p, q)


def test_tensor_helpers_drop_zeros():
    x = {("a",): F(1), ("a", "b"): F(2)}
    assert tadd(x, x, -1) == {}
    assert tscale(x, 0) == {}
    assert weight_part(x, 2) == {("a", "b"): 2}
    assert fmt_tensor({("a", "b"): F(-1, 2), (): F(1)}) == "1*[] - 1/2*[a|b]"
