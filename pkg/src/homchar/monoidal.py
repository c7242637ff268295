"""Tensor products of homotopy characters, multibraces and the Bar differential.

Signs.  Both tensor products are index sums of slotwise products in
``A^{(x)n}``, so they are evaluated on unshifted tensors and transported back
to Cobar coordinates.  Two transports are used:

* ``kappa_left``: the desuspensions enter from the left, sign
  ``(-1)^{sum_i |c_i| (n - i)}`` (the identification of :mod:`homchar.indexed`);
* ``kappa_right``: they enter from the right, sign ``(-1)^{sum_i |c_i| (i - 1)}``.

``tensor_left`` (the ``a_{i1} ... a_{ik}`` times ``Delta(b_k)`` formula) is
conjugated by ``kappa_left`` and ``tensor_right`` (``Delta(a_k)`` times
``b_{i1} ... b_{ik}``) by ``kappa_right``; inside, products are slotwise with
the Koszul rule.  These are the transports for which both products satisfy
the Maurer-Cartan equation and are strictly associative on every fixture with
odd-degree elements.  The brace operations use the same transports, so that
``tensor_left`` is the composition sum of right braces ``{a_{i1},...,a_{ik}} b_k``
and ``tensor_right`` the sum of left braces ``a_k {b_{i1},...,b_{ik}}``.
"""

from fractions import Fraction
from itertools import combinations, product as cartesian

from .cobar import NotMaurerCartan
from .graded import accumulate, sign, tadd, tscale, weight_part
from .indexed import concat, kappa as kappa_left


def kappa_right(A, x):
    out = {}
    for w, c in x.items():
        e = 0
        for i, l in enumerate(w):
            e += A.deg(l) * i
        out[w] = c * sign(e)
    return out


def compositions(n):
    """All ordered tuples of positive integers summing to ``n`` (``()`` for 0)."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


def iterated_coproduct(A, x, r):
    """``Delta^r(x)`` in ``A^{(x)r+1}``; ``Delta^0`` is the identity."""
    if r < 0:
        raise ValueError("r must be >= 0")
    return A.iterated_coproduct(x, r)


def slot_coproducts(A, X, parts):
    """Apply ``Delta^{p_j - 1}`` in slot ``j`` of each word of ``X``."""
    out = {}
    for w, c in X.items():
        if len(w) != len(parts):
            raise ValueError("parts must match the word length")
        acc = {(): c}
        for l, p in zip(w, parts):
            Y = A.iterated_coproduct({l: 1}, p - 1)
            nxt = {}
            for u, cu in acc.items():
                for v, cv in Y.items():
                    accumulate(nxt, u + v, cu * cv)
            acc = nxt
        for k, v in acc.items():
            accumulate(out, k, v)
    return out


def _product(parts_elems):
    X = {(): Fraction(1)}
    for x in parts_elems:
        X = concat(X, x)
        if not X:
            break
    return X


def _require_mc(C, a, what):
    if not C.is_mc(a) or () in a:
        raise NotMaurerCartan(f"{what} is not a Maurer-Cartan element without weight-0 part")


def tensor_left(C, a, b, check=True):
    """``(a (x) b)_n = sum (a_{i1} ... a_{ik}) (Delta^{i1-1} ... Delta^{ik-1})(b_k)``."""
    if check:
        _require_mc(C, a, "left factor")
        _require_mc(C, b, "right factor")
    A = C.A
    ac = {n: weight_part(a, n) for n in range(C.N + 1)}
    bc = {n: weight_part(b, n) for n in range(C.N + 1)}
    out = {}
    for n in range(1, C.N + 1):
        for P in compositions(n):
            X = _product([ac[p] for p in P])
            if not X or not bc[len(P)]:
                continue
            Y = slot_coproducts(A, kappa_left(A, bc[len(P)]), P)
            out = tadd(out, kappa_left(A, A.tensor_mul(kappa_left(A, X), Y)))
    return out


def tensor_right(C, a, b, check=True):
    """``(a (x) b)_n = sum (Delta^{i1-1} ... Delta^{ik-1})(a_k) (b_{i1} ... b_{ik})``."""
    if check:
        _require_mc(C, a, "left factor")
        _require_mc(C, b, "right factor")
    A = C.A
    ac = {n: weight_part(a, n) for n in range(C.N + 1)}
    bc = {n: weight_part(b, n) for n in range(C.N + 1)}
    out = {}
    for n in range(1, C.N + 1):
        for P in compositions(n):
            X = _product([bc[p] for p in P])
            if not X or not ac[len(P)]:
                continue
            Y = slot_coproducts(A, kappa_right(A, ac[len(P)]), P)
            out = tadd(out, kappa_right(A, A.tensor_mul(Y, kappa_right(A, X))))
    return out


def weight2_left(C, a, b):
    """``(a1 (x) a1) b2 + a2 Delta(b1)`` computed directly, in Cobar coordinates."""
    A = C.A
    a1, a2 = weight_part(a, 1), kappa_left(A, weight_part(a, 2))
    b1, b2 = weight_part(b, 1), kappa_left(A, weight_part(b, 2))
    t = A.tensor_mul(concat(a1, a1), b2)
    t = tadd(t, A.tensor_mul(a2, A.delta_at(b1, 0)))
    return kappa_left(A, t)


def weight2_right(C, a, b):
    """``a2 (b1 (x) b1) + Delta(a1) b2`` computed directly, in Cobar coordinates."""
    A = C.A
    a1, a2 = weight_part(a, 1), kappa_right(A, weight_part(a, 2))
    b1, b2 = weight_part(b, 1), kappa_right(A, weight_part(b, 2))
    t = A.tensor_mul(a2, concat(b1, b1))
    t = tadd(t, A.tensor_mul(A.delta_at(a1, 0), b2))
    return kappa_right(A, t)


def associativity_check(C, a, b, c, variant="left"):
    """Return (ok, first differing weight or None)."""
    T = tensor_left if variant == "left" else tensor_right
    lhs = T(C, T(C, a, b), c)
    rhs = T(C, a, T(C, b, c))
    for n in range(C.N + 1):
        if weight_part(lhs, n) != weight_part(rhs, n):
            return False, n
    return True, None


# -- multibraces ---------------------------------------------------------------------
def _by_word(x):
    return [({w: c}, len(w)) for w, c in x.items()]


def multibrace_right(C, xs, y):
    """``E_{k,1}(x_1, ..., x_k; y) = {x_1, ..., x_k} y``.

    For each word ``y^(1)|...|y^(n)`` and each ``i_1 < ... < i_k``, slot ``i_j``
    becomes ``x_j . Delta^{|x_j| - 1}(y^(i_j))``; other slots are multiplied
    by the unit.  Vanishes when every word of ``y`` is shorter than ``k``.
    """
    A = C.A
    k = len(xs)
    unit = {(u,): c for u, c in A.unit.items()}
    out = {}
    for yw, yc in y.items():
        n = len(yw)
        for slots in combinations(range(n), k):
            for choice in cartesian(*[_by_word(x) for x in xs]):
                elems, parts, j = [], [], 0
                for t in range(n):
                    if j < k and slots[j] == t:
                        elems.append(choice[j][0])
                        parts.append(choice[j][1])
                        j += 1
                    else:
                        elems.append(unit)
                        parts.append(1)
                if sum(parts) > C.N:
                    continue
                X = _product(elems)
                Y = slot_coproducts(A, kappa_left(A, {yw: yc}), parts)
                out = tadd(out, kappa_left(A, A.tensor_mul(kappa_left(A, X), Y)))
    return out


def multibrace_left(C, x, ys):
    """``E_{1,k}(x; y_1, ..., y_k) = x {y_1, ..., y_k}``, the mirror of :func:`multibrace_right`."""
    A = C.A
    k = len(ys)
    unit = {(u,): c for u, c in A.unit.items()}
    out = {}
    for xw, xc in x.items():
        n = len(xw)
        for slots in combinations(range(n), k):
            for choice in cartesian(*[_by_word(y) for y in ys]):
                elems, parts, j = [], [], 0
                for t in range(n):
                    if j < k and slots[j] == t:
                        elems.append(choice[j][0])
                        parts.append(choice[j][1])
                        j += 1
                    else:
                        elems.append(unit)
                        parts.append(1)
                if sum(parts) > C.N:
                    continue
                Y = _product(elems)
                X = slot_coproducts(A, kappa_right(A, {xw: xc}), parts)
                out = tadd(out, kappa_right(A, A.tensor_mul(X, kappa_right(A, Y))))
    return out


def tensor_left_via_braces(C, a, b):
    """``sum_n sum_{i1+...+ik=n} {a_{i1}, ..., a_{ik}} b_k``."""
    ac = {n: weight_part(a, n) for n in range(C.N + 1)}
    bc = {n: weight_part(b, n) for n in range(C.N + 1)}
    out = {}
    for n in range(1, C.N + 1):
        for P in compositions(n):
            if all(ac[p] for p in P) and bc[len(P)]:
                out = tadd(out, multibrace_right(C, [ac[p] for p in P], bc[len(P)]))
    return out


def tensor_right_via_braces(C, a, b):
    """``sum_n sum_{i1+...+ik=n} a_k {b_{i1}, ..., b_{ik}}``."""
    ac = {n: weight_part(a, n) for n in range(C.N + 1)}
    bc = {n: weight_part(b, n) for n in range(C.N + 1)}
    out = {}
    for n in range(1, C.N + 1):
        for P in compositions(n):
            if all(bc[p] for p in P) and ac[len(P)]:
                out = tadd(out, multibrace_left(C, ac[len(P)], [bc[p] for p in P]))
    return out


# -- Bar construction ------------------------------------------------------------------
class BarComplex:
    """``Bar(B) = T(B[1])`` for ``B`` the truncated Cobar algebra.

    Elements are dicts keyed by tuples of Cobar words; the bar letter ``[b]``
    has degree ``|b| - 1``.  The differential is the coderivation with
    components ``d_B`` and the product ``mu``:

        d[b1|...|bn] = sum_i -(-1)^{e_{i-1}} [..|d b_i|..]
                     + sum_i (-1)^{e_i} [..|b_i b_{i+1}|..],

    where ``e_i = sum_{j <= i} (|b_j| - 1)``.
    """

    def __init__(self, C):
        self.C = C

    def letter_degree(self, w):
        return self.C.word_degree(w) - 1

    def degree(self, e):
        degs = {sum(self.letter_degree(w) for w in key) for key in e}
        if len(degs) > 1:
            raise ValueError("bar element is not homogeneous")
        return degs.pop() if degs else None

    def diff(self, e):
        C = self.C
        out = {}
        for key, c in e.items():
            n = len(key)
            pre = 0
            for i, w in enumerate(key):
                s = -sign(pre) * c
                for v, cv in C.diff({w: Fraction(1)}).items():
                    accumulate(out, key[:i] + (v,) + key[i + 1:], s * cv)
                pre += self.letter_degree(w)
                if i + 1 < n:
                    v = w + key[i + 1]
                    if len(v) <= C.N:
                        accumulate(out, key[:i] + (v,) + key[i + 2:], sign(pre) * c)
        return out


def bar_diff(C, e):
    return BarComplex(C).diff(e)


# -- tensoring morphisms: sign search ----------------------------------------------------
def _comp_terms(ac, xc, fc, parts, m):
    """``a_{i1} .. a_{i_{m-1}} f_{i_m} x_{i_{m+1}} .. x_{ik}`` as a Cobar product."""
    elems = [ac[p] for p in parts[:m]] + [fc[parts[m]]] + [xc[p] for p in parts[m + 1:]]
    return _product(elems)


def morphism_tensor_families(C, a, x, f, b, y, g):
    """The three summand families of ``(f (x) g)_n`` plus the ``f_0 g_0`` term.

    ``f: a -> x`` and ``g: b -> y`` are degree-0 morphisms.  Each family is
    transported with ``kappa_left``, like :func:`tensor_left`.
    """
    A = C.A
    N = C.N
    W = lambda z: {n: weight_part(z, n) for n in range(N + 1)}
    ac, xc, fc, bc, gc = W(a), W(x), W(f), W(b), W(g)
    f0 = f.get((), 0)
    g0 = g.get((), 0)

    def block(X, Z, parts):
        if not X or not Z:
            return {}
        Y = slot_coproducts(A, kappa_left(A, Z), parts)
        return kappa_left(A, A.tensor_mul(kappa_left(A, X), Y))

    yc = W(y)
    fam = [{}, {}, {}]
    base = {(): Fraction(f0) * g0} if f0 and g0 else {}
    for n in range(1, N + 1):
        for P in compositions(n):
            k = len(P)
            if g0:
                for m in range(k):
                    fam[0] = tadd(fam[0], tscale(block(_comp_terms(ac, xc, fc, P, m), bc[k], P), g0))
            if f0:
                fam[1] = tadd(fam[1], tscale(block(_product([xc[p] for p in P]), gc[k], P), f0))
        for i in range(1, n):
            j = n - i
            for P in compositions(i):
                k = len(P)
                for Q in compositions(j):
                    l = len(Q)
                    right = block(_product([xc[q] for q in Q]), gc[l], Q)
                    if not right:
                        continue
                    for m in range(k):
                        left = block(_comp_terms(ac, xc, fc, P, m), bc[k], P)
                        fam[2] = tadd(fam[2], C.mul(left, right))
    return base, fam


def sign_search_morphism_tensor(C, battery, candidates=None):
    """Sign assignments ``(s1, s2, s3)`` for which ``f (x) g`` is closed on every battery item.

    Each battery item is ``(a, x, f, b, y, g)`` with ``f: a -> x`` and
    ``g: b -> y`` closed of degree 0.  Returns the list of consistent
    assignments (possibly empty); nothing here is asserted as canonical.
    """
    if candidates is None:
        candidates = list(cartesian((1, -1), repeat=3))
    if not candidates:
        return None
    data = []
    for a, x, f, b, y, g in battery:
        src = tensor_left(C, a, b)
        tgt = tensor_left(C, x, y)
        data.append((src, tgt, morphism_tensor_families(C, a, x, f, b, y, g)))
    good = []
    for s in candidates:
        ok = True
        for src, tgt, (base, fam) in data:
            h = dict(base)
            for si, Fi in zip(s, fam):
                h = tadd(h, Fi, si)
            if C.twisted_diff(h, src, tgt):
                ok = False
                break
        if ok:
            good.append(tuple(s))
    return good
