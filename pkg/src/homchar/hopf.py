"""DG-bialgebras given by structure constants on an enumerable basis.

Subclasses provide the structure maps on basis labels; everything else
(linear extension, tensor powers, cosimplicial faces and degeneracies,
iterated coproducts) lives on :class:`Bialgebra`.  Infinite-dimensional
algebras enumerate their basis through an explicit window.
"""

from fractions import Fraction
from itertools import product as cartesian
from math import comb

from .graded import accumulate, sign, tadd, tscale


class Bialgebra:
    name = "bialgebra"
    finite = True
    default_window = None

    def __init__(self):
        self._mul_cache = {}
        self._cop_cache = {}

    # -- to be provided by subclasses -------------------------------------
    def deg(self, label):
        raise NotImplementedError

    def basis(self, window=None):
        raise NotImplementedError

    def mul_basis(self, a, b):
        raise NotImplementedError

    def coproduct_basis(self, a):
        raise NotImplementedError

    def counit_basis(self, a):
        raise NotImplementedError

    def d_basis(self, a):
        return {}

    @property
    def unit(self):
        raise NotImplementedError

    # -- cached structure maps ---------------------------------------------
    def _mul(self, a, b):
        key = (a, b)
        r = self._mul_cache.get(key)
        if r is None:
            r = self._mul_cache[key] = self.mul_basis(a, b)
        return r

    def _cop(self, a):
        r = self._cop_cache.get(a)
        if r is None:
            r = self._cop_cache[a] = self.coproduct_basis(a)
        return r

    # -- elements of A -----------------------------------------------------
    def mul(self, x, y):
        out = {}
        for a, ca in x.items():
            for b, cb in y.items():
                for c, cc in self._mul(a, b).items():
                    accumulate(out, c, ca * cb * cc)
        return out

    def coproduct(self, x):
        out = {}
        for a, ca in x.items():
            for w, c in self._cop(a).items():
                accumulate(out, w, ca * c)
        return out

    def counit(self, x):
        return sum((c * Fraction(self.counit_basis(a)) for a, c in x.items()), Fraction(0))

    def d(self, x):
        out = {}
        for a, ca in x.items():
            for b, cb in self.d_basis(a).items():
                accumulate(out, b, ca * cb)
        return out

    def degree_of(self, x):
        """Common degree of the terms of an element; None if zero, error if mixed."""
        degs = {self.deg(a) for a in x}
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop() if degs else None

    def word_degree(self, word):
        return sum(self.deg(l) for l in word)

    def sort_key(self, label):
        return label

    def word_key(self, word):
        return tuple(self.sort_key(l) for l in word)

    def is_grouplike(self, x):
        x = {a: Fraction(c) for a, c in x.items() if c}
        if not x or self.d(x) or self.counit(x) != 1:
            return False
        xx = {}
        for a, ca in x.items():
            for b, cb in x.items():
                accumulate(xx, (a, b), ca * cb)
        return self.coproduct(x) == xx

    # -- tensor powers A^{(x)n} (unshifted) ---------------------------------
    def _tensor_mul_words(self, u, v):
        key = (u, v)
        cache = self.__dict__.setdefault("_tmul_cache", {})
        r = cache.get(key)
        if r is None:
            e = 0
            for i in range(len(u)):
                du = self.deg(u[i])
                if du & 1:
                    for j in range(i):
                        e += du * self.deg(v[j])
            slots = [self._mul(a, b) for a, b in zip(u, v)]
            acc = {}
            for combo in cartesian(*(s.items() for s in slots)):
                c = sign(e)
                for _, k in combo:
                    c *= k
                accumulate(acc, tuple(l for l, _ in combo), c)
            r = cache[key] = tuple(acc.items())
        return r

    def tensor_mul(self, X, Y):
        """Slotwise product in ``A^{(x)n}`` with the Koszul sign."""
        out = {}
        for u, cu in X.items():
            for v, cv in Y.items():
                if len(u) != len(v):
                    raise ValueError("tensor_mul needs equal weights")
                c0 = cu * cv
                for w, k in self._tensor_mul_words(u, v):
                    accumulate(out, w, c0 * k if k != 1 else c0)
        return out

    def tensor_d(self, X):
        """Koszul differential on ``A^{(x)n}``."""
        out = {}
        for w, c in X.items():
            e = 0
            for j, l in enumerate(w):
                for m, cm in self.d_basis(l).items():
                    accumulate(out, w[:j] + (m,) + w[j + 1:], c * cm * sign(e))
                e += self.deg(l)
        return out

    def delta_at(self, X, j):
        """Apply the coproduct in slot ``j`` (0-based); degree 0, so no sign."""
        out = {}
        for w, c in X.items():
            for (l1, l2), cc in self._cop(w[j]).items():
                accumulate(out, w[:j] + (l1, l2) + w[j + 1:], c * cc)
        return out

    def counit_at(self, X, j):
        out = {}
        for w, c in X.items():
            e = self.counit_basis(w[j])
            if e:
                accumulate(out, w[:j] + w[j + 1:], c * e)
        return out

    def insert_unit(self, X, j):
        out = {}
        for w, c in X.items():
            for u, cu in self.unit.items():
                accumulate(out, w[:j] + (u,) + w[j:], c * cu)
        return out

    def iterated_coproduct(self, x, r):
        """``Delta^r(x)`` in ``A^{(x)r+1}``, left-iterated; ``Delta^0 = id``."""
        X = {(a,): c for a, c in x.items()}
        for _ in range(r):
            X = self.delta_at(X, 0)
        return X

    def iterated_coproduct_right(self, x, r):
        X = {(a,): c for a, c in x.items()}
        for i in range(r):
            X = self.delta_at(X, i)
        return X

    def face(self, X, i, n):
        """Coface ``d^i_n : A^{(x)n} -> A^{(x)n+1}``, ``0 <= i <= n+1``."""
        _check_weight(X, n)
        if not 0 <= i <= n + 1:
            raise IndexError(f"face index {i} out of range for weight {n}")
        if i == 0:
            return self.insert_unit(X, 0)
        if i == n + 1:
            return self.insert_unit(X, n)
        return self.delta_at(X, i - 1)

    def degeneracy(self, X, i, n):
        """Codegeneracy ``s^i_n : A^{(x)n} -> A^{(x)n-1}``, counit in slot ``i``."""
        _check_weight(X, n)
        if n < 1 or not 0 <= i <= n - 1:
            raise IndexError(f"degeneracy index {i} out of range for weight {n}")
        return self.counit_at(X, i)

    def words(self, n, window=None):
        return [tuple(w) for w in cartesian(self.basis(window), repeat=n)]

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


def _check_weight(X, n):
    for w in X:
        if len(w) != n:
            raise ValueError(f"expected weight {n}, got word of weight {len(w)}")


# -- built-ins ---------------------------------------------------------------

class FiniteGroupFunctionHopf(Bialgebra):
    """Functions on a finite group: delta basis ``e_g``, all in degree 0."""

    def __init__(self, elements, table, identity, name="group-functions"):
        super().__init__()
        self.elements = list(elements)
        self.table = dict(table)
        self.identity = identity
        self.name = name
        self.labels = [f"e{g}" for g in self.elements]
        self._elt = dict(zip(self.labels, self.elements))
        self._lab = dict(zip(self.elements, self.labels))
        self._splits = {g: [] for g in self.elements}
        for u in self.elements:
            for v in self.elements:
                self._splits[self.table[u, v]].append((u, v))
        self._order = {l: i for i, l in enumerate(self.labels)}

    @classmethod
    def cyclic(cls, n):
        els = list(range(n))
        return cls(els, {(a, b): (a + b) % n for a in els for b in els}, 0, name=f"Z{n}-functions")

    def deg(self, label):
        return 0

    def sort_key(self, label):
        return self._order[label]

    def basis(self, window=None):
        return list(self.labels)

    def mul_basis(self, a, b):
        return {a: 1} if a == b else {}

    def coproduct_basis(self, a):
        return {(self._lab[u], self._lab[v]): 1 for u, v in self._splits[self._elt[a]]}

    def counit_basis(self, a):
        return int(self._elt[a] == self.identity)

    @property
    def unit(self):
        return {l: 1 for l in self.labels}


class UpperTriangularHopf(Bialgebra):
    """Regular functions ``Q[x^{+-1}, y^{+-1}, z]`` on invertible upper triangular 2x2 matrices.

    Labels are exponent triples ``(a, b, c)`` for ``x^a y^b z^c``.  The
    window ``(w, wz)`` enumerates ``|a|, |b| <= w`` and ``c <= wz``.
    """

    name = "upper-triangular"
    finite = False
    default_window = (2, 2)

    def deg(self, label):
        return 0

    def basis(self, window=None):
        w, wz = window or self.default_window
        return [(a, b, c) for a in range(-w, w + 1) for b in range(-w, w + 1) for c in range(wz + 1)]

    def mul_basis(self, p, q):
        return {(p[0] + q[0], p[1] + q[1], p[2] + q[2]): 1}

    def coproduct_basis(self, p):
        a, b, c = p
        # (x^a y^b (x) x^a y^b) * sum_k C(c,k) (x (x) z)^k (z (x) y)^(c-k)
        return {
            ((a + k, b, c - k), (a, b + c - k, k)): comb(c, k)
            for k in range(c + 1)
        }

    def counit_basis(self, p):
        return int(p[2] == 0)

    @property
    def unit(self):
        return {(0, 0, 0): 1}

    @staticmethod
    def monomial(a=0, b=0, c=0, coeff=1):
        return {(a, b, c): Fraction(coeff)}


class ExteriorPrimitiveHopf(Bialgebra):
    """``Q[t]/(t^2)`` with ``t`` primitive of odd degree (default 1)."""

    def __init__(self, degree=1):
        super().__init__()
        if degree % 2 == 0:
            raise ValueError("t must have odd degree for t^2 = 0 to be a bialgebra")
        self.t_degree = degree
        self.name = "exterior" if degree == 1 else f"exterior({degree})"

    def deg(self, label):
        return self.t_degree if label == "t" else 0

    def sort_key(self, label):
        return 0 if label == "1" else 1

    def basis(self, window=None):
        return ["1", "t"]

    def mul_basis(self, a, b):
        if a == "1":
            return {b: 1}
        if b == "1":
            return {a: 1}
        return {}

    def coproduct_basis(self, a):
        if a == "1":
            return {("1", "1"): 1}
        return {("t", "1"): 1, ("1", "t"): 1}

    def counit_basis(self, a):
        return int(a == "1")

    @property
    def unit(self):
        return {"1": 1}


class KoszulDGHopf(Bialgebra):
    """Free graded-commutative ``Q[u] (x) L(s)``, ``|u| = -2``, ``|s| = -1``, ``d u = s``.

    Both generators are primitive.  Labels ``(i, e)`` stand for ``u^i s^e``;
    the window is the largest ``u``-exponent.
    """

    name = "koszul-dg"
    finite = False
    default_window = 3

    def deg(self, label):
        return -2 * label[0] - label[1]

    def basis(self, window=None):
        w = self.default_window if window is None else window
        return [(i, e) for i in range(w + 1) for e in (0, 1)]

    def mul_basis(self, p, q):
        if p[1] and q[1]:
            return {}
        return {(p[0] + q[0], p[1] + q[1]): 1}

    def coproduct_basis(self, p):
        i, e = p
        out = {}
        for k in range(i + 1):
            c = comb(i, k)
            if e:
                # (u^k (x) u^(i-k)) (s (x) 1 + 1 (x) s); u-powers are even
                out[(k, 1), (i - k, 0)] = c
                out[(k, 0), (i - k, 1)] = c
            else:
                out[(k, 0), (i - k, 0)] = c
        return out

    def counit_basis(self, p):
        return int(p == (0, 0))

    def d_basis(self, p):
        i, e = p
        if e or i == 0:
            return {}
        return {(i - 1, 1): i}

    @property
    def unit(self):
        return {(0, 0): 1}


class TensorHopf(Bialgebra):
    """Graded tensor product ``A (x) B`` of two DG-bialgebras (Koszul signs)."""

    def __init__(self, A, B, name=None):
        super().__init__()
        self.A, self.B = A, B
        self._deg_cache = {}
        self.name = name or f"{A.name}*{B.name}"
        self.finite = A.finite and B.finite
        if not self.finite:
            self.default_window = (A.default_window, B.default_window)

    def deg(self, label):
        d = self._deg_cache.get(label)
        if d is None:
            d = self._deg_cache[label] = self.A.deg(label[0]) + self.B.deg(label[1])
        return d

    def sort_key(self, label):
        return (self.A.sort_key(label[0]), self.B.sort_key(label[1]))

    def basis(self, window=None):
        wa, wb = window if window is not None else (None, None)
        return [(a, b) for a in self.A.basis(wa) for b in self.B.basis(wb)]

    def mul_basis(self, p, q):
        s = sign(self.B.deg(p[1]) * self.A.deg(q[0]))
        out = {}
        for a, ca in self.A._mul(p[0], q[0]).items():
            for b, cb in self.B._mul(p[1], q[1]).items():
                accumulate(out, (a, b), s * ca * cb)
        return out

    def coproduct_basis(self, p):
        out = {}
        for (a1, a2), ca in self.A._cop(p[0]).items():
            for (b1, b2), cb in self.B._cop(p[1]).items():
                s = sign(self.B.deg(b1) * self.A.deg(a2))
                accumulate(out, ((a1, b1), (a2, b2)), s * ca * cb)
        return out

    def counit_basis(self, p):
        return self.A.counit_basis(p[0]) * self.B.counit_basis(p[1])

    def d_basis(self, p):
        out = {}
        for a, c in self.A.d_basis(p[0]).items():
            accumulate(out, (a, p[1]), c)
        s = sign(self.A.deg(p[0]))
        for b, c in self.B.d_basis(p[1]).items():
            accumulate(out, (p[0], b), s * c)
        return out

    @property
    def unit(self):
        return {(a, b): ca * cb for a, ca in self.A.unit.items() for b, cb in self.B.unit.items()}


class TableHopf(Bialgebra):
    """Finite-dimensional bialgebra from explicit structure-constant tables."""

    def __init__(self, labels, degrees, unit, product, coproduct, counit, differential=None, name="table"):
        super().__init__()
        self.labels = list(labels)
        self.degrees = dict(degrees)
        self._unit = {k: Fraction(v) for k, v in unit.items() if v}
        self.product = {k: dict(v) for k, v in product.items()}
        self.coproduct_table = {k: dict(v) for k, v in coproduct.items()}
        self.counit_table = {k: Fraction(v) for k, v in counit.items()}
        self.differential = {k: dict(v) for k, v in (differential or {}).items()}
        self.name = name
        self._order = {l: i for i, l in enumerate(self.labels)}

    def deg(self, label):
        return self.degrees[label]

    def sort_key(self, label):
        return self._order[label]

    def basis(self, window=None):
        return list(self.labels)

    def mul_basis(self, a, b):
        return dict(self.product.get((a, b), {}))

    def coproduct_basis(self, a):
        return dict(self.coproduct_table.get(a, {}))

    def counit_basis(self, a):
        return self.counit_table.get(a, Fraction(0))

    def d_basis(self, a):
        return dict(self.differential.get(a, {}))

    @property
    def unit(self):
        return dict(self._unit)

    @classmethod
    def from_bialgebra(cls, A, name=None):
        labels = A.basis()
        return cls(
            labels,
            {l: A.deg(l) for l in labels},
            A.unit,
            {(a, b): A.mul_basis(a, b) for a in labels for b in labels if A.mul_basis(a, b)},
            {a: A.coproduct_basis(a) for a in labels},
            {a: A.counit_basis(a) for a in labels},
            {a: A.d_basis(a) for a in labels if A.d_basis(a)},
            name=name or A.name,
        )


class PatchedHopf(Bialgebra):
    """Wrap an algebra, overriding its coproduct on basis labels (negative controls)."""

    def __init__(self, base, coproduct):
        super().__init__()
        self.base = base
        self._patched = coproduct
        self.name = base.name + "-patched"
        self.finite = base.finite
        self.default_window = base.default_window

    def deg(self, label):
        return self.base.deg(label)

    def sort_key(self, label):
        return self.base.sort_key(label)

    def basis(self, window=None):
        return self.base.basis(window)

    def mul_basis(self, a, b):
        return self.base.mul_basis(a, b)

    def coproduct_basis(self, a):
        return self._patched(a)

    def counit_basis(self, a):
        return self.base.counit_basis(a)

    def d_basis(self, a):
        return self.base.d_basis(a)

    @property
    def unit(self):
        return self.base.unit


def drop_zy_term(ut):
    """UpperTriangularHopf with ``Delta(z) = x (x) z`` only (coassociativity breaks)."""

    def cop(p):
        full = ut.coproduct_basis(p)
        if p == (0, 0, 1):
            return {((1, 0, 0), (0, 0, 1)): Fraction(1)}
        return full

    return PatchedHopf(ut, cop)


BUILTINS = {
    "z2": lambda: FiniteGroupFunctionHopf.cyclic(2),
    "z3": lambda: FiniteGroupFunctionHopf.cyclic(3),
    "upper-triangular": UpperTriangularHopf,
    "exterior": ExteriorPrimitiveHopf,
    "exterior-neg": lambda: ExteriorPrimitiveHopf(-1),
    "z2-exterior-neg": lambda: TensorHopf(FiniteGroupFunctionHopf.cyclic(2), ExteriorPrimitiveHopf(-1), name="z2-exterior-neg"),
    "koszul-dg": KoszulDGHopf,
}


def builtin(name):
    try:
        return BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown built-in algebra {name!r}; choose from {sorted(BUILTINS)}") from None


def element_add(x, y, scale=1):
    return tadd(x, y, scale)


def element_scale(x, c):
    return tscale(x, c)
