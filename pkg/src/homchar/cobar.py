"""Weight-truncated Cobar constructions, Maurer-Cartan elements, gauge action.

Elements of ``Cobar(A)`` are tensors (see :mod:`homchar.graded`) whose words
are read as shifted letters ``[c1|...|cn]``; the letter ``[c]`` has degree
``|c| + 1``.  Everything of weight above ``N`` is discarded, which is a
quotient by a DG-ideal, so all identities hold exactly in weights ``<= N``.

Sign conventions (the only ones used anywhere in the package):

* product is concatenation, no sign;
* on a letter, ``d[c] = -[d_A c] - sum (-1)^{|c'|} [c'|c'']``, extended as a
  degree +1 derivation using shifted degrees;
* Maurer-Cartan means ``d a + a a = 0``, so grouplikes ``[g]`` are MC;
* twisted differential ``d_(a,b) x = d x + a x - (-1)^{|x|} x b``.
"""

from fractions import Fraction

from .graded import accumulate, fmt_tensor, sign, tadd, tscale, weight_part


class TruncationMismatch(ValueError):
    pass


class NotInvertible(ValueError):
    pass


class NotMaurerCartan(ValueError):
    pass


class Cobar:
    """``Cobar(A)`` truncated at weight ``N``."""

    def __init__(self, A, N):
        self.A = A
        self.N = N
        self._gen_cache = {}

    def __repr__(self):
        return f"Cobar({self.A.name}, N={self.N})"

    # -- grading ------------------------------------------------------------
    def letter_degree(self, label):
        return self.A.deg(label) + 1

    def word_degree(self, word):
        return sum(self.A.deg(l) for l in word) + len(word)

    def degree(self, x):
        """Total degree of a homogeneous element (None for zero)."""
        degs = {self.word_degree(w) for w in x}
        if len(degs) > 1:
            raise ValueError(f"element is not homogeneous: degrees {sorted(degs)}")
        return degs.pop() if degs else None

    def homogeneous_parts(self, x):
        parts = {}
        for w, c in x.items():
            parts.setdefault(self.word_degree(w), {})[w] = c
        return parts

    def truncate(self, x):
        return {w: c for w, c in x.items() if len(w) <= self.N}

    # -- algebra ------------------------------------------------------------
    def one(self):
        return {(): Fraction(1)}

    def letter(self, elem):
        return {(l,): c for l, c in elem.items() if c}

    def mul(self, x, y):
        out = {}
        N = self.N
        for u, cu in x.items():
            for v, cv in y.items():
                if len(u) + len(v) <= N:
                    accumulate(out, u + v, cu * cv)
        return out

    def mul_many(self, *xs):
        out = self.one()
        for x in xs:
            out = self.mul(out, x)
        return out

    def generator_diff(self, label):
        r = self._gen_cache.get(label)
        if r is None:
            A = self.A
            r = {}
            for m, c in A.d_basis(label).items():
                accumulate(r, (m,), -c)
            for (l1, l2), c in A._cop(label).items():
                accumulate(r, (l1, l2), -sign(A.deg(l1)) * c)
            self._gen_cache[label] = r
        return r

    def _derivation(self, x, gen):
        out = {}
        N = self.N
        for w, cw in x.items():
            e = 0
            n = len(w)
            for j, l in enumerate(w):
                s = sign(e) * cw
                for g, cg in gen(l).items():
                    if n - 1 + len(g) <= N:
                        accumulate(out, w[:j] + g + w[j + 1:], s * cg)
                e += self.A.deg(l) + 1
        return out

    def diff(self, x):
        """The Cobar differential ``d_A + Delta`` extended as a derivation."""
        return self._derivation(x, self.generator_diff)

    def coaug_generator_diff(self, label):
        r = dict(self.generator_diff(label))
        for u, cu in self.A.unit.items():
            accumulate(r, (u, label), cu)
            accumulate(r, (label, u), sign(self.A.deg(label)) * cu)
        return r

    def coaug_diff(self, x):
        """Coaugmented Cobar differential: letters also get unit-insertion terms."""
        return self._derivation(x, self.coaug_generator_diff)

    def unit_letter(self):
        return self.letter(self.A.unit)

    def twisted_diff(self, x, a, b):
        """``d_(a,b)(x) = d x + a x - (-1)^{|x|} x b`` (homogeneous pieces)."""
        out = self.diff(x)
        out = tadd(out, self.mul(a, x))
        for deg, part in self.homogeneous_parts(x).items():
            out = tadd(out, self.mul(part, b), -sign(deg))
        return out

    # -- Maurer-Cartan --------------------------------------------------------
    def mc_curvature(self, a):
        """``d a + a a`` truncated at ``N``."""
        return tadd(self.diff(a), self.mul(a, a))

    def mc_residuals(self, a):
        F = self.mc_curvature(a)
        return {n: weight_part(F, n) for n in range(self.N + 1)}

    def is_mc(self, a):
        return not self.mc_curvature(a) and (not a or self.degree(a) == 1)

    def require_mc(self, a, what="twist"):
        if not self.is_mc(a):
            F = self.mc_curvature(a)
            raise NotMaurerCartan(f"{what} is not Maurer-Cartan up to weight {self.N}: {fmt_tensor(F)}")

    # -- gauge ----------------------------------------------------------------
    def inverse(self, f):
        """Inverse of an element with nonzero weight-0 scalar, by a finite geometric series."""
        f0 = f.get((), 0)
        if not f0:
            raise NotInvertible("weight-0 component is zero")
        inv0 = 1 / Fraction(f0)
        u = {w: c * inv0 for w, c in f.items() if w}
        neg_u = tscale(u, -1)
        total = self.one()
        power = self.one()
        for _ in range(self.N):
            power = self.mul(power, neg_u)
            if not power:
                break
            total = tadd(total, power)
        return tscale(total, inv0)

    def gauge_act(self, f, a):
        """``f.a = f a f^{-1} + f d(f^{-1})`` for degree-0 invertible ``f``."""
        if f and self.degree(f) != 0:
            raise ValueError("gauge element must have total degree 0")
        finv = self.inverse(f)
        self.require_mc(a, "gauge_act input")
        return tadd(self.mul_many(f, a, finv), self.mul(f, self.diff(finv)))

    # -- helpers for display ---------------------------------------------------
    def fmt(self, x):
        return fmt_tensor(x, key=self.A.word_key)


class GaugeWitness:
    """``f`` as a degree-0 morphism ``f.a -> a`` together with its inverse ``a -> f.a``."""

    def __init__(self, C, f, a):
        self.C = C
        self.f = C.truncate(f)
        self.a = a
        self.source = C.gauge_act(self.f, a)
        self.inverse = C.inverse(self.f)
        # Hom(s, t) is s Cobar t; degree-0 composites are plain products
        self.d_f = C.twisted_diff(self.f, self.source, a)
        self.d_inverse = C.twisted_diff(self.inverse, a, self.source)
        self.f_then_inv = C.mul(self.f, self.inverse)
        self.inv_then_f = C.mul(self.inverse, self.f)

    @property
    def closed(self):
        return not self.d_f and not self.d_inverse

    @property
    def invertible(self):
        one = self.C.one()
        return self.f_then_inv == one and self.inv_then_f == one


def gauge_isomorphism_witness(C, f, a):
    return GaugeWitness(C, f, a)


def graded_commutator(C, x, y):
    """``[x, y] = x y - (-1)^{|x||y|} y x`` on homogeneous pieces."""
    out = {}
    for dx, px in C.homogeneous_parts(x).items():
        for dy, py in C.homogeneous_parts(y).items():
            out = tadd(out, C.mul(px, py))
            out = tadd(out, C.mul(py, px), -sign(dx * dy))
    return out


class CDGReport:
    def __init__(self, curve, curve2):
        self.curve = curve
        self.curve2 = curve2

    @property
    def ok(self):
        return not self.curve2 and all(not r for _, r in self.curve)

    def first_curve_failure(self):
        for x, r in self.curve:
            if r:
                return x, r
        return None


def cdg_morphism_check(C, a, b, change, elements):
    """Check ``(id, change)`` as a CDG-morphism from the ``a``- to the ``b``-twisted algebra.

    (curve):  d_a(x) = d_b(x) + [change, x] on each test element;
    (curve2): 0 = d_b(change) + change^2 (both curvatures vanish).
    Here ``d_c(x) = d x + [c, x]``; the pair is a morphism exactly when
    ``[a - b - change, -]`` vanishes on the tested elements, e.g. for ``change = a - b``.
    """

    def dtw(c, x):
        return tadd(C.diff(x), graded_commutator(C, c, x))

    curve = []
    for x in elements:
        r = tadd(dtw(a, x), tadd(dtw(b, x), graded_commutator(C, change, x)), -1)
        curve.append((x, r))
    curve2 = tadd(dtw(b, change), C.mul(change, change))
    return CDGReport(curve, curve2)


def compose_cdg(first, second):
    """``(id, c) o (id, b) = (id, c + b)`` for identity underlying maps."""
    return tadd(first, second)
