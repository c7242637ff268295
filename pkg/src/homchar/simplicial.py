"""Simplicial resolutions, convolution algebras and the fat totalization.

``L^n`` is the normalized chain complex of the standard ``n``-simplex: basis
``f_I`` for nonempty increasing ``I`` in ``{0..n}``, of degree ``-(|I| - 1)``,

    d f_I = sum_j (-1)^j f_{I - i_j},    Delta f_I = sum_j f_{i_0..i_j} (x) f_{i_j..i_k}.

A map ``u: L^n -> V`` of degree ``p`` is a dict ``chain -> element of V``;
``Hom(L^n, V)`` has differential ``D u = d_V u - (-1)^p u d_L`` and, when
``V`` is a DG-algebra, the convolution product
``(u * v)(c) = sum (-1)^{|v||c'|} u(c') v(c'')``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product as cartesian
from math import comb

from . import linalg
from .graded import accumulate, sign, tadd, tscale, weight_part
from .report import Check


class NotMonotone(ValueError):
    pass


class SimplicialIdentityError(ValueError):
    pass


# -- the complexes L^n --------------------------------------------------------------
def chains(n):
    out = []
    for k in range(n + 1):
        out.extend(combinations(range(n + 1), k + 1))
    return out


def chain_degree(c):
    return -(len(c) - 1)


def l_diff(x):
    out = {}
    for c, v in x.items():
        if len(c) == 1:
            continue
        for j in range(len(c)):
            accumulate(out, c[:j] + c[j + 1:], v * sign(j))
    return out


def l_coproduct(x):
    out = {}
    for c, v in x.items():
        for j in range(len(c)):
            accumulate(out, (c[: j + 1], c[j:]), v)
    return out


def l_tensor_diff(X):
    out = {}
    for (a, b), v in X.items():
        for a2, ca in l_diff({a: 1}).items():
            accumulate(out, (a2, b), v * ca)
        s = sign(chain_degree(a))
        for b2, cb in l_diff({b: 1}).items():
            accumulate(out, (a, b2), v * cb * s)
    return out


class LComplex:
    def __init__(self, n):
        self.n = n
        self.basis = chains(n)

    @property
    def dim(self):
        return len(self.basis)

    def d(self, x):
        return l_diff(x)

    def coproduct(self, x):
        return l_coproduct(x)

    def full(self):
        return tuple(range(self.n + 1))


def _check_monotone(phi, n, m):
    if len(phi) != n + 1 or any(not 0 <= v <= m for v in phi):
        raise NotMonotone(f"{phi} is not a map [{n}] -> [{m}]")
    if any(phi[i] > phi[i + 1] for i in range(n)):
        raise NotMonotone(f"{phi} is not monotone")


def l_cosimplicial_map(phi, n, m):
    """``phi_*: L^n -> L^m`` for monotone ``phi`` given as the tuple of images."""
    phi = tuple(phi)
    _check_monotone(phi, n, m)

    def apply(x):
        out = {}
        for c, v in x.items():
            img = tuple(phi[i] for i in c)
            if len(set(img)) == len(img):
                accumulate(out, img, v)
        return out

    return apply


def monotone_maps(n, m):
    return [t for t in combinations_with_replacement(range(m + 1), n + 1)]


def injections(m, n):
    return list(combinations(range(n + 1), m + 1))


def l_invariant_checks(n_max=5):
    """d^2 = 0, dimension, coassociativity, Delta chain map, naturality of d and Delta."""
    checks = []
    bad = {k: "" for k in ("d_squared", "dimension", "coassociative", "counit_free_chain_map", "naturality")}
    for n in range(n_max + 1):
        L = LComplex(n)
        if L.dim != 2 ** (n + 1) - 1:
            bad["dimension"] = bad["dimension"] or f"dim L^{n} = {L.dim}"
        for c in L.basis:
            x = {c: 1}
            if l_diff(l_diff(x)):
                bad["d_squared"] = bad["d_squared"] or f"d^2 f_{c} != 0 (n={n})"
            D = l_coproduct(x)
            left, right = {}, {}
            for (a, b), v in D.items():
                for (a1, a2), w in l_coproduct({a: 1}).items():
                    accumulate(left, (a1, a2, b), v * w)
                for (b1, b2), w in l_coproduct({b: 1}).items():
                    accumulate(right, (a, b1, b2), v * w)
            if left != right:
                bad["coassociative"] = bad["coassociative"] or f"f_{c} (n={n})"
            if l_coproduct(l_diff(x)) != l_tensor_diff(D):
                bad["counit_free_chain_map"] = bad["counit_free_chain_map"] or f"f_{c} (n={n})"
        for m in range(n_max + 1):
            for phi in monotone_maps(n, m):
                f = l_cosimplicial_map(phi, n, m)
                for c in L.basis:
                    x = {c: 1}
                    if f(l_diff(x)) != l_diff(f(x)):
                        bad["naturality"] = bad["naturality"] or f"d vs {phi} on f_{c}"
                        continue
                    lhs = l_coproduct(f(x))
                    rhs = {}
                    for (a, b), v in l_coproduct(x).items():
                        fa, fb = f({a: 1}), f({b: 1})
                        for a2, ca in fa.items():
                            for b2, cb in fb.items():
                                accumulate(rhs, (a2, b2), v * ca * cb)
                    if lhs != rhs:
                        bad["naturality"] = bad["naturality"] or f"Delta vs {phi} on f_{c}"
    names = {"counit_free_chain_map": "coproduct_chain_map"}
    for k, v in bad.items():
        checks.append(Check(f"L.{names.get(k, k)}", not v, v))
    # functoriality on all composable pairs up to level 3
    bad = ""
    for n in range(4):
        for m in range(4):
            for l in range(4):
                for phi in monotone_maps(n, m):
                    for psi in monotone_maps(m, l):
                        comp = tuple(psi[phi[i]] for i in range(n + 1))
                        f, g, h = (l_cosimplicial_map(phi, n, m), l_cosimplicial_map(psi, m, l),
                                   l_cosimplicial_map(comp, n, l))
                        for c in chains(n):
                            if g(f({c: 1})) != h({c: 1}):
                                bad = bad or f"(psi phi)_* != psi_* phi_* for {phi}, {psi}"
    checks.append(Check("L.functorial", not bad, bad))
    return checks


# -- the Moore complex of a simplicial vector space ------------------------------------------
class SimplicialVectorSpace:
    """Levels ``0..top`` with bases, faces ``d_i`` and degeneracies ``s_i`` on basis elements."""

    def __init__(self, bases, face, degeneracy, top):
        self.bases = bases
        self.face = face
        self.degeneracy = degeneracy
        self.top = top

    def apply_face(self, i, x):
        out = {}
        for b, c in x.items():
            for b2, c2 in self.face(i, b).items():
                accumulate(out, b2, c * c2)
        return out

    def apply_degeneracy(self, i, x):
        out = {}
        for b, c in x.items():
            for b2, c2 in self.degeneracy(i, b).items():
                accumulate(out, b2, c * c2)
        return out

    def identity_violation(self):
        for n in range(self.top + 1):
            for b in self.bases[n]:
                x = {b: 1}
                if n >= 2:
                    for i in range(n + 1):
                        for j in range(i + 1, n + 1):
                            l = self.apply_face(i, self.apply_face(j, x))
                            r = self.apply_face(j - 1, self.apply_face(i, x))
                            if l != r:
                                return f"d_{i} d_{j} != d_{j - 1} d_{i} on {b}"
                if n + 1 <= self.top:
                    for j in range(n + 1):
                        for i in range(n + 2):
                            l = self.apply_face(i, self.apply_degeneracy(j, x))
                            if i < j:
                                r = self.apply_degeneracy(j - 1, self.apply_face(i, x)) if n >= 1 else None
                            elif i in (j, j + 1):
                                r = x
                            else:
                                r = self.apply_degeneracy(j, self.apply_face(i - 1, x)) if n >= 1 else None
                            if r is not None and l != r:
                                return f"d_{i} s_{j} relation fails on {b}"
                if n + 2 <= self.top:
                    for i in range(n + 1):
                        for j in range(i, n + 1):
                            l = self.apply_degeneracy(i, self.apply_degeneracy(j, x))
                            r = self.apply_degeneracy(j + 1, self.apply_degeneracy(i, x))
                            if l != r:
                                return f"s_{i} s_{j} != s_{j + 1} s_{i} on {b}"
        return ""


class MooreComplex:
    """``N(X)^{-n} = X_n / D_n`` with differential the alternating sum of faces."""

    def __init__(self, X):
        bad = X.identity_violation()
        if bad:
            raise SimplicialIdentityError(bad)
        self.X = X
        self.quotients = {}
        for n in range(X.top + 1):
            rels = []
            if n >= 1:
                for b in X.bases[n - 1]:
                    for i in range(n):
                        rels.append(X.apply_degeneracy(i, {b: 1}))
            self.quotients[n] = linalg.Quotient(rels, X.bases[n])

    def basis(self, n):
        return self.quotients[n].basis

    def d(self, n, x):
        """Differential from level ``n`` to level ``n - 1`` (cohomological degree ``-n`` to ``-n+1``)."""
        out = {}
        for i in range(n + 1):
            out = tadd(out, self.X.apply_face(i, x), sign(i))
        return self.quotients[n - 1].reduce(out) if n >= 1 else {}

    def d_squared_zero(self):
        for n in range(2, self.X.top + 1):
            for b in self.basis(n):
                if self.d(n - 1, self.d(n, {b: 1})):
                    return False
        return True


def standard_simplex(n, top=None):
    """``k Delta[n]``: level ``m`` spanned by monotone maps ``[m] -> [n]``."""
    top = n if top is None else top
    bases = {m: monotone_maps(m, n) for m in range(top + 1)}

    def face(i, b):
        return {b[:i] + b[i + 1:]: 1}

    def degeneracy(i, b):
        return {b[: i + 1] + b[i:]: 1}

    return SimplicialVectorSpace(bases, face, degeneracy, top)


# -- convolution algebras ---------------------------------------------------------------------
@dataclass(frozen=True)
class DGAlgebraView:
    """The operations of a DG-algebra ``V`` used by ``Hom(L^n, V)``."""

    d: object
    mul: object
    degree: object
    unit: dict


def algebra_view(A):
    return DGAlgebraView(A.d, A.mul, A.degree_of, dict(A.unit))


def tensor_power_view(A, n):
    unit = {}
    for combo in cartesian(*[list(A.unit.items())] * n):
        c = Fraction(1)
        for _, k in combo:
            c *= k
        accumulate(unit, tuple(l for l, _ in combo), c)

    def degree(x):
        degs = {A.word_degree(w) for w in x}
        if len(degs) > 1:
            raise ValueError("not homogeneous")
        return degs.pop() if degs else None

    return DGAlgebraView(A.tensor_d, A.tensor_mul, degree, unit)


class ConvolutionAlgebra:
    """``A^[n] = Hom(L^n, V)``."""

    def __init__(self, V, n):
        self.V = V
        self.n = n
        self.L = LComplex(n)

    def degree(self, u):
        degs = set()
        for c, val in u.items():
            dv = self.V.degree(val)
            if dv is not None:
                degs.add(dv - chain_degree(c))
        if len(degs) > 1:
            raise ValueError("map is not homogeneous")
        return degs.pop() if degs else None

    def clean(self, u):
        return {c: v for c, v in u.items() if v}

    def evaluate(self, u, x):
        out = {}
        for c, v in x.items():
            if c in u:
                out = tadd(out, u[c], v)
        return out

    def add(self, u, v, c=1):
        out = dict(u)
        for ch, val in v.items():
            out[ch] = tadd(out.get(ch, {}), val, c)
        return self.clean(out)

    def D(self, u):
        p = self.degree(u) or 0
        out = {}
        for c in self.L.basis:
            val = self.V.d(u.get(c, {}))
            val = tadd(val, self.evaluate(u, l_diff({c: 1})), -sign(p))
            if val:
                out[c] = val
        return out

    def mul(self, u, v):
        q = self.degree(v) or 0
        out = {}
        for c in self.L.basis:
            val = {}
            for j in range(len(c)):
                a, b = c[: j + 1], c[j:]
                if a in u and b in v:
                    val = tadd(val, self.V.mul(u[a], v[b]), sign(q * chain_degree(a)))
            if val:
                out[c] = val
        return out

    def unit(self):
        return {(i,): dict(self.V.unit) for i in range(self.n + 1)}

    def r(self, x):
        """``r(x)(f_i) = x`` and ``r(x)`` vanishes on longer chains."""
        return self.clean({(i,): dict(x) for i in range(self.n + 1)})

    def pullback(self, u, phi, m):
        """``phi^* u = u o phi_*`` for ``phi: [m] -> [n]``."""
        f = l_cosimplicial_map(phi, m, self.n)
        out = {}
        for c in chains(m):
            val = self.evaluate(u, f({c: 1}))
            if val:
                out[c] = val
        return out

    def homotopy_t(self, s, literal=False):
        """Contracting homotopy: ``t(f_I) = e s(f_{0<I})`` when ``i_0 > 0``, else 0.

        With the Koszul Hom differential, ``r(s(f_0)) - s = D t`` for a closed
        ``s`` of degree ``p`` needs ``e = (-1)^{p+1}``; ``literal`` uses ``e = 1``.
        """
        p = self.degree(s) or 0
        e = 1 if literal else -sign(p)
        out = {}
        for c in self.L.basis:
            if c[0] > 0 and (0,) + c in s:
                out[c] = tscale(s[(0,) + c], e)
        return out


def hom_basis(A, n, degree=None, window=None):
    """Basis maps ``f_c -> label`` of ``Hom(L^n, A)``, optionally of one degree."""
    out = []
    for c in chains(n):
        for l in A.basis(window):
            if degree is None or A.deg(l) - chain_degree(c) == degree:
                out.append({c: {l: Fraction(1)}})
    return out


def _flat(u):
    return {(c, l): v for c, val in u.items() for l, v in val.items()}


def convolution_checks(A, n_max=3, window=None, max_triples=None, rng=None):
    """Associativity, unitality and Leibniz on basis maps of ``A^[n]``."""
    bad = {"associative": "", "unital": "", "leibniz": "", "d_squared": ""}
    V = algebra_view(A)
    for n in range(n_max + 1):
        H = ConvolutionAlgebra(V, n)
        B = hom_basis(A, n, window=window)
        one = H.unit()
        for u in B:
            if H.mul(one, u) != u or H.mul(u, one) != u:
                bad["unital"] = bad["unital"] or f"n={n}, {_flat(u)}"
            if H.D(H.D(u)):
                bad["d_squared"] = bad["d_squared"] or f"n={n}"
        pairs = list(cartesian(B, B))
        for u, v in pairs:
            lhs = H.D(H.mul(u, v))
            p = H.degree(u) or 0
            rhs = H.add(H.mul(H.D(u), v), H.mul(u, H.D(v)), sign(p))
            if lhs != rhs:
                bad["leibniz"] = bad["leibniz"] or f"n={n}"
        triples = cartesian(B, B, B)
        if max_triples is not None:
            allt = list(triples)
            triples = allt if len(allt) <= max_triples else rng.sample(allt, max_triples)
        for u, v, w in triples:
            if H.mul(H.mul(u, v), w) != H.mul(u, H.mul(v, w)):
                bad["associative"] = bad["associative"] or f"n={n}"
                break
    return [Check(f"convolution.{k}", not v, v) for k, v in bad.items()]


def _cone_matrix(A, n, window=None):
    """Differential of the mapping cone of ``r: A -> A^[n]`` as a sparse matrix.

    The cone in degree ``p`` is ``A^{p+1} (+) Hom^p(L^n, A)`` with
    ``d(a, u) = (-d a, r(a) + D u)``.
    """
    V = algebra_view(A)
    H = ConvolutionAlgebra(V, n)
    cols = [("a", l) for l in A.basis(window)] + [("u", c, l) for c in chains(n) for l in A.basis(window)]
    columns = {}
    for col in cols:
        if col[0] == "a":
            l = col[1]
            img = {("a", m): -v for m, v in A.d_basis(l).items()}
            for (c, m), v in _flat(H.r({l: Fraction(1)})).items():
                img[("u", c, m)] = img.get(("u", c, m), 0) + v
        else:
            _, c, l = col
            img = {("u", c2, m): v for (c2, m), v in _flat(H.D({c: {l: Fraction(1)}})).items()}
        columns[col] = {k: v for k, v in img.items() if v}
    row_keys = sorted({k for img in columns.values() for k in img}, key=repr)
    rows = [{col: img[k] for col, img in columns.items() if k in img} for k in row_keys]
    return linalg.SparseMatrix(rows, cols), len(cols)


def resolution_map_checks(A, n_max=3, window=None, rng=None, samples=20, finite=True):
    """``r`` is a multiplicative chain map, cosimplicially consistent, and (finite ``A``) a quasi-iso."""
    checks = []
    V = algebra_view(A)
    basis = A.basis(window)
    bad = {"chain_map": "", "multiplicative": "", "cosimplicial": "", "homotopy": "", "quasi_iso": ""}
    for n in range(n_max + 1):
        H = ConvolutionAlgebra(V, n)
        for l in basis:
            x = {l: Fraction(1)}
            if H.D(H.r(x)) != H.r(A.d(x)):
                bad["chain_map"] = bad["chain_map"] or f"n={n}, {l}"
            for m in range(n_max + 1):
                for phi in monotone_maps(m, n):
                    if H.pullback(H.r(x), phi, m) != ConvolutionAlgebra(V, m).r(x):
                        bad["cosimplicial"] = bad["cosimplicial"] or f"{phi}"
        for l1 in basis:
            for l2 in basis:
                x, y = {l1: Fraction(1)}, {l2: Fraction(1)}
                if H.mul(H.r(x), H.r(y)) != H.r(A.mul(x, y)):
                    bad["multiplicative"] = bad["multiplicative"] or f"n={n}, {l1}, {l2}"
        if finite:
            M, dim = _cone_matrix(A, n, window)
            rk = linalg.rank(M)
            if dim != 2 * rk:
                bad["quasi_iso"] = bad["quasi_iso"] or f"n={n}: cone homology has dimension {dim - 2 * rk}"
    # the explicit homotopy on random cycles
    if rng is not None:
        for n in (1, 2):
            H = ConvolutionAlgebra(V, n)
            degs = sorted({A.deg(l) - chain_degree(c) for c in chains(n) for l in basis})
            for _ in range(samples):
                p = rng.choice(degs)
                B = hom_basis(A, n, p, window)
                cols = list(range(len(B)))
                imgs = [_flat(H.D(u)) for u in B]
                keys = sorted({k for im in imgs for k in im}, key=repr)
                rows = [{j: imgs[j][k] for j in cols if k in imgs[j]} for k in keys]
                Z = linalg.kernel_basis(linalg.SparseMatrix(rows, cols))
                if not Z:
                    continue
                s = {}
                for z in Z:
                    coeff = Fraction(rng.randint(-3, 3))
                    for j, v in z.items():
                        for c, val in B[j].items():
                            s[c] = tadd(s.get(c, {}), val, coeff * v)
                s = H.clean(s)
                lhs = H.add(H.r(s.get((0,), {})), s, -1)
                if lhs != H.D(H.homotopy_t(s)):
                    bad["homotopy"] = bad["homotopy"] or f"n={n}, degree {p}"
    for k, v in bad.items():
        if k == "quasi_iso" and not finite:
            checks.append(Check("resolution.quasi_iso", True, "skipped: infinite-dimensional", status="skip"))
        elif k == "homotopy" and rng is None:
            continue
        else:
            checks.append(Check(f"resolution.{k}", not v, v))
    return checks


def matching_map_check(A, n, window=None):
    """Matching object as a limit over proper injections, and surjectivity of ``m^n``.

    Returns a dict with the subcomplex/subcoalgebra checks for ``Lbar^n``, the
    dimension of the limit, the dimension of ``Hom(Lbar^n, A)`` and the rank
    of the matching map.
    """
    basis = A.basis(window)
    full = tuple(range(n + 1))
    lbar = [c for c in chains(n) if c != full]
    lbar_set = set(lbar)
    sub_d = all(set(l_diff({c: 1})) <= lbar_set for c in lbar)
    sub_delta = all(a in lbar_set and b in lbar_set for c in lbar for (a, b) in l_coproduct({c: 1}))
    if n == 0:
        return {"subcomplex": sub_d, "subcoalgebra": sub_delta, "limit_dim": 0,
                "hom_lbar_dim": 0, "rank": 0, "surjective": True}
    # objects of the indexing category: proper injections [m] -> [n]
    objs = [I for m in range(n) for I in injections(m, n)]
    coords = [(I, c, l) for I in objs for c in chains(len(I) - 1) for l in basis]
    index = {k: j for j, k in enumerate(coords)}
    # compatibility: for J inside I (J = I o psi), u_J = psi^* u_I
    rows = []
    for I in objs:
        for J in objs:
            if len(J) < len(I) and set(J) <= set(I):
                psi = tuple(I.index(j) for j in J)
                f = l_cosimplicial_map(psi, len(J) - 1, len(I) - 1)
                for c in chains(len(J) - 1):
                    img = f({c: 1})
                    for l in basis:
                        row = {index[(J, c, l)]: Fraction(1)}
                        for c2, v in img.items():
                            k = index[(I, c2, l)]
                            row[k] = row.get(k, 0) - v
                        rows.append({k: v for k, v in row.items() if v})
    K = linalg.kernel_basis(linalg.SparseMatrix(rows, list(range(len(coords)))))
    # matching map: u in Hom(L^n, A) -> (u o I_*)_I
    mcols = [(c, l) for c in chains(n) for l in basis]
    mimg = []
    for c, l in mcols:
        vec = {}
        for I in objs:
            f = l_cosimplicial_map(I, len(I) - 1, n)
            for c2 in chains(len(I) - 1):
                if f({c2: 1}).get(c):
                    vec[index[(I, c2, l)]] = f({c2: 1})[c]
        mimg.append(vec)
    rank = len(linalg.span_basis(mimg))
    return {
        "subcomplex": sub_d,
        "subcoalgebra": sub_delta,
        "limit_dim": len(K),
        "hom_lbar_dim": len(lbar) * len(basis),
        "rank": rank,
        "surjective": rank == len(K),
    }


# -- fat totalization -------------------------------------------------------------------------
def injection_map(A, I, n, X, k):
    """Cosimplicial map of ``A^bullet`` along the injection ``[k] -> [n]`` with image ``I``."""
    missing = [j for j in range(n + 1) if j not in I]
    level = k
    for j in missing:
        X = A.face(X, j, level)
        level += 1
    return X


class FatTotalization:
    """``prod_{n <= N} A^{(x)n}[-n]`` with the differential and product of the end formula.

    ``d(x)_n = d(x_n) - (-1)^{|x|} sum_j (-1)^j delta^j(x_{n-1})``,
    ``(x y)_n = sum_i (-1)^{|y| i} (x_i (x) 1..1)(1..1 (x) y_{n-i})``.
    """

    def __init__(self, A, N):
        self.A = A
        self.N = N

    def word_degree(self, w):
        return self.A.word_degree(w) + len(w)

    def parts(self, x):
        out = {}
        for w, c in x.items():
            out.setdefault(self.word_degree(w), {})[w] = c
        return out

    def one(self):
        return {(): Fraction(1)}

    def d(self, x):
        A = self.A
        out = {}
        for p, xp in self.parts(x).items():
            for n in range(self.N + 1):
                out = tadd(out, A.tensor_d(weight_part(xp, n)))
                if n >= 1:
                    prev = weight_part(xp, n - 1)
                    if prev:
                        for j in range(n + 1):
                            out = tadd(out, A.face(prev, j, n - 1), -sign(p + j))
        return out

    def mul(self, x, y):
        A = self.A
        out = {}
        for q, yq in self.parts(y).items():
            for n in range(self.N + 1):
                for i in range(n + 1):
                    xi = weight_part(x, i)
                    yj = weight_part(yq, n - i)
                    if not xi or not yj:
                        continue
                    left = injection_map(A, tuple(range(i + 1)), n, xi, i)
                    right = injection_map(A, tuple(range(i, n + 1)), n, yj, n - i)
                    out = tadd(out, A.tensor_mul(left, right), sign(q * i))
        return out

    # the natural-transformation route
    def transformation(self, x):
        """``phi^n(f_I) = (image-I injection)(x_{|I|-1})`` for ``n <= N``."""
        A = self.A
        phis = {}
        for n in range(self.N + 1):
            phi = {}
            for c in chains(n):
                k = len(c) - 1
                xk = weight_part(x, k)
                if xk:
                    val = injection_map(A, c, n, xk, k)
                    if val:
                        phi[c] = val
            phis[n] = phi
        return phis

    def d_via_transformations(self, x):
        out = {}
        for p, xp in self.parts(x).items():
            phis = self.transformation(xp)
            for n in range(self.N + 1):
                H = ConvolutionAlgebra(tensor_power_view(self.A, n), n)
                Dphi = H.D(phis[n]) if phis[n] else {}
                out = tadd(out, Dphi.get(tuple(range(n + 1)), {}))
        return out

    def mul_via_transformations(self, x, y):
        out = {}
        px, py = self.transformation(x), self.transformation(y)
        for n in range(self.N + 1):
            if not px[n] or not py[n]:
                continue
            H = ConvolutionAlgebra(tensor_power_view(self.A, n), n)
            prod = H.mul(px[n], py[n])
            out = tadd(out, prod.get(tuple(range(n + 1)), {}))
        return out


def fat_totalization(A, N):
    return FatTotalization(A, N)


# -- comparison with the coaugmented Cobar construction ---------------------------------------
def _transport(A, base, x):
    from .indexed import kappa
    from .monoidal import kappa_right

    name, parity = base
    if name == "identity":
        out = dict(x)
    elif name == "kappa_left":
        out = kappa(A, x)
    else:
        out = kappa_right(A, x)
    if parity:
        out = {w: c * sign(A.word_degree(w)) for w, c in out.items()}
    return out


def _apply_signs(x, signs):
    return {w: c * signs[len(w)] for w, c in x.items()}


class TotalizationCertificate:
    def __init__(self, base, signs, d_checked, mul_checked, candidates):
        self.base = base
        self.signs = signs
        self.d_checked = d_checked
        self.mul_checked = mul_checked
        self.candidates = candidates

    @property
    def ok(self):
        return self.base is not None

    def describe(self):
        if not self.ok:
            return "no sign normalization intertwines both structures"
        s = "".join("+" if v > 0 else "-" for v in self.signs)
        name, parity = self.base
        t = name + ("+parity" if parity else "")
        return (f"transport={t}, weight signs={s}, d checked on {self.d_checked} words, "
                f"products on {self.mul_checked} pairs, {self.candidates} consistent candidate(s)")


def totalization_vs_cobar(A, N, window=None, max_pairs=None, rng=None):
    """Search the intertwiner ``Tot -> Cobar_coaug`` among sign normalizations.

    Candidates are a transport (identity, ``kappa_left``, ``kappa_right``),
    optionally times the parity ``(-1)^{internal degree}``, followed by a diagonal weight sign ``sigma(n)``, ``sigma(0) = 1``.  A
    candidate is accepted when it intertwines the differentials on every
    windowed basis word of weight ``<= N`` and the products on all (or
    ``max_pairs`` sampled) pairs of basis words of total weight ``<= N``.
    """
    from .cobar import Cobar

    T = FatTotalization(A, N)
    C = Cobar(A, N)
    words = [w for n in range(N + 1) for w in A.words(n, window)]
    pairs = [(u, v) for u in words for v in words if len(u) + len(v) <= N]
    if max_pairs is not None and len(pairs) > max_pairs:
        pairs = rng.sample(pairs, max_pairs)
    probe_words = words[: min(len(words), 40)] + words[-40:]
    probe_pairs = pairs[:60]

    def works(base, signs, ws, ps):
        phi = lambda x: _apply_signs(_transport(A, base, x), signs)
        for w in ws:
            x = {w: Fraction(1)}
            if phi(T.d(x)) != C.coaug_diff(phi(x)):
                return False
        for u, v in ps:
            x, y = {u: Fraction(1)}, {v: Fraction(1)}
            if phi(T.mul(x, y)) != C.mul(phi(x), phi(y)):
                return False
        return True

    found = []
    for base in cartesian(("identity", "kappa_left", "kappa_right"), (False, True)):
        for tail in cartesian((1, -1), repeat=N):
            signs = (1,) + tail
            if works(base, signs, probe_words, probe_pairs):
                found.append((base, signs))
    for base, signs in found:
        if works(base, signs, words, pairs):
            return TotalizationCertificate(base, signs, len(words), len(pairs), len(found))
    return TotalizationCertificate(None, None, len(words), len(pairs), 0)
