"""Bialgebra axioms and cosimplicial identities, checked on a basis window."""

from fractions import Fraction
from itertools import product as cartesian

from .graded import fmt_label, fmt_tensor, sign, tadd, tscale
from .report import Check


def _one(label):
    return {label: Fraction(1)}


def _as_words(x):
    return {(a,): c for a, c in x.items()}


def _basis_mul(mul, x, label, left):
    out = {}
    for m, cm in x.items():
        for k, ck in (mul(m, label) if left else mul(label, m)).items():
            s = out.get(k, 0) + cm * ck
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def _first(items, pred):
    for it in items:
        bad = pred(*it)
        if bad:
            return it, bad
    return None, None


def check_bialgebra_axioms(A, window=None):
    """Return one :class:`Check` per axiom; failures carry a counterexample."""
    B = A.basis(window)
    checks = []

    def record(name, items, pred):
        wit, bad = _first(items, pred)
        if wit is None:
            checks.append(Check(f"axiom.{name}", True))
        else:
            w = ",".join(fmt_label(x) for x in wit)
            checks.append(Check(f"axiom.{name}", False, f"at ({w}): {bad}"))

    pairs = list(cartesian(B, B))
    triples = list(cartesian(B, B, B))
    singles = [(a,) for a in B]

    def degrees(a, b=None):
        if b is None:
            out = []
            for m in A.d_basis(a):
                if A.deg(m) != A.deg(a) + 1:
                    out.append(f"d({fmt_label(a)}) has term {fmt_label(m)} of wrong degree")
            for (l1, l2) in A._cop(a):
                if A.deg(l1) + A.deg(l2) != A.deg(a):
                    out.append(f"coproduct term {fmt_label(l1)}|{fmt_label(l2)} of wrong degree")
            if A.counit_basis(a) and A.deg(a) != 0:
                out.append("counit nonzero off degree 0")
            return "; ".join(out)
        for m in A._mul(a, b):
            if A.deg(m) != A.deg(a) + A.deg(b):
                return f"product term {fmt_label(m)} of wrong degree"
        return ""

    record("degrees", singles, degrees)
    record("degrees.product", pairs, degrees)

    mul = A._mul

    def assoc(a, b, c):
        l = _basis_mul(mul, mul(a, b), c, left=True)
        r = _basis_mul(mul, mul(b, c), a, left=False)
        return "" if l == r else f"(ab)c - a(bc) = {fmt_tensor(_as_words(tadd(l, r, -1)))}"

    record("associativity", triples, assoc)

    u = A.unit

    def unital(a):
        x = _one(a)
        if A.mul(u, x) != x or A.mul(x, u) != x:
            return "1*x or x*1 differs from x"
        return ""

    record("unitality", singles, unital)

    def coassoc(a):
        D = {(l1, l2): c for (l1, l2), c in A._cop(a).items()}
        l = A.delta_at(D, 0)
        r = A.delta_at(D, 1)
        return "" if l == r else f"residual {fmt_tensor(tadd(l, r, -1))}"

    record("coassociativity", singles, coassoc)

    def counit(a):
        D = dict(A._cop(a))
        l = A.counit_at(D, 0)
        r = A.counit_at(D, 1)
        x = {(a,): Fraction(1)}
        return "" if l == x and r == x else f"(e*id)D = {fmt_tensor(l)}, (id*e)D = {fmt_tensor(r)}"

    record("counit", singles, counit)

    def delta_mult(a, b):
        l = A.coproduct(A._mul(a, b))
        r = A.tensor_mul(dict(A._cop(a)), dict(A._cop(b)))
        return "" if l == r else f"residual {fmt_tensor(tadd(l, r, -1))}"

    record("coproduct_multiplicative", pairs, delta_mult)

    def delta_unit():
        uu = {}
        for x, cx in u.items():
            for y, cy in u.items():
                uu[(x, y)] = uu.get((x, y), 0) + cx * cy
        uu = {k: v for k, v in uu.items() if v}
        return "" if A.coproduct(u) == uu else "coproduct(1) != 1|1"

    record("coproduct_unital", [()], delta_unit)

    def eps_mult(a, b):
        l = A.counit(A._mul(a, b))
        r = Fraction(A.counit_basis(a)) * Fraction(A.counit_basis(b))
        return "" if l == r else f"e(ab) = {l}, e(a)e(b) = {r}"

    record("counit_multiplicative", pairs, eps_mult)
    record("counit_unital", [()], lambda: "" if A.counit(u) == 1 else f"e(1) = {A.counit(u)}")

    def dd(a):
        return "" if not A.d(A.d_basis(a)) else "d(d(x)) != 0"

    record("d_squared", singles, dd)

    def leibniz(a, b):
        l = A.d(A._mul(a, b))
        r = tadd(A.mul(A.d_basis(a), _one(b)), A.mul(_one(a), A.d_basis(b)), sign(A.deg(a)))
        return "" if l == r else f"residual {fmt_tensor(_as_words(tadd(l, r, -1)))}"

    record("leibniz", pairs, leibniz)

    def coleibniz(a):
        l = A.coproduct(A.d_basis(a))
        r = A.tensor_d(dict(A._cop(a)))
        return "" if l == r else f"residual {fmt_tensor(tadd(l, r, -1))}"

    record("coleibniz", singles, coleibniz)
    record("counit_chain_map", singles, lambda a: "" if A.counit(A.d_basis(a)) == 0 else "e(d x) != 0")
    record("d_unit", [()], lambda: "" if not A.d(u) else "d(1) != 0")
    return checks


def _face(A, X, i, n):
    return A.face(X, i, n)


def _degen(A, X, i, n):
    return A.degeneracy(X, i, n)


def simplicial_identities_check(A, n_max=3, window=None, max_words=None):
    """Cosimplicial identities among the faces/degeneracies of ``A^{(x)n}``.

    Cofaces ``d^i: A^{(x)n-1} -> A^{(x)n}`` (``0 <= i <= n``) and
    codegeneracies ``s^j: A^{(x)n+1} -> A^{(x)n}``; every identity is tested
    on every windowed basis word of the source level.
    """
    checks = []

    def words(n):
        ws = A.words(n, window)
        return ws if max_words is None else ws[:max_words]

    def report(name, bad):
        checks.append(Check(f"simplicial.{name}", not bad, bad))

    # d^j d^i = d^i d^(j-1), i < j, source level m-1 -> target m+1
    bad = ""
    for m in range(1, n_max + 1):
        for w in words(m - 1):
            X = {w: Fraction(1)}
            for j in range(m + 2):
                for i in range(j):
                    l = _face(A, _face(A, X, i, m - 1), j, m)
                    r = _face(A, _face(A, X, j - 1, m - 1), i, m)
                    if l != r:
                        bad = f"d^{j}d^{i} != d^{i}d^{j - 1} on {fmt_tensor(X)}"
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    report("face_face", bad)

    # s^j d^i relations: source level m, d^i into m+1, s^j back to m
    bad = ""
    for m in range(0, n_max):
        for w in words(m):
            X = {w: Fraction(1)}
            for j in range(m + 1):
                for i in range(m + 2):
                    l = _degen(A, _face(A, X, i, m), j, m + 1)
                    if i < j:
                        r = _face(A, _degen(A, X, j - 1, m), i, m - 1)
                    elif i in (j, j + 1):
                        r = X
                    else:
                        r = _face(A, _degen(A, X, j, m), i - 1, m - 1)
                    if l != r:
                        bad = f"s^{j}d^{i} relation fails on {fmt_tensor(X)}"
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    report("degeneracy_face", bad)

    # s^j s^i = s^i s^(j+1), i <= j, source level m
    bad = ""
    for m in range(2, n_max + 1):
        for w in words(m):
            X = {w: Fraction(1)}
            for j in range(m - 1):
                for i in range(j + 1):
                    l = _degen(A, _degen(A, X, i, m), j, m - 1)
                    r = _degen(A, _degen(A, X, j + 1, m), i, m - 1)
                    if l != r:
                        bad = f"s^{j}s^{i} != s^{i}s^{j + 1} on {fmt_tensor(X)}"
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    report("degeneracy_degeneracy", bad)
    return checks
