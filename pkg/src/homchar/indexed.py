"""Index-sum formulas for Maurer-Cartan elements, Hom differentials and composition.

These evaluate the component formulas on sequences ``x_n in A^{(x)n}``
(unshifted tensors) instead of on Cobar words.  The two pictures are related
by the Koszul identification

    kappa(c1|...|cn) = (-1)^{sum_i |c_i| (n - i)} [c1|...|cn],

which moves ``n`` desuspensions through the letters.  ``kappa`` is an
involution.  Conjugating the Cobar operations by ``kappa`` gives

* ``kappa(u) kappa(v) = (-1)^{len(v) |u|} kappa(uv)``,
* the internal part of the Cobar differential on weight ``m`` becomes
  ``(-1)^m d`` with ``d`` the Koszul differential of ``A^{(x)m}``,
* the coproduct part becomes ``sum_j (-1)^j Delta_j`` (no degree signs).

Each formula comes in two flavours: ``reconciled`` (derived from the above,
must agree exactly with the Cobar evaluation) and ``printed`` (the classical
index-sum shape with signs ``(-1)^{n-k}``, kept only to locate where it
departs from the normative result).
"""

from fractions import Fraction

from .graded import accumulate, sign, tadd, tscale, weight_part


def kappa(A, x):
    out = {}
    for w, c in x.items():
        n = len(w)
        e = 0
        for i, l in enumerate(w):
            e += A.deg(l) * (n - 1 - i)
        out[w] = c * sign(e)
    return out


def components(x, N):
    return {n: weight_part(x, n) for n in range(N + 1)}


def concat(X, Y):
    out = {}
    for u, cu in X.items():
        for v, cv in Y.items():
            accumulate(out, u + v, cu * cv)
    return out


def delta_sum(A, X, n, signs):
    """``sum_{j=1}^{n} signs(j) Delta_j(X)`` for ``X`` of weight ``n``."""
    out = {}
    for j in range(1, n + 1):
        s = signs(j)
        if s:
            out = tadd(out, A.delta_at(X, j - 1), s)
    return out


# -- Maurer-Cartan form -------------------------------------------------------------
def form_reconciled(A, at, n):
    """``(-1)^n kappa`` of the weight-``n`` MC residual, from components ``at``."""
    out = A.tensor_d(at.get(n, {}))
    for k in range(1, n):
        out = tadd(out, concat(at.get(k, {}), at.get(n - k, {})), sign(n + (n - k) * (1 - k)))
    out = tadd(out, delta_sum(A, at.get(n - 1, {}), n - 1, lambda j: sign(n + j)))
    return out


def form_printed(A, at, n):
    out = A.tensor_d(at.get(n, {}))
    for k in range(1, n):
        out = tadd(out, concat(at.get(n - k, {}), at.get(k, {})), sign(n - k))
    out = tadd(out, delta_sum(A, at.get(n - 1, {}), n - 1, lambda k: -sign(n - k)))
    return out


def form_normative(C, a):
    """``(-1)^n kappa(F_n)`` per weight, where ``F = d a + a a`` in Cobar."""
    F = kappa(C.A, C.mc_curvature(a))
    return {n: tscale(weight_part(F, n), sign(n)) for n in range(C.N + 1)}


# -- Hom differential -------------------------------------------------------------
def diff_reconciled(A, at, ft, bt, m, n):
    out = A.tensor_d(ft.get(n, {}))
    out = tadd(out, delta_sum(A, ft.get(n - 1, {}), n - 1, lambda j: sign(n + j)))
    for k in range(1, n + 1):
        out = tadd(out, concat(at.get(k, {}), ft.get(n - k, {})), sign(n + (n - k) * (1 - k)))
    for k in range(0, n):
        out = tadd(out, concat(ft.get(k, {}), bt.get(n - k, {})), -sign(m + n + (n - k) * (m - k)))
    return out


def diff_printed(A, at, ft, bt, m, n):
    out = A.tensor_d(ft.get(n, {}))
    for k in range(1, n):
        out = tadd(out, concat(at.get(k, {}), ft.get(n - k, {})), sign(n - k))
        out = tadd(out, concat(ft.get(k, {}), bt.get(n - k, {})), -sign(m * (n - k + 1)))
    out = tadd(out, delta_sum(A, ft.get(n - 1, {}), n - 1, lambda k: sign(n - k + m)))
    return out


def diff_normative(C, f, a, b):
    D = kappa(C.A, C.twisted_diff(f, a, b))
    return {n: tscale(weight_part(D, n), sign(n)) for n in range(C.N + 1)}


# -- composition -------------------------------------------------------------------
def mult_reconciled(ft, gt, m, l, n):
    out = {}
    for k in range(n + 1):
        out = tadd(out, concat(ft.get(k, {}), gt.get(n - k, {})), sign(m * l + (n - k) * (m - k)))
    return out


def mult_printed(ft, gt, m, l, n):
    # the printed weight bookkeeping forces g_k in place of g_n
    out = {}
    for k in range(n + 1):
        out = tadd(out, concat(gt.get(k, {}), ft.get(n - k, {})), sign(m * (n - k)))
    return out


def mult_normative(C, f, g, m, l):
    P = kappa(C.A, tscale(C.mul(f, g), sign(m * l)))
    return {n: weight_part(P, n) for n in range(C.N + 1)}


# -- comparison ----------------------------------------------------------------------
def first_difference(lhs, rhs):
    """Smallest weight where two per-weight dicts differ, or None."""
    for n in sorted(set(lhs) | set(rhs)):
        if lhs.get(n, {}) != rhs.get(n, {}):
            return n
    return None


class FormulaComparison:
    """Normative vs reconciled vs printed for one input."""

    def __init__(self, name, normative, reconciled, printed):
        self.name = name
        self.normative = normative
        self.reconciled = reconciled
        self.printed = printed
        self.reconciled_diff = first_difference(normative, reconciled)
        self.printed_diff = first_difference(normative, printed)

    @property
    def ok(self):
        return self.reconciled_diff is None


def compare_form(C, a):
    at = components(kappa(C.A, a), C.N)
    norm = form_normative(C, a)
    rec = {n: form_reconciled(C.A, at, n) for n in range(C.N + 1)}
    pr = {n: form_printed(C.A, at, n) for n in range(C.N + 1)}
    return FormulaComparison("form", norm, rec, pr)


def compare_diff(C, f, a, b):
    m = C.degree(f)
    if m is None:
        m = 0
    at, bt = components(kappa(C.A, a), C.N), components(kappa(C.A, b), C.N)
    ft = components(kappa(C.A, f), C.N)
    norm = diff_normative(C, f, a, b)
    rec = {n: diff_reconciled(C.A, at, ft, bt, m, n) for n in range(C.N + 1)}
    pr = {n: diff_printed(C.A, at, ft, bt, m, n) for n in range(C.N + 1)}
    return FormulaComparison("diff", norm, rec, pr)


def compare_mult(C, f, g):
    m = C.degree(f) or 0
    l = C.degree(g) or 0
    ft, gt = components(kappa(C.A, f), C.N), components(kappa(C.A, g), C.N)
    norm = mult_normative(C, f, g, m, l)
    rec = {n: mult_reconciled(ft, gt, m, l, n) for n in range(C.N + 1)}
    pr = {n: mult_printed(ft, gt, m, l, n) for n in range(C.N + 1)}
    return FormulaComparison("mult", norm, rec, pr)
