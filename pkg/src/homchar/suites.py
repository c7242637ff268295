"""Check batteries behind ``homchar run``.

Every suite is a function ``(ctx) -> list[Check]``.  All randomness comes
from ``ctx.rng``, seeded from the command line, so reports are reproducible
byte for byte.  Suites draw their random elements in a fixed order; a check
that fails records the first witness, rendered exactly.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import indexed
from .ainfty import (
    ainf_compose,
    ainf_hom_diff,
    ainfin_normative,
    ainfin_reconciled,
    onedim_dictionary,
    onedim_element,
    onedim_inverse,
    onedim_morphism,
    regular_comodule,
)
from .axioms import check_bialgebra_axioms, simplicial_identities_check
from .cobar import Cobar, cdg_morphism_check, compose_cdg, gauge_isomorphism_witness
from .graded import fmt_tensor, sign, tadd, weight_part
from .holim import HolimCategory, ext_example
from .hopf import UpperTriangularHopf
from .monoidal import (
    BarComplex,
    associativity_check,
    tensor_left,
    tensor_left_via_braces,
    tensor_right,
    tensor_right_via_braces,
    weight2_left,
    weight2_right,
)
from .randgen import WordSampler, grouplikes, random_element, random_invertible, random_mc
from .report import Check, skip
from .simplicial import (
    FatTotalization,
    convolution_checks,
    l_invariant_checks,
    matching_map_check,
    resolution_map_checks,
    totalization_vs_cobar,
)

SUITES = ("axioms", "cobar", "mc", "holim", "ainfty", "monoidal", "appendix", "ext-example")


@dataclass
class Context:
    A: object
    N: int
    rng: object
    window: tuple = None
    samples: int = 20

    def __post_init__(self):
        self.C = Cobar(self.A, self.N)
        self.sampler = WordSampler(self.A, self.window)

    def element(self, degree=None, terms=3, n_max=None):
        if degree is None:
            degree = self.rng.randint(-1, 2)
        return random_element(self.rng, self.sampler, degree, self.N if n_max is None else n_max, terms=terms)

    def mc(self):
        return random_mc(self.rng, self.C, self.sampler, self.window)

    def invertible(self):
        return random_invertible(self.rng, self.C, self.sampler)


class Tally:
    """Counts cases of one property and keeps the first failing witness."""

    def __init__(self, name):
        self.name = name
        self.cases = 0
        self.witness = None

    def record(self, ok, witness=""):
        self.cases += 1
        if not ok and self.witness is None:
            self.witness = f"case {self.cases}: {witness() if callable(witness) else witness}"

    def zero(self, residual, context=""):
        self.record(not residual, lambda: f"{context}residual {fmt_tensor(residual)}")

    def check(self):
        if self.witness is None:
            return Check(self.name, True, f"{self.cases} cases")
        return Check(self.name, False, self.witness)


def _tallies(*names):
    return {n: Tally(n) for n in names}


def _checks(tallies):
    return [t.check() for t in tallies.values()]


def _eq(t, lhs, rhs, context=""):
    t.zero(tadd(lhs, rhs, -1), context)


# -- axioms --------------------------------------------------------------------
def suite_axioms(ctx):
    A = ctx.A
    checks = list(check_bialgebra_axioms(A, ctx.window))
    window = ctx.window
    if isinstance(A, UpperTriangularHopf) and window is None:
        window = (1, 1)
    checks += simplicial_identities_check(A, 3, window)
    return checks


# -- cobar -----------------------------------------------------------------------
def suite_cobar(ctx):
    C = ctx.C
    t = _tallies("cobar.d_squared", "cobar.coaug_d_squared", "cobar.leibniz", "cobar.twisted_d_squared", "cobar.mc_characters")
    for _ in range(ctx.samples):
        x = ctx.element()
        t["cobar.d_squared"].zero(C.diff(C.diff(x)))
        t["cobar.coaug_d_squared"].zero(C.coaug_diff(C.coaug_diff(x)))
        y = ctx.element()
        lhs = C.diff(C.mul(x, y))
        rhs = C.mul(C.diff(x), y)
        for deg, part in C.homogeneous_parts(x).items():
            rhs = tadd(rhs, C.mul(part, C.diff(y)), sign(deg))
        _eq(t["cobar.leibniz"], lhs, rhs)
        a, b = ctx.mc(), ctx.mc()
        t["cobar.twisted_d_squared"].zero(C.twisted_diff(C.twisted_diff(x, a, b), a, b))
    for g in grouplikes(ctx.A, ctx.window):
        t["cobar.mc_characters"].zero(C.mc_curvature(C.letter(g)))
    return _checks(t)


# -- Maurer-Cartan, gauge, CDG, index formulas ---------------------------------------
def suite_mc(ctx):
    C = ctx.C
    names = (
        "gauge.mc", "gauge.witness_closed", "gauge.witness_invertible", "gauge.group_action",
        "cdg.morphism", "cdg.composition",
        "formula.form", "formula.diff", "formula.mult",
    )
    t = _tallies(*names)
    printed = {"form": 0, "diff": 0, "mult": 0}
    for _ in range(ctx.samples):
        a = ctx.mc()
        f, g = ctx.invertible(), ctx.invertible()
        fa = C.gauge_act(f, a)
        t["gauge.mc"].zero(C.mc_curvature(fa))
        W = gauge_isomorphism_witness(C, f, a)
        t["gauge.witness_closed"].record(W.closed, lambda: f"d(f) = {fmt_tensor(W.d_f)}")
        t["gauge.witness_invertible"].record(W.invertible, "f f^-1 or f^-1 f differs from 1")
        _eq(t["gauge.group_action"], C.gauge_act(C.mul(f, g), a), C.gauge_act(f, C.gauge_act(g, a)))

        b, c = ctx.mc(), ctx.mc()
        xs = [ctx.element() for _ in range(2)]
        r = cdg_morphism_check(C, a, b, tadd(a, b, -1), xs)
        t["cdg.morphism"].record(r.ok, lambda: r.first_curve_failure())
        r2 = cdg_morphism_check(C, a, c, compose_cdg(tadd(b, c, -1), tadd(a, b, -1)), xs)
        t["cdg.composition"].record(r2.ok, lambda: r2.first_curve_failure())

        # index formulas: MC and non-MC inputs, morphisms of both parities
        noise = ctx.element(1, n_max=ctx.N)
        for inp in (a, tadd(a, noise)):
            cmp = indexed.compare_form(C, inp)
            t["formula.form"].record(cmp.ok, lambda: f"first differing weight {cmp.reconciled_diff}")
            printed["form"] += cmp.printed_diff is not None
        h = ctx.element()
        cmp = indexed.compare_diff(C, h, a, b)
        t["formula.diff"].record(cmp.ok, lambda: f"first differing weight {cmp.reconciled_diff}")
        printed["diff"] += cmp.printed_diff is not None
        h2 = ctx.element()
        cmp = indexed.compare_mult(C, h, h2)
        t["formula.mult"].record(cmp.ok, lambda: f"first differing weight {cmp.reconciled_diff}")
        printed["mult"] += cmp.printed_diff is not None
    checks = _checks(t)
    for k, v in printed.items():
        total = t[f"formula.{k}"].cases
        checks.append(Check(f"formula.{k}.printed_shape", True, f"informational: unreconciled shape departs on {v}/{total} inputs"))
    return checks


# -- the holim category ------------------------------------------------------------------
def suite_holim(ctx):
    C = ctx.C
    cat = HolimCategory(ctx.A, ctx.N)
    t = _tallies("holim.hom_d_squared", "holim.leibniz", "holim.associative", "holim.unital", "holim.objects")
    for _ in range(ctx.samples):
        objs = [cat.make_object(ctx.mc()) for _ in range(4)]
        t["holim.objects"].record(all(C.is_mc(o.components) for o in objs))
        f = cat.morphism(objs[0], objs[1], ctx.element())
        g = cat.morphism(objs[1], objs[2], ctx.element())
        h = cat.morphism(objs[2], objs[3], ctx.element())
        t["holim.hom_d_squared"].zero(cat.hom_diff(cat.hom_diff(f)).element)
        gf = cat.compose(g, f)
        lhs = cat.hom_diff(gf).element
        rhs = tadd(cat.compose(cat.hom_diff(g), f).element, cat.compose(g, cat.hom_diff(f)).element, sign(g.degree))
        _eq(t["holim.leibniz"], lhs, rhs)
        _eq(t["holim.associative"], cat.compose(h, gf).element, cat.compose(cat.compose(h, g), f).element)
        ok = cat.compose(cat.identity(objs[1]), f).element == f.element == cat.compose(f, cat.identity(objs[0])).element
        t["holim.unital"].record(ok)
    return _checks(t)


def suite_ext_example(ctx):
    if not isinstance(ctx.A, UpperTriangularHopf):
        return [skip("ext.example", "needs the upper-triangular algebra")]
    return ext_example_checks(ctx.window or (2, 2))


def ext_example_checks(window=(2, 2)):
    ex = ext_example(window)
    H = ex["cohomology"]
    a, z = ex["one_minus_g"], ex["yinv_z"]
    checks = [
        Check("ext.cycle.one_minus_g", H.is_cycle(a), f"d = {fmt_tensor(H.d(a))}"),
        Check("ext.cycle.yinv_z", H.is_cycle(z), f"d = {fmt_tensor(H.d(z))}"),
    ]
    ok, coeffs = H.is_boundary(a)
    checks.append(Check("ext.boundary.one_minus_g", ok, f"coefficients {[str(c) for c in coeffs] if ok else '-'}"))
    ok, _ = H.is_boundary(z)
    checks.append(Check("ext.not_boundary.yinv_z", not ok, "exact span membership"))
    checks.append(Check("ext.window_closed", H.closed, f"window {window}"))
    checks.append(Check("ext.dim", H.dim == 1, f"cycles {H.cycle_dim}, boundaries {H.boundary_dim}, Ext^1 dim {H.dim}"))
    return checks


# -- A-infinity comodules --------------------------------------------------------------
def suite_ainfty(ctx):
    C, A, N = ctx.C, ctx.A, ctx.N
    cat = HolimCategory(A, N)
    t = _tallies(
        "ainfty.dictionary", "ainfty.residual_is_curvature", "ainfty.identities_formula",
        "ainfty.hom_d_squared", "ainfty.hom_diff_matches_holim", "ainfty.compose_matches_holim",
        "ainfty.regular_comodule",
    )
    for _ in range(ctx.samples):
        a, b, c = ctx.mc(), ctx.mc(), ctx.mc()
        Ma, Mb, Mc = (onedim_dictionary(C, x) for x in (a, b, c))
        t["ainfty.dictionary"].record(onedim_inverse(Ma) == a)
        bad = tadd(a, ctx.element(1), 1)
        Mbad = onedim_dictionary(C, bad)
        R = Mbad.residuals(C)
        F = C.mc_curvature(bad)
        ok = all({w: v for (w, _), v in R[("*", n)].items()} == weight_part(F, n - 1) for n in range(1, N + 2))
        t["ainfty.residual_is_curvature"].record(ok, lambda: fmt_tensor(F))
        for n in range(1, N + 2):
            _eq(t["ainfty.identities_formula"], ainfin_reconciled(Mbad, "*", n), ainfin_normative(Mbad, C, "*", n), f"n={n}: ")
        x, y = ctx.element(), ctx.element()
        dx, dy = C.degree(x) or 0, C.degree(y) or 0
        f = onedim_morphism(Ma, Mb, x, dx)
        g = onedim_morphism(Mb, Mc, y, dy)
        df = ainf_hom_diff(C, f)
        t["ainfty.hom_d_squared"].zero(onedim_element(ainf_hom_diff(C, df)))
        _eq(t["ainfty.hom_diff_matches_holim"], onedim_element(df), C.twisted_diff(x, a, b))
        oa, ob, oc = (cat.make_object(v) for v in (a, b, c))
        hol = cat.compose(cat.morphism(ob, oc, y, dy), cat.morphism(oa, ob, x, dx)).element
        _eq(t["ainfty.compose_matches_holim"], onedim_element(ainf_compose(g, f)), hol)
    if A.finite:
        M = regular_comodule(A, N)
        for (m, n), r in sorted(M.residuals(C).items(), key=repr):
            t["ainfty.regular_comodule"].zero(r, f"{m} n={n}: ")
    else:
        del t["ainfty.regular_comodule"]
    return _checks(t)


# -- monoidal structure -----------------------------------------------------------------
def suite_monoidal(ctx):
    C = ctx.C
    t = _tallies(
        "monoidal.left.mc", "monoidal.right.mc", "monoidal.left.associative", "monoidal.right.associative",
        "monoidal.left.weight2", "monoidal.right.weight2", "monoidal.left.braces", "monoidal.right.braces",
        "monoidal.bar_d_squared",
    )
    B = BarComplex(C)
    for _ in range(ctx.samples):
        a, b, c = ctx.mc(), ctx.mc(), ctx.mc()
        for side, tensor, w2, braces in (
            ("left", tensor_left, weight2_left, tensor_left_via_braces),
            ("right", tensor_right, weight2_right, tensor_right_via_braces),
        ):
            ab = tensor(C, a, b, check=False)
            t[f"monoidal.{side}.mc"].zero(C.mc_curvature(ab))
            ok, where = associativity_check(C, a, b, c, side)
            t[f"monoidal.{side}.associative"].record(ok, lambda: f"first differing weight {where}")
            _eq(t[f"monoidal.{side}.weight2"], weight_part(ab, 2), w2(C, a, b))
            _eq(t[f"monoidal.{side}.braces"], ab, braces(C, a, b))
        e = {}
        for _ in range(3):
            length = ctx.rng.randint(1, 3)
            key = []
            for _ in range(length):
                x = ctx.element(n_max=2, terms=1)
                key.append(next(iter(x)) if x else ())
            e[tuple(key)] = Fraction(ctx.rng.randint(1, 5))
        t["monoidal.bar_d_squared"].zero(B.diff(B.diff(e)))
    return _checks(t)


# -- the appendix: L^n, convolution algebras, totalization -----------------------------------
def suite_appendix(ctx):
    A = ctx.A
    checks = list(l_invariant_checks(5))
    window = ctx.window
    if isinstance(A, UpperTriangularHopf) and window is None:
        window = (1, 1)
    if A.finite:
        checks += convolution_checks(A, 3, window, max_triples=200, rng=ctx.rng)
        checks += resolution_map_checks(A, 3, window, rng=ctx.rng, samples=10, finite=True)
        bad = []
        for n in range(1, 4):
            r = matching_map_check(A, n, window)
            if not (r["surjective"] and r["subcomplex"] and r["subcoalgebra"]):
                bad.append(f"n={n}: {r}")
        checks.append(Check("matching.surjective", not bad, "; ".join(bad) or "n = 1..3"))
    else:
        checks.append(skip("convolution", "infinite-dimensional algebra"))
        checks += resolution_map_checks(A, 3, window, finite=False)
    N = min(ctx.N, 4 if A.finite else 3)
    T = FatTotalization(A, N)
    sampler = WordSampler(A, window)
    t = _tallies("tot.d_squared", "tot.routes_d", "tot.routes_mul", "tot.associative", "tot.leibniz", "tot.unit")
    for _ in range(ctx.samples):
        x, y, z = (random_element(ctx.rng, sampler, ctx.rng.randint(-1, 2), N) for _ in range(3))
        t["tot.d_squared"].zero(T.d(T.d(x)))
        _eq(t["tot.routes_d"], T.d(x), T.d_via_transformations(x))
        xy = T.mul(x, y)
        _eq(t["tot.routes_mul"], xy, T.mul_via_transformations(x, y))
        _eq(t["tot.associative"], T.mul(xy, z), T.mul(x, T.mul(y, z)))
        p = T.word_degree(next(iter(x))) if x else 0
        _eq(t["tot.leibniz"], T.d(xy), tadd(T.mul(T.d(x), y), T.mul(x, T.d(y)), sign(p)))
        t["tot.unit"].record(T.mul(T.one(), x) == x == T.mul(x, T.one()))
    checks += _checks(t)
    cert = totalization_vs_cobar(A, N, window, max_pairs=3000, rng=ctx.rng)
    checks.append(Check("tot.cobar_certificate", cert.ok, cert.describe()))
    return checks


RUNNERS = {
    "axioms": suite_axioms,
    "cobar": suite_cobar,
    "mc": suite_mc,
    "holim": suite_holim,
    "ainfty": suite_ainfty,
    "monoidal": suite_monoidal,
    "appendix": suite_appendix,
    "ext-example": suite_ext_example,
}


def run_suite(suite, ctx):
    if suite == "all":
        checks = []
        for name in SUITES:
            checks += RUNNERS[name](ctx)
        return checks
    try:
        runner = RUNNERS[suite]
    except KeyError:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}") from None
    return runner(ctx)
