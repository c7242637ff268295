"""The DG-category of homotopy characters.

Objects are Maurer-Cartan elements of ``Cobar(A)`` (no weight-0 part), the
Hom complex ``Hom(a, b)`` is ``Cobar(A)`` with the twisted differential
``d_(a,b)``, and composition of ``f: a -> b`` with ``g: b -> c`` is
``g o f = (-1)^{|f||g|} f g``.  The sign makes the Leibniz rule read
``d(g o f) = d(g) o f + (-1)^{|g|} g o d(f)``.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .cobar import Cobar, NotMaurerCartan
from .graded import fmt_tensor, sign, tadd, tscale, weight_part


class NotGrouplike(ValueError):
    pass


class ObjectMismatch(ValueError):
    pass


@dataclass(frozen=True)
class HolimObject:
    components: dict
    N: int
    evidence: str = "unverified"

    def component(self, n):
        return weight_part(self.components, n)


@dataclass(frozen=True)
class HolimMorphism:
    source: HolimObject
    target: HolimObject
    element: dict
    degree: int


class HolimCategory:
    def __init__(self, A, N):
        self.A = A
        self.N = N
        self.C = Cobar(A, N)

    # -- objects --------------------------------------------------------------
    def make_object(self, a, evidence="mc-checked"):
        a = self.C.truncate(a)
        if () in a:
            raise ValueError("objects have no weight-0 component")
        self.C.require_mc(a, "object")
        return HolimObject(a, self.N, evidence)

    def character_from_grouplike(self, g):
        g = {l: Fraction(c) for l, c in g.items() if c}
        if not self.A.is_grouplike(g):
            raise NotGrouplike(f"{g!r} is not grouplike (need d g = 0, e(g) = 1, D(g) = g|g)")
        return HolimObject(self.C.letter(g), self.N, "grouplike")

    def unit_object(self):
        """The distinguished object given by ``1_A``."""
        return self.character_from_grouplike(self.A.unit)

    # -- morphisms ------------------------------------------------------------
    def morphism(self, source, target, element, degree=None):
        element = self.C.truncate(element)
        deg = self.C.degree(element)
        if degree is None:
            degree = deg if deg is not None else 0
        elif deg is not None and deg != degree:
            raise ValueError(f"morphism components have total degree {deg}, expected {degree}")
        return HolimMorphism(source, target, element, degree)

    def identity(self, obj):
        return HolimMorphism(obj, obj, self.C.one(), 0)

    def hom_diff(self, f):
        el = self.C.twisted_diff(f.element, f.source.components, f.target.components)
        return HolimMorphism(f.source, f.target, el, f.degree + 1)

    def compose(self, g, f):
        """``g o f`` for ``f: a -> b``, ``g: b -> c``."""
        if f.target != g.source:
            raise ObjectMismatch("compose: target of f differs from source of g")
        el = tscale(self.C.mul(f.element, g.element), sign(f.degree * g.degree))
        return HolimMorphism(f.source, g.target, el, f.degree + g.degree)

    # -- cohomology in a window -------------------------------------------------
    def hom_basis(self, degree, window=None, n_max=None):
        """Words of ``Hom^degree`` in the window: weight ``n`` carries internal degree ``degree - n``."""
        n_max = self.N if n_max is None else n_max
        out = []
        for n in range(n_max + 1):
            for w in self.A.words(n, window):
                if self.A.word_degree(w) == degree - n:
                    out.append(w)
        return out

    def hom_cohomology(self, source, target, degree, window=None, n_max=None):
        return HomCohomology(self, source, target, degree, window, n_max)


class HomCohomology:
    """Windowed slice of ``Hom^(degree-1) -> Hom^degree -> Hom^(degree+1)``.

    Cycles are exact kernel vectors of the differential restricted to the
    windowed basis; boundaries are images of windowed elements one degree
    down.  ``closed`` records whether those images stay inside the window;
    when not, dimensions are window-relative and labeled so.
    """

    def __init__(self, cat, source, target, degree, window=None, n_max=None):
        self.cat = cat
        self.source, self.target = source, target
        self.degree = degree
        C = cat.C
        a, b = source.components, target.components
        self.basis = cat.hom_basis(degree, window, n_max)
        self.lower = cat.hom_basis(degree - 1, window, n_max)
        basis_set = set(self.basis)
        self._images = [C.twisted_diff({w: Fraction(1)}, a, b) for w in self.basis]
        self.boundaries = [C.twisted_diff({w: Fraction(1)}, a, b) for w in self.lower]
        self.closed = all(set(v) <= basis_set for v in self.boundaries)
        rows_keys = sorted({k for v in self._images for k in v}, key=repr)
        rows = [{w: v.get(k, 0) for w, v in zip(self.basis, self._images) if k in v} for k in rows_keys]
        self.matrix = linalg.SparseMatrix(rows, self.basis)
        self.cycles = linalg.kernel_basis(self.matrix)
        self.boundary_span = linalg.span_basis(self.boundaries)

    def d(self, x):
        return self.cat.C.twisted_diff(x, self.source.components, self.target.components)

    def is_cycle(self, x):
        return not self.d(x)

    def is_boundary(self, x):
        ok, coeffs = linalg.in_span(x, self.boundaries)
        return ok, coeffs

    @property
    def cycle_dim(self):
        return len(self.cycles)

    @property
    def boundary_dim(self):
        return len(self.boundary_span)

    @property
    def dim(self):
        return self.cycle_dim - self.boundary_dim

    def representatives(self):
        """Cycles whose classes form a basis of the windowed cohomology."""
        reps = []
        span = list(self.boundary_span)
        for z in self.cycles:
            ok, _ = linalg.in_span(z, span)
            if not ok:
                reps.append(z)
                span.append(z)
        return reps


def ext_example(window=(2, 2)):
    """The worked ``Ext^1`` computation for upper triangular 2x2 matrices.

    The complex printed in the worked example has differential
    ``f -> f|1 + xy^{-1}|f +- Delta(f)`` in weight 1, i.e. left twist
    ``xy^{-1}`` and right twist ``1``; with Hom(a, b) = a Cobar b that is
    ``Hom(xy^{-1}, 1)``.
    """
    from .hopf import UpperTriangularHopf

    A = UpperTriangularHopf()
    cat = HolimCategory(A, 2)
    g = cat.character_from_grouplike({(1, -1, 0): 1})
    one = cat.unit_object()
    H = cat.hom_cohomology(g, one, 1, window=window, n_max=1)
    one_minus_g = {((0, 0, 0),): Fraction(1), ((1, -1, 0),): Fraction(-1)}
    yinv_z = {((0, -1, 1),): Fraction(1)}
    return {
        "category": cat,
        "cohomology": H,
        "one_minus_g": one_minus_g,
        "yinv_z": yinv_z,
        "weight0_differential": H.boundaries,
    }
