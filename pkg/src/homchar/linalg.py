"""Exact sparse linear algebra over the rationals.

Vectors are plain dicts ``key -> Fraction`` with no stored zeros.  Keys are
opaque; a :class:`SparseMatrix` carries the ordered column index set, which
fixes pivot order and makes every result deterministic.
"""

from fractions import Fraction


def vec(entries):
    """Normalize a mapping into a sparse vector (drops zeros)."""
    out = {}
    for k, c in entries.items():
        c = Fraction(c)
        if c:
            out[k] = c
    return out


def vadd(u, v, scale=1):
    """Return ``u + scale*v`` as a new sparse vector."""
    out = dict(u)
    for k, c in v.items():
        s = out.get(k, 0) + scale * c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def vscale(v, c):
    c = Fraction(c)
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


class SparseMatrix:
    """Rows are sparse vectors over ``cols`` (an ordered list of keys)."""

    def __init__(self, rows, cols):
        self.cols = list(cols)
        colset = set(self.cols)
        self.rows = []
        for r in rows:
            r = vec(r)
            bad = set(r) - colset
            if bad:
                raise ValueError(f"row has keys outside column set: {sorted(map(repr, bad))[:3]}")
            self.rows.append(r)

    @classmethod
    def from_dense(cls, dense):
        ncols = len(dense[0]) if dense else 0
        rows = [{j: Fraction(x) for j, x in enumerate(r) if x} for r in dense]
        return cls(rows, range(ncols))

    def to_dense(self):
        return [[r.get(c, Fraction(0)) for c in self.cols] for r in self.rows]

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def apply(self, v):
        """Matrix-vector product ``m @ v`` as a list of Fractions (one per row)."""
        return [sum((c * v.get(k, 0) for k, c in r.items()), Fraction(0)) for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, SparseMatrix) and self.cols == other.cols and self.rows == other.rows

    def __repr__(self):
        return f"SparseMatrix({self.to_dense()!r})"


def _eliminate(rows, cols):
    """Gauss-Jordan on sparse rows; returns (reduced nonzero rows, pivot cols)."""
    order = {c: i for i, c in enumerate(cols)}
    work = [dict(r) for r in rows if r]
    reduced = []
    pivots = []
    for col in cols:
        idx = None
        for i, r in enumerate(work):
            if col in r:
                idx = i
                break
        if idx is None:
            continue
        prow = work.pop(idx)
        inv = 1 / prow[col]
        prow = {k: c * inv for k, c in prow.items()}
        for i, r in enumerate(work):
            if col in r:
                work[i] = vadd(r, prow, -r[col])
        for i, r in enumerate(reduced):
            if col in r:
                reduced[i] = vadd(r, prow, -r[col])
        reduced.append(prow)
        pivots.append(col)
        work = [r for r in work if r]
    perm = sorted(range(len(pivots)), key=lambda i: order[pivots[i]])
    return [reduced[i] for i in perm], [pivots[i] for i in perm]


def rref(m):
    """Reduced row-echelon form of ``m`` and its pivot columns.

    Zero rows are kept at the bottom so the shape is unchanged.
    """
    red, piv = _eliminate(m.rows, m.cols)
    rows = red + [{} for _ in range(len(m.rows) - len(red))]
    return SparseMatrix(rows, m.cols), piv


def rank(m):
    return len(_eliminate(m.rows, m.cols)[1])


def kernel_basis(m):
    """Basis of ``{v : m v = 0}`` as sparse vectors keyed by ``m.cols``."""
    red, piv = _eliminate(m.rows, m.cols)
    pivset = set(piv)
    basis = []
    for free in m.cols:
        if free in pivset:
            continue
        v = {free: Fraction(1)}
        for r, p in zip(red, piv):
            c = r.get(free)
            if c:
                v[p] = -c
        basis.append(v)
    return basis


def in_span(v, gens):
    """Decide ``v in span(gens)``.

    Returns ``(True, coeffs)`` with ``v == sum(c_i * gens[i])`` exactly, or
    ``(False, None)``.
    """
    v = vec(v)
    if not v:
        return True, [Fraction(0)] * len(gens)
    # Column-augmented system: unknowns are the generator coefficients.
    keys = sorted({k for g in gens for k in g} | set(v), key=repr)
    tags = [("g", i) for i in range(len(gens))] + [("rhs",)]
    rows = []
    for k in keys:
        row = {("g", i): g[k] for i, g in enumerate(gens) if k in g}
        if k in v:
            row[("rhs",)] = v[k]
        rows.append(row)
    red, piv = _eliminate(rows, tags)
    if ("rhs",) in piv:
        return False, None
    coeffs = [Fraction(0)] * len(gens)
    for r, p in zip(red, piv):
        coeffs[p[1]] = r.get(("rhs",), Fraction(0))
    return True, coeffs


def span_basis(vectors, cols=None):
    """Row-reduced basis of the span of ``vectors``."""
    if cols is None:
        cols = sorted({k for v in vectors for k in v}, key=repr)
    return _eliminate([vec(v) for v in vectors], cols)[0]


class Quotient:
    """Coordinates on ``span(cols) / span(relations)``.

    The complement basis is the set of non-pivot columns of the reduced
    relations; :meth:`reduce` projects along the relation span.
    """

    def __init__(self, relations, cols):
        self.cols = list(cols)
        self.red, self.piv = _eliminate([vec(r) for r in relations], self.cols)
        pivset = set(self.piv)
        self.basis = [c for c in self.cols if c not in pivset]

    def reduce(self, v):
        v = vec(v)
        for r, p in zip(self.red, self.piv):
            c = v.get(p)
            if c:
                v = vadd(v, r, -c)
        return v
