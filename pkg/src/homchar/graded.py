"""Koszul sign engine and linear combinations of tensor words.

A *tensor* is a dict mapping a word (tuple of basis labels) to a nonzero
Fraction.  Words of different lengths may coexist in one dict; the length is
the tensor weight and the empty word is the unit of ``k = A^{(x)0}``.

Grading is cohomological.  Signs are always produced here, never inline.
"""

from fractions import Fraction
from itertools import combinations


def sign(exponent):
    return -1 if exponent & 1 else 1


def koszul_sign(degrees, perm):
    """Sign of rearranging graded symbols.

    ``degrees[i]`` is the degree of the symbol originally at position ``i``;
    the rearranged sequence lists ``perm[0], perm[1], ...``.  Every pair whose
    relative order flips contributes ``(-1)^(p*q)``.
    """
    e = 0
    for i, j in combinations(range(len(perm)), 2):
        if perm[i] > perm[j]:
            e += degrees[perm[i]] * degrees[perm[j]]
    return sign(e)


def transposition_sign(degrees, perm):
    """Same sign, computed by bubble-sorting adjacent transpositions.

    Used only as an independent check of :func:`koszul_sign`.
    """
    cur = list(perm)
    s = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(cur) - 1):
            if cur[i] > cur[i + 1]:
                s *= sign(degrees[cur[i]] * degrees[cur[i + 1]])
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                changed = True
    return s


# -- tensors ---------------------------------------------------------------

def tadd(x, y, scale=1):
    out = dict(x)
    for w, c in y.items():
        s = out.get(w, 0) + scale * c
        if s:
            out[w] = s
        else:
            out.pop(w, None)
    return out


def tsum(terms):
    out = {}
    for t in terms:
        for w, c in t.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                del out[w]
    return out


def tscale(x, c):
    c = Fraction(c)
    if not c:
        return {}
    return {w: c * v for w, v in x.items()}


def accumulate(out, word, coeff):
    """In-place ``out[word] += coeff``, keeping the dict zero-free."""
    if not coeff:
        return
    s = out.get(word, 0) + coeff
    if s:
        out[word] = s
    else:
        del out[word]


def weight_part(x, n):
    return {w: c for w, c in x.items() if len(w) == n}


def truncate(x, n_max):
    return {w: c for w, c in x.items() if len(w) <= n_max}


def weights(x):
    return sorted({len(w) for w in x})


def scalar(c=1):
    """The empty-word tensor ``c`` in weight 0."""
    c = Fraction(c)
    return {(): c} if c else {}


def letters(elem):
    """Lift an algebra element ``{label: c}`` to weight-1 words."""
    return {(l,): c for l, c in elem.items()}


def tensor_words(*parts):
    """Concatenate tensors factor by factor (no signs: plain juxtaposition)."""
    out = {(): Fraction(1)}
    for p in parts:
        nxt = {}
        for w1, c1 in out.items():
            for w2, c2 in p.items():
                accumulate(nxt, w1 + w2, c1 * c2)
        out = nxt
    return out


def fmt_coeff(c):
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def fmt_label(label):
    if isinstance(label, tuple):
        return "(" + ",".join(fmt_label(x) for x in label) + ")"
    return str(label)


def fmt_tensor(x, key=None):
    """Deterministic text rendering: ``2*[a|b] - 1/2*[]``."""
    if not x:
        return "0"
    items = sorted(x.items(), key=lambda kv: (len(kv[0]), key(kv[0]) if key else repr(kv[0])))
    parts = []
    for w, c in items:
        body = "[" + "|".join(fmt_label(l) for l in w) + "]"
        parts.append(f"{fmt_coeff(c)}*{body}")
    return " + ".join(parts).replace("+ -", "- ")
