"""Seeded random elements over windowed bases.

All randomness flows through an explicit ``random.Random``; the same seed
always yields the same elements.  Words of a prescribed weight and internal
degree are sampled uniformly by counting (dynamic programming over degrees).
"""

import random
from fractions import Fraction
from functools import lru_cache

from .graded import accumulate, tadd


class WordSampler:
    def __init__(self, A, window=None):
        self.A = A
        self.window = window
        self.by_degree = {}
        for l in A.basis(window):
            self.by_degree.setdefault(A.deg(l), []).append(l)
        self.degrees = sorted(self.by_degree)

        @lru_cache(maxsize=None)
        def count(n, s):
            if n == 0:
                return 1 if s == 0 else 0
            return sum(len(self.by_degree[d]) * count(n - 1, s - d) for d in self.degrees)

        self.count = count

    def word(self, rng, n, s):
        """Uniform random word of weight ``n`` and internal degree ``s`` (None if none)."""
        if self.count(n, s) == 0:
            return None
        w = []
        for k in range(n, 0, -1):
            r = rng.randrange(self.count(k, s))
            for d in self.degrees:
                block = len(self.by_degree[d]) * self.count(k - 1, s - d)
                if r < block:
                    w.append(rng.choice(self.by_degree[d]))
                    s -= d
                    break
                r -= block
        return tuple(w)


def rcoeff(rng, allow_fraction=True):
    c = 0
    while c == 0:
        c = rng.randint(-3, 3)
    if allow_fraction and rng.random() < 0.3:
        return Fraction(c, rng.randint(2, 4))
    return Fraction(c)


def random_element(rng, sampler, total_degree, n_max, terms=3, min_weight=0, weights=None):
    """Random homogeneous Cobar element of the given total degree.

    Weight ``n`` words carry internal degree ``total_degree - n``.  May be
    zero when no word has the right degree.
    """
    out = {}
    ws = weights if weights is not None else range(min_weight, n_max + 1)
    ws = [n for n in ws if sampler.count(n, total_degree - n)]
    if not ws:
        return out
    for _ in range(terms):
        n = rng.choice(ws)
        w = sampler.word(rng, n, total_degree - n)
        accumulate(out, w, rcoeff(rng))
    return out


def random_tensor(rng, sampler, n, internal_degree, terms=3):
    out = {}
    if not sampler.count(n, internal_degree):
        return out
    for _ in range(terms):
        accumulate(out, sampler.word(rng, n, internal_degree), rcoeff(rng))
    return out


def grouplikes(A, window=None):
    """Grouplike elements known for the built-ins (identity always included)."""
    from .hopf import FiniteGroupFunctionHopf, TensorHopf, UpperTriangularHopf

    if isinstance(A, UpperTriangularHopf):
        w, _ = window or A.default_window
        return [{(a, b, 0): Fraction(1)} for a in range(-w, w + 1) for b in range(-w, w + 1)]
    if isinstance(A, TensorHopf):
        out = []
        for g in grouplikes(A.A, None):
            for h in grouplikes(A.B, None):
                out.append({(a, b): ca * cb for a, ca in g.items() for b, cb in h.items()})
        return out
    if isinstance(A, FiniteGroupFunctionHopf) and len(A.elements) == 2:
        e0, e1 = A.labels
        return [{e0: Fraction(1), e1: Fraction(1)}, {e0: Fraction(1), e1: Fraction(-1)}]
    return [{l: Fraction(c) for l, c in A.unit.items()}]


def random_invertible(rng, C, sampler, terms=3):
    """Degree-0 element with nonzero scalar part."""
    f = random_element(rng, sampler, 0, C.N, terms=terms, min_weight=1)
    return tadd(f, {(): rcoeff(rng)})


def random_mc(rng, C, sampler, window=None):
    """A Maurer-Cartan element: a random gauge transform of a grouplike character."""
    gs = grouplikes(C.A, window)
    g = C.letter(rng.choice(gs))
    f = random_invertible(rng, C, sampler)
    return C.gauge_act(f, g)


def make_rng(seed):
    return random.Random(seed)
