"""A small seeded corpus of random ideals for property checks."""

import random

from .ideal import Ideal
from .poly import Poly, Ring

CORPUS_RING = Ring(("x", "y", "z"))


def random_poly(ring, rng, nterms=3, max_deg=2, coeff=5, constant=True):
    terms = {}
    while len(terms) < nterms:
        e = tuple(rng.randint(0, max_deg) for _ in range(ring.nvars))
        if sum(e) > max_deg or (not constant and sum(e) == 0):
            continue
        c = rng.randint(-coeff, coeff)
        if c:
            terms[e] = c
    return Poly(ring, terms)


def random_ideal(ring, rng, ngens=2, **kw):
    return Ideal([random_poly(ring, rng, **kw) for _ in range(ngens)], ring)


def corpus(seed=0, size=12, ring=CORPUS_RING):
    """Ideals with two or three generators of degree at most two in three variables."""
    rng = random.Random(seed)
    out = []
    for i in range(size):
        out.append(random_ideal(ring, rng, ngens=2 + i % 2, nterms=rng.randint(2, 3),
                                constant=(i % 3 == 0)))
    return out


def random_point(ring, rng, height=5):
    return [rng.randint(-height, height) for _ in range(ring.nvars)]
