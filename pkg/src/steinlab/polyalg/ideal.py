"""Ideals of QQ[x]: reduced Groebner bases, membership, dimension,
elimination, saturation and intersection."""

from itertools import combinations

from . import gbcache
from .groebner import buchberger, gb_elems, reduce_vector, term_key
from .poly import GREVLEX, MonomialOrder, Poly, Ring


def _to_vec(p):
    return {(0, e): c for e, c in p.terms.items()}


def _from_vec(v, ring):
    return Poly(ring, {e: c for (_, e), c in v.items()})


def groebner(polys, order=None, degree_bound=None):
    """Reduced Groebner basis of the ideal generated by ``polys``."""
    polys = list(polys)
    if not polys:
        return []
    ring = polys[0].ring
    order = order or ring.order
    vecs = [_to_vec(p) for p in polys if p]
    cached = gbcache.lookup(ring.names, order, polys)
    if cached is not None:
        return [ring.parse(s) for s in cached]
    gb = buchberger(vecs, term_key(order), ideal=True, degree_bound=degree_bound)
    out = [_from_vec(v, ring) for v in gb]
    gbcache.store(ring.names, order, polys, [str(p) for p in out])
    return out


class Ideal:
    """An ideal given by generators; reduced bases are cached per order."""

    def __init__(self, gens, ring=None):
        gens = list(gens)
        if ring is None:
            if not gens:
                raise ValueError("need a ring for the zero ideal")
            ring = gens[0].ring
        self.ring = ring
        self.gens = [g.to_ring(ring) if g.ring.names != ring.names else g for g in gens]
        self._gb = {}

    def __repr__(self):
        return f"Ideal([{', '.join(str(g) for g in self.gens)}])"

    def groebner(self, order=None, degree_bound=None):
        order = order or self.ring.order
        if order not in self._gb:
            self._gb[order] = groebner(self.gens, order, degree_bound) if any(self.gens) else []
        return list(self._gb[order])

    def normal_form(self, f, order=None):
        order = order or self.ring.order
        tkey = term_key(order)
        basis = gb_elems([_to_vec(g) for g in self.groebner(order)], tkey)
        return _from_vec(reduce_vector(_to_vec(f.to_ring(self.ring)), basis, tkey), self.ring)

    def contains(self, f):
        if isinstance(f, Ideal):
            return all(self.contains(g) for g in f.gens)
        return self.normal_form(f).is_zero()

    __contains__ = contains

    def is_unit(self):
        gb = self.groebner()
        return len(gb) == 1 and gb[0].is_constant()

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.contains(other) and other.contains(self)

    def same_basis(self, other, order=None):
        """Syntactic equality of reduced Groebner bases."""
        a = [str(g) for g in self.groebner(order)]
        b = [str(g.to_ring(self.ring)) for g in other.groebner(order)]
        return a == b

    def __add__(self, other):
        extra = other.gens if isinstance(other, Ideal) else list(other)
        return Ideal(self.gens + [g.to_ring(self.ring) for g in extra], self.ring)

    def dim(self):
        """Krull dimension of ``R/I``, -1 for the unit ideal."""
        gb = self.groebner(GREVLEX)
        if not gb:
            return self.ring.nvars
        if any(g.is_constant() for g in gb):
            return -1
        supports = [frozenset(i for i, a in enumerate(g.lead_exp(GREVLEX)) if a) for g in gb]
        n = self.ring.nvars
        for size in range(n, -1, -1):
            for subset in combinations(range(n), size):
                s = set(subset)
                if all(not sup <= s for sup in supports):
                    return size
        return 0

    def codim(self):
        return self.ring.nvars - self.dim()

    def eliminate(self, names):
        """``I`` intersected with the subring in the variables not in ``names``."""
        names = list(names)
        rest = [n for n in self.ring.names if n not in names]
        big = Ring(names + rest, MonomialOrder("block", split=len(names)))
        gb = groebner([g.to_ring(big) for g in self.gens], big.order)
        keep = [g for g in gb if not any(sum(e[:len(names)]) for e in g.terms)]
        return Ideal([g.to_ring(self.ring) for g in keep] or [self.ring.zero()], self.ring)

    def saturate(self, f):
        """``I : f^oo`` computed by eliminating t from ``I + (1 - t f)``."""
        if f.is_zero():
            raise ValueError("cannot saturate by zero")
        t = _fresh_name(self.ring, "t")
        big = Ring((t,) + self.ring.names, self.ring.order)
        tv = big.var(t)
        gens = [g.to_ring(big) for g in self.gens] + [1 - tv * f.to_ring(big)]
        return Ideal(gens, big).eliminate([t])._restrict(self.ring)

    def quotient(self, f):
        """``I : f`` via the intersection with ``(f)``."""
        inter = self.intersect(Ideal([f], self.ring))
        gens = []
        for g in inter.groebner():
            q = _exact_divide(g, f)
            gens.append(q)
        return Ideal(gens or [self.ring.zero()], self.ring)

    def intersect(self, other):
        t = _fresh_name(self.ring, "t")
        big = Ring((t,) + self.ring.names, self.ring.order)
        tv = big.var(t)
        gens = [tv * g.to_ring(big) for g in self.gens]
        gens += [(1 - tv) * g.to_ring(big) for g in other.gens]
        return Ideal(gens, big).eliminate([t])._restrict(self.ring)

    def _restrict(self, ring):
        return Ideal([g.to_ring(ring) for g in self.gens], ring)

    def vanishes_at(self, point):
        return all(g.evaluate(point) == 0 for g in self.gens)


def _fresh_name(ring, base):
    name = base
    k = 0
    while name in ring.names:
        k += 1
        name = f"{base}{k}"
    return name


def _exact_divide(g, f):
    """Polynomial division of ``g`` by ``f`` that must leave no remainder."""
    order = g.ring.order
    tkey = term_key(order)
    rem = _to_vec(g)
    fe = gb_elems([_to_vec(f)], tkey)[0]
    quot = {}
    while rem:
        t = max(rem, key=tkey)
        if not all(x >= y for x, y in zip(t[1], fe.exp)):
            raise ArithmeticError(f"{f} does not divide {g}")
        c = rem[t] / fe.coeff
        shift = tuple(x - y for x, y in zip(t[1], fe.exp))
        quot[shift] = c
        for (p, e), c2 in fe.terms:
            k = (p, tuple(a + b for a, b in zip(e, shift)))
            v = rem.get(k, 0) - c * c2
            if v:
                rem[k] = v
            else:
                rem.pop(k, None)
    return Poly(g.ring, quot)
