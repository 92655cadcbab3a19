"""Buchberger's algorithm for submodules of free modules over QQ[x].

Everything here works on *vectors*: dicts mapping ``(position, exponent)``
to a nonzero rational.  An ideal is a submodule of the rank-one free module,
so all its terms sit at position 0.

Pair handling follows the Gebauer-Moeller update (chain criterion always,
coprime-lead criterion only in the ideal case, where it is valid) and pairs
are selected by the normal strategy, smallest lcm first, ties by index.
"""

from functools import lru_cache

from .errors import DegreeBound


def term_key(order, scheme="pot"):
    """Sort key on ``(pos, exp)`` terms; bigger key means bigger term.

    ``pot`` (position over term) makes lower positions dominate, ``top``
    compares monomials first and uses the position as a tie-break.
    """
    mkey = order.key
    if scheme == "pot":
        def key(t):
            return (-t[0], mkey(t[1]))
    elif scheme == "top":
        def key(t):
            return (mkey(t[1]), -t[0])
    else:
        raise ValueError(f"unknown module order scheme {scheme!r}")
    return lru_cache(maxsize=None)(key)


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


class _Elem:
    __slots__ = ("terms", "pos", "exp", "coeff")

    def __init__(self, vec, tkey):
        lead = max(vec, key=tkey)
        self.terms = list(vec.items())
        self.pos, self.exp = lead
        self.coeff = vec[lead]


def lead_term(vec, tkey):
    return max(vec, key=tkey)


def reduce_vector(vec, basis, tkey, full=True):
    """Remainder of ``vec`` modulo ``basis`` (a list of :class:`_Elem`).

    With ``full=False`` only the leading term is reduced repeatedly (head
    reduction) and the first non-reducible leading term stops the loop.
    """
    f = dict(vec)
    rem = {}
    while f:
        t = max(f, key=tkey)
        c = f[t]
        pos, e = t
        for b in basis:
            if b.pos == pos and _divides(b.exp, e):
                q = c / b.coeff
                shift = tuple(x - y for x, y in zip(e, b.exp))
                for (p2, e2), c2 in b.terms:
                    k = (p2, tuple(x + y for x, y in zip(e2, shift)))
                    v = f.get(k, 0) - q * c2
                    if v:
                        f[k] = v
                    else:
                        f.pop(k, None)
                break
        else:
            if not full:
                f.update(rem)
                return f
            rem[t] = c
            del f[t]
    return rem


def _spoly(a, b, lcm):
    sa = tuple(x - y for x, y in zip(lcm, a.exp))
    sb = tuple(x - y for x, y in zip(lcm, b.exp))
    out = {}
    for (p, e), c in a.terms:
        k = (p, tuple(x + y for x, y in zip(e, sa)))
        out[k] = c / a.coeff
    for (p, e), c in b.terms:
        k = (p, tuple(x + y for x, y in zip(e, sb)))
        v = out.get(k, 0) - c / b.coeff
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def buchberger(vectors, tkey, ideal=True, degree_bound=None, split=None):
    """Return a reduced Groebner basis (list of monic vectors) of the span.

    ``ideal`` enables the coprime-lead criterion, which is only valid for
    rank-one modules.  ``degree_bound`` caps the total degree of S-pair
    lcms; exceeding it raises :class:`DegreeBound`.

    With ``split = b`` (position over term) any remainder whose lead sits
    at a position ``>= b`` is set aside instead of joining the basis, and
    ``(basis, set_aside)`` is returned.  The set-aside vectors are the
    lifted S-pair relations of the upper block; they generate the part of
    the span that lives below ``b`` but are not a Groebner basis of it.
    """
    if split is not None and ideal:
        raise ValueError("split needs ideal=False")
    elems = []
    aside = []
    active = []
    pairs = []

    def update(k):
        h = elems[k]
        cand = [i for i in active if elems[i].pos == h.pos]
        lcms = {i: _lcm(elems[i].exp, h.exp) for i in cand}
        keep = []
        rest = list(cand)
        while rest:
            i = rest.pop()
            li = lcms[i]
            if ideal and _coprime(elems[i].exp, h.exp):
                keep.append(i)
                continue
            if any(_divides(lcms[j], li) for j in rest) or any(_divides(lcms[j], li) for j in keep):
                continue
            keep.append(i)
        new_pairs = [(lcms[i], i, k) for i in keep
                     if not (ideal and _coprime(elems[i].exp, h.exp))]
        survivors = []
        for lcm, i, j in pairs:
            if (elems[i].pos == h.pos and _divides(h.exp, lcm)
                    and _lcm(elems[i].exp, h.exp) != lcm
                    and _lcm(elems[j].exp, h.exp) != lcm):
                continue
            survivors.append((lcm, i, j))
        pairs[:] = survivors + new_pairs
        still = [i for i in active if not (elems[i].pos == h.pos and _divides(h.exp, elems[i].exp))]
        still.append(k)
        active[:] = still

    def add(vec):
        if split is not None and lead_term(vec, tkey)[0] >= split:
            aside.append(vec)
            return
        elems.append(_Elem(vec, tkey))
        update(len(elems) - 1)

    basis_view = lambda: [elems[i] for i in active]

    for v in vectors:
        if not v:
            continue
        r = reduce_vector(v, basis_view(), tkey)
        if r:
            add(r)

    while pairs:
        best = min(range(len(pairs)),
                   key=lambda n: (tkey((elems[pairs[n][1]].pos, pairs[n][0])), pairs[n][1], pairs[n][2]))
        lcm, i, j = pairs.pop(best)
        if degree_bound is not None and sum(lcm) > degree_bound:
            raise DegreeBound(f"S-pair of degree {sum(lcm)} exceeds bound {degree_bound}")
        s = _spoly(elems[i], elems[j], lcm)
        r = reduce_vector(s, basis_view(), tkey)
        if r:
            add(r)

    basis = interreduce([dict(elems[i].terms) for i in active], tkey)
    return basis if split is None else (basis, aside)


def interreduce(vectors, tkey):
    """Minimal, monic, tail-reduced form of a Groebner basis, sorted by lead."""
    elems = [_Elem(v, tkey) for v in vectors if v]
    minimal = []
    for n, a in enumerate(elems):
        redundant = False
        for m, b in enumerate(elems):
            if m == n or b.pos != a.pos or not _divides(b.exp, a.exp):
                continue
            if b.exp != a.exp or m < n:
                redundant = True
                break
        if not redundant:
            minimal.append(a)
    out = []
    for n, a in enumerate(minimal):
        others = minimal[:n] + minimal[n + 1:]
        vec = reduce_vector(dict(a.terms), others, tkey)
        lc = vec[(a.pos, a.exp)]
        out.append({t: c / lc for t, c in vec.items()})
    out.sort(key=lambda v: tkey(max(v, key=tkey)))
    return out


def divide(vec, basis, tkey):
    """Division with quotients: ``vec = sum q[i] * basis[i] + remainder``.

    ``basis`` is a list of :class:`_Elem`; quotients are dicts exponent ->
    coefficient.  Only leading terms are divided.
    """
    f = dict(vec)
    quot = [dict() for _ in basis]
    rem = {}
    while f:
        t = max(f, key=tkey)
        c = f[t]
        pos, e = t
        for n, b in enumerate(basis):
            if b.pos == pos and _divides(b.exp, e):
                q = c / b.coeff
                shift = tuple(x - y for x, y in zip(e, b.exp))
                quot[n][shift] = quot[n].get(shift, 0) + q
                for (p2, e2), c2 in b.terms:
                    k = (p2, tuple(x + y for x, y in zip(e2, shift)))
                    v = f.get(k, 0) - q * c2
                    if v:
                        f[k] = v
                    else:
                        f.pop(k, None)
                break
        else:
            rem[t] = c
            del f[t]
    return quot, rem


def gb_elems(vectors, tkey):
    return [_Elem(v, tkey) for v in vectors]
