"""Matrices over QQ[x], syzygies, free resolutions, Ext and fibers.

A :class:`ModMatrix` with ``rows x cols`` entries is the map
``R^cols -> R^rows`` acting on column vectors.
"""

import json
from functools import lru_cache

from .errors import LengthExceeded, NotAComplex, NotCM, PointNotOnVariety
from .groebner import (_Elem, _divides, _lcm, _spoly, buchberger, divide, gb_elems,
                       reduce_vector, term_key)
from .ideal import Ideal
from .linalg import rank
from .poly import GREVLEX, Poly, parse_poly


class ModMatrix:
    def __init__(self, ring, entries, rows=None, cols=None):
        self.ring = ring
        self.entries = [[e if isinstance(e, Poly) else ring(e) for e in row] for row in entries]
        self.rows = len(self.entries) if rows is None else rows
        self.cols = (len(self.entries[0]) if self.entries else 0) if cols is None else cols
        if not self.entries:
            self.entries = [[] for _ in range(self.rows)]
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged or mis-sized matrix")

    @classmethod
    def zero(cls, ring, rows, cols):
        return cls(ring, [[ring.zero() for _ in range(cols)] for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, ring, columns, rows):
        entries = [[col[i] for col in columns] for i in range(rows)]
        return cls(ring, entries, rows, len(columns))

    @classmethod
    def parse(cls, ring, rows):
        return cls(ring, [[parse_poly(s, ring) if isinstance(s, str) else ring(s) for s in row] for row in rows])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return ModMatrix(self.ring, [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
                         self.cols, self.rows)

    T = property(transpose)

    def __matmul__(self, other):
        if self.cols != other.rows:
            raise ValueError(f"cannot compose {self.shape} with {other.shape}")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.ring.zero()
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if a:
                        b = other.entries[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return ModMatrix(self.ring, out, self.rows, other.cols)

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def evaluate(self, point):
        return [[e.evaluate(point) for e in row] for row in self.entries]

    def rank_at(self, point):
        if self.rows == 0 or self.cols == 0:
            return 0
        return rank(self.evaluate(point))

    def __eq__(self, other):
        return isinstance(other, ModMatrix) and self.shape == other.shape and all(
            a == b for r1, r2 in zip(self.entries, other.entries) for a, b in zip(r1, r2))

    def to_json(self):
        return json.dumps([[str(e) for e in row] for row in self.entries])

    @classmethod
    def from_json(cls, ring, text):
        rows = json.loads(text)
        return cls.parse(ring, rows) if rows else cls(ring, [], 0, 0)

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in row) for row in self.entries)
        return f"ModMatrix({self.rows}x{self.cols}: [{body}])"


def _col_to_vec(col, offset=0):
    vec = {}
    for i, p in enumerate(col):
        for e, c in p.terms.items():
            vec[(i + offset, e)] = c
    return vec


def _vec_to_col(vec, ring, size, offset=0):
    parts = [dict() for _ in range(size)]
    for (i, e), c in vec.items():
        parts[i - offset][e] = c
    return [Poly(ring, t) for t in parts]


def module_gb(columns, ring, order=None, scheme="pot"):
    """Reduced Groebner basis (as columns) of the submodule spanned by ``columns``."""
    order = order or ring.order
    tkey = term_key(order, scheme)
    vecs = [_col_to_vec(c) for c in columns]
    size = len(columns[0]) if columns else 0
    gb = buchberger(vecs, tkey, ideal=(size == 1))
    return [_vec_to_col(v, ring, size) for v in gb]


def in_column_module(vector, columns, ring, order=None):
    """Membership of a column vector in the submodule spanned by ``columns``."""
    order = order or ring.order
    if not columns:
        return all(p.is_zero() for p in vector)
    tkey = term_key(order, "pot")
    gb = buchberger([_col_to_vec(c) for c in columns], tkey, ideal=(len(vector) == 1))
    return not reduce_vector(_col_to_vec(vector), gb_elems(gb, tkey), tkey)


def syzygies(M, order=None, degree_bound=None, method="lift"):
    """Generators of ``ker(M)`` as the columns of a ``cols x k`` matrix.

    Each column ``m_j`` is extended to ``(m_j, e_j)`` in ``R^(rows+cols)``.
    Under position-over-term with the ``M`` block on top, a remainder whose
    lead falls in the lower block has no upper part and is a syzygy.
    ``method="lift"`` keeps those remainders as they appear (the lifted
    S-pair relations, which generate the kernel); ``method="gb"`` runs
    Buchberger on the whole augmented module and returns a Groebner basis
    of the kernel, which is slower but canonical.
    """
    ring = M.ring
    order = order or ring.order
    b, a = M.shape
    vecs = []
    for j in range(a):
        v = _col_to_vec(M.column(j))
        e = (0,) * ring.nvars
        v[(b + j, e)] = 1
        vecs.append(v)
    tkey = term_key(order, "pot")
    if method == "lift":
        _, found = buchberger(vecs, tkey, ideal=False, degree_bound=degree_bound, split=b)
    elif method == "gb":
        found = [v for v in buchberger(vecs, tkey, ideal=False, degree_bound=degree_bound)
                 if min(p for p, _ in v) >= b]
    else:
        raise ValueError(f"unknown syzygy method {method!r}")
    cols = [_vec_to_col(v, ring, a, offset=b) for v in found]
    if not cols:
        return ModMatrix(ring, [[] for _ in range(a)], a, 0)
    return ModMatrix.from_columns(ring, cols, a)


def is_exact_at(B, C):
    """Decide ``ker(B) == im(C)`` for a complex ``. -C-> . -B-> .``."""
    if not (B @ C).is_zero():
        raise NotAComplex("B*C is not zero")
    K = syzygies(B)
    image = C.columns()
    return all(in_column_module(col, image, B.ring) for col in K.columns())


def _strip_units(prev, D):
    """Cancel constant pivots of ``D`` against ``prev`` (with ``prev @ D == 0``).

    Returns the smaller pair.  Each cancellation removes one row of ``D``
    (and the matching column of ``prev``) and one column of ``D``.
    """
    ring = D.ring
    P = [list(r) for r in prev.entries]
    E = [list(r) for r in D.entries]
    while True:
        E = [row for row in E]
        nrows = len(E)
        ncols = len(E[0]) if E else 0
        # drop zero columns: they are redundant generators
        zero_cols = [j for j in range(ncols) if all(E[i][j].is_zero() for i in range(nrows))]
        if zero_cols:
            E = [[row[j] for j in range(ncols) if j not in zero_cols] for row in E]
            ncols -= len(zero_cols)
        hit = None
        for j in range(ncols):
            for i in range(nrows):
                e = E[i][j]
                if e and e.is_constant():
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            break
        r, c = hit
        a = E[r][c].constant_term()
        # clear row r outside column c with column operations on D
        for j in range(ncols):
            if j != c and E[r][j]:
                f = E[r][j] / a
                for i in range(nrows):
                    if E[i][c]:
                        E[i][j] = E[i][j] - f * E[i][c]
        # clear column c outside row r; the basis change of the middle module
        # adds multiples of the other columns of prev to column r
        for k in range(nrows):
            if k != r and E[k][c]:
                beta = E[k][c] / a
                for j in range(ncols):
                    if E[r][j]:
                        E[k][j] = E[k][j] - beta * E[r][j]
                for row in P:
                    if row[k]:
                        row[r] = row[r] + beta * row[k]
        E = [[E[i][j] for j in range(ncols) if j != c] for i in range(nrows) if i != r]
        P = [[row[j] for j in range(len(row)) if j != r] for row in P]
    rows_p = prev.rows
    new_prev = ModMatrix(ring, P, rows_p, len(P[0]) if P else len(E))
    new_D = ModMatrix(ring, E, len(E), len(E[0]) if E else 0)
    return new_prev, new_D


class Resolution:
    """A complex ``F_c -> ... -> F_1 -> F_0 = R`` given by its differentials."""

    def __init__(self, maps):
        self.maps = list(maps)
        for i in range(len(self.maps) - 1):
            if self.maps[i].cols != self.maps[i + 1].rows:
                raise ValueError("differentials are not composable")

    def __len__(self):
        return len(self.maps)

    def __getitem__(self, i):
        return self.maps[i]

    @property
    def ring(self):
        return self.maps[0].ring

    def betti(self):
        if not self.maps:
            return (1,)
        return (self.maps[0].rows,) + tuple(d.cols for d in self.maps)

    def local_betti(self, point):
        """Minimal Betti numbers at ``point``: dims of homology of ``F (x) k(point)``."""
        ranks = [d.rank_at(point) for d in self.maps]
        sizes = self.betti()
        out = []
        for i, n in enumerate(sizes):
            into = ranks[i] if i < len(ranks) else 0
            outof = ranks[i - 1] if i >= 1 else 0
            out.append(n - into - outof)
        return tuple(out)

    def is_complex(self):
        return all((self.maps[i] @ self.maps[i + 1]).is_zero() for i in range(len(self.maps) - 1))

    def is_exact(self):
        """Exact at every interior position and injective at the left end."""
        for i in range(len(self.maps) - 1):
            if not is_exact_at(self.maps[i], self.maps[i + 1]):
                return False
        return syzygies(self.maps[-1]).cols == 0 if self.maps else True

    def augmentation_ideal(self):
        return Ideal(self.maps[0].entries[0], self.ring)


def _schreyer_key(prev_key, leads):
    """Order on ``F_k`` induced by the leads of its images in ``F_(k-1)``."""
    def key(t):
        i, m = t
        p, e = leads[i]
        return (prev_key((p, tuple(x + y for x, y in zip(e, m)))), -i)
    return lru_cache(maxsize=None)(key)


def _schreyer_maps(gens, ring, max_len):
    """Schreyer's resolution of ``R/(gens)``; ``gens`` must be a Groebner basis.

    At each step the lifted S-pair relations of the current generators
    form a Groebner basis of their kernel for the induced order, so the
    next step only needs divisions.  Keeping the leads of each level in
    descending lex order within a position bounds the length by the
    number of variables.
    """
    key = term_key(ring.order, "pot")
    vecs = [_col_to_vec([g]) for g in gens]
    size = 1
    maps = []
    while vecs:
        elems = [_Elem(v, key) for v in vecs]
        order = sorted(range(len(elems)),
                       key=lambda i: (elems[i].pos, tuple(-x for x in elems[i].exp)))
        # drop generators whose lead is a multiple of another lead: the rest
        # is still a Groebner basis of the same module
        kept = [i for i in order if not any(
            j != i and elems[j].pos == elems[i].pos and _divides(elems[j].exp, elems[i].exp)
            and (elems[j].exp != elems[i].exp or j < i) for j in range(len(elems)))]
        elems = [elems[i] for i in kept]
        vecs = [vecs[i] for i in kept]
        if len(maps) >= max_len:
            raise LengthExceeded(f"resolution longer than {max_len}")
        maps.append(ModMatrix.from_columns(ring, [_vec_to_col(v, ring, size) for v in vecs], size))
        size = len(vecs)
        prev_key = key
        key = _schreyer_key(key, [(e.pos, e.exp) for e in elems])
        nxt = []
        for i in range(len(elems)):
            for j in range(i + 1, len(elems)):
                gi, gj = elems[i], elems[j]
                if gi.pos != gj.pos:
                    continue
                lcm = _lcm(gi.exp, gj.exp)
                quot, rem = divide(_spoly(gi, gj, lcm), elems, prev_key)
                if rem:
                    raise AssertionError("Schreyer step: generators are not a Groebner basis")
                syz = {}
                mi = tuple(x - y for x, y in zip(lcm, gi.exp))
                mj = tuple(x - y for x, y in zip(lcm, gj.exp))
                syz[(i, mi)] = 1 / gi.coeff
                syz[(j, mj)] = syz.get((j, mj), 0) - 1 / gj.coeff
                for n, q in enumerate(quot):
                    for m, c in q.items():
                        v = syz.get((n, m), 0) - c
                        if v:
                            syz[(n, m)] = v
                        else:
                            syz.pop((n, m), None)
                nxt.append(syz)
        vecs = nxt
    return maps


def _minimize_complex(maps, start=1):
    """Cancel constant entries of ``maps[k]`` for ``k >= start``.

    Each cancellation is a change of basis in two adjacent free modules;
    it touches the neighbouring maps and drops one generator from each.
    """
    ring = maps[0].ring
    mats = [[list(r) for r in d.entries] for d in maps]
    dims = [maps[0].rows] + [d.cols for d in maps]

    def find():
        for k in range(start, len(mats)):
            for c in range(dims[k + 1]):
                for r in range(dims[k]):
                    e = mats[k][r][c]
                    if e and e.is_constant():
                        return k, r, c
        return None

    while True:
        hit = find()
        if hit is None:
            break
        k, r, c = hit
        D = mats[k]
        prev = mats[k - 1]
        nxt = mats[k + 1] if k + 1 < len(mats) else None
        a = D[r][c].constant_term()
        for j in range(dims[k + 1]):
            if j != c and D[r][j]:
                f = D[r][j] / a
                for i in range(dims[k]):
                    if D[i][c]:
                        D[i][j] = D[i][j] - f * D[i][c]
                if nxt is not None:
                    nxt[c] = [x + f * y for x, y in zip(nxt[c], nxt[j])]
        for i in range(dims[k]):
            if i != r and D[i][c]:
                beta = D[i][c] / a
                D[i] = [x - beta * y for x, y in zip(D[i], D[r])]
                for row in prev:
                    if row[i]:
                        row[r] = row[r] + beta * row[i]
        mats[k] = [[D[i][j] for j in range(dims[k + 1]) if j != c] for i in range(dims[k]) if i != r]
        mats[k - 1] = [[row[j] for j in range(dims[k]) if j != r] for row in prev]
        if nxt is not None:
            mats[k + 1] = [nxt[i] for i in range(dims[k + 1]) if i != c]
        dims[k] -= 1
        dims[k + 1] -= 1
    out = [ModMatrix(ring, m, dims[k], dims[k + 1]) if dims[k] and dims[k + 1]
           else ModMatrix(ring, [[] for _ in range(dims[k])] if dims[k] else [], dims[k], dims[k + 1])
           for k, m in enumerate(mats)]
    while out and out[-1].cols == 0:
        out.pop()
    return out


def free_resolution(I, max_len=None, minimize=True, generators=None, method="schreyer"):
    """Free resolution of ``R/I``, minimalized by cancelling constant pivots.

    The default builds Schreyer's resolution from a Groebner basis of ``I``.
    With ``generators`` the first differential is that row, kept as given
    (so redundant generators survive), and the later ones are kernels
    computed one at a time (``method="incremental"`` forces this route).
    Cancelling constants is true minimalization for homogeneous ideals;
    otherwise it is minimal only at the origin.
    """
    ring = I.ring
    max_len = ring.nvars if max_len is None else max_len
    if generators is not None or method == "incremental":
        return _incremental_resolution(I, max_len, minimize, generators)
    if method != "schreyer":
        raise ValueError(f"unknown resolution method {method!r}")
    gens = I.groebner()
    if not gens:
        return Resolution([])
    maps = _schreyer_maps(gens, ring, max_len)
    if minimize:
        maps = _minimize_complex(maps)
    return Resolution(maps)


def _incremental_resolution(I, max_len, minimize, generators):
    ring = I.ring
    gens = list(generators) if generators is not None else I.groebner()
    if not gens:
        return Resolution([])
    maps = [ModMatrix(ring, [gens], 1, len(gens))]
    while True:
        K = syzygies(maps[-1])
        if minimize and (generators is None or len(maps) > 1):
            maps[-1], K = _strip_units(maps[-1], K)
        if K.cols == 0:
            break
        if len(maps) >= max_len:
            raise LengthExceeded(f"resolution longer than {max_len}")
        maps.append(K)
    return Resolution(maps)


class Presentation:
    """The cokernel of ``relations: R^a -> R^b``."""

    def __init__(self, relations, target_rank=None):
        self.relations = relations
        self.target_rank = relations.rows if target_rank is None else target_rank

    def fiber_dim(self, point):
        return fiber_dim(self, point)

    def __repr__(self):
        return f"Presentation(R^{self.target_rank} / {self.relations.cols} relations)"


def fiber_dim(P, point):
    """``dim_k coker(P) (x) k(point)`` = target rank minus rank at the point."""
    return P.target_rank - P.relations.rank_at(point)


def ext_top(I, res=None):
    """``Ext^c(R/I, R)`` for ``c = codim I``, presented by the dual of the last map."""
    res = free_resolution(I) if res is None else res
    c = I.codim()
    if len(res) > c:
        raise NotCM(f"resolution length {len(res)} exceeds codimension {c}")
    if len(res) < c:
        raise ValueError(f"resolution length {len(res)} is shorter than codimension {c}")
    return Presentation(res[-1].transpose())


def jacobian(polys, ring):
    return ModMatrix(ring, [[p.diff(n) for n in ring.names] for p in polys], len(polys), ring.nvars)


def tangent_dim(I, point):
    """Zariski tangent space dimension of ``V(I)`` at a rational point."""
    gens = I.groebner()
    for g in gens:
        if g.evaluate(point) != 0:
            raise PointNotOnVariety(f"{g} does not vanish at {point}")
    if not gens:
        return I.ring.nvars
    return I.ring.nvars - jacobian(gens, I.ring).rank_at(point)


__all__ = [
    "ModMatrix", "Presentation", "Resolution", "syzygies", "is_exact_at", "free_resolution",
    "ext_top", "fiber_dim", "tangent_dim", "module_gb", "in_column_module", "jacobian", "GREVLEX",
]
