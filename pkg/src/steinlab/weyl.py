"""Combinatorics of W = S_n x ... x S_n (one factor per embedding).

Permutations are stored in one-line notation on {1..n}.  Products apply
the right factor first: ``(u * v)(i) = u(v(i))``.  The simple reflection
``s_i`` swaps ``i`` and ``i + 1``.
"""

from collections import deque
from functools import lru_cache
from itertools import permutations

from .polyalg.linalg import rank


class WeylError(ValueError):
    pass


class ShapeMismatch(WeylError):
    pass


class SearchBound(WeylError):
    pass


class NotRegular(WeylError):
    pass


SEARCH_MAX_N = 5


# -- single permutations -------------------------------------------------

def _check_perm(p):
    p = tuple(int(v) for v in p)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise WeylError(f"{p} is not a permutation of 1..{len(p)}")
    return p


def _compose(u, v):
    return tuple(u[v[i] - 1] for i in range(len(v)))


def _inverse(p):
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def _simple(i, n):
    p = list(range(1, n + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def _inversions(p):
    n = len(p)
    return sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])


def _cycles(p):
    seen = set()
    count = 0
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        count += 1
        k = start
        while k not in seen:
            seen.add(k)
            k = p[k - 1]
    return count


@lru_cache(maxsize=None)
def reduced_word(p):
    """A reduced word (list of simple indices) for ``p``, read left to right."""
    p = tuple(p)
    word = []
    while True:
        i = next((i for i in range(len(p) - 1) if p[i] > p[i + 1]), None)
        if i is None:
            return tuple(reversed(word))
        q = list(p)
        q[i], q[i + 1] = q[i + 1], q[i]
        p = tuple(q)
        word.append(i + 1)


def _word_product(word, n):
    p = tuple(range(1, n + 1))
    for i in word:
        p = _compose(p, _simple(i, n))
    return p


@lru_cache(maxsize=None)
def _subword_products(p):
    n = len(p)
    out = {tuple(range(1, n + 1))}
    for i in reduced_word(p):
        s = _simple(i, n)
        out |= {_compose(q, s) for q in out}
    return frozenset(out)


def bruhat_leq_subword(p, q):
    """``p <= q`` iff ``p`` is a subword product of a reduced word of ``q``."""
    return tuple(p) in _subword_products(tuple(q))


def _rank_matrix(p):
    n = len(p)
    return [[sum(1 for a in range(i + 1) if p[a] >= j) for j in range(1, n + 1)]
            for i in range(n)]


def bruhat_leq_rank(p, q):
    """Rank-matrix criterion: ``p[i,j] <= q[i,j]`` with ``x[i,j] = #{a <= i : x(a) >= j}``."""
    rp, rq = _rank_matrix(p), _rank_matrix(q)
    return all(a <= b for ra, rb in zip(rp, rq) for a, b in zip(ra, rb))


def _is_distinct_simple_product(p):
    n = len(p)
    if n > SEARCH_MAX_N:
        raise SearchBound(f"exhaustive search is limited to n <= {SEARCH_MAX_N}")
    k = _inversions(p)
    if k > n - 1:
        return False
    return any(_word_product(seq, n) == p for seq in permutations(range(1, n), k))


def _reflection_length_bfs(p):
    """Distance from the identity in the Cayley graph of all transpositions."""
    n = len(p)
    start = tuple(range(1, n + 1))
    trans = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            t = list(start)
            t[i - 1], t[j - 1] = j, i
            trans.append(tuple(t))
    dist = {start: 0}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if cur == p:
            return dist[cur]
        for t in trans:
            nxt = _compose(cur, t)
            if nxt not in dist:
                dist[nxt] = dist[cur] + 1
                queue.append(nxt)
    raise AssertionError("unreachable")


def _fixed_dim_linear(p):
    n = len(p)
    rows = [[(1 if p[j] - 1 == i else 0) - (1 if i == j else 0) for j in range(n)]
            for i in range(n)]
    return n - rank(rows)


def _factor_name(p):
    n = len(p)
    if p == tuple(range(1, n + 1)):
        return "e"
    if p == tuple(range(n, 0, -1)):
        return "w0"
    return "".join(f"s{i}" for i in reduced_word(p))


def _parse_factor(text, n):
    text = text.strip()
    if text in ("e", "1", "id"):
        if n is None:
            raise WeylError("word notation needs n")
        return tuple(range(1, n + 1))
    if text == "w0":
        if n is None:
            raise WeylError("word notation needs n")
        return tuple(range(n, 0, -1))
    if text.startswith("s"):
        if n is None:
            raise WeylError("word notation needs n")
        parts = text.split("s")[1:]
        try:
            word = [int(x) for x in parts]
        except ValueError:
            raise WeylError(f"bad word {text!r}") from None
        if any(not 1 <= i < n for i in word):
            raise WeylError(f"simple index out of range in {text!r}")
        return _word_product(word, n)
    if text.isdigit():
        p = _check_perm(int(c) for c in text)
        if n is not None and len(p) != n:
            raise WeylError(f"{text!r} is not in S_{n}")
        return p
    raise WeylError(f"cannot parse Weyl factor {text!r}")


# -- public types ---------------------------------------------------------

class WeylElem:
    """An element of a product of symmetric groups, one factor per embedding."""

    __slots__ = ("factors", "n")

    def __init__(self, factors, n=None):
        factors = tuple(_check_perm(f) for f in factors)
        if not factors:
            raise WeylError("need at least one factor")
        sizes = {len(f) for f in factors}
        if len(sizes) != 1:
            raise ShapeMismatch("factors of different sizes")
        size = sizes.pop()
        if n is not None and n != size:
            raise ShapeMismatch(f"factors live in S_{size}, not S_{n}")
        self.factors = factors
        self.n = size

    @classmethod
    def identity(cls, n=3, k=1):
        return cls([tuple(range(1, n + 1))] * k)

    @classmethod
    def longest(cls, n=3, k=1):
        return cls([tuple(range(n, 0, -1))] * k)

    @classmethod
    def simple(cls, i, n=3):
        return cls([_simple(i, n)])

    @classmethod
    def parse(cls, text, n=None):
        """Parse ``"231,132"`` (one-line) or ``"1,s1s2,w0"`` (words; needs ``n``)."""
        parts = [t for t in text.split(",")]
        if any(not t.strip() for t in parts):
            raise WeylError(f"empty factor in {text!r}")
        if n is None:
            digits = [t.strip() for t in parts if t.strip().isdigit()]
            if digits:
                n = len(digits[0])
        return cls([_parse_factor(t, n) for t in parts], n)

    @classmethod
    def all(cls, n=3, k=1):
        """Every element of ``S_n^k`` in a fixed order."""
        perms = sorted(permutations(range(1, n + 1)))
        out = [()]
        for _ in range(k):
            out = [prev + (p,) for prev in out for p in perms]
        return [cls(f) for f in out]

    @property
    def k(self):
        return len(self.factors)

    def _same_shape(self, other):
        if (self.n, self.k) != (other.n, other.k):
            raise ShapeMismatch(f"shapes {(self.k, self.n)} and {(other.k, other.n)} differ")

    def __mul__(self, other):
        self._same_shape(other)
        return WeylElem([_compose(a, b) for a, b in zip(self.factors, other.factors)])

    def inverse(self):
        return WeylElem([_inverse(f) for f in self.factors])

    def __eq__(self, other):
        return isinstance(other, WeylElem) and self.factors == other.factors

    def __hash__(self):
        return hash(self.factors)

    def __lt__(self, other):
        return self.factors < other.factors

    def __iter__(self):
        return (WeylElem([f]) for f in self.factors)

    def __getitem__(self, tau):
        return WeylElem([self.factors[tau]])

    def is_identity(self):
        return all(f == tuple(range(1, self.n + 1)) for f in self.factors)

    def names(self):
        return [_factor_name(f) for f in self.factors]

    def __str__(self):
        return ",".join("".join(str(v) for v in f) for f in self.factors)

    def __repr__(self):
        return f"WeylElem({','.join(self.names())})"


class IntWeight:
    """Integer weights, one n-tuple per embedding."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        entries = tuple(tuple(int(v) for v in e) for e in entries)
        if not entries or len({len(e) for e in entries}) != 1:
            raise ShapeMismatch("weights need equal-length tuples")
        self.entries = entries

    @classmethod
    def parse(cls, text):
        return cls([[int(v) for v in part.split(",")] for part in text.split(";")])

    @classmethod
    def zero(cls, n=3, k=1):
        return cls([(0,) * n] * k)

    @property
    def n(self):
        return len(self.entries[0])

    @property
    def k(self):
        return len(self.entries)

    def __eq__(self, other):
        return isinstance(other, IntWeight) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __str__(self):
        return ";".join(",".join(str(v) for v in e) for e in self.entries)

    def __repr__(self):
        return f"IntWeight({self})"


class SimpleSubset:
    """Per-embedding sets of simple reflection indices in ``1..n-1``."""

    __slots__ = ("parts", "n")

    def __init__(self, parts, n=3):
        parts = tuple(frozenset(int(i) for i in p) for p in parts)
        for p in parts:
            if any(not 1 <= i < n for i in p):
                raise WeylError(f"simple index out of range for n={n}: {sorted(p)}")
        self.parts = parts
        self.n = n

    @classmethod
    def parse(cls, text, n=3):
        """``"1;1,2;"`` means {s1}, {s1,s2}, {} over three embeddings."""
        return cls([[int(v) for v in part.split(",") if v.strip()] for part in text.split(";")], n)

    def __repr__(self):
        return "SimpleSubset(" + ";".join(",".join(map(str, sorted(p))) for p in self.parts) + ")"


# -- operations -----------------------------------------------------------

def coxeter_length(w):
    return sum(_inversions(f) for f in w.factors)


def reflection_length(w):
    """Minimal number of reflections with product ``w``: sum of ``n - #cycles``."""
    return sum(len(f) - _cycles(f) for f in w.factors)


def reflection_length_bfs(w):
    """The same quantity by breadth-first search over transpositions."""
    return sum(_reflection_length_bfs(f) for f in w.factors)


def fixed_space_dim(w):
    """``dim t^w`` computed as ``n - rank(P_w - 1)`` for each factor."""
    return sum(_fixed_dim_linear(f) for f in w.factors)


def bruhat_leq(w, w2):
    """Factorwise Bruhat order, decided by two independent criteria."""
    w._same_shape(w2)
    for p, q in zip(w.factors, w2.factors):
        a = bruhat_leq_subword(p, q)
        b = bruhat_leq_rank(p, q)
        if a != b:
            raise AssertionError(f"Bruhat criteria disagree on {p} <= {q}")
        if not a:
            return False
    return True


def is_product_of_distinct_simples(w):
    return all(_is_distinct_simple_product(f) for f in w.factors)


def _rho(n):
    # Any shift of the half-sum by a multiple of (1,...,1) gives the same dot
    # action; this integral one keeps weights integral for every n.
    return tuple(range(n - 1, -1, -1))


def act(w, lam):
    """Plain permutation action ``(w lam)_i = lam_{w^-1(i)}``."""
    if (w.k, w.n) != (lam.k, lam.n):
        raise ShapeMismatch(f"element of shape {(w.k, w.n)} on weight of shape {(lam.k, lam.n)}")
    out = []
    for p, e in zip(w.factors, lam.entries):
        inv = _inverse(p)
        out.append(tuple(e[inv[i] - 1] for i in range(len(e))))
    return IntWeight(out)


def dot_action(w, lam):
    """``w . lam = w(lam + rho) - rho`` factorwise."""
    rho = _rho(lam.n)
    shifted = IntWeight([tuple(a + b for a, b in zip(e, rho)) for e in lam.entries])
    moved = act(w, shifted)
    return IntWeight([tuple(a - b for a, b in zip(e, rho)) for e in moved.entries])


def _parabolic(I, n):
    gens = [_simple(i, n) for i in sorted(I)]
    group = {tuple(range(1, n + 1))}
    frontier = list(group)
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = _compose(s, p)
                if q not in group:
                    group.add(q)
                    nxt.append(q)
        frontier = nxt
    return group


def coset_reps(w, I):
    """Minimal and maximal length elements of the right coset ``W_I w``."""
    if len(I.parts) != w.k or I.n != w.n:
        raise ShapeMismatch("subset and element have different shapes")
    mins, maxs = [], []
    for p, part in zip(w.factors, I.parts):
        coset = [_compose(u, p) for u in _parabolic(part, w.n)]
        coset.sort(key=lambda q: (_inversions(q), q))
        mins.append(coset[0])
        maxs.append(coset[-1])
    return WeylElem(mins), WeylElem(maxs)


def hodge_to_lambda(h):
    """Dominant weight from strictly increasing Hodge-Tate weights.

    Reverses each tuple and subtracts ``(0, -1, ..., 1 - n)``.
    """
    out = []
    for e in h.entries:
        if any(a >= b for a, b in zip(e, e[1:])):
            raise NotRegular(f"{e} is not strictly increasing")
        out.append(tuple(v + i for i, v in enumerate(reversed(e))))
    return IntWeight(out)


def hodge_to_mu(h):
    """``h - (0, -1, ..., 1 - n)``, the antidominant companion of ``hodge_to_lambda``."""
    return IntWeight([tuple(v + i for i, v in enumerate(e)) for e in h.entries])
