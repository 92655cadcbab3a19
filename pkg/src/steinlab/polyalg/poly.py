"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Ring` fixes an ordered tuple of variable names and a default
monomial order.  The first variable is the largest one, so
``Ring(["x1", "x2"])`` has ``x1 > x2`` under every order provided here.
"""

import re
from functools import reduce

from gmpy2 import mpq

QQ = mpq


_MPQ = type(mpq(0))


def as_rat(c):
    """Coerce ints, Fractions, mpq and 'a/b' strings to an exact rational."""
    if isinstance(c, str):
        num, _, den = c.partition("/")
        return mpq(int(num), int(den)) if den else mpq(int(num))
    if hasattr(c, "numerator") and hasattr(c, "denominator"):
        return mpq(int(c.numerator), int(c.denominator))
    if isinstance(c, float):
        raise TypeError("floats are not exact coefficients")
    return mpq(c)


def _grevlex_key(e):
    return (sum(e), tuple(-a for a in reversed(e)))


class MonomialOrder:
    """A monomial order usable as a sort key (bigger key = bigger monomial).

    ``kind`` is ``"grevlex"``, ``"lex"`` or ``"block"``.  The block order
    compares the first ``split`` variables by grevlex and breaks ties with
    grevlex on the remaining ones; it eliminates the first block.
    """

    __slots__ = ("kind", "split", "key")

    def __init__(self, kind="grevlex", split=None):
        if kind not in ("grevlex", "lex", "block"):
            raise ValueError(f"unknown monomial order {kind!r}")
        if kind == "block" and split is None:
            raise ValueError("block order needs a split index")
        self.kind = kind
        self.split = split if kind == "block" else None
        if kind == "grevlex":
            self.key = _grevlex_key
        elif kind == "lex":
            self.key = tuple
        else:
            k = split
            self.key = lambda e: (_grevlex_key(e[:k]), _grevlex_key(e[k:]))

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and (self.kind, self.split) == (other.kind, other.split)

    def __hash__(self):
        return hash((self.kind, self.split))

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder('block', split={self.split})"
        return f"MonomialOrder({self.kind!r})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


class Ring:
    """Polynomial ring over QQ in named variables."""

    def __init__(self, names, order=GREVLEX):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError(f"repeated variable names in {names}")
        for name in names:
            if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
                raise ValueError(f"bad variable name {name!r}")
        self.names = names
        self.nvars = len(names)
        self.order = order
        self._index = {n: i for i, n in enumerate(names)}

    def __eq__(self, other):
        return isinstance(other, Ring) and self.names == other.names and self.order == other.order

    def __hash__(self):
        return hash((self.names, self.order))

    def __repr__(self):
        return f"Ring({list(self.names)}, {self.order!r})"

    def index(self, name):
        return self._index[name]

    def with_order(self, order):
        return Ring(self.names, order)

    def zero(self):
        return Poly(self, {})

    def one(self):
        return self.const(1)

    def const(self, c):
        c = as_rat(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def var(self, name):
        e = [0] * self.nvars
        e[self._index[name]] = 1
        return Poly(self, {tuple(e): QQ(1)})

    def gens(self):
        return [self.var(n) for n in self.names]

    def __call__(self, obj):
        if isinstance(obj, Poly):
            return obj.to_ring(self)
        if isinstance(obj, str):
            return parse_poly(obj, self)
        return self.const(obj)

    def parse(self, text):
        return parse_poly(text, self)


class Poly:
    """Immutable-by-convention sparse polynomial: ``{exponent tuple: coeff}``."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        if any(type(c) is not _MPQ for c in terms.values()):
            terms = {e: as_rat(c) for e, c in terms.items() if c}
        self.terms = terms

    # --- basic queries -------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_term(self):
        return self.terms.get((0,) * self.ring.nvars, QQ(0))

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def variables(self):
        used = set()
        for e in self.terms:
            used.update(i for i, a in enumerate(e) if a)
        return [self.ring.names[i] for i in sorted(used)]

    def lead_exp(self, order=None):
        key = (order or self.ring.order).key
        return max(self.terms, key=key)

    def lead_coeff(self, order=None):
        return self.terms[self.lead_exp(order)]

    def sorted_terms(self, order=None):
        key = (order or self.ring.order).key
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=True)

    def monic(self, order=None):
        if not self.terms:
            return self
        lc = self.lead_coeff(order)
        return Poly(self.ring, {e: c / lc for e, c in self.terms.items()})

    # --- arithmetic ----------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ring.names != self.ring.names:
                raise ValueError("polynomials live in different rings")
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = as_rat(other)
            if not c:
                return self.ring.zero()
            return Poly(self.ring, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        c = as_rat(c)
        return Poly(self.ring, {e: v / c for e, v in self.terms.items()})

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring.names == other.ring.names and self.terms == other.terms
        try:
            return self == self.ring.const(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.ring.names, frozenset(self.terms.items())))

    # --- calculus and evaluation --------------------------------------
    def diff(self, name):
        i = self.ring.index(name)
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                e2 = list(e)
                e2[i] -= 1
                out[tuple(e2)] = c * e[i]
        return Poly(self.ring, out)

    def __call__(self, point):
        return self.evaluate(point)

    def evaluate(self, point):
        """Evaluate at a point given as a sequence (ring order) or a name->value dict."""
        if isinstance(point, dict):
            vals = [as_rat(point.get(n, 0)) for n in self.ring.names]
        else:
            if len(point) != self.ring.nvars:
                raise ValueError(f"point has {len(point)} coordinates, ring has {self.ring.nvars}")
            vals = [as_rat(v) for v in point]
        total = QQ(0)
        for e, c in self.terms.items():
            t = c
            for v, a in zip(vals, e):
                if a:
                    t *= v ** a
            total += t
        return total

    def subs(self, values):
        """Substitute rationals for some variables (by name); the ring is unchanged."""
        idx = {self.ring.index(n): as_rat(v) for n, v in values.items()}
        out = {}
        for e, c in self.terms.items():
            e2 = list(e)
            for i, v in idx.items():
                if e2[i]:
                    c = c * v ** e2[i]
                    e2[i] = 0
            if c:
                k = tuple(e2)
                s = out.get(k, 0) + c
                if s:
                    out[k] = s
                else:
                    out.pop(k)
        return Poly(self.ring, out)

    def to_ring(self, ring):
        """Re-express in another ring containing every variable used here."""
        if ring.names == self.ring.names:
            return Poly(ring, dict(self.terms))
        pos = []
        for i, name in enumerate(self.ring.names):
            pos.append(ring._index.get(name))
        out = {}
        for e, c in self.terms.items():
            e2 = [0] * ring.nvars
            for i, a in enumerate(e):
                if a:
                    if pos[i] is None:
                        raise ValueError(f"variable {self.ring.names[i]} missing from target ring")
                    e2[pos[i]] = a
            out[tuple(e2)] = c
        return Poly(ring, out)

    # --- printing ------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                name if a == 1 else f"{name}^{a}"
                for name, a in zip(self.ring.names, e) if a
            )
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append((sign, body))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"Poly({str(self)!r})"


# --- parser ---------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text):
    pos = 0
    out = []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial near {text[pos:]!r}")
        num, ident, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif ident is not None:
            out.append(("id", ident))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, ring):
        self.toks = tokens
        self.i = 0
        self.ring = ring

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        value = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            _, op = self.take()
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while True:
            kind, tok = self.peek()
            if (kind, tok) == ("op", "*"):
                self.take()
                value = value * self.unary()
            elif (kind, tok) == ("op", "/"):
                self.take()
                den = self.unary()
                if not den.is_constant() or den.is_zero():
                    raise ValueError("division only by nonzero constants")
                value = value / den.constant_term()
            elif kind in ("num", "id") or (kind, tok) == ("op", "("):
                # juxtaposition such as 4x or 2(x+y)
                value = value * self.power()
            else:
                return value

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.unary()
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            kind, tok = self.take()
            if kind != "num":
                raise ValueError("exponent must be a nonnegative integer")
            base = base ** tok
        return base

    def atom(self):
        kind, tok = self.take()
        if kind == "num":
            return self.ring.const(tok)
        if kind == "id":
            if tok not in self.ring._index:
                raise ValueError(f"unknown variable {tok!r} for ring {self.ring.names}")
            return self.ring.var(tok)
        if (kind, tok) == ("op", "("):
            value = self.expr()
            if self.take() != ("op", ")"):
                raise ValueError("unbalanced parenthesis")
            return value
        raise ValueError(f"unexpected token {tok!r}")


def parse_poly(text, ring):
    """Parse ``text`` into a polynomial of ``ring``.

    Accepts the printer's output (``3/2*x^2*y - z + 1``) as well as ``**``,
    parentheses and juxtaposition (``4x``).
    """
    p = _Parser(_tokenize(text), ring)
    if not p.toks:
        raise ValueError("empty polynomial")
    value = p.expr()
    if p.i != len(p.toks):
        raise ValueError(f"trailing input in {text!r}")
    return value


def poly_sum(polys, ring):
    return reduce(lambda a, b: a + b, polys, ring.zero())
