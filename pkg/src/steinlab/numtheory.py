"""Prime splitting in small number fields.

Univariate arithmetic over F_p is done here on coefficient lists (lowest
degree first).  sympy supplies exact resultants, primality and the
irreducibility test over Q.
"""

from dataclasses import dataclass, field
from math import gcd

import sympy
from sympy import Poly as SPoly
from sympy.abc import x as _X, y as _Y


class NumTheoryError(ValueError):
    pass


class BadPrime(NumTheoryError):
    pass


class NoShiftFound(NumTheoryError):
    pass


class NonAbelianSpec(NumTheoryError):
    pass


class ZPoly:
    """A nonconstant-or-constant integer polynomial, coefficients lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = [int(v) for v in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        if not c or (len(c) == 1 and c[0] == 0):
            raise NumTheoryError("the zero polynomial is not allowed")
        self.coeffs = tuple(c)

    @classmethod
    def parse(cls, text):
        expr = sympy.sympify(text.replace("^", "**"), locals={"x": _X})
        p = SPoly(expr, _X)
        if not all(c.is_integer for c in p.all_coeffs()):
            raise NumTheoryError(f"{text!r} does not have integer coefficients")
        return cls(reversed([int(c) for c in p.all_coeffs()]))

    @classmethod
    def from_sympy(cls, p):
        return cls(reversed([int(c) for c in SPoly(p, _X).all_coeffs()]))

    def to_sympy(self, var=_X):
        return SPoly(list(reversed(self.coeffs)), var)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1]

    def is_irreducible(self):
        return self.degree >= 1 and self.to_sympy().is_irreducible

    def __eq__(self, other):
        return isinstance(other, ZPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self):
        return str(self.to_sympy().as_expr()).replace("**", "^")

    def __repr__(self):
        return f"ZPoly({self})"


# -- F_p[x] ----------------------------------------------------------------

def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _reduce(a, p):
    return _trim([v % p for v in a])


def _sub(a, b, p):
    n = max(len(a), len(b))
    return _trim([((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
                  for i in range(n)])


def _mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] = (out[i + j] + u * v) % p
    return _trim(out)


def _divmod(a, b, p):
    a = list(a)
    inv = pow(b[-1], -1, p)
    q = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for i, v in enumerate(b):
            a[shift + i] = (a[shift + i] - c * v) % p
        _trim(a)
    return _trim(q), a


def _mod(a, b, p):
    return _divmod(a, b, p)[1]


def _gcd(a, b, p):
    while b:
        a, b = b, _mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [v * inv % p for v in a]
    return a


def _deriv(a, p):
    return _trim([(i * a[i]) % p for i in range(1, len(a))])


def _powmod(base, e, f, p):
    result = [1]
    base = _mod(base, f, p)
    while e:
        if e & 1:
            result = _mod(_mul(result, base, p), f, p)
        base = _mod(_mul(base, base, p), f, p)
        e >>= 1
    return result


def _check_prime(f, p):
    if not sympy.isprime(p):
        raise BadPrime(f"{p} is not prime")
    if f.lead % p == 0:
        raise BadPrime(f"{p} divides the leading coefficient of {f}")
    return _reduce(list(f.coeffs), p)


def frobenius_power(f, p):
    """Residue of ``x^p`` modulo ``f`` in ``F_p[x]``, lowest degree first."""
    fp = _check_prime(f, p)
    return _powmod([0, 1], p, fp, p)


def frobenius_power_naive(f, p):
    """Same residue by ``p`` successive multiplications by ``x``."""
    fp = _check_prime(f, p)
    r = _mod([1], fp, p)
    for _ in range(p):
        r = _mod(_mul(r, [0, 1], p), fp, p)
    return r


def is_squarefree_mod(f, p):
    fp = _check_prime(f, p)
    return len(_gcd(fp, _deriv(fp, p), p)) == 1


def is_totally_split(f, p):
    """``f`` has ``deg f`` distinct roots in ``F_p``."""
    fp = _check_prime(f, p)
    if len(_gcd(fp, _deriv(fp, p), p)) != 1:
        return False
    return _sub(_powmod([0, 1], p, fp, p), _mod([0, 1], fp, p), p) == []


def factor_degrees(f, p):
    """Degrees of the irreducible factors of a squarefree ``f mod p`` (distinct-degree)."""
    fp = _check_prime(f, p)
    inv = pow(fp[-1], -1, p)
    fp = [v * inv % p for v in fp]
    if len(_gcd(fp, _deriv(fp, p), p)) != 1:
        raise BadPrime(f"{f} is not squarefree mod {p}")
    degrees = []
    h = [0, 1]
    d = 0
    while len(fp) > 1:
        d += 1
        if 2 * d > len(fp) - 1:
            degrees.append(len(fp) - 1)
            break
        h = _powmod(h, p, fp, p)
        g = _gcd(fp, _sub(h, [0, 1], p), p)
        k = len(g) - 1
        if k:
            degrees += [d] * (k // d)
            fp = _divmod(fp, g, p)[0]
            h = _mod(h, fp, p)
    return sorted(degrees)


def verdict(f, p):
    """``split``, ``ramified`` or ``inert-pattern(d1,d2,...)`` for ``f`` at ``p``."""
    if not is_squarefree_mod(f, p):
        return "ramified"
    if is_totally_split(f, p):
        return "split"
    return "inert-pattern(" + ",".join(map(str, factor_degrees(f, p))) + ")"


# -- field specs ----------------------------------------------------------

@dataclass(frozen=True)
class FieldSpec:
    """A set of defining polynomials whose fields are treated as linearly disjoint."""
    name: str
    polys: tuple
    modulus: int = None
    abelian: bool = False

    @classmethod
    def from_text(cls, text, name=None):
        polys = tuple(ZPoly.parse(t) for t in text.split(";") if t.strip())
        for f in polys:
            if not f.is_irreducible():
                raise NumTheoryError(f"{f} is not irreducible over Q")
        return cls(name or text, polys)

    @property
    def degree(self):
        d = 1
        for f in self.polys:
            d *= f.degree
        return d


def _spec(name, texts, modulus=None, abelian=True):
    return FieldSpec(name, tuple(ZPoly.parse(t) for t in texts), modulus, abelian)


CUBIC13 = "x^3 - x^2 - 4*x - 1"
ZETA7_PLUS = "x^3 + x^2 - 2*x - 1"
BETA = "x^3 - x^2 - 14*x - 8"

BUILTIN = {
    "Qi": _spec("Qi", ["x^2 + 1"], 4),
    "Qsqrt-3": _spec("Qsqrt-3", ["x^2 + 3"], 3),
    "Qi_sqrt3": _spec("Qi_sqrt3", ["x^4 - x^2 + 1"], 12),
    "Qi_sqrt7": _spec("Qi_sqrt7", ["x^2 + 1", "x^2 - 7"], 28),
    "cubic13": _spec("cubic13", [CUBIC13], 13),
    "zeta7plus": _spec("zeta7plus", [ZETA7_PLUS], 7),
    "beta43": _spec("beta43", [BETA], 43),
    "Qi_cubic13": _spec("Qi_cubic13", ["x^2 + 1", CUBIC13], 52),
    "Qsqrt-3_zeta7plus": _spec("Qsqrt-3_zeta7plus", ["x^2 + 3", ZETA7_PLUS], 21),
    "Qi_sqrt3_zeta7plus": _spec("Qi_sqrt3_zeta7plus", ["x^4 - x^2 + 1", ZETA7_PLUS], 84),
    "Qi_sqrt7_beta43": _spec("Qi_sqrt7_beta43", ["x^2 + 1", "x^2 - 7", BETA], 1204),
}


def field_set(text):
    """``builtin:<name>`` or a ``;``-separated list of polynomials."""
    if text.startswith("builtin:"):
        name = text.split(":", 1)[1]
        if name not in BUILTIN:
            raise NumTheoryError(f"unknown builtin field set {name!r}; known: {', '.join(BUILTIN)}")
        return BUILTIN[name]
    return FieldSpec.from_text(text)


@dataclass
class SplitReport:
    prime: int
    verdicts: dict
    totally_split: bool

    def as_dict(self):
        return {"prime": self.prime, "verdicts": self.verdicts, "totally_split": self.totally_split}


def is_totally_split_set(spec, p):
    verdicts = {str(f): verdict(f, p) for f in spec.polys}
    return SplitReport(p, verdicts, all(v == "split" for v in verdicts.values()))


def compositum_poly(f, g, max_shift=20):
    """Minimal polynomial of ``a + k b`` (``f(a) = g(b) = 0``) for the least ``k >= 1``
    giving a squarefree resultant."""
    fs = f.to_sympy(_X).as_expr()
    gs = g.to_sympy(_Y).as_expr()
    for k in range(1, max_shift + 1):
        res = sympy.resultant(gs, fs.subs(_X, _X - k * _Y), _Y)
        r = SPoly(res, _X)
        if r.degree() >= 1 and sympy.gcd(r, r.diff(_X)).degree() == 0:
            r = r.monic() if r.LC() > 0 else (-r).monic()
            return ZPoly.from_sympy(r)
    raise NoShiftFound(f"no shift up to {max_shift} gives a squarefree resultant")


@dataclass
class CongruenceReport:
    modulus: int
    residues: list
    witnesses: dict
    subgroup: bool
    index: int
    exact: bool
    notes: list = field(default_factory=list)

    def as_dict(self):
        return {"modulus": self.modulus, "residues": self.residues,
                "witnesses": {str(r): w for r, w in self.witnesses.items()},
                "subgroup": self.subgroup, "index": self.index, "exact": self.exact,
                "notes": self.notes}


def _first_primes(r, M, k):
    out = []
    q = r
    while len(out) < k:
        if q > 1 and sympy.isprime(q):
            out.append(q)
        q += M
    return out


def congruence_classes(spec, M, k=3, strict=False):
    """Units ``r mod M`` whose first ``k`` primes are all totally split.

    For abelian builtin specs whose conductor divides ``M`` the splitting
    only depends on the class, so the answer is exact; otherwise it is a
    heuristic and flagged as such, or refused with ``strict``.
    """
    exact = spec.abelian and spec.modulus is not None and M % spec.modulus == 0
    if strict and not exact:
        raise NonAbelianSpec(f"{spec.name} is not known to be abelian of conductor dividing {M}")
    residues, witnesses = [], {}
    for r in range(1, M):
        if gcd(r, M) != 1:
            continue
        primes = _first_primes(r, M, k)
        if all(is_totally_split_set(spec, q).totally_split for q in primes):
            residues.append(r)
            witnesses[r] = primes
    units = [r for r in range(1, M) if gcd(r, M) == 1]
    closed = all((a * b) % M in residues for a in residues for b in residues)
    index = len(units) // len(residues) if residues and closed else 0
    notes = [] if exact else ["heuristic: splitting was only sampled on the first primes of each class"]
    return CongruenceReport(M, residues, witnesses, closed, index, exact, notes)


def check_listed_primes(spec, M, listed):
    """For each listed number: is it prime, totally split, and in an allowed class."""
    rep = congruence_classes(spec, M)
    out = []
    for q in listed:
        if not sympy.isprime(q):
            out.append({"value": q, "prime": False, "note": f"{q} is not prime"})
            continue
        out.append({"value": q, "prime": True, "residue": q % M,
                    "in_classes": q % M in rep.residues,
                    "totally_split": is_totally_split_set(spec, q).totally_split})
    return out


def taylor_wiles_prime_check(p, spec, role="p"):
    """Itemized conditions on a prime used as ``p`` (patching) or as ``ell`` (auxiliary)."""
    items = []
    if role == "p":
        items.append({"check": "p > 8", "pass": p > 8})
        items.append({"check": f"p - 1 > {spec.degree} (no p-th roots of unity)",
                      "pass": p - 1 > spec.degree})
    elif role != "ell":
        raise NumTheoryError(f"role must be 'p' or 'ell', not {role!r}")
    items.append({"check": "prime", "pass": bool(sympy.isprime(p))})
    split = sympy.isprime(p) and is_totally_split_set(spec, p).totally_split
    items.append({"check": "totally split", "pass": bool(split)})
    return {"prime": p, "role": role, "spec": spec.name, "items": items,
            "pass": all(i["pass"] for i in items)}


def split_density(f, bound):
    """Fraction of unramified primes below ``bound`` at which ``f`` is totally split."""
    total = hits = 0
    for q in sympy.primerange(2, bound):
        if f.lead % q == 0 or not is_squarefree_mod(f, q):
            continue
        total += 1
        hits += is_totally_split(f, q)
    return hits / total


def count_primes_above(f, p):
    """Number of primes above ``p`` in the field of ``f`` (``p`` unramified, ``f`` monogenic at ``p``)."""
    return len(factor_degrees(f, p))


def is_relatively_split(top, base, p):
    """Whether the primes of the base field above ``p`` split completely in ``top``.

    Both fields are Galois over Q, so all primes above ``p`` look alike and
    the test compares the number of primes on each level.
    """
    rel = top.degree // base.degree
    return count_primes_above(top, p) == rel * count_primes_above(base, p)
