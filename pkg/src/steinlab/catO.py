"""Integer shadows of the regular block of category O for products of gl3.

Classes in the Grothendieck group are integer combinations of simples
``L(w . lam)`` or of Vermas ``M(w . lam)``, indexed by W.  In type A2 every
Verma has all Jordan-Hoelder multiplicities equal to one, so
``[M(w)] = sum over w' >= w of [L(w')]``; no Kazhdan-Lusztig engine is needed.
"""

from dataclasses import dataclass
from itertools import combinations, product

from .weyl import WeylElem, bruhat_leq, coxeter_length


class ZeroSheaf(ValueError):
    """The requested sheaf vanishes at this refinement position."""


def _w0_like(w):
    return WeylElem.longest(w.n, w.k)


class KClass:
    """Integer combination over W in the simple (``"L"``) or Verma (``"M"``) basis."""

    __slots__ = ("coeffs", "basis")

    def __init__(self, coeffs, basis="L"):
        if basis not in ("L", "M"):
            raise ValueError("basis is 'L' or 'M'")
        self.coeffs = {w: int(c) for w, c in coeffs.items() if c}
        self.basis = basis

    def __add__(self, other):
        if self.basis != other.basis:
            raise ValueError("adding classes written in different bases")
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return KClass(out, self.basis)

    def __neg__(self):
        return KClass({w: -c for w, c in self.coeffs.items()}, self.basis)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return (isinstance(other, KClass) and self.basis == other.basis
                and self.coeffs == other.coeffs)

    def support(self):
        return sorted(self.coeffs, key=lambda w: (coxeter_length(w), w))

    def length(self):
        return sum(self.coeffs.values())

    def to_verma(self, n=3, k=None):
        """Rewrite in the Verma basis (Moebius inversion of the Bruhat order)."""
        if self.basis == "M":
            return self
        elems = _elements_like(self.coeffs, n, k)
        # c(w') = sum over w <= w' of a(w); solve upwards in length
        a = {}
        for w in elems:
            val = self.coeffs.get(w, 0) - sum(a[v] for v in a if v != w and bruhat_leq(v, w))
            if val:
                a[w] = val
        return KClass(a, "M")

    def to_simple(self, n=3, k=None):
        if self.basis == "L":
            return self
        out = KClass({}, "L")
        for w, c in self.coeffs.items():
            out = out + KClass({v: c * m for v, m in verma_jh(w).coeffs.items()}, "L")
        return out

    def as_dict(self):
        return {",".join(w.names()): c for w, c in
                sorted(self.coeffs.items(), key=lambda t: (coxeter_length(t[0]), t[0]))}

    def __repr__(self):
        terms = " + ".join(f"{c}*{self.basis}({','.join(w.names())})" for w, c in
                           sorted(self.coeffs.items(), key=lambda t: (coxeter_length(t[0]), t[0])))
        return f"KClass({terms or '0'})"


def _elements_like(coeffs, n, k):
    if coeffs:
        w = next(iter(coeffs))
        n, k = w.n, w.k
    return sorted(WeylElem.all(n, k or 1), key=lambda w: (coxeter_length(w), w))


def verma_jh(w):
    """Jordan-Hoelder content of ``M(w . lam)``: every ``w' >= w`` once."""
    return KClass({v: 1 for v in WeylElem.all(w.n, w.k) if bruhat_leq(w, v)}, "L")


def n_lambda_jh():
    """Content of the quotient of ``M(lam)`` by ``M(s1s2 . lam) + M(s2s1 . lam)``."""
    return KClass({WeylElem.parse(x, 3): 1 for x in ("e", "s1", "s2")}, "L")


def n_lambda_by_inclusion_exclusion():
    """The same class from the Verma lattice: the two submodules meet in ``M(w0 . lam)``."""
    p = lambda x: WeylElem.parse(x, 3)
    return verma_jh(p("e")) - verma_jh(p("s1s2")) - verma_jh(p("s2s1")) + verma_jh(p("w0"))


@dataclass(frozen=True)
class RefinementPosition:
    w_xR: WeylElem
    m: int = 1

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("the multiplicity m must be at least 1")

    @classmethod
    def parse(cls, text, m=1, n=3):
        return cls(WeylElem.parse(text, n), m)

    @property
    def r(self):
        return sum(1 for f in self.w_xR if f.is_identity())


def _factor_summands(wR, literal=False):
    """Indecomposable summands of one factor, as ``("L", w)`` or ``("N",)``."""
    w0 = WeylElem.longest(wR.n)
    if not wR.is_identity():
        top = wR * w0
        return [("L", w) for w in sorted(WeylElem.all(wR.n), key=lambda v: (coxeter_length(v), v))
                if bruhat_leq(w, top)]
    if literal:
        keep = [w for w in WeylElem.all(wR.n) if coxeter_length(w) != 1]
    else:
        # L(lam), L(s1 . lam), L(s2 . lam) are already inside N(lam)
        keep = [w for w in WeylElem.all(wR.n) if coxeter_length(w) >= 2]
    keep.sort(key=lambda v: (coxeter_length(v), v))
    return [("L", w) for w in keep] + [("N",)]


def _summand_class(parts):
    pieces = []
    for part in parts:
        if part[0] == "L":
            pieces.append([part[1].factors[0]])
        else:
            pieces.append([w.factors[0] for w in n_lambda_jh().coeffs])
    return KClass({WeylElem(list(c)): 1 for c in product(*pieces)}, "L")


def s_lambda_wR(pos, literal=False):
    """Class and summands of the tensor product of the per-factor objects.

    For a factor with nontrivial refinement position the object is the sum
    of ``L(w . lam)`` over ``w <= w_R w0``.  For a trivial position it is
    the sum of ``L(w . lam)`` over ``lg(w) >= 2`` plus ``N(lam)``, which
    contains each simple once; ``literal=True`` keeps ``L(lam)`` as a
    separate summand as well (``lg(w) != 1``).
    """
    per_factor = [_factor_summands(f, literal) for f in pos.w_xR]
    summands = list(product(*per_factor))
    total = KClass({}, "L")
    for s in summands:
        total = total + _summand_class(s)
    return total, summands


def summand_label(parts):
    return " x ".join(p[1].names()[0] if p[0] == "L" else "N" for p in parts)


def support_nonzero(w, pos):
    return bruhat_leq(pos.w_xR, w * _w0_like(w))


def _cycle(symbol, w, pos):
    if not support_nonzero(w, pos):
        raise ZeroSheaf(f"{w!r} w0 is not above {pos.w_xR!r}")
    return CycleClass({(symbol, w * _w0_like(w)): pos.m})


class CycleClass:
    """Integer combination of component symbols ``("X", w)`` or ``("Z", w)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = {k: int(c) for k, c in coeffs.items() if c}

    def terms(self):
        return list(self.coeffs.items())

    def __eq__(self, other):
        return isinstance(other, CycleClass) and self.coeffs == other.coeffs

    def as_dict(self):
        return {f"[{s}_{','.join(w.names())}]": c for (s, w), c in sorted(self.coeffs.items())}

    def __repr__(self):
        return "CycleClass(" + " + ".join(f"{c}*[{s}_{','.join(w.names())}]"
                                          for (s, w), c in self.coeffs.items()) + ")"


def cycle_of_verma(w, pos):
    """``m [X^{w w0}]``."""
    return _cycle("X", w, pos)


def cycle_of_simple(w, pos):
    """``m [Z_{w w0}]``: the off-diagonal coefficients vanish for gl3."""
    return _cycle("Z", w, pos)


def diagonal_coefficient(w, pos):
    """Coefficient of ``[Z_{w w0}]`` in the cycle of ``L(w . lam)`` divided by ``m``."""
    cyc = cycle_of_simple(w, pos)
    return cyc.coeffs.get(("Z", w * _w0_like(w)), 0) // pos.m


def classical_dim_ratio(pos):
    """``2^r`` with ``r`` the number of factors where the refinement is trivial."""
    return 2 ** pos.r


def hom_dim_count(i2_size, m):
    return 2 ** i2_size * m


def inclusion_exclusion_check(i2_size, m):
    """Remove the contributions of the proper pieces; the answer should be ``m``."""
    total = hom_dim_count(i2_size, m)
    correction = 0
    for j in range(1, i2_size + 1):
        for _J in combinations(range(i2_size), j):
            correction += (-1) ** (j + 1) * 2 ** (i2_size - j) * m
    return total - correction


# Refinement position attached to each factor type of a point spec.
# (w0, equal flags) is the critical case; (w0, distinct) sits in the s2
# cell at the sample point used by the models; a smooth factor is generic.
_BRIDGE = {("w0", "equal"): "e", ("w0", "distinct"): "s2"}


def position_for_spec(spec, m=1):
    words = [_BRIDGE.get((w, f), "w0") for w, f in spec.factors]
    return RefinementPosition(WeylElem.parse(",".join(words), 3), m)
