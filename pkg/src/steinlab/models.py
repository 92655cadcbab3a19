"""Local charts of the GL2 and GL3 Steinberg varieties near the standard flag pair.

GL3 chart: the first flag is the standard one.  The second flag is the line
``v = (1, x1, x2)`` inside the plane ``phi = (y0, y1, 1)``, where
``y0 = -(x1*y1 + x2)`` makes the incidence ``phi . v = 0`` automatic.  The
matrix ``X`` is upper triangular (it fixes the first flag):

    X = [[d1, u12, u13],
         [ 0,  d2, u23],
         [ 0,   0,  d3]]

``X`` fixes the second flag iff ``Xv`` is parallel to ``v`` and ``X`` maps
the plane into itself.  The plane is spanned by ``v`` and ``(0, 1, -y1)``.
Irreducible components are obtained by restricting to one relative-position
cell and saturating by the equations of its complement.  Setting the
diagonal to zero gives the components of the zero fibre, which live in the
ring ``Z = Q[x1, x2, y1, u12, u23, u13]``.

GL2 chart: ``v = (1, x)``, ``X = [[d1, u], [0, d2]]``.
"""

import random
from dataclasses import dataclass, field
from functools import lru_cache

from .polyalg.errors import PointNotOnVariety, PolyAlgError
from .polyalg.ideal import Ideal
from .polyalg.linalg import nullspace
from .polyalg.modules import ModMatrix, ext_top, free_resolution, is_exact_at, tangent_dim
from .polyalg.poly import Ring, as_rat
from .weyl import (WeylElem, coxeter_length, is_product_of_distinct_simples,
                   reflection_length)


class TranscriptionMismatch(PolyAlgError):
    """The transcribed complex fails one of its checks; ``checks`` says which."""

    def __init__(self, message, checks=None, resolution=None):
        super().__init__(message)
        self.checks = checks or {}
        self.resolution = resolution


class ComponentMismatch(PolyAlgError):
    pass


class InvalidSpec(ValueError):
    pass


FLAG_VARS = ("x1", "x2", "y1")
DIAG_VARS = ("d1", "d2", "d3")
NILP_VARS = ("u12", "u23", "u13")
Z_RING = Ring(FLAG_VARS + NILP_VARS)
FULL_RING = Ring(FLAG_VARS + DIAG_VARS + NILP_VARS)

GL2_FULL_RING = Ring(("x", "d1", "d2", "u"))
GL2_RING = Ring(("x", "u"))


class Chart:
    """Named variables and the incidence equations of the GL3 chart."""

    def __init__(self, ring=FULL_RING):
        self.ring = ring
        v = ring.var
        self.x1, self.x2, self.y1 = v("x1"), v("x2"), v("y1")
        self.y0 = -(self.x1 * self.y1 + self.x2)
        self.line = (ring.one(), self.x1, self.x2)
        self.plane = (self.y0, self.y1, ring.one())
        zero = ring.zero()
        self.matrix = [[v("d1"), v("u12"), v("u13")],
                       [zero, v("d2"), v("u23")],
                       [zero, zero, v("d3")]]

    def apply(self, vec):
        return [sum((self.matrix[i][j] * vec[j] for j in range(3)), self.ring.zero())
                for i in range(3)]

    def incidence(self):
        """Generators of the ideal of pairs (second flag, X) with X fixing both flags."""
        Xv = self.apply(self.line)
        minors = [Xv[i] - self.line[i] * Xv[0] for i in (1, 2)]
        second = (self.ring.zero(), self.ring.one(), -self.y1)
        Xw = self.apply(second)
        plane = sum((p * q for p, q in zip(self.plane, Xw)), self.ring.zero())
        return minors + [plane]


# Relative position cells in the GL3 chart: (equations, open condition).
def _gl3_cells(c):
    x1, x2, y1 = c.x1, c.x2, c.y1
    one = c.ring.one()
    return {
        "e": ([x1, x2, y1], one),
        "s1": ([y1, x2], x1),
        "s2": ([x1, x2], y1),
        "s1s2": ([x2], x1 * y1),
        "s2s1": ([x2 + x1 * y1], x2),
        "w0": ([], x2 * (x2 + x1 * y1)),
    }


def _single(w, n=3):
    if isinstance(w, str):
        w = WeylElem.parse("s1" if w == "s" else w, n)
    if w.k != 1:
        raise ValueError("expected a single-factor element")
    return w


def _cut(ideal, diag, ring):
    """Add the diagonal variables and drop them: the zero fibre of kappa_1."""
    cut = (ideal + [ideal.ring.var(d) for d in diag]).eliminate(list(diag))
    return Ideal([g.to_ring(ring) for g in cut.groebner()] or [ring.zero()], ring)


@lru_cache(maxsize=None)
def _rederive(n, factor, cut):
    w = WeylElem([factor])
    if n == 2:
        ring = GL2_FULL_RING
        x, d1, d2, u = ring.gens()
        J = Ideal([d2 * x - x * (d1 + u * x)], ring)
        if w.is_identity():
            comp = J + [x]
        else:
            comp = J.saturate(x)
        return _cut(comp, ("d1", "d2"), GL2_RING) if cut else comp
    if n != 3:
        raise ValueError("only GL2 and GL3 charts are implemented")
    chart = Chart()
    eqs, open_cond = _gl3_cells(chart)[w.names()[0]]
    comp = Ideal(chart.incidence() + eqs, chart.ring)
    if not open_cond.is_constant():
        comp = comp.saturate(open_cond)
    return _cut(comp, DIAG_VARS, Z_RING) if cut else comp


def rederive_component(n, w, cut=True):
    """Ideal of the component indexed by ``w``, rebuilt from the incidence equations.

    With ``cut=False`` the diagonal variables are kept (the full component).
    """
    w = _single(w, n)
    if w.n != n:
        raise ValueError(f"{w!r} is not in S_{n}")
    return _rederive(n, w.factors[0], cut)


def iw0_gl3():
    """The ideal of the GL3 component for w0 in the zero fibre, as four generators."""
    p = Z_RING.parse
    gens = [p("u23*x2"), p("u12*(x2 + x1*y1)"), p("u12*x1 + u13*x2"),
            p("u23*y1 - u13*(x2 + x1*y1)")]
    return SteinbergComponent(WeylElem.longest(3), Ideal(gens, Z_RING))


def check_w0_oracle():
    """Compare the rederived w0 ideal with the four-generator ideal."""
    target = iw0_gl3().ideal
    got = rederive_component(3, WeylElem.longest(3))
    if not got.same_basis(target):
        raise ComponentMismatch(f"rederived {got.groebner()} != {target.groebner()}")
    return True


@dataclass
class SteinbergComponent:
    w: WeylElem
    ideal: Ideal
    _resolution: object = field(default=None, repr=False)
    _omega: object = field(default=None, repr=False)

    @property
    def ring(self):
        return self.ideal.ring

    def dim(self):
        return self.ideal.dim()

    def resolution(self):
        if self._resolution is None:
            self._resolution = free_resolution(self.ideal)
        return self._resolution

    def omega(self):
        if self._omega is None:
            self._omega = ext_top(self.ideal, self.resolution())
        return self._omega

    def contains_point(self, pt):
        return self.ideal.vanishes_at(pt)


def component(n, w):
    """Zero-fibre component as a :class:`SteinbergComponent`."""
    w = _single(w, n)
    return SteinbergComponent(w, rederive_component(n, w))


def omega_fiber(comp, pt):
    """Dimension of the fibre of the dualizing module at ``pt``."""
    if not comp.contains_point(pt):
        raise PointNotOnVariety(f"{pt} is not on the component")
    return comp.omega().fiber_dim(pt)


# -- the printed resolution --------------------------------------------------

TRANSCRIBED_A_PRIME = [["y1", "y1*u13 - u12"],
                 ["-x2", "0"],
                 ["x1", "u23"],
                 ["0", "-u12*u23"],
                 ["0", "-x2*u23"],
                 ["0", "x1*u12 + x2*u12"]]

TRANSCRIBED_A = [["-x2*u23", "-y1*u23", "0", "x2", "-y1*u13", "0"],
           ["x1*u12 + x2*u13", "y1*u13", "-y1*u12", "-y1", "0", "-y1*u13 + u12"],
           ["0", "x1", "x2", "0", "1", "0"],
           ["0", "0", "0", "-x2", "u12", "0"],
           ["0", "0", "0", "x1", "u13", "u23"]]

TRANSCRIBED_A_SECOND = [["x1*u12 + x2*u13", "x2*u23", "y1*u12*u23",
                   "x1*y1*u13 - y1*u23 + x2*u13", "x2*y1*u13 - x2*u12"]]

# The shortened list of relations printed for the dualizing module.
PRINTED_OMEGA_RELATIONS = [["y1", "y1*u13 - u12"], ["x2", "0"], ["x1", "u12"], ["0", "u12*u23"]]


def transcribed_matrices():
    """``(A'', A, A')`` exactly as printed, shapes 1x5, 5x6, 6x2."""
    return (ModMatrix.parse(Z_RING, TRANSCRIBED_A_SECOND),
            ModMatrix.parse(Z_RING, TRANSCRIBED_A),
            ModMatrix.parse(Z_RING, TRANSCRIBED_A_PRIME))


def check_resolution_gl3(a2, a, a1):
    """Run every check of the printed complex; returns a dict of named results."""
    checks = {}
    checks["A''A = 0"] = (a2 @ a).is_zero()
    checks["AA' = 0"] = (a @ a1).is_zero()
    try:
        checks["exact at F1"] = is_exact_at(a2, a)
    except PolyAlgError:
        checks["exact at F1"] = False
    try:
        checks["exact at F2"] = is_exact_at(a, a1)
    except PolyAlgError:
        checks["exact at F2"] = False
    from .polyalg.modules import syzygies
    checks["A' injective"] = syzygies(a1).cols == 0
    checks["A'' generates the ideal"] = Ideal(a2.entries[0], Z_RING) == iw0_gl3().ideal
    return checks


def transcribed_resolution_gl3(check=True):
    """The printed complex ``Z^2 -A'-> Z^6 -A-> Z^5 -A''-> Z`` as a resolution.

    With ``check`` the complex is verified and :class:`TranscriptionMismatch`
    is raised (carrying the individual results) if anything fails.
    """
    from .polyalg.modules import Resolution
    a2, a, a1 = transcribed_matrices()
    res = Resolution([a2, a, a1])
    if check:
        checks = check_resolution_gl3(a2, a, a1)
        failed = [k for k, ok in checks.items() if not ok]
        if failed:
            raise TranscriptionMismatch("printed complex fails: " + ", ".join(failed), checks, res)
    return res


def fallback_resolution_gl3():
    """Our own resolution starting from the same five generators.

    The first map keeps the redundant generator, so the ranks match the
    printed shape; later maps are minimalized.
    """
    gens = [Z_RING.parse(s) for s in TRANSCRIBED_A_SECOND[0]]
    return free_resolution(iw0_gl3().ideal, generators=gens)


# -- smoothness -----------------------------------------------------------

def tangent_dim_formula(w):
    """Tangent dimension of the GL3 component at the standard point.

    Schubert varieties of GL3/B are smooth, so the flag factor contributes
    ``3 + lg(w)``; the rest is ``dim t + lg(w0) - d_w``.
    """
    w = _single(w)
    if w.n != 3:
        raise ValueError("formula is for GL3")
    return 9 + coxeter_length(w) - reflection_length(w)


def is_smooth_formula(w):
    return tangent_dim_formula(w) == 9


def jacobian_crosscheck_w0():
    """Tangent dimension at the origin of the full w0 component (9 variables)."""
    I = rederive_component(3, WeylElem.longest(3), cut=False)
    return tangent_dim(I, [0] * FULL_RING.nvars)


def jacobian_tangent_dims():
    """Same computation for every component of the GL3 chart."""
    return {w.names()[0]: tangent_dim(rederive_component(3, w, cut=False), [0] * FULL_RING.nvars)
            for w in WeylElem.all(3)}


# -- sampling points -------------------------------------------------------

STRATA = ("equal_zero", "equal_nonzero", "distinct")


def _nonzero(rng, height):
    v = 0
    while v == 0:
        v = rng.randint(-height, height)
    return v


def sample_w0_points(stratum, count=10, seed=0, height=7):
    """Rational points of the w0 zero-fibre component in a given stratum.

    ``equal_zero``: flags equal and N = 0 (only the origin in this chart).
    ``equal_nonzero``: flags equal, N with all entries nonzero.
    ``distinct``: flags distinct; free coordinates are drawn nonzero, some
    flag coordinates are set to zero so that N can be nonzero, and N is a
    random element of the linear space allowed by the flag.
    """
    rng = random.Random(f"{stratum}:{seed}")
    I = iw0_gl3().ideal
    if stratum == "equal_zero":
        return [[0] * 6] * count
    if stratum == "equal_nonzero":
        return [[0, 0, 0] + [_nonzero(rng, height) for _ in range(3)] for _ in range(count)]
    if stratum != "distinct":
        raise ValueError(f"unknown stratum {stratum!r}")
    patterns = [(1, 1, 1), (1, 0, 1), (1, 0, 0), (0, 0, 1), (0, 1, 0), (1, 1, 0), (0, 1, 1)]
    points = []
    while len(points) < count:
        pattern = patterns[len(points) % len(patterns)]
        flag = [_nonzero(rng, height) if on else 0 for on in pattern]
        # the generators are linear in u once the flag is fixed
        sub = [g.subs(dict(zip(FLAG_VARS, flag))) for g in I.gens]
        rows = [[g.diff(name).constant_term() for name in NILP_VARS] for g in sub]
        basis = nullspace(rows, 3)
        u = [0, 0, 0]
        for b in basis:
            c = _nonzero(rng, height)
            u = [a + c * bi for a, bi in zip(u, b)]
        pt = flag + [int(v) if v.denominator == 1 else v for v in map(as_rat, u)]
        assert I.vanishes_at(pt)
        points.append(pt)
    return points


def classify_point(pt):
    flags_equal = all(v == 0 for v in pt[:3])
    n_zero = all(v == 0 for v in pt[3:])
    return flags_equal, n_zero


# -- products over embeddings ---------------------------------------------

_FLAG_CHOICES = ("equal", "distinct", "na")


@dataclass(frozen=True)
class PdRPointSpec:
    """Per embedding: the component ``w`` (in S3) and whether the two flags agree.

    For ``w = w0`` the matrix is taken to be zero and the flag choice is
    required; for other ``w`` it is ignored (``na``).
    """
    factors: tuple

    def __post_init__(self):
        if not self.factors:
            raise InvalidSpec("empty spec")
        for w, flags in self.factors:
            if flags not in _FLAG_CHOICES:
                raise InvalidSpec(f"flag choice must be one of {_FLAG_CHOICES}, got {flags!r}")
            if w == "w0" and flags == "na":
                raise InvalidSpec("the w0 component needs equal or distinct flags")

    @classmethod
    def parse(cls, text):
        factors = []
        for part in text.split(","):
            word, sep, flags = part.strip().partition(":")
            if not sep:
                raise InvalidSpec(f"expected word:flags, got {part!r}")
            try:
                w = WeylElem.parse(word, 3)
            except ValueError as exc:
                raise InvalidSpec(str(exc)) from None
            factors.append((w.names()[0], flags.strip()))
        return cls(tuple(factors))

    def __str__(self):
        return ",".join(f"{w}:{f}" for w, f in self.factors)

    @property
    def r(self):
        return sum(1 for w, f in self.factors if w == "w0" and f == "equal")


@lru_cache(maxsize=None)
def factor_omega_fiber(w, flags):
    """Fibre of the dualizing module of one factor at its distinguished point."""
    if w == "w0":
        comp = iw0_gl3()
        pt = [0] * 6 if flags == "equal" else [0, 0, 1, 0, 0, 0]
        return omega_fiber(comp, pt)
    return omega_fiber(component(3, w), [0] * 6)


def product_omega_fiber(spec):
    if isinstance(spec, str):
        spec = PdRPointSpec.parse(spec)
    out = 1
    for w, flags in spec.factors:
        out *= factor_omega_fiber(w, flags)
    return out


def all_specs(k):
    """The 3^k specs built from (w0, equal), (w0, distinct) and a smooth factor."""
    choices = [("w0", "equal"), ("w0", "distinct"), ("s1s2", "na")]
    out = [()]
    for _ in range(k):
        out = [p + (c,) for p in out for c in choices]
    return [PdRPointSpec(f) for f in out]


def is_smooth_classification():
    """``w -> (formula smooth, distinct simples)`` for every w in S3."""
    return {w.names()[0]: (is_smooth_formula(w), is_product_of_distinct_simples(w))
            for w in WeylElem.all(3)}
