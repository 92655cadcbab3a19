"""Exact commutative algebra over QQ: polynomials, Groebner bases, syzygies,
free resolutions, Ext and fibre dimensions."""

from .errors import (DegreeBound, LengthExceeded, NotAComplex, NotCM, PointNotOnVariety,
                     PolyAlgError)
from .ideal import Ideal, groebner
from .linalg import nullspace, rank
from .modules import (ModMatrix, Presentation, Resolution, ext_top, fiber_dim, free_resolution,
                      in_column_module, is_exact_at, jacobian, module_gb, syzygies, tangent_dim)
from .poly import GREVLEX, LEX, QQ, MonomialOrder, Poly, Ring, parse_poly

__all__ = [
    "DegreeBound", "LengthExceeded", "NotAComplex", "NotCM", "PointNotOnVariety", "PolyAlgError",
    "Ideal", "groebner", "nullspace", "rank", "ModMatrix", "Presentation", "Resolution",
    "ext_top", "fiber_dim", "free_resolution", "in_column_module", "is_exact_at", "jacobian",
    "module_gb", "syzygies", "tangent_dim", "GREVLEX", "LEX", "QQ", "MonomialOrder", "Poly",
    "Ring", "parse_poly",
]
