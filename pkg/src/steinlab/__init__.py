"""Exact verification toolkit: Weyl group combinatorics, commutative algebra
over QQ, local models of Steinberg-type varieties, category O shadows and
prime splitting in number fields."""

from .report import CheckItem, VerificationReport

__version__ = "0.1.0"

__all__ = ["CheckItem", "VerificationReport", "__version__"]
