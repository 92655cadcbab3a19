class PolyAlgError(Exception):
    pass


class DegreeBound(PolyAlgError):
    """An S-pair exceeded the optional degree safety bound."""


class LengthExceeded(PolyAlgError):
    """A free resolution did not terminate within the requested length."""


class NotAComplex(PolyAlgError):
    """Two maps that should compose to zero do not."""


class NotCM(PolyAlgError):
    """The resolution is longer than the codimension."""


class PointNotOnVariety(PolyAlgError):
    """A generator does not vanish at the requested point."""
