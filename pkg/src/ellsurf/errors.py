class EllSurfError(Exception):
    pass


class InvalidInput(EllSurfError, ValueError):
    """Malformed or out-of-contract input."""


class SingularEquation(EllSurfError):
    """The Weierstrass discriminant vanishes identically."""


class BadFiber(EllSurfError):
    """Specialization requested at a parameter where the fiber is singular."""


class PoleError(EllSurfError):
    """A section coordinate has a pole at the specialization parameter."""


class InvariantViolation(EllSurfError, AssertionError):
    """An internal consistency check failed."""
