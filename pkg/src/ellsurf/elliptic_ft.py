"""The generic fiber y^2 = x^3 + a4(t) x + a6(t) over Q(t)."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import (
    Polynomial,
    RationalFunction,
    as_rational,
    evaluate,
    rational_to_str,
)
from .elliptic_q import CurveQ, PointQ
from .errors import BadFiber, InvalidInput, PoleError, SingularEquation


@dataclass(frozen=True)
class CurveFT:
    a4: Polynomial
    a6: Polynomial

    def __post_init__(self):
        if self.disc_quantity.is_zero():
            raise SingularEquation("singular generic fiber: 4a4^3 + 27a6^2 = 0")

    @property
    def disc_quantity(self) -> Polynomial:
        return 4 * self.a4**3 + 27 * self.a6**2

    @property
    def discriminant(self) -> Polynomial:
        return -16 * self.disc_quantity

    def to_json(self) -> dict:
        return {"a4": self.a4.to_json(), "a6": self.a6.to_json()}


@dataclass(frozen=True)
class SectionFT:
    """Point of E(Q(t)); both coordinates None means the zero section."""

    x: Optional[RationalFunction] = None
    y: Optional[RationalFunction] = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise InvalidInput("section needs both coordinates or neither")
        if self.x is not None:
            for name in ("x", "y"):
                value = RationalFunction._coerce(getattr(self, name))
                if value is NotImplemented:
                    raise InvalidInput(f"section {name}-coordinate must be a rational function")
                object.__setattr__(self, name, value)

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self):
        if self.is_infinity:
            return "O"
        return f"({self.x}, {self.y})"

    def to_json(self) -> dict:
        if self.is_infinity:
            return {"inf": True}
        return {"x": self.x.to_json(), "y": self.y.to_json()}

    @classmethod
    def from_json(cls, data) -> "SectionFT":
        if not isinstance(data, dict):
            raise InvalidInput("section must be a JSON object")
        if data.get("inf") is True and set(data) == {"inf"}:
            return ZERO_SECTION
        if set(data) == {"x", "y"}:
            return cls(RationalFunction.from_json(data["x"]), RationalFunction.from_json(data["y"]))
        raise InvalidInput("section must be {'inf': true} or {'x': {...}, 'y': {...}}")


ZERO_SECTION = SectionFT()


def on_curve_ft(E: CurveFT, S: SectionFT) -> bool:
    if S.is_infinity:
        return True
    return S.y**2 == S.x**3 + E.a4 * S.x + E.a6


def neg_ft(E: CurveFT, S: SectionFT) -> SectionFT:
    if S.is_infinity:
        return S
    return SectionFT(S.x, -S.y)


def add_ft(E: CurveFT, S: SectionFT, T: SectionFT) -> SectionFT:
    if S.is_infinity:
        return T
    if T.is_infinity:
        return S
    if S.x == T.x:
        if S.y != T.y or S.y.is_zero():
            return ZERO_SECTION
        lam = (3 * S.x**2 + E.a4) / (2 * S.y)
    else:
        lam = (T.y - S.y) / (T.x - S.x)
    x3 = lam**2 - S.x - T.x
    y3 = lam * (S.x - x3) - S.y
    return SectionFT(x3, y3)


def scalar_mul_ft(E: CurveFT, n: int, S: SectionFT) -> SectionFT:
    if n < 0:
        return neg_ft(E, scalar_mul_ft(E, -n, S))
    result, base = ZERO_SECTION, S
    while n:
        if n & 1:
            result = add_ft(E, result, base)
        n >>= 1
        if n:
            base = add_ft(E, base, base)
    return result


def j_invariant(E: CurveFT) -> RationalFunction:
    four_a4_cubed = 4 * E.a4**3
    return RationalFunction(1728 * four_a4_cubed, four_a4_cubed + 27 * E.a6**2)


def is_isotrivial(E: CurveFT) -> bool:
    return j_invariant(E).is_constant()


def specialize(E: CurveFT, S: SectionFT, b) -> tuple[CurveQ, PointQ]:
    """Restrict E and S to the fiber t = b."""
    b = as_rational(b)
    if evaluate(E.disc_quantity, b) == 0:
        raise BadFiber(f"discriminant vanishes at t = {rational_to_str(b)}")
    fiber = CurveQ(evaluate(E.a4, b), evaluate(E.a6, b))
    if S.is_infinity:
        return fiber, PointQ()
    for name, f in (("x", S.x), ("y", S.y)):
        if evaluate(f.den, b) == 0:
            raise PoleError(f"{name}-coordinate has a pole at t = {rational_to_str(b)}")
    return fiber, PointQ(S.x(b), S.y(b))


def coordinate_degrees(f: RationalFunction) -> tuple[Optional[int], int]:
    """(deg num, deg den); the zero numerator reports None."""
    return f.num.degree, f.den.degree


def height_degree(S: SectionFT) -> int:
    """max numerator/denominator degree of x(S); 0 for the zero section."""
    if S.is_infinity:
        return 0
    return max(S.x.num.degree or 0, S.x.den.degree)


def section_from_constants(x, y) -> SectionFT:
    return SectionFT(RationalFunction(as_rational(x)), RationalFunction(as_rational(y)))
