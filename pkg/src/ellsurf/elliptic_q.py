"""Short Weierstrass curves y^2 = x^3 + A x + B over Q."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from sympy import factorint

from .algebra import INFINITY, as_rational, rational_to_str
from .errors import InvalidInput

# Mazur: a rational torsion point has order at most 12.
MAZUR_BOUND = 12


@dataclass(frozen=True)
class CurveQ:
    A: Fraction
    B: Fraction

    def __post_init__(self):
        object.__setattr__(self, "A", as_rational(self.A))
        object.__setattr__(self, "B", as_rational(self.B))
        if self.disc_quantity == 0:
            raise InvalidInput(f"singular curve: 4A^3 + 27B^2 = 0 for A={self.A}, B={self.B}")

    @property
    def disc_quantity(self) -> Fraction:
        """4A^3 + 27B^2, the quantity appearing in the Lutz-Nagell bound."""
        return 4 * self.A**3 + 27 * self.B**2

    @property
    def discriminant(self) -> Fraction:
        return -16 * self.disc_quantity

    def is_integral(self) -> bool:
        return self.A.denominator == 1 and self.B.denominator == 1

    def __str__(self):
        return f"y^2 = x^3 + ({rational_to_str(self.A)})x + ({rational_to_str(self.B)})"

    def to_json(self) -> dict:
        return {"A": rational_to_str(self.A), "B": rational_to_str(self.B)}

    @classmethod
    def from_json(cls, data) -> "CurveQ":
        if not isinstance(data, dict) or set(data) != {"A", "B"}:
            raise InvalidInput("curve must be {'A': str, 'B': str}")
        return cls(as_rational(data["A"]), as_rational(data["B"]))


@dataclass(frozen=True)
class PointQ:
    """An affine point, or the identity when ``x`` and ``y`` are both None."""

    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise InvalidInput("point needs both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", as_rational(self.x))
            object.__setattr__(self, "y", as_rational(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def is_integral(self) -> bool:
        return self.is_infinity or (self.x.denominator == 1 and self.y.denominator == 1)

    def __str__(self):
        if self.is_infinity:
            return "O"
        return f"({rational_to_str(self.x)}, {rational_to_str(self.y)})"

    def to_json(self) -> dict:
        if self.is_infinity:
            return {"inf": True}
        return {"x": rational_to_str(self.x), "y": rational_to_str(self.y)}

    @classmethod
    def from_json(cls, data) -> "PointQ":
        if not isinstance(data, dict):
            raise InvalidInput("point must be a JSON object")
        if data.get("inf") is True and set(data) == {"inf"}:
            return O
        if set(data) == {"x", "y"}:
            return cls(as_rational(data["x"]), as_rational(data["y"]))
        raise InvalidInput("point must be {'inf': true} or {'x': str, 'y': str}")


O = PointQ()


def on_curve(E: CurveQ, P: PointQ) -> bool:
    if P.is_infinity:
        return True
    return P.y**2 == P.x**3 + E.A * P.x + E.B


def neg(E: CurveQ, P: PointQ) -> PointQ:
    if P.is_infinity:
        return P
    return PointQ(P.x, -P.y)


def add(E: CurveQ, P: PointQ, Q: PointQ) -> PointQ:
    if P.is_infinity:
        return Q
    if Q.is_infinity:
        return P
    if P.x == Q.x:
        if P.y != Q.y or P.y == 0:
            return O
        slope = (3 * P.x**2 + E.A) / (2 * P.y)
    else:
        slope = (Q.y - P.y) / (Q.x - P.x)
    x3 = slope**2 - P.x - Q.x
    y3 = slope * (P.x - x3) - P.y
    return PointQ(x3, y3)


def scalar_mul(E: CurveQ, n: int, P: PointQ) -> PointQ:
    if n < 0:
        return neg(E, scalar_mul(E, -n, P))
    result, base = O, P
    while n:
        if n & 1:
            result = add(E, result, base)
        base = add(E, base, base)
        n >>= 1
    return result


def _integral_scale(A: Fraction, B: Fraction) -> int:
    u = 1
    primes = set(factorint(A.denominator)) | set(factorint(B.denominator))
    for p in primes:
        ea = _pval(A.denominator, p)
        eb = _pval(B.denominator, p)
        # need 4 v_p(u) >= ea and 6 v_p(u) >= eb
        k = max(-(-ea // 4), -(-eb // 6))
        u *= p**k
    return u


def _pval(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def to_integral_model(E: CurveQ, P: PointQ = O) -> tuple[CurveQ, PointQ, int]:
    """Scale (x, y) -> (u^2 x, u^3 y) by the least u > 0 making A, B integral."""
    u = _integral_scale(E.A, E.B)
    E2 = CurveQ(E.A * u**4, E.B * u**6)
    return E2, transform_point(P, u), u


def transform_point(P: PointQ, u) -> PointQ:
    if P.is_infinity:
        return P
    return PointQ(P.x * u**2, P.y * u**3)


def lutz_nagell_reject(E: CurveQ, P: PointQ) -> bool:
    """True when P provably has infinite order on the integral model E.

    A False answer is inconclusive: P merely passes the filter.
    """
    if not E.is_integral():
        raise InvalidInput("Lutz-Nagell needs integer coefficients A, B")
    if P.is_infinity:
        raise InvalidInput("Lutz-Nagell filter is undefined at the identity")
    if not P.is_integral():
        return True
    if P.y == 0:
        return False
    return int(E.disc_quantity) % int(P.y) ** 2 != 0


@dataclass(frozen=True)
class TorsionResult:
    """Outcome of :func:`torsion_analysis`.

    ``order`` is an int or ``INFINITY``.  When infinite order is certified
    by Lutz-Nagell, ``witness_multiple`` and ``witness_point`` give the
    multiple m and the point mP (on the integral model) that failed it.
    """

    order: object
    integral_curve: CurveQ
    integral_point: PointQ
    scale: int
    witness_multiple: Optional[int] = None
    witness_point: Optional[PointQ] = None
    reason: str = ""

    @property
    def is_torsion(self) -> bool:
        return self.order is not INFINITY

    def to_json(self) -> dict:
        out = {
            "order": "infinite" if self.order is INFINITY else self.order,
            "integral_curve": self.integral_curve.to_json(),
            "integral_point": self.integral_point.to_json(),
            "scale": self.scale,
            "reason": self.reason,
        }
        if self.witness_multiple is not None:
            out["witness_multiple"] = self.witness_multiple
            out["witness_point"] = self.witness_point.to_json()
        return out


def torsion_analysis(E: CurveQ, P: PointQ) -> TorsionResult:
    if not on_curve(E, P):
        raise InvalidInput(f"point {P} is not on {E}")
    E1, P1, u = to_integral_model(E, P)
    for m in range(1, MAZUR_BOUND + 1):
        Q = scalar_mul(E1, m, P1)
        if Q.is_infinity:
            return TorsionResult(m, E1, P1, u, reason=f"{m}P = O")
        if lutz_nagell_reject(E1, Q):
            why = "non-integral coordinates" if not Q.is_integral() else "y^2 does not divide 4A^3+27B^2"
            return TorsionResult(INFINITY, E1, P1, u, m, Q, reason=f"Lutz-Nagell rejects {m}P: {why}")
    return TorsionResult(INFINITY, E1, P1, u, reason=f"no multiple up to {MAZUR_BOUND} vanishes (Mazur bound)")


def torsion_order(E: CurveQ, P: PointQ):
    """Order of P as an int in 1..12, or ``INFINITY``."""
    return torsion_analysis(E, P).order
