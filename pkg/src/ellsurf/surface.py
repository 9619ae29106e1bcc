"""Weierstrass elliptic surfaces over a hyperelliptic base curve.

The base B is the smooth model of w^2 = prod(t - lambda_i) with an odd
number of lambdas, so that infinity is a branch point and t has pole
divisor 2*inf.  With L = O_B(d*inf), a polynomial h(t) of degree e is a
section of L^k when 2e <= k*d, and its order at inf is k*d - 2e.

Affine places are not enumerated as algebraic points.  Instead the
discriminant, a4, a6 and the branch polynomial are refined into a coprime
basis of monic squarefree factors over Q; every root of one factor sees
the same vanishing orders and the same ramification, so one report per
factor suffices.  A factor of degree e stands for e points of B when it
divides the branch polynomial and 2e points otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .algebra import (
    INFINITY,
    Polynomial,
    as_rational,
    coprime_basis,
    evaluate,
    poly_gcd,
    rational_to_str,
    squarefree_decomposition,
    valuation_at,
)
from .elliptic_ft import CurveFT, is_isotrivial
from .errors import InvalidInput, InvariantViolation, SingularEquation

T = Polynomial.t()
# D(t) = 4(t^2+1)^3 + 27
D_POLY = 4 * (T**2 + 1) ** 3 + 27


def order_to_json(v):
    return "inf" if v is INFINITY else v


# ---------------------------------------------------------------- base curve


@dataclass(frozen=True)
class LambdaCheck:
    ok: bool
    condition: Optional[str] = None
    indices: tuple[int, ...] = ()
    D_values: tuple[Fraction, ...] = ()

    def __bool__(self):
        return self.ok

    @property
    def message(self) -> str:
        if self.ok:
            return "lambdas valid"
        idx = ",".join(map(str, self.indices))
        return f"{self.condition}: violated at index {idx}"

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "condition": self.condition,
            "indices": list(self.indices),
            "D_values": [rational_to_str(v) for v in self.D_values],
        }


def validate_lambdas(lambdas, D: Optional[Polynomial] = None) -> LambdaCheck:
    """Check the lambdas are distinct, nonzero and (given D) not roots of D.

    Accepts a :class:`HyperellipticBase` or a plain sequence.  Indices in
    the diagnostic are 1-based.
    """
    lambdas = [as_rational(v) for v in getattr(lambdas, "lambdas", lambdas)]
    seen: dict[Fraction, int] = {}
    for i, lam in enumerate(lambdas, 1):
        if lam in seen:
            return LambdaCheck(False, "lambdas distinct", (seen[lam], i))
        seen[lam] = i
    for i, lam in enumerate(lambdas, 1):
        if lam == 0:
            return LambdaCheck(False, "lambda nonzero", (i,))
    values: tuple[Fraction, ...] = ()
    if D is not None:
        values = tuple(evaluate(D, lam) for lam in lambdas)
        for i, v in enumerate(values, 1):
            if v == 0:
                return LambdaCheck(False, "lambda not a root of D", (i,), values)
    return LambdaCheck(True, D_values=values)


@dataclass(frozen=True)
class HyperellipticBase:
    """w^2 = prod(t - lambda_i); branch points are the lambdas and infinity."""

    lambdas: tuple[Fraction, ...]
    branch_poly: Polynomial = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lambdas = tuple(as_rational(v) for v in self.lambdas)
        if len(lambdas) < 3 or len(lambdas) % 2 == 0:
            raise InvalidInput(f"need an odd number >= 3 of lambdas, got {len(lambdas)}")
        check = validate_lambdas(lambdas)
        if not check:
            raise InvalidInput(check.message)
        object.__setattr__(self, "lambdas", lambdas)
        object.__setattr__(self, "branch_poly", Polynomial.from_roots(lambdas))

    @property
    def genus(self) -> int:
        return base_genus(self)

    @property
    def n_branch_points(self) -> int:
        return len(self.lambdas) + 1


def base_genus(base: HyperellipticBase) -> int:
    # Riemann-Hurwitz for a double cover of P^1 with r branch points
    return (base.n_branch_points - 2) // 2


# ------------------------------------------------------------ surface data


def discriminant_polynomial(a4: Polynomial, a6: Polynomial) -> Polynomial:
    return -16 * (4 * a4**3 + 27 * a6**2)


@dataclass(frozen=True)
class WeierstrassSurfaceData:
    base: HyperellipticBase
    a4: Polynomial
    a6: Polynomial
    line_bundle_degree: int = 1

    def __post_init__(self):
        d = self.line_bundle_degree
        if d < 1:
            raise InvalidInput("line bundle degree must be positive")
        for name, h, k in (("a4", self.a4, 4), ("a6", self.a6, 6)):
            if h.degree is not None and 2 * h.degree > k * d:
                raise InvalidInput(
                    f"section degree bound: deg {name} = {h.degree} exceeds {k * d // 2}"
                )
        if discriminant_polynomial(self.a4, self.a6).is_zero():
            raise SingularEquation("singular equation: discriminant vanishes identically")

    @property
    def genus(self) -> int:
        return base_genus(self.base)

    @property
    def curve(self) -> CurveFT:
        return CurveFT(self.a4, self.a6)

    def to_json(self) -> dict:
        out = {
            "genus": self.genus,
            "lambdas": [rational_to_str(v) for v in self.base.lambdas],
            "a4": self.a4.to_json(),
            "a6": self.a6.to_json(),
        }
        if self.line_bundle_degree != 1:
            out["line_bundle_degree"] = self.line_bundle_degree
        return out

    @classmethod
    def from_json(cls, data) -> "WeierstrassSurfaceData":
        if not isinstance(data, dict):
            raise InvalidInput("surface data must be a JSON object")
        required = {"genus", "lambdas", "a4", "a6"}
        missing = required - set(data)
        extra = set(data) - required - {"line_bundle_degree"}
        if missing or extra:
            raise InvalidInput(f"surface data keys: missing {sorted(missing)}, unexpected {sorted(extra)}")
        genus = data["genus"]
        if not isinstance(genus, int) or isinstance(genus, bool) or genus < 1:
            raise InvalidInput("genus must be a positive integer")
        lambdas = data["lambdas"]
        if not isinstance(lambdas, list):
            raise InvalidInput("lambdas must be a list")
        if len(lambdas) != 2 * genus + 1:
            raise InvalidInput(f"genus {genus} needs {2 * genus + 1} lambdas, got {len(lambdas)}")
        d = data.get("line_bundle_degree", 1)
        if not isinstance(d, int) or isinstance(d, bool):
            raise InvalidInput("line_bundle_degree must be an integer")
        base = HyperellipticBase(tuple(as_rational(v) for v in lambdas))
        return cls(base, Polynomial.from_json(data["a4"]), Polynomial.from_json(data["a6"]), d)


def discriminant_section(data: WeierstrassSurfaceData) -> Polynomial:
    delta = discriminant_polynomial(data.a4, data.a6)
    if delta.is_zero():
        raise SingularEquation("singular equation: discriminant vanishes identically")
    return delta


def infinity_order(h: Polynomial, k: int, line_bundle_degree: int = 1):
    """Order at infinity of h viewed as a section of L^k."""
    if h.is_zero():
        return INFINITY
    budget = k * line_bundle_degree
    if 2 * h.degree > budget:
        raise InvalidInput(f"degree {h.degree} polynomial is not a section of L^{k}")
    return budget - 2 * h.degree


# ------------------------------------------------------------ Kodaira types

_EULER = {"II": 2, "III": 3, "IV": 4, "IV*": 8, "III*": 9, "II*": 10}


@dataclass(frozen=True)
class KodairaType:
    family: str  # "I", "I*", "II", ..., "NON-MINIMAL"
    n: int = 0

    @property
    def euler_number(self) -> Optional[int]:
        if self.family == "I":
            return self.n
        if self.family == "I*":
            return 6 + self.n
        return _EULER.get(self.family)

    @property
    def is_singular(self) -> bool:
        return not (self.family == "I" and self.n == 0)

    def __str__(self):
        if self.family == "I":
            return f"I{self.n}"
        if self.family == "I*":
            return f"I{self.n}*"
        return self.family


I0 = KodairaType("I", 0)
I1 = KodairaType("I", 1)
NON_MINIMAL = KodairaType("NON-MINIMAL")


def _check_orders(v4, v6, vd):
    if not isinstance(vd, int) or vd < 0:
        raise InvariantViolation(f"discriminant order must be a finite nonnegative int, got {vd!r}")
    if v4 == 0 and v6 == 0:
        return
    lhs, rhs = 3 * v4, 2 * v6
    lo = min(lhs, rhs)
    if lhs != rhs:
        if vd != lo:
            raise InvariantViolation(f"orders ({v4}, {v6}, {vd}) inconsistent: expected ord(Delta) = {lo}")
    elif vd < lo:
        raise InvariantViolation(f"orders ({v4}, {v6}, {vd}) inconsistent: expected ord(Delta) >= {lo}")


def classify_fiber(v_a4, v_a6, v_delta) -> KodairaType:
    """Kodaira type from vanishing orders of a4, a6 and the discriminant.

    Orders may be ``INFINITY`` for a vanishing coefficient.  Characteristic 0.
    """
    v4, v6, vd = v_a4, v_a6, v_delta
    _check_orders(v4, v6, vd)
    if vd == 0:
        return I0
    if v4 >= 4 and v6 >= 6:
        return NON_MINIMAL
    if v4 == 0:
        return KodairaType("I", vd)
    if v6 == 1:
        return KodairaType("II")
    if v4 == 1:
        return KodairaType("III")
    if v6 == 2:
        return KodairaType("IV")
    if v4 == 2 or v6 == 3:
        if v4 == 2 and v6 == 3:
            return KodairaType("I*", vd - 6)
        return KodairaType("I*", 0)
    if v6 == 4:
        return KodairaType("IV*")
    if v4 == 3:
        return KodairaType("III*")
    if v6 == 5:
        return KodairaType("II*")
    raise InvariantViolation(f"unclassifiable orders ({v4}, {v6}, {vd})")


# ------------------------------------------------------------ place analysis

INF_LOCUS = "inf"


@dataclass(frozen=True)
class PlaceReport:
    locus: Union[Polynomial, str]
    branch: bool
    points_on_B: int
    v_a4: object
    v_a6: object
    v_delta: int
    kodaira_type: KodairaType
    euler_number: Optional[int]

    @property
    def is_infinity(self) -> bool:
        return self.locus == INF_LOCUS

    def to_json(self) -> dict:
        return {
            "locus": INF_LOCUS if self.is_infinity else self.locus.to_json(),
            "branch": self.branch,
            "points_on_B": self.points_on_B,
            "v_a4": order_to_json(self.v_a4),
            "v_a6": order_to_json(self.v_a6),
            "v_delta": self.v_delta,
            "kodaira_type": str(self.kodaira_type),
            "euler_number": self.euler_number,
        }


@dataclass(frozen=True)
class SurfaceReport:
    places: tuple[PlaceReport, ...]
    total_euler: int
    chi: Optional[int]
    minimal: bool
    base_genus: int
    isotrivial: bool
    discriminant: Polynomial
    weighted_delta_order: int

    @property
    def singular_points_on_B(self) -> int:
        return sum(p.points_on_B for p in self.places)

    @property
    def affine_t_roots(self) -> int:
        """Number of distinct complex t-values under the affine singular places."""
        return sum(p.locus.degree for p in self.places if not p.is_infinity)

    def type_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for p in self.places:
            key = str(p.kodaira_type)
            counts[key] = counts.get(key, 0) + p.points_on_B
        return counts

    def to_json(self) -> dict:
        return {
            "places": [p.to_json() for p in self.places],
            "total_euler": self.total_euler,
            "chi": self.chi,
            "minimal": self.minimal,
            "base_genus": self.base_genus,
            "isotrivial": self.isotrivial,
            "discriminant": self.discriminant.to_json(),
            "singular_points_on_B": self.singular_points_on_B,
            "affine_t_roots": self.affine_t_roots,
            "type_counts": self.type_counts(),
        }


def _squarefree_parts(p: Polynomial) -> list[Polynomial]:
    if p.is_zero():
        return []
    return [part for part, _ in squarefree_decomposition(p)[1]]


def place_basis(data: WeierstrassSurfaceData) -> list[Polynomial]:
    """Coprime basis separating multiplicity classes of Delta, a4, a6 and branch points."""
    delta = discriminant_section(data)
    pieces = _squarefree_parts(delta) + _squarefree_parts(data.a4) + _squarefree_parts(data.a6)
    pieces.append(data.base.branch_poly)
    basis = coprime_basis(pieces)
    branch = data.base.branch_poly
    for q in basis:
        divides = q.divides(branch)
        coprime = poly_gcd(q, branch).degree == 0
        if divides == coprime:
            raise InvariantViolation(f"basis factor {q} splits against the branch polynomial")
    return basis


def _affine_orders(data, q, delta):
    branch = q.divides(data.base.branch_poly)
    mult = 2 if branch else 1
    v4 = mult * valuation_at(data.a4, q)
    v6 = mult * valuation_at(data.a6, q)
    vd = mult * valuation_at(delta, q)
    points = q.degree if branch else 2 * q.degree
    return branch, points, v4, v6, vd


def _infinity_orders(data, delta):
    d = data.line_bundle_degree
    return (
        infinity_order(data.a4, 4, d),
        infinity_order(data.a6, 6, d),
        infinity_order(delta, 12, d),
    )


def fiber_analysis(data: WeierstrassSurfaceData) -> SurfaceReport:
    delta = discriminant_section(data)
    places = []
    for q in place_basis(data):
        branch, points, v4, v6, vd = _affine_orders(data, q, delta)
        if vd == 0:
            continue
        kt = classify_fiber(v4, v6, vd)
        places.append(PlaceReport(q, branch, points, v4, v6, vd, kt, kt.euler_number))
    v4, v6, vd = _infinity_orders(data, delta)
    if vd > 0:
        kt = classify_fiber(v4, v6, vd)
        places.append(PlaceReport(INF_LOCUS, True, 1, v4, v6, vd, kt, kt.euler_number))

    expected = 12 * data.line_bundle_degree
    weighted = sum(p.points_on_B * p.v_delta for p in places)
    if weighted != expected:
        raise InvariantViolation(f"place-weighted ord(Delta) = {weighted}, expected {expected}")

    minimal = all(p.kodaira_type != NON_MINIMAL for p in places)
    total_euler = sum(p.points_on_B * p.euler_number for p in places if p.euler_number is not None)
    chi = None
    if minimal:
        if total_euler % 12:
            raise InvariantViolation(f"total Euler number {total_euler} is not divisible by 12")
        chi = total_euler // 12
    return SurfaceReport(
        places=tuple(places),
        total_euler=total_euler,
        chi=chi,
        minimal=minimal,
        base_genus=data.genus,
        isotrivial=is_isotrivial(data.curve),
        discriminant=delta,
        weighted_delta_order=weighted,
    )


def non_minimal_places(data: WeierstrassSurfaceData) -> list:
    """Places of B where ord(a4) >= 4 and ord(a6) >= 6 (checked directly, not via Delta)."""
    bad = []
    if not data.a4.is_zero() and not data.a6.is_zero():
        common = poly_gcd(data.a4, data.a6)
        candidates = [q for q in place_basis(data) if q.divides(common)]
    else:
        candidates = place_basis(data)
    for q in candidates:
        mult = 2 if q.divides(data.base.branch_poly) else 1
        v4 = mult * valuation_at(data.a4, q)
        v6 = mult * valuation_at(data.a6, q)
        if v4 >= 4 and v6 >= 6:
            bad.append(q)
    v4, v6, _ = _infinity_orders(data, discriminant_section(data))
    if v4 >= 4 and v6 >= 6:
        bad.append(INF_LOCUS)
    return bad


def is_minimal(data: WeierstrassSurfaceData) -> bool:
    return not non_minimal_places(data)


def section_self_intersection(data: WeierstrassSurfaceData) -> tuple[int, int]:
    """(C^2, g(C)) for any section C of a minimal model.

    C is isomorphic to B.  Adjunction with omega_X = f^*(omega_B + L) gives
    2g - 2 = C^2 + (2g - 2 + deg L), so C^2 = -deg L.
    """
    if not is_minimal(data):
        raise InvalidInput("self-intersection formula needs minimal Weierstrass data")
    return -data.line_bundle_degree, data.genus
