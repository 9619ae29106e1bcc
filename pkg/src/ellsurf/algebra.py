"""Exact univariate algebra over the rationals in the variable ``t``.

Scalars are :class:`fractions.Fraction`.  Polynomials are dense, stored
lowest degree first, and always stripped of trailing zeros, so two equal
polynomials have identical coefficient tuples.  The zero polynomial has
``degree`` equal to ``None``; callers must handle it explicitly.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Sequence, Union

from .errors import InvalidInput

Rational = Fraction
Scalar = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and strings like ``"-9/8"`` to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidInput(f"not a rational: {value!r}")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            pass
    raise InvalidInput(f"not a rational: {value!r}")


def rational_to_str(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class _Infinity:
    """Order of vanishing of the zero section.

    Compares greater than every integer, and absorbs multiplication by
    positive integers so that order-doubling rules stay total.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("ellsurf.INFINITY")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __mul__(self, k):
        if isinstance(k, int) and k > 0:
            return self
        return NotImplemented

    __rmul__ = __mul__


INFINITY = _Infinity()


class Polynomial:
    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        c = [as_rational(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def const(cls, c: Scalar) -> "Polynomial":
        return cls((c,))

    @classmethod
    def t(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> "Polynomial":
        p = cls.const(1)
        for r in roots:
            p = p * cls((-as_rational(r), 1))
        return p

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._c

    @property
    def degree(self) -> int | None:
        return len(self._c) - 1 if self._c else None

    @property
    def lc(self) -> Fraction:
        if not self._c:
            raise InvalidInput("zero polynomial has no leading coefficient")
        return self._c[-1]

    def is_zero(self) -> bool:
        return not self._c

    def is_constant(self) -> bool:
        return len(self._c) <= 1

    def monic(self) -> "Polynomial":
        if not self._c:
            return self
        lc = self._c[-1]
        return Polynomial(a / lc for a in self._c)

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        return hash(("Polynomial", self._c))

    def __repr__(self):
        return f"Polynomial({[rational_to_str(a) for a in self._c]})"

    def __str__(self):
        if not self._c:
            return "0"
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            a = self._c[k]
            if a == 0:
                continue
            mag = abs(a)
            sign = "-" if a < 0 else "+"
            if k == 0:
                body = rational_to_str(mag)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if mag == 1 else f"{rational_to_str(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.const(other)
        return NotImplemented

    def __neg__(self):
        return Polynomial(-a for a in self._c)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return Polynomial()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise InvalidInput("negative polynomial power")
        result, base = Polynomial.const(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._c:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = len(other._c) - 1
        lc = other._c[-1]
        quo = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lc
            quo[k] = c
            if c:
                for j, b in enumerate(other._c):
                    rem[k + j] -= c * b
        return Polynomial(quo), Polynomial(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def divides(self, other: "Polynomial") -> bool:
        """True iff ``self`` divides ``other`` exactly."""
        if not self._c:
            return not other._c
        return (other % self).is_zero()

    def exact_div(self, other: "Polynomial") -> "Polynomial":
        q, r = divmod(self, other)
        if r:
            raise InvalidInput(f"{other} does not divide {self}")
        return q

    def __call__(self, b: Scalar) -> Fraction:
        return evaluate(self, b)

    def to_json(self) -> list[str]:
        return [rational_to_str(a) for a in self._c]

    @classmethod
    def from_json(cls, data: Sequence) -> "Polynomial":
        if not isinstance(data, (list, tuple)):
            raise InvalidInput("polynomial must be a coefficient array")
        return cls(as_rational(a) for a in data)


ZERO = Polynomial()
ONE = Polynomial.const(1)
T = Polynomial.t()


def derivative(p: Polynomial) -> Polynomial:
    return Polynomial(k * a for k, a in enumerate(p.coeffs) if k)


def evaluate(p: Polynomial, b: Scalar) -> Fraction:
    b = as_rational(b)
    acc = Fraction(0)
    for a in reversed(p.coeffs):
        acc = acc * b + a
    return acc


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm (remainders kept monic)."""
    if a.is_zero() and b.is_zero():
        raise InvalidInput("gcd of two zero polynomials")
    a, b = a.monic(), b.monic()
    while b:
        a, b = b, (a % b).monic()
    return a


def squarefree_decomposition(p: Polynomial) -> tuple[Fraction, list[tuple[Polynomial, int]]]:
    """Yun's algorithm.

    Returns ``(c, [(f_i, m_i), ...])`` with ``p == c * prod(f_i ** m_i)``,
    the ``f_i`` monic, squarefree, pairwise coprime and nonconstant, and
    the multiplicities strictly increasing.
    """
    if p.is_zero():
        raise InvalidInput("squarefree decomposition of the zero polynomial")
    c = p.lc
    f = p.monic()
    parts: list[tuple[Polynomial, int]] = []
    if f.degree == 0:
        return c, parts
    df = derivative(f)
    a = poly_gcd(f, df)
    b = f.exact_div(a)
    d = df.exact_div(a) - derivative(b)
    i = 1
    while b.degree > 0:
        g = poly_gcd(b, d)
        if g.degree > 0:
            parts.append((g, i))
        b = b.exact_div(g)
        d = d.exact_div(g) - derivative(b)
        i += 1
    return c, parts


def coprime_basis(polys: Sequence[Polynomial]) -> list[Polynomial]:
    """Refine squarefree polynomials into a pairwise-coprime monic basis.

    Every input is a constant times a product of distinct basis elements.
    Constant inputs contribute nothing.
    """
    basis: list[Polynomial] = []
    for p in polys:
        if p.is_zero():
            raise InvalidInput("coprime basis of a zero polynomial")
        p = p.monic()
        refined: list[Polynomial] = []
        for b in basis:
            if p.degree == 0:
                refined.append(b)
                continue
            g = poly_gcd(b, p)
            if g.degree == 0:
                refined.append(b)
                continue
            refined.append(g)
            rest = b.exact_div(g)
            if rest.degree > 0:
                refined.append(rest)
            p = p.exact_div(g)
        if p.degree > 0:
            refined.append(p)
        basis = refined
    return sorted(basis, key=lambda q: (q.degree, q.coeffs))


def valuation_at(p: Polynomial, q: Polynomial):
    """Largest k with q**k dividing p; ``INFINITY`` when p is zero."""
    if q.is_constant():
        raise InvalidInput("valuation at a constant polynomial")
    if p.is_zero():
        return INFINITY
    k = 0
    while True:
        quo, rem = divmod(p, q)
        if rem:
            return k
        p, k = quo, k + 1


class RationalFunction:
    """Element of Q(t) in canonical form: coprime parts, monic denominator."""

    __slots__ = ("_num", "_den")

    def __init__(self, num, den=ONE):
        num = Polynomial._coerce(num)
        den = Polynomial._coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self._num, self._den = ZERO, ONE
            return
        g = poly_gcd(num, den)
        if g.degree:
            num, den = num.exact_div(g), den.exact_div(g)
        lc = den.lc
        self._num = num * (1 / lc) if lc != 1 else num
        self._den = den.monic()

    @property
    def num(self) -> Polynomial:
        return self._num

    @property
    def den(self) -> Polynomial:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_constant(self) -> bool:
        return self._num.is_constant() and self._den.is_constant()

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return RationalFunction(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._num == other._num and self._den == other._den

    def __hash__(self):
        return hash(("RationalFunction", self._num, self._den))

    def __repr__(self):
        return f"RationalFunction({self._num!r}, {self._den!r})"

    def __str__(self):
        if self._den == ONE:
            return f"{self._num}"
        return f"({self._num}) / ({self._den})"

    def __neg__(self):
        return RationalFunction(-self._num, self._den)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(
            self._num * other._den + other._num * self._den, self._den * other._den
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RationalFunction(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, n: int):
        if n < 0:
            return RationalFunction(self._den ** (-n), self._num ** (-n))
        return RationalFunction(self._num**n, self._den**n)

    def __call__(self, b: Scalar) -> Fraction:
        d = evaluate(self._den, b)
        if d == 0:
            raise ZeroDivisionError(f"pole at t = {rational_to_str(as_rational(b))}")
        return evaluate(self._num, b) / d

    def to_json(self) -> dict:
        return {"num": self._num.to_json(), "den": self._den.to_json()}

    @classmethod
    def from_json(cls, data) -> "RationalFunction":
        if not isinstance(data, dict) or "num" not in data or "den" not in data:
            raise InvalidInput("rational function must be {'num': [...], 'den': [...]}")
        return cls(Polynomial.from_json(data["num"]), Polynomial.from_json(data["den"]))
