"""
Exact univariate polynomials, rational functions and truncated power series.

Everything here works over Python's arbitrary-precision ``int`` and
``fractions.Fraction``; there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

from .errors import DenominatorVanishesAtZero, OrderMismatch

DEFAULT_ORDER = 64


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in ``t`` with integer coefficients, ``coeffs[k]`` is the
    coefficient of ``t**k``. The zero polynomial has ``coeffs == ()``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        trimmed = _trim(int(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", trimmed)

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPolynomial:
        return cls((0,) * k + (c,))

    @classmethod
    def one_minus_t_pow(cls, k: int) -> IntPolynomial:
        """``1 - t**k`` for ``k >= 1``."""
        return cls((1,) + (0,) * (k - 1) + (-1,))

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __neg__(self):
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other):
        other = _as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(tuple(self[k] + other[k] for k in range(n)))

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        other = _as_poly(other)
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPolynomial.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod(self, other: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
        """Division with remainder; requires every quotient coefficient to be
        an integer (always true when ``other`` has leading coefficient ±1)."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return IntPolynomial(), self
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree]
            if c % lead:
                raise ValueError("quotient is not integral")
            q = c // lead
            quot[k] = q
            if q:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= q * b
        return IntPolynomial(tuple(quot)), IntPolynomial(tuple(rem))

    def exact_div(self, other: IntPolynomial) -> IntPolynomial:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Iterable) -> IntPolynomial:
        return cls(tuple(int(c) for c in data))

    def __str__(self):
        return format_terms(self.coeffs) if self.coeffs else "0"


def _as_poly(x) -> IntPolynomial:
    if isinstance(x, IntPolynomial):
        return x
    if isinstance(x, int):
        return IntPolynomial((x,))
    return NotImplemented


def poly_arith(a: IntPolynomial, b: IntPolynomial, op: str) -> IntPolynomial:
    """Apply ``op`` in ``{"add", "sub", "mul"}`` to two polynomials."""
    try:
        fn = {"add": IntPolynomial.__add__,
              "sub": IntPolynomial.__sub__,
              "mul": IntPolynomial.__mul__}[op]
    except KeyError:
        raise ValueError(f"unknown polynomial operation {op!r}") from None
    return fn(a, b)


def poly_product(polys: Iterable[IntPolynomial]) -> IntPolynomial:
    result = IntPolynomial.one()
    for p in polys:
        result = result * p
    return result


def _content(p: Sequence[Fraction]) -> list[Fraction]:
    return [Fraction(c) for c in p]


def _poly_gcd(a: IntPolynomial, b: IntPolynomial) -> IntPolynomial:
    """Primitive gcd (positive leading coefficient) via Euclid over Q."""
    x, y = _content(a.coeffs), _content(b.coeffs)
    while y:
        while len(x) >= len(y) and x:
            q = x[-1] / y[-1]
            shift = len(x) - len(y)
            for j, c in enumerate(y):
                x[shift + j] -= q * c
            while x and x[-1] == 0:
                x.pop()
        x, y = y, x
    if not x:
        return IntPolynomial()
    den = lcm(*(c.denominator for c in x))
    ints = [int(c * den) for c in x]
    g = gcd(*ints)
    ints = [c // g for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return IntPolynomial(tuple(ints))


@dataclass(frozen=True)
class RationalFunction:
    """Quotient ``num/den`` of integer polynomials.

    Stored unreduced; only the sign is normalized so that ``den`` has a
    positive leading coefficient.
    """

    num: IntPolynomial
    den: IntPolynomial = IntPolynomial.one()

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if self.den.coeffs[-1] < 0:
            object.__setattr__(self, "num", -self.num)
            object.__setattr__(self, "den", -self.den)

    def reduced(self) -> RationalFunction:
        """Cancel the polynomial gcd of numerator and denominator."""
        if self.num.is_zero():
            return RationalFunction(IntPolynomial(), IntPolynomial.one())
        g = _poly_gcd(self.num, self.den)
        if g.degree <= 0:
            return self
        return RationalFunction(self.num.exact_div(g), self.den.exact_div(g))

    def as_polynomial(self) -> IntPolynomial | None:
        """The polynomial ``num/den`` if ``den`` divides ``num``, else None."""
        try:
            return self.num.exact_div(self.den)
        except ValueError:
            return None

    def equals(self, other: RationalFunction) -> bool:
        """Equality as rational functions (cross-multiplication)."""
        return self.num * other.den == other.num * self.den

    def to_json(self) -> dict:
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    def __str__(self):
        return f"({self.num}) / ({self.den})"


class TruncatedSeries:
    """Power series ``c_0 + c_1 t + ... + c_N t^N`` with exact rational
    coefficients, truncated at ``order = N``."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Iterable, order: int | None = None):
        coeffs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        coeffs = coeffs[: order + 1]
        coeffs += [Fraction(0)] * (order + 1 - len(coeffs))
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", tuple(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    def __getitem__(self, k):
        return self.coeffs[k]

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        return f"TruncatedSeries({[str(c) for c in self.coeffs]}, order={self.order})"

    def __str__(self):
        return format_terms(self.coeffs) + f" + O(t^{self.order + 1})"

    def truncate(self, order: int) -> TruncatedSeries:
        if order > self.order:
            raise OrderMismatch(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(self.coeffs, order)

    def _common(self, other):
        if isinstance(other, IntPolynomial):
            other = TruncatedSeries(other.coeffs, self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if other.order != self.order:
            raise OrderMismatch(f"orders differ: {self.order} vs {other.order}")
        return other

    def __add__(self, other):
        other = self._common(other)
        return TruncatedSeries((a + b for a, b in zip(self, other)), self.order)

    def __sub__(self, other):
        other = self._common(other)
        return TruncatedSeries((a - b for a, b in zip(self, other)), self.order)

    def __mul__(self, other):
        other = self._common(other)
        n = self.order
        out = [Fraction(0)] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out, n)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def integer_coeffs(self) -> list[int]:
        if not self.is_integral():
            raise ValueError("series has non-integral coefficients")
        return [int(c) for c in self.coeffs]

    def to_json(self) -> dict:
        return {"order": str(self.order), "coeffs": [_fmt_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> TruncatedSeries:
        return cls([Fraction(c) for c in data["coeffs"]], int(data["order"]))


def _fmt_rational(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def series_from_rational(f: RationalFunction, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Power-series expansion of ``f.num / f.den`` up to ``t**order``.

    Solves ``den * c = num`` term by term; division only happens by
    ``den(0)``, so ``den(0) = ±1`` keeps an integral numerator integral.
    """
    if order < 0:
        raise ValueError("truncation order must be nonnegative")
    d0 = f.den[0]
    if d0 == 0:
        raise DenominatorVanishesAtZero(f"denominator {f.den} vanishes at t=0")
    den = f.den.coeffs
    unit = d0 in (1, -1)
    out: list = []
    for k in range(order + 1):
        acc = f.num[k]
        for j in range(1, min(k, len(den) - 1) + 1):
            acc -= den[j] * out[k - j]
        if unit:
            out.append(acc * d0)
        else:
            out.append(Fraction(acc) / d0)
    return TruncatedSeries(out, order)


class SeriesComparison(NamedTuple):
    equal: bool
    index: int | None = None
    left: Fraction | None = None
    right: Fraction | None = None

    def __bool__(self):
        return self.equal


def series_equal(a: TruncatedSeries, b: TruncatedSeries) -> SeriesComparison:
    """Exact coefficientwise comparison; reports the first mismatch."""
    if a.order != b.order:
        raise OrderMismatch(f"orders differ: {a.order} vs {b.order}")
    for k, (x, y) in enumerate(zip(a.coeffs, b.coeffs)):
        if x != y:
            return SeriesComparison(False, k, x, y)
    return SeriesComparison(True)


def format_terms(coeffs: Sequence, var: str = "t") -> str:
    """Sparse human-readable rendering, e.g. ``1 + 2·t - t^3``."""
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = _fmt_rational(Fraction(mag))
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if mag == 1 else f"{_fmt_rational(Fraction(mag))}·{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
