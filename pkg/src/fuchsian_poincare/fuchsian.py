"""
Poincaré series of a Fuchsian singularity from its data ``(g; α_1..α_r)``.

Three independent routes are computed:

* ``theorem``: expansion of ``Delta_+ / Delta_0``, the reversed
  characteristic polynomials of the Coxeter-type elements on the star
  lattice;
* ``orbit``: the orbit series ``P(t) + g + t`` of ``tau_0`` acting on ``E``;
* ``direct``: Riemann-Roch dimensions ``1 - g + deg D^(k)`` for ``k >= 2``.

Conventions: chain ``i`` meets the central curve ``E`` at its last member
``E_{α_i-1}^i``, and written products act right to left.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import coxeter
from .coxeter import AlmostRootBasis
from .errors import (InvalidAlpha, NegativeCoefficient, NonIntegralCoefficient,
                     RiemannRochRegimeViolated, ValidationFailed)
from .exactmath import (DEFAULT_ORDER, IntPolynomial, RationalFunction,
                        TruncatedSeries, poly_product, series_equal,
                        series_from_rational)
from .lattice import Lattice


@dataclass(frozen=True)
class FuchsianData:
    g: int
    alphas: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "g", int(self.g))
        object.__setattr__(self, "alphas", tuple(int(a) for a in self.alphas))

    @property
    def r(self) -> int:
        return len(self.alphas)

    @classmethod
    def parse(cls, text: str) -> FuchsianData:
        """Parse ``"g;a1,a2,..."`` (e.g. ``"0;2,3,7"`` or ``"2;"``)."""
        g, _, rest = text.partition(";")
        alphas = [int(a) for a in rest.replace(" ", "").split(",") if a]
        return cls(int(g), tuple(alphas))

    def __str__(self):
        return f"({self.g}; {', '.join(map(str, self.alphas))})"


CATALOG = tuple(FuchsianData.parse(s) for s in (
    "0;2,3,7", "0;2,3,8", "0;2,4,5", "0;3,3,4", "0;2,2,2,3",
    "1;2", "1;2,2", "1;3", "2;", "2;2", "3;", "0;2,3,13",
))


def validate(data: FuchsianData) -> list[str]:
    """All violations of the Fuchsian conditions; empty means valid."""
    problems = []
    if data.g < 0:
        problems.append(f"genus must be nonnegative, got {data.g}")
    small = [a for a in data.alphas if a < 2]
    if small:
        problems.append(f"weights must be >= 2, got {small}")
    if list(data.alphas) != sorted(data.alphas):
        problems.append(f"weights must be sorted ascending, got {list(data.alphas)}")
    if not small:
        lhs = sum((Fraction(1, a) for a in data.alphas), Fraction(0))
        rhs = data.r + 2 * data.g - 2
        if not lhs < rhs:
            rel = "=" if lhs == rhs else ">"
            problems.append(f"Looijenga inequality sum 1/alpha_i < r+2g-2 fails: {lhs} {rel} {rhs}")
    return problems


def smoothability_hint(data: FuchsianData) -> bool:
    """Necessary condition ``sum α_i <= 19 + r`` for negative smoothability."""
    return sum(data.alphas) <= 19 + data.r


def chain_label(i: int, j: int) -> str:
    return f"E_{j}^{i}"


def star_lattice(data: FuchsianData) -> AlmostRootBasis:
    """``V_-`` spanned by the ``(-2)``-chains and the central curve ``E``."""
    bad = [a for a in data.alphas if a < 2]
    if bad:
        raise InvalidAlpha(f"weights must be >= 2, got {bad}")
    labels = []
    ends = []
    for i, a in enumerate(data.alphas, start=1):
        labels.extend(chain_label(i, j) for j in range(1, a))
        ends.append(len(labels) - 1)
    labels.append("E")
    n = len(labels)
    gram = [[0] * n for _ in range(n)]
    pos = 0
    for a in data.alphas:
        for j in range(a - 1):
            gram[pos + j][pos + j] = -2
            if j + 1 < a - 1:
                gram[pos + j][pos + j + 1] = gram[pos + j + 1][pos + j] = 1
        pos += a - 1
    e = n - 1
    gram[e][e] = 2 * data.g - 2
    for k in ends:
        gram[k][e] = gram[e][k] = 1
    return AlmostRootBasis(Lattice(gram, labels), tuple(range(n - 1)), e)


def extensions(data: FuchsianData) -> tuple[Lattice, Lattice, Lattice]:
    basis = star_lattice(data)
    return (basis.vminus,
            coxeter.extend(basis, coxeter.V0).lattice,
            coxeter.extend(basis, coxeter.VPLUS).lattice)


def divisor_degree(data: FuchsianData, k: int) -> int:
    """``deg D^(k) = k(2g-2) + sum floor(k(α_i-1)/α_i)``."""
    return k * (2 * data.g - 2) + sum(k * (a - 1) // a for a in data.alphas)


def _require_valid(data: FuchsianData):
    problems = validate(data)
    if problems:
        raise ValidationFailed(problems)


def poincare_direct(data: FuchsianData, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``dim A_k`` via Riemann-Roch: ``1, g, then 1 - g + deg D^(k)``."""
    _require_valid(data)
    coeffs = [1, data.g]
    for k in range(2, order + 1):
        d = divisor_degree(data, k)
        if d <= 2 * data.g - 2:
            raise RiemannRochRegimeViolated(
                f"deg D^({k}) = {d} is not above 2g-2 = {2 * data.g - 2}")
        coeffs.append(1 - data.g + d)
    return TruncatedSeries(coeffs, order)


def _orbit_series(data: FuchsianData, order: int) -> TruncatedSeries:
    basis = star_lattice(data)
    return coxeter.shift_g_plus_t(coxeter.hilbert_poincare_series(basis, order), data.g)


def poincare_orbit(data: FuchsianData, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``P_(V_0,E)(t) + g + t``."""
    _require_valid(data)
    return _orbit_series(data, order)


@dataclass(frozen=True)
class OrbitPairingReport:
    holds: bool
    kmax: int
    lhs: tuple[int, ...]
    rhs: tuple[int, ...]
    first_failure: int | None = None

    def __bool__(self):
        return self.holds


def _orbit_pairing(data: FuchsianData, kmax: int) -> OrbitPairingReport:
    pairings = coxeter.orbit_pairings(star_lattice(data), kmax)
    lhs, acc = [], 0
    for p in pairings:
        acc += p
        lhs.append(acc)
    rhs = [divisor_degree(data, k) for k in range(1, kmax + 1)]
    bad = next((k for k, (x, y) in enumerate(zip(lhs, rhs), start=1) if x != y), None)
    return OrbitPairingReport(bad is None, kmax, tuple(lhs), tuple(rhs), bad)


def orbit_pairing_check(data: FuchsianData, kmax: int) -> OrbitPairingReport:
    """``<E, sum_{l<k} tau_0^l E> == deg D^(k)`` for ``1 <= k <= kmax``."""
    _require_valid(data)
    return _orbit_pairing(data, kmax)


def delta0(data: FuchsianData) -> IntPolynomial:
    return coxeter.delta0(star_lattice(data))


def delta_plus(data: FuchsianData) -> IntPolynomial:
    return coxeter.delta_plus(star_lattice(data))


def psi_A(data: FuchsianData) -> RationalFunction:
    """``(1-t)^(2-2g-r) prod (1 - t^α_i)`` with the exponent placed on
    whichever side keeps it nonnegative."""
    one_minus_t = IntPolynomial.one_minus_t_pow(1)
    exponent = 2 - 2 * data.g - data.r
    num = poly_product(IntPolynomial.one_minus_t_pow(a) for a in data.alphas)
    num = num * one_minus_t ** max(0, exponent)
    den = one_minus_t ** max(0, -exponent)
    return RationalFunction(num, den)


def _theorem_series(d0: IntPolynomial, dp: IntPolynomial, order: int) -> TruncatedSeries:
    return series_from_rational(RationalFunction(dp, d0), order)


def _check_dimensions(series: TruncatedSeries) -> None:
    for k, c in enumerate(series):
        if c.denominator != 1:
            raise NonIntegralCoefficient(f"coefficient {c} at t^{k}")
        if c < 0:
            raise NegativeCoefficient(f"coefficient {c} at t^{k}")


def poincare_theorem(data: FuchsianData, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Expansion of ``Delta_+ / Delta_0``; every coefficient must be a
    nonnegative integer."""
    _require_valid(data)
    series = _theorem_series(delta0(data), delta_plus(data), order)
    _check_dimensions(series)
    return series


def radical_is_u(data: FuchsianData) -> bool:
    """Whether ``rad(V_0)`` is exactly ``Z u``."""
    ext = coxeter.extend(star_lattice(data), coxeter.V0)
    rad = ext.lattice.radical_basis()
    return len(rad) == 1 and rad[0] in (ext.u, -ext.u)


@dataclass(frozen=True)
class FuchsianReport:
    data: FuchsianData
    order: int
    valid: bool
    violations: tuple[str, ...]
    smoothable_hint: bool
    ranks: dict
    delta0: IntPolynomial
    delta_plus: IntPolynomial
    psi_a: RationalFunction
    theorem: TruncatedSeries
    orbit: TruncatedSeries
    direct: TruncatedSeries | None
    checks: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        """No check evaluated to False (undefined checks are ignored)."""
        return all(v is not False for v in self.checks.values())

    def to_json(self) -> dict:
        def ser(s):
            return None if s is None else s.to_json()["coeffs"]

        return {
            "input": {"g": str(self.data.g), "alpha": [str(a) for a in self.data.alphas]},
            "valid": self.valid,
            "smoothable_hint": self.smoothable_hint,
            "ranks": {k: str(v) for k, v in self.ranks.items()},
            "delta0": self.delta0.to_json(),
            "delta_plus": self.delta_plus.to_json(),
            "psi_a": self.psi_a.to_json(),
            "series": {
                "order": str(self.order),
                "theorem": ser(self.theorem),
                "orbit": ser(self.orbit),
                "direct": ser(self.direct),
            },
            "checks": dict(self.checks),
        }


def full_report(data: FuchsianData, order: int = DEFAULT_ORDER, force: bool = False) -> FuchsianReport:
    """Run every pipeline and cross-check.

    Invalid data raises ``ValidationFailed`` unless ``force`` is set; then
    the lattice-side objects are still computed, the direct series is
    omitted and the agreement flags are ``None``.
    """
    problems = validate(data)
    valid = not problems
    if not valid and not force:
        raise ValidationFailed(problems)
    basis = star_lattice(data)
    vminus, v0, vplus = extensions(data)
    d0 = coxeter.delta0(basis)
    dp = coxeter.delta_plus(basis)
    psi = psi_A(data)
    theorem = _theorem_series(d0, dp, order)
    orbit = _orbit_series(data, order)

    checks: dict = {}
    direct = None
    if valid:
        _check_dimensions(theorem)
        direct = poincare_direct(data, order)
        checks["series_agree"] = bool(series_equal(theorem, orbit) and series_equal(orbit, direct))
        checks["orbit_pairing"] = _orbit_pairing(data, order).holds
    else:
        checks["series_agree"] = None
        checks["orbit_pairing"] = None
    checks["radical_is_u"] = radical_is_u(data)
    if data.g == 0:
        checks["psi_eq_delta0_g0"] = psi.as_polynomial() == d0
    else:
        checks["psi_eq_delta0_g0"] = None

    return FuchsianReport(
        data=data, order=order, valid=valid, violations=tuple(problems),
        smoothable_hint=smoothability_hint(data),
        ranks={"vminus": vminus.rank, "v0": v0.rank, "vplus": vplus.rank},
        delta0=d0, delta_plus=dp, psi_a=psi,
        theorem=theorem, orbit=orbit, direct=direct, checks=checks,
    )


_INT_STR = {"type": "string", "pattern": "^-?[0-9]+$"}
_INT_LIST = {"type": "array", "items": _INT_STR}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["input", "valid", "smoothable_hint", "ranks", "delta0", "delta_plus",
                 "psi_a", "series", "checks"],
    "properties": {
        "input": {
            "type": "object", "required": ["g", "alpha"],
            "properties": {"g": _INT_STR, "alpha": _INT_LIST},
        },
        "valid": {"type": "boolean"},
        "smoothable_hint": {"type": "boolean"},
        "ranks": {
            "type": "object", "required": ["vminus", "v0", "vplus"],
            "properties": {"vminus": _INT_STR, "v0": _INT_STR, "vplus": _INT_STR},
        },
        "delta0": _INT_LIST,
        "delta_plus": _INT_LIST,
        "psi_a": {
            "type": "object", "required": ["num", "den"],
            "properties": {"num": _INT_LIST, "den": _INT_LIST},
        },
        "series": {
            "type": "object", "required": ["order", "theorem", "orbit", "direct"],
            "properties": {
                "order": _INT_STR,
                "theorem": {"type": "array", "items": {"type": "string",
                                                       "pattern": "^-?[0-9]+(/[0-9]+)?$"}},
                "orbit": _INT_LIST,
                "direct": {"oneOf": [_INT_LIST, {"type": "null"}]},
            },
        },
        "violations": {"type": "array", "items": {"type": "string"}},
        "checks": {
            "type": "object",
            "required": ["series_agree", "orbit_pairing", "radical_is_u", "psi_eq_delta0_g0"],
            "properties": {
                "series_agree": {"type": ["boolean", "null"]},
                "orbit_pairing": {"type": ["boolean", "null"]},
                "radical_is_u": {"type": "boolean"},
                "psi_eq_delta0_g0": {"type": ["boolean", "null"]},
            },
        },
    },
}


VERIFY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["input", "valid", "checks"],
    "properties": {k: REPORT_SCHEMA["properties"][k] for k in ("input", "valid", "checks")},
}


REJECTION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["input", "valid", "violations"],
    "properties": {
        "input": REPORT_SCHEMA["properties"]["input"],
        "valid": {"const": False},
        "violations": {"type": "array", "items": {"type": "string"}, "minItems": 1},
    },
}


def verify_payload(report_json: dict) -> dict:
    """The check-flag subset of a JSON report."""
    keys = ("input", "valid", "checks", "violations")
    return {k: report_json[k] for k in keys if k in report_json}


def catalog_reports(order: int = DEFAULT_ORDER, entries: Sequence[FuchsianData] = CATALOG):
    return [full_report(d, order) for d in entries]
