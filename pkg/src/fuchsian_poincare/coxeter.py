"""
Coxeter-type elements for even lattices with a basis of roots plus one
distinguished vector ``e``, and the orbit series they define.

Given ``V_-`` with basis ``e_1, ..., e_{n-1}, e`` (the ``e_i`` roots),
``V_0 = V_- ⊕ Z u`` and ``V_+ = V_- ⊕ U``, the elements are

    tau_0 = s_{e_1} ... s_{e_{n-1}} psi_{u,e}      (psi acts first)
    tau_+ = tau_0 s_{u-w}

and the identity checked here is

    det(1 - tau_+^{-1} t) / det(1 - tau_0|V_0^{-1} t) = P(t) + g + t

with ``P(t) = sum_k (1 - g + sum_{l<k} <e, tau_0^l e>) t^k``.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from .errors import InternalCheckFailed, InvalidBasis
from .exactmath import (DEFAULT_ORDER, IntPolynomial, RationalFunction,
                        SeriesComparison, TruncatedSeries, series_equal,
                        series_from_rational)
from .isometry import (Isometry, char_poly_reversed, compose, compose_all,
                       eichler_siegel, reflection, restrict)
from .lattice import (Lattice, Vector, embed, hyperbolic_plane,
                      isotropic_line, orthogonal_sum)

V0 = "V0"
VPLUS = "Vplus"
MODES = (V0, VPLUS)


@dataclass(frozen=True)
class AlmostRootBasis:
    """A lattice ``V_-`` whose basis vectors are roots except ``e``.

    ``roots`` lists root indices in reflection order; it plus ``e`` must be
    a permutation of ``range(rank)``.
    """

    vminus: Lattice
    roots: tuple[int, ...]
    e: int

    def __post_init__(self):
        n = self.vminus.rank
        object.__setattr__(self, "roots", tuple(int(i) for i in self.roots))
        if n < 1:
            raise InvalidBasis("an almost-root basis needs rank >= 1")
        if sorted(self.roots + (self.e,)) != list(range(n)):
            raise InvalidBasis(f"roots {list(self.roots)} and e={self.e} do not cover the basis")
        bad = [i for i in self.roots if self.vminus.gram[i][i] != -2]
        if bad:
            raise InvalidBasis(f"basis vectors {bad} are not roots")

    @classmethod
    def from_gram(cls, gram: Sequence[Sequence[int]], labels=None) -> AlmostRootBasis:
        """Last basis vector is ``e``; the others are roots in given order."""
        lat = Lattice(gram, labels)
        return cls(lat, tuple(range(lat.rank - 1)), lat.rank - 1)

    @property
    def n(self) -> int:
        return self.vminus.rank

    @property
    def e_norm(self) -> int:
        return self.vminus.gram[self.e][self.e]

    @property
    def g(self) -> int:
        return self.e_norm // 2 + 1

    def to_json(self) -> dict:
        data = self.vminus.to_json()
        data["roots"] = list(self.roots)
        data["e"] = self.e
        return data

    @classmethod
    def from_json(cls, data: dict) -> AlmostRootBasis:
        lat = Lattice.from_json(data)
        e = int(data.get("e", lat.rank - 1))
        roots = data.get("roots")
        if roots is None:
            roots = [i for i in range(lat.rank) if i != e]
        return cls(lat, tuple(int(i) for i in roots), e)

    @classmethod
    def load(cls, path) -> AlmostRootBasis:
        return cls.from_json(json.loads(Path(path).read_text()))


@dataclass(frozen=True)
class Extension:
    """``V_0`` or ``V_+`` with coordinates of the distinguished vectors."""

    lattice: Lattice
    e: Vector
    u: Vector
    w: Vector | None
    roots: tuple[Vector, ...]


def extend(basis: AlmostRootBasis, mode: str) -> Extension:
    vm = basis.vminus
    if mode == V0:
        lat = orthogonal_sum(vm, isotropic_line())
    elif mode == VPLUS:
        lat = orthogonal_sum(vm, hyperbolic_plane())
    else:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    rank, n = lat.rank, vm.rank
    return Extension(
        lattice=lat,
        e=lat.basis_vector(basis.e),
        u=lat.basis_vector(n),
        w=lat.basis_vector(n + 1) if mode == VPLUS else None,
        roots=tuple(embed(vm.basis_vector(i), rank) for i in basis.roots),
    )


def _tau0_on(ext: Extension) -> Isometry:
    lat = ext.lattice
    factors = [reflection(lat, a) for a in ext.roots]
    factors.append(eichler_siegel(lat, ext.u, ext.e))
    return compose_all(factors, lat)


def tau0(basis: AlmostRootBasis, mode: str = V0) -> Isometry:
    """``tau_0`` on ``V_0`` or on ``V_+``.

    On ``V_+`` the result is checked to preserve ``V_0`` and to restrict to
    the ``V_0`` version.
    """
    ext = extend(basis, mode)
    t = _tau0_on(ext)
    if mode == VPLUS:
        small = extend(basis, V0)
        restricted = restrict(t, small.lattice, range(basis.n + 1))
        if restricted.matrix != _tau0_on(small).matrix:
            raise InternalCheckFailed("tau_0 on V_+ does not restrict to tau_0 on V_0")
    return t


def tau_plus(basis: AlmostRootBasis) -> Isometry:
    """``tau_+ = tau_0 ∘ s_{u-w}`` on ``V_+``."""
    ext = extend(basis, VPLUS)
    return compose(tau0(basis, VPLUS), reflection(ext.lattice, ext.u - ext.w))


def delta0(basis: AlmostRootBasis) -> IntPolynomial:
    return char_poly_reversed(tau0(basis, V0))


def delta_plus(basis: AlmostRootBasis) -> IntPolynomial:
    return char_poly_reversed(tau_plus(basis))


def orbit_pairings(basis: AlmostRootBasis, count: int) -> list[int]:
    """``[<e, tau_0^l e> for l in range(count)]`` computed on ``V_0``."""
    ext = extend(basis, V0)
    t = tau0(basis, V0)
    lat = ext.lattice
    return [lat.pairing(ext.e, v) for v in t.orbit(ext.e, count)]


def hilbert_poincare_series(basis: AlmostRootBasis, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    base = 1 - basis.g
    coeffs = [base]
    acc = 0
    for p in orbit_pairings(basis, order):
        acc += p
        coeffs.append(base + acc)
    return TruncatedSeries(coeffs, order)


def shift_g_plus_t(series: TruncatedSeries, g: int) -> TruncatedSeries:
    """``series + g + t`` (truncated)."""
    extra = [g, 1][: series.order + 1]
    return series + TruncatedSeries(extra, series.order)


@dataclass(frozen=True)
class LPReport:
    holds: bool
    lhs: TruncatedSeries
    rhs: TruncatedSeries
    mismatch: SeriesComparison
    delta0: IntPolynomial = field(repr=False)
    delta_plus: IntPolynomial = field(repr=False)

    def __bool__(self):
        return self.holds


def lp_identity_check(basis: AlmostRootBasis, order: int = DEFAULT_ORDER) -> LPReport:
    """Compare the expansion of ``Delta_+/Delta_0`` with ``P + g + t``."""
    d0, dp = delta0(basis), delta_plus(basis)
    lhs = series_from_rational(RationalFunction(dp, d0), order)
    rhs = shift_g_plus_t(hilbert_poincare_series(basis, order), basis.g)
    cmp = series_equal(lhs, rhs)
    return LPReport(cmp.equal, lhs, rhs, cmp, d0, dp)


def random_basis(rng: random.Random, max_rank: int = 6, entry_bound: int = 3,
                 e_norm_bound: int = 6) -> AlmostRootBasis:
    """Random almost-root basis of rank ``1..max_rank``.

    Root diagonals are ``-2``, ``<e,e>`` is even in ``[-e_norm_bound,
    e_norm_bound]``, off-diagonal entries are uniform in ``[-entry_bound,
    entry_bound]``. No definiteness is imposed.
    """
    n = rng.randint(1, max_rank)
    gram = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            gram[i][j] = gram[j][i] = rng.randint(-entry_bound, entry_bound)
    for i in range(n - 1):
        gram[i][i] = -2
    gram[n - 1][n - 1] = 2 * rng.randint(-(e_norm_bound // 2), e_norm_bound // 2)
    labels = [f"e{i + 1}" for i in range(n - 1)] + ["e"]
    return AlmostRootBasis.from_gram(gram, labels)
