"""
Even integral lattices given by a symmetric Gram matrix in a fixed basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

from . import intmatrix
from .errors import DimensionMismatch, InvalidLattice


@dataclass(frozen=True, init=False)
class Vector:
    """Integer coordinates with respect to a lattice basis."""

    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        object.__setattr__(self, "coords", tuple(int(c) for c in coords))

    @classmethod
    def basis(cls, rank: int, i: int) -> Vector:
        return cls(int(j == i) for j in range(rank))

    @classmethod
    def zero(cls, rank: int) -> Vector:
        return cls((0,) * rank)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def _check(self, other):
        if len(other.coords) != len(self.coords):
            raise DimensionMismatch(f"vector lengths {len(self)} and {len(other)} differ")

    def __add__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(a + b for a, b in zip(self.coords, other.coords))

    def __sub__(self, other: Vector) -> Vector:
        self._check(other)
        return Vector(a - b for a, b in zip(self.coords, other.coords))

    def __neg__(self) -> Vector:
        return Vector(-a for a in self.coords)

    def __mul__(self, k: int) -> Vector:
        return Vector(k * a for a in self.coords)

    __rmul__ = __mul__

    def __repr__(self):
        return f"Vector({list(self.coords)})"


@dataclass(frozen=True, init=False)
class Lattice:
    """Free abelian group with an even symmetric integral bilinear form."""

    gram: intmatrix.Matrix
    labels: tuple[str, ...] = ()

    def __init__(self, gram: Sequence[Sequence[int]], labels: Sequence[str] | None = None):
        gram = intmatrix.as_matrix(gram)
        n = len(gram)
        if any(len(row) != n for row in gram):
            raise InvalidLattice("Gram matrix is not square")
        if not intmatrix.is_symmetric(gram):
            raise InvalidLattice("Gram matrix is not symmetric")
        odd = [i for i in range(n) if gram[i][i] % 2]
        if odd:
            raise InvalidLattice(f"odd diagonal entries at {odd}; lattice is not even")
        if labels is None:
            labels = tuple(f"b{i}" for i in range(n))
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise InvalidLattice(f"{len(labels)} labels for rank {n}")
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "labels", labels)

    @property
    def rank(self) -> int:
        return len(self.gram)

    def basis_vector(self, i: int) -> Vector:
        return Vector.basis(self.rank, i)

    def vector(self, label: str) -> Vector:
        return self.basis_vector(self.labels.index(label))

    def _coords(self, x) -> tuple[int, ...]:
        coords = x.coords if isinstance(x, Vector) else tuple(x)
        if len(coords) != self.rank:
            raise DimensionMismatch(f"vector of length {len(coords)} in a rank {self.rank} lattice")
        return coords

    def pairing(self, x, y) -> int:
        x, y = self._coords(x), self._coords(y)
        return sum(xi * sum(g * yj for g, yj in zip(row, y))
                   for xi, row in zip(x, self.gram) if xi)

    def norm(self, x) -> int:
        return self.pairing(x, x)

    def is_root(self, a) -> bool:
        return self.pairing(a, a) == -2

    def determinant(self) -> int:
        return intmatrix.det(self.gram)

    def radical_basis(self) -> list[Vector]:
        """Saturated integral basis of ``{x : <x, y> = 0 for all y}``."""
        return [Vector(v) for v in intmatrix.integer_kernel(self.gram)]

    def to_json(self) -> dict:
        return {"labels": list(self.labels), "gram": [list(row) for row in self.gram]}

    @classmethod
    def from_json(cls, data: dict) -> Lattice:
        try:
            gram = [[int(x) for x in row] for row in data["gram"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidLattice(f"malformed lattice data: {exc}") from None
        return cls(gram, data.get("labels"))

    def dump(self, path) -> None:
        Path(path).write_text(json.dumps(self.to_json(), indent=2) + "\n")

    @classmethod
    def load(cls, path) -> Lattice:
        return cls.from_json(json.loads(Path(path).read_text()))

    def __str__(self):
        width = max((len(str(x)) for row in self.gram for x in row), default=1)
        lw = max((len(s) for s in self.labels), default=0)
        lines = [" " * (lw + 1) + " ".join(s.rjust(width) for s in self.labels)] if self.rank else []
        for label, row in zip(self.labels, self.gram):
            lines.append(label.ljust(lw) + " " + " ".join(str(x).rjust(max(width, len(l)))
                                                        for x, l in zip(row, self.labels)))
        return "\n".join(lines)


def pairing(L: Lattice, x, y) -> int:
    return L.pairing(x, y)


def is_root(L: Lattice, a) -> bool:
    return L.is_root(a)


def radical_basis(L: Lattice) -> list[Vector]:
    return L.radical_basis()


def orthogonal_sum(L1: Lattice, L2: Lattice) -> Lattice:
    return Lattice(intmatrix.block_diag(L1.gram, L2.gram), L1.labels + L2.labels)


def hyperbolic_plane(labels=("u", "w")) -> Lattice:
    """The unimodular hyperbolic plane ``U`` with isotropic basis ``u, w``."""
    return Lattice([[0, 1], [1, 0]], labels)


def isotropic_line(label="u") -> Lattice:
    return Lattice([[0]], [label])


def embed(v: Vector, rank: int, offset: int = 0) -> Vector:
    """Coordinates of ``v`` placed at ``offset`` inside a larger basis."""
    out = [0] * rank
    out[offset:offset + len(v)] = v.coords
    return Vector(out)
