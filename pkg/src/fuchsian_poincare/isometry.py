"""
Isometries of a lattice as integer matrices.

``matrix[i][j]`` is the ``i``-th coordinate of the image of basis vector
``j`` (column convention). ``compose(f, g)`` is ``f ∘ g``: ``g`` acts
first, so a written product ``A B C`` applies ``C`` first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import intmatrix
from .errors import (InternalCheckFailed, LatticeMismatch, NotAnIsometry,
                     NotARoot, NotIsotropic, NotOrthogonal, NotUnimodular)
from .exactmath import IntPolynomial
from .lattice import Lattice, Vector
from .intmatrix import Matrix


@dataclass(frozen=True, init=False)
class Isometry:
    lattice: Lattice
    matrix: Matrix

    def __init__(self, lattice: Lattice, matrix: Sequence[Sequence[int]], check: bool = True):
        matrix = intmatrix.as_matrix(matrix)
        n = lattice.rank
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise NotAnIsometry(f"matrix shape does not match rank {n}")
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "matrix", matrix)
        if check:
            if not preserves_form(lattice, matrix):
                raise NotAnIsometry("M^T G M != G")
            if self.det() not in (1, -1):
                raise NotAnIsometry(f"determinant {self.det()} is not ±1")

    @classmethod
    def identity(cls, lattice: Lattice) -> Isometry:
        return cls(lattice, intmatrix.identity(lattice.rank), check=False)

    def det(self) -> int:
        return intmatrix.det(self.matrix)

    def __call__(self, v: Vector) -> Vector:
        return Vector(intmatrix.matvec(self.matrix, self.lattice._coords(v)))

    def __matmul__(self, other: Isometry) -> Isometry:
        return compose(self, other)

    def __pow__(self, k: int) -> Isometry:
        if k < 0:
            return inverse(self) ** (-k)
        result, base = Isometry.identity(self.lattice), self
        while k:
            if k & 1:
                result = compose(result, base)
            base = compose(base, base)
            k >>= 1
        return result

    def orbit(self, v: Vector, steps: int) -> Iterable[Vector]:
        """Yield ``v, f(v), ..., f^(steps-1)(v)``."""
        for _ in range(steps):
            yield v
            v = self(v)

    def to_json(self) -> dict:
        return {"labels": list(self.lattice.labels),
                "matrix": [[str(x) for x in row] for row in self.matrix]}

    def __str__(self):
        width = max(len(str(x)) for row in self.matrix for x in row) if self.matrix else 1
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.matrix)


def preserves_form(lattice: Lattice, matrix: Matrix) -> bool:
    g = lattice.gram
    return intmatrix.matmul(intmatrix.transpose(matrix), intmatrix.matmul(g, matrix)) == g


def _from_map(lattice: Lattice, fn) -> Matrix:
    """Matrix whose column ``j`` is ``fn(basis vector j)``."""
    n = lattice.rank
    cols = [fn(lattice.basis_vector(j)).coords for j in range(n)]
    return intmatrix.transpose(tuple(cols)) if n else ()


def psi_map(lattice: Lattice, pairs: Sequence[tuple[Vector, Vector]]) -> Matrix:
    """Matrix of ``v -> v - sum_i <v, a_i> u_i`` for pairs ``(u_i, a_i)``.

    The result is an endomorphism; it need not be an isometry.
    """
    for u, a in pairs:
        lattice._coords(u)
        lattice._coords(a)

    def fn(v):
        out = v
        for u, a in pairs:
            out = out - lattice.pairing(v, a) * u
        return out

    return _from_map(lattice, fn)


def reflection(lattice: Lattice, a: Vector) -> Isometry:
    """Reflection ``v -> v + <v, a> a`` in a root ``a``."""
    if not lattice.is_root(a):
        raise NotARoot(f"<a,a> = {lattice.norm(a)}, expected -2")
    return Isometry(lattice, psi_map(lattice, [(-a, a)]))


def eichler_closed_form(lattice: Lattice, u: Vector, a: Vector) -> Matrix:
    """``x -> x + <x,u> a - <x,a> u - (1/2)<a,a><x,u> u``."""
    half = lattice.norm(a) // 2

    def fn(x):
        xu = lattice.pairing(x, u)
        return x + xu * a - lattice.pairing(x, a) * u - (half * xu) * u

    return _from_map(lattice, fn)


def eichler_siegel(lattice: Lattice, u: Vector, a: Vector) -> Isometry:
    """Eichler-Siegel transformation for isotropic ``u`` orthogonal to ``a``.

    Built as the product ``Psi((<a,a>/2 u - a) ⊗ u) · Psi(u ⊗ a)`` and
    cross-checked against the closed form.
    """
    if lattice.norm(u) != 0:
        raise NotIsotropic(f"<u,u> = {lattice.norm(u)}")
    if lattice.pairing(a, u) != 0:
        raise NotOrthogonal(f"<a,u> = {lattice.pairing(a, u)}")
    half = lattice.norm(a) // 2
    left = psi_map(lattice, [(half * u - a, u)])
    right = psi_map(lattice, [(u, a)])
    composite = intmatrix.matmul(left, right)
    if composite != eichler_closed_form(lattice, u, a):
        raise InternalCheckFailed("Eichler-Siegel composite and closed form disagree")
    return Isometry(lattice, composite)


def compose(f: Isometry, g: Isometry) -> Isometry:
    """``f ∘ g`` (``g`` first)."""
    if f.lattice != g.lattice:
        raise LatticeMismatch("isometries live on different lattices")
    return Isometry(f.lattice, intmatrix.matmul(f.matrix, g.matrix))


def compose_all(factors: Sequence[Isometry], lattice: Lattice) -> Isometry:
    """Product ``factors[0] ∘ factors[1] ∘ ...``; the last factor acts first."""
    result = Isometry.identity(lattice)
    for f in factors:
        result = compose(result, f)
    return result


def inverse(f: Isometry) -> Isometry:
    """Exact inverse as adjugate / determinant."""
    _, adj = intmatrix.faddeev_leverrier(f.matrix)
    d = f.det()
    if d not in (1, -1):
        raise NotUnimodular(f"determinant {d}")
    inv = tuple(tuple(d * x for x in row) for row in adj)
    return Isometry(f.lattice, inv)


def char_poly_reversed(f: Isometry) -> IntPolynomial:
    """``det(1 - f^{-1} t)`` as an integer polynomial.

    Uses ``det(1 - M^{-1} t) = det(M^{-1}) (-1)^n det(tI - M)`` with
    ``det(M^{-1}) = det(M)`` for ``det(M) = ±1``.
    """
    m = f.matrix
    d = intmatrix.det(m)
    if d not in (1, -1):
        raise NotUnimodular(f"determinant {d}")
    c, _ = intmatrix.faddeev_leverrier(m)
    sign = d * (-1) ** len(m)
    return IntPolynomial(tuple(sign * x for x in c))


def restrict(f: Isometry, sub: Lattice, indices: Sequence[int]) -> Isometry:
    """Restriction of ``f`` to the coordinate sublattice spanned by the basis
    vectors at ``indices``; raises if that sublattice is not preserved."""
    idx = list(indices)
    rest = [i for i in range(f.lattice.rank) if i not in idx]
    for j in idx:
        if any(f.matrix[i][j] for i in rest):
            raise InternalCheckFailed("isometry does not preserve the sublattice")
    block = [[f.matrix[i][j] for j in idx] for i in idx]
    return Isometry(sub, block)

