"""4x4 real matrix representation of each algebra.

represent(u) is the matrix of multiplication by u, so it is an algebra
homomorphism and its determinant equals the kind's quartic amplitude
(rho**4 or nu) — vanishing exactly on the nodal sets.  A fixed orthogonal
change of basis T (rows = the canonical directions) block-diagonalizes
every represent(u) simultaneously: two 2x2 rotation-like blocks for
circular/planar, a full diagonal for hyperbolic, and 1+1+2 for polar.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .algebra_core import AlgebraKind, Quad

__all__ = [
    "Matrix4",
    "represent",
    "determinant",
    "block_diagonalize",
    "CHANGE_OF_BASIS",
]

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True, slots=True)
class Matrix4:
    """Row-major 4x4 real matrix."""

    entries: tuple[float, ...]

    def __post_init__(self) -> None:
        entries = tuple(float(v) for v in self.entries)
        if len(entries) != 16:
            raise ValueError(f"need 16 entries, got {len(entries)}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows) -> "Matrix4":
        return cls(tuple(v for row in rows for v in row))

    def at(self, i: int, j: int) -> float:
        return self.entries[4 * i + j]

    def row(self, i: int) -> tuple[float, ...]:
        return self.entries[4 * i : 4 * i + 4]

    @property
    def rows(self) -> tuple[tuple[float, ...], ...]:
        return tuple(self.row(i) for i in range(4))

    def transpose(self) -> "Matrix4":
        return Matrix4(tuple(self.at(j, i) for i in range(4) for j in range(4)))

    def __add__(self, other: "Matrix4") -> "Matrix4":
        return Matrix4(tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix4") -> "Matrix4":
        return Matrix4(tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __matmul__(self, other: "Matrix4") -> "Matrix4":
        out = []
        for i in range(4):
            for j in range(4):
                out.append(
                    sum(self.at(i, k) * other.at(k, j) for k in range(4))
                )
        return Matrix4(tuple(out))


def represent(u: Quad) -> Matrix4:
    """Matrix of v -> u*v in the (1, alpha, beta, gamma) basis."""
    x, y, z, t = u.components
    kind = u.kind
    if kind is AlgebraKind.CIRCULAR:
        rows = ((x, y, z, t), (-y, x, t, -z), (-z, t, x, -y), (t, z, y, x))
    elif kind is AlgebraKind.HYPERBOLIC:
        rows = ((x, y, z, t), (y, x, t, z), (z, t, x, y), (t, z, y, x))
    elif kind is AlgebraKind.PLANAR:
        rows = ((x, y, z, t), (-t, x, y, z), (-z, -t, x, y), (-y, -z, -t, x))
    else:
        rows = ((x, y, z, t), (t, x, y, z), (z, t, x, y), (y, z, t, x))
    return Matrix4.from_rows(rows)


def determinant(m: Matrix4) -> float:
    """LU determinant with partial pivoting."""
    a = [list(m.row(i)) for i in range(4)]
    det = 1.0
    for col in range(4):
        pivot = max(range(col, 4), key=lambda r: abs(a[r][col]))
        if a[pivot][col] == 0.0:
            return 0.0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, 4):
            factor = a[r][col] / a[col][col]
            for c in range(col, 4):
                a[r][c] -= factor * a[col][c]
    return det


def _basis_rows(kind: AlgebraKind) -> tuple[tuple[float, ...], ...]:
    h = 0.5
    q = 1.0 / _SQRT2
    if kind is AlgebraKind.CIRCULAR:
        return ((q, 0, 0, q), (0, q, q, 0), (q, 0, 0, -q), (0, q, -q, 0))
    if kind is AlgebraKind.HYPERBOLIC:
        return ((h, h, h, h), (h, -h, h, -h), (h, h, -h, -h), (h, -h, -h, h))
    if kind is AlgebraKind.PLANAR:
        return ((q, h, 0, -h), (0, h, q, h), (q, -h, 0, h), (0, h, -q, h))
    return ((h, h, h, h), (h, -h, h, -h), (q, 0, -q, 0), (0, q, 0, -q))


def _build_change_of_basis() -> dict[AlgebraKind, tuple[Matrix4, Matrix4]]:
    out = {}
    for kind in AlgebraKind:
        t = Matrix4.from_rows(_basis_rows(kind))
        t_inv = t.transpose()
        # T is orthogonal by construction; verify once and hard-fail loudly.
        gram = t @ t_inv
        for i in range(4):
            for j in range(4):
                expected = 1.0 if i == j else 0.0
                if abs(gram.at(i, j) - expected) > 1e-14:
                    raise AssertionError(
                        f"{kind} change of basis is not orthonormal: "
                        f"gram[{i}][{j}] = {gram.at(i, j)!r}"
                    )
        out[kind] = (t, t_inv)
    return out


# (T, T^-1) per kind; T^-1 is the transpose, checked orthonormal at import.
CHANGE_OF_BASIS: dict[AlgebraKind, tuple[Matrix4, Matrix4]] = _build_change_of_basis()


def block_diagonalize(u: Quad) -> Matrix4:
    """T * represent(u) * T^-1 with the kind's fixed T.

    Circular/planar: two 2x2 blocks carrying the plane projections;
    hyperbolic: diag(s, s', s'', s'''); polar: diag(v+, v-) plus the
    (v1, v1~) rotation-like block.  Off-block entries are zero to
    rounding (<= 1e-12 for desk-scale inputs).
    """
    t, t_inv = CHANGE_OF_BASIS[u.kind]
    return t @ represent(u) @ t_inv
