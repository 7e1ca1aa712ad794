"""Neumann-Zagier matrices and data."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from pgl_gluing.lattice.points import LatticePoint

Column = tuple[int, LatticePoint]


@dataclass(frozen=True)
class NZMatrices:
    """Rows prod z^A (1-z)^B = sign, one column per (tet, subsimplex).

    column_eps carries the orientation sign of each column's simplex.
    """

    a: np.ndarray
    b: np.ndarray
    signs: np.ndarray
    columns: list[Column]
    row_labels: list[str]
    column_eps: np.ndarray = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.column_eps is None:
            object.__setattr__(self, "column_eps", np.ones(len(self.columns), dtype=np.int64))

    @property
    def shape(self) -> tuple[int, int]:
        """(rows, 2 * columns)."""
        return self.a.shape[0], 2 * self.a.shape[1]

    def matrix(self) -> np.ndarray:
        """The integer matrix (A|B)."""
        return np.hstack([self.a, self.b])

    def oriented(self) -> "NZMatrices":
        """Rewrite negatively oriented columns in the variable 1/z.

        z^a (1-z)^b = (-1)^b w^(-a-b) (1-w)^b for w = 1/z, so those columns
        map (a, b) to (-a-b, b) and the row sign picks up (-1)^b.
        """
        flip = self.column_eps < 0
        a = self.a.copy()
        a[:, flip] = -self.a[:, flip] - self.b[:, flip]
        parity = self.b[:, flip].sum(axis=1) % 2 if flip.any() else np.zeros(len(a), dtype=np.int64)
        signs = self.signs * np.where(parity == 1, -1, 1)
        return NZMatrices(
            a=a,
            b=self.b.copy(),
            signs=signs,
            columns=list(self.columns),
            row_labels=list(self.row_labels),
            column_eps=np.ones(len(self.columns), dtype=np.int64),
        )

    def append(self, a: np.ndarray, b: np.ndarray, signs: np.ndarray, labels: list[str]) -> "NZMatrices":
        """Stack extra rows below."""
        return NZMatrices(
            a=np.vstack([self.a, a]).astype(np.int64),
            b=np.vstack([self.b, b]).astype(np.int64),
            signs=np.concatenate([self.signs, signs]).astype(np.int64),
            columns=list(self.columns),
            row_labels=list(self.row_labels) + list(labels),
            column_eps=self.column_eps.copy(),
        )


@dataclass
class NZDatum:
    """Square Neumann-Zagier datum with a shape solution and a flattening.

    Rows read prod z^A_n z''^B_n = (-1)^nu and A_n f + B_n f'' = nu.
    """

    a: np.ndarray
    b: np.ndarray
    nu: np.ndarray
    z: np.ndarray
    f: Optional[np.ndarray] = None
    f2: Optional[np.ndarray] = None
    row_labels: list[str] = field(default_factory=list)

    @property
    def size(self) -> int:
        """Number of rows (= columns)."""
        return int(self.a.shape[0])

    def flattening_residual(self) -> np.ndarray:
        """A_n f + B_n f'' - nu; zero for a valid flattening."""
        if self.f is None or self.f2 is None:
            raise ValueError("datum has no flattening")
        return self.a @ self.f + self.b @ self.f2 - self.nu
