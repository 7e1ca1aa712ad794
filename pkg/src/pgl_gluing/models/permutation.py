"""Permutations of the four vertices of a simplex.

The symmetry group of an ordered simplex is identified with S4; a face
pairing is recorded as the Perm4 sending the vertices of one simplex to the
vertices of its neighbor.
"""

from itertools import permutations
from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field, field_validator


class Perm4(BaseModel):
    """A permutation of {0, 1, 2, 3}, stored as its image tuple."""

    image: tuple[int, int, int, int] = Field(..., description="Images of vertices 0..3")

    model_config = ConfigDict(frozen=True, extra="forbid")

    @field_validator("image")
    @classmethod
    def validate_bijection(cls, v: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
        """Image must be a bijection of {0,1,2,3}."""
        if sorted(v) != [0, 1, 2, 3]:
            raise ValueError(f"not a permutation of 0..3: {v}")
        return v

    def __call__(self, vertex: int) -> int:
        return self.image[vertex]

    def __mul__(self, other: "Perm4") -> "Perm4":
        """Composition: (self * other)(v) = self(other(v))."""
        return Perm4(image=tuple(self.image[other.image[v]] for v in range(4)))  # type: ignore[arg-type]

    def __str__(self) -> str:
        return "".join(str(v) for v in self.image)

    def inverse(self) -> "Perm4":
        """Return the inverse permutation."""
        inv = [0, 0, 0, 0]
        for v, w in enumerate(self.image):
            inv[w] = v
        return Perm4(image=tuple(inv))  # type: ignore[arg-type]

    @property
    def sign(self) -> int:
        """Parity of the permutation, +1 or -1."""
        inversions = sum(
            1 for i in range(4) for j in range(i + 1, 4) if self.image[i] > self.image[j]
        )
        return -1 if inversions % 2 else 1

    def is_identity(self) -> bool:
        """Whether this is the identity."""
        return self.image == (0, 1, 2, 3)

    @classmethod
    def identity(cls) -> "Perm4":
        """The identity permutation."""
        return cls(image=(0, 1, 2, 3))

    @classmethod
    def transposition(cls, i: int, j: int) -> "Perm4":
        """The transposition swapping i and j."""
        image = [0, 1, 2, 3]
        image[i], image[j] = j, i
        return cls(image=tuple(image))  # type: ignore[arg-type]

    @classmethod
    def from_cycles(cls, *cycles: Iterable[int]) -> "Perm4":
        """Build a permutation from disjoint cycles.

        Perm4.from_cycles((0, 2, 3, 1)) sends 0 -> 2 -> 3 -> 1 -> 0.

        Args:
            *cycles: Disjoint cycles of vertices

        Returns:
            The product of the cycles

        Raises:
            ValueError: If the cycles are not disjoint
        """
        image = [0, 1, 2, 3]
        seen: set[int] = set()
        for cycle in cycles:
            cycle = list(cycle)
            if seen.intersection(cycle):
                raise ValueError(f"cycles are not disjoint: {cycles}")
            seen.update(cycle)
            for k, v in enumerate(cycle):
                image[v] = cycle[(k + 1) % len(cycle)]
        return cls(image=tuple(image))  # type: ignore[arg-type]

    @classmethod
    def elements(cls) -> list["Perm4"]:
        """All 24 permutations in lexicographic order of their images."""
        return [cls(image=p) for p in permutations(range(4))]  # type: ignore[arg-type]
