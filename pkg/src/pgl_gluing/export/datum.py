"""JSON import and export of NZ data and solution vectors.

Complex numbers are stored as [re, im] pairs and matrices row-major.
"""

import json
from pathlib import Path
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError as PydanticValidationError

from pgl_gluing.exceptions import ValidationError
from pgl_gluing.export.formats import complex_pair, dump_json
from pgl_gluing.models.nz import NZDatum


class NZDatumRecord(BaseModel):
    """On-disk form of an NZDatum."""

    A: list[list[int]] = Field(..., description="Exponents of z, row-major")
    B: list[list[int]] = Field(..., description="Exponents of z'', row-major")
    nu: list[int] = Field(..., description="Sign exponents")
    z: list[tuple[float, float]] = Field(..., description="Shape solution as [re, im]")
    f: Optional[list[int]] = Field(None, description="Flattening of z")
    f2: Optional[list[int]] = Field(None, description="Flattening of z''")
    row_labels: list[str] = Field(default_factory=list)

    model_config = ConfigDict(extra="forbid")


class SolutionRecord(BaseModel):
    """On-disk form of one shape or Ptolemy vector."""

    n: Optional[int] = Field(None, description="Level the vector belongs to")
    z: list[tuple[float, float]] = Field(..., description="Coordinates as [re, im]")

    model_config = ConfigDict(extra="forbid")


def datum_to_json(datum: NZDatum) -> str:
    """Serialize an NZDatum."""
    record = NZDatumRecord(
        A=datum.a.tolist(),
        B=datum.b.tolist(),
        nu=[int(v) for v in datum.nu],
        z=[tuple(complex_pair(v)) for v in datum.z],  # type: ignore[misc]
        f=None if datum.f is None else [int(v) for v in datum.f],
        f2=None if datum.f2 is None else [int(v) for v in datum.f2],
        row_labels=list(datum.row_labels),
    )
    return dump_json(record.model_dump())


def datum_from_json(text: str) -> NZDatum:
    """Parse an NZDatum.

    Raises:
        ValidationError: If the text is not a valid datum
    """
    try:
        record = NZDatumRecord.model_validate_json(text)
    except PydanticValidationError as e:
        raise ValidationError(f"invalid NZ datum: {e}") from e
    return NZDatum(
        a=np.array(record.A, dtype=np.int64),
        b=np.array(record.B, dtype=np.int64),
        nu=np.array(record.nu, dtype=np.int64),
        z=np.array([complex(re, im) for re, im in record.z]),
        f=None if record.f is None else np.array(record.f, dtype=np.int64),
        f2=None if record.f2 is None else np.array(record.f2, dtype=np.int64),
        row_labels=list(record.row_labels),
    )


def solution_to_json(z: np.ndarray, n: Optional[int] = None) -> str:
    """Serialize one vector."""
    record = SolutionRecord(n=n, z=[tuple(complex_pair(v)) for v in z])  # type: ignore[misc]
    return dump_json(record.model_dump())


def solutions_to_json(solutions: list[np.ndarray], n: Optional[int] = None) -> str:
    """Serialize a list of vectors."""
    return dump_json(
        [SolutionRecord(n=n, z=[tuple(complex_pair(v)) for v in z]).model_dump() for z in solutions]  # type: ignore[misc]
    )


def load_solution(path: str | Path) -> np.ndarray:
    """Read a vector written by solution_to_json.

    A list of solutions is accepted too; its first entry is used.

    Raises:
        FileNotFoundError: If the file does not exist
        ValidationError: If the content is not a solution
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Solution file not found: {path}")
    try:
        data = json.loads(path.read_text())
        if isinstance(data, list):
            if not data:
                raise ValidationError(f"no solutions in {path}")
            data = data[0]
        record = SolutionRecord.model_validate(data)
    except (json.JSONDecodeError, PydanticValidationError) as e:
        raise ValidationError(f"invalid solution file {path}: {e}") from e
    return np.array([complex(re, im) for re, im in record.z])
