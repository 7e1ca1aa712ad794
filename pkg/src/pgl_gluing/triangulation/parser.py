"""Parse and validate concrete triangulations.

The file format mirrors SnapPy's neighbor/gluing arrays: for each simplex,
`neighbors[f]` is the simplex glued across face f and `gluings[f]` the image
tuple of the face-pairing permutation.
"""

import json
from pathlib import Path
from typing import Any, Optional, Sequence

from pydantic import ValidationError as PydanticValidationError

from pgl_gluing.exceptions import FaceGluingError, TriangulationError
from pgl_gluing.models.permutation import Perm4
from pgl_gluing.models.triangulation import (
    ConcreteTriangulation,
    CurveStep,
    CurveStepKind,
    FacePairing,
    PeripheralCurve,
    TriangulationFile,
)
from pgl_gluing.triangulation.curves import check_curve
from pgl_gluing.triangulation.orientation import propagate_orientation
from pgl_gluing.utils.logging import get_logger

logger = get_logger(__name__)


def _build_pairings(
    neighbors: Sequence[Sequence[Optional[int]]],
    gluings: Sequence[Sequence[Optional[Sequence[int]]]],
    allow_open: bool,
) -> tuple[tuple[Optional[FacePairing], ...], ...]:
    num_tet = len(neighbors)
    if len(gluings) != num_tet:
        raise TriangulationError(
            f"{num_tet} neighbor rows but {len(gluings)} gluing rows"
        )

    rows: list[tuple[Optional[FacePairing], ...]] = []
    for tet in range(num_tet):
        row: list[Optional[FacePairing]] = []
        for face in range(4):
            other = neighbors[tet][face]
            if other is None:
                if not allow_open:
                    raise FaceGluingError(f"unpaired face: tet {tet} face {face}")
                row.append(None)
                continue
            if not 0 <= other < num_tet:
                raise FaceGluingError(
                    f"tet {tet} face {face} glued to missing tetrahedron {other}"
                )
            image = gluings[tet][face]
            if image is None:
                raise FaceGluingError(f"tet {tet} face {face} has a neighbor but no gluing")
            try:
                perm = Perm4(image=tuple(image))  # type: ignore[arg-type]
            except PydanticValidationError as e:
                raise TriangulationError(
                    f"tet {tet} face {face}: invalid gluing {list(image)}"
                ) from e
            row.append(FacePairing(from_tet=tet, from_face=face, to_tet=other, perm=perm))
        rows.append(tuple(row))

    # Each face receives at most one gluing; gluings come in inverse pairs
    targets: dict[tuple[int, int], tuple[int, int]] = {}
    for row in rows:
        for pairing in row:
            if pairing is None:
                continue
            source = (pairing.from_tet, pairing.from_face)
            target = (pairing.to_tet, pairing.to_face)
            if target == source:
                raise FaceGluingError(f"face glued to itself: tet {source[0]} face {source[1]}")
            if target in targets:
                raise FaceGluingError(
                    f"face multiply glued: tet {target[0]} face {target[1]} receives "
                    f"tet {targets[target][0]} face {targets[target][1]} and "
                    f"tet {source[0]} face {source[1]}"
                )
            targets[target] = source
            _check_reverse(pairing, rows[pairing.to_tet][pairing.to_face])

    return tuple(rows)


def _check_reverse(pairing: FacePairing, back: Optional[FacePairing]) -> None:
    if back is None:
        raise FaceGluingError(
            f"inconsistent inverse pairing: tet {pairing.from_tet} face {pairing.from_face} "
            f"is glued to tet {pairing.to_tet} face {pairing.to_face}, which is open"
        )
    if back.to_tet != pairing.from_tet or back.perm != pairing.perm.inverse():
        raise FaceGluingError(
            f"inconsistent inverse pairing between tet {pairing.from_tet} face "
            f"{pairing.from_face} and tet {pairing.to_tet} face {pairing.to_face}"
        )


def build_triangulation(
    neighbors: Sequence[Sequence[Optional[int]]],
    gluings: Sequence[Sequence[Optional[Sequence[int]]]],
    name: str = "",
    curves: Sequence[PeripheralCurve] = (),
    allow_open: bool = False,
) -> ConcreteTriangulation:
    """Validate gluing data and build a triangulation.

    Args:
        neighbors: Neighbor simplex across each face
        gluings: Image tuple of the pairing permutation across each face
        name: Label
        curves: Peripheral curves
        allow_open: Permit unglued faces (local models)

    Returns:
        ConcreteTriangulation with orientation signs computed

    Raises:
        FaceGluingError: On unpaired, multiply glued or inconsistent faces
        NonOrientableError: If orientation signs cannot be propagated
        BrokenPathError: If a curve is not a closed edge path
    """
    if not neighbors:
        raise TriangulationError("a triangulation needs at least one tetrahedron")

    pairings = _build_pairings(neighbors, gluings, allow_open)
    eps = propagate_orientation(len(neighbors), pairings)
    triangulation = ConcreteTriangulation(
        name=name,
        num_tet=len(neighbors),
        pairings=pairings,
        eps=eps,
        curves=tuple(curves),
    )
    for curve in triangulation.curves:
        check_curve(triangulation, curve)

    logger.info(
        "Built triangulation %s: %d tetrahedra, eps=%s",
        name or "<unnamed>",
        triangulation.num_tet,
        eps,
    )
    return triangulation


def _curve_from_record(record: Any) -> PeripheralCurve:
    steps = []
    for step in record.steps:
        try:
            steps.append(
                CurveStep(
                    tet=step.tet,
                    triple=tuple(step.triple),
                    kind=CurveStepKind(step.kind),
                    direction=step.dir,
                )
            )
        except (PydanticValidationError, ValueError) as e:
            raise TriangulationError(f"curve {record.name!r}: invalid step {step}") from e
    return PeripheralCurve(name=record.name, steps=tuple(steps))


def parse_triangulation(text: str) -> ConcreteTriangulation:
    """Parse a triangulation file.

    Args:
        text: JSON document

    Returns:
        Validated ConcreteTriangulation

    Raises:
        TriangulationError: On malformed JSON or schema violations, and the
            errors of build_triangulation
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise TriangulationError(f"malformed triangulation file: {e}") from e

    try:
        record = TriangulationFile.model_validate(data)
    except PydanticValidationError as e:
        raise TriangulationError(f"malformed triangulation file: {e}") from e

    if record.num_tetrahedra != len(record.tetrahedra):
        raise TriangulationError(
            f"num_tetrahedra is {record.num_tetrahedra} but {len(record.tetrahedra)} are listed"
        )

    return build_triangulation(
        neighbors=[t.neighbors for t in record.tetrahedra],
        gluings=[t.gluings for t in record.tetrahedra],
        name=record.name,
        curves=[_curve_from_record(c) for c in record.peripheral_curves],
    )


def load_triangulation(path: str | Path) -> ConcreteTriangulation:
    """Read and parse a triangulation file.

    Raises:
        FileNotFoundError: If the file does not exist
    """
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Triangulation file not found: {path}")
    return parse_triangulation(path.read_text())


def triangulation_to_dict(triangulation: ConcreteTriangulation) -> dict[str, Any]:
    """Serialize to the file schema."""
    tetrahedra = []
    for row in triangulation.pairings:
        tetrahedra.append(
            {
                "neighbors": [p.to_tet if p else None for p in row],
                "gluings": [list(p.perm.image) if p else None for p in row],
            }
        )
    return {
        "name": triangulation.name,
        "num_tetrahedra": triangulation.num_tet,
        "tetrahedra": tetrahedra,
        "peripheral_curves": [
            {
                "name": c.name,
                "steps": [
                    {
                        "tet": s.tet,
                        "triple": list(s.triple),
                        "kind": s.kind.value,
                        "dir": s.direction,
                    }
                    for s in c.steps
                ],
            }
            for c in triangulation.curves
        ],
    }
