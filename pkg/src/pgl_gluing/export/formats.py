"""Text, JSON and CSV renderings of generated systems.

All renderings are deterministic: equal inputs give byte-identical output.
"""

import csv
import io
import json
from enum import Enum
from typing import Any, Sequence

import numpy as np

from pgl_gluing.cocycle.natural import TRIPLES, DoublyTruncatedCocycle, EdgeKind, edge_target
from pgl_gluing.lattice.points import point_label
from pgl_gluing.lattice.quotient import IntegralPointClass
from pgl_gluing.models.equations import CuspEquation, GluingEquation, PtolemyRelation, ShapeTerm, XTerm
from pgl_gluing.models.nz import NZMatrices


class OutputFormat(str, Enum):
    """Output formats of the CLI."""
    TEXT = "text"
    JSON = "json"
    CSV = "csv"


def dump_json(data: Any) -> str:
    """Indented JSON with a trailing newline."""
    return json.dumps(data, indent=2) + "\n"


def complex_pair(value: complex) -> list[float]:
    """[re, im]."""
    value = complex(value)
    return [float(value.real), float(value.imag)]


def matrix_pairs(m: np.ndarray) -> list[list[list[float]]]:
    """Complex matrix as row-major [re, im] pairs."""
    return [[complex_pair(v) for v in row] for row in m]


def _shape_term(term: ShapeTerm) -> dict[str, Any]:
    return {"tet": term.tet, "s": point_label(term.s), "e": point_label(term.e), "exponent": term.exponent}


def _x_term(term: XTerm) -> dict[str, Any]:
    return {"tet": term.tet, "t": point_label(term.t), "exponent": term.exponent}


def points_json(classes: Sequence[IntegralPointClass]) -> str:
    """Integral point classes with their representatives and signs."""
    return dump_json(
        [
            {
                "index": c.index,
                "label": c.label,
                "kind": c.kind.value,
                "reps": [[tet, point_label(t)] for tet, t in c.reps],
                "signs": list(c.signs),
            }
            for c in classes
        ]
    )


def points_text(classes: Sequence[IntegralPointClass]) -> str:
    """One line per class: label, kind and representatives."""
    lines = [
        f"{c.label} {c.kind.value} " + " ".join(f"{point_label(t)}_{tet}" for tet, t in c.reps)
        for c in classes
    ]
    return "\n".join(lines) + "\n"


def gluing_text(equations: Sequence[GluingEquation]) -> str:
    """One equation per line in subscript/superscript notation."""
    return "".join(f"{eq.render()}\n" for eq in equations)


def gluing_json(equations: Sequence[GluingEquation]) -> str:
    """Equations with their terms and exponent triples."""
    return dump_json(
        [
            {
                "point": eq.point,
                "label": eq.label,
                "kind": eq.kind.value,
                "terms": [_shape_term(t) for t in eq.terms],
                "a": list(eq.a),
                "b": list(eq.b),
                "c": list(eq.c),
                "rhs_sign": eq.rhs_sign,
            }
            for eq in equations
        ]
    )


def cusp_text(equations: Sequence[CuspEquation]) -> str:
    """One cusp equation per line, prefixed by curve and level."""
    return "".join(f"{eq.curve} level {eq.level}: {eq.render()}\n" for eq in equations)


def cusp_json(equations: Sequence[CuspEquation]) -> str:
    """Cusp equations with shape and X factors and expanded exponents."""
    return dump_json(
        [
            {
                "curve": eq.curve,
                "level": eq.level,
                "shape_terms": [_shape_term(t) for t in eq.shape_terms],
                "x_terms": [_x_term(t) for t in eq.x_terms],
                "rhs_sign": eq.rhs_sign,
                "a": list(eq.a or ()),
                "b": list(eq.b or ()),
                "c": list(eq.c or ()),
                "expanded_sign": eq.expanded_sign,
            }
            for eq in equations
        ]
    )


def ptolemy_text(relations: Sequence[PtolemyRelation]) -> str:
    """One relation per line on simplex coordinates."""
    return "".join(f"{rel.render()}\n" for rel in relations)


def ptolemy_json(relations: Sequence[PtolemyRelation]) -> str:
    """Relations as three signed monomials over Ptolemy variable indices."""

    def monomial(pair: Any) -> dict[str, Any]:
        return {
            "sign": pair[0].sign * pair[1].sign,
            "variables": [pair[0].point, pair[1].point],
            "coordinates": [point_label(pair[0].t), point_label(pair[1].t)],
        }

    return dump_json(
        [
            {
                "tet": rel.tet,
                "s": point_label(rel.s),
                "terms": [monomial(rel.first), monomial(rel.second), monomial(rel.third)],
            }
            for rel in relations
        ]
    )


def nz_csv(nz: NZMatrices) -> str:
    """(A|B) with a header of column keys and a leading row label."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    keys = [f"{tet}:{point_label(s)}" for tet, s in nz.columns]
    writer.writerow(["row"] + [f"A[{k}]" for k in keys] + [f"B[{k}]" for k in keys] + ["sign"])
    for label, a_row, b_row, sign in zip(nz.row_labels, nz.a, nz.b, nz.signs):
        writer.writerow([label] + [int(v) for v in a_row] + [int(v) for v in b_row] + [int(sign)])
    return buffer.getvalue()


def nz_json(nz: NZMatrices) -> str:
    """(A|B), signs, columns and row labels."""
    return dump_json(
        {
            "shape": list(nz.shape),
            "columns": [[tet, point_label(s)] for tet, s in nz.columns],
            "column_eps": [int(e) for e in nz.column_eps],
            "rows": list(nz.row_labels),
            "A": nz.a.tolist(),
            "B": nz.b.tolist(),
            "signs": nz.signs.tolist(),
        }
    )


def nz_text(nz: NZMatrices, failures: Sequence[tuple[str, str, int]] | None = None) -> str:
    """Shape line, optional pairing summary, then one row per line."""
    rows, cols = nz.shape
    lines = [f"{rows}x{cols}"]
    if failures is not None:
        lines[0] += ", all pairings 0" if not failures else f", {len(failures)} nonzero pairings"
        lines.extend(f"<{a}, {b}> = {v}" for a, b, v in failures)
    for label, a_row, b_row, sign in zip(nz.row_labels, nz.a, nz.b, nz.signs):
        a_text = " ".join(str(int(v)) for v in a_row)
        b_text = " ".join(str(int(v)) for v in b_row)
        lines.append(f"{label}: {a_text} | {b_text} = {int(sign)}")
    return "\n".join(lines) + "\n"


def cocycle_json(cocycles: Sequence[DoublyTruncatedCocycle]) -> str:
    """Labels of every directed edge keyed 'v0v1v2->w0w1w2' per simplex."""

    def key(start: tuple[int, int, int], end: tuple[int, int, int]) -> str:
        return f"{''.join(map(str, start))}->{''.join(map(str, end))}"

    data = []
    for tet, cocycle in enumerate(cocycles):
        edges = {}
        for kind in EdgeKind:
            for triple in TRIPLES:
                end = edge_target(triple, kind)
                edges[key(triple, end)] = matrix_pairs(cocycle.label(triple, end))
        data.append({"tet": tet, "n": cocycle.n, "edges": edges})
    return dump_json(data)


def matrix_csv(m: np.ndarray) -> str:
    """Complex matrix as CSV with re and im columns per entry."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    n = m.shape[1]
    writer.writerow([f"{part}{j}" for j in range(n) for part in ("re", "im")])
    for row in m:
        writer.writerow([repr(float(v)) for z in row for v in (z.real, z.imag)])
    return buffer.getvalue()


def solutions_text(solutions: Sequence[np.ndarray]) -> str:
    """One solution per line, coordinates separated by spaces."""
    return "".join(" ".join(f"{complex(v):.12g}" for v in z) + "\n" for z in solutions)


def report_text(reports: dict[str, Any]) -> str:
    """One line per residual report: name, grade, maximum and worst row."""
    lines = []
    for name, report in reports.items():
        worst = f" at {report.worst_row}" if report.worst_row else ""
        lines.append(f"{name}: {report.level.value} max {report.max_residual:.3e} over {report.rows} rows{worst}")
    return "\n".join(lines) + "\n"
