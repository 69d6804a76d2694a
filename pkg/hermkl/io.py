"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
@description: rendering and serialization of polynomials, markings and
Hasse diagrams
"""

from enum import Enum, unique
from hermkl.closedform import MarkedSkewDiagram
from hermkl.diagrams import QuotientSpec, addable_boxes, subdiagrams
from hermkl.poly import Polynomial
import json
import logging
from typing import Callable, Dict, List


@unique
class OutputFormat(Enum):
    TEXT = "text"
    JSON = "json"
    LATEX = "latex"


@unique
class RPolynomialMethod(Enum):
    CLOSED = "closed"
    ORACLE = "oracle"
    BOTH = "both"


class PolynomialRecord(object):
    """A polynomial attached to a pair of shapes of a quotient.

    Variables:
            _quotient {str} -- SpecString
            _u {str} -- PartitionString of the lower element
            _v {str} -- PartitionString of the upper element
            _method {str}
            _poly {Polynomial}
    """

    KEYS = ("quotient", "u", "v", "method", "coeffs")

    def __init__(self, quotient: str, u: str, v: str, method: str, poly: Polynomial):
        super(PolynomialRecord, self).__init__()
        self._quotient = quotient
        self._u = u
        self._v = v
        self._method = method
        self._poly = poly

    @property
    def quotient(self) -> str:
        return self._quotient

    @property
    def u(self) -> str:
        return self._u

    @property
    def v(self) -> str:
        return self._v

    @property
    def method(self) -> str:
        return self._method

    @property
    def poly(self) -> Polynomial:
        return self._poly

    def to_dict(self) -> Dict:
        return {
            "quotient": self._quotient,
            "u": self._u,
            "v": self._v,
            "method": self._method,
            "coeffs": list(self._poly.coeffs),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @staticmethod
    def from_json(s: str) -> "PolynomialRecord":
        data = json.loads(s)
        assert isinstance(data, dict), "a JSON object is expected"
        missing = [k for k in PolynomialRecord.KEYS if k not in data]
        assert not missing, f"missing JSON keys: {missing}"
        assert all(
            isinstance(c, int) for c in data["coeffs"]
        ), "coefficients must be integers"
        return PolynomialRecord(
            data["quotient"],
            data["u"],
            data["v"],
            data["method"],
            Polynomial(data["coeffs"]),
        )

    def render(self, fmt: OutputFormat) -> str:
        if OutputFormat.JSON == fmt:
            return self.to_json()
        if OutputFormat.LATEX == fmt:
            return self._poly.factored_latex()
        return str(self._poly)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolynomialRecord):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __repr__(self) -> str:
        return f"PolynomialRecord({self.to_json()})"


def _grid(
    marked: MarkedSkewDiagram, cell: Callable, width: int
) -> List[str]:
    diagram = marked.outer.ambient
    lines = []
    for row in range(1, diagram.height + 1):
        cells = []
        for col in range(1, diagram.width + 1):
            box = diagram.box_at(row, col)
            text = "" if box is None else cell(box)
            cells.append(text.rjust(width))
        lines.append(" ".join(cells).rstrip())
    return lines


def render_marks(marked: MarkedSkewDiagram) -> str:
    """Fixed-width grid of a marking, followed by its δ and Δ tables.

    Inner boxes are X, skew boxes show their mark, other ambient boxes are _
    and cells outside the ambient diagram are blank.
    """
    inner, skew = marked.inner, marked.skew

    def mark_cell(box) -> str:
        if box in inner:
            return "X"
        if box in skew:
            return marked.mark(box).value
        return "_"

    def number_cell(getter: Callable) -> Callable:
        def cell(box) -> str:
            return str(getter(box)) if box in skew else ""

        return cell

    lines = [f"{marked.outer.spec}  u=({marked.inner})  v=({marked.outer})"]
    lines.extend(_grid(marked, mark_cell, 1))
    lines.append(f"k = {marked.k}")
    lines.append("δ")
    lines.extend(_grid(marked, number_cell(marked.delta), 2))
    lines.append("Δ")
    lines.extend(_grid(marked, number_cell(marked.Delta), 2))
    return "\n".join(lines)


def hasse_dot(spec: QuotientSpec) -> str:
    """DOT digraph of the ideal lattice, edges pointing up along covers."""
    shapes = subdiagrams(spec)
    ids = {shape: f"n{i}" for i, shape in enumerate(shapes)}
    lines = [f'digraph "{spec}" {{', "  rankdir=BT;"]
    for shape, node in ids.items():
        lines.append(f'  {node} [label="({shape}) rank {shape.size}"];')
    edges = 0
    for shape, node in ids.items():
        for box in addable_boxes(shape):
            lines.append(f"  {node} -> {ids[shape.add(box)]};")
            edges += 1
    lines.append("}")
    logging.info(f"Hasse diagram of {spec}: {len(shapes)} nodes, {edges} edges.")
    return "\n".join(lines) + "\n"


def write_dot(spec: QuotientSpec, path: str) -> None:
    with open(path, "w+") as OH:
        OH.write(hasse_dot(spec))
