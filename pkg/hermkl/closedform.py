"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
@description: marked skew diagrams and the closed form of relative
R-polynomials
"""

from enum import Enum, unique
from hermkl.asserts import (
    ComputationError,
    NegativeEta,
    NonExactDivision,
    NonPolynomialBase,
)
from hermkl.const import ROOT_LENGTH, root_length
from hermkl.diagrams import (
    Box,
    QuotientSpec,
    ShapeDiagram,
    SkewDiagram,
    addable_boxes,
    contains,
    diagonal,
    outside_corners,
    skew,
    subdiagrams,
)
from hermkl.invariance import skew_key, standard_skew_shape
from hermkl.oracle import WeylGroup
from hermkl.poly import Polynomial, exact_div, qint
import logging
from tqdm import tqdm  # type: ignore
from typing import Dict, List, NamedTuple, Optional, Set, Union


class ClosedFormResult(NamedTuple):
    """Closed-form value q^eta * base."""

    base: Polynomial
    eta: int
    value: Polynomial


def _check_span(box: Box, span: int) -> None:
    if 0 != span % 2:
        raise NonPolynomialBase(
            f"odd rank gap {span} at ({box.row},{box.col}) breaks the marking rule"
        )


class MarkedSkewDiagram(object):
    """Skew diagram Λ∖M with its Plus/Minus marking.

    Variables:
            _skew {SkewDiagram}
            _delta {Dict[Box, int]} -- same-label skew boxes weakly northwest
            _marks {Dict[Box, Mark]}
            _Delta {Dict[Box, int]} -- quantum integer argument per box
    """

    @unique
    class Mark(Enum):
        PLUS = "+"
        MINUS = "-"
        UNMARKED = "."

    def __init__(self, inner: ShapeDiagram, outer: ShapeDiagram):
        super(MarkedSkewDiagram, self).__init__()
        self._skew = skew(outer, inner)
        ambient = self._skew.ambient
        spec = ambient.spec
        addable = {b.label: b for b in addable_boxes(inner)}
        corners = {b.label: b for b in outside_corners(inner)}

        self._delta: Dict[Box, int] = {}
        self._marks: Dict[Box, MarkedSkewDiagram.Mark] = {}
        self._Delta: Dict[Box, int] = {}
        for b in self._skew:
            self._delta[b] = sum(
                1
                for c in self._skew
                if c.label == b.label and c.row <= b.row and c.col <= b.col
            )
            is_long = ROOT_LENGTH.LONG == root_length(spec.family, spec.rank, b.label)
            odd = 1 == self._delta[b] % 2
            if b.label in addable and (odd or not is_long):
                self._marks[b] = MarkedSkewDiagram.Mark.PLUS
                span = ambient.rank_of(b) - ambient.rank_of(addable[b.label])
                _check_span(b, span)
                self._Delta[b] = 1 + span // 2
            elif b.label in corners and (not odd or not is_long):
                self._marks[b] = MarkedSkewDiagram.Mark.MINUS
                span = ambient.rank_of(b) - ambient.rank_of(corners[b.label])
                _check_span(b, span)
                self._Delta[b] = span // 2
            else:
                self._marks[b] = MarkedSkewDiagram.Mark.UNMARKED
                self._Delta[b] = 1

    @property
    def skew(self) -> SkewDiagram:
        return self._skew

    @property
    def inner(self) -> ShapeDiagram:
        return self._skew.inner

    @property
    def outer(self) -> ShapeDiagram:
        return self._skew.outer

    def mark(self, box: Box) -> "MarkedSkewDiagram.Mark":
        return self._marks[box]

    def delta(self, box: Box) -> int:
        return self._delta[box]

    def Delta(self, box: Box) -> int:
        return self._Delta[box]

    def geometric_delta(self, box: Box) -> int:
        """Skew boxes on the northwest diagonal through a box, itself included."""
        return sum(
            1
            for c in self._skew
            if diagonal(c) == diagonal(box) and c.row <= box.row
        )

    @property
    def plus(self):
        return [b for b in self._skew if MarkedSkewDiagram.Mark.PLUS == self._marks[b]]

    @property
    def minus(self):
        return [b for b in self._skew if MarkedSkewDiagram.Mark.MINUS == self._marks[b]]

    @property
    def k(self) -> int:
        return len(self.plus) - len(self.minus)

    def __repr__(self) -> str:
        return (
            f"MarkedSkewDiagram('{self.outer}' / '{self.inner}', "
            + f"+{len(self.plus)} -{len(self.minus)})"
        )


Mark = MarkedSkewDiagram.Mark


def mark(inner: ShapeDiagram, outer: ShapeDiagram) -> MarkedSkewDiagram:
    return MarkedSkewDiagram(inner, outer)


def r_poly_closed(inner: ShapeDiagram, outer: ShapeDiagram) -> ClosedFormResult:
    """Relative R-polynomial (x = -1) of the elements of two shapes.

    The base is (q-1)^k times the quantum integers of the Plus boxes, divided
    by the quantum integers of the Minus boxes. The value is q^eta times the
    base, with eta the missing degree.

    Arguments:
            inner {ShapeDiagram} -- shape of u
            outer {ShapeDiagram} -- shape of v

    Returns:
            ClosedFormResult

    Raises:
            NonPolynomialBase -- if the division is not exact
            NegativeEta -- if the base exceeds the interval length
    """
    if not contains(inner, outer):
        zero = Polynomial.zero()
        return ClosedFormResult(zero, 0, zero)
    if inner == outer:
        one = Polynomial.one()
        return ClosedFormResult(one, 0, one)

    marked = MarkedSkewDiagram(inner, outer)
    k = marked.k
    factor = Polynomial((-1, 1))
    numerator = factor ** max(k, 0)
    for b in marked.plus:
        numerator = numerator * qint(marked.Delta(b))
    denominator = factor ** max(-k, 0)
    for b in marked.minus:
        denominator = denominator * qint(marked.Delta(b))
    try:
        base = exact_div(numerator, denominator)
    except NonExactDivision as e:
        raise NonPolynomialBase(
            f"closed form of ({inner}) < ({outer}) in {inner.spec} "
            + f"is not a polynomial: {e}"
        )

    length = outer.size - inner.size
    eta = length - int(base.degree)
    if eta < 0:
        raise NegativeEta(
            f"closed form of ({inner}) < ({outer}) in {inner.spec} has degree "
            + f"{base.degree} above the interval length {length}"
        )
    return ClosedFormResult(base, eta, base.shift(eta))


def r_tilde(inner: ShapeDiagram, outer: ShapeDiagram) -> Polynomial:
    """The q-free part of the closed form."""
    return r_poly_closed(inner, outer).base


@unique
class SkewKind(Enum):
    EMPTY = "empty"
    ROW = "row"
    COLUMN = "column"
    STANDARD = "standard"
    OTHER = "other"


def classify_skew(skew_diagram: SkewDiagram) -> SkewKind:
    boxes = skew_diagram.boxes
    if not boxes:
        return SkewKind.EMPTY
    rows = {b.row for b in boxes}
    cols = {b.col for b in boxes}
    if 1 == len(rows) and max(cols) - min(cols) + 1 == len(boxes):
        return SkewKind.ROW
    if 1 == len(cols) and max(rows) - min(rows) + 1 == len(boxes):
        return SkewKind.COLUMN
    if standard_skew_shape(skew_diagram) is not None:
        return SkewKind.STANDARD
    return SkewKind.OTHER


def is_staircase(skew_diagram: SkewDiagram) -> bool:
    """Rows of lengths m, m-1, ..., 1, sharing their right or left end."""
    cells = skew_key(skew_diagram)
    m = max((r for r, _ in cells), default=0)
    if m < 2:
        return False
    shifted = {(i, j) for i in range(1, m + 1) for j in range(i, m + 1)}
    young = {(i, j) for i in range(1, m + 1) for j in range(1, m + 2 - i)}
    return cells in (shifted, young)


def is_l_shape(skew_diagram: SkewDiagram) -> bool:
    """A row of two or more boxes plus a column hanging from one of its ends."""
    cells = skew_key(skew_diagram)
    if len(cells) < 3:
        return False
    width = max(c for _, c in cells)
    height = max(r for r, _ in cells)
    if height < 2 or width < 2:
        return False
    row = {(1, j) for j in range(1, width + 1)}
    for col in (1, width):
        if cells == row | {(i, col) for i in range(1, height + 1)}:
            return True
    return False


Comparable = Union[MarkedSkewDiagram, SkewDiagram]


def locality_diagonals(first: Comparable, second: Comparable) -> Set[int]:
    """Diagonals on which two skew diagrams or two markings differ.

    A box differs when it belongs to one skew only, or when its mark or its
    Delta differ between two markings.
    """
    first_skew = first.skew if isinstance(first, MarkedSkewDiagram) else first
    second_skew = second.skew if isinstance(second, MarkedSkewDiagram) else second
    differing: Set[int] = set()
    for b in set(first_skew.boxes) | set(second_skew.boxes):
        if (b in first_skew) != (b in second_skew):
            differing.add(diagonal(b))
            continue
        if isinstance(first, MarkedSkewDiagram) and isinstance(
            second, MarkedSkewDiagram
        ):
            if first.mark(b) != second.mark(b) or first.Delta(b) != second.Delta(b):
                differing.add(diagonal(b))
    if differing:
        logging.debug(f"markings differ on diagonals {sorted(differing)}")
    return differing


class Mismatch(NamedTuple):
    inner: ShapeDiagram
    outer: ShapeDiagram
    closed: Optional[Polynomial]
    oracle: Polynomial


class VerificationResult(NamedTuple):
    spec: QuotientSpec
    pairs: int
    mismatches: List[Mismatch]

    @property
    def ok(self) -> bool:
        return 0 == len(self.mismatches)


def verify_quotient(spec: QuotientSpec, progress: bool = True) -> VerificationResult:
    """Compare the closed form with the oracle over all pairs u <= v.

    Arguments:
            spec {QuotientSpec}

    Keyword Arguments:
            progress {bool} -- show a progress bar (default: {True})

    Returns:
            VerificationResult -- mismatches sorted by (l(u), u, l(v), v)
    """
    group = WeylGroup.from_spec(spec)
    shapes = subdiagrams(spec)
    elements = {shape: group.element_of_shape(shape) for shape in shapes}
    pairs = 0
    mismatches = []
    for inner in tqdm(shapes, desc=str(spec), disable=not progress):
        for outer in shapes:
            if outer.size < inner.size or not contains(inner, outer):
                continue
            pairs += 1
            expected = group.r_poly(elements[inner], elements[outer])
            closed: Optional[Polynomial]
            try:
                closed = r_poly_closed(inner, outer).value
            except ComputationError as e:
                logging.warning(f"{spec} ({inner}) < ({outer}): {e}")
                closed = None
            if closed != expected:
                mismatches.append(Mismatch(inner, outer, closed, expected))
    mismatches.sort(
        key=lambda m: (m.inner.size, m.inner.rows, m.outer.size, m.outer.rows)
    )
    logging.info(f"{spec}: {pairs} pairs, {len(mismatches)} mismatches.")
    return VerificationResult(spec, pairs, mismatches)
