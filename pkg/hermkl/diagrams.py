"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
@description: Hermitian-type ambient diagrams and their order ideals
"""

from functools import lru_cache
from hermkl.asserts import AmbientMismatch, InvalidSpec, NotAShape, NotContained
from hermkl.const import EXCEPTIONAL_RANK, FAMILY
import re
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

RowLayout = Tuple[int, int, Tuple[int, ...]]


class QuotientSpec(object):
    """Identifies one Hermitian symmetric quotient W/W_J.

    Variables:
            regexp {re.Pattern} -- SpecString grammar
            _family {FAMILY}
            _n {Optional[int]} -- rank parameter (None for E6/E7)
            _p {Optional[int]} -- excluded generator of type A
    """

    regexp = re.compile(r"^(A|B|C|DA|DD|E6|E7)(?::([0-9]+))?(?::([0-9]+))?$")

    def __init__(
        self, family: FAMILY, n: Optional[int] = None, p: Optional[int] = None
    ):
        super(QuotientSpec, self).__init__()
        self._family = family
        self._n = n
        self._p = p
        self._validate()

    def _validate(self) -> None:
        family, n, p = self._family, self._n, self._p
        if family in (FAMILY.E6, FAMILY.E7):
            if n is not None or p is not None:
                raise InvalidSpec(f"{family.value} takes no parameters")
            return
        if n is None:
            raise InvalidSpec(f"{family.value} needs a rank, e.g. {family.value}:4")
        if FAMILY.A == family:
            if p is None:
                raise InvalidSpec("A needs a rank and a generator, e.g. A:4:2")
            if not 1 <= p <= n:
                raise InvalidSpec(f"A:{n}:{p} needs 1 <= p <= n")
            return
        if p is not None:
            raise InvalidSpec(f"{family.value} takes a single parameter")
        minimum = 2 if family in (FAMILY.B, FAMILY.C) else 3
        if n < minimum:
            raise InvalidSpec(f"{family.value}:{n} needs n >= {minimum}")

    @property
    def family(self) -> FAMILY:
        return self._family

    @property
    def n(self) -> Optional[int]:
        return self._n

    @property
    def p(self) -> Optional[int]:
        return self._p

    @property
    def rank(self) -> int:
        """Number of simple generators."""
        if self._family in EXCEPTIONAL_RANK:
            return EXCEPTIONAL_RANK[self._family]
        assert self._n is not None
        return self._n

    @property
    def excluded(self) -> int:
        """The single generator not in J (label of the top-left box)."""
        if FAMILY.A == self._family:
            assert self._p is not None
            return self._p
        if self._family in (FAMILY.C, FAMILY.DA):
            return self.rank
        if FAMILY.E7 == self._family:
            return 7
        return 1

    @property
    def J(self) -> FrozenSet[int]:
        return frozenset(s for s in range(1, self.rank + 1) if s != self.excluded)

    @staticmethod
    def from_str(s: str) -> "QuotientSpec":
        match = QuotientSpec.regexp.match(s.strip())
        if match is None:
            raise InvalidSpec(
                f"cannot parse quotient '{s}'. "
                + "Expected A:<n>:<p>, B:<n>, C:<n>, DA:<n>, DD:<n>, E6 or E7"
            )
        family = FAMILY(match.group(1))
        n = None if match.group(2) is None else int(match.group(2))
        p = None if match.group(3) is None else int(match.group(3))
        return QuotientSpec(family, n, p)

    def __str__(self) -> str:
        parts = [self._family.value]
        if self._n is not None:
            parts.append(str(self._n))
        if self._p is not None:
            parts.append(str(self._p))
        return ":".join(parts)

    def __repr__(self) -> str:
        return f"QuotientSpec('{self}')"

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuotientSpec):
            return NotImplemented
        return (self._family, self._n, self._p) == (other._family, other._n, other._p)

    def __hash__(self) -> int:
        return hash((self._family, self._n, self._p))

    def __lt__(self, other: "QuotientSpec") -> bool:
        return str(self) < str(other)


class Box(NamedTuple):
    row: int
    col: int
    label: int


def _layout_A(n: int, p: int) -> List[RowLayout]:
    return [
        (i, 1, tuple(p + i - j for j in range(1, p + 1))) for i in range(1, n + 2 - p)
    ]


def _layout_B(n: int) -> List[RowLayout]:
    rows = [(1, 1, tuple(range(1, n + 1)))]
    rows.extend((i, n, (n - i + 1,)) for i in range(2, n + 1))
    return rows


def _layout_C(n: int) -> List[RowLayout]:
    return [
        (i, i, tuple(n - (c - i) for c in range(i, n + 1))) for i in range(1, n + 1)
    ]


def _layout_DA(n: int) -> List[RowLayout]:
    rows = []
    for i in range(1, n):
        lead = n if 1 == i % 2 else n - 1
        rows.append((i, i, (lead,) + tuple(n - 1 - (c - i) for c in range(i + 1, n))))
    return rows


def _layout_DD(n: int) -> List[RowLayout]:
    rows = [(1, 1, tuple(range(1, n - 1)) + (n,)), (2, n - 2, (n - 1, n - 2))]
    rows.extend((i, n - 1, (n - i,)) for i in range(3, n))
    return rows


_LAYOUT_E6: List[RowLayout] = [
    (1, 1, (1, 3, 4, 5, 6)),
    (2, 3, (2, 4, 5)),
    (3, 4, (3, 4, 2)),
    (4, 4, (1, 3, 4, 5, 6)),
]

_LAYOUT_E7: List[RowLayout] = [
    (1, 1, (7, 6, 5, 4, 3, 1)),
    (2, 4, (2, 4, 3)),
    (3, 5, (5, 4, 2)),
    (4, 5, (6, 5, 4, 3, 1)),
    (5, 5, (7, 6, 5, 4, 3)),
    (6, 8, (2, 4)),
    (7, 9, (5,)),
    (8, 9, (6,)),
    (9, 9, (7,)),
]


def row_layout(spec: QuotientSpec) -> List[RowLayout]:
    """Rows of the ambient diagram as (row, first column, labels)."""
    family, n = spec.family, spec.n
    if FAMILY.A == family:
        return _layout_A(n, spec.p)
    if FAMILY.B == family:
        return _layout_B(n)
    if FAMILY.C == family:
        return _layout_C(n)
    if FAMILY.DA == family:
        return _layout_DA(n)
    if FAMILY.DD == family:
        return _layout_DD(n)
    if FAMILY.E6 == family:
        return list(_LAYOUT_E6)
    return list(_LAYOUT_E7)


class AmbientDiagram(object):
    """Labeled boxes of a Hermitian-type diagram, with their precedence order.

    A box is preceded by the nearest box to its left in the same row and by
    the nearest box above it in the same column. Order ideals of the
    resulting poset are the elements of W^J.

    Variables:
            _spec {QuotientSpec}
            _rows {Tuple[Tuple[Box]]} -- boxes per row, left to right
            _boxes {Tuple[Box]} -- reading order
            _rank {Dict[Box, int]} -- longest chain ending at a box
            _down {Dict[Box, FrozenSet[Box]]} -- principal ideals
    """

    def __init__(self, spec: QuotientSpec):
        super(AmbientDiagram, self).__init__()
        self._spec = spec
        self._rows = tuple(
            tuple(Box(r, start + k, label) for k, label in enumerate(labels))
            for r, start, labels in row_layout(spec)
        )
        self._boxes = tuple(b for row in self._rows for b in row)
        self._at = {(b.row, b.col): b for b in self._boxes}
        self._predecessors: Dict[Box, Tuple[Box, ...]] = {}
        self._successors: Dict[Box, List[Box]] = {b: [] for b in self._boxes}
        for b in self._boxes:
            preds = []
            left = self._nearest(b, 0, -1)
            above = self._nearest(b, -1, 0)
            for other in (left, above):
                if other is not None:
                    preds.append(other)
                    self._successors[other].append(b)
            self._predecessors[b] = tuple(preds)
        self._rank: Dict[Box, int] = {}
        self._down: Dict[Box, FrozenSet[Box]] = {}
        for b in self._boxes:
            preds = self._predecessors[b]
            self._rank[b] = 1 + max((self._rank[a] for a in preds), default=0)
            down = {b}
            for a in preds:
                down |= self._down[a]
            self._down[b] = frozenset(down)

    def _nearest(self, b: Box, drow: int, dcol: int) -> Optional[Box]:
        row, col = b.row + drow, b.col + dcol
        while row >= 1 and col >= 1:
            if (row, col) in self._at:
                return self._at[(row, col)]
            row, col = row + drow, col + dcol
        return None

    @property
    def spec(self) -> QuotientSpec:
        return self._spec

    @property
    def boxes(self) -> Tuple[Box, ...]:
        return self._boxes

    @property
    def rows(self) -> Tuple[Tuple[Box, ...], ...]:
        return self._rows

    @property
    def width(self) -> int:
        return max(b.col for b in self._boxes)

    @property
    def height(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._boxes)

    def box_at(self, row: int, col: int) -> Optional[Box]:
        return self._at.get((row, col), None)

    def predecessors(self, box: Box) -> Tuple[Box, ...]:
        return self._predecessors[box]

    def successors(self, box: Box) -> Tuple[Box, ...]:
        return tuple(self._successors[box])

    def rank_of(self, box: Box) -> int:
        return self._rank[box]

    def leq(self, a: Box, b: Box) -> bool:
        return a in self._down[b]

    def boxes_labeled(self, label: int) -> Tuple[Box, ...]:
        return tuple(b for b in self._boxes if b.label == label)

    def __eq__(self, other) -> bool:
        if not isinstance(other, AmbientDiagram):
            return NotImplemented
        return self._spec == other._spec

    def __hash__(self) -> int:
        return hash(("AmbientDiagram", self._spec))

    def __repr__(self) -> str:
        return f"AmbientDiagram('{self._spec}', {len(self)} boxes)"


@lru_cache(maxsize=None)
def ambient(spec: QuotientSpec) -> AmbientDiagram:
    return AmbientDiagram(spec)


def diagonal(box: Box) -> int:
    return box.col - box.row


def _shape_table_message(spec: QuotientSpec) -> str:
    family, n = spec.family, spec.n
    if FAMILY.A == family:
        return (
            f"{spec} shapes have at most {n + 1 - spec.p} weakly decreasing "
            + f"parts, each at most {spec.p}"
        )
    if FAMILY.B == family:
        return f"{spec} shapes are (m) with m <= {n}, or ({n},1,...,1)"
    if FAMILY.C == family:
        return f"{spec} shapes have strictly decreasing parts, each at most {n}"
    if FAMILY.DA == family:
        return f"{spec} shapes have strictly decreasing parts, each at most {n - 1}"
    if FAMILY.DD == family:
        return (
            f"{spec} shapes are (m) with m <= {n - 1}, ({n - 2},1), ({n - 1},1), "
            + f"({n - 1},2) or ({n - 1},2,1,...,1)"
        )
    return f"{spec} shapes are order ideals of the {spec} diagram"


class ShapeDiagram(object):
    """An order ideal of an ambient diagram, stored by row lengths.

    Variables:
            regexp {re.Pattern} -- PartitionString grammar
            _ambient {AmbientDiagram}
            _rows {Tuple[int]} -- row lengths, trailing zeros dropped
            _boxes {Tuple[Box]} -- reading order
    """

    regexp = re.compile(r"^\s*([0-9]+(\s*,\s*[0-9]+)*)?\s*$")

    def __init__(self, ambient_diagram: AmbientDiagram, rows: Iterable[int] = ()):
        super(ShapeDiagram, self).__init__()
        self._ambient = ambient_diagram
        lengths = [int(r) for r in rows]
        while lengths and 0 == lengths[-1]:
            lengths.pop()
        self._rows = tuple(lengths)
        self._boxes = self._collect()
        self._box_set = frozenset(self._boxes)
        self._check_ideal()

    def _fail(self, reason: str) -> NotAShape:
        return NotAShape(
            f"({','.join(map(str, self._rows))}) is not a shape of "
            + f"{self.spec}: {reason}. {_shape_table_message(self.spec)}"
        )

    def _collect(self) -> Tuple[Box, ...]:
        ambient_rows = self._ambient.rows
        if len(self._rows) > len(ambient_rows):
            raise self._fail(f"more than {len(ambient_rows)} rows")
        boxes: List[Box] = []
        for i, length in enumerate(self._rows):
            if length < 0:
                raise self._fail("negative row length")
            if length > len(ambient_rows[i]):
                raise self._fail(f"row {i + 1} is longer than {len(ambient_rows[i])}")
            boxes.extend(ambient_rows[i][:length])
        return tuple(boxes)

    def _check_ideal(self) -> None:
        for b in self._boxes:
            for a in self._ambient.predecessors(b):
                if a not in self._box_set:
                    raise self._fail(
                        f"box ({b.row},{b.col}) is present "
                        + f"but ({a.row},{a.col}) is not"
                    )

    @staticmethod
    def from_str(ambient_diagram: AmbientDiagram, s: str) -> "ShapeDiagram":
        match = ShapeDiagram.regexp.match(s)
        if match is None:
            raise NotAShape(
                f"cannot parse partition '{s}'. "
                + "Expected comma-separated row lengths, e.g. 5,4,4,4,1"
            )
        if match.group(1) is None:
            return ShapeDiagram(ambient_diagram)
        return ShapeDiagram(ambient_diagram, (int(x) for x in s.split(",")))

    @staticmethod
    def from_boxes(ambient_diagram: AmbientDiagram, boxes: Iterable[Box]):
        box_set = set(boxes)
        rows = []
        for row in ambient_diagram.rows:
            length = 0
            while length < len(row) and row[length] in box_set:
                length += 1
            if any(b in box_set for b in row[length:]):
                raise NotAShape(f"boxes of row {row[0].row} are not a row prefix")
            rows.append(length)
        return ShapeDiagram(ambient_diagram, rows)

    @property
    def ambient(self) -> AmbientDiagram:
        return self._ambient

    @property
    def spec(self) -> QuotientSpec:
        return self._ambient.spec

    @property
    def rows(self) -> Tuple[int, ...]:
        return self._rows

    @property
    def boxes(self) -> Tuple[Box, ...]:
        return self._boxes

    @property
    def box_set(self) -> FrozenSet[Box]:
        return self._box_set

    @property
    def size(self) -> int:
        return len(self._boxes)

    def __contains__(self, box: Box) -> bool:
        return box in self._box_set

    def add(self, box: Box) -> "ShapeDiagram":
        return ShapeDiagram.from_boxes(self._ambient, self._box_set | {box})

    def remove(self, box: Box) -> "ShapeDiagram":
        return ShapeDiagram.from_boxes(self._ambient, self._box_set - {box})

    def __eq__(self, other) -> bool:
        if not isinstance(other, ShapeDiagram):
            return NotImplemented
        return self._ambient == other._ambient and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self.spec, self._rows))

    def __lt__(self, other: "ShapeDiagram") -> bool:
        return (self.size, self._rows) < (other.size, other._rows)

    def __str__(self) -> str:
        return ",".join(str(r) for r in self._rows)

    def __repr__(self) -> str:
        return f"ShapeDiagram('{self.spec}', '{self}')"


class SkewDiagram(object):
    """The boxes of an outer shape that are not in an inner shape."""

    def __init__(self, outer: ShapeDiagram, inner: ShapeDiagram):
        super(SkewDiagram, self).__init__()
        self._outer = outer
        self._inner = inner
        self._boxes = tuple(b for b in outer.boxes if b not in inner)

    @property
    def outer(self) -> ShapeDiagram:
        return self._outer

    @property
    def inner(self) -> ShapeDiagram:
        return self._inner

    @property
    def ambient(self) -> AmbientDiagram:
        return self._outer.ambient

    @property
    def boxes(self) -> Tuple[Box, ...]:
        return self._boxes

    def __len__(self) -> int:
        return len(self._boxes)

    def __iter__(self):
        return iter(self._boxes)

    def __contains__(self, box: Box) -> bool:
        return box in self._boxes

    def __repr__(self) -> str:
        return f"SkewDiagram('{self._outer}' / '{self._inner}')"


def subdiagrams(spec: QuotientSpec) -> List[ShapeDiagram]:
    """All order ideals, by increasing size (empty and full included).

    Arguments:
            spec {QuotientSpec}

    Returns:
            List[ShapeDiagram]
    """
    diagram = ambient(spec)
    level = [ShapeDiagram(diagram)]
    shapes: List[ShapeDiagram] = []
    while level:
        shapes.extend(level)
        following = set()
        for shape in level:
            for box in addable_boxes(shape):
                following.add(shape.add(box))
        level = sorted(following)
    return shapes


def _same_ambient(first: ShapeDiagram, second: ShapeDiagram) -> None:
    if first.ambient != second.ambient:
        raise AmbientMismatch(
            f"shapes live in different diagrams: {first.spec} and {second.spec}"
        )


def contains(inner: ShapeDiagram, outer: ShapeDiagram) -> bool:
    _same_ambient(inner, outer)
    if len(inner.rows) > len(outer.rows):
        return False
    return all(a <= b for a, b in zip(inner.rows, outer.rows))


def outside_corners(shape: ShapeDiagram) -> List[Box]:
    """Boxes whose removal leaves an order ideal."""
    diagram = shape.ambient
    return [
        b
        for b in shape.boxes
        if not any(c in shape for c in diagram.successors(b))
    ]


def addable_boxes(shape: ShapeDiagram) -> List[Box]:
    """Boxes whose addition gives an order ideal."""
    diagram = shape.ambient
    return [
        b
        for b in diagram.boxes
        if b not in shape and all(a in shape for a in diagram.predecessors(b))
    ]


def skew(outer: ShapeDiagram, inner: ShapeDiagram) -> SkewDiagram:
    if not contains(inner, outer):
        raise NotContained(f"({inner}) is not contained in ({outer}) in {outer.spec}")
    return SkewDiagram(outer, inner)


def element_word(shape: ShapeDiagram) -> List[int]:
    """Reduced word a_1...a_N of the element of a shape.

    The reading order of the boxes is reversed, so a_1 labels an outside
    corner.
    """
    return [b.label for b in reversed(shape.boxes)]


def shape_table_conforms(shape: ShapeDiagram) -> bool:
    """Check a row profile against the family's shape table."""
    spec, rows = shape.spec, shape.rows
    family, n = spec.family, spec.n
    if not rows:
        return True
    weakly = all(a >= b for a, b in zip(rows, rows[1:]))
    strictly = all(a > b for a, b in zip(rows, rows[1:]))
    if FAMILY.A == family:
        return len(rows) <= n + 1 - spec.p and weakly and rows[0] <= spec.p
    if FAMILY.C == family:
        return strictly and rows[0] <= n
    if FAMILY.DA == family:
        return strictly and rows[0] <= n - 1
    if FAMILY.B == family:
        if 1 == len(rows):
            return rows[0] <= n
        return rows[0] == n and all(1 == r for r in rows[1:])
    if FAMILY.DD == family:
        if 1 == len(rows):
            return rows[0] <= n - 1
        if rows in ((n - 2, 1), (n - 1, 1), (n - 1, 2)):
            return True
        return rows[:2] == (n - 1, 2) and all(1 == r for r in rows[2:])
    return True


def descents(shape: ShapeDiagram) -> FrozenSet[int]:
    """Labels of the outside corners, i.e. the left descents of the element."""
    return frozenset(b.label for b in outside_corners(shape))


def act(s: int, shape: ShapeDiagram) -> Optional[ShapeDiagram]:
    """Shape of s*w for the element w of a shape.

    Returns None when s*w falls outside the minimal coset representatives.
    """
    for b in outside_corners(shape):
        if b.label == s:
            return shape.remove(b)
    for b in addable_boxes(shape):
        if b.label == s:
            return shape.add(b)
    return None
