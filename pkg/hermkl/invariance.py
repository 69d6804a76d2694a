"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
@description: interval posets and combinatorial invariance of relative
R- and KL polynomials
"""

from collections import defaultdict
from hermkl.const import FAMILY
from hermkl.diagrams import (
    QuotientSpec,
    ShapeDiagram,
    SkewDiagram,
    addable_boxes,
    ambient,
    contains,
    skew,
    subdiagrams,
)
from hermkl.oracle import WeylGroup
from hermkl.poly import Polynomial
from joblib import Parallel, delayed  # type: ignore
import logging
import multiprocessing as mp
import networkx as nx  # type: ignore
from networkx.algorithms import isomorphism as iso  # type: ignore
from tqdm import tqdm  # type: ignore
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Set, Tuple

Cells = FrozenSet[Tuple[int, int]]
Partition = Tuple[int, ...]


def skew_key(skew_diagram: SkewDiagram) -> Cells:
    """Box coordinates translated so that the top row and left column are 1."""
    boxes = skew_diagram.boxes
    if not boxes:
        return frozenset()
    top = min(b.row for b in boxes)
    left = min(b.col for b in boxes)
    return frozenset((b.row - top + 1, b.col - left + 1) for b in boxes)


def standard_skew_shape(
    skew_diagram: SkewDiagram,
) -> Optional[Tuple[Partition, Partition]]:
    """Young partitions (λ, μ) of a skew diagram, if it is one.

    The translated boxes must be λ/μ for partitions λ and μ, and the
    ambient order restricted to the boxes must be the product order of the
    coordinates.

    Arguments:
            skew_diagram {SkewDiagram}

    Returns:
            Optional[Tuple[Partition, Partition]] -- None if not standard
    """
    cells = skew_key(skew_diagram)
    if not cells:
        return None
    height = max(r for r, _ in cells)
    outer: List[int] = []
    inner: List[int] = []
    for r in range(1, height + 1):
        cols = sorted(c for rr, c in cells if rr == r)
        if not cols or cols[-1] - cols[0] + 1 != len(cols):
            return None
        outer.append(cols[-1])
        inner.append(cols[0] - 1)
    if any(a < b for a, b in zip(outer, outer[1:])):
        return None
    if any(a < b for a, b in zip(inner, inner[1:])):
        return None

    diagram = skew_diagram.ambient
    boxes = skew_diagram.boxes
    for a in boxes:
        for b in boxes:
            product = a.row <= b.row and a.col <= b.col
            if product != diagram.leq(a, b):
                return None

    while inner and 0 == inner[-1]:
        inner.pop()
    return tuple(outer), tuple(inner)


def type_a_realization(
    skew_diagram: SkewDiagram,
) -> Optional[Tuple[QuotientSpec, ShapeDiagram, ShapeDiagram]]:
    """Place a standard skew diagram λ/μ in the smallest fitting A:n:p.

    Returns:
            Optional[Tuple[QuotientSpec, ShapeDiagram, ShapeDiagram]] --
                    (spec, inner, outer), None if the skew is not standard
    """
    shape = standard_skew_shape(skew_diagram)
    if shape is None:
        return None
    outer, inner = shape
    p = outer[0]
    spec = QuotientSpec(FAMILY.A, len(outer) + p - 1, p)
    diagram = ambient(spec)
    return spec, ShapeDiagram(diagram, inner), ShapeDiagram(diagram, outer)


class IntervalPoset(object):
    """The Bruhat interval [M, Λ] as a graded poset of shapes.

    Nodes are shapes carrying their rank, edges are covering relations
    directed upwards.

    Variables:
            _inner {ShapeDiagram}
            _outer {ShapeDiagram}
            _graph {nx.DiGraph}
    """

    def __init__(self, inner: ShapeDiagram, outer: ShapeDiagram):
        super(IntervalPoset, self).__init__()
        skew(outer, inner)
        self._inner = inner
        self._outer = outer
        self._graph = nx.DiGraph()
        self._graph.add_node(inner, rank=0, tag="0")
        level = [inner]
        while level:
            following: Set[ShapeDiagram] = set()
            for shape in level:
                for box in addable_boxes(shape):
                    if box not in outer:
                        continue
                    bigger = shape.add(box)
                    rank = bigger.size - inner.size
                    if bigger not in self._graph:
                        self._graph.add_node(bigger, rank=rank, tag=str(rank))
                    self._graph.add_edge(shape, bigger)
                    following.add(bigger)
            level = sorted(following)
        self._hash: Optional[str] = None

    @property
    def inner(self) -> ShapeDiagram:
        return self._inner

    @property
    def outer(self) -> ShapeDiagram:
        return self._outer

    @property
    def graph(self) -> nx.DiGraph:
        return self._graph

    @property
    def length(self) -> int:
        return self._outer.size - self._inner.size

    def __len__(self) -> int:
        return self._graph.number_of_nodes()

    def rank(self, shape: ShapeDiagram) -> int:
        return self._graph.nodes[shape]["rank"]

    @property
    def rank_profile(self) -> Tuple[int, ...]:
        counts = [0] * (self.length + 1)
        for _, rank in self._graph.nodes(data="rank"):
            counts[rank] += 1
        return tuple(counts)

    @property
    def signature(self) -> Tuple:
        """Cheap isomorphism invariant."""
        degrees = sorted(
            (rank, self._graph.in_degree(node), self._graph.out_degree(node))
            for node, rank in self._graph.nodes(data="rank")
        )
        return (len(self), self.rank_profile, tuple(degrees))

    @property
    def wl_hash(self) -> str:
        if self._hash is None:
            self._hash = nx.weisfeiler_lehman_graph_hash(self._graph, node_attr="tag")
        return self._hash

    def __repr__(self) -> str:
        return f"IntervalPoset('{self._inner}' < '{self._outer}', {len(self)} nodes)"


def interval(inner: ShapeDiagram, outer: ShapeDiagram) -> IntervalPoset:
    return IntervalPoset(inner, outer)


def poset_isomorphic(
    first: IntervalPoset, second: IntervalPoset
) -> Optional[Dict[ShapeDiagram, ShapeDiagram]]:
    """Rank-preserving isomorphism between two interval posets, if any."""
    if first.signature != second.signature:
        return None
    matcher = iso.DiGraphMatcher(
        first.graph,
        second.graph,
        node_match=iso.categorical_node_match("rank", None),
    )
    if matcher.is_isomorphic():
        return dict(matcher.mapping)
    return None


class IntervalRecord(NamedTuple):
    spec: QuotientSpec
    inner: ShapeDiagram
    outer: ShapeDiagram
    poset: IntervalPoset
    r_poly: Polynomial
    kl_poly: Polynomial


class IntervalClass(object):
    """Intervals sharing one poset isomorphism type."""

    def __init__(self, representative: IntervalRecord):
        super(IntervalClass, self).__init__()
        self._poset = representative.poset
        self._members: List[IntervalRecord] = []
        self._r_polys: Set[Polynomial] = set()
        self._kl_polys: Set[Polynomial] = set()
        self.append(representative)

    def append(self, record: IntervalRecord) -> None:
        self._members.append(record)
        self._r_polys.add(record.r_poly)
        self._kl_polys.add(record.kl_poly)

    @property
    def poset(self) -> IntervalPoset:
        return self._poset

    @property
    def members(self) -> List[IntervalRecord]:
        return self._members

    @property
    def size(self) -> int:
        return len(self._members)

    @property
    def r_polys(self) -> Set[Polynomial]:
        return self._r_polys

    @property
    def kl_polys(self) -> Set[Polynomial]:
        return self._kl_polys

    @property
    def consistent(self) -> bool:
        return 1 == len(self._r_polys) and 1 == len(self._kl_polys)

    @property
    def representative(self) -> IntervalRecord:
        return self._members[0]

    def to_dict(self) -> Dict:
        first = self.representative
        return {
            "length": self._poset.length,
            "size": self.size,
            "representative": {
                "quotient": str(first.spec),
                "u": str(first.inner),
                "v": str(first.outer),
            },
            "r_poly": list(first.r_poly.coeffs) if self.consistent else None,
            "kl_poly": list(first.kl_poly.coeffs) if self.consistent else None,
            "rank_profile": list(self._poset.rank_profile),
            "members": [
                {"quotient": str(m.spec), "u": str(m.inner), "v": str(m.outer)}
                for m in self._members
            ],
            "r_polys": sorted([list(p.coeffs) for p in self._r_polys]),
            "kl_polys": sorted([list(p.coeffs) for p in self._kl_polys]),
        }


class InvarianceReport(object):
    def __init__(self, quotients: List[QuotientSpec], classes: List[IntervalClass]):
        super(InvarianceReport, self).__init__()
        self._quotients = quotients
        self._classes = classes

    @property
    def quotients(self) -> List[QuotientSpec]:
        return self._quotients

    @property
    def classes(self) -> List[IntervalClass]:
        return self._classes

    @property
    def intervals(self) -> int:
        return sum(c.size for c in self._classes)

    @property
    def violations(self) -> List[IntervalClass]:
        return [c for c in self._classes if not c.consistent]

    @property
    def ok(self) -> bool:
        return 0 == len(self.violations)

    def to_dict(self) -> Dict:
        return {
            "quotients": [str(s) for s in self._quotients],
            "intervals": self.intervals,
            "class_count": len(self._classes),
            "classes": [c.to_dict() for c in self._classes],
            "violations": [c.to_dict() for c in self.violations],
            "ok": self.ok,
        }


def collect_intervals(spec: QuotientSpec, max_length: int) -> List[IntervalRecord]:
    """Intervals of positive length up to max_length, with oracle polynomials."""
    group = WeylGroup.from_spec(spec)
    shapes = subdiagrams(spec)
    elements = {shape: group.element_of_shape(shape) for shape in shapes}
    kl_memo: Dict = {}
    records = []
    for inner in shapes:
        for outer in shapes:
            length = outer.size - inner.size
            if not 0 < length <= max_length or not contains(inner, outer):
                continue
            u, v = elements[inner], elements[outer]
            records.append(
                IntervalRecord(
                    spec,
                    inner,
                    outer,
                    IntervalPoset(inner, outer),
                    group.r_poly(u, v),
                    group.kl_poly(u, v, memo=kl_memo),
                )
            )
    logging.info(f"Collected {len(records)} intervals from {spec}.")
    return records


def classify_intervals(records: List[IntervalRecord]) -> List[IntervalClass]:
    """Split intervals into poset isomorphism classes."""
    buckets: Dict[str, List[IntervalRecord]] = defaultdict(list)
    for record in records:
        buckets[record.poset.wl_hash].append(record)

    classes: List[IntervalClass] = []
    for key in sorted(buckets.keys()):
        bucket_classes: List[IntervalClass] = []
        for record in buckets[key]:
            for interval_class in bucket_classes:
                if poset_isomorphic(interval_class.poset, record.poset) is not None:
                    interval_class.append(record)
                    break
            else:
                bucket_classes.append(IntervalClass(record))
        classes.extend(bucket_classes)
    return classes


def invariance_report(
    quotients: List[QuotientSpec], max_length: int, threads: int = 1
) -> InvarianceReport:
    """Check that isomorphic intervals carry equal R- and KL polynomials.

    Arguments:
            quotients {List[QuotientSpec]}
            max_length {int} -- longest interval considered

    Keyword Arguments:
            threads {int} -- parallel workers, one quotient each (default: {1})

    Returns:
            InvarianceReport
    """
    assert max_length >= 1, "the maximum interval length must be positive"
    threads = max(1, min(threads, mp.cpu_count()))
    if 1 == threads:
        collected = [collect_intervals(spec, max_length) for spec in tqdm(quotients)]
    else:
        collected = Parallel(n_jobs=threads, verbose=11)(
            delayed(collect_intervals)(spec, max_length) for spec in quotients
        )
    records = [record for batch in collected for record in batch]
    classes = classify_intervals(records)
    report = InvarianceReport(list(quotients), classes)
    logging.info(
        f"Found {len(classes)} isomorphism classes over {report.intervals} "
        + f"intervals, {len(report.violations)} violating."
    )
    return report
