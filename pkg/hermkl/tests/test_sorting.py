"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

from hermkl.asserts import NotQuotientRep, UnsupportedFamily
from hermkl.const import FAMILY
from hermkl.diagrams import QuotientSpec, ShapeDiagram, ambient, subdiagrams
from hermkl.oracle import WeylGroup
from hermkl import sorting
from hermkl.sorting import SignedPermutation
import pytest  # type: ignore

SPECS = [
    "A:3:2",
    "A:4:1",
    "A:5:3",
    "B:3",
    "B:5",
    "C:3",
    "C:4",
    "DA:4",
    "DA:5",
    "DD:3",
    "DD:4",
    "DD:6",
]


def test_SignedPermutation():
    w = SignedPermutation([2, -1, 3])
    assert 3 == len(w)
    assert -1 == w[2]
    assert 1 == w.negatives
    assert w.is_permutation()
    assert not SignedPermutation([1, 1, 3]).is_permutation()
    assert "[2,-1,3]" == str(w)
    assert w == SignedPermutation((2, -1, 3))
    assert hash(w) == hash(SignedPermutation([2, -1, 3]))


def test_is_valid():
    a32 = QuotientSpec.from_str("A:3:2")
    assert sorting.is_valid(SignedPermutation([2, 3, 1, 4]), a32)
    assert not sorting.is_valid(SignedPermutation([2, 3, 1]), a32)
    assert not sorting.is_valid(SignedPermutation([-2, 3, 1, 4]), a32)
    dd3 = QuotientSpec.from_str("DD:3")
    assert sorting.is_valid(SignedPermutation([-2, -1, 3]), dd3)
    assert not sorting.is_valid(SignedPermutation([-2, 1, 3]), dd3)
    assert sorting.is_valid(SignedPermutation([-2, 1, 3]), QuotientSpec.from_str("C:3"))


def test_quotient_membership():
    a32 = QuotientSpec.from_str("A:3:2")
    assert sorting.quotient_membership(SignedPermutation([2, 3, 1, 4]), a32)
    assert not sorting.quotient_membership(SignedPermutation([3, 2, 1, 4]), a32)
    c2 = QuotientSpec.from_str("C:2")
    assert sorting.quotient_membership(sorting.identity(c2), c2)


def test_right_descents():
    c2 = QuotientSpec.from_str("C:2")
    assert {2} == sorting.right_descents(SignedPermutation([-2, -1]), c2)
    assert {1} == sorting.right_descents(SignedPermutation([-2, 1]), c2)
    d3 = QuotientSpec.from_str("DA:3")
    assert {3} == sorting.right_descents(SignedPermutation([1, -3, -2]), d3)
    assert set() == sorting.right_descents(sorting.identity(d3), d3)


def test_partition_to_element():
    a32 = QuotientSpec.from_str("A:3:2")
    m = ShapeDiagram.from_str(ambient(a32), "2")
    assert SignedPermutation([2, 3, 1, 4]) == sorting.partition_to_element(m, a32)
    c2 = QuotientSpec.from_str("C:2")
    full = ShapeDiagram.from_str(ambient(c2), "2,1")
    assert SignedPermutation([-2, -1]) == sorting.partition_to_element(full, c2)
    assert sorting.identity(c2) == sorting.partition_to_element(
        ShapeDiagram(ambient(c2)), c2
    )


def test_sort_to_partition():
    a32 = QuotientSpec.from_str("A:3:2")
    assert (2,) == sorting.sort_to_partition(SignedPermutation([2, 3, 1, 4]), a32).rows
    assert () == sorting.sort_to_partition(sorting.identity(a32), a32).rows
    c2 = QuotientSpec.from_str("C:2")
    assert (2, 1) == sorting.sort_to_partition(SignedPermutation([-2, -1]), c2).rows
    with pytest.raises(NotQuotientRep):
        sorting.sort_to_partition(SignedPermutation([3, 2, 1, 4]), a32)


def test_round_trips():
    for s in SPECS:
        spec = QuotientSpec.from_str(s)
        elements = set()
        for m in subdiagrams(spec):
            w = sorting.partition_to_element(m, spec)
            assert sorting.quotient_membership(w, spec)
            assert m.size == sorting.length(w, spec)
            assert m == sorting.sort_to_partition(w, spec)
            elements.add(w)
        assert len(elements) == len(subdiagrams(spec))


def test_strictly_decreasing_shapes():
    for s in ["C:4", "DA:5"]:
        spec = QuotientSpec.from_str(s)
        for m in subdiagrams(spec):
            w = sorting.partition_to_element(m, spec)
            rows = sorting.sort_to_partition(w, spec).rows
            assert all(a > b for a, b in zip(rows, rows[1:]))


def test_agrees_with_oracle():
    for s in SPECS:
        spec = QuotientSpec.from_str(s)
        group = WeylGroup.from_spec(spec)
        for m in subdiagrams(spec):
            w = sorting.partition_to_element(m, spec)
            element = group.element_of_word(sorting.reduced_word(w, spec))
            assert group.element_of_shape(m) == element
            assert sorting.right_descents(w, spec) == element.right_descents


def test_exceptional_families():
    for family in (FAMILY.E6, FAMILY.E7):
        spec = QuotientSpec(family)
        with pytest.raises(UnsupportedFamily):
            sorting.identity(spec)
        with pytest.raises(UnsupportedFamily):
            sorting.partition_to_element(ShapeDiagram(ambient(spec)), spec)
