"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

from hermkl.asserts import NotQuotientRep
from hermkl.const import FAMILY
from hermkl.diagrams import (
    QuotientSpec,
    ShapeDiagram,
    addable_boxes,
    ambient,
    contains,
    descents,
    subdiagrams,
)
from hermkl.oracle import CartanData, IntervalKey, WeylGroup
from hermkl.poly import Polynomial
from math import comb
import networkx as nx  # type: ignore
import numpy as np  # type: ignore
import pytest  # type: ignore

q = Polynomial.q()
MINUS_ONE = WeylGroup.XParameter.MINUS_ONE
Q = WeylGroup.XParameter.Q


def group_of(spec: str) -> WeylGroup:
    return WeylGroup.from_spec(QuotientSpec.from_str(spec))


def acceptance_quotients():
    specs = [f"A:{n}:{p}" for n in range(1, 8) for p in range(1, n + 1)]
    specs.extend(f"B:{n}" for n in range(2, 9))
    specs.extend(f"C:{n}" for n in range(2, 8))
    specs.extend(f"DA:{n}" for n in range(3, 8))
    specs.extend(f"DD:{n}" for n in range(3, 9))
    specs.extend(["E6", "E7"])
    return [QuotientSpec.from_str(s) for s in specs]


def expected_cardinality(spec: QuotientSpec) -> int:
    n = spec.rank
    return {
        FAMILY.A: comb(n + 1, spec.p or 0),
        FAMILY.B: 2 * n,
        FAMILY.C: 2 ** n,
        FAMILY.DA: 2 ** (n - 1),
        FAMILY.DD: 2 * n,
        FAMILY.E6: 27,
        FAMILY.E7: 56,
    }[spec.family]


def test_CartanData():
    b3 = CartanData(FAMILY.B, 3).matrix
    assert -2 == b3[2, 1] and -1 == b3[1, 2]
    c3 = CartanData(FAMILY.C, 3).matrix
    assert -2 == c3[1, 2] and -1 == c3[2, 1]
    d4 = CartanData(FAMILY.DD, 4).matrix
    assert -1 == d4[1, 3] and 0 == d4[2, 3]
    e6 = CartanData(FAMILY.E6, 6).matrix
    assert -1 == e6[1, 3] and 0 == e6[1, 2]
    assert 5 == np.count_nonzero(np.triu(e6, 1))
    assert not e6.flags.writeable


def test_simple_reflection_is_involution():
    for family, rank in [(FAMILY.A, 4), (FAMILY.B, 3), (FAMILY.C, 3), (FAMILY.E7, 7)]:
        cartan = CartanData(family, rank)
        for s in range(1, rank + 1):
            r = cartan.simple_reflection(s)
            assert (np.eye(rank, dtype=np.int64) == r @ r).all()


def test_WeylGroup_multiply():
    group = WeylGroup(CartanData(FAMILY.A, 3))
    e = group.identity
    s = group.left_multiply(2, e)
    assert 1 == s.length
    assert {2} == s.left_descents == s.right_descents
    assert e == group.left_multiply(2, s)
    assert group.right_multiply(s, 1) == group.element_of_word([2, 1])
    assert (2, 1) == group.reduced_word(group.element_of_word([2, 1]))
    s13 = group.element_of_word([1, 3])
    assert s13 == group.element_of_word([3, 1])
    assert 2 == s13.length


def test_quotient_cardinalities():
    expected = {
        "A:3:2": 6,
        "A:5:2": 15,
        "B:4": 8,
        "C:3": 8,
        "DA:5": 16,
        "DD:5": 10,
        "E6": 27,
        "E7": 56,
    }
    for spec, count in expected.items():
        group = group_of(spec)
        found = group.enumerate_quotient()
        assert count == len(found)
        assert all(group.is_quotient_rep(w) for w in found)
        assert len(subdiagrams(QuotientSpec.from_str(spec))) == count
    for spec in acceptance_quotients():
        group = WeylGroup.from_spec(spec)
        assert expected_cardinality(spec) == len(group.enumerate_quotient())
        assert expected_cardinality(spec) == len(subdiagrams(spec))


def test_longest_element():
    for spec in ["A:4:2", "C:3", "E6"]:
        group = group_of(spec)
        full = subdiagrams(QuotientSpec.from_str(spec))[-1]
        assert group.element_of_shape(full) == group.longest_element()
        assert full.size == group.longest_element().length


def test_shapes_are_reduced_and_distinct():
    for spec in acceptance_quotients():
        group = WeylGroup.from_spec(spec)
        shapes = subdiagrams(spec)
        elements = [group.element_of_shape(m) for m in shapes]
        assert len(set(elements)) == len(shapes)
        for m, w in zip(shapes, elements):
            assert m.size == w.length
            assert group.is_quotient_rep(w)
            assert m == group.shape_of_element(w)


def precedence_graph(m) -> nx.DiGraph:
    graph = nx.DiGraph()
    graph.add_nodes_from(m.boxes)
    for b in m.boxes:
        graph.add_edges_from((a, b) for a in m.ambient.predecessors(b) if a in m)
    return graph


def test_element_word_linear_extensions():
    for spec in acceptance_quotients():
        group = WeylGroup.from_spec(spec)
        for m in subdiagrams(spec):
            if m.size > 8:
                continue
            expected = group.element_of_shape(m)
            count = 0
            for order in nx.all_topological_sorts(precedence_graph(m)):
                word = [b.label for b in reversed(order)]
                assert expected == group.element_of_word(word), (spec, m, word)
                count += 1
            assert count >= 1


def test_precedence_graph():
    m = ShapeDiagram.from_str(ambient(QuotientSpec.from_str("A:5:3")), "2,2")
    assert 4 == m.size
    assert 2 == len(list(nx.all_topological_sorts(precedence_graph(m))))


def test_descents_are_corner_labels():
    for spec in acceptance_quotients():
        group = WeylGroup.from_spec(spec)
        for m in subdiagrams(spec):
            w = group.element_of_shape(m)
            assert descents(m) == w.left_descents
            ascents = {
                s
                for s in range(1, group.rank + 1)
                if s not in w.left_descents
                and group.is_quotient_rep(group.left_multiply(s, w))
            }
            assert ascents == {b.label for b in addable_boxes(m)}


def test_bruhat_is_containment():
    for spec in acceptance_quotients():
        group = WeylGroup.from_spec(spec)
        shapes = subdiagrams(spec)
        elements = {m: group.element_of_shape(m) for m in shapes}
        for inner in shapes:
            for outer in shapes:
                assert contains(inner, outer) == group.bruhat_leq(
                    elements[inner], elements[outer]
                )


def test_r_poly_trivial_cases():
    group = group_of("A:3:2")
    shapes = subdiagrams(group.spec)
    w = group.element_of_shape(shapes[3])
    assert group.r_poly(w, w) == 1
    one_box = group.element_of_shape(shapes[1])
    assert group.r_poly(group.identity, one_box) == q - 1
    assert group.r_poly(one_box, group.identity).is_zero


def test_r_poly_degree():
    for spec in ["A:4:2", "B:4", "C:3", "DA:5", "DD:5", "E6"]:
        group = group_of(spec)
        elements = group.enumerate_quotient()
        for u in elements:
            for v in elements:
                if not group.bruhat_leq(u, v):
                    continue
                r = group.r_poly(u, v)
                assert v.length - u.length == r.degree
                assert 1 == r.leading_coefficient


def test_r_poly_choice_independence():
    def largest(v, left_descents):
        return max(left_descents)

    for spec in ["A:4:2", "C:3"]:
        group = group_of(spec)
        elements = group.enumerate_quotient()
        for x in WeylGroup.XParameter:
            for u in elements:
                for v in elements:
                    assert group.r_poly(u, v, x) == group.r_poly(
                        u, v, x, choice=largest
                    )


def test_r_poly_empty_J():
    for rank in (2, 3):
        group = WeylGroup(CartanData(FAMILY.A, rank))
        elements = group.enumerate_quotient()
        assert [6, 24][rank - 2] == len(elements)
        for u in elements:
            for v in elements:
                classical = group.classical_r_poly(u, v)
                assert classical == group.r_poly(u, v, MINUS_ONE)
                assert classical == group.r_poly(u, v, Q)

    group = WeylGroup(CartanData(FAMILY.A, 2))
    w0 = group.longest_element()
    assert 3 == w0.length
    assert (q - 1) * (q ** 2 - q + 1) == group.r_poly(group.identity, w0)


def test_r_poly_q_parameter():
    group = group_of("A:3:2")
    e = group.identity
    s2 = group.element_of_word([2])
    s12 = group.element_of_word([1, 2])
    assert q - 1 == group.r_poly(e, s2, Q)
    assert q ** 2 - q == group.r_poly(e, s12, MINUS_ONE)
    assert -q + 1 == group.r_poly(e, s12, Q)


def test_not_quotient_rep():
    group = group_of("A:3:2")
    s1 = group.element_of_word([1])
    assert not group.is_quotient_rep(s1)
    with pytest.raises(NotQuotientRep):
        group.r_poly(group.identity, s1)
    with pytest.raises(NotQuotientRep):
        group.kl_poly(s1, group.longest_element())
    with pytest.raises(NotQuotientRep):
        group.shape_of_element(s1)


def test_interval():
    group = group_of("A:3:2")
    assert 6 == len(group.interval(group.identity, group.longest_element()))
    w = group.element_of_word([2])
    assert [w] == group.interval(w, w)


def test_kl_poly_empty_J():
    group = WeylGroup(CartanData(FAMILY.A, 3))
    e = group.identity
    w = group.element_of_word([2, 1, 3, 2])
    assert 1 + q == group.kl_poly(e, w)
    assert 1 + q == group.kl_poly(group.element_of_word([2]), w)
    assert 1 == group.kl_poly(e, group.longest_element())


def check_kl(group: WeylGroup, pairs) -> None:
    memo = {}
    for u, v in pairs:
        p = group.kl_poly(u, v, memo=memo)
        if u == v:
            assert p == 1
        elif not group.bruhat_leq(u, v):
            assert p.is_zero
        else:
            assert 2 * p.degree <= v.length - u.length - 1
            assert 1 == p.coefficient(0)
            assert all(c >= 0 for c in p.coeffs)


def test_kl_poly_quotients():
    for spec in ["E6", "E7", "A:5:2", "C:3", "DD:5"]:
        group = group_of(spec)
        elements = group.enumerate_quotient()
        check_kl(group, [(u, v) for u in elements for v in elements])


def test_kl_poly_memo_keys():
    group = group_of("A:3:2")
    memo = {}
    top = group.longest_element()
    hook = group.element_of_word([3, 1, 2])
    assert 1 + q == group.kl_poly(group.identity, hook, memo=memo)
    group.kl_poly(group.identity, top, memo=memo)
    assert all(isinstance(key, IntervalKey) for key in memo)
    assert all(0 < key.length <= top.length for key in memo)
    assert memo[IntervalKey(group.identity, top)] == 1


def test_kl_poly_x_q():
    group = group_of("A:3:2")
    top = group.longest_element()
    assert 1 == group.kl_poly(top, top, Q)
    for u in group.enumerate_quotient():
        p = group.kl_poly(u, top, Q)
        assert 2 * p.degree <= top.length - u.length - 1 or u == top
