"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
"""

import itertools
from hermkl.asserts import NonExactDivision
from hermkl.poly import Polynomial, exact_div, qfact, qint
import pytest  # type: ignore

q = Polynomial.q()


def test_Polynomial_strip():
    assert Polynomial([1, 2, 0, 0]).coeffs == (1, 2)
    assert Polynomial([0, 0]).is_zero
    assert Polynomial().degree == float("-inf")
    assert 2 == Polynomial([0, 0, 3]).valuation
    assert 0 == Polynomial([5]).degree


def test_Polynomial_ring():
    assert (q - 1) * (q + 1) == q ** 2 - 1
    p = 1 + 2 * q + q ** 3
    assert p + 0 == p
    assert p - p == Polynomial.zero()
    assert (1 + q) * (1 + q + q ** 2) == Polynomial([1, 2, 2, 1])
    assert -(q - 1) == 1 - q
    assert q ** 0 == 1
    assert Polynomial.monomial(3, 2) == 2 * q ** 3


def test_Polynomial_pow_negative():
    try:
        q ** -1
    except AssertionError:
        pass
    else:
        assert False, "negative exponents must be rejected"


def test_Polynomial_evaluate():
    assert 0 == (q ** 2 - 1).evaluate(1)
    assert 7 == (1 + q + q ** 2).evaluate(2)
    assert -1 == (q - 1).evaluate(0)


def test_Polynomial_shift_reflect():
    p = Polynomial([1, 2, 3])
    assert p.shift(2) == Polynomial([0, 0, 1, 2, 3])
    assert p.reflect(2) == Polynomial([3, 2, 1])
    assert p.reflect(4) == Polynomial([0, 0, 3, 2, 1])
    assert Polynomial.zero().shift(5).is_zero
    with pytest.raises(AssertionError):
        p.reflect(1)


def test_Polynomial_hash():
    assert len({q + 1, 1 + q, Polynomial([1, 1, 0])}) == 1
    assert q + 1 != q
    assert 1 == len({1, Polynomial.one()})
    assert 1 == len({0, Polynomial.zero()})
    assert hash(-3) == hash(Polynomial([-3]))
    assert {q - 1: "a"}[Polynomial([-1, 1])] == "a"


def test_Polynomial_str():
    assert "q^2 - 1" == str(q ** 2 - 1)
    assert "0" == str(Polynomial.zero())
    assert "-q + 1" == str(1 - q)
    assert "2*q^3 + q" == str(2 * q ** 3 + q)
    assert "q^{2} - 1" == (q ** 2 - 1).latex()


def test_Polynomial_factored_latex():
    p = (q - 1) ** 2 * q ** 10 * (1 + q)
    assert "(q-1)^{2} q^{10} (1 + q)" == p.factored_latex()
    assert "(q-1) q^{6}" == ((q - 1) * q ** 6).factored_latex()
    assert "1" == Polynomial.one().factored_latex()
    assert "q" == q.factored_latex()


def test_qint():
    assert qint(0).is_zero
    assert qint(1) == 1
    assert qint(3) == 1 + q + q ** 2
    for k in range(1, 41):
        assert qint(k) == qint(k - 1) + q ** (k - 1)
        assert qint(k) == 1 + q * qint(k - 1)
        assert k == qint(k).evaluate(1)
    try:
        qint(-1)
    except AssertionError:
        pass
    else:
        assert False, "negative quantum integers must be rejected"


def test_qfact():
    assert qfact(0) == 1
    assert qfact(3) == (1 + q) * (1 + q + q ** 2)
    inversions = [0] * 7
    for perm in itertools.permutations(range(4)):
        inversions[
            sum(1 for i, j in itertools.combinations(range(4), 2) if perm[i] > perm[j])
        ] += 1
    assert qfact(4) == Polynomial(inversions)


def test_exact_div():
    assert exact_div(q ** 2 - 1, q - 1) == q + 1
    p = 3 + q ** 4
    assert exact_div(p, 1) == p
    assert exact_div(0, q + 1).is_zero
    for a in [q - 1, qint(3), 2 * q ** 2 + 3, qfact(4)]:
        for b in [q + 1, qint(4), q ** 3, 2 * q - 1]:
            assert exact_div(a * b, b) == a


def test_exact_div_fails():
    with pytest.raises(NonExactDivision):
        exact_div(q ** 2 + 1, q - 1)
    with pytest.raises(NonExactDivision):
        exact_div(q + 1, 2 * q)
    with pytest.raises(NonExactDivision):
        exact_div(q, q ** 2)
    with pytest.raises(AssertionError):
        exact_div(q, 0)


def test_multiplicity():
    assert 2 == ((q - 1) ** 2 * (q + 2)).multiplicity(1)
    assert 0 == qint(3).multiplicity(1)
