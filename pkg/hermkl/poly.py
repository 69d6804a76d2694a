"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
@description: exact integer polynomials in q
"""

from hermkl.asserts import NonExactDivision
from typing import Iterable, List, Tuple, Union

Coefficient = int
PolyLike = Union["Polynomial", int]


class Polynomial(object):
    """Dense univariate polynomial with integer coefficients.

    Coefficients are stored in ascending order, trailing zeros removed. The
    zero polynomial has no coefficients and degree -inf. Instances are
    immutable and hashable.

    Variables:
            _coeffs {Tuple[int]} -- coefficient of q^i at index i
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Coefficient] = ()):
        super(Polynomial, self).__init__()
        stripped: List[int] = [int(c) for c in coeffs]
        while stripped and 0 == stripped[-1]:
            stripped.pop()
        self._coeffs: Tuple[int, ...] = tuple(stripped)

    @staticmethod
    def zero() -> "Polynomial":
        return Polynomial()

    @staticmethod
    def one() -> "Polynomial":
        return Polynomial((1,))

    @staticmethod
    def q() -> "Polynomial":
        return Polynomial((0, 1))

    @staticmethod
    def monomial(exponent: int, coefficient: int = 1) -> "Polynomial":
        assert exponent >= 0, "monomial exponents must be nonnegative"
        return Polynomial([0] * exponent + [coefficient])

    @staticmethod
    def coerce(other: PolyLike) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial((other,))
        raise TypeError(f"cannot use {type(other).__name__} as a polynomial")

    @property
    def coeffs(self) -> Tuple[int, ...]:
        return self._coeffs

    @property
    def degree(self) -> Union[int, float]:
        if not self._coeffs:
            return float("-inf")
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return 0 == len(self._coeffs)

    @property
    def leading_coefficient(self) -> int:
        if self.is_zero:
            return 0
        return self._coeffs[-1]

    @property
    def valuation(self) -> int:
        """Exponent of the lowest nonzero term (0 for the zero polynomial)."""
        for i, c in enumerate(self._coeffs):
            if 0 != c:
                return i
        return 0

    def coefficient(self, i: int) -> int:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = Polynomial.coerce(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __ne__(self, other) -> bool:
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self) -> int:
        if len(self._coeffs) <= 1:
            return hash(self.coefficient(0))
        return hash(("Polynomial", self._coeffs))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self._coeffs)

    def __add__(self, other: PolyLike) -> "Polynomial":
        other = Polynomial.coerce(other)
        size = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(
            self.coefficient(i) + other.coefficient(i) for i in range(size)
        )

    __radd__ = __add__

    def __sub__(self, other: PolyLike) -> "Polynomial":
        return self + (-Polynomial.coerce(other))

    def __rsub__(self, other: PolyLike) -> "Polynomial":
        return Polynomial.coerce(other) - self

    def __mul__(self, other: PolyLike) -> "Polynomial":
        other = Polynomial.coerce(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        product = [0] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if 0 == a:
                continue
            for j, b in enumerate(other._coeffs):
                product[i + j] += a * b
        return Polynomial(product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        assert isinstance(exponent, int) and exponent >= 0, (
            "polynomials can only be raised to nonnegative integer powers"
        )
        result = Polynomial.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def evaluate(self, x: int) -> int:
        """Horner evaluation at an integer."""
        value = 0
        for c in reversed(self._coeffs):
            value = value * x + c
        return value

    def shift(self, exponent: int) -> "Polynomial":
        """Multiply by q^exponent."""
        assert exponent >= 0, "shift exponent must be nonnegative"
        if self.is_zero:
            return self
        return Polynomial([0] * exponent + list(self._coeffs))

    def reflect(self, n: int) -> "Polynomial":
        """Compute q^n P(1/q).

        Arguments:
                n {int} -- must be at least the degree

        Returns:
                Polynomial
        """
        assert self.degree <= n, f"cannot reflect degree {self.degree} at {n}"
        return Polynomial(self.coefficient(n - i) for i in range(n + 1))

    def multiplicity(self, root: int) -> int:
        """Multiplicity of (q - root) as a factor (0 for the zero polynomial)."""
        if self.is_zero:
            return 0
        count = 0
        current = self
        linear = Polynomial((-root, 1))
        while 0 == current.evaluate(root):
            current = exact_div(current, linear)
            count += 1
        return count

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)})"

    def __str__(self) -> str:
        return self._render(latex=False)

    def latex(self) -> str:
        return self._render(latex=True)

    def _render(self, latex: bool, ascending: bool = False) -> str:
        if self.is_zero:
            return "0"
        terms = [(i, c) for i, c in enumerate(self._coeffs) if 0 != c]
        if not ascending:
            terms = terms[::-1]
        out = ""
        for position, (i, c) in enumerate(terms):
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if 0 == i:
                body = str(magnitude)
            else:
                power = "q" if 1 == i else (f"q^{{{i}}}" if latex else f"q^{i}")
                if 1 == magnitude:
                    body = power
                else:
                    body = f"{magnitude} {power}" if latex else f"{magnitude}*{power}"
            if 0 == position:
                out = f"-{body}" if "-" == sign else body
            else:
                out += f" {sign} {body}"
        return out

    def factored_latex(self) -> str:
        """Render as (q-1)^k q^e (rest), with rest in ascending order.

        Exact comparison must use coefficients: this rendering is for
        display only.

        Returns:
                str
        """
        if self.is_zero:
            return "0"
        eta = self.valuation
        rest = Polynomial(self._coeffs[eta:])
        k = rest.multiplicity(1)
        rest = exact_div(rest, Polynomial((-1, 1)) ** k)
        factors = []
        if 1 == k:
            factors.append("(q-1)")
        elif k > 1:
            factors.append(f"(q-1)^{{{k}}}")
        if 1 == eta:
            factors.append("q")
        elif eta > 1:
            factors.append(f"q^{{{eta}}}")
        if rest != 1 or not factors:
            if 1 == len([c for c in rest.coeffs if 0 != c]) and not factors:
                factors.append(rest._render(latex=True, ascending=True))
            else:
                factors.append(f"({rest._render(latex=True, ascending=True)})")
        return " ".join(factors)


def qint(m: int) -> Polynomial:
    """Quantum integer [m] = 1 + q + ... + q^{m-1}; [0] = 0."""
    assert m >= 0, f"quantum integers need a nonnegative argument, got {m}"
    return Polynomial([1] * m)


def qfact(m: int) -> Polynomial:
    """Quantum factorial [m!] = [m][m-1]...[1]; [0!] = 1."""
    assert m >= 0, f"quantum factorials need a nonnegative argument, got {m}"
    result = Polynomial.one()
    for k in range(1, m + 1):
        result = result * qint(k)
    return result


def exact_div(num: PolyLike, den: PolyLike) -> Polynomial:
    """Divide num by den over the integers.

    Arguments:
            num {Polynomial}
            den {Polynomial} -- nonzero

    Returns:
            Polynomial -- the exact quotient

    Raises:
            NonExactDivision -- if den does not divide num in Z[q]
    """
    num = Polynomial.coerce(num)
    den = Polynomial.coerce(den)
    assert not den.is_zero, "division by the zero polynomial"
    if num.is_zero:
        return Polynomial()
    if num.degree < den.degree:
        raise NonExactDivision(f"({num}) is not divisible by ({den})")

    remainder = list(num.coeffs)
    d = len(den.coeffs) - 1
    lead = den.leading_coefficient
    quotient = [0] * (len(remainder) - d)
    for i in range(len(quotient) - 1, -1, -1):
        top = remainder[i + d]
        if 0 != top % lead:
            raise NonExactDivision(
                f"({num}) is not divisible by ({den}): "
                + f"coefficient {top} of q^{i + d} is not a multiple of {lead}"
            )
        factor = top // lead
        quotient[i] = factor
        for j, c in enumerate(den.coeffs):
            remainder[i + j] -= factor * c

    if any(0 != c for c in remainder):
        raise NonExactDivision(
            f"({num}) is not divisible by ({den}): "
            + f"remainder {Polynomial(remainder)}"
        )
    return Polynomial(quotient)
