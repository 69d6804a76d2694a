"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
@description: Weyl group arithmetic on simple-root coordinates, used as
independent ground truth for Bruhat order, R-polynomials and KL polynomials
"""

from collections import deque
from enum import Enum, unique
from hermkl.asserts import InversionInconsistent, NotQuotientRep
from hermkl.const import FAMILY
from hermkl.diagrams import QuotientSpec, ShapeDiagram, element_word, subdiagrams
from hermkl.poly import Polynomial
import numpy as np  # type: ignore
from typing import Callable, Dict, FrozenSet, List, NamedTuple, Optional, Tuple

ChoiceFunction = Callable[["GroupElement", FrozenSet[int]], int]


class CartanData(object):
    """Bourbaki Cartan matrix of a crystallographic root system.

    Entry a_ij of the matrix is <alpha_i^vee, alpha_j>, so that the simple
    reflection s_i sends alpha_j to alpha_j - a_ij alpha_i.

    Variables:
            _family {FAMILY}
            _rank {int}
            _J {FrozenSet[int]} -- generators of the parabolic subgroup
            _matrix {np.ndarray} -- int64, 0-based
    """

    def __init__(self, family: FAMILY, rank: int, J: FrozenSet[int] = frozenset()):
        super(CartanData, self).__init__()
        assert all(1 <= s <= rank for s in J), f"J must be a subset of 1..{rank}"
        self._family = family
        self._rank = rank
        self._J = frozenset(J)
        self._matrix = CartanData.build_matrix(family, rank)
        self._matrix.setflags(write=False)

    @staticmethod
    def from_spec(spec: QuotientSpec) -> "CartanData":
        return CartanData(spec.family, spec.rank, spec.J)

    @staticmethod
    def build_matrix(family: FAMILY, rank: int) -> np.ndarray:
        a = 2 * np.eye(rank, dtype=np.int64)

        def join(i: int, j: int) -> None:
            a[i - 1, j - 1] = -1
            a[j - 1, i - 1] = -1

        if family in (FAMILY.E6, FAMILY.E7):
            chain = [1, 3, 4, 5, 6, 7][: rank - 1]
            for i, j in zip(chain, chain[1:]):
                join(i, j)
            join(2, 4)
        elif family in (FAMILY.DA, FAMILY.DD):
            for i in range(1, rank - 1):
                join(i, i + 1)
            join(rank - 2, rank)
        else:
            for i in range(1, rank):
                join(i, i + 1)
            if FAMILY.B == family:
                a[rank - 1, rank - 2] = -2
            elif FAMILY.C == family:
                a[rank - 2, rank - 1] = -2
        return a

    @property
    def family(self) -> FAMILY:
        return self._family

    @property
    def rank(self) -> int:
        return self._rank

    @property
    def J(self) -> FrozenSet[int]:
        return self._J

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    def simple_reflection(self, s: int) -> np.ndarray:
        """Matrix of s_s acting on simple-root coordinates (column vectors)."""
        reflection = np.eye(self._rank, dtype=np.int64)
        reflection[s - 1, :] -= self._matrix[s - 1, :]
        return reflection


class GroupElement(object):
    """A Weyl group element, given by its action on the simple roots.

    Column j of the action matrix holds w(alpha_j) in simple-root
    coordinates. Instances are interned by their WeylGroup.

    Variables:
            _action {np.ndarray} -- read-only
            _inverse {np.ndarray} -- read-only
            _length {int}
            _key {bytes}
            _word {Optional[Tuple[int]]} -- reduced word, lazily computed
    """

    def __init__(self, action: np.ndarray, inverse: np.ndarray, length: int):
        super(GroupElement, self).__init__()
        action.setflags(write=False)
        inverse.setflags(write=False)
        self._action = action
        self._inverse = inverse
        self._length = length
        self._key = action.tobytes()
        self._word: Optional[Tuple[int, ...]] = None
        self._left_descents = frozenset(
            s + 1 for s in range(action.shape[0]) if inverse[:, s].sum() < 0
        )
        self._right_descents = frozenset(
            s + 1 for s in range(action.shape[0]) if action[:, s].sum() < 0
        )

    @property
    def action(self) -> np.ndarray:
        return self._action

    @property
    def inverse(self) -> np.ndarray:
        return self._inverse

    @property
    def length(self) -> int:
        return self._length

    @property
    def key(self) -> bytes:
        return self._key

    @property
    def left_descents(self) -> FrozenSet[int]:
        return self._left_descents

    @property
    def right_descents(self) -> FrozenSet[int]:
        return self._right_descents

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        word = "" if self._word is None else f", word={list(self._word)}"
        return f"GroupElement(length={self._length}{word})"


class IntervalKey(NamedTuple):
    u: GroupElement
    v: GroupElement

    @property
    def length(self) -> int:
        return self.v.length - self.u.length


class WeylGroup(object):
    """Weyl group with interned elements, Bruhat order and Deodhar's recursion.

    Variables:
            _cartan {CartanData}
            _spec {Optional[QuotientSpec]}
            _reflections {List[np.ndarray]} -- simple reflections, 0-based
            _elements {Dict[bytes, GroupElement]} -- interning table
            _left {Dict[Tuple[int, bytes], GroupElement]}
            _bruhat {Dict[Tuple[bytes, bytes], bool]}
            _r_memo {Dict[XParameter, Dict[IntervalKey, Polynomial]]}
    """

    @unique
    class XParameter(Enum):
        """Deodhar parameter x, a root of x^2 = (q - 1)x + q."""

        MINUS_ONE = "-1"
        Q = "q"

    def __init__(self, cartan: CartanData, spec: Optional[QuotientSpec] = None):
        super(WeylGroup, self).__init__()
        self._cartan = cartan
        self._spec = spec
        self._reflections = [
            cartan.simple_reflection(s) for s in range(1, cartan.rank + 1)
        ]
        self._elements: Dict[bytes, GroupElement] = {}
        self._left: Dict[Tuple[int, bytes], GroupElement] = {}
        self._right: Dict[Tuple[int, bytes], GroupElement] = {}
        self._bruhat: Dict[Tuple[bytes, bytes], bool] = {}
        self._r_memo: Dict[WeylGroup.XParameter, Dict] = {
            x: {} for x in WeylGroup.XParameter
        }
        self._classical_memo: Dict[Tuple[bytes, bytes], Polynomial] = {}
        self._shape_table: Optional[Dict[GroupElement, ShapeDiagram]] = None
        self._quotient: Optional[List[GroupElement]] = None
        eye = np.eye(cartan.rank, dtype=np.int64)
        self._identity = self._intern(eye, eye.copy(), 0)

    @staticmethod
    def from_spec(spec: QuotientSpec) -> "WeylGroup":
        return WeylGroup(CartanData.from_spec(spec), spec)

    @property
    def cartan(self) -> CartanData:
        return self._cartan

    @property
    def spec(self) -> Optional[QuotientSpec]:
        return self._spec

    @property
    def rank(self) -> int:
        return self._cartan.rank

    @property
    def J(self) -> FrozenSet[int]:
        return self._cartan.J

    @property
    def identity(self) -> GroupElement:
        return self._identity

    def _intern(self, action: np.ndarray, inverse: np.ndarray, length: int):
        key = action.tobytes()
        if key not in self._elements:
            self._elements[key] = GroupElement(action, inverse, length)
        return self._elements[key]

    def left_multiply(self, s: int, w: GroupElement) -> GroupElement:
        """Compute s*w."""
        memo_key = (s, w.key)
        if memo_key not in self._left:
            reflection = self._reflections[s - 1]
            length = w.length - 1 if s in w.left_descents else w.length + 1
            self._left[memo_key] = self._intern(
                reflection @ w.action, w.inverse @ reflection, length
            )
        return self._left[memo_key]

    def right_multiply(self, w: GroupElement, s: int) -> GroupElement:
        """Compute w*s."""
        memo_key = (s, w.key)
        if memo_key not in self._right:
            reflection = self._reflections[s - 1]
            length = w.length - 1 if s in w.right_descents else w.length + 1
            self._right[memo_key] = self._intern(
                w.action @ reflection, reflection @ w.inverse, length
            )
        return self._right[memo_key]

    def left_descents(self, w: GroupElement) -> FrozenSet[int]:
        return w.left_descents

    def right_descents(self, w: GroupElement) -> FrozenSet[int]:
        return w.right_descents

    def element_of_word(self, word: List[int]) -> GroupElement:
        """Element s_{a_1}...s_{a_N} of a word a_1...a_N."""
        w = self._identity
        for s in reversed(word):
            assert 1 <= s <= self.rank, f"generator {s} out of range 1..{self.rank}"
            w = self.left_multiply(s, w)
        return w

    def reduced_word(self, w: GroupElement) -> Tuple[int, ...]:
        """Reduced word, peeling the smallest left descent first."""
        if w._word is None:
            word = []
            current = w
            while current.length > 0:
                s = min(current.left_descents)
                word.append(s)
                current = self.left_multiply(s, current)
            w._word = tuple(word)
        return w._word

    def is_quotient_rep(self, w: GroupElement) -> bool:
        return not (w.right_descents & self.J)

    def bruhat_leq(self, u: GroupElement, v: GroupElement) -> bool:
        if u.length > v.length:
            return False
        if u.length == v.length:
            return u == v
        if 0 == u.length:
            return True
        memo_key = (u.key, v.key)
        if memo_key not in self._bruhat:
            s = min(v.left_descents)
            sv = self.left_multiply(s, v)
            if s in u.left_descents:
                result = self.bruhat_leq(self.left_multiply(s, u), sv)
            else:
                result = self.bruhat_leq(u, sv)
            self._bruhat[memo_key] = result
        return self._bruhat[memo_key]

    def enumerate_quotient(self) -> List[GroupElement]:
        """Minimal coset representatives, by breadth-first search.

        Returns:
                List[GroupElement] -- in order of nondecreasing length
        """
        if self._quotient is not None:
            return list(self._quotient)
        seen = {self._identity.key}
        found = [self._identity]
        queue = deque([self._identity])
        while queue:
            w = queue.popleft()
            for s in range(1, self.rank + 1):
                if s in w.left_descents:
                    continue
                sw = self.left_multiply(s, w)
                if sw.key in seen or not self.is_quotient_rep(sw):
                    continue
                seen.add(sw.key)
                found.append(sw)
                queue.append(sw)
        self._quotient = found
        return list(found)

    def longest_element(self) -> GroupElement:
        """Longest minimal coset representative."""
        return max(self.enumerate_quotient(), key=lambda w: w.length)

    def element_of_shape(self, shape: ShapeDiagram) -> GroupElement:
        return self.element_of_word(element_word(shape))

    def shape_of_element(self, w: GroupElement) -> ShapeDiagram:
        assert self._spec is not None, "shapes need a quotient specification"
        if self._shape_table is None:
            self._shape_table = {
                self.element_of_shape(shape): shape for shape in subdiagrams(self._spec)
            }
        if w not in self._shape_table:
            raise NotQuotientRep(f"{w} is not a minimal coset representative")
        return self._shape_table[w]

    def _check_reps(self, *elements: GroupElement) -> None:
        for w in elements:
            if not self.is_quotient_rep(w):
                raise NotQuotientRep(
                    f"element with reduced word {list(self.reduced_word(w))} "
                    + f"has right descents {sorted(w.right_descents & self.J)} in J"
                )

    def r_poly(
        self,
        u: GroupElement,
        v: GroupElement,
        x: "WeylGroup.XParameter" = XParameter.MINUS_ONE,
        choice: Optional[ChoiceFunction] = None,
    ) -> Polynomial:
        """Parabolic R-polynomial R^{J,x}_{u,v} by Deodhar's recursion.

        Arguments:
                u {GroupElement} -- minimal coset representative
                v {GroupElement} -- minimal coset representative

        Keyword Arguments:
                x {WeylGroup.XParameter} -- (default: {XParameter.MINUS_ONE})
                choice {Optional[Callable]} -- picks the left descent of v to
                        recurse on; the smallest one if None

        Returns:
                Polynomial

        Raises:
                NotQuotientRep
        """
        self._check_reps(u, v)
        if choice is None:
            return self._r_poly(u, v, x, None, self._r_memo[x])
        return self._r_poly(u, v, x, choice, {})

    def _r_poly(self, u, v, x, choice, memo) -> Polynomial:
        if not self.bruhat_leq(u, v):
            return Polynomial.zero()
        if u == v:
            return Polynomial.one()
        memo_key = IntervalKey(u, v)
        if memo_key in memo:
            return memo[memo_key]

        s = min(v.left_descents) if choice is None else choice(v, v.left_descents)
        assert s in v.left_descents, f"s_{s} is not a left descent"
        sv = self.left_multiply(s, v)
        su = self.left_multiply(s, u)
        q = Polynomial.q()
        if su.length < u.length:
            result = self._r_poly(su, sv, x, choice, memo)
        elif not self.is_quotient_rep(su):
            factor = q if WeylGroup.XParameter.MINUS_ONE == x else Polynomial((-1,))
            result = factor * self._r_poly(u, sv, x, choice, memo)
        else:
            result = (q - 1) * self._r_poly(u, sv, x, choice, memo) + q * self._r_poly(
                su, sv, x, choice, memo
            )
        memo[memo_key] = result
        return result

    def classical_r_poly(self, u: GroupElement, v: GroupElement) -> Polynomial:
        """Ordinary R-polynomial, recursing on right descents."""
        if not self.bruhat_leq(u, v):
            return Polynomial.zero()
        if u == v:
            return Polynomial.one()
        memo_key = (u.key, v.key)
        if memo_key not in self._classical_memo:
            s = min(v.right_descents)
            vs = self.right_multiply(v, s)
            us = self.right_multiply(u, s)
            if s in u.right_descents:
                result = self.classical_r_poly(us, vs)
            else:
                q = Polynomial.q()
                result = (q - 1) * self.classical_r_poly(u, vs) + q * (
                    self.classical_r_poly(us, vs)
                )
            self._classical_memo[memo_key] = result
        return self._classical_memo[memo_key]

    def interval(self, u: GroupElement, v: GroupElement) -> List[GroupElement]:
        """Quotient elements w with u <= w <= v."""
        return [
            w
            for w in self.enumerate_quotient()
            if u.length <= w.length <= v.length
            and self.bruhat_leq(u, w)
            and self.bruhat_leq(w, v)
        ]

    def kl_poly(
        self,
        u: GroupElement,
        v: GroupElement,
        x: "WeylGroup.XParameter" = XParameter.MINUS_ONE,
        r_poly: Optional[Callable[[GroupElement, GroupElement], Polynomial]] = None,
        memo: Optional[Dict[IntervalKey, Polynomial]] = None,
    ) -> Polynomial:
        """Parabolic Kazhdan-Lusztig polynomial by top-down inversion.

        With F = sum over u < w <= v of R_{u,w} P_{w,v}, the polynomial P_{u,v}
        satisfies q^l P(1/q) - P = F, l = l(v) - l(u), and has degree at most
        (l - 1)/2, so its low coefficients are read off F.

        Arguments:
                u {GroupElement}
                v {GroupElement}

        Keyword Arguments:
                x {WeylGroup.XParameter} -- (default: {XParameter.MINUS_ONE})
                r_poly {Optional[Callable]} -- R-polynomial source, the
                        oracle if None
                memo {Optional[Dict]} -- shared table of P_{w,v}

        Returns:
                Polynomial

        Raises:
                InversionInconsistent -- if the inversion identity fails
        """
        self._check_reps(u, v)
        if r_poly is None:

            def r_poly(a: GroupElement, b: GroupElement) -> Polynomial:
                return self.r_poly(a, b, x)

        if memo is None:
            memo = {}
        return self._kl_poly(u, v, r_poly, memo, self.interval(u, v))

    def _kl_poly(self, u, v, r_poly, memo, between) -> Polynomial:
        if not self.bruhat_leq(u, v):
            return Polynomial.zero()
        if u == v:
            return Polynomial.one()
        memo_key = IntervalKey(u, v)
        if memo_key in memo:
            return memo[memo_key]

        upper = [w for w in between if w != u and self.bruhat_leq(u, w)]
        total = Polynomial.zero()
        for w in upper:
            total = total + r_poly(u, w) * self._kl_poly(w, v, r_poly, memo, upper)

        length = memo_key.length
        coeffs = [total.coefficient(length - i) for i in range((length - 1) // 2 + 1)]
        result = Polynomial(coeffs)
        residual = result.reflect(length) - result - total
        if not residual.is_zero:
            raise InversionInconsistent(
                f"KL inversion leaves residual {residual} on an interval "
                + f"of length {length}"
            )
        memo[memo_key] = result
        return result
