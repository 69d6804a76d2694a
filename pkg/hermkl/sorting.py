"""
@author: Gabriele Girelli
@contact: gigi.ga90@gmail.com
@description: sorting game between signed permutations and shapes
"""

from hermkl.asserts import NotQuotientRep, UnsupportedFamily
from hermkl.const import FAMILY
from hermkl.diagrams import QuotientSpec, ShapeDiagram, ambient, element_word
from typing import FrozenSet, Iterable, List, Tuple


class SignedPermutation(object):
    """One-line notation w(1), ..., w(m) of a (signed) permutation.

    Type A elements are permutations of 1..n+1, the other classical families
    use signed permutations of 1..n.

    Variables:
            _images {Tuple[int]}
    """

    def __init__(self, images: Iterable[int]):
        super(SignedPermutation, self).__init__()
        self._images = tuple(int(x) for x in images)

    @property
    def images(self) -> Tuple[int, ...]:
        return self._images

    @property
    def negatives(self) -> int:
        return sum(1 for x in self._images if x < 0)

    def __len__(self) -> int:
        return len(self._images)

    def __getitem__(self, position: int) -> int:
        """Image of a 1-based position."""
        return self._images[position - 1]

    def is_permutation(self) -> bool:
        return sorted(abs(x) for x in self._images) == list(
            range(1, len(self._images) + 1)
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedPermutation):
            return NotImplemented
        return self._images == other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __str__(self) -> str:
        return "[" + ",".join(str(x) for x in self._images) + "]"

    def __repr__(self) -> str:
        return f"SignedPermutation({list(self._images)})"


def _check_classical(spec: QuotientSpec) -> None:
    if not spec.family.classical:
        raise UnsupportedFamily(
            f"the sorting game is defined on classical families only, not {spec}"
        )


def _size(spec: QuotientSpec) -> int:
    return spec.rank + 1 if FAMILY.A == spec.family else spec.rank


def identity(spec: QuotientSpec) -> SignedPermutation:
    _check_classical(spec)
    return SignedPermutation(range(1, _size(spec) + 1))


def is_valid(w: SignedPermutation, spec: QuotientSpec) -> bool:
    _check_classical(spec)
    if len(w) != _size(spec) or not w.is_permutation():
        return False
    if FAMILY.A == spec.family:
        return 0 == w.negatives
    if spec.family.even_signed:
        return 0 == w.negatives % 2
    return True


def _key(x: int, n: int) -> int:
    """Position of x in 1 < 2 < ... < n < -n < ... < -1."""
    return x if x > 0 else 2 * n + 1 + x


def right_descents(w: SignedPermutation, spec: QuotientSpec) -> FrozenSet[int]:
    _check_classical(spec)
    n = spec.rank
    if FAMILY.A == spec.family:
        return frozenset(i for i in range(1, n + 1) if w[i] > w[i + 1])
    descents = {i for i in range(1, n) if _key(w[i], n) > _key(w[i + 1], n)}
    if spec.family.even_signed:
        if _key(w[n - 1], n) > _key(-w[n], n):
            descents.add(n)
    elif w[n] < 0:
        descents.add(n)
    return frozenset(descents)


def right_multiply(w: SignedPermutation, s: int, spec: QuotientSpec):
    """Compute w*s_s, acting on positions."""
    _check_classical(spec)
    n = spec.rank
    assert 1 <= s <= n, f"generator {s} out of range 1..{n}"
    images = list(w.images)
    if FAMILY.A == spec.family or s < n:
        images[s - 1], images[s] = images[s], images[s - 1]
    elif spec.family.even_signed:
        images[n - 2], images[n - 1] = -images[n - 1], -images[n - 2]
    else:
        images[n - 1] = -images[n - 1]
    return SignedPermutation(images)


def quotient_membership(w: SignedPermutation, spec: QuotientSpec) -> bool:
    """Whether w is a minimal coset representative (no right descent in J)."""
    return is_valid(w, spec) and not (right_descents(w, spec) & spec.J)


def reduced_word(w: SignedPermutation, spec: QuotientSpec) -> List[int]:
    """Reduced word of w, peeling the smallest right descent each time."""
    assert is_valid(w, spec), f"{w} is not an element of the {spec} group"
    word: List[int] = []
    current = w
    while True:
        descents = right_descents(current, spec)
        if not descents:
            break
        s = min(descents)
        word.append(s)
        current = right_multiply(current, s, spec)
    return word[::-1]


def length(w: SignedPermutation, spec: QuotientSpec) -> int:
    return len(reduced_word(w, spec))


def sort_to_partition(w: SignedPermutation, spec: QuotientSpec) -> ShapeDiagram:
    """Play the sorting game on a minimal coset representative.

    Row k of the ambient diagram is walked from its first box. While the
    box label is a right descent of the current permutation it is applied
    and counted. The counts are the row lengths of the shape, and the
    permutation must end sorted.

    Arguments:
            w {SignedPermutation}
            spec {QuotientSpec}

    Returns:
            ShapeDiagram

    Raises:
            NotQuotientRep -- if w is not in W^J
            UnsupportedFamily -- for E6 and E7
    """
    if not quotient_membership(w, spec):
        raise NotQuotientRep(f"{w} is not a minimal coset representative of {spec}")
    diagram = ambient(spec)
    current = w
    rows = []
    for row in diagram.rows:
        steps = 0
        for box in row:
            if box.label not in right_descents(current, spec):
                break
            current = right_multiply(current, box.label, spec)
            steps += 1
        rows.append(steps)
    assert current == identity(spec), f"the sorting game left {current} unsorted"
    return ShapeDiagram(diagram, rows)


def partition_to_element(shape: ShapeDiagram, spec: QuotientSpec):
    """Signed permutation of a shape, built from its element word."""
    _check_classical(spec)
    w = identity(spec)
    for s in element_word(shape):
        w = right_multiply(w, s, spec)
    return w
