"""Ground-set and k-subset arithmetic.

Every vertex of a Johnson-style graph is an ``ElementSet``: a subset of
[n] = {1, ..., n} packed into a single machine word.  Bit ``e`` stores
element ``e`` (bit 0 is never used), so the natural unsigned ordering of
the bit vectors is the canonical "bit-vector order" used whenever a
deterministic choice of vertex is needed.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

from .errors import CardinalityMismatch, CardinalityOrder, NoNeighbors

MAX_GROUND_SET = 62


class ElementSet:
    """An immutable subset of [n], n <= 62, packed into an int."""

    __slots__ = ("bits", "n")

    def __init__(self, bits: int, n: int):
        if not 0 < n <= MAX_GROUND_SET:
            raise ValueError(f"ground set size {n} outside 1..{MAX_GROUND_SET}")
        mask = ((1 << n) - 1) << 1
        if bits & ~mask:
            raise ValueError(f"bits {bits:#x} outside ground set [1..{n}]")
        object.__setattr__(self, "bits", bits)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("ElementSet is immutable")

    @classmethod
    def from_elements(cls, elements, n: int) -> "ElementSet":
        bits = 0
        for e in elements:
            if not 1 <= e <= n:
                raise ValueError(f"element {e} outside [1..{n}]")
            bits |= 1 << e
        return cls(bits, n)

    def elements(self) -> tuple[int, ...]:
        return tuple(e for e in range(1, self.n + 1) if self.bits >> e & 1)

    def cardinality(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, e: int) -> bool:
        return 1 <= e <= self.n and bool(self.bits >> e & 1)

    def add(self, e: int) -> "ElementSet":
        return ElementSet(self.bits | (1 << e), self.n)

    def remove(self, e: int) -> "ElementSet":
        return ElementSet(self.bits & ~(1 << e), self.n)

    def with_ground_set(self, n: int) -> "ElementSet":
        """Reinterpret the same subset over a different ground set size."""
        return ElementSet(self.bits, n)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ElementSet)
            and self.bits == other.bits
            and self.n == other.n
        )

    def __hash__(self) -> int:
        return hash((self.bits, self.n))

    def __lt__(self, other: "ElementSet") -> bool:
        return self.bits < other.bits

    def __le__(self, other: "ElementSet") -> bool:
        return self.bits <= other.bits

    def __repr__(self) -> str:
        return "{%s}" % ",".join(str(e) for e in self.elements())

    def to_json(self) -> list[int]:
        return list(self.elements())


class Relabeling:
    """A permutation of [n], applied pointwise to element sets."""

    __slots__ = ("perm",)

    def __init__(self, perm):
        perm = tuple(perm)
        n = len(perm)
        if sorted(perm) != list(range(1, n + 1)):
            raise ValueError("not a permutation of [n]")
        object.__setattr__(self, "perm", perm)

    def __setattr__(self, name, value):
        raise AttributeError("Relabeling is immutable")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int) -> "Relabeling":
        return cls(range(1, n + 1))

    @classmethod
    def swap(cls, i: int, j: int, n: int) -> "Relabeling":
        perm = list(range(1, n + 1))
        perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
        return cls(perm)

    def __call__(self, e: int) -> int:
        return self.perm[e - 1]

    def inverse(self) -> "Relabeling":
        inv = [0] * self.n
        for i, image in enumerate(self.perm):
            inv[image - 1] = i + 1
        return Relabeling(inv)


def apply_relabeling(r: Relabeling, s: ElementSet) -> ElementSet:
    """Pointwise image of s under the permutation r."""
    bits = 0
    b = s.bits
    e = 1
    while b >> e:
        if b >> e & 1:
            bits |= 1 << r.perm[e - 1]
        e += 1
    return ElementSet(bits, s.n)


def complement(s: ElementSet) -> ElementSet:
    full = ((1 << s.n) - 1) << 1
    return ElementSet(full & ~s.bits, s.n)


def johnson_adjacent(a: ElementSet, b: ElementSet) -> bool:
    """Johnson adjacency: the two equal-size subsets differ in one element."""
    if a.bits.bit_count() != b.bits.bit_count():
        raise CardinalityMismatch(f"{a} and {b} have different cardinalities")
    return (a.bits ^ b.bits).bit_count() == 2


def qj_cross_adjacent(lower: ElementSet, upper: ElementSet) -> bool:
    """Containment adjacency between consecutive QJ levels."""
    if lower.bits.bit_count() >= upper.bits.bit_count():
        raise CardinalityOrder(f"{lower} is not smaller than {upper}")
    return lower.bits & ~upper.bits == 0


def up_neighbors(s: ElementSet, target_card: int) -> list[ElementSet]:
    """All supersets of s with the given cardinality, bit-vector order."""
    p = s.cardinality()
    if not p < target_card <= s.n:
        raise CardinalityOrder(
            f"target cardinality {target_card} not in ({p}, {s.n}]"
        )
    missing = [e for e in range(1, s.n + 1) if not s.bits >> e & 1]
    out = []
    for extra in combinations(missing, target_card - p):
        bits = s.bits
        for e in extra:
            bits |= 1 << e
        out.append(ElementSet(bits, s.n))
    out.sort()
    return out


def down_neighbors(s: ElementSet, target_card: int) -> list[ElementSet]:
    """All subsets of s with the given cardinality, bit-vector order."""
    p = s.cardinality()
    if not 0 <= target_card < p:
        raise CardinalityOrder(f"target cardinality {target_card} not in [0, {p})")
    elems = s.elements()
    out = []
    for kept in combinations(elems, target_card):
        bits = 0
        for e in kept:
            bits |= 1 << e
        out.append(ElementSet(bits, s.n))
    out.sort()
    return out


def same_level_neighbors(s: ElementSet) -> list[ElementSet]:
    """All Johnson neighbors of s, bit-vector order; there are k(n-k)."""
    k = s.cardinality()
    if k == 0 or k == s.n:
        raise NoNeighbors(f"{s} has no same-level neighbors in J({s.n},{k})")
    out = []
    inside = s.elements()
    outside = [e for e in range(1, s.n + 1) if not s.bits >> e & 1]
    for e in inside:
        for f in outside:
            out.append(ElementSet(s.bits ^ (1 << e) | (1 << f), s.n))
    out.sort()
    return out


def k_subsets(n: int, k: int) -> Iterator[ElementSet]:
    """All k-subsets of [n] in ascending bit-vector order.

    Iterates Gosper-style over bit patterns so the order is the canonical
    one without a sort.
    """
    if k == 0:
        yield ElementSet(0, n)
        return
    if k > n:
        return
    # Gosper's hack on 0-indexed masks; shift by one for element bits.
    limit = 1 << n
    v = (1 << k) - 1
    while v < limit:
        yield ElementSet(v << 1, n)
        c = v & -v
        r = v + c
        v = (((r ^ v) >> 2) // c) | r
