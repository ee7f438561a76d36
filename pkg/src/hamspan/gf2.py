"""GF(2) vectors over an edge index set, packed into Python ints.

Bit ``k`` of ``EdgeVector.bits`` is the coefficient of edge ``k``.  Addition
is XOR, i.e. symmetric difference of edge sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class EdgeVector:
    dimension: int
    bits: int = 0

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.dimension:
            raise DimensionError(
                f"bits {self.bits:#x} do not fit in dimension {self.dimension}"
            )

    @classmethod
    def from_support(cls, dimension: int, support: Iterable[int]) -> "EdgeVector":
        bits = 0
        for k in support:
            bits ^= 1 << k
        return cls(dimension, bits)

    def support(self) -> list[int]:
        out = []
        b = self.bits
        while b:
            low = b & -b
            out.append(low.bit_length() - 1)
            b ^= low
        return out

    def weight(self) -> int:
        return self.bits.bit_count()

    def parity(self) -> int:
        return self.bits.bit_count() & 1

    def is_zero(self) -> bool:
        return self.bits == 0

    def __add__(self, other: "EdgeVector") -> "EdgeVector":
        return vector_add(self, other)


def _check(a_dim: int, b_dim: int) -> None:
    if a_dim != b_dim:
        raise DimensionError(f"dimension mismatch: {a_dim} vs {b_dim}")


def vector_add(a: EdgeVector, b: EdgeVector) -> EdgeVector:
    _check(a.dimension, b.dimension)
    return EdgeVector(a.dimension, a.bits ^ b.bits)


class Gf2Basis:
    """Incrementally maintained reduced row echelon basis.

    Each row is keyed by its pivot, the lowest set bit.  Rows are kept fully
    reduced (a pivot bit is clear in every other row), so membership is one
    pass over the pivots.

    ``generators`` records the vectors that increased the rank, in insertion
    order; witnesses are expressed as indices into it.  The bookkeeping for
    witnesses is only switched on the first time one is requested.
    """

    def __init__(self, dimension: int):
        self.dimension = dimension
        self.pivots: dict[int, int] = {}
        self.generators: list[int] = []
        self._combos: Optional[dict[int, int]] = None

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, bits: int) -> int:
        for piv, row in self.pivots.items():
            if bits >> piv & 1:
                bits ^= row
        return bits

    def insert_bits(self, bits: int) -> bool:
        """Raw-int form of :meth:`insert`; the hot path for circuit streams."""
        original, combo = bits, 0
        if self._combos is None:
            bits = self._reduce(bits)
            if not bits:
                return False
        else:
            combo = 1 << len(self.generators)
            for piv, row in self.pivots.items():
                if bits >> piv & 1:
                    bits ^= row
                    combo ^= self._combos[piv]
            if not bits:
                return False
        self._add_reduced(bits, combo)
        self.generators.append(original)
        return True

    def _add_reduced(self, bits: int, combo: int) -> None:
        piv = (bits & -bits).bit_length() - 1
        for p, row in self.pivots.items():
            if row >> piv & 1:
                self.pivots[p] = row ^ bits
                if self._combos is not None:
                    self._combos[p] ^= combo
        self.pivots[piv] = bits
        if self._combos is not None:
            self._combos[piv] = combo

    def insert(self, v: EdgeVector) -> bool:
        """Add ``v``; returns True iff it was outside the span (rank grew)."""
        _check(self.dimension, v.dimension)
        return self.insert_bits(v.bits)

    def contains_bits(self, bits: int) -> bool:
        return self._reduce(bits) == 0

    def in_span(self, v: EdgeVector, witness: bool = False):
        """Membership test.  With ``witness=True`` returns ``(member, indices)``
        where XOR of ``generators[i]`` over ``indices`` equals ``v``."""
        _check(self.dimension, v.dimension)
        if not witness:
            return self.contains_bits(v.bits)
        self._enable_combos()
        bits, combo = v.bits, 0
        for piv, row in self.pivots.items():
            if bits >> piv & 1:
                bits ^= row
                combo ^= self._combos[piv]
        if bits:
            return False, None
        return True, [i for i in range(len(self.generators)) if combo >> i & 1]

    def _enable_combos(self) -> None:
        if self._combos is not None:
            return
        # replay the accepted generators with tracking on; the resulting rows
        # are identical because replay order matches the original inserts
        gens = self.generators
        self.pivots, self._combos = {}, {}
        for i, g in enumerate(gens):
            bits, combo = g, 1 << i
            for piv, row in self.pivots.items():
                if bits >> piv & 1:
                    bits ^= row
                    combo ^= self._combos[piv]
            self._add_reduced(bits, combo)

    def rows(self) -> list[EdgeVector]:
        return [EdgeVector(self.dimension, self.pivots[p]) for p in sorted(self.pivots)]


def rank_bits(vectors: Iterable[int]) -> int:
    pivots: dict[int, int] = {}
    for bits in vectors:
        # plain echelon form is enough for a rank count
        while bits:
            piv = (bits & -bits).bit_length() - 1
            row = pivots.get(piv)
            if row is None:
                pivots[piv] = bits
                break
            bits ^= row
    return len(pivots)


def rank_of(vectors: list[EdgeVector]) -> int:
    if not vectors:
        return 0
    dim = vectors[0].dimension
    for v in vectors:
        _check(dim, v.dimension)
    return rank_bits(v.bits for v in vectors)
