"""Set partitions, refinement order, and the comb isomorphism.

The interval below a comb is order-isomorphic to the partition lattice
of the label set, which makes partitions the natural external oracle:
partition enumeration and refinement here are written directly on label
sets and share no code with the forest machinery.
"""

from __future__ import annotations

from itertools import combinations

from .forests import Forest, Tree, forest, is_comb
from .order import leq
from .polynomials import UnivariatePolynomial


class SetPartition:
    """Disjoint nonempty blocks covering a ground set of labels."""

    __slots__ = ("blocks", "ground", "_hash")

    def __init__(self, blocks):
        blocks = frozenset(frozenset(b) for b in blocks)
        seen = set()
        for b in blocks:
            if not b:
                raise ValueError("empty block")
            if b & seen:
                raise ValueError(f"overlapping blocks at {sorted(b & seen)}")
            seen |= b
        self.blocks = blocks
        self.ground = frozenset(seen)
        self._hash = hash(blocks)

    @classmethod
    def finest(cls, labels):
        return cls([lab] for lab in set(labels))

    @classmethod
    def coarsest(cls, labels):
        return cls([set(labels)])

    @property
    def n_blocks(self):
        return len(self.blocks)

    def block_sizes(self):
        """Multiset of block sizes, as a descending tuple."""
        return tuple(sorted((len(b) for b in self.blocks), reverse=True))

    def block_containing(self, label):
        for b in self.blocks:
            if label in b:
                return b
        raise KeyError(f"label {label!r} not in ground set")

    def merge_blocks_containing(self, lab1, lab2) -> "SetPartition":
        """Gather the blocks holding the two labels into a single block."""
        b1 = self.block_containing(lab1)
        b2 = self.block_containing(lab2)
        if b1 == b2:
            return self
        rest = [b for b in self.blocks if b != b1 and b != b2]
        return SetPartition(rest + [b1 | b2])

    def disjoint_union(self, other) -> "SetPartition":
        if self.ground & other.ground:
            raise ValueError("ground sets overlap")
        return SetPartition(self.blocks | other.blocks)

    def __eq__(self, other):
        if not isinstance(other, SetPartition):
            return NotImplemented
        return self.blocks == other.blocks

    def __hash__(self):
        return self._hash

    def __str__(self):
        parts = sorted(self.blocks, key=min)
        return "|".join("".join(sorted(b)) for b in parts)

    def __repr__(self):
        return f"SetPartition({self})"


def refines(p: SetPartition, q: SetPartition) -> bool:
    """True iff every block of p lies inside a block of q."""
    if p.ground != q.ground:
        raise ValueError("partitions live on different ground sets")
    return all(b <= q.block_containing(min(b)) for b in p.blocks)


def enumerate_partitions(labels) -> list[SetPartition]:
    """All partitions of the label set (Bell-number many)."""
    ground = frozenset(labels)
    if not ground:
        return [SetPartition([])]

    def go(rest):
        if not rest:
            yield ()
            return
        anchor = min(rest)
        others = sorted(rest - {anchor})
        for size in range(len(others) + 1):
            for combo in combinations(others, size):
                block = frozenset((anchor,) + combo)
                for tail in go(rest - block):
                    yield (block,) + tail

    return [SetPartition(blocks) for blocks in go(ground)]


def comb_iso(f: Forest, c: Tree) -> SetPartition:
    """The partition of the leaves by the trees of f, for f below a comb c.

    On the interval below a comb this map is an order isomorphism onto
    the partition lattice under refinement.
    """
    if not is_comb(c):
        raise ValueError(f"{c} is not a comb")
    if not leq(f, forest([c])):
        raise ValueError(f"{f} is not below the comb")
    return SetPartition(t.leaves for t in f.trees)


def partition_char_poly(n: int) -> UnivariatePolynomial:
    """Characteristic polynomial of the partition lattice on n labels.

    The falling-factorial form (y-1)(y-2)...(y-(n-1)), used as an
    oracle against the comb computation.
    """
    if n < 1:
        raise ValueError("the partition lattice needs at least one element")
    return UnivariatePolynomial.from_roots(range(1, n))
