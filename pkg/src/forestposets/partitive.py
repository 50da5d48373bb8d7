"""Ranked posets mapped into a partition lattice, and their products.

A partitive poset carries, besides its order and corank, a partition of
a fixed ground set for every element, compatible with refinement and
with rank up to a constant shift (stored explicitly and validated).
Intervals of the forest poset are the motivating examples: each forest
maps to the partition of the labels by its trees.

Three constructions rebuild intervals abstractly:

* product        - disjoint union of upper forests, componentwise order;
* twisted product - a tree whose lowest vertex is marked: the plain
  product, but the partitions glue one chosen bottom block per factor;
* vee product    - a tree whose lowest vertex is unmarked: pairs plus
  grafted elements indexed by one block per side.

An interval is determined up to partitive isomorphism by its upper
forest and marked vertex set, which poset_isomorphic/partitive_isomorphic
make testable.
"""

from __future__ import annotations

from .forests import Forest, forest
from .order import interval, split_below_root
from .partitions import SetPartition, refines


class PartitivePoset:
    """Finite ranked poset with a partition label per element.

    Elements are opaque hashable values (forests for intervals, tagged
    tuples for abstract products). Construction validates gradedness,
    unique bounds, refinement-compatibility of the partition map, and a
    constant rank shift into the partition lattice.
    """

    __slots__ = ("elements", "ground", "coranks", "parts", "rank_shift",
                 "below", "above", "covers", "_index")

    def __init__(self, elements, ground, coranks, parts, below):
        n = len(elements)
        self.elements = tuple(elements)
        self.ground = frozenset(ground)
        self.coranks = tuple(coranks)
        self.parts = tuple(parts)
        self.below = tuple(below)
        self.above = tuple(frozenset(j for j in range(n) if i in below[j])
                           for i in range(n))
        self._index = {e: i for i, e in enumerate(self.elements)}
        if len(self._index) != n:
            raise ValueError("duplicate elements")
        self.covers = frozenset(
            (i, j) for j in range(n) for i in self.below[j]
            if i != j and not any(k != i and k != j and k in self.below[j] and i in self.below[k]
                                  for k in self.below[j]))
        self.rank_shift = self._validate()

    def _validate(self):
        n = len(self.elements)
        deg = max(self.coranks, default=0)
        bottoms = [i for i in range(n) if len(self.above[i]) == n]
        tops = [j for j in range(n) if len(self.below[j]) == n]
        if len(bottoms) != 1 or len(tops) != 1:
            raise ValueError("poset must have a unique minimum and maximum")
        if self.coranks[bottoms[0]] != deg or self.coranks[tops[0]] != 0:
            raise ValueError("corank must peak at the minimum and vanish at the maximum")
        for i, j in self.covers:
            if self.coranks[i] - self.coranks[j] != 1:
                raise ValueError("covers must step corank by exactly one")
        shift = None
        for i in range(n):
            if self.parts[i].ground != self.ground:
                raise ValueError("partition ground set mismatch")
            rank_here = deg - self.coranks[i]
            rank_there = len(self.ground) - self.parts[i].n_blocks
            if shift is None:
                shift = rank_there - rank_here
            elif rank_there - rank_here != shift:
                raise ValueError("partition map is not rank-compatible")
        for j in range(n):
            for i in self.below[j]:
                if i != j and not refines(self.parts[i], self.parts[j]):
                    raise ValueError("partition map must preserve order")
        return shift

    def __len__(self):
        return len(self.elements)

    @property
    def degree(self):
        return max(self.coranks, default=0)

    @property
    def min_index(self):
        return self.coranks.index(self.degree)

    @property
    def max_index(self):
        return self.coranks.index(0)

    def index_of(self, element):
        return self._index[element]

    def part_of(self, element) -> SetPartition:
        return self.parts[self._index[element]]

    def leq_elements(self, a, b) -> bool:
        return self._index[a] in self.below[self._index[b]]

    def to_document(self) -> dict:
        return {
            "ground": sorted(self.ground),
            "elements": [repr(e) for e in self.elements],
            "coranks": list(self.coranks),
            "partitions": [str(p) for p in self.parts],
            "covers": sorted(self.covers),
            "rank_shift": self.rank_shift,
        }


def as_partitive(f: Forest, g: Forest) -> PartitivePoset:
    """The interval [f, g] with each forest mapped to its tree partition."""
    p = interval(f, g)
    parts = [SetPartition(t.leaves for t in h.trees) for h in p.elements]
    return PartitivePoset(p.elements, f.leaves, p.coranks, parts, p.below)


# ---------------------------------------------------------------------------
# abstract constructions

def _pairwise(p1, p2, mk_element, mk_corank, mk_part):
    elements, coranks, parts, coords = [], [], [], []
    for i1 in range(len(p1)):
        for i2 in range(len(p2)):
            elements.append(mk_element(i1, i2))
            coranks.append(mk_corank(i1, i2))
            parts.append(mk_part(i1, i2))
            coords.append((i1, i2))
    below = []
    for j, (j1, j2) in enumerate(coords):
        below.append(frozenset(
            i for i, (i1, i2) in enumerate(coords)
            if i1 in p1.below[j1] and i2 in p2.below[j2]))
    return elements, coranks, parts, below


def product(p1: PartitivePoset, p2: PartitivePoset) -> PartitivePoset:
    """Componentwise product; partitions are disjoint unions."""
    if p1.ground & p2.ground:
        raise ValueError("ground sets overlap")
    elements, coranks, parts, below = _pairwise(
        p1, p2,
        lambda i1, i2: ("pair", p1.elements[i1], p2.elements[i2]),
        lambda i1, i2: p1.coranks[i1] + p2.coranks[i2],
        lambda i1, i2: p1.parts[i1].disjoint_union(p2.parts[i2]))
    return PartitivePoset(elements, p1.ground | p2.ground, coranks, parts, below)


def _require_one_block_top(p, who):
    if p.parts[p.max_index].n_blocks != 1:
        raise ValueError(f"{who}: the maximum must map to a one-block partition")


def twisted_product(p1: PartitivePoset, p2: PartitivePoset,
                    k1: frozenset, k2: frozenset) -> PartitivePoset:
    """Product poset whose partitions glue the blocks holding k1 and k2.

    k1 and k2 must be blocks of the minimums' partitions; the result does
    not depend on the choice, up to partitive isomorphism.
    """
    if p1.ground & p2.ground:
        raise ValueError("ground sets overlap")
    _require_one_block_top(p1, "twisted product")
    _require_one_block_top(p2, "twisted product")
    k1, k2 = frozenset(k1), frozenset(k2)
    if k1 not in p1.parts[p1.min_index].blocks:
        raise ValueError("k1 is not a block of the first minimum")
    if k2 not in p2.parts[p2.min_index].blocks:
        raise ValueError("k2 is not a block of the second minimum")
    rep1, rep2 = min(k1), min(k2)
    elements, coranks, parts, below = _pairwise(
        p1, p2,
        lambda i1, i2: ("pair", p1.elements[i1], p2.elements[i2]),
        lambda i1, i2: p1.coranks[i1] + p2.coranks[i2],
        lambda i1, i2: p1.parts[i1].disjoint_union(p2.parts[i2])
        .merge_blocks_containing(rep1, rep2))
    return PartitivePoset(elements, p1.ground | p2.ground, coranks, parts, below)


def vee_product(p1: PartitivePoset, p2: PartitivePoset) -> PartitivePoset:
    """Disjoint-union pairs plus grafted elements indexed by block choices.

    A grafted element ("graft", a1, j1, a2, j2) picks one block of each
    side's partition and glues them; it sits above the matching pairs and
    below the grafts with larger blocks, and nothing ever descends from a
    graft to a pair.
    """
    if p1.ground & p2.ground:
        raise ValueError("ground sets overlap")
    _require_one_block_top(p1, "vee product")
    _require_one_block_top(p2, "vee product")
    elements, coranks, parts, kinds = [], [], [], []
    for i1 in range(len(p1)):
        for i2 in range(len(p2)):
            union_part = p1.parts[i1].disjoint_union(p2.parts[i2])
            elements.append(("union", p1.elements[i1], p2.elements[i2]))
            coranks.append(p1.coranks[i1] + p2.coranks[i2] + 1)
            parts.append(union_part)
            kinds.append(("union", i1, i2, None, None))
            for j1 in sorted(p1.parts[i1].blocks, key=min):
                for j2 in sorted(p2.parts[i2].blocks, key=min):
                    elements.append(("graft", p1.elements[i1], j1, p2.elements[i2], j2))
                    coranks.append(p1.coranks[i1] + p2.coranks[i2])
                    parts.append(union_part.merge_blocks_containing(min(j1), min(j2)))
                    kinds.append(("graft", i1, i2, j1, j2))
    n = len(elements)

    def le(a, b):
        kind_a, a1, a2, ja1, ja2 = kinds[a]
        kind_b, b1, b2, jb1, jb2 = kinds[b]
        if a1 not in p1.below[b1] or a2 not in p2.below[b2]:
            return False
        if kind_a == "union":
            return True
        if kind_b == "union":
            return a == b
        return ja1 <= jb1 and ja2 <= jb2

    below = [frozenset(i for i in range(n) if le(i, j)) for j in range(n)]
    return PartitivePoset(elements, p1.ground | p2.ground, coranks, parts, below)


def rebuild_one_step(f: Forest, g: Forest) -> PartitivePoset:
    """Rebuild the interval [f, g] abstractly from one decomposition step.

    A multi-tree g folds the per-tree intervals with product(); a tree
    with marked lowest vertex becomes the twisted product of the two
    side intervals (glued along the straddling halves); an unmarked
    lowest vertex becomes the vee product. The result is partitive-
    isomorphic to as_partitive(f, g).
    """
    if g.n_trees > 1:
        factors = []
        for t in g.trees:
            sub = forest(s for s in f.trees if s.leaves <= t.leaves)
            factors.append(as_partitive(sub, forest([t])))
        out = factors[0]
        for nxt in factors[1:]:
            out = product(out, nxt)
        return out
    t = g.trees[0]
    if t.is_leaf:
        return as_partitive(f, g)
    f1, f2, straddle = split_below_root(f, t)
    p1 = as_partitive(f1, forest([t.left]))
    p2 = as_partitive(f2, forest([t.right]))
    if straddle is None:
        return vee_product(p1, p2)
    s1, s2 = straddle
    return twisted_product(p1, p2, s1.leaves, s2.leaves)


# ---------------------------------------------------------------------------
# isomorphism testing

def _refinement_matrix(p: PartitivePoset):
    """ref[i][j] is True when element i's partition refines element j's.

    Refinement can relate the partitions of order-incomparable elements,
    so this is genuinely extra structure on top of the order.
    """
    n = len(p)
    return [[refines(p.parts[i], p.parts[j]) for j in range(n)] for i in range(n)]


def _signatures(p: PartitivePoset, ref):
    up = [0] * len(p)
    down = [0] * len(p)
    for i, j in p.covers:
        up[i] += 1
        down[j] += 1
    sigs = []
    for i in range(len(p)):
        sig = (p.coranks[i], up[i], down[i])
        if ref is not None:
            sig = sig + (sum(ref[i]), sum(row[i] for row in ref))
        sigs.append(sig)
    return sigs


def _find_isomorphism(p1, p2, partitive):
    n = len(p1)
    if n != len(p2):
        return None
    ref1 = _refinement_matrix(p1) if partitive else None
    ref2 = _refinement_matrix(p2) if partitive else None
    sig1 = _signatures(p1, ref1)
    sig2 = _signatures(p2, ref2)
    if sorted(sig1) != sorted(sig2):
        return None
    candidates = {}
    for j, s in enumerate(sig2):
        candidates.setdefault(s, []).append(j)
    # most-constrained-first, then bottom-up for early order pruning
    order = sorted(range(n), key=lambda i: (len(candidates[sig1[i]]), -p1.coranks[i]))
    mapping = [-1] * n
    used = [False] * n

    def consistent(i, j, prev, pj):
        if (prev in p1.below[i]) != (pj in p2.below[j]):
            return False
        if (i in p1.below[prev]) != (j in p2.below[pj]):
            return False
        if partitive and (ref1[prev][i] != ref2[pj][j] or ref1[i][prev] != ref2[j][pj]):
            return False
        return True

    def extend(k):
        if k == n:
            return True
        i = order[k]
        for j in candidates[sig1[i]]:
            if used[j]:
                continue
            if all(consistent(i, j, prev, mapping[prev]) for prev in order[:k]):
                mapping[i] = j
                used[j] = True
                if extend(k + 1):
                    return True
                mapping[i] = -1
                used[j] = False
        return False

    return mapping if extend(0) else None


def poset_isomorphic(p1: PartitivePoset, p2: PartitivePoset) -> bool:
    """Order isomorphism, ignoring the partition maps."""
    return _find_isomorphism(p1, p2, partitive=False) is not None


def partitive_isomorphic(p1: PartitivePoset, p2: PartitivePoset) -> bool:
    """Order isomorphism preserving the refinement relation between partitions.

    The matched partitions need not have equal block sizes (the twisted
    product glues blocks of whatever sizes were chosen); what transports
    is which elements' partitions refine which, so the isomorphism
    induces an isomorphism of the partition-image posets.
    """
    return _find_isomorphism(p1, p2, partitive=True) is not None
