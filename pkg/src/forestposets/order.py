"""The partial order on forests and materialized intervals.

A forest F sits below G when F can be drawn inside G: the label
partition of F refines that of G and, tree by tree, the pieces of F
nest into the splits of G. The decision procedure recurses on the root
split of each tree of G. Writing T = T1 v T2 with leaf sides I1, I2,
the trees of the restricted sub-forest either all fall inside one side
(then recurse on both sides independently) or exactly one tree
straddles the split; a straddling tree must itself split as S1 v S2
aligned with I1, I2, its root occupies the lowest vertex of T, and the
halves join the respective sides. Two straddlers, or a misaligned one,
mean F is not below T.

The same recursion drives generation (lower_set), the image of inner
vertices (marked_vertices), and interval materialization.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .forests import Forest, Tree, enumerate_trees, forest, format_forest, graft


class IncomparableError(ValueError):
    pass


def _require_same_labels(f, g):
    if f.leaves != g.leaves:
        raise ValueError(
            f"label sets differ: {sorted(f.leaves ^ g.leaves)} not shared")


def leq(f: Forest, g: Forest) -> bool:
    """Decide f <= g for forests on the same label set."""
    _require_same_labels(f, g)
    return _forest_leq(f, g)


@lru_cache(maxsize=None)
def _forest_leq(f, g):
    buckets = _split_by_trees(f, g)
    if buckets is None:
        return False
    return all(_tree_leq(sub, t) for sub, t in buckets)


def _split_by_trees(f, g):
    """Group the trees of f under the trees of g, or None if no refinement."""
    owner = {}
    for idx, t in enumerate(g.trees):
        for lab in t.leaves:
            owner[lab] = idx
    groups = [[] for _ in g.trees]
    for s in f.trees:
        idx = owner[s.min_leaf]
        if not s.leaves <= g.trees[idx].leaves:
            return None
        groups[idx].append(s)
    return [(forest(group), t) for group, t in zip(groups, g.trees)]


def _split_at_root(f, t):
    """Partition the trees of a sub-forest of t across the root split of t.

    Returns (inside_left, inside_right, straddlers) where straddlers are
    the trees meeting both sides.
    """
    left, right = t.left.leaves, t.right.leaves
    inside1, inside2, straddle = [], [], []
    for s in f.trees:
        if s.leaves <= left:
            inside1.append(s)
        elif s.leaves <= right:
            inside2.append(s)
        else:
            straddle.append(s)
    return inside1, inside2, straddle


@lru_cache(maxsize=None)
def _tree_leq(f: Forest, t: Tree) -> bool:
    if t.is_leaf:
        return True
    inside1, inside2, straddle = _split_at_root(f, t)
    if not straddle:
        return _tree_leq(forest(inside1), t.left) and _tree_leq(forest(inside2), t.right)
    if len(straddle) > 1:
        return False
    s = straddle[0]
    for s1, s2 in ((s.left, s.right), (s.right, s.left)):
        if s1.leaves <= t.left.leaves and s2.leaves <= t.right.leaves:
            return (_tree_leq(forest(inside1 + [s1]), t.left)
                    and _tree_leq(forest(inside2 + [s2]), t.right))
    return False


def split_below_root(f: Forest, t: Tree):
    """Split f <= t across the root of t.

    Returns (f1, f2, straddle) where f1 <= t.left and f2 <= t.right are
    the two side forests and straddle is the (s1, s2) pair of halves of
    the straddling tree, or None when f is a plain disjoint union across
    the split. The halves are already included in f1 and f2.
    """
    if t.is_leaf:
        raise ValueError("a leaf has no root split")
    if not _tree_leq(f, t):
        raise IncomparableError(f"{format_forest(f)} is not below {format_forest(forest([t]))}")
    inside1, inside2, straddle = _split_at_root(f, t)
    if not straddle:
        return forest(inside1), forest(inside2), None
    s = straddle[0]
    s1, s2 = s.left, s.right
    if not s1.leaves <= t.left.leaves:
        s1, s2 = s2, s1
    return forest(inside1 + [s1]), forest(inside2 + [s2]), (s1, s2)


# ---------------------------------------------------------------------------
# generation

def lower_set(g: Forest) -> list[Forest]:
    """All forests below g, built by recursing on root splits."""
    per_tree = [_tree_lower(t) for t in g.trees]
    out = []
    for combo in product(*per_tree):
        trees = []
        for sub in combo:
            trees.extend(sub.trees)
        out.append(forest(trees))
    return sorted(out, key=format_forest)


@lru_cache(maxsize=None)
def _tree_lower(t: Tree):
    """Forests below a single tree.

    Below T = T1 v T2 sit the disjoint unions F1 u F2 and, for each
    choice of one tree in F1 and one in F2, the forest grafting those
    two trees under a new vertex. Each forest arises exactly once.
    """
    if t.is_leaf:
        return (forest([t]),)
    out = []
    for f1 in _tree_lower(t.left):
        for f2 in _tree_lower(t.right):
            out.append(forest(f1.trees + f2.trees))
            for s1 in f1.trees:
                rest1 = [u for u in f1.trees if u is not s1]
                for s2 in f2.trees:
                    rest2 = [u for u in f2.trees if u is not s2]
                    out.append(forest(rest1 + rest2 + [graft(s1, s2)]))
    return tuple(out)


def maximal_elements(labels) -> list[Forest]:
    """The maximal forests on the label set: exactly the one-tree forests."""
    return [forest([t]) for t in enumerate_trees(labels)]


# ---------------------------------------------------------------------------
# marked vertices

def marked_vertices(f: Forest, g: Forest) -> frozenset:
    """Image of the inner vertices of f inside g, for f <= g.

    The image follows the canonical recursion of the order decision: a
    straddling tree's root lands on the lowest inner vertex of the
    enclosing tree of g, and the rest maps within the two sides.
    """
    if not leq(f, g):
        raise IncomparableError(
            f"{format_forest(f)} is not below {format_forest(g)}")
    marks = frozenset()
    for sub, t in _split_by_trees(f, g):
        marks |= _tree_marked(sub, t)
    return marks


@lru_cache(maxsize=None)
def _tree_marked(f, t):
    if t.is_leaf:
        return frozenset()
    f1, f2, straddle = split_below_root(f, t)
    marks = _tree_marked(f1, t.left) | _tree_marked(f2, t.right)
    if straddle is not None:
        marks |= {t.leaves}
    return marks


@dataclass(frozen=True)
class MarkedTreePair:
    """A forest together with a subset of its inner vertices.

    This is the isomorphism invariant of an interval: the interval
    [f, g] depends, up to (partitive) isomorphism, only on g and the
    image of the inner vertices of f.
    """

    upper: Forest
    marked: frozenset

    def __post_init__(self):
        vertex_ids = self.upper.inner_vertex_ids()
        if not self.marked <= vertex_ids:
            bad = next(iter(self.marked - vertex_ids))
            raise ValueError(f"marked set {sorted(bad)} is not a vertex of the forest")

    @property
    def degree(self):
        return len(self.upper.inner_vertex_ids()) - len(self.marked)


def marked_pair(f: Forest, g: Forest) -> MarkedTreePair:
    """The invariant (g, image of V(f)) of the interval [f, g]."""
    return MarkedTreePair(g, marked_vertices(f, g))


# ---------------------------------------------------------------------------
# materialized intervals

@dataclass
class IntervalPoset:
    """The interval [lower, upper] with its full order and cover data.

    Elements are sorted by descending corank, then text, so the first
    element is the lower bound and the last the upper. corank counts
    trees relative to the top; every cover steps corank by one.
    """

    lower: Forest
    upper: Forest
    elements: tuple
    coranks: tuple
    covers: frozenset
    below: tuple
    above: tuple
    _index: dict = field(repr=False)
    _mu: dict | None = field(default=None, repr=False)

    def __len__(self):
        return len(self.elements)

    @property
    def degree(self):
        return self.coranks[0]

    def index_of(self, element) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise KeyError(f"{format_forest(element)} is not in the interval") from None

    def corank_of(self, element) -> int:
        return self.coranks[self.index_of(element)]

    def contains_pair(self, a, b) -> bool:
        """True iff a <= b within the interval."""
        return self.index_of(a) in self.below[self.index_of(b)]

    def to_document(self) -> dict:
        """Structured export: element texts, coranks, cover index pairs."""
        return {
            "lower": format_forest(self.lower),
            "upper": format_forest(self.upper),
            "elements": [format_forest(e) for e in self.elements],
            "coranks": list(self.coranks),
            "covers": sorted(self.covers),
        }

    def to_dot(self, name="interval") -> str:
        """Hasse diagram in DOT form, one rank per corank level."""
        lines = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
        for i, e in enumerate(self.elements):
            lines.append(f'  n{i} [label="{format_forest(e)}"];')
        by_corank = {}
        for i, c in enumerate(self.coranks):
            by_corank.setdefault(c, []).append(i)
        for c in sorted(by_corank, reverse=True):
            members = " ".join(f"n{i};" for i in by_corank[c])
            lines.append(f"  {{ rank=same; {members} }}")
        for i, j in sorted(self.covers):
            lines.append(f"  n{i} -> n{j};")
        lines.append("}")
        return "\n".join(lines)


def interval(f: Forest, g: Forest) -> IntervalPoset:
    """Materialize [f, g]: all h with f <= h <= g, covers, coranks."""
    if not leq(f, g):
        raise IncomparableError(
            f"{format_forest(f)} is not below {format_forest(g)}")
    elements = [h for h in lower_set(g) if _forest_leq(f, h)]
    top_trees = g.n_trees
    elements.sort(key=lambda h: (top_trees - h.n_trees, format_forest(h)))
    coranks = tuple(h.n_trees - top_trees for h in elements)
    index = {h: i for i, h in enumerate(elements)}
    below = []
    for j, b in enumerate(elements):
        below.append(frozenset(
            i for i, a in enumerate(elements)
            if coranks[i] >= coranks[j] and _forest_leq(a, b)))
    above = [frozenset(j for j in range(len(elements)) if i in below[j])
             for i in range(len(elements))]
    covers = frozenset(
        (i, j)
        for j in range(len(elements))
        for i in below[j]
        if coranks[i] == coranks[j] + 1)
    return IntervalPoset(
        lower=f, upper=g, elements=tuple(elements), coranks=coranks,
        covers=covers, below=tuple(below), above=tuple(above), _index=index)
