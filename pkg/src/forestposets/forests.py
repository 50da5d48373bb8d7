"""Leaf-labeled rooted binary trees and forests, in canonical form.

A tree is either a single labeled leaf or an inner vertex joining two
subtrees with disjoint leaf sets; children are unordered, so every
constructor stores the child containing the smallest leaf label first.
A forest is a set of such trees whose leaf sets partition the label set.
Values are immutable and hashable, which makes structural equality a
plain key comparison and lets enumeration dedupe for free.

Text form: ``forest := tree ('|' tree)*`` and
``tree := label | '(' tree ',' tree ')'`` with labels over [A-Za-z0-9_]
and whitespace ignored.
"""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations, product

_LABEL_RE = re.compile(r"[A-Za-z0-9_]+")


class ParseError(ValueError):
    """Malformed forest text; ``position`` is the 0-based offset of the fault."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DuplicateLabelError(ValueError):
    """A leaf label occurred twice; ``label`` names the offender."""

    def __init__(self, label):
        super().__init__(f"duplicate label {label!r}")
        self.label = label


class Tree:
    """One canonical leaf-labeled rooted binary tree.

    Do not call directly: build values with leaf() and graft(), which
    enforce canonical child order and disjointness.
    """

    __slots__ = ("label", "left", "right", "leaves", "min_leaf", "_key", "_hash")

    def __init__(self, label, left, right, leaves, min_leaf, key):
        self.label = label
        self.left = left
        self.right = right
        self.leaves = leaves
        self.min_leaf = min_leaf
        self._key = key
        self._hash = hash(key)

    @property
    def is_leaf(self):
        return self.label is not None

    @property
    def n_leaves(self):
        return len(self.leaves)

    @property
    def n_inner(self):
        return len(self.leaves) - 1

    def inner_vertex_ids(self):
        """Frozenset of vertex ids, one per inner vertex.

        A vertex is identified by its ancestor-leaf set (the leaves above
        it); within one forest those sets are pairwise distinct.
        """
        out = set()
        stack = [self]
        while stack:
            t = stack.pop()
            if not t.is_leaf:
                out.add(t.leaves)
                stack.append(t.left)
                stack.append(t.right)
        return frozenset(out)

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Tree):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return self._hash

    def __str__(self):
        return format_tree(self)

    def __repr__(self):
        return f"Tree({format_tree(self)!r})"


class Forest:
    """A set of trees with pairwise disjoint leaf sets, ordered by min leaf."""

    __slots__ = ("trees", "leaves", "_hash")

    def __init__(self, trees, leaves, key):
        self.trees = trees
        self.leaves = leaves
        self._hash = hash(key)

    @property
    def n_trees(self):
        return len(self.trees)

    @property
    def n_inner(self):
        return len(self.leaves) - len(self.trees)

    def inner_vertex_ids(self):
        out = frozenset()
        for t in self.trees:
            out |= t.inner_vertex_ids()
        return out

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Forest):
            return NotImplemented
        return self.trees == other.trees

    def __hash__(self):
        return self._hash

    def __len__(self):
        return len(self.trees)

    def __iter__(self):
        return iter(self.trees)

    def __str__(self):
        return format_forest(self)

    def __repr__(self):
        return f"Forest({format_forest(self)!r})"


def leaf(label: str) -> Tree:
    """Single-leaf tree on one label."""
    if not isinstance(label, str) or not _LABEL_RE.fullmatch(label):
        raise ValueError(f"invalid label {label!r}: expected [A-Za-z0-9_]+")
    return Tree(label, None, None, frozenset((label,)), label, label)

def graft(t1: Tree, t2: Tree) -> Tree:
    """Join two trees under a new inner vertex (leaf sets must be disjoint)."""
    overlap = t1.leaves & t2.leaves
    if overlap:
        raise DuplicateLabelError(min(overlap))
    if t2.min_leaf < t1.min_leaf:
        t1, t2 = t2, t1
    return Tree(None, t1, t2, t1.leaves | t2.leaves, t1.min_leaf,
                (t1._key, t2._key))

def forest(trees) -> Forest:
    """Forest from an iterable of trees; validates disjointness."""
    ts = sorted(trees, key=lambda t: t.min_leaf)
    leaves = set()
    for t in ts:
        for lab in t.leaves:
            if lab in leaves:
                raise DuplicateLabelError(lab)
            leaves.add(lab)
    return Forest(tuple(ts), frozenset(leaves), tuple(t._key for t in ts))

def trivial_forest(labels) -> Forest:
    """The forest of bare leaves (no inner vertices) on the given labels."""
    return forest(leaf(lab) for lab in set(labels))


# ---------------------------------------------------------------------------
# text form

def format_tree(t: Tree) -> str:
    if t.is_leaf:
        return t.label
    return f"({format_tree(t.left)},{format_tree(t.right)})"

def format_forest(f: Forest) -> str:
    """Canonical text; parse_forest(format_forest(f)) == f."""
    return "|".join(format_tree(t) for t in f.trees)


def _tokenize(text):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch in "(),|":
            out.append((ch, pos))
            pos += 1
        else:
            m = _LABEL_RE.match(text, pos)
            if not m:
                raise ParseError(f"unexpected character {ch!r}", pos)
            out.append((m.group(), pos))
            pos = m.end()
    out.append((None, n))
    return out


def parse_forest(text: str) -> Forest:
    """Parse the '|'-separated forest grammar into a canonical Forest."""
    tokens = _tokenize(text)
    idx = 0

    def peek():
        return tokens[idx][0]

    def take(expected=None):
        nonlocal idx
        tok, pos = tokens[idx]
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}", pos)
        idx += 1
        return tok, pos

    def tree():
        tok, pos = take()
        if tok == "(":
            t1 = tree()
            take(",")
            t2 = tree()
            take(")")
            try:
                return graft(t1, t2)
            except DuplicateLabelError as exc:
                raise DuplicateLabelError(exc.label) from None
        if tok is None or tok in (")", ",", "|"):
            raise ParseError(f"expected label or '(', found {tok!r}", pos)
        return leaf(tok)

    trees = [tree()]
    while peek() == "|":
        take("|")
        trees.append(tree())
    tok, pos = tokens[idx]
    if tok is not None:
        raise ParseError(f"trailing input {tok!r}", pos)
    return forest(trees)


def forest_to_nested(f: Forest):
    """Machine-readable export: each tree as nested two-element lists."""
    def tree_to_nested(t):
        if t.is_leaf:
            return t.label
        return [tree_to_nested(t.left), tree_to_nested(t.right)]
    return [tree_to_nested(t) for t in f.trees]


# ---------------------------------------------------------------------------
# restriction and inner vertices

def restrict(f: Forest, labels) -> Forest:
    """Sub-forest on a union of whole-tree leaf sets.

    Restriction is only defined along tree boundaries; a label set that
    cuts through a tree raises ValueError.
    """
    target = frozenset(labels)
    if not target <= f.leaves:
        raise ValueError(f"labels {sorted(target - f.leaves)} not in the forest")
    picked = [t for t in f.trees if t.leaves <= target]
    covered = frozenset().union(*(t.leaves for t in picked)) if picked else frozenset()
    if covered != target:
        raise ValueError(f"label set splits a tree: {sorted(target - covered)}")
    return forest(picked)

def inner_vertices(f: Forest):
    """All inner-vertex ids of the forest (ancestor-leaf sets)."""
    return f.inner_vertex_ids()


# ---------------------------------------------------------------------------
# combs

def make_comb(ordered_labels) -> Tree:
    """Left comb ((((l1,l2),l3),...),ln); a single label gives a leaf."""
    labels = list(ordered_labels)
    if not labels:
        raise ValueError("a comb needs at least one label")
    t = leaf(labels[0])
    for lab in labels[1:]:
        t = graft(t, leaf(lab))
    return t

def is_comb(t: Tree) -> bool:
    """True iff every inner vertex has at least one leaf child."""
    if t.is_leaf:
        return True
    if not (t.left.is_leaf or t.right.is_leaf):
        return False
    return is_comb(t.left) and is_comb(t.right)


# ---------------------------------------------------------------------------
# enumeration

@lru_cache(maxsize=None)
def _trees_on(labels: frozenset):
    """All canonical trees on a fixed label set, as a tuple.

    The root split is forced to put the smallest label on the left, so
    each unordered tree is produced exactly once.
    """
    if not labels:
        raise ValueError("no trees on an empty label set")
    if len(labels) == 1:
        (lab,) = labels
        return (leaf(lab),)
    anchor = min(labels)
    rest = sorted(labels - {anchor})
    out = []
    for size in range(len(rest)):
        for combo in combinations(rest, size):
            side1 = frozenset((anchor,) + combo)
            side2 = labels - side1
            for t1 in _trees_on(side1):
                for t2 in _trees_on(side2):
                    out.append(graft(t1, t2))
    return tuple(out)


def _partitions_of(labels: frozenset):
    """Set partitions as tuples of frozenset blocks, smallest-anchor order."""
    if not labels:
        yield ()
        return
    anchor = min(labels)
    rest = sorted(labels - {anchor})
    for size in range(len(rest) + 1):
        for combo in combinations(rest, size):
            block = frozenset((anchor,) + combo)
            for tail in _partitions_of(labels - block):
                yield (block,) + tail


def enumerate_trees(labels) -> list[Tree]:
    """All canonical trees on the label set; (2n-3)!! of them for n >= 2."""
    fs = frozenset(labels)
    if not fs:
        raise ValueError("empty label set")
    return sorted(_trees_on(fs), key=format_tree)

def enumerate_forests(labels) -> list[Forest]:
    """All canonical forests on the label set (one tree per partition block)."""
    fs = frozenset(labels)
    if not fs:
        raise ValueError("empty label set")
    out = []
    for blocks in _partitions_of(fs):
        for choice in product(*(_trees_on(b) for b in blocks)):
            out.append(forest(choice))
    return sorted(out, key=format_forest)
