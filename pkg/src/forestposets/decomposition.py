"""Fast interval invariants from the recursive decomposition.

An interval is summarized by its MarkedTreePair (upper forest plus the
set of marked inner vertices). The decomposition never materializes
elements: a multi-tree upper forest factors tree by tree; a tree whose
root is marked factors into its two subtrees; a tree whose root is
unmarked is the special case, where the Z- and M-polynomials obey

    Z = xy Z1 Z2 + dx(x Z1) dx(x Z2) + x dy(y Z1) dy(y Z2)
    M = xy M1 M2 + (1 - x) dx(x M1) dx(x M2)

with dx, dy the partial derivatives. The characteristic polynomial
factors completely over the exponents: each unmarked vertex with child
subtrees T1, T2 contributes the root d1*d2, where d_i counts leaves of
T_i minus marked vertices inside T_i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .forests import Forest, Tree
from .order import MarkedTreePair
from .polynomials import ONE, BivariatePolynomial, UnivariatePolynomial

ATOM = "atom"
FOREST_PRODUCT = "forest-product"
TWISTED_PRODUCT = "twisted-product"
SPECIAL_VEE = "special-vee"


@dataclass(frozen=True)
class DecompositionNode:
    """One step of the decomposition; leaves of this tree are atoms."""

    kind: str
    scope: frozenset
    children: tuple = ()

    def trace(self, indent=0) -> str:
        """Indented one-node-per-line rendering, for explainability."""
        scope = ",".join(sorted(self.scope))
        lines = ["  " * indent + f"{self.kind} {{{scope}}}"]
        for child in self.children:
            lines.append(child.trace(indent + 1))
        return "\n".join(lines)

    def count(self, kind) -> int:
        return (self.kind == kind) + sum(c.count(kind) for c in self.children)


def _marks_in(marked, tree):
    return frozenset(v for v in marked if v <= tree.leaves)


def decompose(pair: MarkedTreePair) -> DecompositionNode:
    """Case tree of the recursion: forest split, then root marked or not."""
    upper, marked = pair.upper, pair.marked
    if upper.n_trees > 1:
        children = tuple(_decompose_tree(t, _marks_in(marked, t)) for t in upper.trees)
        return DecompositionNode(FOREST_PRODUCT, upper.leaves, children)
    return _decompose_tree(upper.trees[0], marked)


def _decompose_tree(t: Tree, marked) -> DecompositionNode:
    if t.is_leaf:
        return DecompositionNode(ATOM, t.leaves)
    children = (_decompose_tree(t.left, _marks_in(marked, t.left)),
                _decompose_tree(t.right, _marks_in(marked, t.right)))
    kind = TWISTED_PRODUCT if t.leaves in marked else SPECIAL_VEE
    return DecompositionNode(kind, t.leaves, children)


# ---------------------------------------------------------------------------
# Z and M

def _special_z(z1, z2):
    dx1 = z1.shift(1, 0).partial_x()
    dx2 = z2.shift(1, 0).partial_x()
    dy1 = z1.shift(0, 1).partial_y()
    dy2 = z2.shift(0, 1).partial_y()
    return (z1 * z2).shift(1, 1) + dx1 * dx2 + (dy1 * dy2).shift(1, 0)


_ONE_MINUS_X = BivariatePolynomial({(0, 0): 1, (1, 0): -1})

def _special_m(m1, m2):
    dx1 = m1.shift(1, 0).partial_x()
    dx2 = m2.shift(1, 0).partial_x()
    return (m1 * m2).shift(1, 1) + _ONE_MINUS_X * dx1 * dx2


@lru_cache(maxsize=None)
def _tree_z(t: Tree, marked) -> BivariatePolynomial:
    if t.is_leaf:
        return ONE
    z1 = _tree_z(t.left, _marks_in(marked, t.left))
    z2 = _tree_z(t.right, _marks_in(marked, t.right))
    if t.leaves in marked:
        return z1 * z2
    return _special_z(z1, z2)


@lru_cache(maxsize=None)
def _tree_m(t: Tree, marked) -> BivariatePolynomial:
    if t.is_leaf:
        return ONE
    m1 = _tree_m(t.left, _marks_in(marked, t.left))
    m2 = _tree_m(t.right, _marks_in(marked, t.right))
    if t.leaves in marked:
        return m1 * m2
    return _special_m(m1, m2)


def z_fast(pair: MarkedTreePair) -> BivariatePolynomial:
    """Z-polynomial of the interval, by decomposition alone."""
    out = ONE
    for t in pair.upper.trees:
        out = out * _tree_z(t, _marks_in(pair.marked, t))
    return out


def m_fast(pair: MarkedTreePair) -> BivariatePolynomial:
    """M-polynomial of the interval, by decomposition alone."""
    out = ONE
    for t in pair.upper.trees:
        out = out * _tree_m(t, _marks_in(pair.marked, t))
    return out


# ---------------------------------------------------------------------------
# exponents and the characteristic polynomial

def exponents(pair: MarkedTreePair) -> tuple:
    """Sorted multiset of exponents, one per unmarked inner vertex.

    An unmarked vertex with child subtrees T1, T2 contributes d1*d2
    where d_i = leaves(T_i) - marked vertices inside T_i; a leaf child
    contributes d_i = 1. All entries are >= 1 and there are exactly
    degree-of-the-interval many.
    """
    out = []

    def walk(t):
        """Returns the number of marked vertices at or below t."""
        if t.is_leaf:
            return 0
        m1, m2 = walk(t.left), walk(t.right)
        if t.leaves in pair.marked:
            return m1 + m2 + 1
        d1 = t.left.n_leaves - m1
        d2 = t.right.n_leaves - m2
        out.append(d1 * d2)
        return m1 + m2

    for t in pair.upper.trees:
        walk(t)
    return tuple(sorted(out))


def chi_fast(pair: MarkedTreePair) -> UnivariatePolynomial:
    """Characteristic polynomial as the product of (y - e) over exponents."""
    return UnivariatePolynomial.from_roots(exponents(pair))


def chi_recursive(pair: MarkedTreePair) -> UnivariatePolynomial:
    """Characteristic polynomial by the product recurrence.

    Splitting a special tree at its unmarked root multiplies the two
    subtree polynomials by (y - (deg1 + 1)(deg2 + 1)); products multiply
    plainly. Equal to chi_fast, kept as an independent path.
    """
    out = UnivariatePolynomial.constant(1)
    for t in pair.upper.trees:
        out = out * _tree_chi(t, _marks_in(pair.marked, t))
    return out


@lru_cache(maxsize=None)
def _tree_chi(t: Tree, marked) -> UnivariatePolynomial:
    if t.is_leaf:
        return UnivariatePolynomial.constant(1)
    marks1 = _marks_in(marked, t.left)
    marks2 = _marks_in(marked, t.right)
    chi1 = _tree_chi(t.left, marks1)
    chi2 = _tree_chi(t.right, marks2)
    if t.leaves in marked:
        return chi1 * chi2
    deg1 = t.left.n_inner - len(marks1)
    deg2 = t.right.n_inner - len(marks2)
    root = (deg1 + 1) * (deg2 + 1)
    return UnivariatePolynomial({1: 1, 0: -root}) * chi1 * chi2


def mobius_fast(pair: MarkedTreePair) -> int:
    """Mobius number: the product of -e over the exponents."""
    exps = exponents(pair)
    return (-1) ** len(exps) * math.prod(exps)
