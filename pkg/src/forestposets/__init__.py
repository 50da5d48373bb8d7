"""Posets of leaf-labeled rooted binary forests.

Decide the partial order, enumerate and materialize intervals, and
compute Mobius numbers, M-/Z-polynomials and characteristic polynomials
two ways: by exhaustive brute force over materialized intervals and by
the recursive decomposition, whose characteristic polynomials factor
completely over the integer exponents of marked trees.
"""

from .forests import (
    DuplicateLabelError,
    Forest,
    ParseError,
    Tree,
    enumerate_forests,
    enumerate_trees,
    forest,
    forest_to_nested,
    format_forest,
    format_tree,
    graft,
    inner_vertices,
    is_comb,
    leaf,
    make_comb,
    parse_forest,
    restrict,
    trivial_forest,
)
from .order import (
    IncomparableError,
    IntervalPoset,
    MarkedTreePair,
    interval,
    leq,
    lower_set,
    marked_pair,
    marked_vertices,
    maximal_elements,
    split_below_root,
)
from .polynomials import BivariatePolynomial, UnivariatePolynomial
from .invariants import (
    cardinal_polynomial,
    characteristic_polynomial,
    check_ranked,
    check_semimodular,
    find_semimodularity_violation,
    m_polynomial,
    mobius,
    mobius_number,
    z_polynomial,
)
from .decomposition import (
    DecompositionNode,
    chi_fast,
    chi_recursive,
    decompose,
    exponents,
    m_fast,
    mobius_fast,
    z_fast,
)
from .partitions import (
    SetPartition,
    comb_iso,
    enumerate_partitions,
    partition_char_poly,
    refines,
)
from .partitive import (
    PartitivePoset,
    as_partitive,
    partitive_isomorphic,
    poset_isomorphic,
    product,
    twisted_product,
    vee_product,
)

__all__ = [
    "BivariatePolynomial", "DecompositionNode", "DuplicateLabelError",
    "Forest", "IncomparableError", "IntervalPoset", "MarkedTreePair",
    "ParseError", "PartitivePoset", "SetPartition", "Tree",
    "UnivariatePolynomial", "as_partitive", "cardinal_polynomial",
    "characteristic_polynomial", "check_ranked", "check_semimodular",
    "chi_fast", "chi_recursive", "comb_iso", "decompose",
    "enumerate_forests", "enumerate_partitions", "enumerate_trees",
    "exponents", "find_semimodularity_violation", "forest",
    "forest_to_nested", "format_forest", "format_tree", "graft",
    "inner_vertices", "interval", "is_comb", "leaf", "leq", "lower_set",
    "m_fast", "m_polynomial", "make_comb", "marked_pair",
    "marked_vertices", "maximal_elements", "mobius", "mobius_fast",
    "mobius_number", "parse_forest", "partition_char_poly",
    "partitive_isomorphic", "poset_isomorphic", "product", "refines",
    "restrict", "split_below_root", "trivial_forest", "twisted_product",
    "vee_product", "z_fast", "z_polynomial",
]

__version__ = "0.1.0"
