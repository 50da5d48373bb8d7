"""The partial order: decision procedure, generation, marked vertices, intervals."""

import pytest

from forestposets import (
    IncomparableError,
    MarkedTreePair,
    enumerate_forests,
    enumerate_trees,
    forest,
    format_forest,
    graft,
    interval,
    inner_vertices,
    leaf,
    leq,
    lower_set,
    make_comb,
    marked_pair,
    marked_vertices,
    maximal_elements,
    parse_forest,
    split_below_root,
    trivial_forest,
)

BELL = {1: 1, 2: 2, 3: 5, 4: 15, 5: 52}


def labels_upto(n):
    return [chr(97 + i) for i in range(n)]


def comb_forest(labels):
    return forest([make_comb(labels)])


class TestLeq:
    def test_reflexive(self):
        for n in range(1, 4):
            for f in enumerate_forests(labels_upto(n)):
                assert leq(f, f)

    def test_union_below_graft(self):
        for t1 in enumerate_trees("ab"):
            for t2 in enumerate_trees("cd"):
                assert leq(forest([t1, t2]), forest([graft(t1, t2)]))

    def test_trivial_forest_is_minimum(self):
        for n in range(1, 5):
            e = trivial_forest(labels_upto(n))
            for g in enumerate_forests(labels_upto(n)):
                assert leq(e, g)

    def test_label_mismatch_raises(self):
        with pytest.raises(ValueError):
            leq(parse_forest("a|b"), parse_forest("(a,c)"))

    def test_no_refinement_means_no_relation(self):
        assert not leq(parse_forest("(a,b)|c"), parse_forest("(a,c)|b"))

    def test_every_cherry_sits_below_every_three_leaf_tree(self):
        # the interval below a 3-leaf tree is the whole partition lattice
        for upper in maximal_elements("abc"):
            for cherry in ("(a,b)|c", "(a,c)|b", "a|(b,c)"):
                assert leq(parse_forest(cherry), upper)

    def test_straddle_must_align(self):
        # ((a,b),c) straddles the root split {a,c} / {b,d} with the half
        # (a,b) itself straddling, so no topological map exists
        lower = parse_forest("((a,b),c)|d")
        assert not leq(lower, parse_forest("((a,c),(b,d))"))
        assert leq(lower, parse_forest("(((a,b),c),d)"))

    def test_two_straddlers_fail(self):
        lower = parse_forest("(a,c)|(b,d)")
        upper = parse_forest("((a,b),(c,d))")
        assert not leq(lower, upper)

    def test_agrees_with_lower_set_exhaustively(self):
        for n in range(1, 5):
            forests = enumerate_forests(labels_upto(n))
            for g in forests:
                below = set(lower_set(g))
                for f in forests:
                    assert leq(f, g) == (f in below)

    def test_antisymmetry_and_strict_vertex_growth(self):
        for n in range(1, 5):
            forests = enumerate_forests(labels_upto(n))
            for g in forests:
                for f in lower_set(g):
                    if f != g:
                        assert not leq(g, f)
                        assert f.n_inner < g.n_inner

    def test_transitivity(self):
        for n in range(1, 5):
            for g in enumerate_forests(labels_upto(n)):
                below_g = set(lower_set(g))
                for f in below_g:
                    for h in lower_set(f):
                        assert h in below_g


class TestLowerSet:
    def test_single_leaf(self):
        f = parse_forest("a")
        assert lower_set(f) == [f]

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_comb_sizes_are_bell_numbers(self, n):
        assert len(lower_set(comb_forest(labels_upto(n)))) == BELL[n]

    def test_no_duplicates(self):
        for g in enumerate_forests("abcd"):
            ls = lower_set(g)
            assert len(set(ls)) == len(ls)

    def test_multi_tree_forest_is_per_tree_product(self):
        g = parse_forest("(a,b)|(c,d)")
        assert len(lower_set(g)) == 4  # 2 choices per cherry


class TestMarkedVertices:
    def test_empty_for_trivial_forest(self):
        g = parse_forest("((a,b),c)")
        assert marked_vertices(trivial_forest("abc"), g) == frozenset()

    def test_identity_marks_everything(self):
        for g in enumerate_forests("abcd"):
            assert marked_vertices(g, g) == inner_vertices(g)

    def test_straddling_cherry_maps_to_meeting_vertex(self):
        lower = parse_forest("(a,b)|c|d")
        upper = parse_forest("((a,b),(c,d))")
        assert marked_vertices(lower, upper) == {frozenset("ab")}

    def test_cross_cherry_maps_to_root(self):
        lower = parse_forest("(a,c)|b|d")
        upper = parse_forest("((a,b),(c,d))")
        assert marked_vertices(lower, upper) == {frozenset("abcd")}

    def test_incomparable_raises(self):
        with pytest.raises(IncomparableError):
            marked_vertices(parse_forest("(a,c)|b"), parse_forest("((a,b),c)"))

    def test_cardinality_is_vertex_count(self):
        for g in enumerate_forests("abcd"):
            for f in lower_set(g):
                assert len(marked_vertices(f, g)) == f.n_inner

    def test_monotone_along_chains(self):
        for g in enumerate_forests("abcd"):
            for mid in lower_set(g):
                marks_mid = marked_vertices(mid, g)
                for f in lower_set(mid):
                    assert marked_vertices(f, g) <= marks_mid

    def test_marked_pair_validates(self):
        g = parse_forest("((a,b),c)")
        with pytest.raises(ValueError):
            MarkedTreePair(g, frozenset({frozenset("ac")}))
        pair = marked_pair(trivial_forest("abc"), g)
        assert pair.degree == 2


class TestSplitBelowRoot:
    def test_straddling_split(self):
        t = parse_forest("((a,b),c)").trees[0]
        f1, f2, straddle = split_below_root(parse_forest("(a,c)|b"), t)
        assert straddle is None or straddle  # shape check below
        # (a,c) straddles: halves a and c join the sides
        assert straddle is not None
        s1, s2 = straddle
        assert s1.leaves == frozenset("a") and s2.leaves == frozenset("c")
        assert format_forest(f1) == "a|b"
        assert format_forest(f2) == "c"

    def test_disjoint_union_split(self):
        t = parse_forest("((a,b),c)").trees[0]
        f1, f2, straddle = split_below_root(parse_forest("(a,b)|c"), t)
        assert straddle is None
        assert format_forest(f1) == "(a,b)"
        assert format_forest(f2) == "c"

    def test_not_below_raises(self):
        t = parse_forest("((a,b),c)").trees[0]
        with pytest.raises(IncomparableError):
            split_below_root(parse_forest("(a,c)|b"), parse_forest("(a,(b,c))").trees[0])
        with pytest.raises(ValueError):
            split_below_root(parse_forest("a"), leaf("a"))


class TestInterval:
    def test_singleton(self):
        f = parse_forest("(a,b)|c")
        p = interval(f, f)
        assert len(p) == 1 and p.degree == 0 and not p.covers

    def test_degree_one(self):
        lower = parse_forest("(a,b)|c")
        upper = parse_forest("((a,b),c)")
        p = interval(lower, upper)
        assert len(p) == 2
        assert p.covers == {(0, 1)}
        assert p.coranks == (1, 0)

    def test_comb_four_interval_size(self):
        p = interval(trivial_forest("abcd"), comb_forest("abcd"))
        assert len(p) == BELL[4]

    def test_incomparable_raises(self):
        with pytest.raises(IncomparableError):
            interval(parse_forest("(a,c)|b"), parse_forest("((a,b),c)"))

    def test_bounds_and_coranks(self):
        for g in enumerate_forests("abc"):
            for f in lower_set(g):
                p = interval(f, g)
                assert p.elements[0] == f and p.elements[-1] == g
                assert p.corank_of(f) == p.degree == f.n_trees - g.n_trees
                assert p.corank_of(g) == 0
                assert p.contains_pair(f, g)

    def test_covers_equal_transitive_reduction(self):
        # independent reduction: relation pairs with no strict intermediate
        for g in enumerate_forests("abcd"):
            p = interval(trivial_forest("abcd"), g)
            n = len(p)
            reduction = set()
            for j in range(n):
                for i in p.below[j] - {j}:
                    if not any(k != i and k != j and k in p.below[j] and i in p.below[k]
                               for k in p.below[j]):
                        reduction.add((i, j))
            assert p.covers == reduction

    def test_maximal_chains_have_equal_length(self):
        for g in enumerate_forests("abcd"):
            for f in lower_set(g):
                p = interval(f, g)
                up = {i: [] for i in range(len(p))}
                for i, j in p.covers:
                    up[i].append(j)
                lengths = set()

                def chase(i, depth):
                    if not up[i]:
                        lengths.add(depth)
                    for j in up[i]:
                        chase(j, depth + 1)

                chase(0, 0)
                assert lengths == {g.n_inner - f.n_inner}

    def test_index_of_unknown_element(self):
        p = interval(parse_forest("a|b"), parse_forest("(a,b)"))
        with pytest.raises(KeyError):
            p.index_of(parse_forest("(a,c)"))


class TestMaximalElements:
    def test_two_labels(self):
        assert maximal_elements("ab") == [parse_forest("(a,b)")]

    def test_three_labels(self):
        assert len(maximal_elements("abc")) == 3

    def test_trees_are_maximal(self):
        forests = enumerate_forests("abc")
        for m in maximal_elements("abc"):
            assert all(not (leq(m, g) and g != m) for g in forests)


class TestExports:
    def test_dot_output(self):
        p = interval(trivial_forest("abc"), comb_forest("abc"))
        dot = p.to_dot()
        assert dot.startswith("digraph interval {")
        assert dot.count(" -> ") == 6  # partition lattice on 3 has 6 covers
        assert dot.count("label=") == 5
        assert 'n0 [label="a|b|c"];' in dot
        assert dot.count("rank=same") == 3

    def test_document_export(self):
        p = interval(parse_forest("a|b"), parse_forest("(a,b)"))
        doc = p.to_document()
        assert doc == {
            "lower": "a|b",
            "upper": "(a,b)",
            "elements": ["a|b", "(a,b)"],
            "coranks": [1, 0],
            "covers": [(0, 1)],
        }
