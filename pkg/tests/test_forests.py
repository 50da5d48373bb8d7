"""Core tree/forest representation: parsing, canonical form, enumeration."""

import math
from itertools import combinations

import pytest

from forestposets import (
    DuplicateLabelError,
    ParseError,
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


def tree_count(n):
    # (2n-3)!! leaf-labeled rooted binary trees on n >= 2 labels
    return 1 if n == 1 else math.prod(range(1, 2 * n - 2, 2))


def all_partitions(labels):
    # independent set-partition enumeration for the forest-count oracle
    labels = sorted(labels)
    if not labels:
        yield []
        return
    first, rest = labels[0], labels[1:]
    for size in range(len(rest) + 1):
        for combo in combinations(rest, size):
            block = [first, *combo]
            remaining = [lab for lab in rest if lab not in combo]
            for tail in all_partitions(remaining):
                yield [block] + tail


def forest_count(n):
    labels = [chr(97 + i) for i in range(n)]
    return sum(math.prod(tree_count(len(b)) for b in blocks)
               for blocks in all_partitions(labels))


def labels_upto(n):
    return [chr(97 + i) for i in range(n)]


class TestParseFormat:
    def test_single_leaf(self):
        f = parse_forest("a")
        assert f.n_trees == 1 and f.trees[0].is_leaf
        assert format_forest(f) == "a"

    def test_cherry_and_leaf(self):
        f = parse_forest("(a,b)|c")
        assert f.n_trees == 2
        assert format_forest(f) == "(a,b)|c"

    def test_canonical_reordering(self):
        f = parse_forest("((b,a),c)")
        assert format_forest(f) == "((a,b),c)"
        assert parse_forest(format_forest(f)) == f

    def test_whitespace_ignored(self):
        assert parse_forest(" ( a , b ) | c ") == parse_forest("(a,b)|c")

    def test_tree_order_by_min_label(self):
        f = forest([graft(leaf("c"), leaf("d")), leaf("a")])
        assert format_forest(f) == "a|(c,d)"

    def test_cherry_child_order(self):
        assert format_tree(graft(leaf("b"), leaf("a"))) == "(a,b)"

    def test_syntax_error_reports_position(self):
        with pytest.raises(ParseError) as err:
            parse_forest("(a,b")
        assert err.value.position == 4
        with pytest.raises(ParseError):
            parse_forest("(a,,b)")
        with pytest.raises(ParseError):
            parse_forest("a b")
        with pytest.raises(ParseError):
            parse_forest("(a,b))")
        with pytest.raises(ParseError):
            parse_forest("")

    def test_duplicate_label_named(self):
        with pytest.raises(DuplicateLabelError) as err:
            parse_forest("(a,a)")
        assert err.value.label == "a"
        with pytest.raises(DuplicateLabelError):
            parse_forest("(a,b)|a")

    def test_bad_label_rejected(self):
        with pytest.raises(ParseError):
            parse_forest("a-b")
        with pytest.raises(ValueError):
            leaf("")
        with pytest.raises(ValueError):
            leaf("a b")

    def test_roundtrip_exhaustive(self):
        for n in range(1, 5):
            for f in enumerate_forests(labels_upto(n)):
                assert parse_forest(format_forest(f)) == f

    def test_nested_export(self):
        f = parse_forest("((a,b),c)|d")
        assert forest_to_nested(f) == [[["a", "b"], "c"], "d"]


class TestGraftRestrict:
    def test_graft_basics(self):
        ab = graft(leaf("a"), leaf("b"))
        assert format_tree(ab) == "(a,b)"
        abc = graft(ab, leaf("c"))
        assert format_tree(abc) == "((a,b),c)"

    def test_graft_is_unordered(self):
        ab = graft(leaf("a"), leaf("b"))
        assert graft(leaf("c"), ab) == graft(ab, leaf("c"))

    def test_graft_counts_vertices(self):
        t1 = graft(leaf("a"), leaf("b"))
        t2 = graft(leaf("c"), leaf("d"))
        assert graft(t1, t2).n_inner == t1.n_inner + t2.n_inner + 1

    def test_graft_overlap_rejected(self):
        with pytest.raises(DuplicateLabelError):
            graft(leaf("a"), graft(leaf("a"), leaf("b")))

    def test_restrict(self):
        f = parse_forest("(a,b)|c")
        assert restrict(f, {"c"}) == parse_forest("c")
        assert restrict(f, f.leaves) == f
        g = parse_forest("(a,b)|(c,d)")
        assert restrict(g, {"a", "b"}) == parse_forest("(a,b)")

    def test_restrict_cannot_split_tree(self):
        f = parse_forest("(a,b)|c")
        with pytest.raises(ValueError):
            restrict(f, {"a", "c"})
        with pytest.raises(ValueError):
            restrict(f, {"z"})


class TestInnerVertices:
    def test_no_inner_vertices(self):
        assert inner_vertices(trivial_forest("abc")) == frozenset()

    def test_three_leaf_tree(self):
        f = parse_forest("((a,b),c)")
        assert inner_vertices(f) == {frozenset("ab"), frozenset("abc")}

    def test_balanced_four(self):
        f = parse_forest("((a,b),(c,d))")
        assert inner_vertices(f) == {frozenset("ab"), frozenset("cd"), frozenset("abcd")}

    def test_tree_count_plus_vertices_is_label_count(self):
        for n in range(1, 5):
            for f in enumerate_forests(labels_upto(n)):
                assert f.n_trees + f.n_inner == len(f.leaves)


class TestEnumeration:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_tree_counts(self, n):
        assert len(enumerate_trees(labels_upto(n))) == tree_count(n)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_forest_counts(self, n):
        assert len(enumerate_forests(labels_upto(n))) == forest_count(n)

    def test_three_label_trees_by_hand(self):
        # the third tree pairs b with c; canonically the child with the
        # smaller minimum leaf comes first, so it prints as (a,(b,c))
        texts = {format_tree(t) for t in enumerate_trees("abc")}
        assert texts == {"((a,b),c)", "((a,c),b)", "(a,(b,c))"}

    def test_no_duplicates(self):
        for n in range(1, 6):
            forests = enumerate_forests(labels_upto(n))
            assert len(set(forests)) == len(forests)

    def test_empty_label_set_rejected(self):
        with pytest.raises(ValueError):
            enumerate_trees([])
        with pytest.raises(ValueError):
            enumerate_forests([])

    def test_canonicalization_order_insensitive(self):
        def mirrored(t):
            if t.is_leaf:
                return leaf(t.label)
            return graft(mirrored(t.right), mirrored(t.left))

        for t in enumerate_trees("abcd"):
            assert mirrored(t) == t


class TestCombs:
    def test_make_comb(self):
        assert format_tree(make_comb("a")) == "a"
        assert format_tree(make_comb("abc")) == "((a,b),c)"
        assert format_tree(make_comb("abcd")) == "(((a,b),c),d)"

    def test_make_comb_rejects_duplicates(self):
        with pytest.raises(DuplicateLabelError):
            make_comb("aba")
        with pytest.raises(ValueError):
            make_comb("")

    def test_is_comb(self):
        assert is_comb(parse_forest("((a,b),c)").trees[0])
        assert not is_comb(parse_forest("((a,b),(c,d))").trees[0])
        assert is_comb(leaf("a"))

    def test_comb_count_matches_orders(self):
        # a comb shape exists for every ordering, but many orderings collide
        combs = {t for t in enumerate_trees("abcd") if is_comb(t)}
        assert len(combs) == 12  # 4!/2: bottom cherry is unordered
