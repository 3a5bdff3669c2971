"""Tree families: enumeration, counting, hooks, grafting, encodings."""

from math import factorial

import pytest

from hooklab.trees import (
    BinaryTree,
    CayleyTree,
    IncreasingTree,
    binary_count,
    binary_from_json_dict,
    binary_to_dot,
    binary_to_json_dict,
    cayley_count,
    cayley_tree_at,
    degree_vector,
    enumerate_binary,
    enumerate_cayley,
    enumerate_increasing,
    graft,
    hooks,
    increasing_count,
    increasing_from_cayley,
    increasing_tree_at,
    prufer_decode,
    prufer_encode,
    split_at_second_min,
    subtree_sizes,
)


def path_tree(r):
    return IncreasingTree(range(1, r + 1), {v: v - 1 for v in range(2, r + 1)})


def star_tree(r):
    return IncreasingTree(range(1, r + 1), {v: 1 for v in range(2, r + 1)})


class TestIncreasing:
    def test_counts_match_enumeration(self):
        for r in range(1, 8):
            family = set(enumerate_increasing(range(1, r + 1)))
            assert len(family) == increasing_count(r) == factorial(r - 1)

    def test_every_tree_is_increasing(self):
        for t in enumerate_increasing(range(1, 6)):
            for v, p in t.parent.items():
                assert p < v

    def test_enumeration_order_is_stable(self):
        first, second = list(enumerate_increasing([1, 2, 3]))
        assert first.parent == {2: 1, 3: 1}
        assert second.parent == {2: 1, 3: 2}

    def test_index_access_matches_enumeration(self):
        labels = (1, 2, 3, 4, 5)
        listed = list(enumerate_increasing(labels))
        for i, t in enumerate(listed):
            assert increasing_tree_at(labels, i) == t

    def test_ranges_partition_the_family(self):
        labels = (1, 2, 3, 4, 5)
        total = increasing_count(5)
        pieces = []
        for lo in range(0, total, 7):
            pieces.extend(enumerate_increasing(labels, lo, lo + 7))
        assert pieces == list(enumerate_increasing(labels))

    def test_arbitrary_label_sets(self):
        ts = list(enumerate_increasing([2, 5, 9]))
        assert len(ts) == 2
        assert all(t.root == 2 for t in ts)

    def test_constructor_rejects_bad_parent_maps(self):
        with pytest.raises(ValueError):
            IncreasingTree([1, 2, 3], {2: 1})
        with pytest.raises(ValueError):
            IncreasingTree([1, 2, 3], {2: 1, 3: 4})
        with pytest.raises(ValueError):
            IncreasingTree([1, 2, 3], {2: 3, 3: 1})

    def test_json_round_trip(self):
        for t in enumerate_increasing(range(1, 5)):
            assert IncreasingTree.from_json_dict(t.to_json_dict()) == t

    def test_dot_golden(self):
        t = star_tree(3)
        assert t.to_dot() == (
            "digraph increasing_tree {\n"
            "  ordering=out;\n"
            "  1;\n  2;\n  3;\n"
            "  1 -> 2;\n  1 -> 3;\n}"
        )


class TestHooks:
    def test_path_and_star(self):
        h = hooks(path_tree(3))
        assert h.sizes == {1: 3, 2: 2, 3: 1}
        assert h.sets[2] == frozenset({2, 3})
        h = hooks(star_tree(4))
        assert h.sizes == {1: 4, 2: 1, 3: 1, 4: 1}

    def test_hook_contains_vertex_and_nests(self):
        for t in enumerate_increasing(range(1, 6)):
            h = hooks(t)
            for v in t.labels:
                assert v in h.sets[v]
                assert h.sizes[v] == len(h.sets[v])
            for v, p in t.parent.items():
                assert h.sets[v] < h.sets[p]


class TestGrafting:
    def test_split_example(self):
        host, shoot = split_at_second_min(star_tree(3))
        assert host.labels == (1, 3) and shoot.labels == (2,)

    def test_split_then_graft_restores(self):
        for r in range(2, 7):
            for t in enumerate_increasing(range(1, r + 1)):
                host, shoot = split_at_second_min(t)
                assert shoot.root == 2
                assert graft(shoot, host) == t

    def test_graft_hangs_shoot_under_host_root(self):
        host = path_tree(2)
        shoot = IncreasingTree([3, 4], {4: 3})
        joined = graft(shoot, host)
        assert joined.parent == {2: 1, 3: 1, 4: 3}

    def test_single_vertex_cannot_split(self):
        with pytest.raises(ValueError):
            split_at_second_min(IncreasingTree([1], {}))

    def test_graft_rejects_label_overlap(self):
        with pytest.raises(ValueError):
            graft(path_tree(2), path_tree(3))


class TestCayley:
    def test_counts_match_enumeration(self):
        for r in range(1, 7):
            family = set(enumerate_cayley(r))
            expected = 1 if r <= 2 else r ** (r - 2)
            assert len(family) == cayley_count(r) == expected

    def test_prufer_round_trip(self):
        for r in range(3, 7):
            for u in enumerate_cayley(r):
                code = prufer_encode(u)
                assert len(code) == r - 2
                assert prufer_decode(code) == u

    def test_prufer_examples(self):
        star = CayleyTree([1, 2, 3, 4], [(1, 2), (1, 3), (1, 4)])
        assert prufer_encode(star) == (1, 1)
        path = CayleyTree([1, 2, 3], [(1, 2), (2, 3)])
        assert prufer_encode(path) == (2,)

    def test_enumeration_follows_code_order(self):
        assert prufer_encode(cayley_tree_at(4, 0)) == (1, 1)
        assert prufer_encode(cayley_tree_at(4, 15)) == (4, 4)
        codes = [prufer_encode(u) for u in enumerate_cayley(5)]
        assert codes == sorted(codes)

    def test_degree_vector(self):
        star = CayleyTree([1, 2, 3, 4], [(1, 2), (1, 3), (1, 4)])
        assert degree_vector(star) == (3, 1, 1, 1)
        path = CayleyTree([1, 2, 3], [(1, 2), (2, 3)])
        assert degree_vector(path) == (1, 2, 1)

    def test_constructor_validation(self):
        with pytest.raises(ValueError):
            CayleyTree([1, 2, 3], [(1, 2)])
        with pytest.raises(ValueError):
            CayleyTree([1, 2, 3, 4], [(1, 2), (3, 4), (1, 2)])
        with pytest.raises(ValueError):
            CayleyTree([1, 2], [(1, 1)])

    def test_json_round_trip(self):
        for u in enumerate_cayley(4):
            again = CayleyTree.from_json_dict(u.to_json_dict())
            assert again == u


class TestCollapse:
    def test_single_vertex(self):
        t = increasing_from_cayley(CayleyTree([7], []))
        assert t.labels == (7,) and t.parent == {}

    def test_centered_path_flattens(self):
        u = CayleyTree([1, 2, 3], [(1, 2), (1, 3)])
        assert increasing_from_cayley(u).parent == {2: 1, 3: 1}

    def test_monotone_path_survives(self):
        u = CayleyTree([1, 2, 3], [(1, 2), (2, 3)])
        assert increasing_from_cayley(u).parent == {2: 1, 3: 2}

    def test_surjective_with_fibers_partitioning(self):
        for r in range(1, 6):
            fibers = {}
            for u in enumerate_cayley(r):
                fibers.setdefault(increasing_from_cayley(u), []).append(u)
            assert set(fibers) == set(enumerate_increasing(range(1, r + 1)))
            assert sum(len(v) for v in fibers.values()) == cayley_count(r)


class TestBinary:
    def test_counts_match_enumeration(self):
        expected = [1, 1, 2, 5, 14, 42, 132]
        for n, want in enumerate(expected):
            shapes = list(enumerate_binary(n))
            assert len(set(shapes)) == len(shapes) == binary_count(n) == want

    def test_empty_shape(self):
        assert list(enumerate_binary(0)) == [None]
        assert binary_to_json_dict(None) is None
        assert binary_from_json_dict(None) is None

    def test_order_by_left_size(self):
        sizes = [t.left.size if t.left else 0 for t in enumerate_binary(3)]
        assert sizes == sorted(sizes)

    def test_subtree_sizes(self):
        t = BinaryTree(BinaryTree(), BinaryTree(None, BinaryTree()))
        assert t.size == 4
        assert sorted(subtree_sizes(t)) == [1, 1, 2, 4]

    def test_json_round_trip(self):
        for t in enumerate_binary(4):
            assert binary_from_json_dict(binary_to_json_dict(t)) == t

    def test_dot_golden(self):
        t = BinaryTree(BinaryTree(), None)
        assert binary_to_dot(t) == (
            'digraph binary_tree {\n  n0;\n  n1;\n  n0 -> n1 [label="L"];\n}'
        )
        assert binary_to_dot(None) == "digraph binary_tree {\n}"

    def test_rejects_non_tree_children(self):
        with pytest.raises(TypeError):
            BinaryTree("leaf", None)
