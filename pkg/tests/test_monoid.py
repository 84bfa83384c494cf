import random

import pytest

from lpa_invariants.graphs import Graph, cayley_graph, rose_graph
from lpa_invariants.monoid import (
    NOT_CLOSED,
    MonoidPresentation,
    crosscheck_cokernel,
    default_bound,
    mstar_group,
    presentation,
    saturate,
)

C3 = cayley_graph(3)


def is_single_rewrite(p, x, y):
    """True when y arises from x by one relation applied in either direction."""
    for i, rhs in p.relations:
        delta = tuple(r - (1 if j == i else 0) for j, r in enumerate(rhs))
        if tuple(b - a for a, b in zip(x, y)) == delta:
            return True
        if tuple(a - b for a, b in zip(x, y)) == delta:
            return True
    return False


class TestPresentation:
    def test_c3(self):
        p = presentation(C3)
        assert p.generator_count == 3
        assert p.relations == (
            (0, (0, 1, 1)),
            (1, (1, 0, 1)),
            (2, (1, 1, 0)),
        )

    def test_c1(self):
        p = presentation(cayley_graph(1))
        assert p.relations == ((0, (2,)),)

    def test_sink_has_no_relation(self):
        p = presentation(Graph(("v1",), ()))
        assert p.generator_count == 1
        assert p.relations == ()

    def test_validation(self):
        with pytest.raises(ValueError):
            MonoidPresentation(2, ((5, (1, 1)),))
        with pytest.raises(ValueError):
            MonoidPresentation(2, ((0, (1,)),))
        with pytest.raises(ValueError):
            MonoidPresentation(2, ((0, (0, 0)),))

    def test_default_bound(self):
        assert default_bound(presentation(C3)) == 12  # max(8, 2*3*2)
        assert default_bound(presentation(cayley_graph(1))) == 8


class TestSaturate:
    def test_c3_bound_8_has_five_classes(self):
        c = saturate(presentation(C3), 8)
        assert c.class_count == 5
        assert c.stabilized
        named = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)]
        ids = [c.class_of(v) for v in named]
        assert len(set(ids)) == 5

    @pytest.mark.parametrize("bound", [6, 8, 10])
    def test_c3_count_stable_across_bounds(self, bound):
        c = saturate(presentation(C3), bound)
        assert c.class_count == 5
        assert c.stabilized

    def test_c1_collapses(self):
        c = saturate(presentation(cayley_graph(1)), 6)
        assert c.class_count == 2
        assert c.members(1) == [(k,) for k in range(1, 7)]

    def test_rose2_collapses(self):
        c = saturate(presentation(rose_graph(2)), 5)
        assert c.class_count == 2

    def test_zero_vector_alone(self):
        for c in (
            saturate(presentation(C3), 8),
            saturate(presentation(cayley_graph(4)), 10),
        ):
            assert c.class_of((0,) * c.generator_count) == 0
            assert int(c.class_sizes[0]) == 1

    def test_bound_too_small(self):
        with pytest.raises(ValueError):
            saturate(presentation(C3), 1)

    def test_box_partition_shape(self):
        c = saturate(presentation(C3), 6)
        assert len(c.vectors) == len(c.labels)
        assert len(c.vectors) == 84  # C(9, 3) vectors of sum <= 6 in N^3
        reps = c.representatives()
        assert list(reps) == sorted(reps)  # class ids follow lexicographic reps
        assert int(c.class_sizes.sum()) == len(c.vectors)

    def test_class_of_outside_box_rejected(self):
        c = saturate(presentation(C3), 6)
        with pytest.raises(ValueError):
            c.class_of((7, 0, 0))
        with pytest.raises(ValueError):
            c.class_of((1, 1))


class TestRewriteChains:
    def test_paths_are_single_rewrites(self):
        p = presentation(C3)
        c = saturate(p, 8)
        rng = random.Random(11)
        for class_id in range(c.class_count):
            members = c.members(class_id)
            for _ in range(20):
                x, y = rng.choice(members), rng.choice(members)
                path = c.rewrite_path(x, y)
                if path is None:
                    # boundary vectors joined only through translation closure
                    continue
                assert path[0] == x and path[-1] == y
                for a, b in zip(path, path[1:]):
                    assert is_single_rewrite(p, a, b)

    def test_named_class_members_connect(self):
        p = presentation(C3)
        c = saturate(p, 8)
        # the monoid identities 2v1 ~ 2v2 ~ v1+v2+v3 hold via in-box chains
        for x, y in [((2, 0, 0), (0, 2, 0)), ((2, 0, 0), (1, 1, 1))]:
            assert c.class_of(x) == c.class_of(y)
            path = c.rewrite_path(x, y)
            assert path is not None
            for a, b in zip(path, path[1:]):
                assert is_single_rewrite(p, a, b)

    def test_translation_congruence_spot_check(self):
        c = saturate(presentation(C3), 8)
        rng = random.Random(23)
        vectors = [tuple(int(x) for x in row) for row in c.vectors]
        checked = 0
        while checked < 100:
            x = rng.choice(vectors)
            members = c.members(c.class_of(x))
            y = rng.choice(members)
            w = rng.choice(vectors)
            xt = tuple(a + b for a, b in zip(x, w))
            yt = tuple(a + b for a, b in zip(y, w))
            if sum(xt) > c.bound or sum(yt) > c.bound:
                continue
            assert c.class_of(xt) == c.class_of(yt)
            checked += 1


class TestMstarGroup:
    def test_c3_klein_four(self):
        c = saturate(presentation(C3), 8)
        table = mstar_group(c)
        assert not isinstance(table, str)
        assert table.order == 4
        assert table.invariant_factors() == (2, 2)
        assert table.identity_class == c.class_of((1, 1, 1))
        for cid in table.element_class_ids:
            assert table.order_of(cid) in (1, 2)
        # inverses in an exponent-2 group are the elements themselves
        assert table.inverses == table.element_class_ids

    def test_c1_trivial_group(self):
        c = saturate(presentation(cayley_graph(1)), 6)
        table = mstar_group(c)
        assert not isinstance(table, str)
        assert table.order == 1
        assert table.invariant_factors() == ()

    @pytest.mark.parametrize("bound", [8, 10, 12])
    def test_c6_not_closed(self, bound):
        c = saturate(presentation(cayley_graph(6)), bound)
        assert mstar_group(c) is NOT_CLOSED

    def test_c2_z3(self):
        c = saturate(presentation(cayley_graph(2)), 9)
        table = mstar_group(c)
        assert not isinstance(table, str)
        assert table.invariant_factors() == (3,)

    def test_identity_is_vertex_sum(self):
        for n in (1, 2, 3, 4, 5, 7):
            c = saturate(presentation(cayley_graph(n)), 12)
            table = mstar_group(c)
            assert not isinstance(table, str)
            assert table.identity_class == c.class_of((1,) * n)


class TestCrosscheck:
    @pytest.mark.parametrize("n, bound", [(3, 8), (4, 10), (1, 12), (2, 12), (5, 12)])
    def test_match(self, n, bound):
        assert crosscheck_cokernel(cayley_graph(n), bound) == "MATCH"

    def test_c6_inconclusive(self):
        assert crosscheck_cokernel(cayley_graph(6), 10) == "INCONCLUSIVE"


def naive_partition(p, bound):
    """Reference saturation: dict union-find straight from the definition."""
    import itertools

    vectors = [
        v
        for v in itertools.product(range(bound + 1), repeat=p.generator_count)
        if sum(v) <= bound
    ]
    parent = {v: v for v in vectors}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            return True
        return False

    for v in vectors:
        for i, rhs in p.relations:
            if v[i] >= 1:
                target = tuple(
                    x - (1 if j == i else 0) + rhs[j] for j, x in enumerate(v)
                )
                if sum(target) <= bound:
                    union(v, target)
            if all(x >= r for x, r in zip(v, rhs)):
                target = tuple(
                    x - rhs[j] + (1 if j == i else 0) for j, x in enumerate(v)
                )
                union(v, target)
    changed = True
    while changed:
        changed = False
        groups = {}
        for v in vectors:
            groups.setdefault(find(v), []).append(v)
        for members in groups.values():
            for k in range(p.generator_count):
                translates = [
                    tuple(x + (1 if j == k else 0) for j, x in enumerate(v))
                    for v in members
                    if sum(v) + 1 <= bound
                ]
                for a, b in zip(translates, translates[1:]):
                    if union(a, b):
                        changed = True
    groups = {}
    for v in vectors:
        groups.setdefault(find(v), set()).add(v)
    return {frozenset(g) for g in groups.values()}


class TestAgainstNaiveReference:
    @pytest.mark.parametrize(
        "g, bound",
        [
            (cayley_graph(1), 6),
            (cayley_graph(2), 7),
            (cayley_graph(3), 8),
            (cayley_graph(4), 7),
            (cayley_graph(6), 6),
            (rose_graph(3), 7),
            (Graph(("v1", "v2"), ()), 5),
        ],
        ids=["C1", "C2", "C3", "C4", "C6", "R3", "sinks"],
    )
    def test_partitions_agree(self, g, bound):
        p = presentation(g)
        c = saturate(p, bound)
        fast = {
            frozenset(c.members(class_id)) for class_id in range(c.class_count)
        }
        assert fast == naive_partition(p, bound)
