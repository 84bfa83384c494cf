"""Brute-force oracle for the graph monoid of a finite directed graph.

The monoid is the free commutative monoid on the vertices modulo the
relations v_i ~ sum_j a_ij v_j at non-sink vertices.  Equality is only
decided inside a box: all vectors of N^n with coordinate sum <= bound
are partitioned by the congruence generated by single-relation rewrites
(both directions) plus translation closure, computed as connected
components of the rewrite graph.  Conclusions therefore carry the bound,
and a stabilisation flag (nonzero class counts unchanged over the last
two bound increments) gates everything downstream.

The nonzero classes are additionally assembled into an explicit finite
group table when every required sum stays inside the box, which is then
compared against the Smith-normal-form cokernel computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal, Union

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from .graphs import Graph, adjacency_matrix
from .ktheory import cokernel_pointed, element_order

__all__ = [
    "NOT_CLOSED",
    "MonoidPresentation",
    "CongruenceClasses",
    "FiniteGroupTable",
    "presentation",
    "default_bound",
    "saturate",
    "mstar_group",
    "crosscheck_cokernel",
]

NOT_CLOSED: str = "NOT_CLOSED"

CrosscheckVerdict = Literal["MATCH", "MISMATCH", "INCONCLUSIVE"]

# Hard cap on the number of box vectors a single saturation may enumerate.
_MAX_BOX_VECTORS = 20_000_000


@dataclass(frozen=True)
class MonoidPresentation:
    """One relation (i, rhs) per non-sink vertex: v_i ~ sum rhs[j] v_j."""

    generator_count: int
    relations: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self) -> None:
        n = self.generator_count
        rels = []
        for i, rhs in self.relations:
            i = int(i)
            rhs = tuple(int(x) for x in rhs)
            if not 0 <= i < n:
                raise ValueError(f"relation generator index {i} out of range")
            if len(rhs) != n:
                raise ValueError("relation right-hand side has the wrong length")
            if any(x < 0 for x in rhs):
                raise ValueError("relation coefficients must be nonnegative")
            if sum(rhs) == 0:
                # non-sinks always contribute at least one edge, and empty
                # right sides would let rewrites shrink coordinate sums
                raise ValueError("relation right-hand side must be nonempty")
            rels.append((i, rhs))
        object.__setattr__(self, "relations", tuple(rels))


def presentation(g: Graph) -> MonoidPresentation:
    """Read the defining relations off the adjacency rows of non-sinks."""
    adj = adjacency_matrix(g).entries
    relations = tuple(
        (i, adj[i]) for i, deg in enumerate(g.out_degrees) if deg > 0
    )
    return MonoidPresentation(generator_count=g.n_vertices, relations=relations)


def default_bound(p: MonoidPresentation) -> int:
    """max(8, 2 * n * largest relation sum); generous at desk scale."""
    max_sum = max((sum(rhs) for _, rhs in p.relations), default=1)
    return max(8, 2 * p.generator_count * max_sum)


# ---------------------------------------------------------------------------
# Box enumeration and ranking.
#
# Vectors of N^n with sum <= b are listed in lexicographic order (first
# coordinate most significant).  With N(k, r) = C(r + k, k) counting the
# k-coordinate vectors of sum <= r, the rank of w is
#     sum_i  N(n - i, b_i) - N(n - i, b_i - w_i),
# where b_i is the budget left before coordinate i.
# ---------------------------------------------------------------------------


def _simplex_table(n: int, bound: int) -> np.ndarray:
    """table[k, r] = C(r + k, k), built by cumulative sums.

    Callers guard the box size first, so int32 never overflows.
    """
    table = np.ones((n + 1, bound + 1), dtype=np.int32)
    for k in range(1, n + 1):
        table[k] = np.cumsum(table[k - 1])
    return table


def _box_vectors(n: int, bound: int) -> np.ndarray:
    cache: dict[tuple[int, int], np.ndarray] = {}

    def build(k: int, r: int) -> np.ndarray:
        if k == 0:
            return np.zeros((1, 0), dtype=np.int16)
        key = (k, r)
        got = cache.get(key)
        if got is not None:
            return got
        blocks = []
        for c in range(r + 1):
            sub = build(k - 1, r - c)
            block = np.empty((sub.shape[0], k), dtype=np.int16)
            block[:, 0] = c
            block[:, 1:] = sub
            blocks.append(block)
        out = np.concatenate(blocks, axis=0)
        cache[key] = out
        return out

    return build(n, bound)


def _rank_vectors(w: np.ndarray, bound: int, table: np.ndarray) -> np.ndarray:
    m, n = w.shape
    if n == 0:
        return np.zeros(m, dtype=np.int32)
    inclusive = w.cumsum(axis=1, dtype=np.int32)
    before = inclusive - w
    budgets = bound - before
    ks = np.arange(n, 0, -1)
    high = table[ks[None, :], budgets]
    low = table[ks[None, :], budgets - w]
    return (high - low).sum(axis=1, dtype=np.int32)


def _components(total: int, src: np.ndarray, dst: np.ndarray):
    if src.size == 0:
        return np.arange(total, dtype=np.int64), total
    graph = coo_matrix(
        (np.ones(src.size, dtype=np.int8), (src, dst)), shape=(total, total)
    )
    ncomp, labels = connected_components(graph, directed=False)
    return labels.astype(np.int64, copy=False), int(ncomp)


@dataclass
class _BoxSaturation:
    vectors: np.ndarray
    labels: np.ndarray
    class_count: int
    first_member: np.ndarray
    table: np.ndarray
    elem_src: np.ndarray
    elem_dst: np.ndarray
    translation_joins: int
    sub_counts: tuple[int | None, int | None]  # nonzero classes at bound-2, bound-1


def _elementary_edges(p, bound, vectors, sums, table):
    """Rank pairs (w, w - e_i + rhs_i) for every in-box rewrite.

    Also returns, per edge, the larger endpoint sum, so the edge set of
    any smaller bound b is just the edges with endpoint sums <= b.
    """
    srcs, dsts, esums = [], [], []
    for gi, rhs in p.relations:
        rhs_arr = np.asarray(rhs, dtype=np.int16)
        shift = int(rhs_arr.sum()) - 1  # >= 0: relations rewrite upward in sum
        ok = (vectors[:, gi] >= 1) & (sums + shift <= bound)
        idx = np.flatnonzero(ok)
        if idx.size == 0:
            continue
        targets = vectors[idx].copy()
        targets[:, gi] -= 1
        targets += rhs_arr
        srcs.append(idx.astype(np.int32))
        dsts.append(_rank_vectors(targets, bound, table))
        esums.append(sums[idx] + shift)
    if not srcs:
        empty = np.zeros(0, dtype=np.int32)
        return empty, empty, empty
    return np.concatenate(srcs), np.concatenate(dsts), np.concatenate(esums)


def _close_under_translation(labels, sub, subpos, images, total, seeds):
    """Join (x + e_k, y + e_k) for x ~ y until no violations remain.

    Closure under adding one generator at a time implies closure under
    adding any vector, since partial translates stay inside the box.
    `images[k][i]` is the rank of sub[i] + e_k; `subpos` selects the part
    of `sub` whose translates stay within the effective bound.
    """
    sub_b = sub[subpos]
    extra_src = list(seeds[0])
    extra_dst = list(seeds[1])
    joins = 0
    while sub_b.size >= 2:
        lab = labels[sub_b]
        order = np.argsort(lab, kind="stable")
        lab_sorted = lab[order]
        adjacent = lab_sorted[1:] == lab_sorted[:-1]
        if not adjacent.any():
            break
        out_a, out_b = [], []
        for img in images:
            ranked = img[subpos][order]
            left = ranked[:-1][adjacent]
            right = ranked[1:][adjacent]
            bad = labels[left] != labels[right]
            if bad.any():
                out_a.append(left[bad])
                out_b.append(right[bad])
        if not out_a:
            break
        joins += int(sum(a.size for a in out_a))
        extra_src.extend(out_a)
        extra_dst.extend(out_b)
        labels, _ = _components(
            total, np.concatenate(extra_src), np.concatenate(extra_dst)
        )
    return labels, joins


def _saturate_box(p: MonoidPresentation, bound: int) -> _BoxSaturation:
    """Saturate the box at `bound`, also counting classes at the two
    smaller bounds (their edge sets are sum-filtered subsets)."""
    n = p.generator_count
    total = math.comb(n + bound, n)
    if total > _MAX_BOX_VECTORS:
        raise ValueError(
            f"saturation box has {total} vectors (limit {_MAX_BOX_VECTORS}); "
            "pass a smaller bound"
        )
    table = _simplex_table(n, bound)
    vectors = _box_vectors(n, bound)
    sums = vectors.sum(axis=1, dtype=np.int32)

    elem_src, elem_dst, elem_esum = _elementary_edges(p, bound, vectors, sums, table)

    sub = np.flatnonzero(sums <= bound - 1).astype(np.int32)
    sub_sums = sums[sub]
    images = []
    for k in range(n):
        shifted = vectors[sub].copy()
        shifted[:, k] += 1
        images.append(_rank_vectors(shifted, bound, table))

    labels = None
    joins = 0
    counts: dict[int, int | None] = {bound - 2: None, bound - 1: None}
    for b in (bound - 2, bound - 1, bound):
        if b < 0:
            continue
        keep = elem_esum <= b
        e_src, e_dst = elem_src[keep], elem_dst[keep]
        lab, _ = _components(total, e_src, e_dst)
        subpos = np.flatnonzero(sub_sums <= b - 1)
        lab, b_joins = _close_under_translation(
            lab, sub, subpos, images, total, ([e_src], [e_dst])
        )
        if b == bound:
            labels = lab
            joins = b_joins
        else:
            counts[b] = int(np.unique(lab[sums <= b]).size) - 1
    assert labels is not None
    ncomp = int(np.unique(labels).size)

    # Canonical class ids: order classes by their lexicographically least
    # member, so the zero vector always lands in class 0.
    uniq, first = np.unique(labels, return_index=True)
    order = np.argsort(first, kind="stable")
    relabel = np.empty(uniq.max() + 1, dtype=np.int64)
    relabel[uniq[order]] = np.arange(ncomp)
    labels = relabel[labels]
    first_member = first[order]

    for arr in (vectors, labels, first_member):
        arr.setflags(write=False)
    return _BoxSaturation(
        vectors=vectors,
        labels=labels,
        class_count=ncomp,
        first_member=first_member,
        table=table,
        elem_src=elem_src,
        elem_dst=elem_dst,
        translation_joins=joins,
        sub_counts=(counts[bound - 2], counts[bound - 1]),
    )


@dataclass(frozen=True, eq=False)
class CongruenceClasses:
    """Partition of the box {w in N^n : sum w <= bound} by the congruence.

    `labels[r]` is the class id of the r-th box vector in lexicographic
    order (`vectors[r]`); class 0 is always the singleton {zero vector}.
    `stabilized` records whether the nonzero class count was unchanged at
    bounds bound-2, bound-1 and bound.
    """

    generator_count: int
    bound: int
    stabilized: bool
    class_count: int
    nonzero_class_count: int
    translation_joins: int
    vectors: np.ndarray
    labels: np.ndarray
    class_sizes: np.ndarray
    _first_member: np.ndarray
    _table: np.ndarray
    _elem_src: np.ndarray
    _elem_dst: np.ndarray

    def rank_of(self, vec) -> int:
        vec = tuple(int(x) for x in vec)
        if len(vec) != self.generator_count:
            raise ValueError("vector has the wrong number of coordinates")
        if any(x < 0 for x in vec) or sum(vec) > self.bound:
            raise ValueError(f"vector {vec} lies outside the explored box")
        w = np.asarray([vec], dtype=np.int64)
        return int(_rank_vectors(w, self.bound, self._table)[0])

    def class_of(self, vec) -> int:
        return int(self.labels[self.rank_of(vec)])

    def representative(self, class_id: int) -> tuple[int, ...]:
        """Lexicographically least member of the class."""
        return tuple(int(x) for x in self.vectors[self._first_member[class_id]])

    def representatives(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.representative(c) for c in range(self.class_count))

    def members(self, class_id: int, limit: int | None = None) -> list[tuple[int, ...]]:
        idx = np.flatnonzero(self.labels == class_id)
        if limit is not None:
            idx = idx[:limit]
        return [tuple(int(x) for x in self.vectors[i]) for i in idx]

    def rewrite_path(self, x, y) -> list[tuple[int, ...]] | None:
        """Chain of single-relation rewrites x -> ... -> y inside the box.

        Returns None when the two vectors are not connected by elementary
        rewrites (translation-closure joins carry no in-box chain).
        """
        i, j = self.rank_of(x), self.rank_of(y)
        if i == j:
            return [tuple(int(v) for v in self.vectors[i])]
        total = len(self.labels)
        if self._elem_src.size == 0:
            return None
        graph = coo_matrix(
            (
                np.ones(self._elem_src.size, dtype=np.int8),
                (self._elem_src, self._elem_dst),
            ),
            shape=(total, total),
        ).tocsr()
        _, preds = breadth_first_order(
            graph, i_start=i, directed=False, return_predecessors=True
        )
        if preds[j] < 0:
            return None
        path = [j]
        while path[-1] != i:
            path.append(int(preds[path[-1]]))
        path.reverse()
        return [tuple(int(v) for v in self.vectors[r]) for r in path]


def saturate(p: MonoidPresentation, bound: int) -> CongruenceClasses:
    """Partition the box of coordinate-sum <= bound by the congruence.

    Every vector is rewritten through every relation in both directions
    (endpoints staying in the box), the resulting pairs are closed into
    equivalence classes, and the partition is then closed under
    translation.  The stabilisation flag compares nonzero class counts
    at bound-2, bound-1 and bound.
    """
    bound = int(bound)
    needed = max([1] + [sum(rhs) for _, rhs in p.relations])
    if bound < needed:
        raise ValueError(
            f"bound {bound} too small to express any relation (need >= {needed})"
        )
    final = _saturate_box(p, bound)
    count_m2, count_m1 = final.sub_counts
    stabilized = (
        count_m2 is not None and count_m2 == count_m1 == final.class_count - 1
    )
    sizes = np.bincount(final.labels, minlength=final.class_count)
    sizes.setflags(write=False)
    return CongruenceClasses(
        generator_count=p.generator_count,
        bound=bound,
        stabilized=stabilized,
        class_count=final.class_count,
        nonzero_class_count=final.class_count - 1,
        translation_joins=final.translation_joins,
        vectors=final.vectors,
        labels=final.labels,
        class_sizes=sizes,
        _first_member=final.first_member,
        _table=final.table,
        _elem_src=final.elem_src,
        _elem_dst=final.elem_dst,
    )


# ---------------------------------------------------------------------------
# Group structure of the nonzero classes.
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FiniteGroupTable:
    """Addition table of the nonzero classes, verified to be a group.

    Entries are class ids; associativity comes for free from vector
    addition, while closure, identity and inverses are checked when the
    table is built.
    """

    element_class_ids: tuple[int, ...]
    table: tuple[tuple[int, ...], ...]
    identity_class: int
    inverses: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.element_class_ids)

    def order_of(self, class_id: int) -> int:
        idx = self.element_class_ids.index(class_id)
        acc = class_id
        k = 1
        while acc != self.identity_class:
            acc = self.table[self.element_class_ids.index(acc)][idx]
            k += 1
            if k > self.order + 1:
                raise RuntimeError("addition table is not a group")
        return k

    def invariant_factors(self) -> tuple[int, ...]:
        """Invariant factors recovered from the element-order profile.

        For each prime p, the count of elements killed by p^j determines
        the p-part partition; the partitions are then interleaved into a
        divisibility chain.  Order profiles determine finite abelian
        groups up to isomorphism, so this is exact.
        """
        orders = [self.order_of(c) for c in self.element_class_ids]
        size = self.order
        partitions: dict[int, list[int]] = {}
        for p in _prime_factors(size):
            s_prev = 0
            mults: list[int] = []
            j = 1
            while True:
                pj = p**j
                count = sum(1 for o in orders if pj % o == 0)
                s_j = round(math.log(count, p))
                if p**s_j != count:
                    raise RuntimeError("order profile is not that of an abelian group")
                if s_j == s_prev:
                    break
                mults.append(s_j - s_prev)
                s_prev = s_j
                j += 1
            lam = [
                max(j + 1 for j, m in enumerate(mults) if m > i)
                for i in range(mults[0])
            ]
            partitions[p] = lam  # descending by construction
        width = max((len(lam) for lam in partitions.values()), default=0)
        descending = []
        for i in range(width):
            d = 1
            for p, lam in partitions.items():
                if i < len(lam):
                    d *= p ** lam[i]
            descending.append(d)
        return tuple(reversed(descending))


def _prime_factors(n: int) -> list[int]:
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def mstar_group(
    c: CongruenceClasses,
) -> Union[FiniteGroupTable, str]:
    """Addition table of the nonzero classes, or NOT_CLOSED.

    NOT_CLOSED when the saturation has not stabilised, when some sum of
    class representatives leaves the box, or when the table fails a
    group axiom (no identity, or a missing inverse).
    """
    if not c.stabilized:
        return NOT_CLOSED
    ids = list(range(1, c.class_count))
    if not ids:
        return NOT_CLOSED
    reps = [c.representative(i) for i in ids]
    k = len(ids)
    table: list[list[int]] = []
    for i in range(k):
        row = []
        for j in range(k):
            total = tuple(a + b for a, b in zip(reps[i], reps[j]))
            if sum(total) > c.bound:
                return NOT_CLOSED
            row.append(c.class_of(total))
        table.append(row)
    identity = next(
        (ids[e] for e in range(k) if table[e] == ids),
        None,
    )
    if identity is None:
        return NOT_CLOSED
    inverses = []
    for i in range(k):
        inv = next((ids[j] for j in range(k) if table[i][j] == identity), None)
        if inv is None:
            return NOT_CLOSED
        inverses.append(inv)
    return FiniteGroupTable(
        element_class_ids=tuple(ids),
        table=tuple(tuple(row) for row in table),
        identity_class=identity,
        inverses=tuple(inverses),
    )


def crosscheck_cokernel(g: Graph, bound: int) -> CrosscheckVerdict:
    """Compare the box-monoid group against the Smith-normal-form cokernel.

    MATCH requires equal invariant factors and, vertex by vertex, equal
    orders of the vertex class on both sides; INCONCLUSIVE whenever the
    monoid side could not produce a stable finite group.
    """
    classes = saturate(presentation(g), bound)
    if not classes.stabilized:
        return "INCONCLUSIVE"
    group = mstar_group(classes)
    if isinstance(group, str):
        return "INCONCLUSIVE"
    k0 = cokernel_pointed(g)
    if group.invariant_factors() != k0.group.factors:
        return "MISMATCH"
    n = g.n_vertices
    for i in range(n):
        unit = tuple(1 if j == i else 0 for j in range(n))
        monoid_order = group.order_of(classes.class_of(unit))
        cokernel_order = element_order(k0.group, k0.vertex_images[i])
        if monoid_order != cokernel_order:
            return "MISMATCH"
    return "MATCH"
