"""Finite directed multigraphs and the graph families used throughout.

Provides the cyclic-group Cayley graphs (each vertex sends one edge to
each of its two neighbours), roses (one vertex, n loops) and stemmed
roses (a stem vertex feeding a rose), along with adjacency matrices, a
strict JSON (de)serialisation, and the graph-theoretic conditions under
which the associated Leavitt path algebra is purely infinite simple.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, NamedTuple

from .intlinalg import IntMatrix

__all__ = [
    "Edge",
    "Graph",
    "PISReport",
    "cayley_graph",
    "rose_graph",
    "stemmed_rose_graph",
    "adjacency_matrix",
    "pis_report",
    "graph_to_dict",
    "graph_from_dict",
]


class Edge(NamedTuple):
    id: str
    source: int
    range: int


@dataclass(frozen=True)
class Graph:
    """Immutable directed multigraph with named vertices.

    Vertex order is significant: it fixes the row/column order of every
    matrix derived from the graph.  Parallel edges and loops are allowed.
    """

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        edges = tuple(Edge(*e) for e in self.edges)
        if not all(isinstance(v, str) for v in vertices):
            raise ValueError("vertex identifiers must be strings")
        if len(set(vertices)) != len(vertices):
            raise ValueError("vertex identifiers must be pairwise distinct")
        ids = [e.id for e in edges]
        if not all(isinstance(i, str) for i in ids):
            raise ValueError("edge ids must be strings")
        if len(set(ids)) != len(ids):
            raise ValueError("edge ids must be pairwise distinct")
        n = len(vertices)
        for e in edges:
            if not (0 <= e.source < n and 0 <= e.range < n):
                raise ValueError(f"edge {e.id!r} references an invalid vertex index")
        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "edges", edges)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.vertices)}

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        """Successor vertex indices per vertex, one entry per edge."""
        out: list[list[int]] = [[] for _ in self.vertices]
        for e in self.edges:
            out[e.source].append(e.range)
        return tuple(tuple(s) for s in out)

    @cached_property
    def out_degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.successors)

    @cached_property
    def in_degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n_vertices
        for e in self.edges:
            deg[e.range] += 1
        return tuple(deg)


def cayley_graph(n: int) -> Graph:
    """Cayley graph of Z/nZ with respect to {1, n-1}.

    n vertices v1..vn and 2n edges: e_i runs from v_i to v_{i+1} and f_i
    from v_i to v_{i-1}, subscripts mod n (1-based, residue 0 means n).
    n=1 gives a single vertex with two loops, n=2 two vertices with two
    parallel edges in each direction.
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    vertices = tuple(f"v{i}" for i in range(1, n + 1))
    edges = [Edge(f"e{i}", i - 1, i % n) for i in range(1, n + 1)]
    edges += [Edge(f"f{i}", i - 1, (i - 2) % n) for i in range(1, n + 1)]
    return Graph(vertices, tuple(edges))


def rose_graph(n: int) -> Graph:
    """Rose with n petals: one vertex and n loops."""
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    return Graph(("v1",), tuple(Edge(f"g{i}", 0, 0) for i in range(1, n + 1)))


def stemmed_rose_graph(n: int, d: int) -> Graph:
    """Two vertices, d-1 stem edges v1 -> v2, and n loops at v2."""
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    if d < 2:
        raise ValueError(f"d must be at least 2, got {d}")
    stem = tuple(Edge(f"h{i}", 0, 1) for i in range(1, d))
    loops = tuple(Edge(f"g{i}", 1, 1) for i in range(1, n + 1))
    return Graph(("v1", "v2"), stem + loops)


def adjacency_matrix(g: Graph) -> IntMatrix:
    """Entry (i, j) counts edges from vertex i to vertex j."""
    n = g.n_vertices
    a = [[0] * n for _ in range(n)]
    for e in g.edges:
        a[e.source][e.range] += 1
    return IntMatrix(tuple(tuple(row) for row in a))


# ---------------------------------------------------------------------------
# Purely infinite simplicity: sink-free + Condition (L) + cofinal + a cycle.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PISReport:
    """Outcome of the purely-infinite-simple test, with witnesses.

    Every False flag carries at least one verifiable witness: a sink
    vertex, a cycle without exit (vertex tuple), an unreachable pair
    (vertex, cycle vertex), or a topological order certifying acyclicity.
    """

    sink_free: bool
    condition_L: bool
    cofinal: bool
    has_cycle: bool
    purely_infinite_simple: bool
    witnesses: tuple[tuple[str, Any], ...]


def _strongly_connected_components(succ) -> list[list[int]]:
    """Iterative Tarjan; components in reverse topological order."""
    n = len(succ)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        frames: list[list[int]] = [[root, 0]]
        while frames:
            v = frames[-1][0]
            if frames[-1][1] == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            while frames[-1][1] < len(succ[v]):
                w = succ[v][frames[-1][1]]
                frames[-1][1] += 1
                if index[w] == -1:
                    frames.append([w, 0])
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            frames.pop()
            if frames:
                parent = frames[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def _cycle_vertices(g: Graph) -> set[int]:
    """Vertices lying on at least one directed cycle."""
    on_cycle: set[int] = set()
    for comp in _strongly_connected_components(g.successors):
        if len(comp) > 1:
            on_cycle.update(comp)
    for v, succ in enumerate(g.successors):
        if v in succ:
            on_cycle.add(v)
    return on_cycle


def _reach_masks(g: Graph) -> list[int]:
    """reach[u] has bit w set iff there is a directed path u -> w."""
    n = g.n_vertices
    succ = g.successors
    masks = []
    for start in range(n):
        seen = 1 << start
        frontier = [start]
        while frontier:
            nxt = []
            for v in frontier:
                for w in succ[v]:
                    bit = 1 << w
                    if not seen & bit:
                        seen |= bit
                        nxt.append(w)
            frontier = nxt
        masks.append(seen)
    return masks


def _cycle_without_exit(g: Graph) -> tuple[int, ...] | None:
    """A cycle all of whose vertices have out-degree exactly 1, if any.

    A cycle has no exit precisely when every vertex on it emits a single
    edge, so it suffices to chase the functional subgraph of out-degree-1
    vertices.
    """
    deg = g.out_degrees
    succ = g.successors
    colour = [0] * g.n_vertices  # 0 unvisited, 1 on current walk, 2 done
    for start in range(g.n_vertices):
        if deg[start] != 1 or colour[start]:
            continue
        path: list[int] = []
        pos: dict[int, int] = {}
        cur = start
        while True:
            if deg[cur] != 1 or colour[cur] == 2:
                break
            if colour[cur] == 1:
                return tuple(path[pos[cur] :])
            colour[cur] = 1
            pos[cur] = len(path)
            path.append(cur)
            cur = succ[cur][0]
        for v in path:
            colour[v] = 2
    return None


def _topological_order(g: Graph) -> list[int]:
    """Kahn order; callers use this only on acyclic graphs."""
    n = g.n_vertices
    indeg = list(g.in_degrees)
    ready = [v for v in range(n) if indeg[v] == 0]
    order: list[int] = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in g.successors[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return order


def pis_report(g: Graph) -> PISReport:
    """Decide the graph conditions for purely infinite simplicity.

    sink_free: every vertex emits an edge.  condition_L: every cycle has
    an exit.  cofinal: every vertex reaches every vertex that lies on a
    cycle.  has_cycle: some directed cycle exists.  The algebra test is
    the conjunction of all four.
    """
    names = g.vertices
    witnesses: list[tuple[str, Any]] = []

    sinks = [v for v, d in enumerate(g.out_degrees) if d == 0]
    sink_free = not sinks
    for v in sinks:
        witnesses.append(("sink_free", names[v]))

    bad_cycle = _cycle_without_exit(g)
    condition_L = bad_cycle is None
    if bad_cycle is not None:
        witnesses.append(("condition_L", tuple(names[v] for v in bad_cycle)))

    on_cycle = _cycle_vertices(g)
    has_cycle = bool(on_cycle)
    if not has_cycle:
        order = _topological_order(g)
        witnesses.append(("has_cycle", tuple(names[v] for v in order)))

    cofinal = True
    if on_cycle:
        reach = _reach_masks(g)
        targets = sorted(on_cycle)
        for u in range(g.n_vertices):
            missing = next((w for w in targets if not (reach[u] >> w) & 1), None)
            if missing is not None:
                cofinal = False
                witnesses.append(("cofinal", (names[u], names[missing])))
                break

    pis = sink_free and condition_L and cofinal and has_cycle
    return PISReport(
        sink_free=sink_free,
        condition_L=condition_L,
        cofinal=cofinal,
        has_cycle=has_cycle,
        purely_infinite_simple=pis,
        witnesses=tuple(witnesses),
    )


# ---------------------------------------------------------------------------
# JSON wire format: {"vertices": [...], "edges": [{"id", "source", "range"}]}
# Vertex references are by name; unknown fields are rejected.
# ---------------------------------------------------------------------------


def graph_to_dict(g: Graph) -> dict:
    return {
        "vertices": list(g.vertices),
        "edges": [
            {"id": e.id, "source": g.vertices[e.source], "range": g.vertices[e.range]}
            for e in g.edges
        ],
    }


def graph_from_dict(data) -> Graph:
    if not isinstance(data, dict):
        raise ValueError("graph JSON must be an object")
    unknown = set(data) - {"vertices", "edges"}
    if unknown:
        raise ValueError(f"unknown graph fields: {sorted(unknown)}")
    if "vertices" not in data or "edges" not in data:
        raise ValueError("graph JSON requires 'vertices' and 'edges'")
    vertices = data["vertices"]
    if not isinstance(vertices, list) or not all(isinstance(v, str) for v in vertices):
        raise ValueError("'vertices' must be a list of strings")
    index = {name: i for i, name in enumerate(vertices)}
    if len(index) != len(vertices):
        raise ValueError("vertex identifiers must be pairwise distinct")
    raw_edges = data["edges"]
    if not isinstance(raw_edges, list):
        raise ValueError("'edges' must be a list")
    edges = []
    for k, item in enumerate(raw_edges):
        if not isinstance(item, dict):
            raise ValueError(f"edge #{k} must be an object")
        unknown = set(item) - {"id", "source", "range"}
        if unknown:
            raise ValueError(f"edge #{k} has unknown fields: {sorted(unknown)}")
        try:
            eid, src, rng = item["id"], item["source"], item["range"]
        except KeyError as exc:
            raise ValueError(f"edge #{k} is missing field {exc}") from None
        if not all(isinstance(x, str) for x in (eid, src, rng)):
            raise ValueError(f"edge #{k} fields must be strings")
        if src not in index:
            raise ValueError(f"edge {eid!r} references unknown vertex {src!r}")
        if rng not in index:
            raise ValueError(f"edge {eid!r} references unknown vertex {rng!r}")
        edges.append(Edge(eid, index[src], index[rng]))
    return Graph(tuple(vertices), tuple(edges))
