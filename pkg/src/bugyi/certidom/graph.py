"""Immutable simple graphs and the neighbourhood algebra built on them."""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
import logging
from typing import Iterable, List, Sequence, Tuple

from . import bits
from .errors import GraphError, PreconditionError
from .types import Edge
from .vertexset import VertexSet


logger = logging.getLogger(__name__)

# Every neighbourhood row must fit in one 64-bit machine word.
MAX_ORDER = 64


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on the vertices 0, ..., n-1.

    adj[v] is the open neighbourhood of v written as a bitmask. Instances
    are hashable, which lets the solvers memoize on them.

    Examples:
        >>> G = from_edge_list(3, [(0, 1), (1, 2)])
        >>> G.edges()
        [(0, 1), (1, 2)]
        >>> G.degree(1)
        2
    """

    n: int
    adj: Tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(
                f"Graph order must lie in 1..{MAX_ORDER}, not {self.n}"
            )
        if len(self.adj) != self.n:
            raise GraphError(
                f"Expected {self.n} adjacency rows, got {len(self.adj)}"
            )

        full = bits.full_mask(self.n)
        for v, row in enumerate(self.adj):
            if row < 0 or row & ~full:
                raise GraphError(
                    f"Vertex {v} has neighbours outside the graph"
                )
            if row >> v & 1:
                raise GraphError(f"Vertex {v} has a loop")
            for u in bits.iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(
                        f"Adjacency is not symmetric: {v} -> {u} but not"
                        f" {u} -> {v}"
                    )

    @cached_property
    def closed(self) -> Tuple[int, ...]:
        """closed[v] is the closed neighbourhood of v as a bitmask."""
        return bits.closed_rows(self.adj)

    @property
    def full(self) -> int:
        return bits.full_mask(self.n)

    @property
    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def edges(self) -> List[Edge]:
        return [
            (v, u)
            for v in range(self.n)
            for u in bits.iter_bits(self.adj[v])
            if v < u
        ]

    @property
    def size(self) -> int:
        return sum(bits.popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return bits.popcount(self.adj[v])

    def neighbors(self, v: int) -> VertexSet:
        self.check_vertex(v)
        return VertexSet(self.n, self.adj[v])

    def check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"Vertex {v} is outside 0..{self.n - 1}")

    def check_set(self, X: VertexSet) -> None:
        if X.n != self.n:
            raise GraphError(
                f"Vertex set over {X.n} vertices used with a graph of order"
                f" {self.n}"
            )

    def __str__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True)
class LeafSupportReport:
    """Leaves, supports, and the weak/strong split of the supports."""

    leaves: VertexSet
    supports: VertexSet
    weak_supports: VertexSet
    strong_supports: VertexSet


def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    """Builds a graph from unordered vertex pairs (duplicates collapse)."""
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"Graph order must lie in 1..{MAX_ORDER}, not {n}")

    adj = [0] * n
    for u, v in edges:
        for w in (u, v):
            if not 0 <= w < n:
                raise GraphError(
                    f"Edge ({u}, {v}) has an endpoint outside 0..{n - 1}"
                )
        if u == v:
            raise GraphError(f"Loop edge ({u}, {v}) is not allowed")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return from_edge_list(n, [])


def open_neighborhood(G: Graph, v: int) -> VertexSet:
    return G.neighbors(v)


def closed_neighborhood(G: Graph, v: int) -> VertexSet:
    """
    Examples:
        >>> closed_neighborhood(from_edge_list(4, [(0, 1), (1, 2), (2, 3)]), 0)
        VertexSet(n=4, {0,1})
    """
    G.check_vertex(v)
    return VertexSet(G.n, G.closed[v])


def open_neighborhood_of_set(G: Graph, X: VertexSet) -> VertexSet:
    G.check_set(X)
    mask = 0
    for v in X:
        mask |= G.adj[v]
    return VertexSet(G.n, mask)


def closed_neighborhood_of_set(G: Graph, X: VertexSet) -> VertexSet:
    G.check_set(X)
    return VertexSet(G.n, bits.dominated_by(G.closed, X.mask))


def degree(G: Graph, v: int) -> int:
    return G.degree(v)


def min_degree(G: Graph) -> int:
    return min(bits.popcount(row) for row in G.adj)


def leaf_support_report(G: Graph) -> LeafSupportReport:
    leaves = 0
    for v, row in enumerate(G.adj):
        if bits.popcount(row) == 1:
            leaves |= 1 << v

    supports = weak = strong = 0
    for v, row in enumerate(G.adj):
        leaf_count = bits.popcount(row & leaves)
        if leaf_count == 0:
            continue
        supports |= 1 << v
        if leaf_count == 1:
            weak |= 1 << v
        else:
            strong |= 1 << v

    return LeafSupportReport(
        leaves=VertexSet(G.n, leaves),
        supports=VertexSet(G.n, supports),
        weak_supports=VertexSet(G.n, weak),
        strong_supports=VertexSet(G.n, strong),
    )


def private_neighborhood(
    G: Graph, v: int, X: VertexSet, closed: bool = True
) -> VertexSet:
    """Returns N[v] - N[X - {v}] (or N(v) - N[X - {v}] if not @closed).

    Examples:
        >>> P4 = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
        >>> private_neighborhood(P4, 1, VertexSet.of(4, [1, 2]))
        VertexSet(n=4, {0})
    """
    G.check_set(X)
    if v not in X:
        raise PreconditionError(f"Vertex {v} is not a member of {X}")

    others = bits.dominated_by(G.closed, X.mask & ~(1 << v))
    own = G.closed[v] if closed else G.adj[v]
    return VertexSet(G.n, own & ~others)


def is_independent(G: Graph, X: VertexSet) -> bool:
    G.check_set(X)
    return all(not G.adj[v] & X.mask for v in X)


def _reach(G: Graph, start: int, within: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        grown = bits.dominated_by(G.adj, frontier) & within & ~seen
        seen |= grown
        frontier = grown
    return seen


def is_connected(G: Graph) -> bool:
    return _reach(G, 0, G.full) == G.full


def induced_subgraph(G: Graph, X: VertexSet) -> Graph:
    """Returns G[X] with its vertices renumbered in ascending order."""
    G.check_set(X)
    if not X:
        raise GraphError("Cannot induce a subgraph on the empty set")

    members = X.to_list()
    position = {v: i for i, v in enumerate(members)}
    adj = []
    for v in members:
        row = 0
        for u in bits.iter_bits(G.adj[v] & X.mask):
            row |= 1 << position[u]
        adj.append(row)
    return Graph(len(members), tuple(adj))


def delete_vertex(G: Graph, v: int) -> Graph:
    """Returns G - v; vertices above v shift down by one."""
    G.check_vertex(v)
    if G.n == 1:
        raise PreconditionError("Cannot delete the only vertex of K1")
    return induced_subgraph(G, VertexSet.full(G.n).discard(v))


def components(G: Graph) -> List[Tuple[VertexSet, Graph]]:
    """Splits G into connected components, ordered by smallest vertex.

    The i-th vertex of each component graph is the i-th smallest member of
    its VertexSet.
    """
    result = []
    remaining = G.full
    while remaining:
        start = (remaining & -remaining).bit_length() - 1
        mask = _reach(G, start, remaining)
        remaining &= ~mask
        X = VertexSet(G.n, mask)
        result.append((X, induced_subgraph(G, X)))
    return result


def relabel(G: Graph, permutation: Sequence[int]) -> Graph:
    """Returns the graph in which vertex v of G is renamed permutation[v]."""
    if sorted(permutation) != list(range(G.n)):
        raise GraphError(
            f"{list(permutation)} is not a permutation of 0..{G.n - 1}"
        )
    return from_edge_list(
        G.n, ((permutation[u], permutation[v]) for u, v in G.edges())
    )


def _induces_p4(G: Graph, quad: Tuple[int, ...]) -> bool:
    mask = bits.mask_of(quad)
    degrees = sorted(bits.popcount(G.adj[v] & mask) for v in quad)
    return degrees == [1, 1, 2, 2]


def is_p4_free(G: Graph) -> bool:
    """True iff no four vertices induce a path.

    Among 4-vertex graphs only P4 has degree sequence (1, 1, 2, 2).
    """
    return not any(
        _induces_p4(G, quad) for quad in combinations(range(G.n), 4)
    )


def max_independent_set_size(G: Graph) -> int:
    """
    Examples:
        >>> C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
        >>> max_independent_set_size(C5)
        2
    """
    return bits.max_independent_size(G.adj, G.n)


def is_complete_k2(G: Graph) -> bool:
    return G.n == 2 and G.size == 1
