#########################################################
#                                                       #
#   Matching Engine                                     #
#                                                       #
#   Maximum matchings (Edmonds' blossom algorithm),     #
#   k-matching enumeration, and perfect matchings that  #
#   contain one edge set and avoid another              #
#                                                       #
#########################################################

from collections import deque
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .Exceptions import InvalidArgument, ResourceLimitExceeded
from .Graph import Graph
from .Types import Edge, EdgeSet, Vertex, VertexSet, edge, edge_set, vertex_set

from ..config.settings import Settings


class Matching:
    """
    A set of pairwise vertex-disjoint edges of a host graph. Edges are kept canonical (u < v) and sorted, so two
    matchings of the same host compare equal exactly when they have the same edges.
    """

    def __init__(self, host: Graph, edges: Iterable[Sequence[int]] = ()):
        """
        @param host: The Graph the matching lives in
        @param edges: The edges, in any order or orientation
        @raise InvalidArgument if an edge is not in the host, or two edges share a vertex
        """
        self.host = host
        self.edges: EdgeSet = edge_set(edges)

        covered = set()
        for u, v in self.edges:
            if not host.has_edge(u, v):
                raise InvalidArgument(f"({u}, {v}) is not an edge of the host graph")
            if u in covered or v in covered:
                raise InvalidArgument(f"Edges share a vertex at ({u}, {v}); not a matching")
            covered.update((u, v))

    def vertices(self) -> VertexSet:
        """
        @return: V(M), the endpoints of the matching's edges
        """
        return vertex_set(v for e in self.edges for v in e)

    def is_perfect(self) -> bool:
        return 2 * len(self.edges) == self.host.n

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self) -> Iterator[Edge]:
        return iter(self.edges)

    def __contains__(self, item) -> bool:
        u, v = item
        return edge(u, v) in self.edges

    def __eq__(self, other) -> bool:
        if isinstance(other, Matching):
            return self.edges == other.edges
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.edges)

    def __repr__(self) -> str:
        return f"Matching({list(self.edges)})"

    def __str__(self) -> str:
        return "{" + ", ".join(f"{u}-{v}" for u, v in self.edges) + "}"


def is_matching(graph: Graph, edges: Iterable[Sequence[int]]) -> bool:
    """
    Whether the given pairs are edges of the graph and pairwise vertex-disjoint.
    """
    try:
        Matching(graph, edges)
        return True
    except InvalidArgument:
        return False


################################################################
#                    Edmonds' Blossom Algorithm                #
################################################################

def _maximum_mate(n: int, adjacency: Sequence[Iterable[int]]) -> List[int]:
    """
    Edmonds' blossom algorithm for maximum cardinality matching, O(V^3). Blossoms are not contracted explicitly;
    base[v] tracks the base of the outermost blossom containing v.
    @param n: The number of vertices
    @param adjacency: adjacency[v] lists the neighbours of v
    @return: mate, where mate[v] is the vertex matched to v, or -1 if v is exposed
    """
    adjacency = [sorted(a) for a in adjacency]
    mate = [-1] * n

    # Greedy start; cheaper than growing an alternating tree for each easy edge
    for v in range(n):
        if mate[v] == -1:
            for w in adjacency[v]:
                if mate[w] == -1:
                    mate[v], mate[w] = w, v
                    break

    parent = [-1] * n
    base = list(range(n))

    def lowest_common_base(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if mate[a] == -1:
                break
            a = parent[mate[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[mate[b]]

    def mark_path(v: int, b: int, child: int, blossom: List[bool]):
        while base[v] != b:
            blossom[base[v]] = blossom[base[mate[v]]] = True
            parent[v] = child
            child = mate[v]
            v = parent[mate[v]]

    def find_augmenting_path(root: int) -> int:
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used = [False] * n
        used[root] = True
        queue = deque([root])

        while queue:
            v = queue.popleft()
            for u in adjacency[v]:
                if base[v] == base[u] or mate[v] == u:
                    continue

                # u is an outer vertex: an odd cycle closes, shrink it
                if u == root or (mate[u] != -1 and parent[mate[u]] != -1):
                    current_base = lowest_common_base(v, u)
                    blossom = [False] * n
                    mark_path(v, current_base, u, blossom)
                    mark_path(u, current_base, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = current_base
                            if not used[i]:
                                used[i] = True
                                queue.append(i)

                elif parent[u] == -1:
                    parent[u] = v
                    if mate[u] == -1:
                        return u
                    used[mate[u]] = True
                    queue.append(mate[u])

        return -1

    for root in range(n):
        if mate[root] != -1:
            continue
        end = find_augmenting_path(root)
        while end != -1:
            previous = parent[end]
            following = mate[previous]
            mate[end], mate[previous] = previous, end
            end = following

    return mate


def _mate_edges(mate: Sequence[int]) -> List[Edge]:
    return [(v, w) for v, w in enumerate(mate) if w > v]


def max_matching(graph: Graph) -> Matching:
    """
    A maximum-cardinality matching of the graph.
    @param graph: The graph
    @return: A Matching of maximum size; deterministic for a given graph
    """
    return Matching(graph, _mate_edges(_maximum_mate(graph.n, graph.adjacency)))


def matching_number(graph: Graph) -> int:
    """
    ν(G), the size of a maximum matching.
    """
    return sum(1 for w in _maximum_mate(graph.n, graph.adjacency) if w != -1) // 2


def has_perfect_matching(graph: Graph) -> bool:
    """
    Whether a maximum matching covers every vertex; always False for odd order. The empty graph has the empty
    perfect matching.
    """
    if graph.n % 2:
        return False
    return all(w != -1 for w in _maximum_mate(graph.n, graph.adjacency))


def _residual_mate(graph: Graph, removed: Iterable[Vertex], forbidden: Iterable[Edge]) -> Tuple[List[int], List[int]]:
    """
    Maximum matching of G - removed - forbidden, computed without building a Graph.
    @return: (mate over the kept vertices, kept vertices in increasing order)
    """
    gone = set(removed)
    blocked = {edge(u, v) for u, v in forbidden}
    kept = [v for v in range(graph.n) if v not in gone]
    position = {v: i for i, v in enumerate(kept)}
    adjacency = [[position[w] for w in graph.adjacency[v] if w in position and edge(v, w) not in blocked]
                 for v in kept]
    return _maximum_mate(len(kept), adjacency), kept


def residual_has_perfect_matching(graph: Graph, removed: Iterable[Vertex] = (), forbidden: Iterable[Edge] = ()) -> bool:
    """
    Whether G - removed - forbidden has a perfect matching; the hot path of every extendability search.
    @param graph: The host graph
    @param removed: Vertices to delete
    @param forbidden: Edges to delete
    """
    mate, kept = _residual_mate(graph, removed, forbidden)
    return len(kept) % 2 == 0 and all(w != -1 for w in mate)


################################################################
#                     k-Matching Enumeration                   #
################################################################

def enumerate_k_matchings(graph: Graph, k: int, limit: Optional[int] = None,
                          excluded_vertices: Iterable[Vertex] = (),
                          excluded_edges: Iterable[Edge] = ()) -> Iterator[Matching]:
    """
    Every k-matching of the graph exactly once, in lexicographic order of the sorted edge lists.
    @param graph: The graph
    @param k: The number of edges, k >= 0; k = 0 yields the empty matching once
    @param limit: How many matchings may be yielded before the enumeration aborts; defaults to
        Settings.max_enumerated_matchings
    @param excluded_vertices: Vertices no edge of a yielded matching may touch (enumerate in G - S)
    @param excluded_edges: Edges a yielded matching may not use (enumerate in G - E(N))
    @return: A lazy stream of Matching objects on the host graph
    @raise InvalidArgument if k < 0
    @raise ResourceLimitExceeded once more than limit matchings would be yielded
    """
    if k < 0:
        raise InvalidArgument(f"k must be non-negative, got {k}")

    limit = Settings.max_enumerated_matchings if limit is None else limit
    blocked = {edge(u, v) for u, v in excluded_edges}
    gone = 0
    for v in excluded_vertices:
        gone |= 1 << v
    edges = [(u, v) for u, v in graph.edges if (u, v) not in blocked and not (gone >> u) & 1 and not (gone >> v) & 1]
    yielded = 0

    def extend(start: int, chosen: List[Edge], used: int) -> Iterator[List[Edge]]:
        if len(chosen) == k:
            yield chosen
            return
        needed = k - len(chosen)
        for i in range(start, len(edges)):
            if len(edges) - i < needed:
                return
            u, v = edges[i]
            if (used >> u) & 1 or (used >> v) & 1:
                continue
            chosen.append(edges[i])
            yield from extend(i + 1, chosen, used | (1 << u) | (1 << v))
            chosen.pop()

    for chosen in extend(0, [], 0):
        yielded += 1
        if yielded > limit:
            raise ResourceLimitExceeded(f"More than {limit} {k}-matchings enumerated")
        yield Matching(graph, chosen)


################################################################
#                  Constrained Perfect Matchings               #
################################################################

def perfect_matching_containing_avoiding(graph: Graph, required: Matching,
                                         forbidden: Iterable[Sequence[int]] = ()) -> Optional[Matching]:
    """
    A perfect matching F with M ⊆ F and F ∩ N = ∅, found by deleting V(M) and the edges of N, matching the residue
    perfectly, and adding M back.
    @param graph: The graph
    @param required: M, a matching of the graph
    @param forbidden: N, edges of the graph
    @return: Some such F, or None if there is none
    @raise InvalidArgument if M is not a matching of the graph, some edge of N is not in the graph, or M and N share
        an edge
    """
    if required.host is not graph and required.host != graph:
        raise InvalidArgument("The required matching belongs to a different graph")

    blocked = edge_set(forbidden)
    for u, v in blocked:
        if not graph.has_edge(u, v):
            raise InvalidArgument(f"Forbidden pair ({u}, {v}) is not an edge of the graph")
        if (u, v) in required:
            raise InvalidArgument(f"Edge ({u}, {v}) is both required and forbidden")

    mate, kept = _residual_mate(graph, required.vertices(), blocked)
    if len(kept) % 2 or any(w == -1 for w in mate):
        return None

    return Matching(graph, list(required.edges) + [(kept[i], kept[j]) for i, j in _mate_edges(mate)])
