#########################################################
#                                                       #
#   Graph                                               #
#                                                       #
#   Simple undirected graphs on vertices 0..n-1         #
#                                                       #
#########################################################

# Graphs are immutable; every "deletion" produces a new, relabelled Graph whose labels map each vertex back to the
#   vertex it came from, so certificates found on a residual graph can be reported in the host graph's ids.

from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .Exceptions import InvalidArgument
from .Rational import INFINITY
from .Types import Edge, EdgeSet, Extended, Vertex, Vertices, VertexSet, edge, vertex_set


class Graph:

    """A simple undirected graph with dense 0-based vertex ids."""

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), labels: Optional[Sequence[int]] = None):
        """
        Initializer for a Graph.
        @param n: The number of vertices; vertices are exactly 0, ..., n-1
        @param edges: Pairs (u, v) of distinct vertices, in either orientation
        @param labels: An optional sequence of n distinct ids; labels[v] is the id vertex v had in the graph this one
            was derived from. Defaults to the identity.
        @raise InvalidArgument on a negative order, a self-loop, a duplicate edge, or an out-of-range vertex.
        """
        if n < 0:
            raise InvalidArgument(f"Graph order must be non-negative, got {n}")

        canonical = set()
        for pair in edges:
            u, v = pair
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgument(f"Edge ({u}, {v}) has a vertex outside 0..{n - 1}")
            if u == v:
                raise InvalidArgument(f"Self-loop at vertex {u}")
            e = edge(u, v)
            if e in canonical:
                raise InvalidArgument(f"Duplicate edge {e}")
            canonical.add(e)

        self._n = n
        self._edges: EdgeSet = tuple(sorted(canonical))
        self._edge_set: FrozenSet[Edge] = frozenset(canonical)

        adjacency = [set() for _ in range(n)]
        for u, v in self._edges:
            adjacency[u].add(v)
            adjacency[v].add(u)
        self._adjacency: Tuple[FrozenSet[Vertex], ...] = tuple(frozenset(a) for a in adjacency)

        # Neighbour bitmasks; the subset searches of the parameter module work on these
        self._masks: Tuple[int, ...] = tuple(sum(1 << w for w in a) for a in adjacency)

        if labels is None:
            self._labels: Tuple[int, ...] = tuple(range(n))
        else:
            self._labels = tuple(labels)
            if len(self._labels) != n or len(set(self._labels)) != n:
                raise InvalidArgument(f"Labels must be {n} distinct ids")

    ################################################################
    #                          Basic Access                        #
    ################################################################

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> EdgeSet:
        return self._edges

    @property
    def adjacency(self) -> Tuple[FrozenSet[Vertex], ...]:
        return self._adjacency

    @property
    def masks(self) -> Tuple[int, ...]:
        return self._masks

    @property
    def labels(self) -> Tuple[int, ...]:
        return self._labels

    def vertices(self) -> range:
        return range(self._n)

    def size(self) -> int:
        """
        @return: |E(G)|
        """
        return len(self._edges)

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return edge(u, v) in self._edge_set

    def neighbors(self, v: Vertex) -> FrozenSet[Vertex]:
        self._check_vertices((v,))
        return self._adjacency[v]

    def degree(self, v: Vertex) -> int:
        return len(self.neighbors(v))

    def min_degree(self) -> int:
        return min((len(a) for a in self._adjacency), default=0)

    def is_complete(self) -> bool:
        return self.size() == self._n * (self._n - 1) // 2

    def original(self, vertices: Iterable[Vertex]) -> VertexSet:
        """
        Translate vertices of this graph to the ids they had in the graph it was derived from.
        @param vertices: Vertices of this graph
        @return: The corresponding ids, as a canonical vertex set
        """
        return vertex_set(self._labels[v] for v in vertices)

    def original_edges(self, edges: Iterable[Edge]) -> EdgeSet:
        return tuple(sorted(edge(self._labels[u], self._labels[v]) for u, v in edges))

    def _check_vertices(self, vertices: Iterable[Vertex]):
        for v in vertices:
            if not (isinstance(v, int) and 0 <= v < self._n):
                raise InvalidArgument(f"Vertex {v!r} is not in 0..{self._n - 1}")

    ################################################################
    #                        Neighbourhoods                        #
    ################################################################

    def neighborhood(self, s: Vertices) -> VertexSet:
        """
        The neighbourhood N(S), the union of the neighbours of every vertex in S. The result may intersect S.
        @param s: A collection of vertices of this graph
        @return: N(S) as a canonical vertex set; empty for an empty S
        @raise InvalidArgument if S contains a vertex outside the graph
        """
        self._check_vertices(s)
        found = set()
        for v in s:
            found |= self._adjacency[v]
        return vertex_set(found)

    ################################################################
    #                          Components                          #
    ################################################################

    def components(self, removed: Vertices = ()) -> List[VertexSet]:
        """
        The connected components of G - removed, in canonical order (by smallest vertex).
        @param removed: Vertices deleted before the components are taken; defaults to none
        @return: A list of canonical vertex sets
        """
        self._check_vertices(removed)
        gone = set(removed)
        seen = set(gone)
        found = []

        for root in range(self._n):
            if root in seen:
                continue
            seen.add(root)
            component = [root]
            queue = deque([root])
            while queue:
                v = queue.popleft()
                for w in self._adjacency[v]:
                    if w not in seen:
                        seen.add(w)
                        component.append(w)
                        queue.append(w)
            found.append(vertex_set(component))

        return found

    def component_count(self, removed: Vertices = ()) -> int:
        """
        @return: c(G - removed)
        """
        return len(self.components(removed))

    def odd_component_count(self, removed: Vertices = ()) -> int:
        """
        @return: c0(G - removed), the number of components of odd order
        """
        return sum(1 for c in self.components(removed) if len(c) % 2 == 1)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    ################################################################
    #                            Girth                             #
    ################################################################

    def girth(self) -> Extended:
        """
        Length of a shortest cycle, by a breadth-first search from every vertex.
        @return: The girth as an int, or INFINITY for a forest
        """
        best = INFINITY

        for root in range(self._n):
            distance = {root: 0}
            parent = {root: -1}
            queue = deque([root])

            while queue:
                v = queue.popleft()

                # Nothing shorter can close once the frontier is this deep
                if 2 * distance[v] + 1 >= best:
                    break

                for w in self._adjacency[v]:
                    if w not in distance:
                        distance[w] = distance[v] + 1
                        parent[w] = v
                        queue.append(w)
                    elif parent[v] != w:
                        length = distance[v] + distance[w] + 1
                        if length < best:
                            best = length

        return best

    ################################################################
    #                   Derived (relabelled) Graphs                #
    ################################################################

    def induced_subgraph(self, keep: Vertices) -> "Graph":
        """
        G[keep], relabelled to 0..|keep|-1 in increasing order; labels map back to this graph's labels.
        @param keep: The vertices to keep
        @return: The induced subgraph
        """
        self._check_vertices(keep)
        kept = vertex_set(keep)
        position: Dict[Vertex, int] = {v: i for i, v in enumerate(kept)}
        edges = [(position[u], position[v]) for u, v in self._edges if u in position and v in position]
        return Graph(len(kept), edges, labels=[self._labels[v] for v in kept])

    def delete_vertices(self, removed: Vertices) -> "Graph":
        """
        G - removed, relabelled; see induced_subgraph.
        """
        self._check_vertices(removed)
        gone = set(removed)
        return self.induced_subgraph([v for v in range(self._n) if v not in gone])

    def delete_edges(self, removed: Iterable[Sequence[int]]) -> "Graph":
        """
        G - E, on the same vertices (and labels).
        @param removed: Edges of this graph to delete
        @raise InvalidArgument if some pair given is not an edge of this graph
        """
        gone = set()
        for u, v in removed:
            if not self.has_edge(u, v):
                raise InvalidArgument(f"({u}, {v}) is not an edge of the graph")
            gone.add(edge(u, v))
        return Graph(self._n, [e for e in self._edges if e not in gone], labels=self._labels)

    def to_networkx(self):
        """
        The same graph as a networkx.Graph, for interoperability and as an independent oracle.
        """
        g = nx.Graph()
        g.add_nodes_from(range(self._n))
        g.add_edges_from(self._edges)
        return g

    ################################################################
    #                           Builtins                           #
    ################################################################

    def __len__(self) -> int:
        return self._n

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, self._edges))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={list(self._edges)})"

    def __str__(self) -> str:
        """
        String builtin for the Graph class
        @return: A string representation of the given Graph instance
        """
        msg = f"Vertices: {self._n}\n"
        msg += "Edges: " + ", ".join(f"{u}-{v}" for u, v in self._edges)
        return msg
