from typing import Collection, Iterable, Tuple, Union

from .Rational import Infinity

# Graph-related
Vertex = int
Edge = Tuple[int, int]
VertexSet = Tuple[int, ...]
EdgeSet = Tuple[Edge, ...]
Vertices = Collection[Vertex]
Edges = Collection[Edge]

# Values that may be infinite (girth of a forest, toughness of a complete graph)
Extended = Union[int, Infinity]


def edge(u: Vertex, v: Vertex) -> Edge:
    """
    Canonical form of an undirected edge.
    @param u: One endpoint
    @param v: The other endpoint
    @return: The pair (min, max)
    """
    return (u, v) if u < v else (v, u)


def vertex_set(vertices: Iterable[Vertex]) -> VertexSet:
    """
    Canonical form of a vertex set; a strictly increasing tuple of distinct vertex ids.
    @param vertices: Any iterable of vertex ids, duplicates allowed
    @return: A sorted tuple without duplicates
    """
    return tuple(sorted(set(vertices)))


def edge_set(edges: Iterable[Tuple[int, int]]) -> EdgeSet:
    """
    Canonical form of an edge set; a sorted tuple of canonical edges.
    @param edges: Any iterable of vertex pairs, in either orientation
    @return: A sorted tuple of distinct (min, max) pairs
    """
    return tuple(sorted({edge(u, v) for u, v in edges}))
