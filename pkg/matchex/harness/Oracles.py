#########################################################
#                                                       #
#   Oracles                                             #
#                                                       #
#   Exhaustive, definition-level answers to the         #
#   questions the fast algorithms answer                #
#                                                       #
#########################################################

from typing import Optional

from ..config.settings import Settings
from ..structures.Exceptions import ResourceLimitExceeded
from ..structures.GallaiEdmonds import TutteCertificate
from ..structures.Graph import Graph
from ..util.helpers import colex_combinations


def _guard(graph: Graph, limit: Optional[int]):
    limit = Settings.oracle_vertex_limit if limit is None else limit
    if graph.n > limit:
        raise ResourceLimitExceeded(f"Exhaustive oracles are limited to {limit} vertices; the graph has {graph.n}")


def brute_matching_number(graph: Graph, limit: Optional[int] = None) -> int:
    """
    The size of a maximum matching, by trying every matching: the lowest unvisited vertex is either left unmatched or
    matched to each of its unvisited neighbours in turn.
    @raise ResourceLimitExceeded above oracle_vertex_limit vertices
    """
    _guard(graph, limit)

    def best(used: int) -> int:
        free = [v for v in graph.vertices() if not used & (1 << v)]
        if len(free) < 2:
            return 0
        v = free[0]
        skip = best(used | (1 << v))
        for u in graph.neighbors(v):
            if not used & (1 << u):
                skip = max(skip, 1 + best(used | (1 << v) | (1 << u)))
        return skip

    return best(0)


def brute_tutte_violator(graph: Graph, limit: Optional[int] = None) -> Optional[TutteCertificate]:
    """
    The first S, by size then colex order, with c0(G - S) > |S|; None if there is none, which by Tutte's condition
    happens exactly when G has a perfect matching.
    @raise ResourceLimitExceeded above oracle_vertex_limit vertices
    """
    _guard(graph, limit)

    for size in range(graph.n + 1):
        for s in colex_combinations(graph.vertices(), size):
            odd = [c for c in graph.components(s) if len(c) % 2]
            if len(odd) > size:
                return TutteCertificate(s, odd)

    return None
