#########################################################
#                                                       #
#   Connectivity                                        #
#                                                       #
#   Vertex connectivity by vertex-splitting max-flow    #
#                                                       #
#########################################################

from itertools import combinations

import networkx as nx
from networkx.algorithms.flow import shortest_augmenting_path

from .Graph import Graph
from .Types import Vertex, Vertices


def _split_network(graph: Graph) -> nx.DiGraph:
    """
    The auxiliary network of a graph: every vertex v becomes an arc (v, "in") -> (v, "out") of capacity 1 and every
    edge uv becomes two arcs (u, "out") -> (v, "in") and (v, "out") -> (u, "in") of unbounded capacity.
    """
    network = nx.DiGraph()
    for v in graph.vertices():
        network.add_edge((v, "in"), (v, "out"), capacity=1)
    for u, v in graph.edges:
        network.add_edge((u, "out"), (v, "in"))
        network.add_edge((v, "out"), (u, "in"))
    return network


def local_connectivity(graph: Graph, s: Vertex, t: Vertex, network: nx.DiGraph = None) -> int:
    """
    The maximum number of internally vertex-disjoint s-t paths, for non-adjacent s and t; by Menger's theorem the
    size of a smallest vertex set separating them.
    @param graph: The graph
    @param s: The source vertex
    @param t: The target vertex, not adjacent to s
    @param network: An optional pre-built split network of the graph
    @return: The local vertex connectivity between s and t
    """
    assert s != t and not graph.has_edge(s, t), "Local connectivity is only defined for non-adjacent pairs"
    network = network if network is not None else _split_network(graph)
    return nx.maximum_flow_value(network, (s, "out"), (t, "in"), flow_func=shortest_augmenting_path)


def vertex_connectivity(graph: Graph) -> int:
    """
    The vertex connectivity κ(G). Complete graphs get n-1, disconnected graphs 0.
    Taking v of minimum degree, every minimum separator either misses v (so separates v from some non-neighbour) or
    contains v, in which case it separates two neighbours of v; so only those pairs need a flow computation.
    @param graph: The graph
    @return: κ(G)
    """
    n = graph.n
    if n <= 1:
        return 0
    if graph.is_complete():
        return n - 1
    if not graph.is_connected():
        return 0

    network = _split_network(graph)
    v = min(graph.vertices(), key=lambda u: (graph.degree(u), u))
    best = graph.degree(v)

    for w in graph.vertices():
        if w != v and not graph.has_edge(v, w):
            best = min(best, local_connectivity(graph, v, w, network))

    for x, y in combinations(sorted(graph.neighbors(v)), 2):
        if not graph.has_edge(x, y):
            best = min(best, local_connectivity(graph, x, y, network))

    return best


def is_cut_set(graph: Graph, s: Vertices) -> bool:
    """
    Whether deleting S leaves a disconnected graph (at least two components).
    """
    return graph.component_count(s) >= 2
