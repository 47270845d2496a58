#########################################################
#                                                       #
#   Gallai-Edmonds                                      #
#                                                       #
#   The D/A/C decomposition, Tutte sets and barriers,   #
#   factor-criticality                                  #
#                                                       #
#########################################################

from dataclasses import dataclass
from typing import List, Optional

from .Exceptions import InvalidArgument
from .Graph import Graph
from .MatchingEngine import has_perfect_matching, matching_number, residual_has_perfect_matching
from .Types import Vertices, VertexSet, vertex_set


@dataclass(frozen=True)
class GallaiEdmonds:
    """
    The Gallai-Edmonds partition of V(G).
    d: vertices missed by some maximum matching
    a: N(D) minus D
    c: everything else
    """
    d: VertexSet
    a: VertexSet
    c: VertexSet
    d_components: List[VertexSet]

    def deficiency(self) -> int:
        """
        c(G[D]) - |A|, which equals |V| - 2ν(G).
        """
        return len(self.d_components) - len(self.a)


@dataclass(frozen=True)
class TutteCertificate:
    """
    A set S with c0(G - S) > |S|, refuting a perfect matching by Tutte's theorem.
    """
    s: VertexSet
    odd_components: List[VertexSet]


@dataclass(frozen=True)
class BarrierCertificate:
    """
    A set S and |S| + 2 or more factor-critical components of G - S, refuting a perfect matching of an even-order G.
    """
    s: VertexSet
    fc_components: List[VertexSet]

    def surplus(self) -> int:
        """
        fc(G - S) - |S|; at least 2 for a valid barrier.
        """
        return len(self.fc_components) - len(self.s)


################################################################
#                       Factor-Criticality                     #
################################################################

def is_factor_critical(graph: Graph) -> bool:
    """
    Whether G - v has a perfect matching for every vertex v. Requires odd order; K1 is factor-critical.
    """
    if graph.n % 2 == 0:
        return False
    return all(residual_has_perfect_matching(graph, removed=(v,)) for v in graph.vertices())


def count_fc_components(graph: Graph, s: Vertices) -> int:
    """
    fc(G - S), the number of components of G - S inducing factor-critical subgraphs; single vertices count.
    @param graph: The graph
    @param s: The deleted vertices
    """
    return sum(1 for c in graph.components(s) if is_factor_critical(graph.induced_subgraph(c)))


def deficiency(graph: Graph) -> int:
    """
    |V| - 2ν(G), the number of vertices every maximum matching misses.
    """
    return graph.n - 2 * matching_number(graph)


################################################################
#                          Decomposition                       #
################################################################

def gallai_edmonds(graph: Graph) -> GallaiEdmonds:
    """
    The Gallai-Edmonds decomposition. D is found vertex by vertex: v is missed by some maximum matching exactly when
    ν(G - v) = ν(G).
    @param graph: The graph
    @return: The D/A/C partition, with the components of G[D] in canonical order
    """
    nu = matching_number(graph)
    d = vertex_set(v for v in graph.vertices() if matching_number(graph.delete_vertices((v,))) == nu)
    in_d = set(d)
    a = vertex_set(w for w in graph.neighborhood(d) if w not in in_d)
    in_a = set(a)
    c = vertex_set(v for v in graph.vertices() if v not in in_d and v not in in_a)

    # Components of G[D] are the components of G - A - C
    d_components = graph.components(a + c)

    decomposition = GallaiEdmonds(d, a, c, d_components)
    assert decomposition.deficiency() == graph.n - 2 * nu, "Gallai-Edmonds deficiency formula violated"
    return decomposition


def tutte_violator(graph: Graph) -> Optional[TutteCertificate]:
    """
    A Tutte set for a graph without a perfect matching; S = A(G) from the Gallai-Edmonds decomposition.
    @param graph: The graph
    @return: None iff the graph has a perfect matching; otherwise S with c0(G - S) >= |S| + 1 (>= |S| + 2 when the
        order is even)
    """
    if has_perfect_matching(graph):
        return None

    s = gallai_edmonds(graph).a
    odd = [c for c in graph.components(s) if len(c) % 2 == 1]
    certificate = TutteCertificate(s, odd)
    assert verify_tutte(graph, certificate), "Gallai-Edmonds set A failed to violate Tutte's condition"
    return certificate


def barrier_certificate(graph: Graph) -> Optional[BarrierCertificate]:
    """
    A barrier for an even-order graph without a perfect matching; S = A(G), and the factor-critical components are
    the components of G[D].
    @param graph: A graph of even order
    @return: None iff the graph has a perfect matching; otherwise a barrier with fc(G - S) >= |S| + 2
    @raise InvalidArgument if the order is odd
    """
    if graph.n % 2:
        raise InvalidArgument(f"Barriers are defined for even order; got order {graph.n}")

    if has_perfect_matching(graph):
        return None

    decomposition = gallai_edmonds(graph)
    certificate = BarrierCertificate(decomposition.a, decomposition.d_components)
    assert verify_barrier(graph, certificate), "Gallai-Edmonds barrier failed verification"
    return certificate


################################################################
#                     Certificate Verification                 #
################################################################

def verify_tutte(graph: Graph, certificate: TutteCertificate) -> bool:
    """
    Whether the listed sets are exactly the odd components of G - S and outnumber S.
    """
    try:
        odd = [c for c in graph.components(certificate.s) if len(c) % 2 == 1]
    except InvalidArgument:
        return False
    return sorted(odd) == sorted(certificate.odd_components) and len(odd) >= len(certificate.s) + 1


def verify_barrier(graph: Graph, certificate: BarrierCertificate) -> bool:
    """
    Whether every listed set is a component of G - S inducing a factor-critical subgraph, and there are at least
    |S| + 2 of them.
    """
    try:
        components = set(graph.components(certificate.s))
    except InvalidArgument:
        return False

    listed = certificate.fc_components
    if len(set(listed)) != len(listed) or len(listed) < len(certificate.s) + 2:
        return False

    return all(c in components and is_factor_critical(graph.induced_subgraph(c)) for c in listed)
