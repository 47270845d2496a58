#########################################################
#                                                       #
#   Extendability Checker                               #
#                                                       #
#   Exhaustive decisions, with certificates, of the     #
#   matching-extension properties                       #
#                                                       #
#########################################################

# Every decision walks its configurations in a fixed order (vertex sets S in colex order, matchings in the matching
#   engine's lexicographic order) and stops at the first one whose residual graph has no perfect matching; that
#   configuration, with a barrier of the residual graph, is the certificate.

from dataclasses import dataclass
from typing import Iterable, Optional

from .Exceptions import InvalidArgument, InvalidCertificate, ResourceLimitExceeded
from .GallaiEdmonds import BarrierCertificate, barrier_certificate, verify_barrier
from .Graph import Graph
from .MatchingEngine import Matching, enumerate_k_matchings, has_perfect_matching, residual_has_perfect_matching
from .Types import EdgeSet, VertexSet, edge_set, vertex_set

from ..config.settings import Settings
from ..util.helpers import colex_combinations


@dataclass(frozen=True)
class ExtendabilityCertificate:
    """
    A configuration that fails to extend: deleting removed_vertices, the vertices of required_matching, and the edges
    forbidden_edges leaves a graph without a perfect matching, and barrier (in host vertex ids) proves it.
    """
    removed_vertices: VertexSet
    required_matching: Matching
    forbidden_edges: EdgeSet
    barrier: BarrierCertificate


@dataclass(frozen=True)
class ExtendabilityVerdict:
    holds: bool
    certificate: Optional[ExtendabilityCertificate] = None
    checked_count: int = 0

    def __post_init__(self):
        assert self.holds == (self.certificate is None), "A verdict holds exactly when it carries no certificate"

    def __bool__(self) -> bool:
        return self.holds


def residual_graph(graph: Graph, removed: Iterable[int] = (), forbidden: Iterable = ()) -> Graph:
    """
    G - E(forbidden) - removed, relabelled; labels of the result are host vertex ids.
    """
    forbidden = edge_set(forbidden)
    reduced = graph.delete_edges(forbidden) if forbidden else graph
    return reduced.delete_vertices(vertex_set(removed))


class ExtendabilityChecker:
    """
    Decides k-extendability, n-factor-criticality, (n,k)-extendability and E(m,n)-extendability of one graph by
    exhaustive search. Every decision counts the configurations it examines and aborts with ResourceLimitExceeded
    past the configured ceiling; an aborted search never reports that a property holds.
    """

    def __init__(self, graph: Graph, max_configurations: Optional[int] = None, max_matchings: Optional[int] = None):
        """
        @param graph: The graph to decide properties of
        @param max_configurations: Ceiling on (S, M, N) configurations per decision; defaults to
            Settings.max_configurations
        @param max_matchings: Ceiling on matchings per enumeration; defaults to Settings.max_enumerated_matchings
        """
        self.graph = graph
        self.max_configurations = Settings.max_configurations if max_configurations is None else max_configurations
        self.max_matchings = Settings.max_enumerated_matchings if max_matchings is None else max_matchings
        self.checked_count = 0

    ################################################################
    #                       Shared Machinery                       #
    ################################################################

    def _tick(self):
        self.checked_count += 1
        if self.checked_count > self.max_configurations:
            raise ResourceLimitExceeded(f"More than {self.max_configurations} configurations examined")

    def _matchings(self, k: int, **exclusions):
        return enumerate_k_matchings(self.graph, k, limit=self.max_matchings, **exclusions)

    def _require(self, condition: bool, message: str):
        if not condition:
            raise InvalidArgument(message)

    def _require_connected(self):
        self._require(self.graph.is_connected(), "The graph must be connected")

    def _fail(self, removed: VertexSet = (), required: Optional[Matching] = None, forbidden: EdgeSet = ()) \
            -> ExtendabilityVerdict:
        """
        Wrap a failing configuration into a verdict, attaching a barrier of its residual graph.
        """
        required = required if required is not None else Matching(self.graph)
        residual = residual_graph(self.graph, vertex_set(removed) + required.vertices(), forbidden)
        barrier = barrier_certificate(residual)
        assert barrier is not None, "A failing configuration left a residual graph with a perfect matching"

        host_barrier = BarrierCertificate(residual.original(barrier.s),
                                          [residual.original(c) for c in barrier.fc_components])
        certificate = ExtendabilityCertificate(vertex_set(removed), required, edge_set(forbidden), host_barrier)
        return ExtendabilityVerdict(False, certificate, self.checked_count)

    def _holds(self) -> ExtendabilityVerdict:
        return ExtendabilityVerdict(True, None, self.checked_count)

    ################################################################
    #                        k-Extendability                       #
    ################################################################

    def k_extendable(self, k: int) -> ExtendabilityVerdict:
        """
        Whether every k-matching of G extends to a perfect matching; k = 0 asks for a perfect matching.
        @param k: The matching size, k >= 0
        @raise InvalidArgument if G is disconnected, of odd order, or has fewer than 2k + 2 vertices
        """
        n = self.graph.n
        self._require(k >= 0, f"k must be non-negative, got {k}")
        self._require_connected()
        self._require(n % 2 == 0, f"k-extendability requires even order; got {n}")
        self._require(n >= 2 * k + 2, f"k-extendability requires |V(G)| >= 2k + 2 = {2 * k + 2}; got {n}")

        self.checked_count = 0
        for m in self._matchings(k):
            self._tick()
            if not residual_has_perfect_matching(self.graph, removed=m.vertices()):
                return self._fail(required=m)

        # No k-matching at all; then there is no perfect matching either
        if self.checked_count == 0:
            return self._fail()

        return self._holds()

    ################################################################
    #                     n-Factor-Criticality                     #
    ################################################################

    def n_factor_critical(self, n: int) -> ExtendabilityVerdict:
        """
        Whether G - S has a perfect matching for every n-set S.
        @param n: The number of deleted vertices, n >= 0
        @raise InvalidArgument if G is disconnected, has fewer than n vertices, or |V(G)| - n is odd
        """
        order = self.graph.n
        self._require(n >= 0, f"n must be non-negative, got {n}")
        self._require_connected()
        self._require(order >= n, f"n-factor-criticality requires |V(G)| >= n = {n}; got {order}")
        self._require((order - n) % 2 == 0, f"n-factor-criticality requires |V(G)| = n (mod 2); got {order} and {n}")

        self.checked_count = 0
        for s in colex_combinations(range(order), n):
            self._tick()
            if not residual_has_perfect_matching(self.graph, removed=s):
                return self._fail(removed=s)

        return self._holds()

    ################################################################
    #                      (n,k)-Extendability                     #
    ################################################################

    def nk_extendable(self, n: int, k: int) -> ExtendabilityVerdict:
        """
        Whether, for every n-set S, G - S has a k-matching and each of its k-matchings extends to a perfect matching
        of G - S. A failing S without any k-matching is certified with an empty matching.
        @param n: The number of deleted vertices, n >= 0
        @param k: The matching size, k >= 0
        @raise InvalidArgument if G is disconnected, |V(G)| < n + 2k + 2, or |V(G)| - n is odd
        """
        order = self.graph.n
        self._require(n >= 0 and k >= 0, f"n and k must be non-negative, got ({n}, {k})")
        self._require_connected()
        self._require(order >= n + 2 * k + 2,
                      f"(n,k)-extendability requires |V(G)| >= n + 2k + 2 = {n + 2 * k + 2}; got {order}")
        self._require((order - n) % 2 == 0, f"(n,k)-extendability requires |V(G)| = n (mod 2); got {order} and {n}")

        self.checked_count = 0
        for s in colex_combinations(range(order), n):
            found = False
            for m in self._matchings(k, excluded_vertices=s):
                found = True
                self._tick()
                if not residual_has_perfect_matching(self.graph, removed=s + m.vertices()):
                    return self._fail(removed=s, required=m)

            if not found:
                self._tick()
                return self._fail(removed=s)

        return self._holds()

    ################################################################
    #                      E(m,n)-Extendability                    #
    ################################################################

    def emn_extendable(self, m: int, n: int, strict_disjoint: Optional[bool] = None) -> ExtendabilityVerdict:
        """
        Whether, for every m-matching M and n-matching N sharing no edge, some perfect matching F contains M and
        avoids N. M is the outer loop and N the inner one.
        @param m: The size of the matching to include
        @param n: The size of the matching to avoid
        @param strict_disjoint: Require M and N to share no vertex (their union is a matching); defaults to
            Settings.strict_disjoint
        @raise InvalidArgument if G is disconnected, of odd order, or |V(G)| < 2m + 2n + 2
        """
        order = self.graph.n
        strict = Settings.strict_disjoint if strict_disjoint is None else strict_disjoint
        self._require(m >= 0 and n >= 0, f"m and n must be non-negative, got ({m}, {n})")
        self._require_connected()
        self._require(order % 2 == 0, f"E(m,n)-extendability requires even order; got {order}")
        self._require(order >= 2 * m + 2 * n + 2,
                      f"E(m,n)-extendability requires |V(G)| >= 2m + 2n + 2 = {2 * m + 2 * n + 2}; got {order}")

        self.checked_count = 0
        for required in self._matchings(m):
            if strict:
                inner = self._matchings(n, excluded_vertices=required.vertices())
            else:
                inner = self._matchings(n, excluded_edges=required.edges)

            for avoided in inner:
                self._tick()
                if not residual_has_perfect_matching(self.graph, removed=required.vertices(), forbidden=avoided.edges):
                    return self._fail(required=required, forbidden=avoided.edges)

        if self.checked_count == 0 and not has_perfect_matching(self.graph):
            return self._fail()

        return self._holds()

    def emn_extendable_by_deletion(self, m: int, n: int) -> ExtendabilityVerdict:
        """
        The edge-deletion formulation of E(m,n)-extendability: for every n-matching N, every m-matching of G - E(N)
        extends to a perfect matching of G - E(N). The residual graphs need not be connected. Agrees with
        emn_extendable under edge-disjointness; kept as an independent cross-check.
        """
        order = self.graph.n
        self._require_connected()
        self._require(order % 2 == 0, f"E(m,n)-extendability requires even order; got {order}")
        self._require(order >= 2 * m + 2 * n + 2,
                      f"E(m,n)-extendability requires |V(G)| >= 2m + 2n + 2 = {2 * m + 2 * n + 2}; got {order}")

        self.checked_count = 0
        for avoided in self._matchings(n):
            reduced = self.graph.delete_edges(avoided.edges)
            for required in enumerate_k_matchings(reduced, m, limit=self.max_matchings):
                self._tick()
                if not has_perfect_matching(reduced.delete_vertices(required.vertices())):
                    return self._fail(required=Matching(self.graph, required.edges), forbidden=avoided.edges)

        if self.checked_count == 0 and not has_perfect_matching(self.graph):
            return self._fail()

        return self._holds()


################################################################
#                       Functional Surface                     #
################################################################

def is_k_extendable(graph: Graph, k: int) -> ExtendabilityVerdict:
    return ExtendabilityChecker(graph).k_extendable(k)


def is_n_factor_critical(graph: Graph, n: int) -> ExtendabilityVerdict:
    return ExtendabilityChecker(graph).n_factor_critical(n)


def is_nk_extendable(graph: Graph, n: int, k: int) -> ExtendabilityVerdict:
    return ExtendabilityChecker(graph).nk_extendable(n, k)


def is_Emn_extendable(graph: Graph, m: int, n: int, strict_disjoint: Optional[bool] = None) -> ExtendabilityVerdict:
    return ExtendabilityChecker(graph).emn_extendable(m, n, strict_disjoint)


def emn_extendable_by_deletion(graph: Graph, m: int, n: int) -> ExtendabilityVerdict:
    return ExtendabilityChecker(graph).emn_extendable_by_deletion(m, n)


################################################################
#                      Certificate Replay                      #
################################################################

def replay_certificate(graph: Graph, certificate: ExtendabilityCertificate) -> bool:
    """
    Re-verify a certificate against a graph from scratch: the configuration must be well-formed, its residual graph
    must lack a perfect matching, and the barrier must verify on the residual graph.
    @param graph: The host graph
    @param certificate: The certificate to replay
    @return: True if the certificate certifies non-extendability of the graph, False otherwise
    """
    try:
        required = Matching(graph, certificate.required_matching.edges)
        removed = vertex_set(certificate.removed_vertices)
        if set(removed) & set(required.vertices()):
            return False
        residual = residual_graph(graph, removed + required.vertices(), certificate.forbidden_edges)
    except InvalidArgument:
        return False

    if has_perfect_matching(residual):
        return False

    position = {label: i for i, label in enumerate(residual.labels)}
    barrier = certificate.barrier
    if any(v not in position for v in barrier.s) or any(v not in position for c in barrier.fc_components for v in c):
        return False

    local = BarrierCertificate(vertex_set(position[v] for v in barrier.s),
                               [vertex_set(position[v] for v in c) for c in barrier.fc_components])
    return verify_barrier(residual, local)


def assert_certificate(graph: Graph, certificate: ExtendabilityCertificate):
    """
    replay_certificate, raising instead of returning False.
    @raise InvalidCertificate if the certificate does not replay
    """
    if not replay_certificate(graph, certificate):
        raise InvalidCertificate("The certificate does not certify non-extendability of the graph")
