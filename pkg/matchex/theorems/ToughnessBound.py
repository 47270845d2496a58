#########################################################
#                                                       #
#   Toughness Bound                                     #
#                                                       #
#   The toughness bound carried by a Tutte set of       #
#   G - S, and the construction showing the             #
#   connectivity condition cannot be weakened           #
#                                                       #
#########################################################

from fractions import Fraction

from ..structures.Connectivity import is_cut_set, vertex_connectivity
from ..structures.Exceptions import InvalidArgument
from ..structures.Generators import complete, disjoint_union, empty, join
from ..structures.Graph import Graph
from ..structures.Parameters import toughness
from ..structures.Types import Vertices, vertex_set


def toughness_certificate_bound(graph: Graph, n: int, s: Vertices, t: Vertices) -> Fraction:
    """
    If G - S has no perfect matching, a Tutte set T of G - S leaves c0(G - S - T) >= |T| + 2 odd components, so S ∪ T
    is a cut-set and t(G) <= (|S| + |T|) / (|T| + 2); in particular κ(G) <= n + |T|.
    @param graph: The graph
    @param n: |S|
    @param s: S, the n deleted vertices
    @param t: T, a Tutte set of G - S
    @return: (|S| + |T|) / (|T| + 2), after asserting that t(G) and κ(G) respect it
    @raise InvalidArgument if |S| != n, T meets S, or c0(G - S - T) < |T| + 2
    """
    s, t = vertex_set(s), vertex_set(t)
    if len(s) != n:
        raise InvalidArgument(f"|S| must be {n}, got {len(s)}")
    if set(s) & set(t):
        raise InvalidArgument("T must be disjoint from S")

    odd = graph.odd_component_count(s + t)
    if odd < len(t) + 2:
        raise InvalidArgument(f"c0(G - S - T) = {odd} is below |T| + 2 = {len(t) + 2}")

    assert is_cut_set(graph, s + t), "S ∪ T leaves G connected"
    bound = Fraction(len(s) + len(t), len(t) + 2)
    assert toughness(graph).value <= bound, "Toughness exceeds the Tutte-set bound"
    assert vertex_connectivity(graph) <= n + len(t), "Connectivity exceeds n + |T|"
    return bound


def sharpness_construction(n: int, t: int, r: int) -> Graph:
    """
    K_{n+t} joined to the disjoint union of t + 1 isolated vertices and K_r. The hub K_{n+t} is vertices
    0, ..., n + t - 1, the isolated vertices follow, and K_r comes last.
    Its toughness is (n + t) / (t + 2) and its connectivity n + t, yet deleting any n hub vertices leaves t hub
    vertices to cover t + 1 isolated ones, so it is not n-factor-critical.
    @raise InvalidArgument unless n, t and r are all positive
    """
    if min(n, t, r) < 1:
        raise InvalidArgument(f"n, t and r must be positive, got ({n}, {t}, {r})")
    return join(complete(n + t), disjoint_union(empty(t + 1), complete(r)))


def sharpness_hub(n: int, t: int) -> Vertices:
    """
    The hub vertices of sharpness_construction(n, t, r), for any r.
    """
    return tuple(range(n + t))


def sharpness_eps_bound(n: int, t: int) -> Fraction:
    """
    (n - 2) / (t + 2): for every 0 < eps below it, the construction has t(G) >= 1 + eps and
    κ(G) < (n - 2)(1 + eps) / eps, so it meets every hypothesis of the toughness result except connectivity.
    """
    return Fraction(n - 2, t + 2)
