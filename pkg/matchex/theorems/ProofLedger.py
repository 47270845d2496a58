#########################################################
#                                                       #
#   Proof Ledger                                        #
#                                                       #
#   The quantities behind the binding-number bound for  #
#   k-extendability: g0, the claim bounds, the order    #
#   threshold, and the component ledger of a            #
#   non-extendability certificate                       #
#                                                       #
#########################################################

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Union

from ..structures.Exceptions import InvalidArgument
from ..structures.GallaiEdmonds import is_factor_critical
from ..structures.Graph import Graph
from ..structures.MatchingEngine import Matching
from ..structures.Rational import as_rational, is_infinite
from ..structures.Types import VertexSet, Vertices, vertex_set


def g0_of_girth(g: int) -> int:
    """
    The smallest odd integer at least g, 2 * floor(g / 2) + 1; a nontrivial factor-critical subgraph of a graph of
    girth g has at least this many vertices.
    @raise InvalidArgument if g < 3
    """
    if g < 3:
        raise InvalidArgument(f"Girth must be at least 3, got {g}")
    return 2 * (g // 2) + 1


################################################################
#                  Claim Bounds and Threshold                  #
################################################################

@dataclass(frozen=True)
class ProofBounds:
    k: int
    g0: int
    eps: Fraction
    s_max: Fraction
    l_max: Fraction
    n: int

    def sum_bound(self, s: int) -> int:
        """
        Upper bound (exclusive) on the total order of the components C_r, ..., C_{s+q}.
        """
        return self.g0 * (2 * self.k + s)

    def target(self) -> Fraction:
        """
        (g0 + 1) / g0 + eps, the binding number the bound must exceed.
        """
        return Fraction(self.g0 + 1, self.g0) + self.eps


def _validate(k: int, g0: int, eps: Fraction):
    if k < 1:
        raise InvalidArgument(f"k must be at least 1, got {k}")
    if g0 < 3 or g0 % 2 == 0:
        raise InvalidArgument(f"g0 must be odd and at least 3, got {g0}")
    if not 0 < eps < Fraction(1, g0):
        raise InvalidArgument(f"eps must satisfy 0 < eps < 1/g0 = 1/{g0}, got {eps}")


def _contradiction_ratio(order: int, k: int, g0: int, s: int, l: int) -> Optional[Fraction]:
    """
    (|G| - 2k g0 - g0 s - l) / (|G| - 2k - 2k g0 - (g0 + 1) s - l), or None where the denominator is not positive.
    """
    denominator = order - 2 * k - 2 * k * g0 - (g0 + 1) * s - l
    if denominator <= 0:
        return None
    return Fraction(order - 2 * k * g0 - g0 * s - l, denominator)


def _minimal_order(k: int, g0: int, s: int, l: int, target: Fraction) -> int:
    """
    Smallest order at which the contradiction ratio for (s, l) is at most target, by exact binary search. The ratio
    decreases towards 1 as the order grows; the search checks this at every step.
    """
    low = 2 * k + 2 * k * g0 + (g0 + 1) * s + l + 1
    high = low
    while _contradiction_ratio(high, k, g0, s, l) > target:
        high *= 2

    while low < high:
        middle = (low + high) // 2
        ratio = _contradiction_ratio(middle, k, g0, s, l)
        following = _contradiction_ratio(middle + 1, k, g0, s, l)
        assert following <= ratio, "The contradiction ratio is not monotone in the order"
        if ratio <= target:
            high = middle
        else:
            low = middle + 1

    return low


def claim_bounds(k: int, g0: int, eps: Union[Fraction, int, str]) -> ProofBounds:
    """
    The bounds on s = |S| and on the number l of single-vertex components that a non-extendability certificate
    must respect when b(G) > (g0 + 1) / g0 + eps, and the order beyond which no such certificate exists.
    @param k: The matching size, k >= 1
    @param g0: An odd integer, at least 3
    @param eps: An exact rational, 0 < eps < 1/g0
    @return: s_max = max{2(g0 - 1)k, 2k / (g0 eps)}, l_max = max{2 g0 k + 1, 2k / (g0 eps) + 1} and the threshold
    @raise InvalidArgument if any argument is out of range
    """
    eps = as_rational(eps)
    _validate(k, g0, eps)

    scaled = Fraction(2 * k) / (g0 * eps)
    s_max = max(Fraction(2 * (g0 - 1) * k), scaled)
    l_max = max(Fraction(2 * g0 * k + 1), scaled + 1)

    target = Fraction(g0 + 1, g0) + eps
    threshold = max(_minimal_order(k, g0, s, l, target)
                    for s in range(int(s_max) + 1)
                    for l in range(int(l_max) + 1))

    return ProofBounds(k, g0, eps, s_max, l_max, threshold)


def threshold_N(k: int, g0: int, eps: Union[Fraction, int, str]) -> int:
    """
    The least order N such that, for every integer s <= s_max and l <= l_max, the contradiction ratio is at most
    (g0 + 1) / g0 + eps at every order >= N.
    """
    return claim_bounds(k, g0, eps).n


################################################################
#                        Component Ledger                      #
################################################################

@dataclass(frozen=True)
class BindingBoundLedger:
    """
    The component ledger of a certificate (M, S): the factor-critical components C_1, ..., C_{s+q} of G - V(M) - S
    sorted by order (ties by smallest vertex), the sets U and W, and the two bounds f and h on b(G).
    """
    k: int
    g0: Optional[int]
    s: int
    q: int
    components: List[VertexSet]
    l: int
    r: int
    u: VertexSet
    w: VertexSet
    f: Fraction
    h: Fraction
    u_ratio: Fraction
    w_ratio: Fraction

    @property
    def component_orders(self) -> List[int]:
        return [len(c) for c in self.components]

    @property
    def tail_mass(self) -> int:
        """
        |C_r| + ... + |C_{s+q}|
        """
        return sum(self.component_orders[self.r - 1:])

    def bound(self) -> Fraction:
        return min(self.f, self.h)


def binding_bound_ledger(graph: Graph, k: int, matching: Matching, s: Vertices) -> BindingBoundLedger:
    """
    Build the ledger of a non-extendability certificate. The realised ratios |N(U)| / |U| and |N(W)| / |W| are
    computed on the graph and checked against f and h, so b(G) <= min{f, h} is witnessed by U or W.
    @param graph: The graph
    @param k: The size of the matching
    @param matching: M, a k-matching of the graph
    @param s: S, disjoint from V(M), such that G - V(M) - S has |S| + q factor-critical components with q >= 2 even
    @return: The ledger
    @raise InvalidArgument if (M, S) is not such a certificate
    """
    if len(matching) != k or not matching.host == graph:
        raise InvalidArgument(f"The matching must be a {k}-matching of the graph")

    s = vertex_set(s)
    covered = matching.vertices()
    if set(s) & set(covered):
        raise InvalidArgument("S must be disjoint from V(M)")

    residual = graph.delete_vertices(covered + s)
    components = [residual.original(c) for c in residual.components()
                  if is_factor_critical(residual.induced_subgraph(c))]
    components.sort(key=lambda c: (len(c), c[0]))

    q = len(components) - len(s)
    if q < 2 or q % 2:
        raise InvalidArgument(f"G - V(M) - S has {len(components)} factor-critical components; at least |S| + 2 " +
                              "with an even surplus are required")

    girth = graph.girth()
    g0 = None if is_infinite(girth) else g0_of_girth(girth)
    orders = [len(c) for c in components]
    if g0 is not None:
        assert all(order == 1 or order >= g0 for order in orders), "A factor-critical component is below g0"

    l = sum(1 for order in orders if order == 1)
    r = max(2, l + 1)
    u = vertex_set(v for c in components[1:] for v in c)
    excluded = set(u) | set(s) | set(covered)
    w = vertex_set(v for v in graph.vertices() if v not in excluded)

    tail = sum(orders[r - 1:])
    f = Fraction(2 * k + len(s) + tail, r - 2 + tail)
    h = Fraction(graph.n - len(u), graph.n - 2 * k - len(s) - len(u))

    u_ratio = Fraction(len(graph.neighborhood(u)), len(u))
    w_ratio = Fraction(len(graph.neighborhood(w)), len(w))
    assert u_ratio <= f and w_ratio <= h, "A realised neighbourhood ratio exceeds its ledger bound"

    return BindingBoundLedger(k, g0, len(s), q, components, l, r, u, w, f, h, u_ratio, w_ratio)


def audit_claims(ledger: BindingBoundLedger, eps: Union[Fraction, int, str]) -> Dict[str, bool]:
    """
    Evaluate the four claims that hold for any certificate of a graph with b(G) > (g0 + 1) / g0 + eps.
    component_slack: 2k + s > r - 2
    component_mass: |C_r| + ... + |C_{s+q}| < g0 (2k + s)
    barrier_size: s < s_max
    singleton_count: l < l_max
    @param ledger: The ledger to audit
    @param eps: An exact rational
    @return: Each claim's truth; empty when the claim bounds are undefined (acyclic graph, k = 0, or eps outside
        (0, 1/g0))
    """
    eps = as_rational(eps)
    if ledger.g0 is None or ledger.k < 1 or not 0 < eps < Fraction(1, ledger.g0):
        return {}

    bounds = claim_bounds(ledger.k, ledger.g0, eps)
    return {
        "component_slack": 2 * ledger.k + ledger.s > ledger.r - 2,
        "component_mass": ledger.tail_mass < bounds.sum_bound(ledger.s),
        "barrier_size": ledger.s < bounds.s_max,
        "singleton_count": ledger.l < bounds.l_max
    }
