#########################################################
#                                                       #
#   Parameters                                          #
#                                                       #
#   Exact binding number and toughness, each with a     #
#   canonically-first optimal witness set               #
#                                                       #
#########################################################

# Witness tie-break, for both parameters: among optimal sets the smallest is reported, and among those of that size
#   the colex-first, which over vertex bitmasks is simply the smallest mask.

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .Connectivity import vertex_connectivity
from .Exceptions import ResourceLimitExceeded, UndefinedParameter
from .Graph import Graph
from .Rational import INFINITY, Rational, rational_str
from .Types import VertexSet

from ..config.settings import Settings
from ..util.helpers import colex_masks, members


@dataclass(frozen=True)
class ParameterWitness:
    value: Rational
    witness: VertexSet

    def __str__(self) -> str:
        return f"{rational_str(self.value)} (witness {list(self.witness)})"


def _guard(graph: Graph, limit: Optional[int], name: str):
    limit = Settings.parameter_vertex_limit if limit is None else limit
    if graph.n > limit:
        raise ResourceLimitExceeded(f"The {name} is computed by subset search; order {graph.n} exceeds {limit}")


################################################################
#                        Binding Number                        #
################################################################

def _subset_tables(graph: Graph):
    """
    Neighbourhood and cardinality of every vertex subset, indexed by bitmask. Both tables are built by doubling:
    the subsets containing vertex i are the subsets without it, with i added.
    @return: (neighbourhood mask of every subset, popcount of every mask)
    """
    dtype = np.int64 if graph.n > 30 else np.int32
    neighbourhood = np.zeros(1, dtype=dtype)
    popcount = np.zeros(1, dtype=np.int8)

    for i in range(graph.n):
        neighbourhood = np.concatenate([neighbourhood, neighbourhood | dtype(graph.masks[i])])
        popcount = np.concatenate([popcount, popcount + 1])

    return neighbourhood, popcount


def binding_number(graph: Graph, limit: Optional[int] = None) -> ParameterWitness:
    """
    The binding number b(G): the minimum of |N(S)| / |S| over nonempty S with N(S) != V(G).
    @param graph: The graph
    @param limit: Largest order accepted; defaults to Settings.parameter_vertex_limit
    @return: The exact value, with the smallest (then colex-first) optimal S
    @raise UndefinedParameter if no set qualifies (fewer than two vertices)
    @raise ResourceLimitExceeded if the order exceeds the limit
    """
    if graph.n < 2:
        raise UndefinedParameter(f"The binding number needs at least two vertices; got {graph.n}")
    _guard(graph, limit, "binding number")

    neighbourhood, popcount = _subset_tables(graph)
    full = (1 << graph.n) - 1
    qualifying = neighbourhood != full
    neighbour_count = popcount[neighbourhood]

    best: Optional[Fraction] = None
    best_size = 0

    for size in range(1, graph.n + 1):
        candidates = qualifying & (popcount == size)
        if not candidates.any():
            continue
        ratio = Fraction(int(neighbour_count[candidates].min()), size)
        if best is None or ratio < best:
            best, best_size = ratio, size

    # Some singleton always qualifies once n >= 2: a vertex is never its own neighbour
    assert best is not None, "No qualifying set for the binding number"

    target = best * best_size
    assert target.denominator == 1
    hits = (popcount == best_size) & qualifying & (neighbour_count == int(target))
    witness = members(int(np.flatnonzero(hits)[0]))
    return ParameterWitness(best, witness)


################################################################
#                           Toughness                          #
################################################################

def _component_count(masks, remaining: int) -> int:
    """
    Number of components of the subgraph induced by the bitmask remaining.
    """
    count = 0
    while remaining:
        frontier = remaining & -remaining
        component = frontier
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            grown = masks[low.bit_length() - 1] & remaining & ~component
            component |= grown
            frontier |= grown
        remaining &= ~component
        count += 1
    return count


def toughness(graph: Graph, limit: Optional[int] = None) -> ParameterWitness:
    """
    The toughness t(G): the minimum of |S| / c(G - S) over vertex cut-sets S. Complete graphs have no cut-set and
    get INFINITY; disconnected graphs get 0, witnessed by the empty set.
    Cut-sets smaller than κ(G) do not exist, and since c(G - S) <= n - |S|, no set of size s can beat s / (n - s);
    both bounds prune the search.
    @param graph: The graph
    @param limit: Largest order accepted; defaults to Settings.parameter_vertex_limit
    @return: The exact value, with the smallest (then colex-first) optimal cut-set
    @raise ResourceLimitExceeded if the order exceeds the limit
    """
    if graph.is_complete():
        return ParameterWitness(INFINITY, ())
    if not graph.is_connected():
        return ParameterWitness(Fraction(0), ())
    _guard(graph, limit, "toughness")

    n = graph.n
    full = (1 << n) - 1
    masks = graph.masks
    best: Optional[Fraction] = None
    witness: VertexSet = ()

    for size in range(vertex_connectivity(graph), n - 1):
        if best is not None and Fraction(size, n - size) >= best:
            break

        for s in colex_masks(n, size):
            components = _component_count(masks, full & ~s)
            if components < 2:
                continue
            ratio = Fraction(size, components)
            if best is None or ratio < best:
                best, witness = ratio, members(s)

    assert best is not None, "A connected non-complete graph has a cut-set"
    return ParameterWitness(best, witness)
