#########################################################
#                                                       #
#   Generators                                          #
#                                                       #
#   Standard graphs with canonical labelings, graph     #
#   operations, and seeded random models                #
#                                                       #
#########################################################

from fractions import Fraction
from itertools import combinations
from typing import Union

import networkx as nx
import numpy as np

from .Exceptions import InvalidArgument
from .Graph import Graph
from .Rational import as_rational


def empty(n: int) -> Graph:
    """
    The edgeless graph on n vertices, nK1.
    """
    return Graph(n, ())


def complete(n: int) -> Graph:
    """
    The complete graph K_n.
    """
    return Graph(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    """
    The cycle C_n with edges {i, i+1 mod n}.
    @raise InvalidArgument if n < 3
    """
    if n < 3:
        raise InvalidArgument(f"A cycle needs at least 3 vertices, got {n}")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    """
    The path P_n with edges {i, i+1}.
    """
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Graph:
    """
    The star K_{1,leaves}; vertex 0 is the centre.
    """
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite(a: int, b: int) -> Graph:
    """
    K_{a,b}; vertices 0..a-1 on one side, a..a+b-1 on the other.
    """
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def petersen() -> Graph:
    """
    The Petersen graph, labelled as networkx labels it: outer 5-cycle 0..4, spokes i - i+5, inner pentagram.
    """
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """
    G1 ∪ G2; the vertices of G2 are shifted by |V(G1)|.
    """
    shift = g1.n
    return Graph(g1.n + g2.n, list(g1.edges) + [(u + shift, v + shift) for u, v in g2.edges])


def join(g1: Graph, g2: Graph) -> Graph:
    """
    G1 + G2, the disjoint union plus every edge between V(G1) and V(G2); the vertices of G2 are shifted by |V(G1)|.
    """
    union = disjoint_union(g1, g2)
    cross = [(u, g1.n + v) for u in range(g1.n) for v in range(g2.n)]
    return Graph(union.n, list(union.edges) + cross)


def random_graph(n: int, p: Union[Fraction, int, str], seed: int) -> Graph:
    """
    An Erdős–Rényi sample G(n, p). Each vertex pair, in the order (0,1), (0,2), ..., (n-2,n-1), gets one integer draw
    d uniform in [0, q) from a PCG64 stream seeded with seed, and becomes an edge iff d < p' where p = p'/q in lowest
    terms. The same (n, p, seed) always gives the same graph, and p = 0 or p = 1 are exact.
    @param n: The order
    @param p: The exact edge probability, 0 <= p <= 1
    @param seed: A non-negative integer seed (reduced modulo 2^64)
    @return: The sampled Graph
    @raise InvalidArgument if p is outside [0, 1]
    """
    p = as_rational(p)
    if not 0 <= p <= 1:
        raise InvalidArgument(f"Edge probability must lie in [0, 1], got {p}")

    pairs = list(combinations(range(n), 2))
    if not pairs:
        return empty(n)

    rng = np.random.Generator(np.random.PCG64(seed % 2 ** 64))
    draws = rng.integers(0, p.denominator, size=len(pairs), dtype=np.int64)
    return Graph(n, (pair for pair, d in zip(pairs, draws) if d < p.numerator))


def random_regular(n: int, d: int, seed: int) -> Graph:
    """
    A uniformly random d-regular graph on n vertices (networkx pairing model).
    @raise InvalidArgument if n * d is odd or d >= n
    """
    if (n * d) % 2 or not 0 <= d < n:
        raise InvalidArgument(f"No {d}-regular graph on {n} vertices")

    g = nx.random_regular_graph(d, n, seed=seed % 2 ** 32)
    return Graph(n, g.edges())
