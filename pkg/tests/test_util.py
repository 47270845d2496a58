from fractions import Fraction
from itertools import chain, combinations
from typing import Iterator, Optional, Tuple

from matchex.structures.Graph import Graph
from matchex.structures.Rational import INFINITY, Rational

GREEN = '\033[92m'
FAIL = '\033[91m'
END = '\033[0m'


def power_set(variable_list, allow_empty_set=True) -> Iterator[tuple]:
    """
    All subsets of the given items as tuples, by increasing size; the brute-force oracles' subset enumerator.
    """
    p_set = list(variable_list)
    base = 0 if allow_empty_set else 1
    return chain.from_iterable(combinations(p_set, r) for r in range(base, len(p_set) + 1))


def print_test_result(success: bool, msg: str):
    """
    Print a test result to standard out, with a header marking the success of the test
    @param success: bool; True if the test was successful, False otherwise
    @param msg: string; Any arbitrary message returned by the test
    """
    color = GREEN if success else FAIL
    print(f"[{color}{'OK' if success else 'ERROR'}{END}]: {msg}")


def brute_binding_number(graph: Graph) -> Optional[Fraction]:
    """
    min |N(S)| / |S| over every nonempty S with N(S) != V, straight from the definition; None below two vertices.
    """
    best = None
    for s in power_set(graph.vertices(), allow_empty_set=False):
        neighbourhood = graph.neighborhood(s)
        if len(neighbourhood) == graph.n:
            continue
        ratio = Fraction(len(neighbourhood), len(s))
        if best is None or ratio < best:
            best = ratio
    return best if graph.n >= 2 else None


def brute_toughness(graph: Graph) -> Rational:
    """
    min |S| / c(G - S) over every cut-set S, straight from the definition.
    """
    if not graph.is_connected():
        return Fraction(0)

    best = INFINITY
    for s in power_set(graph.vertices(), allow_empty_set=False):
        components = graph.component_count(s)
        if components >= 2:
            ratio = Fraction(len(s), components)
            if ratio < best:
                best = ratio
    return best


def witness_ratio(graph: Graph, s: Tuple[int, ...]) -> Fraction:
    return Fraction(len(graph.neighborhood(s)), len(s))
