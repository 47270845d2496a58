from typing import Any, Dict, Optional, Sequence

from ..structures.Exceptions import InvalidArgument
from ..structures.ExtendabilityChecker import ExtendabilityChecker, ExtendabilityVerdict
from ..structures.Graph import Graph

# Each property with the number of integers it takes
PROPERTIES = {
    "k": 1,
    "nfc": 1,
    "nk": 2,
    "emn": 2
}


def api_extend_parse(query: str) -> Dict[str, Any]:
    """
    Parse an extendability query.
    @param query: A string of the form "k 2", "nfc 1", "nk 1 2" or "emn 1 1", optionally followed by "strict"
    @return: A dictionary mapping "prop", "values" and "strict_disjoint"
    @raise InvalidArgument on an unknown property or the wrong number of integers
    """
    words = query.split()
    strict = "strict" in words
    words = [w for w in words if w != "strict"]

    if not words or words[0].lower() not in PROPERTIES:
        raise InvalidArgument(f"Expected one of {', '.join(PROPERTIES)} followed by its integers, got '{query}'")

    prop = words[0].lower()
    if len(words) - 1 != PROPERTIES[prop] or not all(w.isdigit() for w in words[1:]):
        raise InvalidArgument(f"'{prop}' takes {PROPERTIES[prop]} non-negative integer(s), got '{query}'")

    return {
        "prop": prop,
        "values": [int(w) for w in words[1:]],
        "strict_disjoint": True if strict else None
    }


def api_extend(graph: Graph, prop: str, values: Sequence[int],
               strict_disjoint: Optional[bool] = None) -> ExtendabilityVerdict:
    """
    Decide an extendability property of a graph.
    @param graph: The graph
    @param prop: "k" (k-extendable), "nfc" (n-factor-critical), "nk" ((n,k)-extendable) or "emn" (E(m,n)-extendable)
    @param values: The property's integers, in the order named
    @param strict_disjoint: For "emn" only; require M and N to share no vertex; None defers to Settings.strict_disjoint
    @return: The verdict, with the canonically first failing configuration as certificate if it fails
    @raise InvalidArgument if the property's preconditions fail
    @raise ResourceLimitExceeded if the search passes its guard
    """
    checker = ExtendabilityChecker(graph)

    if prop == "k":
        return checker.k_extendable(*values)
    if prop == "nfc":
        return checker.n_factor_critical(*values)
    if prop == "nk":
        return checker.nk_extendable(*values)
    if prop == "emn":
        return checker.emn_extendable(*values, strict_disjoint=strict_disjoint)

    raise InvalidArgument(f"Unknown extendability property '{prop}'")
