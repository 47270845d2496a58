from typing import Any, Dict

from ..structures.Exceptions import ResourceLimitExceeded, UndefinedParameter
from ..structures.GallaiEdmonds import gallai_edmonds
from ..structures.Graph import Graph
from ..structures.MatchingEngine import matching_number
from ..theorems.Evaluators import GraphFacts
from ..util.JsonEncoding import encode_decomposition, encode_graph, encode_witness


def api_analyze(graph: Graph) -> Dict[str, Any]:
    """
    Summarise a graph: its order and size, connectivity, girth, matching number, binding number and toughness with
    witnesses, and its Gallai-Edmonds decomposition.
    @param graph: The graph to analyze
    @return: A JSON-ready dictionary; a parameter past its guard, or undefined, is null
    """
    facts = GraphFacts(graph)
    girth = graph.girth()

    def guarded(compute):
        try:
            return compute()
        except (ResourceLimitExceeded, UndefinedParameter):
            return None

    binding = guarded(lambda: facts.binding_witness)
    toughness = guarded(lambda: facts.toughness_witness)

    return {
        **encode_graph(graph),
        "connected": facts.connected,
        "girth": girth if isinstance(girth, int) else "inf",
        "matching_number": matching_number(graph),
        "kappa": guarded(lambda: facts.kappa),
        "binding": encode_witness(binding) if binding is not None else None,
        "toughness": encode_witness(toughness) if toughness is not None else None,
        "gallai_edmonds": encode_decomposition(gallai_edmonds(graph))
    }
