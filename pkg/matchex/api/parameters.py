from typing import Dict, Union

from ..structures.Connectivity import vertex_connectivity
from ..structures.Exceptions import InvalidArgument
from ..structures.Graph import Graph
from ..structures.Parameters import ParameterWitness, binding_number, toughness

PARAMETERS = ["binding", "toughness", "kappa"]


def api_parameter_parse(query: str) -> Dict[str, str]:
    name = query.strip().lower()
    if name not in PARAMETERS:
        raise InvalidArgument(f"Unknown parameter '{query}'; expected one of {', '.join(PARAMETERS)}")
    return {"name": name}


def api_parameter(graph: Graph, name: str) -> Union[ParameterWitness, int]:
    """
    Compute one parameter of a graph exactly.
    @param graph: The graph
    @param name: "binding", "toughness" or "kappa"
    @return: A ParameterWitness for binding number and toughness; κ(G) as an int
    @raise UndefinedParameter for the binding number of a graph with fewer than two vertices
    @raise ResourceLimitExceeded above parameter_vertex_limit vertices
    """
    if name == "binding":
        return binding_number(graph)
    if name == "toughness":
        return toughness(graph)
    if name == "kappa":
        return vertex_connectivity(graph)
    raise InvalidArgument(f"Unknown parameter '{name}'; expected one of {', '.join(PARAMETERS)}")
