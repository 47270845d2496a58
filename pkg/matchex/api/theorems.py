from typing import Any, Dict, Union

from ..structures.Exceptions import InvalidArgument
from ..structures.Graph import Graph
from ..structures.Rational import parse_rational
from ..theorems.Evaluators import TheoremId, TheoremParameters, TheoremReport, evaluate


def api_theorem_parse(query: str) -> Dict[str, Any]:
    """
    Parse a theorem query.
    @param query: A string of the form "<id> eps=P/Q k=K n=N m=M girth=G", any of the integers omitted; the id may be
        the descriptive id or its numeric alias
    @return: A dictionary mapping "theorem_id", "params" and "eps"
    @raise InvalidArgument on an unknown id, a missing eps, or a malformed assignment
    """
    words = query.split()
    if not words:
        raise InvalidArgument("Expected a theorem id")

    theorem = TheoremId.parse(words[0])
    eps, params = None, {}

    for word in words[1:]:
        if "=" not in word:
            raise InvalidArgument(f"Expected name=value, got '{word}'")
        name, value = word.split("=", 1)
        if name == "eps":
            try:
                eps = parse_rational(value)
            except ValueError as e:
                raise InvalidArgument(str(e))
        elif name in ("k", "n", "m", "girth") and value.isdigit():
            params[name] = int(value)
        else:
            raise InvalidArgument(f"Unknown or malformed assignment '{word}'")

    if eps is None:
        raise InvalidArgument("eps=P/Q is required")

    return {
        "theorem_id": theorem,
        "params": TheoremParameters(**params),
        "eps": eps
    }


def api_theorem(graph: Graph, theorem_id: Union[TheoremId, str], params: TheoremParameters, eps) -> TheoremReport:
    """
    Evaluate a theorem's hypotheses on a graph and decide its conclusion where the guards allow.
    @raise InvalidArgument on a wrong parameter bundle or a non-positive eps
    """
    return evaluate(theorem_id, graph, params, eps)
