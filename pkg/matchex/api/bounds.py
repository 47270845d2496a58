from typing import Any, Dict

from ..structures.Exceptions import InvalidArgument
from ..structures.Rational import parse_rational
from ..theorems.ProofLedger import ProofBounds, claim_bounds, g0_of_girth


def api_bounds_parse(query: str) -> Dict[str, Any]:
    """
    Parse a bounds query of the form "k=K girth=G eps=P/Q".
    @raise InvalidArgument if an assignment is missing or malformed
    """
    values = {}
    for word in query.split():
        name, _, value = word.partition("=")
        if name not in ("k", "girth", "eps") or not value:
            raise InvalidArgument(f"Expected k=K, girth=G and eps=P/Q, got '{word}'")
        values[name] = value

    missing = [name for name in ("k", "girth", "eps") if name not in values]
    if missing:
        raise InvalidArgument(f"Missing {', '.join(missing)}")

    try:
        return {"k": int(values["k"]), "girth": int(values["girth"]), "eps": parse_rational(values["eps"])}
    except ValueError as e:
        raise InvalidArgument(str(e))


def api_bounds(k: int, girth: int, eps) -> ProofBounds:
    """
    The claim bounds s_max and l_max and the order threshold of the binding-number bound for k-extendability.
    @param k: The matching size, k >= 1
    @param girth: The girth g >= 3; the bounds use g0 = 2 floor(g / 2) + 1
    @param eps: An exact rational, 0 < eps < 1/g0
    @raise InvalidArgument outside those ranges
    """
    return claim_bounds(k, g0_of_girth(girth), eps)
