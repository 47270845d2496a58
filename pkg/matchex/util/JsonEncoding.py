#########################################################
#                                                       #
#   JSON Encoding                                       #
#                                                       #
#   Exact, float-free JSON forms of parameters,         #
#   certificates and reports                            #
#                                                       #
#########################################################

# Rationals are {"num": p, "den": q} in lowest terms and +infinity is the string "inf"; vertex sets are sorted lists
#   and edges [u, v] pairs with u < v. Output is produced with sorted keys so equal inputs give identical bytes.

from fractions import Fraction
from json import dumps as json_dumps
from typing import Any, Dict, List, Optional, Union

from .Graph6 import to_graph6

from ..structures.Exceptions import InvalidArgument
from ..structures.ExtendabilityChecker import ExtendabilityCertificate, ExtendabilityVerdict
from ..structures.GallaiEdmonds import BarrierCertificate, GallaiEdmonds, TutteCertificate
from ..structures.Graph import Graph
from ..structures.MatchingEngine import Matching
from ..structures.Parameters import ParameterWitness
from ..structures.Rational import INFINITY, Rational, is_infinite
from ..structures.Types import vertex_set

from ..theorems.Evaluators import TheoremReport
from ..theorems.ProofLedger import BindingBoundLedger, ProofBounds


def dumps(value: Any, indent: Optional[int] = None) -> str:
    return json_dumps(value, sort_keys=True, indent=indent)


################################################################
#                       Values and Sets                        #
################################################################

def encode_rational(value: Rational) -> Union[str, Dict[str, int]]:
    if is_infinite(value):
        return "inf"
    value = Fraction(value)
    return {"num": value.numerator, "den": value.denominator}


def decode_rational(data: Union[str, Dict[str, int]]) -> Rational:
    """
    @raise InvalidArgument on anything but "inf" or a {num, den} pair with a nonzero den
    """
    if data == "inf":
        return INFINITY
    try:
        return Fraction(int(data["num"]), int(data["den"]))
    except (KeyError, TypeError, ValueError, ZeroDivisionError):
        raise InvalidArgument(f"Not an encoded rational: {data!r}")


def encode_value(value: Any) -> Any:
    """
    Hypothesis values may be ints, bools, rationals or missing.
    """
    if isinstance(value, bool) or value is None or isinstance(value, int):
        return value
    return encode_rational(value)


def encode_edges(edges) -> List[List[int]]:
    return [[u, v] for u, v in edges]


def encode_witness(witness: ParameterWitness) -> Union[str, Dict[str, Any]]:
    """
    {num, den, witness}, or "inf" for the toughness of a complete graph.
    """
    if is_infinite(witness.value):
        return "inf"
    return {**encode_rational(witness.value), "witness": list(witness.witness)}


################################################################
#                        Certificates                          #
################################################################

def encode_barrier(barrier: BarrierCertificate) -> Dict[str, Any]:
    return {"s": list(barrier.s), "fc_components": [list(c) for c in barrier.fc_components]}


def decode_barrier(data: Dict[str, Any]) -> BarrierCertificate:
    return BarrierCertificate(vertex_set(data["s"]), [vertex_set(c) for c in data["fc_components"]])


def encode_tutte(certificate: TutteCertificate) -> Dict[str, Any]:
    return {"s": list(certificate.s), "odd_components": [list(c) for c in certificate.odd_components]}


def encode_certificate(certificate: ExtendabilityCertificate) -> Dict[str, Any]:
    return {
        "removed_vertices": list(certificate.removed_vertices),
        "required_matching": encode_edges(certificate.required_matching),
        "forbidden_edges": encode_edges(certificate.forbidden_edges),
        "barrier": encode_barrier(certificate.barrier)
    }


def decode_certificate(graph: Graph, data: Dict[str, Any]) -> ExtendabilityCertificate:
    """
    Rebuild a certificate of a graph from its JSON form.
    @raise InvalidArgument if a field is missing or the matching is not a matching of the graph
    """
    try:
        return ExtendabilityCertificate(
            vertex_set(data["removed_vertices"]),
            Matching(graph, data["required_matching"]),
            tuple(sorted((min(u, v), max(u, v)) for u, v in data["forbidden_edges"])),
            decode_barrier(data["barrier"])
        )
    except (KeyError, TypeError, ValueError) as e:
        raise InvalidArgument(f"Malformed certificate: {e}")


def encode_verdict(verdict: ExtendabilityVerdict) -> Dict[str, Any]:
    encoded = {"holds": verdict.holds, "checked_count": verdict.checked_count}
    if verdict.certificate is not None:
        encoded["certificate"] = encode_certificate(verdict.certificate)
    return encoded


################################################################
#                      Structures and Graphs                   #
################################################################

def encode_decomposition(decomposition: GallaiEdmonds) -> Dict[str, Any]:
    return {
        "d": list(decomposition.d),
        "a": list(decomposition.a),
        "c": list(decomposition.c),
        "d_components": [list(c) for c in decomposition.d_components],
        "deficiency": decomposition.deficiency()
    }


def encode_graph(graph: Graph) -> Dict[str, Any]:
    return {"graph6": to_graph6(graph), "order": graph.n, "size": graph.size()}


################################################################
#                           Theorems                           #
################################################################

def encode_report(report: TheoremReport) -> Dict[str, Any]:
    """
    A theorem check: id, applicable, holds (the observed conclusion, null if undecided), and the hypotheses.
    """
    encoded = {
        "id": report.theorem_id.value,
        "applicable": report.applicable,
        "holds": report.conclusion_checked,
        "hypotheses": [{
            "name": h.name,
            "required": encode_value(h.required),
            "observed": encode_value(h.observed),
            "satisfied": h.satisfied
        } for h in report.hypotheses]
    }
    if report.certificate is not None:
        encoded["certificate"] = encode_certificate(report.certificate)
    if report.toughness_bound is not None:
        encoded["toughness_bound"] = encode_rational(report.toughness_bound)
    if report.note is not None:
        encoded["note"] = report.note
    return encoded


def encode_ledger(ledger: BindingBoundLedger) -> Dict[str, Any]:
    return {
        "k": ledger.k,
        "g0": ledger.g0,
        "s": ledger.s,
        "q": ledger.q,
        "component_orders": ledger.component_orders,
        "l": ledger.l,
        "r": ledger.r,
        "u": list(ledger.u),
        "w": list(ledger.w),
        "f": encode_rational(ledger.f),
        "h": encode_rational(ledger.h),
        "u_ratio": encode_rational(ledger.u_ratio),
        "w_ratio": encode_rational(ledger.w_ratio)
    }


def encode_bounds(bounds: ProofBounds) -> Dict[str, Any]:
    return {
        "k": bounds.k,
        "g0": bounds.g0,
        "eps": encode_rational(bounds.eps),
        "s_max": encode_rational(bounds.s_max),
        "l_max": encode_rational(bounds.l_max),
        "threshold": bounds.n
    }
