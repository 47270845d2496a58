#########################################################
#                                                       #
#   Properties                                          #
#                                                       #
#   Property suites an ensemble can run on every graph  #
#                                                       #
#########################################################

# Each suite takes a graph, its shared GraphFacts, the metadata of where the graph came from, and the run's
#   CheckContext, and returns one or more CheckResults. A suite that hits a resource guard raises
#   ResourceLimitExceeded; the ensemble turns that into a "skipped: guard" result.

from fractions import Fraction
from typing import Any, Callable, Dict, List

from networkx import has_bridges, max_weight_matching

from .Checks import CheckContext, CheckResult, not_applicable
from .Oracles import brute_matching_number, brute_tutte_violator
from .Reductions import reduction_checks

from ..structures.ExtendabilityChecker import ExtendabilityChecker
from ..structures.Exceptions import InvalidArgument, ResourceLimitExceeded
from ..structures.GallaiEdmonds import barrier_certificate, count_fc_components, gallai_edmonds, \
    is_factor_critical, tutte_violator, verify_barrier, verify_tutte
from ..structures.Graph import Graph
from ..structures.MatchingEngine import has_perfect_matching, is_matching, matching_number, max_matching
from ..structures.Rational import is_infinite, rational_str
from ..theorems.Evaluators import SKIPPED_GUARD, GraphFacts, TheoremId, TheoremParameters, evaluate
from ..theorems.ProofLedger import audit_claims, binding_bound_ledger
from ..theorems.ToughnessBound import sharpness_eps_bound, sharpness_hub
from ..util.JsonEncoding import encode_barrier, encode_certificate, encode_ledger, encode_rational, encode_tutte

Suite = Callable[[Graph, GraphFacts, Dict[str, Any], CheckContext], List[CheckResult]]


################################################################
#                      Matchings and Tutte                     #
################################################################

def matching_oracle(graph: Graph, facts: GraphFacts, origin: Dict[str, Any], context: CheckContext) \
        -> List[CheckResult]:
    """
    The blossom matching number equals the exhaustive one and networkx's; the returned matching is a matching.
    """
    nu = matching_number(graph)
    brute = brute_matching_number(graph)
    reference = len(max_weight_matching(graph.to_networkx(), maxcardinality=True))
    valid = is_matching(graph, max_matching(graph).edges)

    details = {"blossom": nu, "exhaustive": brute, "networkx": reference}
    return [CheckResult("matching-oracle", True, nu == brute == reference and valid, details=details)]


def tutte(graph: Graph, facts: GraphFacts, origin: Dict[str, Any], context: CheckContext) -> List[CheckResult]:
    """
    A perfect matching exists exactly when no Tutte set does, both by search and by the decomposition; every Tutte
    set reported verifies.
    """
    perfect = has_perfect_matching(graph)
    found = tutte_violator(graph)
    brute = brute_tutte_violator(graph)

    holds = perfect == (found is None) == (brute is None)
    if found is not None:
        holds = holds and verify_tutte(graph, found)
    if brute is not None:
        holds = holds and verify_tutte(graph, brute)

    certificate = encode_tutte(found) if found is not None else None
    return [CheckResult("tutte", True, holds, certificate=certificate)]


def barrier(graph: Graph, facts: GraphFacts, origin: Dict[str, Any], context: CheckContext) -> List[CheckResult]:
    """
    An even-order graph has a barrier exactly when it has no perfect matching, and the barrier verifies.
    """
    if graph.n % 2:
        return [not_applicable("barrier", "odd order")]

    found = barrier_certificate(graph)
    holds = (found is None) == has_perfect_matching(graph)
    if found is not None:
        holds = holds and verify_barrier(graph, found) and count_fc_components(graph, found.s) >= len(found.s) + 2

    certificate = encode_barrier(found) if found is not None else None
    return [CheckResult("barrier", True, holds, certificate=certificate)]


def gallai_edmonds_invariants(graph: Graph, facts: GraphFacts, origin: Dict[str, Any], context: CheckContext) \
        -> List[CheckResult]:
    """
    D, A and C partition V; A = N(D) - D; every component of G[D] is factor-critical; c(G[D]) - |A| = |V| - 2ν.
    """
    decomposition = gallai_edmonds(graph)
    d, a, c = set(decomposition.d), set(decomposition.a), set(decomposition.c)

    partition = not (d & a or d & c or a & c) and d | a | c == set(graph.vertices())
    neighbours = set(graph.neighborhood(decomposition.d)) - d == a
    critical = all(is_factor_critical(graph.induced_subgraph(comp)) for comp in decomposition.d_components)
    formula = decomposition.deficiency() == graph.n - 2 * matching_number(graph)

    details = {"partition": partition, "a_is_boundary": neighbours, "d_factor_critical": critical,
               "deficiency": formula}
    return [CheckResult("gallai-edmonds", True, partition and neighbours and critical and formula, details=details)]


def factor_critical_bridges(graph: Graph, facts: GraphFacts, origin: Dict[str, Any], context: CheckContext) \
        -> List[CheckResult]:
    """
    A factor-critical graph on three or more vertices is 2-edge-connected.
    """
    if graph.n < 3 or graph.n % 2 == 0 or not is_factor_critical(graph):
        return [not_applicable("factor-critical-bridges", "not a factor-critical graph on 3 or more vertices")]

    return [CheckResult("factor-critical-bridges", True, graph.is_connected() and not has_bridges(graph.to_networkx()))]


################################################################
#                   Parameters and Perfect Matchings           #
################################################################

def _perfect_matching_antecedent(graph: Graph, facts: GraphFacts) -> bool:
    return graph.n >= 2 and graph.n % 2 == 0 and facts.connected


def _perfect_matching_result(check_id: str, graph: Graph) -> CheckResult:
    found = tutte_violator(graph)
    certificate = encode_tutte(found) if found is not None else None
    return CheckResult(check_id, True, found is None, certificate=certificate)


def binding_perfect_matching(graph: Graph, facts: GraphFacts, origin: Dict[str, Any], context: CheckContext) \
        -> List[CheckResult]:
    """
    A connected even-order graph with binding number at least 4/3 has a perfect matching.
    """
    check_id = "binding-perfect-matching"
    if not _perfect_matching_antecedent(graph, facts):
        return [not_applicable(check_id, "not a connected graph of even order")]
    if facts.binding < Fraction(4, 3):
        return [not_applicable(check_id, "binding number below 4/3")]
    return [_perfect_matching_result(check_id, graph)]


def toughness_perfect_matching(graph: Graph, facts: GraphFacts, origin: Dict[str, Any], context: CheckContext) \
        -> List[CheckResult]:
    """
    A connected even-order 1-tough graph has a perfect matching.
    """
    check_id = "toughness-perfect-matching"
    if not _perfect_matching_antecedent(graph, facts):
        return [not_applicable(check_id, "not a connected graph of even order")]
    if facts.toughness < 1:
        return [not_applicable(check_id, "toughness below 1")]
    return [_perfect_matching_result(check_id, graph)]


################################################################
#                        Binding Ledger                        #
################################################################

def binding_ledger(graph: Graph, facts: GraphFacts, origin: Dict[str, Any], context: CheckContext) \
        -> List[CheckResult]:
    """
    For each k with a failing k-matching: the ledger's neighbourhood ratios respect f and h, b(G) <= min{f, h}, and
    at every eps whose binding hypothesis the graph meets, all four claims hold.
    """
    results = []
    checker = ExtendabilityChecker(graph)

    for k in context.values("k"):
        parameters = {"k": k}
        if k < 1:
            continue

        try:
            verdict = checker.k_extendable(k)
        except InvalidArgument as e:
            results.append(not_applicable("binding-ledger", f"precondition: {e}", parameters))
            continue

        if verdict.holds or len(verdict.certificate.required_matching) != k:
            results.append(not_applicable("binding-ledger", "no failing k-matching", parameters))
            continue

        certificate = verdict.certificate
        ledger = binding_bound_ledger(graph, k, certificate.required_matching, certificate.barrier.s)
        holds = ledger.u_ratio <= ledger.f and ledger.w_ratio <= ledger.h and facts.binding <= ledger.bound()

        claims = {}
        if ledger.g0 is not None:
            for eps in context.eps:
                if facts.binding > Fraction(ledger.g0 + 1, ledger.g0) + eps:
                    audited = audit_claims(ledger, eps)
                    claims[rational_str(eps)] = audited
                    holds = holds and all(audited.values())

        details = {"ledger": encode_ledger(ledger), "claims": claims, "binding": encode_rational(facts.binding)}
        results.append(CheckResult("binding-ledger", True, holds, parameters, encode_certificate(certificate),
                                   details=details))

    return results


################################################################
#                          Sharpness                           #
################################################################

def sharpness(graph: Graph, facts: GraphFacts, origin: Dict[str, Any], context: CheckContext) -> List[CheckResult]:
    """
    On a sharpness construction (n, t, r): t(G) = (n + t) / (t + 2), κ(G) = n + t, and when |V| - n is even the graph
    is not n-factor-critical, the first failing n-set lying in the hub.
    """
    if origin.get("family") != "sharpness":
        return [not_applicable("sharpness", "not a sharpness construction")]

    n, t, r = origin["n"], origin["t"], origin["r"]
    parameters = {"n": n, "t": t, "r": r}

    expected = Fraction(n + t, t + 2)
    tough = facts.toughness
    holds = not is_infinite(tough) and tough == expected and facts.kappa == n + t
    details = {"toughness": encode_rational(tough), "kappa": facts.kappa}

    certificate = None
    if (graph.n - n) % 2 == 0:

        # Below the eps bound every hypothesis of the toughness result holds except connectivity
        eps = sharpness_eps_bound(n, t) / 2
        report = evaluate(TheoremId.TOUGHNESS_N_FACTOR_CRITICAL, graph, TheoremParameters(n=n), eps, facts)
        if report.note == SKIPPED_GUARD:
            raise ResourceLimitExceeded(f"sharpness ({n}, {t}, {r}) is past a resource guard")

        missed = [h.name for h in report.hypotheses if not h.satisfied]
        details["eps"] = encode_rational(eps)
        details["missed_hypotheses"] = missed

        hub = set(sharpness_hub(n, t))
        holds = holds and missed == ["connectivity strictly above"] and report.conclusion_checked is False
        if report.certificate is not None:
            holds = holds and set(report.certificate.removed_vertices) <= hub
            certificate = encode_certificate(report.certificate)

    return [CheckResult("sharpness", True, holds, parameters, certificate, details=details)]


################################################################
#                          Reductions                          #
################################################################

def reductions(graph: Graph, facts: GraphFacts, origin: Dict[str, Any], context: CheckContext) -> List[CheckResult]:
    return reduction_checks(graph, context)


PROPERTY_SUITES: Dict[str, Suite] = {
    "matching-oracle": matching_oracle,
    "tutte": tutte,
    "barrier": barrier,
    "gallai-edmonds": gallai_edmonds_invariants,
    "factor-critical-bridges": factor_critical_bridges,
    "binding-perfect-matching": binding_perfect_matching,
    "toughness-perfect-matching": toughness_perfect_matching,
    "binding-ledger": binding_ledger,
    "sharpness": sharpness,
    "reductions": reductions
}
