#########################################################
#                                                       #
#   Reductions                                          #
#                                                       #
#   Properties relating one extendability verdict to    #
#   another, checked wherever the first was verified    #
#                                                       #
#########################################################

from typing import Dict, Iterable, List, Optional, Tuple

from .Checks import CheckContext, CheckResult, not_applicable, skipped
from .Report import RunReport, error_record, graph_record

from ..structures.Exceptions import InvalidArgument, ResourceLimitExceeded
from ..structures.ExtendabilityChecker import ExtendabilityChecker, ExtendabilityVerdict
from ..structures.Graph import Graph
from ..util.JsonEncoding import encode_certificate
from ..util.OutputLogger import OutputLogger


class _Verdicts:
    """
    Memoised verdicts of one graph; None marks a configuration whose preconditions fail.
    """

    def __init__(self, graph: Graph):
        self.checker = ExtendabilityChecker(graph)
        self.cache: Dict[Tuple, Optional[ExtendabilityVerdict]] = {}

    def get(self, kind: str, *args: int) -> Optional[ExtendabilityVerdict]:
        key = (kind, *args)
        if key not in self.cache:
            decide = {"k": self.checker.k_extendable, "nk": self.checker.nk_extendable}[kind]
            try:
                self.cache[key] = decide(*args)
            except InvalidArgument:
                self.cache[key] = None
        return self.cache[key]


def _conclusion(check_id: str, parameters: Dict, verdict: Optional[ExtendabilityVerdict]) -> CheckResult:
    if verdict is None:
        return not_applicable(check_id, "conclusion undefined", parameters)
    certificate = encode_certificate(verdict.certificate) if verdict.certificate is not None else None
    return CheckResult(check_id, True, verdict.holds, parameters, certificate)


def nk_shift(graph: Graph, context: CheckContext, verdicts: Optional[_Verdicts] = None) -> List[CheckResult]:
    """
    An (n,k)-extendable graph with n >= 1 and k >= 2 is (n+2, k-2)-extendable.
    """
    verdicts = verdicts if verdicts is not None else _Verdicts(graph)
    results = []

    for n in context.values("n"):
        for k in context.values("k"):
            if n < 1 or k < 2:
                continue
            parameters = {"n": n, "k": k}
            try:
                antecedent = verdicts.get("nk", n, k)
                if antecedent is None or not antecedent.holds:
                    results.append(not_applicable("nk-shift", f"not ({n},{k})-extendable", parameters))
                    continue
                results.append(_conclusion("nk-shift", parameters, verdicts.get("nk", n + 2, k - 2)))
            except ResourceLimitExceeded:
                results.append(skipped("nk-shift", parameters))

    return results


def edge_deletion(graph: Graph, context: CheckContext, verdicts: Optional[_Verdicts] = None) -> List[CheckResult]:
    """
    If G is k-extendable with k >= 1, then G - e is (k-1)-extendable for every edge e whose deletion keeps G
    connected. The first edge that fails is reported with its certificate.
    """
    verdicts = verdicts if verdicts is not None else _Verdicts(graph)
    results = []

    for k in context.values("k"):
        if k < 1:
            continue
        parameters = {"k": k}
        try:
            antecedent = verdicts.get("k", k)
            if antecedent is None or not antecedent.holds:
                results.append(not_applicable("edge-deletion", f"not {k}-extendable", parameters))
                continue

            result = CheckResult("edge-deletion", True, True, parameters)
            for e in graph.edges:
                reduced = graph.delete_edges([e])
                if not reduced.is_connected():
                    continue
                verdict = ExtendabilityChecker(reduced).k_extendable(k - 1)
                if not verdict.holds:
                    result = CheckResult("edge-deletion", True, False, {**parameters, "edge": list(e)},
                                         encode_certificate(verdict.certificate))
                    break
            results.append(result)
        except ResourceLimitExceeded:
            results.append(skipped("edge-deletion", parameters))

    return results


def monotonicity(graph: Graph, context: CheckContext, verdicts: Optional[_Verdicts] = None) -> List[CheckResult]:
    """
    A k-extendable graph with k >= 1 is (k-1)-extendable.
    """
    verdicts = verdicts if verdicts is not None else _Verdicts(graph)
    results = []

    for k in context.values("k"):
        if k < 1:
            continue
        parameters = {"k": k}
        try:
            antecedent = verdicts.get("k", k)
            if antecedent is None or not antecedent.holds:
                results.append(not_applicable("monotonicity", f"not {k}-extendable", parameters))
                continue
            results.append(_conclusion("monotonicity", parameters, verdicts.get("k", k - 1)))
        except ResourceLimitExceeded:
            results.append(skipped("monotonicity", parameters))

    return results


def reduction_checks(graph: Graph, context: CheckContext) -> List[CheckResult]:
    """
    nk-shift, edge-deletion and monotonicity on one graph, sharing its verdicts.
    """
    verdicts = _Verdicts(graph)
    return nk_shift(graph, context, verdicts) + edge_deletion(graph, context, verdicts) + \
        monotonicity(graph, context, verdicts)


def verify_reductions(corpus: Iterable[Graph], context: Optional[CheckContext] = None,
                      logger: Optional[OutputLogger] = None) -> RunReport:
    """
    Apply the reduction properties to every graph of a corpus.
    @param corpus: The graphs, reported in the order given
    @param context: The k and n values to instantiate the properties with
    @param logger: Receives one detail line per graph
    @return: A RunReport; an empty corpus gives an empty report
    """
    context = context if context is not None else CheckContext()
    logger = logger if logger is not None else OutputLogger()
    report = RunReport(config={"reductions": {name: context.values(name) for name in ("k", "n")}})

    for index, graph in enumerate(corpus):
        logger.detail(f"graph {index}: order {graph.n}, size {graph.size()}")
        try:
            report.graphs.append(graph_record(index, graph, {"family": "corpus"}, reduction_checks(graph, context)))
        except (AssertionError, ArithmeticError, RuntimeError) as e:
            report.errors.append(error_record(index, graph, e))

    logger.result(f"{len(report.graphs)} graphs, {len(report.violations())} violations, {len(report.errors)} errors")
    return report
