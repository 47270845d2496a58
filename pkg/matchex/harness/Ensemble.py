#########################################################
#                                                       #
#   Ensemble                                            #
#                                                       #
#   Seeded random ensembles of graphs, every check run  #
#   on each, and the resulting report                   #
#                                                       #
#########################################################

from itertools import product
from multiprocessing import Pool
from time import perf_counter
from typing import Any, Dict, List, Tuple

from numpy.random import Generator, PCG64

from .Checks import CheckContext, CheckResult, from_report, skipped
from .EnsembleConfig import EnsembleConfig, GuardOverride, apply_guards
from .Properties import PROPERTY_SUITES
from .Report import RunReport, error_record, graph_record, persist_counterexamples
from .Seeds import graph_seed, sub_seed

from ..structures.Exceptions import MatchingException, ResourceLimitExceeded
from ..structures.Generators import complete, complete_bipartite, cycle, path, petersen, random_graph, random_regular, \
    star
from ..structures.Graph import Graph
from ..structures.Rational import rational_str
from ..theorems.Evaluators import REQUIRED_PARAMETERS, BINDING_THEOREMS, GraphFacts, TheoremId, TheoremParameters, \
    evaluate
from ..theorems.ToughnessBound import sharpness_construction
from ..util.JsonEncoding import encode_rational
from ..util.OutputLogger import OutputLogger

Unit = Tuple[int, Graph, Dict[str, Any]]


################################################################
#                        Graph Generation                      #
################################################################

def _random_unit(config: EnsembleConfig, index: int) -> Unit:
    """
    The index-th graph of a gnp or random_regular ensemble. Its order, probability or degree, and edges are drawn from
    separate sub-seeds of its own seed.
    """
    seed = graph_seed(config.seed, index)
    rng = Generator(PCG64(sub_seed(seed, 0)))

    if config.model == "gnp":
        low, high = config.orders
        n = int(rng.integers(low, high + 1))
        probabilities = config.probabilities()
        p = probabilities[int(rng.integers(len(probabilities)))]
        graph = random_graph(n, p, sub_seed(seed, 1))
        return index, graph, {"family": "gnp", "p": rational_str(p), "seed": seed}

    pairs = config.regular_pairs()
    n, d = pairs[int(rng.integers(len(pairs)))]
    graph = random_regular(n, d, sub_seed(seed, 1))
    return index, graph, {"family": "random_regular", "degree": d, "seed": seed}


def generator_grid(orders: Tuple[int, int]) -> List[Tuple[Graph, Dict[str, Any]]]:
    """
    Every deterministic family graph whose order lies in the range: cycles, complete graphs, paths, stars, complete
    bipartite graphs, the Petersen graph, and the sharpness constructions with n in 3..6, t in 1..3, r in 1..5.
    """
    low, high = orders
    grid = []

    for n in range(max(low, 1), high + 1):
        if n >= 3:
            grid.append((cycle(n), {"family": "cycle", "order": n}))
        grid.append((complete(n), {"family": "complete", "order": n}))
        grid.append((path(n), {"family": "path", "order": n}))
        if n >= 2:
            grid.append((star(n - 1), {"family": "star", "order": n}))
        for a in range(1, n // 2 + 1):
            grid.append((complete_bipartite(a, n - a), {"family": "complete_bipartite", "a": a, "b": n - a}))

    if low <= 10 <= high:
        grid.append((petersen(), {"family": "petersen", "order": 10}))

    for n, t, r in product(range(3, 7), range(1, 4), range(1, 6)):
        if low <= n + 2 * t + 1 + r <= high:
            grid.append((sharpness_construction(n, t, r), {"family": "sharpness", "n": n, "t": t, "r": r}))

    return grid


def ensemble_units(config: EnsembleConfig) -> List[Unit]:
    """
    The graphs of a run in index order. A generator grid is run once in full; samples counts the random graphs.
    """
    if config.model == "generator_grid":
        return [(index, graph, origin) for index, (graph, origin) in enumerate(generator_grid(config.orders))]
    return [_random_unit(config, index) for index in range(config.samples)]


################################################################
#                           Checking                           #
################################################################

def _theorem_checks(theorem: TheoremId, graph: Graph, facts: GraphFacts, context: CheckContext) -> List[CheckResult]:
    """
    One report per eps and per combination of the theorem's parameters.
    """
    names = REQUIRED_PARAMETERS[theorem]
    minimum = 1 if theorem in BINDING_THEOREMS else 0
    results = []

    for eps in context.eps:
        for values in product(*[context.values(name) for name in names]):
            if any(v < minimum for v in values):
                continue
            chosen = dict(zip(names, values))
            report = evaluate(theorem, graph, TheoremParameters(**chosen), eps, facts)
            results.append(from_report(report, {**chosen, "eps": encode_rational(eps)}))

    return results


def check_graph(graph: Graph, origin: Dict[str, Any], checks: List[str], context: CheckContext) -> List[CheckResult]:
    """
    Run every named check on a graph. A property suite past a guard becomes a single "skipped: guard" result.
    """
    facts = GraphFacts(graph)
    results = []

    for check in checks:
        if check in PROPERTY_SUITES:
            try:
                results.extend(PROPERTY_SUITES[check](graph, facts, origin, context))
            except ResourceLimitExceeded:
                results.append(skipped(check))
        else:
            results.extend(_theorem_checks(TheoremId.parse(check), graph, facts, context))

    return results


def _run_unit(unit: Unit, checks: List[str], context: CheckContext) -> Dict[str, Any]:
    index, graph, origin = unit
    try:
        return graph_record(index, graph, origin, check_graph(graph, origin, checks, context))
    except (MatchingException, AssertionError, ArithmeticError, RuntimeError, ValueError) as e:
        return error_record(index, graph, e)


def _run_unit_star(args) -> Dict[str, Any]:
    return _run_unit(*args)


################################################################
#                             Runs                             #
################################################################

def run_ensemble(config: EnsembleConfig, logger: OutputLogger = None, persist: bool = True) -> RunReport:
    """
    Generate the ensemble of a config and run its checks on every graph, across config.workers processes. Records are
    assembled in graph index order whatever order the workers finish in, so a fixed config yields the same report.
    @param config: The run configuration
    @param logger: Receives a detail line per graph and a result line for the summary
    @param persist: Write counterexamples, if any, to the config's counterexample directory
    @return: The RunReport
    """
    logger = logger if logger is not None else OutputLogger()
    start = perf_counter()

    units = ensemble_units(config)
    context = config.context()
    logger.detail(f"{config.model}: {len(units)} graphs, checks {', '.join(config.checks) or 'none'}")

    work = [(unit, config.checks, context) for unit in units]
    with GuardOverride(config.guards):
        if config.workers > 1 and len(work) > 1:
            with Pool(config.workers, initializer=apply_guards, initargs=(config.guards,)) as pool:
                records = pool.map(_run_unit_star, work)
        else:
            records = [_run_unit_star(args) for args in work]

    report = RunReport(config=config.to_dict())
    for record in records:
        if "error" in record:
            report.errors.append(record)
            logger.detail(f"graph {record['index']}: {record['error']}")
        else:
            report.graphs.append(record)

    if config.record_timing:
        report.timing = int((perf_counter() - start) * 1000)

    summary = report.summary()
    logger.result(f"{summary['graphs']} graphs, {summary['violations']} violations, {summary['errors']} errors")

    if persist:
        written = persist_counterexamples(report, config.counterexample_directory)
        if written is not None:
            logger.result(f"Counterexamples written to {written}")

    return report
