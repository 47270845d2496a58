from os.path import dirname, abspath
from pathlib import Path
from yaml import safe_load as load

from matchex.structures.Exceptions import InvalidArgument
from matchex.structures.ExtendabilityChecker import replay_certificate
from matchex.structures.Graph import Graph
from matchex.structures.Rational import parse_rational
from matchex.theorems.Evaluators import TheoremParameters, evaluate
from matchex.util.Graph6 import from_graph6
from matchex.util.GraphLoader import load_graph

from ..test_util import print_test_result

test_file_directory = Path(dirname(abspath(__file__))) / "test_files"


def theorem_validation(graph: Graph, test: dict) -> (bool, str):
    """
    Validate one theorem report against a graph.
    @param graph: The graph under test
    @param test: a dictionary { "id": string, "eps": "P/Q", "params": {k, n, m, girth}, "expect": ... }. "expect" is
        "invalid" (the parameter bundle or eps is rejected), or { "applicable": bool, "holds": bool | null } with an
        optional "toughness_bound": "P/Q".
    @return: True if the report matches, False otherwise, as well as a string message summary.
    """
    theorem_id, expect = test["id"], test["expect"]
    label = f"{theorem_id} eps={test['eps']} {test['params']}"

    try:
        report = evaluate(theorem_id, graph, TheoremParameters(**test["params"]), parse_rational(str(test["eps"])))

    except InvalidArgument as e:
        if expect != "invalid":     # coverage: skip
            return False, f"{label}: unexpected InvalidArgument: {e}"
        return True, f"{label} rejected"

    if expect == "invalid":     # coverage: skip
        return False, f"{label}: evaluated, expected it to be rejected"

    if report.applicable != expect["applicable"]:   # coverage: skip
        failed = [h.name for h in report.hypotheses if not h.satisfied]
        return False, f"{label}: applicable = {report.applicable}, expected {expect['applicable']} (failed: {failed})"

    if report.conclusion_checked != expect["holds"]:    # coverage: skip
        return False, f"{label}: conclusion {report.conclusion_checked}, expected {expect['holds']}"

    if report.violation:    # coverage: skip
        return False, f"{label}: applicable, yet the conclusion fails"

    if report.certificate is not None and not replay_certificate(graph, report.certificate):    # coverage: skip
        return False, f"{label}: the certificate does not replay"

    if "toughness_bound" in expect and report.toughness_bound != parse_rational(expect["toughness_bound"]):
        return False, f"{label}: toughness bound {report.toughness_bound}, expected {expect['toughness_bound']}"

    return True, f"{label} passed"


def theorem_tests(graph_location: Path) -> (bool, str):
    """
    Run the theorem tests; each test names a graph either by a file in graph_location or by a graph6 string.
    @param graph_location: a directory containing graph files
    @return: True if all tests are successful, False otherwise
    """

    files = sorted(list(filter(lambda x: x.suffix.lower() == ".yml", test_file_directory.iterdir())))
    assert len(files) > 0, f"Found no theorem module tests"

    all_successful = True

    for test_file in files:

        with test_file.open("r") as f:
            yml_test_data = load(f)

        for test in yml_test_data["tests"]:

            if "graph_filename" in test:
                graph = load_graph(graph_location / test["graph_filename"])
            else:
                graph = from_graph6(test["graph6"])

            success, msg = theorem_validation(graph, test)
            print_test_result(success, f"{test_file.name}: {msg}")

            if not success:     # coverage: skip
                all_successful = False

    return all_successful, "[Theorem module passed]" if all_successful else "[Theorem module encountered errors]"
