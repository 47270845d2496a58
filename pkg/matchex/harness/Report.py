#########################################################
#                                                       #
#   Report                                              #
#                                                       #
#   Run reports, their JSON form, and the persisted     #
#   counterexample corpus                               #
#                                                       #
#########################################################

from dataclasses import dataclass, field
from json import load as json_load
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Tuple, Union

from .Checks import CheckResult

from ..config.settings import Settings
from ..structures.Exceptions import InvalidArgument, ResourceLimitExceeded
from ..structures.ExtendabilityChecker import replay_certificate
from ..structures.GallaiEdmonds import TutteCertificate, verify_barrier, verify_tutte
from ..structures.Graph import Graph
from ..structures.Rational import is_infinite
from ..structures.Types import vertex_set
from ..theorems.Evaluators import GraphFacts
from ..util.Graph6 import from_graph6, to_graph6
from ..util.JsonEncoding import decode_barrier, decode_certificate, dumps, encode_witness

SCHEMA = 1

COUNTEREXAMPLE_GRAPHS = "counterexamples.g6"
COUNTEREXAMPLE_CERTIFICATES = "counterexamples.json"


def _guarded(compute: Callable[[], Any]) -> Any:
    """
    A parameter of the graph record, or None past its guard.
    """
    try:
        return compute()
    except ResourceLimitExceeded:
        return None


def graph_record(index: int, graph: Graph, origin: Dict[str, Any], checks: List[CheckResult],
                 facts: Optional[GraphFacts] = None) -> Dict[str, Any]:
    """
    The JSON record of one graph: graph6, order, girth, kappa, binding and toughness with witnesses, where it came
    from, and every check run on it. A parameter past its guard is null.
    """
    facts = facts if facts is not None else GraphFacts(graph)
    girth = graph.girth()

    binding = _guarded(lambda: facts.binding_witness)
    toughness = _guarded(lambda: facts.toughness_witness)

    return {
        "index": index,
        "graph6": to_graph6(graph),
        "order": graph.n,
        "size": graph.size(),
        "girth": "inf" if is_infinite(girth) else girth,
        "kappa": _guarded(lambda: facts.kappa),
        "binding": encode_witness(binding) if binding is not None else None,
        "toughness": encode_witness(toughness) if toughness is not None else None,
        "origin": origin,
        "checks": [check.to_dict() for check in checks]
    }


def error_record(index: int, graph: Graph, error: BaseException) -> Dict[str, Any]:
    return {"index": index, "graph6": to_graph6(graph), "error": f"{type(error).__name__}: {error}"}


def _is_violation(check: Dict[str, Any]) -> bool:
    return check["applicable"] and check["holds"] is False


@dataclass
class RunReport:
    """
    The outcome of a run: its configuration, one record per graph in index order, and the graphs whose checks raised
    an unexpected error. timing (milliseconds) is only present when asked for, so reports are otherwise
    byte-identical across runs.
    """
    config: Dict[str, Any] = field(default_factory=dict)
    graphs: List[Dict[str, Any]] = field(default_factory=list)
    errors: List[Dict[str, Any]] = field(default_factory=list)
    timing: Optional[int] = None

    def violations(self) -> List[Dict[str, Any]]:
        """
        Every applicable check whose conclusion was observed to fail, with the graph it failed on.
        """
        found = []
        for record in self.graphs:
            for check in record["checks"]:
                if _is_violation(check):
                    found.append({"index": record["index"], "graph6": record["graph6"], "id": check["id"],
                                  "parameters": check.get("parameters", {})})
        return found

    def summary(self) -> Dict[str, Any]:
        checks = {}
        for record in self.graphs:
            for check in record["checks"]:
                counts = checks.setdefault(check["id"], {"total": 0, "applicable": 0, "holds": 0, "violations": 0,
                                                         "skipped": 0})
                counts["total"] += 1
                if check["applicable"]:
                    counts["applicable"] += 1
                    if check["holds"] is True:
                        counts["holds"] += 1
                    elif check["holds"] is False:
                        counts["violations"] += 1
                if check.get("note") == "skipped: guard":
                    counts["skipped"] += 1

        summary = {
            "graphs": len(self.graphs),
            "errors": len(self.errors),
            "violations": sum(c["violations"] for c in checks.values()),
            "checks": checks
        }
        if self.timing is not None:
            summary["timing_ms"] = self.timing
        return summary

    def exit_code(self) -> int:
        """
        0 with no violations and no errors; 2 with violations; 1 with errors only.
        """
        if self.violations():
            return 2
        if self.errors:
            return 1
        return 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA,
            "config": self.config,
            "graphs": self.graphs,
            "errors": self.errors,
            "violations": self.violations(),
            "summary": self.summary()
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return dumps(self.to_dict(), indent=Settings.json_indent if indent is None else indent)


################################################################
#                      Counterexample Corpus                   #
################################################################

def persist_counterexamples(report: RunReport, directory: Union[str, Path, None] = None) -> Optional[Path]:
    """
    Write every graph with a violation to <directory>/counterexamples.g6, one graph6 line each, and the violating
    checks with their certificates to <directory>/counterexamples.json. Nothing is written without violations.
    @param report: The run report
    @param directory: Where to write; defaults to Settings.counterexample_directory
    @return: The directory written to, or None
    """
    entries = []
    for record in report.graphs:
        violating = [check for check in record["checks"] if _is_violation(check)]
        if violating:
            entries.append({"index": record["index"], "graph6": record["graph6"], "checks": violating})

    if not entries:
        return None

    p = Path(Settings.counterexample_directory if directory is None else directory)
    p.mkdir(parents=True, exist_ok=True)

    (p / COUNTEREXAMPLE_GRAPHS).write_text("".join(entry["graph6"] + "\n" for entry in entries))
    (p / COUNTEREXAMPLE_CERTIFICATES).write_text(dumps({"schema": SCHEMA, "counterexamples": entries},
                                                       indent=Settings.json_indent) + "\n")
    return p


def _replay(graph: Graph, certificate: Dict[str, Any]) -> bool:
    """
    Re-verify one serialized certificate: an extendability certificate, a Tutte set, or a barrier.
    """
    try:
        if "removed_vertices" in certificate:
            return replay_certificate(graph, decode_certificate(graph, certificate))
        if "odd_components" in certificate:
            tutte = TutteCertificate(vertex_set(certificate["s"]),
                                     [vertex_set(c) for c in certificate["odd_components"]])
            return verify_tutte(graph, tutte)
        if "fc_components" in certificate:
            return verify_barrier(graph, decode_barrier(certificate))
    except (InvalidArgument, KeyError, TypeError):
        return False
    return False


def replay_counterexamples(path: Union[str, Path]) -> List[Tuple[int, str, bool]]:
    """
    Re-verify every stored certificate of a counterexample corpus from its serialized form.
    @param path: The corpus directory, or its counterexamples.json
    @return: (graph index, check id, whether the certificate re-verifies) for every check carrying a certificate
    @raise FileNotFoundError if there is no corpus at the path
    """
    p = Path(path)
    if p.is_dir():
        p = p / COUNTEREXAMPLE_CERTIFICATES

    if not p.is_file():
        raise FileNotFoundError(f"Can't find {p}")

    with p.open("r") as f:
        data = json_load(f)

    outcomes = []
    for entry in data["counterexamples"]:
        graph = from_graph6(entry["graph6"])
        for check in entry["checks"]:
            if "certificate" in check:
                outcomes.append((entry["index"], check["id"], _replay(graph, check["certificate"])))

    return outcomes
