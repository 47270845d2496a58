###########################################################
#                       matchex API                       #
###########################################################

from pathlib import Path
from typing import Any, Dict, Optional, TextIO, Union

from .api.analyze import api_analyze
from .api.bounds import api_bounds
from .api.ensemble import api_ensemble
from .api.extendability import api_extend
from .api.parameters import api_parameter
from .api.theorems import api_theorem

from .harness.EnsembleConfig import EnsembleConfig
from .harness.Report import RunReport

from .structures.Exceptions import InvalidArgument, MatchingException
from .structures.ExtendabilityChecker import ExtendabilityVerdict
from .structures.Graph import Graph
from .structures.Parameters import ParameterWitness
from .structures.Rational import rational_str

from .theorems.Evaluators import TheoremId, TheoremParameters, TheoremReport
from .theorems.ProofLedger import ProofBounds
from .theorems.ToughnessBound import sharpness_construction

from .util.Graph6 import from_graph6
from .util.GraphLoader import load_graph
from .util.OutputLogger import OutputLogger


class Matchex:

    def __init__(self, graph: Optional[Union[Graph, str, Path]] = None, print_detail: bool = False,
                 print_result: bool = False, log: bool = False, log_fd: Optional[TextIO] = None):
        """
        Initializer for an instance of the API.
        @param graph: An optional graph; a Graph, a graph6 string, or a string path / pathlib.Path to a graph file.
            Can also be None, and loaded later using load_graph.
        @param print_detail: Boolean; whether search progress should be printed.
        @param print_result: Boolean; whether the result of a query should be printed.
        @param log: Boolean; whether results and progress should be logged to a file. If this is true, a file must have
            been set to log to, either as log_fd or later with set_log_fd.
        @raise FileNotFoundError or InvalidArgument if a graph is given but fails to load; see load_graph.
        """
        self._output = OutputLogger(print_result, print_detail, log, log_fd)
        self._g: Optional[Graph] = None

        if graph is not None:
            self.load_graph(graph)

    ################################################################
    #                       API Modifications                      #
    ################################################################

    def load_graph(self, data: Union[Graph, str, Path], graph_format: Optional[str] = None):
        """
        Load a graph into the API.
        @param data: A Graph, a path to a .g6 / .adj file holding exactly one graph, or a graph6 string (graph6 never
            contains a ".", so anything with a suffix is taken as a path)
        @param graph_format: "graph6" or "adj" for files; by default taken from the suffix
        @raise FileNotFoundError if a path-like argument does not lead to a file
        @raise InvalidArgument if the contents are malformed
        """
        try:
            if isinstance(data, Graph):
                self._g = data
            elif graph_format is not None or isinstance(data, Path) or Path(data).suffix or Path(data).is_file():
                self._g = load_graph(data, graph_format)
            else:
                self._g = from_graph6(data)

        except (FileNotFoundError, InvalidArgument) as e:
            self._output.detail(str(e))
            raise e

    @property
    def output(self) -> OutputLogger:
        return self._output

    @property
    def graph(self) -> Graph:
        """
        @raise InvalidArgument if no graph is loaded
        """
        if self._g is None:
            raise InvalidArgument("No graph is loaded")
        return self._g

    def set_print_result(self, to_print: bool = True):
        self._output.set_print_result(to_print)

    def set_print_detail(self, to_print: bool = True):
        self._output.set_print_detail(to_print)

    def set_logging(self, to_log: bool = True):
        """
        Set whether to log results and progress.
        @precondition A file descriptor has been given to the API either in the initializer, or in a call to set_log_fd.
        """
        self._output.set_log(to_log)

    def set_log_fd(self, log_fd: Optional[TextIO] = None):
        self._output.set_log_fd(log_fd)

    ################################################################
    #                          Structure                           #
    ################################################################

    def analyze(self) -> Dict[str, Any]:
        """
        Parameters and Gallai-Edmonds decomposition of the loaded graph, JSON-ready.
        """
        result = api_analyze(self.graph)
        self._output.table((key, result[key]) for key in ("graph6", "order", "size", "connected", "girth",
                                                          "matching_number", "kappa"))
        return result

    ################################################################
    #                        Extendability                         #
    ################################################################

    def _verdict(self, label: str, verdict: ExtendabilityVerdict) -> ExtendabilityVerdict:
        self._output.result(f"{label}: {'holds' if verdict.holds else 'fails'} "
                            f"({verdict.checked_count} configurations)")
        if verdict.certificate is not None:
            certificate = verdict.certificate
            self._output.result(f"S = {list(certificate.removed_vertices)}, M = {certificate.required_matching}, "
                                f"N = {list(certificate.forbidden_edges)}", x=2)
            self._output.result(f"barrier {list(certificate.barrier.s)} with components "
                                f"{[list(c) for c in certificate.barrier.fc_components]}", x=2)
        return verdict

    def extend(self, prop: str, values, strict_disjoint: Optional[bool] = None) -> ExtendabilityVerdict:
        """
        Decide "k", "nfc", "nk" or "emn" with the given integers; see api_extend.
        """
        verdict = api_extend(self.graph, prop, values, strict_disjoint)
        return self._verdict(f"{prop} {' '.join(map(str, values))}", verdict)

    def k_extendable(self, k: int) -> ExtendabilityVerdict:
        return self.extend("k", [k])

    def n_factor_critical(self, n: int) -> ExtendabilityVerdict:
        return self.extend("nfc", [n])

    def nk_extendable(self, n: int, k: int) -> ExtendabilityVerdict:
        return self.extend("nk", [n, k])

    def emn_extendable(self, m: int, n: int, strict_disjoint: Optional[bool] = None) -> ExtendabilityVerdict:
        return self.extend("emn", [m, n], strict_disjoint)

    ################################################################
    #                          Parameters                          #
    ################################################################

    def parameter(self, name: str) -> Union[ParameterWitness, int]:
        """
        "binding", "toughness" or "kappa" of the loaded graph; see api_parameter.
        """
        result = api_parameter(self.graph, name)
        self._output.result(f"{name}: {result}")
        return result

    def binding_number(self) -> ParameterWitness:
        return self.parameter("binding")

    def toughness(self) -> ParameterWitness:
        return self.parameter("toughness")

    def connectivity(self) -> int:
        return self.parameter("kappa")

    ################################################################
    #                           Theorems                           #
    ################################################################

    def theorem(self, theorem_id: Union[TheoremId, str], eps, **params) -> TheoremReport:
        """
        Evaluate a theorem on the loaded graph.
        @param theorem_id: The descriptive id or numeric alias
        @param eps: A positive exact rational
        @param params: k, n, m as the theorem requires, and optionally girth
        """
        report = api_theorem(self.graph, theorem_id, TheoremParameters(**params), eps)

        self._output.result(f"{report.theorem_id.value}: applicable = {report.applicable}, "
                            f"conclusion = {report.conclusion_checked}")
        for h in report.hypotheses:
            self._output.detail(f"{h.name}: required {h.required}, observed {h.observed}, "
                                f"{'ok' if h.satisfied else 'not met'}", x=2)
        if report.note:
            self._output.result(report.note, x=2)
        return report

    def bounds(self, k: int, girth: int, eps) -> ProofBounds:
        """
        Claim bounds and order threshold; no graph needs to be loaded.
        """
        bounds = api_bounds(k, girth, eps)
        self._output.table([("g0", bounds.g0), ("s_max", rational_str(bounds.s_max)),
                            ("l_max", rational_str(bounds.l_max)), ("threshold", bounds.n)])
        return bounds

    def sharpness(self, n: int, t: int, r: int) -> Graph:
        """
        Build and load the sharpness construction for (n, t, r).
        """
        self._g = sharpness_construction(n, t, r)
        self._output.result(f"Loaded sharpness construction ({n}, {t}, {r}) on {self._g.n} vertices")
        return self._g

    ################################################################
    #                           Ensembles                          #
    ################################################################

    def ensemble(self, config: Union[EnsembleConfig, Dict, str, Path]) -> RunReport:
        """
        Run a seeded ensemble; see api_ensemble.
        """
        try:
            return api_ensemble(config, self._output)
        except MatchingException as e:
            self._output.detail(str(e))
            raise e
