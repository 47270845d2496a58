#########################################################
#                                                       #
#   Evaluators                                          #
#                                                       #
#   Hypothesis-by-hypothesis evaluation of the          #
#   binding-number and toughness sufficient conditions  #
#   for matching extension, with the conclusion         #
#   decided exhaustively where the guards allow         #
#                                                       #
#########################################################

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, List, Optional, Union

from .ProofLedger import g0_of_girth, threshold_N
from .ToughnessBound import toughness_certificate_bound

from ..structures.Connectivity import vertex_connectivity
from ..structures.Exceptions import InvalidArgument, ResourceLimitExceeded, UndefinedParameter
from ..structures.ExtendabilityChecker import ExtendabilityCertificate, ExtendabilityChecker, ExtendabilityVerdict
from ..structures.GallaiEdmonds import tutte_violator
from ..structures.Graph import Graph
from ..structures.Parameters import ParameterWitness, binding_number, toughness
from ..structures.Rational import Rational, as_rational, is_infinite


class TheoremId(Enum):
    BINDING_K_EXTENDABLE = "binding-k-extendable"
    BINDING_NK_EXTENDABLE = "binding-nk-extendable"
    BINDING_EMN_EXTENDABLE = "binding-emn-extendable"
    TOUGHNESS_N_FACTOR_CRITICAL = "toughness-n-factor-critical"
    TOUGHNESS_K_EXTENDABLE = "toughness-k-extendable"
    TOUGHNESS_EMN_EXTENDABLE = "toughness-emn-extendable"

    @classmethod
    def parse(cls, text: str) -> "TheoremId":
        """
        Look up a theorem by its id, or by its numeric alias.
        @raise InvalidArgument on an unknown id
        """
        text = text.strip()
        text = ALIASES.get(text, text)
        for theorem in cls:
            if theorem.value == text:
                return theorem
        raise InvalidArgument(f"Unknown theorem id '{text}'; expected one of " +
                              ", ".join([t.value for t in cls] + list(ALIASES)))


ALIASES = {
    "2.2": TheoremId.BINDING_K_EXTENDABLE.value,
    "2.3": TheoremId.BINDING_NK_EXTENDABLE.value,
    "2.4": TheoremId.BINDING_EMN_EXTENDABLE.value,
    "3.1": TheoremId.TOUGHNESS_N_FACTOR_CRITICAL.value,
    "3.2": TheoremId.TOUGHNESS_K_EXTENDABLE.value,
    "3.3": TheoremId.TOUGHNESS_EMN_EXTENDABLE.value
}

# The integers each theorem is stated for
REQUIRED_PARAMETERS = {
    TheoremId.BINDING_K_EXTENDABLE: ("k",),
    TheoremId.BINDING_NK_EXTENDABLE: ("n", "k"),
    TheoremId.BINDING_EMN_EXTENDABLE: ("m", "n"),
    TheoremId.TOUGHNESS_N_FACTOR_CRITICAL: ("n",),
    TheoremId.TOUGHNESS_K_EXTENDABLE: ("k",),
    TheoremId.TOUGHNESS_EMN_EXTENDABLE: ("m", "n")
}

BINDING_THEOREMS = (TheoremId.BINDING_K_EXTENDABLE, TheoremId.BINDING_NK_EXTENDABLE, TheoremId.BINDING_EMN_EXTENDABLE)

SKIPPED_GUARD = "skipped: guard"


@dataclass(frozen=True)
class TheoremParameters:
    """
    The integers a theorem is instantiated with. girth optionally fixes g for the binding-number results; it
    defaults to the girth of the graph (3 for forests) for binding-k-extendable and to 3 for the corollaries.
    """
    k: Optional[int] = None
    n: Optional[int] = None
    m: Optional[int] = None
    girth: Optional[int] = None

    def supplied(self) -> tuple:
        return tuple(name for name in ("k", "n", "m") if getattr(self, name) is not None)


@dataclass(frozen=True)
class Hypothesis:
    name: str
    required: Any
    observed: Any
    satisfied: bool


@dataclass
class TheoremReport:
    theorem_id: TheoremId
    hypotheses: List[Hypothesis] = field(default_factory=list)
    conclusion_checked: Optional[bool] = None
    certificate: Optional[ExtendabilityCertificate] = None
    toughness_bound: Optional[Fraction] = None
    note: Optional[str] = None

    @property
    def applicable(self) -> bool:
        return self.note != SKIPPED_GUARD and all(h.satisfied for h in self.hypotheses)

    @property
    def violation(self) -> bool:
        """
        Applicable, yet the conclusion was observed to fail.
        """
        return self.applicable and self.conclusion_checked is False

    def add(self, name: str, required: Any, observed: Any, satisfied: bool):
        self.hypotheses.append(Hypothesis(name, required, observed, bool(satisfied)))


################################################################
#                       Shared Hypotheses                      #
################################################################

class GraphFacts:
    """
    Lazily computed parameters of one graph, shared by every report on it. A parameter past its guard raises
    ResourceLimitExceeded each time it is asked for.
    """

    _UNDEFINED = object()

    def __init__(self, graph: Graph):
        self.graph = graph
        self._binding = None
        self._toughness = None
        self._kappa = None
        self._connected = None

    @property
    def connected(self) -> bool:
        if self._connected is None:
            self._connected = self.graph.is_connected()
        return self._connected

    @property
    def binding_witness(self) -> Optional[ParameterWitness]:
        """
        None when the binding number is undefined (fewer than two vertices).
        """
        if self._binding is None:
            try:
                self._binding = binding_number(self.graph)
            except UndefinedParameter:
                self._binding = self._UNDEFINED
        return None if self._binding is self._UNDEFINED else self._binding

    @property
    def binding(self) -> Optional[Fraction]:
        witness = self.binding_witness
        return None if witness is None else witness.value

    @property
    def toughness_witness(self) -> ParameterWitness:
        if self._toughness is None:
            self._toughness = toughness(self.graph)
        return self._toughness

    @property
    def toughness(self) -> Rational:
        return self.toughness_witness.value

    @property
    def kappa(self) -> int:
        if self._kappa is None:
            self._kappa = vertex_connectivity(self.graph)
        return self._kappa


def _order_hypotheses(report: TheoremReport, facts: GraphFacts, minimum: int, parity: Optional[int]):
    """
    Connectivity, a minimum order and, if parity is given, |V(G)| = parity (mod 2).
    """
    order = facts.graph.n
    report.add("connected", True, facts.connected, facts.connected)
    if parity is not None:
        report.add("order parity", parity % 2, order % 2, order % 2 == parity % 2)
    report.add("order lower bound", minimum, order, order >= minimum)


def _binding_hypotheses(report: TheoremReport, facts: GraphFacts, g0: int, eps: Fraction, k: int):
    """
    eps < 1/g0, b(G) > (g0 + 1) / g0 + eps, and |V(G)| >= threshold_N(k, g0, eps).
    """
    report.add("eps below 1/g0", Fraction(1, g0), eps, eps < Fraction(1, g0))

    target = Fraction(g0 + 1, g0) + eps
    b = facts.binding
    report.add("binding number strictly above", target, b, b is not None and b > target)

    if eps < Fraction(1, g0):
        threshold = threshold_N(k, g0, eps)
        report.add("order threshold", threshold, facts.graph.n, facts.graph.n >= threshold)
    else:
        report.add("order threshold", None, facts.graph.n, False)


def _toughness_hypotheses(report: TheoremReport, facts: GraphFacts, eps: Fraction, scale: int):
    """
    t(G) >= 1 + eps and κ(G) > scale (1 + eps) / eps.
    """
    t = facts.toughness
    report.add("toughness at least", 1 + eps, t, t >= 1 + eps)

    bound = Fraction(scale) * (1 + eps) / eps
    report.add("connectivity strictly above", bound, facts.kappa, facts.kappa > bound)


def _decide(report: TheoremReport, decision: Callable[[], ExtendabilityVerdict]) -> Optional[ExtendabilityVerdict]:
    """
    Record the observed conclusion; undecidable when the checker's preconditions fail or a guard is hit.
    """
    try:
        verdict = decision()
    except InvalidArgument as e:
        report.note = f"conclusion undefined: {e}"
        return None
    except ResourceLimitExceeded:
        report.note = SKIPPED_GUARD
        return None

    report.conclusion_checked = verdict.holds
    report.certificate = verdict.certificate
    return verdict


################################################################
#                          Evaluation                          #
################################################################

def evaluate(theorem_id: Union[TheoremId, str], graph: Graph, params: TheoremParameters,
             eps: Union[Fraction, int, str], facts: Optional["GraphFacts"] = None) -> TheoremReport:
    """
    Evaluate every hypothesis of a theorem on a graph exactly, and decide its conclusion by exhaustive search.
    The conclusion is recorded whenever it is decidable, applicable or not; a report whose parameters or search hit
    a resource guard is marked "skipped: guard" and is never applicable.
    @param theorem_id: A TheoremId, or its id / numeric alias as a string
    @param graph: The graph
    @param params: The theorem's integers; exactly those the theorem is stated for must be supplied
    @param eps: A positive exact rational
    @param facts: Parameters of the graph already computed for other reports, if any
    @return: The TheoremReport
    @raise InvalidArgument on a wrong parameter bundle or a non-positive eps
    """
    theorem = theorem_id if isinstance(theorem_id, TheoremId) else TheoremId.parse(theorem_id)
    eps = as_rational(eps)
    if eps <= 0:
        raise InvalidArgument(f"eps must be positive, got {eps}")

    required = REQUIRED_PARAMETERS[theorem]
    if params.supplied() != tuple(sorted(required, key=("k", "n", "m").index)):
        raise InvalidArgument(f"{theorem.value} takes exactly the parameters {', '.join(required)}; " +
                              f"got {', '.join(params.supplied()) or 'none'}")
    if any(getattr(params, name) < 0 for name in required):
        raise InvalidArgument(f"{theorem.value} parameters must be non-negative")
    if theorem in BINDING_THEOREMS and any(getattr(params, name) < 1 for name in required):
        raise InvalidArgument(f"{theorem.value} is stated for positive parameters")

    report = TheoremReport(theorem)
    facts = facts if facts is not None else GraphFacts(graph)
    checker = ExtendabilityChecker(graph)

    try:
        _evaluate(theorem, report, facts, checker, params, eps)
    except ResourceLimitExceeded:
        report.note = SKIPPED_GUARD

    return report


def _corollary_g0(params: TheoremParameters) -> int:
    """
    The corollaries are stated for g0 = 3; a supplied girth restates them with the general g0.
    """
    return g0_of_girth(3 if params.girth is None else params.girth)


def _evaluate(theorem: TheoremId, report: TheoremReport, facts: GraphFacts, checker: ExtendabilityChecker,
              params: TheoremParameters, eps: Fraction):
    graph = facts.graph
    k, n, m = params.k, params.n, params.m

    if theorem is TheoremId.BINDING_K_EXTENDABLE:
        g = params.girth if params.girth is not None else (3 if is_infinite(graph.girth()) else graph.girth())
        g0 = g0_of_girth(g)
        _order_hypotheses(report, facts, 2 * k + 2, 0)
        report.add("girth at least", g, graph.girth(), graph.girth() >= g)
        _binding_hypotheses(report, facts, g0, eps, k)
        _decide(report, lambda: checker.k_extendable(k))

    elif theorem is TheoremId.BINDING_NK_EXTENDABLE:
        g0 = _corollary_g0(params)
        _order_hypotheses(report, facts, n + 2 * k + 2, n)
        if params.girth is not None:
            report.add("girth at least", params.girth, graph.girth(), graph.girth() >= params.girth)
        _binding_hypotheses(report, facts, g0, eps, k + 2 * n)
        _decide(report, lambda: checker.nk_extendable(n, k))

    elif theorem is TheoremId.BINDING_EMN_EXTENDABLE:
        g0 = _corollary_g0(params)
        _order_hypotheses(report, facts, 2 * m + 2 * n + 2, 0)
        if params.girth is not None:
            report.add("girth at least", params.girth, graph.girth(), graph.girth() >= params.girth)
        _binding_hypotheses(report, facts, g0, eps, m + n)
        _decide(report, lambda: checker.emn_extendable(m, n))

    elif theorem is TheoremId.TOUGHNESS_N_FACTOR_CRITICAL:
        _order_hypotheses(report, facts, n, n)
        _toughness_hypotheses(report, facts, eps, n - 2)
        verdict = _decide(report, lambda: checker.n_factor_critical(n))

        # A failure carries the toughness bound of the Tutte set of G - S
        if verdict is not None and not verdict.holds:
            s = verdict.certificate.removed_vertices
            residual = graph.delete_vertices(s)
            tutte = tutte_violator(residual)
            try:
                report.toughness_bound = toughness_certificate_bound(graph, n, s, residual.original(tutte.s))
            except ResourceLimitExceeded:
                # The conclusion stands; only the bound audit is past the parameter guard
                report.toughness_bound = None

    elif theorem is TheoremId.TOUGHNESS_K_EXTENDABLE:
        _order_hypotheses(report, facts, 2 * k + 2, 0)
        _toughness_hypotheses(report, facts, eps, 2 * k - 2)
        _decide(report, lambda: checker.k_extendable(k))

    elif theorem is TheoremId.TOUGHNESS_EMN_EXTENDABLE:
        _order_hypotheses(report, facts, 2 * m + 2 * n + 2, 0)
        _toughness_hypotheses(report, facts, eps, 2 * m + 2 * n - 2)
        _decide(report, lambda: checker.emn_extendable(m, n))
