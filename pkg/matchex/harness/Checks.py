#########################################################
#                                                       #
#   Checks                                              #
#                                                       #
#   The outcome of one check on one graph, as it        #
#   appears in a run report                             #
#                                                       #
#########################################################

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List, Optional

from ..theorems.Evaluators import SKIPPED_GUARD, TheoremReport
from ..util.JsonEncoding import encode_certificate, encode_rational, encode_report

# Theorem parameters a check may be instantiated with
DEFAULT_PARAMETERS = {"k": [1, 2], "n": [1, 2], "m": [1]}


@dataclass(frozen=True)
class CheckContext:
    """
    What a run instantiates its checks with: the theorem integers and the eps values.
    """
    parameters: Dict[str, List[int]] = field(default_factory=lambda: dict(DEFAULT_PARAMETERS))
    eps: List[Fraction] = field(default_factory=lambda: [Fraction(1, 2)])

    def values(self, name: str) -> List[int]:
        return list(self.parameters.get(name, DEFAULT_PARAMETERS[name]))


@dataclass
class CheckResult:
    """
    applicable: the antecedent of the property held (and no guard was hit)
    holds: the observed truth of the consequent; None when it could not be decided
    """
    id: str
    applicable: bool
    holds: Optional[bool]
    parameters: Dict[str, Any] = field(default_factory=dict)
    certificate: Optional[Dict[str, Any]] = None
    note: Optional[str] = None
    details: Optional[Dict[str, Any]] = None

    @property
    def violation(self) -> bool:
        return self.applicable and self.holds is False

    @property
    def skipped(self) -> bool:
        return self.note == SKIPPED_GUARD

    def to_dict(self) -> Dict[str, Any]:
        encoded = {"id": self.id, "applicable": self.applicable, "holds": self.holds}
        if self.parameters:
            encoded["parameters"] = self.parameters
        if self.certificate is not None:
            encoded["certificate"] = self.certificate
        if self.note is not None:
            encoded["note"] = self.note
        if self.details is not None:
            encoded["details"] = self.details
        return encoded


def skipped(check_id: str, parameters: Optional[Dict[str, Any]] = None) -> CheckResult:
    return CheckResult(check_id, False, None, parameters or {}, note=SKIPPED_GUARD)


def not_applicable(check_id: str, note: str, parameters: Optional[Dict[str, Any]] = None) -> CheckResult:
    return CheckResult(check_id, False, None, parameters or {}, note=note)


def from_report(report: TheoremReport, parameters: Dict[str, Any]) -> CheckResult:
    """
    A theorem report as a check; its hypotheses go to the details.
    """
    encoded = encode_report(report)
    details = {"hypotheses": encoded["hypotheses"]}
    if report.toughness_bound is not None:
        details["toughness_bound"] = encode_rational(report.toughness_bound)

    certificate = encode_certificate(report.certificate) if report.certificate is not None else None
    return CheckResult(report.theorem_id.value, report.applicable, report.conclusion_checked, parameters,
                       certificate, report.note, details)
