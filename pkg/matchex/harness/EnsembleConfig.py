#########################################################
#                                                       #
#   Ensemble Configuration                              #
#                                                       #
#########################################################

from dataclasses import dataclass, field
from fractions import Fraction
from json import load as json_load
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from yaml import safe_load as yaml_load

from .Checks import DEFAULT_PARAMETERS, CheckContext
from .Properties import PROPERTY_SUITES

from ..config.settings import Settings
from ..structures.Exceptions import InvalidArgument
from ..structures.Rational import as_rational, rational_str
from ..theorems.Evaluators import TheoremId

MODELS = ["gnp", "random_regular", "generator_grid"]

# Settings an ensemble may override for the duration of its run
GUARDS = ["max_enumerated_matchings", "max_configurations", "parameter_vertex_limit", "oracle_vertex_limit",
          "strict_disjoint"]


def _rational(value) -> Fraction:
    try:
        return as_rational(str(value) if isinstance(value, int) else value)
    except (TypeError, ValueError) as e:
        raise InvalidArgument(f"Not an exact rational: {value!r} ({e})")


@dataclass
class EnsembleConfig:
    """
    A seeded random-ensemble run: which graphs (model, orders, edge probabilities or degrees, sample count, master
    seed), which checks to run on each (theorem ids and property suites), at which eps values and theorem
    parameters, and under which resource guards. A fixed config always yields the same report.
    """
    model: str = "gnp"
    orders: Tuple[int, int] = (6, 10)
    probability: Tuple[Fraction, Fraction] = (Fraction(1, 4), Fraction(3, 4))
    probability_steps: int = 4
    degrees: List[int] = field(default_factory=lambda: [3])
    samples: int = 100
    seed: int = 0
    eps: List[Fraction] = field(default_factory=lambda: [Fraction(1, 2)])
    checks: List[str] = field(default_factory=list)
    parameters: Dict[str, List[int]] = field(default_factory=lambda: dict(DEFAULT_PARAMETERS))
    guards: Dict[str, Any] = field(default_factory=dict)
    workers: int = 1
    record_timing: bool = False
    counterexample_directory: Optional[str] = None

    def __post_init__(self):
        self.orders = tuple(int(n) for n in self.orders)
        self.probability = tuple(_rational(p) for p in self.probability)
        self.eps = [_rational(e) for e in (self.eps if isinstance(self.eps, list) else [self.eps])]
        self.validate()

    def validate(self):
        """
        @raise InvalidArgument naming the first field out of range
        """
        if self.model not in MODELS:
            raise InvalidArgument(f"Unknown model '{self.model}'; expected one of {', '.join(MODELS)}")

        low, high = self.orders
        if not 0 <= low <= high:
            raise InvalidArgument(f"Order range must be non-empty and non-negative, got {list(self.orders)}")

        p_low, p_high = self.probability
        if not 0 <= p_low <= p_high <= 1:
            raise InvalidArgument(f"Edge probability range must lie within [0, 1], got "
                                  f"[{rational_str(p_low)}, {rational_str(p_high)}]")
        if self.probability_steps < 0:
            raise InvalidArgument("probability_steps must be non-negative")

        if self.model == "random_regular" and not self.regular_pairs():
            raise InvalidArgument(f"No (order, degree) pair with degrees {self.degrees} and orders "
                                  f"{list(self.orders)} admits a regular graph")

        if self.samples < 0 or self.workers < 1:
            raise InvalidArgument("samples must be non-negative and workers positive")
        if not 0 <= self.seed < 2 ** 64:
            raise InvalidArgument(f"The seed must be a u64, got {self.seed}")
        if not self.eps or any(e <= 0 for e in self.eps):
            raise InvalidArgument("eps values must be given and positive")

        for check in self.checks:
            if check not in PROPERTY_SUITES:
                TheoremId.parse(check)

        for name, values in self.parameters.items():
            if name not in DEFAULT_PARAMETERS or any(v < 0 for v in values):
                raise InvalidArgument(f"Theorem parameter '{name}' must be one of k, n, m with non-negative values")

        for name in self.guards:
            if name not in GUARDS:
                raise InvalidArgument(f"Unknown guard '{name}'; expected one of {', '.join(GUARDS)}")

    def regular_pairs(self) -> List[Tuple[int, int]]:
        """
        Every (order, degree) of the configured ranges for which a regular graph exists.
        """
        return [(n, d) for n in range(self.orders[0], self.orders[1] + 1) for d in self.degrees
                if 0 <= d < n and (n * d) % 2 == 0]

    def probabilities(self) -> List[Fraction]:
        """
        The edge probabilities sampled from: probability_steps + 1 evenly spaced exact values across the range.
        """
        low, high = self.probability
        if self.probability_steps == 0 or low == high:
            return [low]
        return [low + (high - low) * i / self.probability_steps for i in range(self.probability_steps + 1)]

    def context(self) -> CheckContext:
        return CheckContext(self.parameters, self.eps)

    def to_dict(self) -> Dict[str, Any]:
        """
        JSON-ready form; rationals are written as "P/Q" strings, as they are read.
        """
        return {
            "model": self.model,
            "orders": list(self.orders),
            "probability": [rational_str(p) for p in self.probability],
            "probability_steps": self.probability_steps,
            "degrees": list(self.degrees),
            "samples": self.samples,
            "seed": self.seed,
            "eps": [rational_str(e) for e in self.eps],
            "checks": list(self.checks),
            "parameters": {name: list(values) for name, values in self.parameters.items()},
            "guards": dict(self.guards),
            "workers": self.workers,
            "record_timing": self.record_timing
        }


def config_from_dict(data: Dict[str, Any]) -> EnsembleConfig:
    """
    Build a config from its parsed form; absent keys take their defaults.
    @raise InvalidArgument on unknown keys or values out of range
    """
    known = set(EnsembleConfig.__dataclass_fields__)
    unknown = set(data) - known
    if unknown:
        raise InvalidArgument(f"Unknown ensemble configuration keys: {', '.join(sorted(unknown))}")

    d = dict(data)
    if "parameters" in d:
        d["parameters"] = {name: [int(v) for v in values] for name, values in d["parameters"].items()}

    try:
        return EnsembleConfig(**d)
    except (TypeError, ValueError) as e:
        raise InvalidArgument(f"Malformed ensemble configuration: {e}")


def load_ensemble_config(file: Union[dict, str, Path]) -> EnsembleConfig:
    """
    Load an ensemble configuration.
    @param file: a string path or pathlib.Path to a .json, .yml or .yaml file, or an already parsed dictionary
    @raise FileNotFoundError if the path does not lead to a file, or the extension is not recognised
    @raise InvalidArgument if the contents are not a valid configuration
    """
    if isinstance(file, dict):
        return config_from_dict(file)

    p = file if isinstance(file, Path) else Path(file)

    if not p.is_file():
        raise FileNotFoundError(f"Can't find {file}")

    extension = p.suffix.lower()

    if extension in [".yml", ".yaml"]:
        loader = yaml_load

    elif extension == ".json":
        loader = json_load

    else:
        raise FileNotFoundError(f"Unknown extension '{extension}' for file: {file}, needs to end with .yml, .yaml, "
                                f"or .json")

    with p.open("r") as f:
        data = loader(f)

    if not isinstance(data, dict):
        raise InvalidArgument(f"{file} does not hold a configuration mapping")

    return config_from_dict(data)


class GuardOverride:
    """
    Apply an ensemble's guards to Settings for the duration of a with-block (also used as a worker initializer).
    """

    def __init__(self, guards: Dict[str, Any]):
        self.guards = guards
        self.saved = {}

    def __enter__(self):
        self.saved = {name: getattr(Settings, name) for name in self.guards}
        apply_guards(self.guards)
        return self

    def __exit__(self, *exc):
        apply_guards(self.saved)
        return False


def apply_guards(guards: Dict[str, Any]):
    for name, value in guards.items():
        setattr(Settings, name, value)
