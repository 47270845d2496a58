from pathlib import Path
from typing import Dict, Union

from ..harness.Ensemble import run_ensemble
from ..harness.EnsembleConfig import EnsembleConfig, load_ensemble_config
from ..harness.Report import RunReport
from ..util.OutputLogger import OutputLogger


def api_ensemble(config: Union[EnsembleConfig, Dict, str, Path], logger: OutputLogger = None) -> RunReport:
    """
    Run a seeded ensemble.
    @param config: An EnsembleConfig, a parsed configuration dictionary, or a path to a .json / .yml file
    @param logger: Receives progress and the summary
    @return: The RunReport; counterexamples, if any, are persisted
    @raise FileNotFoundError if a path does not lead to a configuration file
    @raise InvalidArgument if the configuration is malformed
    """
    if not isinstance(config, EnsembleConfig):
        config = load_ensemble_config(config)
    return run_ensemble(config, logger)
