__all__ = [
    "Checks",
    "Ensemble",
    "EnsembleConfig",
    "Oracles",
    "Properties",
    "Reductions",
    "Report",
    "Seeds"
]
