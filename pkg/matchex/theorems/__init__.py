__all__ = [
    "Evaluators",
    "ProofLedger",
    "ToughnessBound"
]
