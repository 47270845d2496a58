__all__ = [
    "analyze",
    "bounds",
    "ensemble",
    "extendability",
    "parameters",
    "theorems"
]
