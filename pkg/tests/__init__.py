__all__ = [
    "extendability",
    "parameters",
    "theorems",
    "test_driver",
    "test_util"
]
