__all__ = [
    "api",
    "config",
    "harness",
    "structures",
    "theorems",
    "util",
    "API",
]
