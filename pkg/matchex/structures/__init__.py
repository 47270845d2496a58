__all__ = [
    "Connectivity",
    "Exceptions",
    "ExtendabilityChecker",
    "GallaiEdmonds",
    "Generators",
    "Graph",
    "MatchingEngine",
    "Parameters",
    "Rational",
    "Types"
]
