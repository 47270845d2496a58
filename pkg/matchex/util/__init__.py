__all__ = [
    "Graph6",
    "GraphLoader",
    "helpers",
    "JsonEncoding",
    "OutputLogger"
]
