#########################################################
#                                                       #
#   graph6                                              #
#                                                       #
#   Reader / writer of the graph6 format                #
#                                                       #
#########################################################

# networkx does the bit packing; this module checks the framing first, so that a malformed string is reported with
#   the byte offset of the fault rather than a bare ValueError.

from typing import List, Tuple

import networkx as nx

from ..structures.Exceptions import Graph6ParseError, InvalidArgument
from ..structures.Graph import Graph

HEADER = ">>graph6<<"

_LARGE = 68719476735


def to_graph6(graph: Graph, header: bool = False) -> str:
    """
    Encode a graph as graph6.
    @param graph: The graph to encode
    @param header: Whether to prefix the optional ">>graph6<<" header
    @return: The graph6 string, without a trailing newline
    """
    if graph.n > _LARGE:
        raise InvalidArgument(f"Order {graph.n} is too large for graph6")
    return nx.to_graph6_bytes(graph.to_networkx(), header=header).decode("ascii").rstrip("\n")


def _order(values: List[int], base: int) -> Tuple[int, int]:
    """
    The order n and the index of the first adjacency byte.
    """
    if values[0] != 63:
        return values[0], 1

    if len(values) >= 2 and values[1] != 63:
        if len(values) < 4:
            raise Graph6ParseError("Truncated 18-bit order", base + len(values))
        return (values[1] << 12) | (values[2] << 6) | values[3], 4

    if len(values) < 8:
        raise Graph6ParseError("Truncated 36-bit order", base + len(values))
    n = 0
    for v in values[2:8]:
        n = (n << 6) | v
    return n, 8


def from_graph6(text: str) -> Graph:
    """
    Decode a single graph6 string.
    @param text: A graph6 string; an optional ">>graph6<<" header and surrounding whitespace are allowed
    @return: The decoded Graph
    @raise Graph6ParseError on a character outside 63..126, a truncated or overlong body, or non-zero padding bits;
        the error carries the byte offset (counted in the string as given, header included).
    """
    stripped = text.strip()
    base = len(text) - len(text.lstrip())

    if stripped.startswith(HEADER):
        stripped = stripped[len(HEADER):]
        base += len(HEADER)

    if not stripped:
        raise Graph6ParseError("Empty graph6 string", base)

    for i, c in enumerate(stripped):
        if not 63 <= ord(c) <= 126:
            raise Graph6ParseError(f"Character {c!r} is outside the graph6 range", base + i)

    values = [ord(c) - 63 for c in stripped]
    n, position = _order(values, base)

    bit_count = n * (n - 1) // 2
    expected = (bit_count + 5) // 6

    if len(values) - position < expected:
        raise Graph6ParseError(f"Truncated adjacency data; expected {expected} bytes", base + len(values))
    if len(values) - position > expected:
        raise Graph6ParseError("Trailing bytes after adjacency data", base + position + expected)

    padding = expected * 6 - bit_count
    if expected and values[-1] & ((1 << padding) - 1):
        raise Graph6ParseError("Padding bits are not zero", base + len(values) - 1)

    decoded = nx.from_graph6_bytes(stripped.encode("ascii"))
    return Graph(n, decoded.edges())


def read_graph6_lines(text: str) -> List[Graph]:
    """
    Decode every non-empty line of a graph6 file.
    @param text: The file contents
    @return: The graphs, in file order
    @raise Graph6ParseError on the first malformed line; the offset is relative to that line.
    """
    return [from_graph6(line) for line in text.splitlines() if line.strip()]
