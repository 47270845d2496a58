from pathlib import Path
from typing import List, Optional, Union

from .Graph6 import read_graph6_lines

from ..structures.Exceptions import InvalidArgument
from ..structures.Graph import Graph

FORMATS = ["graph6", "adj"]

# Suffixes that settle the format when none is given
_SUFFIXES = {
    ".g6": "graph6",
    ".graph6": "graph6",
    ".txt": "graph6",
    ".adj": "adj"
}


def parse_adjacency(text: str) -> Graph:
    """
    Parse the adjacency-list text format: the first line holds n, every following line one 0-based pair "u v".
    Blank lines and lines starting with '#' are ignored.
    @param text: The file contents
    @return: The Graph
    @raise InvalidArgument on a malformed line, or any Graph construction error (range, loops, duplicates)
    """
    lines = [line.strip() for line in text.splitlines()]
    lines = [(number, line) for number, line in enumerate(lines, start=1) if line and not line.startswith("#")]

    if not lines:
        raise InvalidArgument("Empty adjacency file; the first line must hold the vertex count")

    number, first = lines[0]
    if not first.isdigit():
        raise InvalidArgument(f"Line {number}: expected the vertex count, got '{first}'")

    edges = []
    for number, line in lines[1:]:
        pair = line.split()
        if len(pair) != 2 or not all(p.isdigit() for p in pair):
            raise InvalidArgument(f"Line {number}: expected a pair 'u v', got '{line}'")
        edges.append((int(pair[0]), int(pair[1])))

    return Graph(int(first), edges)


def parse_graphs(text: str, graph_format: str = "graph6") -> List[Graph]:
    """
    Parse file contents in a given format.
    @param text: The contents
    @param graph_format: "graph6" (one graph per line) or "adj" (exactly one graph)
    @return: The graphs, in order
    @raise InvalidArgument on an unknown format or malformed contents
    """
    if graph_format == "graph6":
        return read_graph6_lines(text)
    if graph_format == "adj":
        return [parse_adjacency(text)]
    raise InvalidArgument(f"Unknown graph format '{graph_format}'; expected one of {', '.join(FORMATS)}")


def load_graphs(file: Union[str, Path], graph_format: Optional[str] = None) -> List[Graph]:
    """
    Load every graph in a file.
    @param file: A string path or pathlib.Path
    @param graph_format: "graph6" or "adj"; by default taken from the suffix (.adj is adjacency text, anything else
        graph6)
    @return: The graphs, in file order
    @raise FileNotFoundError if the path does not lead to a file
    @raise InvalidArgument on malformed contents
    """
    p = file if isinstance(file, Path) else Path(file)

    if not p.is_file():
        raise FileNotFoundError(f"Can't find {file}")

    if graph_format is None:
        graph_format = _SUFFIXES.get(p.suffix.lower(), "graph6")

    with p.open("r") as f:
        return parse_graphs(f.read(), graph_format)


def load_graph(file: Union[str, Path], graph_format: Optional[str] = None) -> Graph:
    """
    Load a file that must hold exactly one graph.
    @raise InvalidArgument if the file holds no graph or several
    """
    graphs = load_graphs(file, graph_format)
    if len(graphs) != 1:
        raise InvalidArgument(f"{file} holds {len(graphs)} graphs; exactly one is expected")
    return graphs[0]
