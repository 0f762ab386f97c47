"""Reading and writing the graph and divisor text formats.

Graph file:
    d m
    u w [len]      (m lines, 0-based endpoints, optional positive length)

Divisor file: one line of d integers.

Both are written with LF line endings and single spaces.
"""
import frostings.loader as frost
from graph_core import Divisor, Graph
from utils.errors import DimensionError, ParseError


def _numbered_lines(lines):
    """(line_number, tokens) for every non-blank line, 1-based numbers."""
    return [(i, line.split()) for i, line in enumerate(lines, start=1) if line.strip()]


def _parse_int(token, line, what):
    try:
        return int(token)
    except ValueError:
        raise ParseError("{:s} must be an integer, got {!r}".format(what, token), line)


class GraphLoader(frost.Loader):
    """Load a graph with optional integer edge lengths."""

    def __init__(self, path=None, lines=None):
        """ Initialize GraphLoader instance.

        Keyword arguments:
        path -- graph file to read
        lines -- list of lines to parse instead of a file
        """
        if (path is None) == (lines is None):
            raise ValueError("give exactly one of `path` and `lines`")
        self.path = path
        self.lines = lines
        super(GraphLoader, self).__init__()

    def _load_data(self):
        lines = self.lines if self.lines is not None else frost.read_lines(self.path)
        self.samples = _numbered_lines(lines)

    def _preprocess_data(self):
        """Parse the header and the edge lines into a Graph and lengths."""
        if not self.samples:
            raise ParseError("empty graph file", 1)
        line, header = self.samples[0]
        if len(header) != 2:
            raise ParseError("header must be 'd m'", line)
        d = _parse_int(header[0], line, "vertex count")
        m = _parse_int(header[1], line, "edge count")
        if d < 1:
            raise ParseError("vertex count must be positive", line)
        if m < 0:
            raise ParseError("edge count must be non-negative", line)

        edge_lines = self.samples[1:]
        if len(edge_lines) != m:
            last = edge_lines[-1][0] if edge_lines else line
            raise ParseError("expected {:d} edges, found {:d}".format(m, len(edge_lines)), last)

        edges, lengths = [], []
        for line, tokens in edge_lines:
            if len(tokens) not in (2, 3):
                raise ParseError("edge line must be 'u w [len]'", line)
            u = _parse_int(tokens[0], line, "endpoint")
            w = _parse_int(tokens[1], line, "endpoint")
            length = _parse_int(tokens[2], line, "length") if len(tokens) == 3 else 1
            if not (0 <= u < d and 0 <= w < d):
                raise ParseError("endpoint outside [0, {:d}]".format(d - 1), line)
            if u == w:
                raise ParseError("loop edge at vertex {:d}".format(u), line)
            if length < 1:
                raise ParseError("edge length must be positive", line)
            edges.append((u, w))
            lengths.append(length)

        self.graph = Graph(d, edges)
        if self.graph.is_complete():
            self.graph.label = 'complete'
        self.lengths = tuple(lengths)


class DivisorLoader(frost.Loader):
    """Load a divisor; checked against a graph when one is given."""

    def __init__(self, path=None, lines=None, graph=None):
        if (path is None) == (lines is None):
            raise ValueError("give exactly one of `path` and `lines`")
        self.path = path
        self.lines = lines
        self.graph = graph
        super(DivisorLoader, self).__init__()

    def _load_data(self):
        lines = self.lines if self.lines is not None else frost.read_lines(self.path)
        self.samples = _numbered_lines(lines)

    def _preprocess_data(self):
        if not self.samples:
            raise ParseError("empty divisor file", 1)
        if len(self.samples) > 1:
            raise ParseError("divisor must be a single line", self.samples[1][0])
        line, tokens = self.samples[0]
        self.coefficients = tuple(_parse_int(t, line, "coefficient") for t in tokens)
        self.divisor = None
        if self.graph is not None:
            if len(self.coefficients) != self.graph.n_vertices:
                raise DimensionError("divisor has {:d} coefficients, graph has {:d} vertices".format(
                    len(self.coefficients), self.graph.n_vertices))
            self.divisor = Divisor(self.graph, self.coefficients)


def load_graph(path):
    """Return (graph, lengths) read from a graph file."""
    loader = GraphLoader(path)
    return loader.graph, loader.lengths


def load_divisor(path, graph):
    return DivisorLoader(path, graph=graph).divisor


def format_graph(graph, lengths=None):
    """Graph file text; the length column is written only when given."""
    out = ["{:d} {:d}".format(graph.n_vertices, graph.n_edges)]
    if lengths is None:
        out += ["{:d} {:d}".format(u, w) for u, w in graph.edges]
    else:
        out += ["{:d} {:d} {:d}".format(u, w, x) for (u, w), x in zip(graph.edges, lengths)]
    return "\n".join(out) + "\n"


def format_divisor(D):
    return " ".join(str(c) for c in D) + "\n"
