"""Loopless multigraphs, divisors, firing scripts and principal divisors.

Vertices are the integers 0..n-1. On K_d the vertices v_1..v_d are the
indices 0..d-1, so the usual base vertex v_d is index d-1.
"""
from collections import deque

import numpy as np

from utils.basic import checked_matvec
from utils.errors import DimensionError


class Graph:
    """A finite loopless multigraph.

    Graphs are immutable; the adjacency and Laplacian arrays are read-only.

    Keyword arguments:
    n_vertices -- number of vertices (positive)
    edges -- iterable of vertex pairs (u, w), u != w; repeats are
        multi-edges. Edge order is kept because edge lengths are indexed
        by it.
    label -- optional name, e.g. 'complete'
    """

    def __init__(self, n_vertices, edges, label=None):
        n_vertices = int(n_vertices)
        if n_vertices < 1:
            raise ValueError("a graph needs at least one vertex")

        normalized = []
        for edge in edges:
            u, w = (int(x) for x in edge)
            if u == w:
                raise ValueError("loop edge at vertex {:d}".format(u))
            if not (0 <= u < n_vertices and 0 <= w < n_vertices):
                raise ValueError("edge ({:d}, {:d}) leaves the vertex range".format(u, w))
            normalized.append((min(u, w), max(u, w)))

        self.n_vertices = n_vertices
        self.edges = tuple(normalized)
        self.label = label

        adjacency = np.zeros((n_vertices, n_vertices), dtype=np.int64)
        for u, w in self.edges:
            adjacency[u, w] += 1
            adjacency[w, u] += 1
        adjacency.setflags(write=False)
        self.adjacency = adjacency

        self.degrees = tuple(int(x) for x in adjacency.sum(axis=1))
        # neighbour lists with multiplicities, used by the burning loops
        self.neighbors = tuple(
            tuple((int(w), int(adjacency[v, w])) for w in np.flatnonzero(adjacency[v]))
            for v in range(n_vertices))

        laplacian = np.diag(np.array(self.degrees, dtype=np.int64)) - adjacency
        laplacian.setflags(write=False)
        self.laplacian = laplacian

        self._key = (n_vertices, tuple(sorted(self.edges)))
        self._complete = None
        self._distances = {}

    @property
    def n_edges(self):
        return len(self.edges)

    def vertices(self):
        return range(self.n_vertices)

    def is_connected(self):
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w, _ in self.neighbors[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.n_vertices

    def is_complete(self):
        """True iff the graph is K_n: exactly one edge per unordered pair."""
        if self._complete is None:
            n = self.n_vertices
            self._complete = n >= 2 and bool(np.array_equal(
                self.adjacency, np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)))
        return self._complete

    def distances_from(self, v):
        """BFS distances (in edges) from v to every reachable vertex."""
        if v not in self._distances:
            dist = {v: 0}
            queue = deque([v])
            while queue:
                x = queue.popleft()
                for w, _ in self.neighbors[x]:
                    if w not in dist:
                        dist[w] = dist[x] + 1
                        queue.append(w)
            self._distances[v] = dist
        return dict(self._distances[v])

    def __eq__(self, other):
        return isinstance(other, Graph) and (other is self or self._key == other._key)

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        name = self.label or "Graph"
        return "<{:s} n={:d} m={:d}>".format(name, self.n_vertices, self.n_edges)


class Divisor:
    """An integer combination of the vertices of a graph.

    Coefficients are Python ints, so degrees and sums never wrap.
    """

    __slots__ = ('graph', 'coefficients')

    def __init__(self, graph, coefficients):
        coefficients = tuple(int(c) for c in coefficients)
        if len(coefficients) != graph.n_vertices:
            raise DimensionError("divisor has {:d} coefficients, graph has {:d} vertices".format(
                len(coefficients), graph.n_vertices))
        self.graph = graph
        self.coefficients = coefficients

    @classmethod
    def zero(cls, graph):
        return cls(graph, [0] * graph.n_vertices)

    @classmethod
    def point(cls, graph, v, multiplicity=1):
        """The divisor multiplicity*(v)."""
        values = [0] * graph.n_vertices
        values[v] = multiplicity
        return cls(graph, values)

    @property
    def degree(self):
        return sum(self.coefficients)

    def is_effective(self, outside=None):
        """True if every coefficient is >= 0, ignoring vertex `outside`."""
        return all(c >= 0 for v, c in enumerate(self.coefficients) if v != outside)

    def support(self):
        return tuple(v for v, c in enumerate(self.coefficients) if c != 0)

    def add_chips(self, v, amount):
        values = list(self.coefficients)
        values[v] += amount
        return Divisor(self.graph, values)

    def _check_same_graph(self, other):
        if not isinstance(other, Divisor):
            return NotImplemented
        if other.graph is not self.graph and other.graph != self.graph:
            raise ValueError("divisors live on different graphs")
        return None

    def __add__(self, other):
        if self._check_same_graph(other) is NotImplemented:
            return NotImplemented
        return Divisor(self.graph, [a + b for a, b in zip(self.coefficients, other.coefficients)])

    def __sub__(self, other):
        if self._check_same_graph(other) is NotImplemented:
            return NotImplemented
        return Divisor(self.graph, [a - b for a, b in zip(self.coefficients, other.coefficients)])

    def __neg__(self):
        return Divisor(self.graph, [-c for c in self.coefficients])

    def __getitem__(self, v):
        return self.coefficients[v]

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self):
        return len(self.coefficients)

    def __eq__(self, other):
        return (isinstance(other, Divisor) and self.coefficients == other.coefficients
                and self.graph == other.graph)

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        return "Divisor({})".format(list(self.coefficients))

    def __str__(self):
        return " ".join(str(c) for c in self.coefficients)


class FiringScript:
    """An integer function f on the vertices, shifted so that min(f) = 0.

    f and f + c have the same principal divisor, so the shift makes
    scripts comparable.
    """

    __slots__ = ('graph', 'values')

    def __init__(self, graph, values):
        values = [int(x) for x in values]
        if len(values) != graph.n_vertices:
            raise DimensionError("script has {:d} values, graph has {:d} vertices".format(
                len(values), graph.n_vertices))
        low = min(values)
        self.graph = graph
        self.values = tuple(x - low for x in values)

    def is_zero(self):
        return not any(self.values)

    def __eq__(self, other):
        return isinstance(other, FiringScript) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return "FiringScript({})".format(list(self.values))

    def __str__(self):
        return " ".join(str(x) for x in self.values)


def complete_graph(d):
    """K_d: d vertices, one edge per pair."""
    if d < 2:
        raise ValueError("complete_graph needs d >= 2, got {:d}".format(d))
    edges = [(u, w) for u in range(d) for w in range(u + 1, d)]
    return Graph(d, edges, label='complete')


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)], label='path')


def cycle_graph(n):
    if n < 3:
        raise ValueError("a simple cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], label='cycle')


def random_connected_graph(n, rng, extra_edges=0):
    """Random spanning tree on n vertices plus `extra_edges` random edges.

    Extra edges may repeat existing ones, so the result can be a multigraph.

    Keyword arguments:
    n -- number of vertices
    rng -- numpy Generator
    extra_edges -- number of edges added on top of the tree
    """
    edges = [(int(rng.integers(0, i)), i) for i in range(1, n)]
    if n >= 2:
        for _ in range(extra_edges):
            u, w = rng.choice(n, size=2, replace=False)
            edges.append((int(u), int(w)))
    return Graph(n, edges, label='random')


def genus(g):
    """First Betti number |E| - |V| + 1 of a connected graph."""
    if not g.is_connected():
        raise ValueError("genus is only defined here for connected graphs")
    return g.n_edges - g.n_vertices + 1


def principal_divisor(g, f):
    """div(f): coefficient sum over edges vw of f(v) - f(w) at each v.

    Keyword arguments:
    g -- Graph
    f -- FiringScript or a plain sequence of integers
    """
    values = f.values if isinstance(f, FiringScript) else [int(x) for x in f]
    if len(values) != g.n_vertices:
        raise DimensionError("script has {:d} values, graph has {:d} vertices".format(
            len(values), g.n_vertices))
    return Divisor(g, checked_matvec(g.laplacian, values))


def linearly_equivalent(g, D1, D2, base=None):
    """D1 ~ D2, decided by comparing reduced forms at a fixed base vertex."""
    # reduction builds on this module, so import it lazily
    from reduction import reduce

    if D1.degree != D2.degree:
        return False
    base = g.n_vertices - 1 if base is None else base
    return reduce(g, D1, base).divisor == reduce(g, D2, base).divisor


def canonical_divisor(g):
    """K = sum of (deg(v) - 2)(v); degree 2g - 2."""
    if not g.is_connected():
        raise ValueError("canonical divisor needs a connected graph")
    return Divisor(g, [deg - 2 for deg in g.degrees])
