"""Metric graphs with integer edge lengths, modelled by subdivision.

An edge of length l becomes a path of l unit edges through l-1 new
vertices. The rank of a vertex-supported divisor is the same on the
finite subdivision and on the metric graph, and the original vertices of
a loopless model are rank-determining, so metric ranks reduce to
`rank_oracle` on the subdivision with test divisors on the original
vertices.

For K_d a divisor D on a subdivision is v-reduced iff
  1. D is effective away from v,
  2. every open edge carries at most one chip,
  3. some ordering v_1..v_{d-1} of the other original vertices has
     D(A_i) <= i-1, where A_i is v_i together with the open edges joining
     it to v, v_1, ..., v_{i-1}.
"""
from functools import lru_cache
from itertools import product

from gonality import SharpnessCertificate, place_route_chips
from graph_core import Divisor, Graph, complete_graph, genus
from rank_engine import rank_at_least, rank_oracle
from reduction import reduce
from sequence_lab import StarSequence
from utils.basic import make_rng, progress, triangular
from utils.errors import InternalError, ResourceLimitError, UnsupportedGraphError

DEFAULT_CAP = 200


class EdgeLengths:
    """Positive integer lengths, one per edge of `graph` in edge order."""

    def __init__(self, graph, lengths):
        lengths = tuple(lengths)
        if len(lengths) != graph.n_edges:
            raise ValueError("{:d} lengths for {:d} edges".format(len(lengths), graph.n_edges))
        for x in lengths:
            if isinstance(x, bool) or int(x) != x:
                raise ValueError("edge lengths must be integers, got {!r}".format(x))
            if x < 1:
                raise ValueError("edge lengths must be positive, got {!r}".format(x))
        self.graph = graph
        self.lengths = tuple(int(x) for x in lengths)

    @classmethod
    def uniform(cls, graph, m=1):
        return cls(graph, [m] * graph.n_edges)

    @classmethod
    def random(cls, graph, rng, choices=(1, 2, 3)):
        picks = rng.choice(len(choices), size=graph.n_edges)
        return cls(graph, [choices[int(i)] for i in picks])

    @property
    def total_vertices(self):
        """Vertex count of the subdivision."""
        return self.graph.n_vertices + sum(x - 1 for x in self.lengths)

    def __iter__(self):
        return iter(self.lengths)

    def __len__(self):
        return len(self.lengths)

    def __repr__(self):
        return "EdgeLengths({})".format(list(self.lengths))


class SubdividedGraph:
    """A subdivision together with the bookkeeping back to the original.

    graph -- the subdivided Graph; original vertices keep their indices
    base_graph -- the original Graph
    lengths -- the EdgeLengths used
    origin -- new vertex -> (edge index, position counted from the
        smaller endpoint)
    interiors -- edge index -> new vertices along the edge, in order
    """

    def __init__(self, graph, base_graph, lengths, origin, interiors):
        self.graph = graph
        self.base_graph = base_graph
        self.lengths = lengths
        self.origin = origin
        self.interiors = interiors

    @property
    def originals(self):
        return range(self.base_graph.n_vertices)

    def embed(self, D):
        """Copy a divisor on the original graph onto the subdivision."""
        values = list(D.coefficients) + [0] * (self.graph.n_vertices - self.base_graph.n_vertices)
        return Divisor(self.graph, values)

    def edge_index(self, u, w):
        """Index of the first original edge joining u and w."""
        key = (min(u, w), max(u, w))
        for e, edge in enumerate(self.base_graph.edges):
            if edge == key:
                return e
        raise ValueError("no edge between {:d} and {:d}".format(u, w))

    def interior(self, u, w):
        return self.interiors[self.edge_index(u, w)]

    def interior_chips(self, D, e):
        return sum(D[x] for x in self.interiors[e])


def subdivide(g, lengths, cap=DEFAULT_CAP):
    """Replace every edge of length l by a path of l unit edges.

    Keyword arguments:
    g -- Graph
    lengths -- EdgeLengths or a sequence of positive integers
    cap -- largest allowed vertex count of the result
    """
    if not isinstance(lengths, EdgeLengths):
        lengths = EdgeLengths(g, lengths)
    if lengths.total_vertices > cap:
        raise ResourceLimitError("subdivision needs {:d} vertices, cap is {:d}".format(
            lengths.total_vertices, cap))

    edges = []
    origin = {}
    interiors = []
    fresh = g.n_vertices
    for e, ((u, w), length) in enumerate(zip(g.edges, lengths)):
        path = [u]
        for position in range(1, length):
            origin[fresh] = (e, position)
            path.append(fresh)
            fresh += 1
        path.append(w)
        interiors.append(tuple(path[1:-1]))
        edges.extend(zip(path[:-1], path[1:]))
    graph = Graph(fresh, edges, label='subdivided')
    return SubdividedGraph(graph, g, lengths, origin, tuple(interiors))


def metric_graph_rank(g, lengths, D, cap=DEFAULT_CAP, full_support=False):
    """Rank of D on the metric graph g with integer edge lengths.

    Keyword arguments:
    g -- Graph (loopless)
    lengths -- EdgeLengths or sequence of positive integers
    D -- Divisor on g
    cap -- subdivision vertex cap
    full_support -- enumerate test divisors over every subdivision vertex
        instead of the original vertices only
    """
    sub = subdivide(g, lengths, cap)
    support = None if full_support else sub.originals
    return rank_oracle(sub.graph, sub.embed(D), base=g.n_vertices - 1, support=support).rank


def metric_rank(d, lengths, D, cap=DEFAULT_CAP, full_support=False):
    """Rank of D on K_d(l)."""
    g = complete_graph(d)
    if not isinstance(D, Divisor):
        D = Divisor(g, D)
    return metric_graph_rank(g, lengths, D, cap, full_support)


def segment_weights(sub, D, v, ordering):
    """D(A_1), ..., D(A_{d-1}) for the given ordering of the non-base
    original vertices."""
    placed = {v}
    weights = []
    for w in ordering:
        weight = D[w]
        for e, (x, y) in enumerate(sub.base_graph.edges):
            if (x == w and y in placed) or (y == w and x in placed):
                weight += sub.interior_chips(D, e)
        weights.append(weight)
        placed.add(w)
    return tuple(weights)


class MetricReducedReport:
    """The three reducedness conditions, checked separately.

    ordering and weights come from a greedy search (smallest D(A_i)
    first, ties by index); ordering is None if condition 3 fails.
    """

    def __init__(self, effective, interiors_ok, ordering, weights):
        self.effective = effective
        self.interiors_ok = interiors_ok
        self.ordering = ordering
        self.weights = weights

    @property
    def reduced(self):
        return self.effective and self.interiors_ok and self.ordering is not None

    def __bool__(self):
        return self.reduced


def _greedy_ordering(sub, D, v):
    remaining = [w for w in sub.originals if w != v]
    placed = {v}
    ordering = []
    weights = []
    for i in range(len(remaining)):
        best = None
        for w in remaining:
            weight = D[w] + sum(sub.interior_chips(D, e) for e, (x, y) in enumerate(sub.base_graph.edges)
                                if (x == w and y in placed) or (y == w and x in placed))
            if best is None or weight < best[0]:
                best = (weight, w)
        if best[0] > i:
            return None, tuple(weights)
        ordering.append(best[1])
        weights.append(best[0])
        placed.add(best[1])
        remaining.remove(best[1])
    return tuple(ordering), tuple(weights)


def check_metric_reduced(sub, D, v):
    """Evaluate the metric reducedness conditions of D at the original
    vertex v.

    Keyword arguments:
    sub -- SubdividedGraph of K_d(l)
    D -- Divisor on sub.graph
    v -- base vertex; must be an original vertex
    """
    if not sub.base_graph.is_complete():
        raise UnsupportedGraphError("metric reducedness is only implemented over K_d")
    if v not in sub.originals:
        raise ValueError("base {:d} is not an original vertex".format(v))
    effective = D.is_effective(outside=v)
    interiors_ok = all(sub.interior_chips(D, e) <= 1 for e in range(sub.base_graph.n_edges))
    ordering = None
    weights = ()
    if effective and interiors_ok:
        ordering, weights = _greedy_ordering(sub, D, v)
    return MetricReducedReport(effective, interiors_ok, ordering, weights)


@lru_cache(maxsize=None)
def half_subdivision(d):
    return subdivide(complete_graph(d), EdgeLengths.uniform(complete_graph(d), 2))


@lru_cache(maxsize=None)
def metric_reduced_profiles(d):
    """Non-base parts of all v_d-reduced divisors on K_d with every edge
    halved, as (degree, coefficients) pairs sorted by degree."""
    sub = half_subdivision(d)
    base = d - 1
    n = sub.graph.n_vertices
    midpoints = [sub.interiors[e][0] for e in range(sub.base_graph.n_edges)]
    profiles = []
    for marks in product((0, 1), repeat=len(midpoints)):
        for c in product(range(d - 1), repeat=d - 1):
            values = list(c) + [0] + [0] * (n - d)
            for x, mark in zip(midpoints, marks):
                values[x] = mark
            D = Divisor(sub.graph, values)
            if check_metric_reduced(sub, D, base).reduced:
                profiles.append((D.degree, D.coefficients))
    profiles.sort()
    return tuple(profiles)


def metric_sharpness_certificate(sub, k, D):
    """Show that a v_d-reduced D of degree k(d-1)-1 on K_d with uniform
    integer lengths has rank < k(k+1)/2.

    The alpha-sequence is read off the segment weights D(A_i) of the
    greedy reduced ordering; its certificate E sits on original vertices
    and is checked by reducing D - E on the subdivision.

    Keyword arguments:
    sub -- SubdividedGraph of K_d with equal edge lengths
    k -- 1 <= k <= d-3
    D -- Divisor on sub.graph, reduced at v_d
    """
    if not sub.base_graph.is_complete() or len(set(sub.lengths)) != 1:
        raise UnsupportedGraphError("certificates need K_d with equal edge lengths")
    d = sub.base_graph.n_vertices
    if not 1 <= k <= d - 3:
        raise ValueError("k must lie in [1, {:d}], got {:d}".format(d - 3, k))
    if D.degree != k * (d - 1) - 1:
        raise ValueError("degree must be {:d}, got {:d}".format(k * (d - 1) - 1, D.degree))
    v = d - 1
    report = check_metric_reduced(sub, D, v)
    if not report.reduced or D[v] < 0:
        raise ValueError("divisor is not v_d-reduced with effective base")

    bound = triangular(k)
    base = D[v]
    ordering = report.ordering
    chips = [0] * sub.graph.n_vertices
    if base < bound:
        chips[v] = base + 1
        certificate = SharpnessCertificate(None, 'immediate', ordering)
    else:
        a, b = divmod(base, d - 1)
        alpha = StarSequence([w + a - (i - 2) for i, w in enumerate(report.weights, start=1)], d, k, a, b)
        failures = alpha.condition_failures()
        if failures:
            raise InternalError("segment weights give a bad sequence: {}".format("; ".join(failures)))
        route, t1, t2 = place_route_chips(alpha, ordering, v, chips, D)
        certificate = SharpnessCertificate(None, route, ordering, a, b, t1, t2)

    # D(A_1) = 0, so v_1 holds no chip
    chips[ordering[0]] += bound - sum(chips)
    witness = Divisor(sub.graph, chips)
    if reduce(sub.graph, D - witness, v).base_coefficient >= 0:
        raise InternalError("certificate {!r} fails for {!r}".format(witness, D))
    certificate.witness = witness
    return certificate


def half_reduced_divisors_of_degree(d, s):
    """Yield every v_d-reduced divisor of degree s on the halved K_d."""
    sub = half_subdivision(d)
    for degree, values in metric_reduced_profiles(d):
        if degree > s:
            break
        chips = list(values)
        chips[d - 1] = s - degree
        yield Divisor(sub.graph, chips)


def unit_metric_gonality(d, r, verbose=False):
    """gamma_r of the unit metric graph K_d, searched over divisors on the
    half-edge subdivision.

    Only break points at vertices and edge midpoints are tried, so this is
    an upper bound that agrees with the graph formula in every case tried.
    """
    if r < 1:
        raise ValueError("r must be positive, got {:d}".format(r))
    sub = half_subdivision(d)
    base = d - 1
    profiles = metric_reduced_profiles(d)
    progress("{:d} reduced profiles on the halved K_{:d}".format(len(profiles), d), verbose)
    s = r
    while True:
        for degree, values in profiles:
            if degree > s:
                break
            chips = list(values)
            chips[base] = s - degree
            if rank_at_least(sub.graph, Divisor(sub.graph, chips), r, base=base, support=sub.originals):
                return s
        s += 1


def lemma_witness(d, k):
    """E = sum_{j=1}^{k+2} (k+2-j)(v_j), of degree k(k+3)/2 + 1."""
    values = [0] * d
    for j in range(1, k + 3):
        values[j - 1] = k + 2 - j
    return Divisor(complete_graph(d), values)


def lemma_check(d, k, lengths, cap=DEFAULT_CAP):
    """True iff sum(k(v_i)) - E reduces to a divisor negative at v_1 on
    K_d(l)."""
    g = complete_graph(d)
    sub = subdivide(g, lengths, cap)
    D = Divisor(g, [k] * d) - lemma_witness(d, k)
    return reduce(sub.graph, sub.embed(D), 0).base_coefficient < 0


class ExperimentRow:

    def __init__(self, experiment, d, k, trial, lengths, value, expected, passed):
        self.experiment = experiment
        self.d = d
        self.k = k
        self.trial = trial
        self.lengths = lengths
        self.value = value
        self.expected = expected
        self.passed = passed

    def __str__(self):
        return "{:s} {:d} {} {:d} {:s} {:d} {:d} {:s}".format(
            self.experiment, self.d, '-' if self.k is None else self.k, self.trial,
            ",".join(str(x) for x in self.lengths), self.value, self.expected,
            "ok" if self.passed else "FAIL")


def proposition_battery(d=5, trials=10, seed=0, choices=(1, 2, 3), cap=DEFAULT_CAP, verbose=False):
    """sum(2(v_i)) has rank 5 on K_d(l) for random integer l, d >= 5."""
    if d < 5:
        raise ValueError("the rank-5 experiment needs d >= 5, got {:d}".format(d))
    rng = make_rng(seed)
    g = complete_graph(d)
    D = Divisor(g, [2] * d)
    rows = []
    for trial in range(trials):
        lengths = EdgeLengths.random(g, rng, choices)
        value = metric_graph_rank(g, lengths, D, cap)
        rows.append(ExperimentRow('proposition', d, 2, trial, lengths.lengths, value, 5, value == 5))
        progress("proposition trial {:d}: rank {:d}".format(trial, value), verbose)
    return rows


def lemma_battery(d, trials=20, seed=0, choices=(1, 2, 3), cap=DEFAULT_CAP, verbose=False):
    """rank(sum(k(v_i))) <= k(k+3)/2 on K_d(l), with the explicit witness."""
    rng = make_rng(seed)
    g = complete_graph(d)
    rows = []
    for k in range(1, d - 2):
        bound = k * (k + 3) // 2
        D = Divisor(g, [k] * d)
        for trial in range(trials):
            lengths = EdgeLengths.random(g, rng, choices)
            witnessed = lemma_check(d, k, lengths, cap)
            value = metric_graph_rank(g, lengths, D, cap)
            rows.append(ExperimentRow('lemma', d, k, trial, lengths.lengths, value, bound,
                                      witnessed and value <= bound))
        progress("lemma battery d={:d} k={:d} done".format(d, k), verbose)
    return rows


def random_vertex_divisor(g, rng):
    """Random divisor of degree in [0, 2g-2], spread over the vertices."""
    degree = int(rng.integers(0, 2 * genus(g) - 1))
    values = [int(x) for x in rng.integers(-1, 3, size=g.n_vertices)]
    values[-1] += degree - sum(values)
    return Divisor(g, values)


def subdivision_invariance_battery(d, m_values=(2, 3), trials=50, seed=0, cap=DEFAULT_CAP, verbose=False):
    """Rank on K_d equals rank on its uniform m-subdivision."""
    rng = make_rng(seed)
    g = complete_graph(d)
    rows = []
    for trial in range(trials):
        D = random_vertex_divisor(g, rng)
        expected = rank_oracle(g, D).rank
        for m in m_values:
            lengths = EdgeLengths.uniform(g, m)
            value = metric_graph_rank(g, lengths, D, cap)
            rows.append(ExperimentRow('invariance', d, None, trial, lengths.lengths, value, expected,
                                      value == expected))
        progress("invariance trial {:d}: rank {:d}".format(trial, expected), verbose)
    return rows
