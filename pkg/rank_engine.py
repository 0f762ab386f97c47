"""Baker-Norine rank of divisors.

rk(D) is the largest r such that D - E is equivalent to an effective
divisor for every effective E of degree r (and -1 if D itself is not).
`rank_oracle` follows that definition literally; `rank_complete_fast` is
the decrement algorithm for K_d, which removes one chip at a time from a
zero vertex of the reduced form until the base goes negative.
"""
from graph_core import Divisor, canonical_divisor, complete_graph, genus
from reduction import reduce
from utils.errors import UnsupportedGraphError


class DecrementStep:
    """One subtraction of the decrement algorithm.

    s, t -- step label; labels run (1,0),(1,1),(2,0),(2,1),(2,2),(3,0),...
    vertex -- vertex the chip was taken from
    divisor -- reduced form after the subtraction
    """

    def __init__(self, s, t, vertex, divisor):
        self.s = s
        self.t = t
        self.vertex = vertex
        self.divisor = divisor

    @property
    def base_coefficient(self):
        return self.divisor[self.divisor.graph.n_vertices - 1]

    def __repr__(self):
        return "DecrementStep(s={:d}, t={:d}, vertex={:d})".format(self.s, self.t, self.vertex)


class RankResult:
    """Rank together with the divisor that proves it cannot be larger.

    rank -- integer >= -1
    negative_witness -- effective E of degree rank+1 with |D - E| empty;
        None for rank -1 and for the Riemann-Roch shortcut
    decrement_trace -- tuple of DecrementStep (fast path only)
    shortcut -- True if the rank came from deg(D) > 2g - 2
    """

    def __init__(self, rank, negative_witness=None, decrement_trace=(), shortcut=False):
        self.rank = rank
        self.negative_witness = negative_witness
        self.decrement_trace = tuple(decrement_trace)
        self.shortcut = shortcut

    def __repr__(self):
        return "RankResult(rank={:d}, witness={!r})".format(self.rank, self.negative_witness)


def _compositions(slots, total):
    # colex: the last slot is the outermost loop
    if slots == 0:
        if total == 0:
            yield ()
        return
    if slots == 1:
        yield (total,)
        return
    for last in range(total + 1):
        for head in _compositions(slots - 1, total - last):
            yield head + (last,)


def effective_divisors(n, degree, support=None):
    """Yield coefficient tuples of all effective divisors of `degree` on n
    vertices, in colex order.

    Keyword arguments:
    n -- number of vertices
    degree -- total number of chips
    support -- optional iterable of vertices allowed to carry chips
    """
    if degree < 0:
        return
    slots = list(range(n)) if support is None else sorted(set(support))
    for chips in _compositions(len(slots), degree):
        values = [0] * n
        for v, c in zip(slots, chips):
            values[v] = c
        yield tuple(values)


def _is_base_negative(g, D, base):
    return reduce(g, D, base).base_coefficient < 0


def _first_failure(g, D, r, base, support):
    """First effective E of degree r (colex) with |D - E| empty, or None."""
    for chips in effective_divisors(g.n_vertices, r, support):
        E = Divisor(g, chips)
        if _is_base_negative(g, D - E, base):
            return E
    return None


def rank_oracle(g, D, base=None, support=None):
    """Rank of D straight from the definition.

    Every effective E of degree 1, 2, ... is tried until some D - E has an
    empty linear system. Above degree 2g - 2 the rank is deg(D) - g and is
    returned without enumeration.

    Keyword arguments:
    g -- connected Graph
    D -- Divisor on g
    base -- vertex used for the reductions (default: last vertex)
    support -- restrict E to these vertices; only valid when they form a
        rank-determining set
    """
    base = g.n_vertices - 1 if base is None else base
    if D.degree < 0:
        return RankResult(-1)
    if D.degree > 2 * genus(g) - 2:
        return RankResult(D.degree - genus(g), shortcut=True)
    if _is_base_negative(g, D, base):
        return RankResult(-1)

    r = 1
    while True:
        E = _first_failure(g, D, r, base, support)
        if E is not None:
            return RankResult(r - 1, negative_witness=E)
        r += 1


def rank_at_least(g, D, r, base=None, support=None):
    """True iff rk(D) >= r. Stops at the first failing E."""
    base = g.n_vertices - 1 if base is None else base
    if r < 0:
        return True
    if D.degree < r:
        return False
    if D.degree > 2 * genus(g) - 2:
        return D.degree - genus(g) >= r
    return _first_failure(g, D, r, base, support) is None


def _step_labels():
    s = 1
    while True:
        for t in range(s + 1):
            yield s, t
        s += 1


def rank_complete_fast(d, D):
    """Rank of a divisor on K_d by repeated decrements.

    Reduce at v_d; while the base coefficient is non-negative take one chip
    from the zero-coefficient vertex of smallest index and reduce again.
    Each subtraction lowers the rank by exactly one, so the rank is the
    number of subtractions minus one.
    """
    g = D.graph
    if g.n_vertices != d or not g.is_complete():
        raise UnsupportedGraphError("rank_complete_fast needs K_{:d}".format(d))
    base = d - 1
    current = reduce(g, D, base).divisor
    if current[base] < 0:
        return RankResult(-1)

    taken = [0] * d
    trace = []
    labels = _step_labels()
    while current[base] >= 0:
        w = min(v for v in range(base) if current[v] == 0)
        taken[w] += 1
        current = reduce(g, current.add_chips(w, -1), base).divisor
        s, t = next(labels)
        trace.append(DecrementStep(s, t, w, current))
    return RankResult(len(trace) - 1, negative_witness=Divisor(g, taken), decrement_trace=trace)


def dst_closed_form(d, k, s, t):
    """The v_d-reduced divisor reached at step (s, t) when the decrement
    algorithm starts from kd(v_d).

    Keyword arguments:
    d -- number of vertices of K_d
    k -- multiple of d placed on v_d
    s -- 1 <= s <= d-1
    t -- 0 <= t <= s
    """
    if k < 1:
        raise ValueError("k must be positive, got {:d}".format(k))
    if not 1 <= s <= d - 1:
        raise ValueError("s must lie in [1, {:d}], got {:d}".format(d - 1, s))
    if not 0 <= t <= s:
        raise ValueError("t must lie in [0, {:d}], got {:d}".format(s, t))
    values = [0] * d
    values[d - 1] = k * d - s * (d - 1) - t
    # label i is vertex index i-1
    for i in range(1, d):
        if i > s:
            values[i - 1] = s - t
        elif i > t:
            values[i - 1] = i - t - 1
        else:
            values[i - 1] = d - 2 - t + i
    return Divisor(complete_graph(d), values)


def format_trace(trace):
    """Render a decrement trace as lines 's t coeff@vd'."""
    return ["{:d} {:d} {:d}".format(step.s, step.t, step.base_coefficient) for step in trace]


def riemann_roch_defect(g, D):
    """rk(D) - rk(K - D) - (deg(D) - g + 1); zero for every divisor."""
    K = canonical_divisor(g)
    left = rank_oracle(g, D).rank - rank_oracle(g, K - D).rank
    return left - (D.degree - genus(g) + 1)
