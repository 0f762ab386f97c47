"""v-reduced divisors.

A divisor D is v-reduced if it is effective away from v and every
non-empty A in V - {v} has a vertex w with D(w) < outdeg_A(w). Reducedness
is tested with Dhar's burning algorithm; reduction first pulls the
non-base vertices out of debt layer by layer and then fires unburnt sets
until everything burns.

On K_d there is a much simpler certificate: D is v-reduced iff the
non-base coefficients sorted ascending satisfy D(v_i) <= i-1.
"""
from collections import deque
from itertools import combinations

from graph_core import Divisor, FiringScript
from utils.errors import UnsupportedGraphError


class BurnRecord:
    """Result of one burning pass.

    order -- vertices in the order they caught fire, starting at the base
    unburnt -- vertices that never burnt (empty iff the divisor is reduced,
        provided it is effective away from the base)
    """

    def __init__(self, order, unburnt):
        self.order = tuple(order)
        self.unburnt = tuple(unburnt)

    @property
    def complete(self):
        return not self.unburnt


class ReducedForm:
    """The v-reduced representative of a divisor class plus its certificate.

    divisor -- the unique v-reduced divisor equivalent to the input
    base -- the vertex v
    script -- FiringScript with original + div(script) == divisor
    ordering -- on K_d, the non-base vertices v_1..v_{d-1} with
        divisor(v_i) <= i-1; None on other graphs
    burn_order -- the Dhar burning record of `divisor` from `base`
    """

    def __init__(self, divisor, base, script, ordering, burn_order):
        self.divisor = divisor
        self.base = base
        self.script = script
        self.ordering = ordering
        self.burn_order = burn_order

    @property
    def witness(self):
        return self.ordering if self.ordering is not None else self.burn_order

    @property
    def base_coefficient(self):
        return self.divisor[self.base]

    def __repr__(self):
        return "ReducedForm(divisor={!r}, base={:d}, script={!r})".format(
            self.divisor, self.base, self.script)


def burn(g, D, v):
    """Run Dhar's burning algorithm on D from v.

    A vertex catches fire once D(w) is smaller than the number of edges
    joining it to burnt vertices.

    Keyword arguments:
    g -- Graph
    D -- Divisor or plain list of coefficients
    v -- base vertex where the fire starts
    """
    values = D.coefficients if isinstance(D, Divisor) else D
    heat = [0] * g.n_vertices
    burnt = [False] * g.n_vertices
    burnt[v] = True
    order = [v]
    queue = deque([v])
    while queue:
        x = queue.popleft()
        for w, mult in g.neighbors[x]:
            if burnt[w]:
                continue
            heat[w] += mult
            if values[w] < heat[w]:
                burnt[w] = True
                order.append(w)
                queue.append(w)
    unburnt = [w for w in range(g.n_vertices) if not burnt[w]]
    return BurnRecord(order, unburnt)


def is_v_reduced(g, D, v):
    if not D.is_effective(outside=v):
        return False
    return burn(g, D, v).complete


def outdeg(g, A, w):
    """Number of edges from w to vertices outside A (multiplicities count)."""
    return sum(mult for x, mult in g.neighbors[w] if x not in A)


def is_v_reduced_by_subsets(g, D, v):
    """Reducedness straight from the definition: every non-empty subset of
    V - {v} has an unsaturated vertex. Exponential; for cross-checks only.
    """
    if not D.is_effective(outside=v):
        return False
    others = [w for w in g.vertices() if w != v]
    for size in range(1, len(others) + 1):
        for subset in combinations(others, size):
            A = set(subset)
            if not any(D[w] < outdeg(g, A, w) for w in subset):
                return False
    return True


def _clear_debt(g, values, script, v):
    """Make every vertex except v non-negative.

    Borrowing by B_j = {w : dist(v, w) >= j} raises only layer j and lowers
    only layer j-1, so one pass from the outermost layer inwards is enough.
    """
    dist = g.distances_from(v)
    depth = max(dist.values())
    layers = [[] for _ in range(depth + 1)]
    for w, j in dist.items():
        layers[j].append(w)

    for j in range(depth, 0, -1):
        debt = max(-values[w] for w in layers[j])
        if debt <= 0:
            continue
        for w, dw in dist.items():
            if dw >= j:
                script[w] += debt
        for w in layers[j]:
            for x, mult in g.neighbors[w]:
                if dist[x] == j - 1:
                    values[w] += debt * mult
                    values[x] -= debt * mult


def _fire_unburnt(g, values, script, unburnt):
    """Fire the unburnt set as many times as it stays effective."""
    inside = set(unburnt)
    out = {w: outdeg(g, inside, w) for w in unburnt}
    times = min(values[w] // out[w] for w in unburnt if out[w] > 0)
    for w in unburnt:
        script[w] -= times
        values[w] -= times * out[w]
        for x, mult in g.neighbors[w]:
            if x not in inside:
                values[x] += times * mult


def reduce(g, D, v):
    """Return the ReducedForm of D with respect to v.

    Keyword arguments:
    g -- connected Graph
    D -- Divisor on g
    v -- base vertex
    """
    if not g.is_connected():
        raise ValueError("reduction needs a connected graph")
    values = list(D.coefficients)
    script = [0] * g.n_vertices

    _clear_debt(g, values, script, v)
    record = burn(g, values, v)
    while not record.complete:
        _fire_unburnt(g, values, script, record.unburnt)
        record = burn(g, values, v)

    divisor = Divisor(g, values)
    ordering = None
    if g.is_complete():
        ordering = reduced_witness_ordering(g.n_vertices, divisor, v)
    return ReducedForm(divisor, v, FiringScript(g, script), ordering, record.order)


def reduced_witness_ordering(d, D, v):
    """Ordering v_1..v_{d-1} of the non-base vertices of K_d with
    0 <= D(v_i) <= i-1, or None if there is none.

    Sorting by coefficient (ties by index) finds such an ordering whenever
    one exists.
    """
    g = D.graph
    if g.n_vertices != d or not g.is_complete():
        raise UnsupportedGraphError("reduced_witness_ordering needs K_{:d}".format(d))
    ranked = sorted((c, w) for w, c in enumerate(D.coefficients) if w != v)
    for i, (c, _) in enumerate(ranked):
        if c < 0 or c > i:
            return None
    return tuple(w for _, w in ranked)
