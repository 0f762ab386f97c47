"""Gonality sequence of K_d.

gamma_r is the smallest degree of a divisor of rank at least r. For
1 <= r < g write r = k(k+3)/2 - h with 1 <= k <= d-3 and 0 <= h <= k;
then gamma_r = kd - h. For r >= g, gamma_r = g + r.

The brute force walks all v_d-reduced divisors of a degree (one per
class) and asks the decrement algorithm for the rank. The certificates
below show the two halves of the formula directly: `upper_witness` and
`specialization_family` reach the rank, `sharpness_certificate` shows
that degree k(d-1)-1 cannot reach k(k+1)/2.
"""
from functools import lru_cache
from itertools import product

from graph_core import Divisor, complete_graph
from rank_engine import dst_closed_form, rank_complete_fast
from reduction import reduce, reduced_witness_ordering
from sequence_lab import alpha_from_divisor, t1_t2
from utils.basic import positive_part, progress, triangular
from utils.errors import InternalError, OutOfRangeError


def complete_genus(d):
    return (d - 1) * (d - 2) // 2


class GonalityDecomposition:
    """r = k(k+3)/2 - h together with gamma_r.

    k and h are None when r >= g.
    """

    def __init__(self, r, k, h, gamma, g):
        self.r = r
        self.k = k
        self.h = h
        self.gamma = gamma
        self.g = g

    def __repr__(self):
        return "GonalityDecomposition(r={:d}, k={!r}, h={!r}, gamma={:d})".format(
            self.r, self.k, self.h, self.gamma)


def _check_degree(d):
    if d < 4:
        raise ValueError("the gonality formula needs d >= 4, got {:d}".format(d))


def decompose_rank(d, r):
    """The unique (k, h) with r = k(k+3)/2 - h, 1 <= k <= d-3, 0 <= h <= k."""
    _check_degree(d)
    g = complete_genus(d)
    if r < 1:
        raise ValueError("r must be positive, got {:d}".format(r))
    if r >= g:
        raise OutOfRangeError("r = {:d} >= g = {:d}; use gamma_r = g + r".format(r, g))
    found = [(k, h) for k in range(1, d - 2) for h in range(k + 1)
             if k * (k + 3) // 2 - h == r]
    if len(found) != 1:
        raise InternalError("rank {:d} on K_{:d} decomposes as {}".format(r, d, found))
    k, h = found[0]
    return GonalityDecomposition(r, k, h, k * d - h, g)


def gonality_formula(d, r):
    _check_degree(d)
    if r < 1:
        raise ValueError("r must be positive, got {:d}".format(r))
    g = complete_genus(d)
    if r >= g:
        return g + r
    return decompose_rank(d, r).gamma


@lru_cache(maxsize=None)
def reduced_classes(d):
    """Every non-base profile (c_1..c_{d-1}) of a v_d-reduced divisor on K_d.

    Together with a base coefficient s - sum(c) these give one
    representative per divisor class of degree s.
    """
    profiles = []
    for c in product(range(d - 1), repeat=d - 1):
        if all(x <= i for i, x in enumerate(sorted(c))):
            profiles.append(c)
    return tuple(profiles)


@lru_cache(maxsize=None)
def max_rank_of_degree(d, s):
    """Largest rank of a divisor of degree s on K_d."""
    g = complete_genus(d)
    if s < 0:
        return -1
    if s > 2 * g - 2:
        return s - g
    graph = complete_graph(d)
    best = -1
    for c in reduced_classes(d):
        base = s - sum(c)
        if base < 0:
            continue
        best = max(best, rank_complete_fast(d, Divisor(graph, c + (base,))).rank)
    return best


def gonality_bruteforce(d, r):
    """Smallest s such that some degree-s class has rank >= r."""
    if r < 1:
        raise ValueError("r must be positive, got {:d}".format(r))
    s = r
    while max_rank_of_degree(d, s) < r:
        s += 1
    return s


def gonality_sequence(d, max_r=None):
    """gamma_1, ..., gamma_max_r from the formula (max_r defaults to g)."""
    max_r = complete_genus(d) if max_r is None else max_r
    return [gonality_formula(d, r) for r in range(1, max_r + 1)]


def gonality_table(d, max_r=None, bruteforce=True, verbose=False):
    """Rows (r, k, h, gamma_formula, gamma_bruteforce) for r = 1..max_r.

    k and h are None for r >= g; gamma_bruteforce is None when the brute
    force is switched off.
    """
    g = complete_genus(d)
    max_r = g if max_r is None else max_r
    rows = []
    for r in range(1, max_r + 1):
        if r < g:
            dec = decompose_rank(d, r)
            k, h = dec.k, dec.h
        else:
            k = h = None
        brute = gonality_bruteforce(d, r) if bruteforce else None
        rows.append((r, k, h, gonality_formula(d, r), brute))
        progress("r={:d} done".format(r), verbose)
    return rows


def _check_kh(d, k, h=0):
    if not 1 <= k <= d - 3:
        raise ValueError("k must lie in [1, {:d}], got {:d}".format(d - 3, k))
    if not 0 <= h <= k:
        raise ValueError("h must lie in [0, {:d}], got {:d}".format(k, h))


def upper_witness(d, k, h):
    """kd(v_d) - (v_1) - ... - (v_h), a divisor of degree kd - h and rank
    k(k+3)/2 - h."""
    _check_kh(d, k, h)
    values = [0] * d
    values[d - 1] = k * d
    for i in range(h):
        values[i] = -1
    return Divisor(complete_graph(d), values)


class SpecializationWitness:
    """The divisor sum((k - a_i)(v_i)) with the E bounding its rank.

    labels -- vertex indices of v_1..v_d after sorting a descending
    expected_rank -- k(k+3)/2 - h
    reduced -- reduce(D - E, v_1); negative at v_1
    """

    def __init__(self, divisor, witness, labels, expected_rank, reduced):
        self.divisor = divisor
        self.witness = witness
        self.labels = labels
        self.expected_rank = expected_rank
        self.reduced = reduced


def specialization_family(d, k, a):
    """Build sum((k - a_i)(v_i)) and check the E that caps its rank.

    Keyword arguments:
    d -- number of vertices
    k -- 1 <= k <= d-3
    a -- d non-negative integers with sum h <= k, one per vertex
    """
    a = [int(x) for x in a]
    if len(a) != d:
        raise ValueError("a needs {:d} entries, got {:d}".format(d, len(a)))
    if any(x < 0 for x in a):
        raise ValueError("a must be non-negative")
    h = sum(a)
    _check_kh(d, k, h)

    graph = complete_graph(d)
    labels = tuple(sorted(range(d), key=lambda v: (-a[v], v)))
    divisor = Divisor(graph, [k - x for x in a])
    chips = [0] * d
    for i in range(1, k + 2):
        v = labels[i - 1]
        chips[v] = k - a[v] - (i - 2)
    witness = Divisor(graph, chips)

    reduced = reduce(graph, divisor - witness, labels[0])
    if reduced.base_coefficient >= 0:
        raise InternalError("specialization witness does not cap the rank for a={}".format(a))
    return SpecializationWitness(divisor, witness, labels, k * (k + 3) // 2 - h, reduced)


class SharpnessCertificate:
    """Effective E of degree k(k+1)/2 with |D - E| empty.

    route -- 'immediate' (D(v_d) < k(k+1)/2), 't1' or 't2'
    a, b -- D(v_d) = a(d-1) + b (None on the immediate route)
    t1, t2 -- certificate degrees from the alpha-sequence (None likewise)
    ordering -- reduced ordering v_1..v_{d-1} of D
    """

    def __init__(self, witness, route, ordering, a=None, b=None, t1=None, t2=None):
        self.witness = witness
        self.route = route
        self.ordering = ordering
        self.a = a
        self.b = b
        self.t1 = t1
        self.t2 = t2

    def __repr__(self):
        return "SharpnessCertificate(route={!r}, witness={!r})".format(self.route, self.witness)


def place_route_chips(alpha, ordering, base, chips, D):
    """Put the t1 or t2 certificate of an alpha-sequence into `chips`.

    alpha_i belongs to ordering[i-1]; returns (route, t1, t2).
    """
    bound = triangular(alpha.k)
    t1, t2 = t1_t2(alpha)
    if t1 <= bound:
        for v, x in zip(ordering, alpha):
            chips[v] = positive_part(x)
        return 't1', t1, t2
    if t2 <= bound:
        chips[base] = alpha.b + 1
        for v, x in zip(ordering, alpha):
            chips[v] = positive_part(x - 1)
        return 't2', t1, t2
    raise InternalError("min(t1, t2) = {:d} exceeds {:d} for {!r}".format(min(t1, t2), bound, D))


def sharpness_certificate(d, k, D):
    """Show that the v_d-reduced D of degree k(d-1)-1 has rank < k(k+1)/2.

    Keyword arguments:
    d -- number of vertices
    k -- 1 <= k <= d-3
    D -- v_d-reduced Divisor on K_d
    """
    _check_kh(d, k)
    if D.degree != k * (d - 1) - 1:
        raise ValueError("degree must be {:d}, got {:d}".format(k * (d - 1) - 1, D.degree))
    ordering = reduced_witness_ordering(d, D, d - 1)
    if ordering is None or D[d - 1] < 0:
        raise ValueError("divisor is not v_d-reduced with effective base")

    graph = D.graph
    bound = triangular(k)
    base = D[d - 1]
    first = ordering[0]
    chips = [0] * d
    if base < bound:
        chips[d - 1] = base + 1
        certificate = SharpnessCertificate(None, 'immediate', ordering)
    else:
        a, b = divmod(base, d - 1)
        alpha = alpha_from_divisor(d, D, a, k)
        route, t1, t2 = place_route_chips(alpha, ordering, d - 1, chips, D)
        certificate = SharpnessCertificate(None, route, ordering, a, b, t1, t2)

    # pad on v_1, which has coefficient 0
    chips[first] += bound - sum(chips)
    witness = Divisor(graph, chips)
    if reduce(graph, D - witness, d - 1).base_coefficient >= 0:
        raise InternalError("certificate {!r} fails for {!r}".format(witness, D))
    certificate.witness = witness
    return certificate


def reduced_divisors_of_degree(d, s):
    """Yield every v_d-reduced divisor of degree s with effective base."""
    graph = complete_graph(d)
    for c in reduced_classes(d):
        base = s - sum(c)
        if base >= 0:
            yield Divisor(graph, c + (base,))


class TheoremCheck:

    def __init__(self, name, passed, detail):
        self.name = name
        self.passed = passed
        self.detail = detail

    def __str__(self):
        return "{:s} {:s} {:s}".format(self.name, "ok" if self.passed else "FAIL", self.detail)


def verify_theorem(d, max_r=None, verbose=False):
    """Re-check the gonality formula of K_d from all sides.

    Returns a list of TheoremCheck rows: the rank of kd(v_d) with its full
    decrement trace, the upper witnesses, the sharpness certificates for
    every k and the brute-force gonality sequence up to max_r (default g+2).
    """
    _check_degree(d)
    g = complete_genus(d)
    graph = complete_graph(d)
    max_r = g + 2 if max_r is None else max_r
    checks = []

    for k in range(1, d - 2):
        result = rank_complete_fast(d, Divisor.point(graph, d - 1, k * d))
        expected = k * (k + 3) // 2
        trace_ok = all(step.divisor == dst_closed_form(d, k, step.s, step.t)
                       for step in result.decrement_trace if step.s <= d - 1)
        checks.append(TheoremCheck("rank k={:d}".format(k), result.rank == expected and trace_ok,
                                   "rank {:d} expected {:d}".format(result.rank, expected)))
    progress("rank theorem checked", verbose)

    for k in range(1, d - 2):
        for h in range(k + 1):
            rank = rank_complete_fast(d, upper_witness(d, k, h)).rank
            expected = k * (k + 3) // 2 - h
            checks.append(TheoremCheck("upper k={:d} h={:d}".format(k, h), rank == expected,
                                       "rank {:d} expected {:d}".format(rank, expected)))
    progress("upper witnesses checked", verbose)

    for k in range(1, d - 2):
        count = 0
        failed = 0
        for D in reduced_divisors_of_degree(d, k * (d - 1) - 1):
            count += 1
            try:
                sharpness_certificate(d, k, D)
            except InternalError:
                failed += 1
        checks.append(TheoremCheck("sharpness k={:d}".format(k), failed == 0,
                                   "{:d} divisors, {:d} failures".format(count, failed)))
        progress("sharpness certificates for k={:d}: {:d} divisors".format(k, count), verbose)

    for r in range(1, max_r + 1):
        formula = gonality_formula(d, r)
        brute = gonality_bruteforce(d, r)
        checks.append(TheoremCheck("gamma r={:d}".format(r), formula == brute,
                                   "formula {:d} bruteforce {:d}".format(formula, brute)))
        progress("gamma_{:d} = {:d}".format(r, brute), verbose)
    return checks
