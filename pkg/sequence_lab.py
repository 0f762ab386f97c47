"""Integer sequences behind the sharpness argument for K_d.

A v_d-reduced divisor D of degree k(d-1)-1 with D(v_d) = a(d-1) + b is
encoded by alpha_i = D(v_i) + a - (i-2), where v_1..v_{d-1} is its reduced
ordering. Such sequences satisfy condition (*):

    a-i+2 <= alpha_i <= a+1,   alpha_{i+1} >= alpha_i - 1,
    sum(alpha) = k(d-1) - (d-2)(d-3)/2 - b.

Among all sequences with a given sum, the extremal beta^(p,q) dominates
the positive parts of every other one, which bounds

    t1 = sum(alpha_i^+),   t2 = b + 1 + sum((alpha_i - 1)^+)

and min(t1, t2) <= k(k+1)/2 is what the certificates need.
"""
from reduction import reduced_witness_ordering
from utils.basic import positive_part, progress, triangular
from utils.errors import InternalError, OutOfRangeError


def target_sum(d, k, b):
    """Sum every alpha-sequence with parameters (d, k, b) must have."""
    return k * (d - 1) - (d - 2) * (d - 3) // 2 - b


class StarSequence:
    """An alpha-sequence with its context (d, k, a, b).

    values[0] is alpha_1.
    """

    def __init__(self, values, d, k, a, b):
        self.values = tuple(int(x) for x in values)
        if len(self.values) != d - 1:
            raise ValueError("sequence needs {:d} entries, got {:d}".format(d - 1, len(self.values)))
        self.d = d
        self.k = k
        self.a = a
        self.b = b

    def condition_failures(self):
        """Return a list of human readable condition (*) violations."""
        a = self.a
        failures = []
        for i, x in enumerate(self.values, start=1):
            if x > a + 1:
                failures.append("alpha_{:d} = {:d} > a+1".format(i, x))
            if x < a - i + 2:
                failures.append("alpha_{:d} = {:d} < a-i+2".format(i, x))
            if i > 1 and x < self.values[i - 2] - 1:
                failures.append("alpha_{:d} drops by more than one".format(i))
        expected = target_sum(self.d, self.k, self.b)
        if sum(self.values) != expected:
            failures.append("sum is {:d}, expected {:d}".format(sum(self.values), expected))
        return failures

    @property
    def is_admissible(self):
        return not self.condition_failures()

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)

    def __repr__(self):
        return "StarSequence({}, d={:d}, k={:d}, a={:d}, b={:d})".format(
            list(self.values), self.d, self.k, self.a, self.b)


class BetaParams:
    """Parameters (p, q) of an extremal sequence and the sequence itself.

    q is None for the constant sequence p = d-1.
    """

    def __init__(self, d, a, p, q):
        self.d = d
        self.a = a
        self.p = p
        self.q = q
        self.sequence = beta_sequence(d, a, p, q)

    def __repr__(self):
        return "BetaParams(p={:d}, q={!r}, sequence={})".format(self.p, self.q, list(self.sequence))


def beta_sequence(d, a, p, q=None):
    """beta^(p,q): a+1 on the first p entries, then descending by one,
    with a single repeat at position q.

    Keyword arguments:
    d -- number of vertices; the sequence has d-1 entries
    a -- top value minus one
    p -- length of the constant head, 1 <= p <= d-1
    q -- position of the repeat, p+2 <= q <= d (None when p = d-1);
        q = d means no repeat inside the sequence
    """
    if p == d - 1:
        return tuple([a + 1] * (d - 1))
    if not 1 <= p <= d - 2:
        raise ValueError("p must lie in [1, {:d}], got {:d}".format(d - 1, p))
    if q is None or not p + 2 <= q <= d:
        raise ValueError("q must lie in [{:d}, {:d}], got {!r}".format(p + 2, d, q))
    values = []
    for i in range(1, d):
        if i <= p:
            values.append(a + 1)
        elif i < q:
            values.append(p + a + 1 - i)
        else:
            values.append(p + a + 2 - i)
    return tuple(values)


def beta_sum(d, a, p, q=None):
    """Closed form of sum(beta^(p,q))."""
    if p == d - 1:
        return (d - 1) * (a + 1)
    return (d - 1) * (a + 1) - (d - 1 - p) * (d - p) // 2 + (d - q)


def q_for_p(d, k, a, b, p):
    return (d - 1) * (p - (k - a)) - p * (p - 1) // 2 + b + 2


def solve_pq(d, k, a, b):
    """The unique (p, q) whose beta sequence has the alpha target sum.

    Keyword arguments:
    d -- number of vertices
    k -- 1 <= k <= d-3
    a -- 0 <= a <= k-1
    b -- 0 <= b <= d-2
    """
    if not 1 <= k <= d - 3:
        raise ValueError("k must lie in [1, {:d}], got {:d}".format(d - 3, k))
    if not 0 <= a <= k - 1:
        raise ValueError("a must lie in [0, {:d}], got {:d}".format(k - 1, a))
    if not 0 <= b <= d - 2:
        raise ValueError("b must lie in [0, {:d}], got {:d}".format(d - 2, b))

    target = target_sum(d, k, b)
    lowest, highest = beta_sum(d, a, 1, d), beta_sum(d, a, d - 1)
    if not lowest <= target <= highest:
        raise OutOfRangeError("no sequence satisfies (*) for d={:d} k={:d} a={:d} b={:d}: "
                              "sum {:d} outside [{:d}, {:d}]".format(d, k, a, b, target, lowest, highest))

    found = []
    for p in range(1, d - 1):
        q = q_for_p(d, k, a, b, p)
        if p + 2 <= q <= d:
            found.append((p, q))
    if target == highest:
        found.append((d - 1, None))
    if len(found) != 1:
        raise InternalError("expected one admissible p for d={:d} k={:d} a={:d} b={:d}, found {}".format(
            d, k, a, b, found))

    p, q = found[0]
    params = BetaParams(d, a, p, q)
    if sum(params.sequence) != target:
        raise InternalError("beta^({:d},{!r}) misses the target sum".format(p, q))
    return params


def alpha_from_divisor(d, D, a, k=None):
    """alpha-sequence of a v_d-reduced divisor on K_d.

    Vertices are relabelled by the reduced ordering (ascending coefficient,
    ascending index on ties), so the input does not need to be sorted.

    Keyword arguments:
    d -- number of vertices
    D -- v_d-reduced Divisor on K_d
    a -- shift; usually D(v_d) // (d-1)
    k -- degree parameter; derived from deg(D) = k(d-1) - 1 when omitted
    """
    if k is None:
        k, rest = divmod(D.degree + 1, d - 1)
        if rest:
            raise ValueError("degree {:d} is not of the form k(d-1)-1".format(D.degree))
    ordering = reduced_witness_ordering(d, D, d - 1)
    if ordering is None:
        raise ValueError("divisor is not v_d-reduced")
    b = D[d - 1] - a * (d - 1)
    values = [D[w] + a - (i - 2) for i, w in enumerate(ordering, start=1)]
    sequence = StarSequence(values, d, k, a, b)
    failures = sequence.condition_failures()
    if failures:
        raise ValueError("alpha-sequence breaks condition (*): " + "; ".join(failures))
    return sequence


def t1_t2(s):
    """The two certificate degrees of an alpha-sequence."""
    t1 = sum(positive_part(x) for x in s)
    t2 = s.b + 1 + sum(positive_part(x - 1) for x in s)
    return t1, t2


def check_domination(s, bp):
    """True iff beta dominates alpha on both positive-part sums."""
    beta = bp.sequence
    if sum(s) != sum(beta):
        raise ValueError("sums differ: {:d} vs {:d}".format(sum(s), sum(beta)))
    first = sum(positive_part(x) for x in s) <= sum(positive_part(x) for x in beta)
    second = sum(positive_part(x - 1) for x in s) <= sum(positive_part(x - 1) for x in beta)
    return first and second


def enumerate_star_sequences(d, k, a, b):
    """Yield every tuple satisfying condition (*) for (d, k, a, b).

    Depth first over alpha_2..alpha_{d-1}. After choosing x at position i
    the remaining R entries sum to at least R*x - R(R+1)/2 and at most
    (a+1)*R, which prunes every dead branch.
    """
    n = d - 1
    target = target_sum(d, k, b)
    prefix = [a + 1]

    def extend(i, total):
        # i is the 1-based position to fill next
        if i > n:
            if total == target:
                yield tuple(prefix)
            return
        low = max(a - i + 2, prefix[-1] - 1)
        rest = n - i
        for x in range(low, a + 2):
            lo_sum = total + x + rest * x - triangular(rest)
            hi_sum = total + x + (a + 1) * rest
            if lo_sum <= target <= hi_sum:
                prefix.append(x)
                yield from extend(i + 1, total + x)
                prefix.pop()

    rest = n - 1
    if rest * (a + 1) - triangular(rest) + a + 1 <= target <= n * (a + 1):
        yield from extend(2, a + 1)


def claim_case(bp):
    """Which of the three shapes an extremal sequence beta^(p,q) has.

    1 -- the last entry is positive
    2 -- last entry <= 0 and q < a+p+2
    3 -- q >= a+p+2
    """
    if bp.sequence[-1] > 0:
        return 1
    if bp.q < bp.a + bp.p + 2:
        return 2
    return 3


def case_formula(d, k, bp):
    """Closed form for the one of t1, t2 on beta^(p,q) that stays within k(k+1)/2.

    Returns (which, value) with which in {'t1', 't2'}.
    """
    a, p, q = bp.a, bp.p, bp.q
    base = (k - 1) * (d - 1) - (d - 2) * (d - 3) // 2 + 1
    case = claim_case(bp)
    if case == 1:
        return 't2', base
    if case == 2:
        return 't2', base + (d - p - a - 2) * (d - p - a - 1) // 2
    if p == k - a:
        return 't1', triangular(k) - p * (p - 1) // 2
    return 't2', base + (d - p - a - 1) * (d - p - a - 2) // 2 + q - p - a - 1


class ClaimReport:
    """Outcome of an exhaustive min(t1, t2) <= k(k+1)/2 sweep for one (d, k)."""

    def __init__(self, d, k):
        self.d = d
        self.k = k
        self.sequences_checked = 0
        self.violations = []
        self.domination_failures = []
        self.case_mismatches = []
        self.case_bound_failures = []
        self.condition_failures = []
        self.pq_failures = []
        self.case_counts = {1: 0, 2: 0, 3: 0}

    @property
    def failure_count(self):
        return (len(self.violations) + len(self.domination_failures) + len(self.case_mismatches)
                + len(self.case_bound_failures) + len(self.condition_failures)
                + len(self.pq_failures))

    @property
    def ok(self):
        return self.failure_count == 0

    def summary_line(self):
        return "{:d} {:d} {:d} {:d}".format(self.d, self.k, self.sequences_checked, self.failure_count)


def verify_claim(d, k, verbose=False):
    """Check min(t1, t2) <= k(k+1)/2 for every admissible alpha.

    For each (a, b) the extremal beta is also checked against its case
    formula and against every alpha it should dominate.
    """
    if not 1 <= k <= d - 3:
        raise ValueError("k must lie in [1, {:d}], got {:d}".format(d - 3, k))
    report = ClaimReport(d, k)
    bound = triangular(k)
    positions = range(1, d)

    for a in range(k):
        for b in range(d - 1):
            sequences = list(enumerate_star_sequences(d, k, a, b))
            if not sequences:
                continue
            try:
                bp = solve_pq(d, k, a, b)
            except (OutOfRangeError, InternalError) as err:
                report.pq_failures.append((a, b, str(err)))
                continue

            case = claim_case(bp)
            report.case_counts[case] += 1
            which, value = case_formula(d, k, bp)
            beta_t = t1_t2(StarSequence(bp.sequence, d, k, a, b))
            direct = beta_t[0] if which == 't1' else beta_t[1]
            if value != direct:
                report.case_mismatches.append((a, b, bp.p, bp.q, which, value, direct))
            if value > bound:
                report.case_bound_failures.append((a, b, bp.p, bp.q, which, value))

            for values in sequences:
                s = StarSequence(values, d, k, a, b)
                report.sequences_checked += 1
                in_bounds = all(a - i + 2 <= x <= a + 1 for i, x in zip(positions, values))
                head_ok = values[0] == a + 1 and (a + 2 > d - 1 or values[a + 1] >= 0)
                if not (in_bounds and head_ok):
                    report.condition_failures.append((a, b, values))
                t1, t2 = t1_t2(s)
                if min(t1, t2) > bound:
                    report.violations.append((a, b, values, t1, t2))
                if not check_domination(s, bp):
                    report.domination_failures.append((a, b, values, bp.p, bp.q))

            progress("checked {:d} sequences for a={:d} b={:d} (p={:d}, q={})".format(
                len(sequences), a, b, bp.p, bp.q), verbose)
    progress("beta cases 1/2/3: {:d}/{:d}/{:d}".format(
        report.case_counts[1], report.case_counts[2], report.case_counts[3]), verbose)
    return report
