"""Integer-bitmask kernels shared by the graph routines and the solvers.

Vertex subsets are plain ints (bit i set <=> vertex i is a member) and a
graph is handed over as its adjacency rows, so nothing in here allocates
per-vertex objects. The test-suite import hook skips this module; keep
every function in it a pure function of ints.
"""

from itertools import combinations
from typing import (
    Callable,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
)


Rows = Sequence[int]


def popcount(x: int) -> int:
    """
    Examples:
        >>> popcount(0b101101)
        4
    """
    return bin(x).count("1")


def full_mask(n: int) -> int:
    return (1 << n) - 1


def iter_bits(x: int) -> Iterator[int]:
    """Yields the members of @x in increasing order.

    Examples:
        >>> list(iter_bits(0b10110))
        [1, 2, 4]
    """
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def spread(local: int, members: Sequence[int]) -> int:
    """Maps bit i of @local onto vertex members[i].

    Examples:
        >>> bin(spread(0b101, [2, 5, 7]))
        '0b10000100'
    """
    mask = 0
    for i in iter_bits(local):
        mask |= 1 << members[i]
    return mask


def masks_of_size(n: int, k: int) -> Iterator[int]:
    """Yields every k-subset of range(n) in increasing integer order.

    Examples:
        >>> [bin(m) for m in masks_of_size(4, 2)][:3]
        ['0b11', '0b101', '0b110']
        >>> len(list(masks_of_size(5, 3)))
        10
    """
    if k < 0 or k > n:
        return
    if k == 0:
        yield 0
        return

    x = (1 << k) - 1
    limit = 1 << n
    while x < limit:
        yield x
        low = x & -x
        ripple = x + low
        x = (((ripple ^ x) >> 2) // low) | ripple


def closed_rows(adj: Rows) -> Tuple[int, ...]:
    return tuple(row | (1 << v) for v, row in enumerate(adj))


def dominated_by(closed: Rows, d: int) -> int:
    covered = 0
    for v in iter_bits(d):
        covered |= closed[v]
    return covered


def is_dominating(closed: Rows, full: int, d: int) -> bool:
    return dominated_by(closed, d) == full


def outside_counts_ok(adj: Rows, full: int, d: int) -> bool:
    """True iff no member of @d has exactly one neighbour outside @d."""
    outside = full & ~d
    for v in iter_bits(d):
        x = adj[v] & outside
        if x and not x & (x - 1):
            return False
    return True


def is_certified(adj: Rows, closed: Rows, full: int, d: int) -> bool:
    return is_dominating(closed, full, d) and outside_counts_ok(adj, full, d)


def private_masks(closed: Rows, d: int) -> List[Tuple[int, int]]:
    """Returns (v, epn) pairs where epn is the closed private neighbourhood
    of v with respect to @d."""
    once = 0
    twice = 0
    for v in iter_bits(d):
        row = closed[v]
        twice |= once & row
        once |= row
    return [(v, closed[v] & ~twice) for v in iter_bits(d)]


def is_minimal_dominating(closed: Rows, full: int, d: int) -> bool:
    if not is_dominating(closed, full, d):
        return False
    return all(private for _, private in private_masks(closed, d))


def has_certified_proper_subset(
    adj: Rows, closed: Rows, full: int, d: int
) -> bool:
    members = list(iter_bits(d))
    for k in range(len(members)):
        for local in masks_of_size(len(members), k):
            if is_certified(adj, closed, full, spread(local, members)):
                return True
    return False


def certified_table(adj: Rows, n: int) -> List[bool]:
    """flags[mask] is True iff mask is a certified dominating set."""
    closed = closed_rows(adj)
    full = full_mask(n)
    return [is_certified(adj, closed, full, d) for d in range(1 << n)]


def minimal_table(flags: Sequence[bool]) -> List[bool]:
    """Marks the flagged masks that have no flagged proper subset.

    below[mask] records whether some proper subset of mask is flagged; it is
    filled in increasing integer order, so every subset is ready in time.
    """
    size = len(flags)
    below = [False] * size
    minimal = [False] * size
    for mask in range(size):
        rest = mask
        hit = False
        while rest:
            low = rest & -rest
            sub = mask ^ low
            if flags[sub] or below[sub]:
                hit = True
                break
            rest ^= low
        below[mask] = hit
        minimal[mask] = flags[mask] and not hit
    return minimal


def _greedy_cover(closed: Rows, full: int, covered: int, pool: int) -> int:
    picks = 0
    while covered != full:
        best_v, best_gain = -1, 0
        for v in iter_bits(pool):
            gain = popcount(closed[v] & ~covered)
            if gain > best_gain:
                best_v, best_gain = v, gain
        if best_v < 0:
            raise AssertionError("greedy cover ran out of candidates")
        covered |= closed[best_v]
        pool &= ~(1 << best_v)
        picks += 1
    return picks


def min_dominating_size(
    closed: Rows, full: int, allowed: int, forced: int = 0
) -> Optional[int]:
    """Branch-and-bound minimum of |D| over dominating sets D with
    forced <= D <= allowed | forced.

    Returns None when no such set exists.
    """
    covered = dominated_by(closed, forced)
    pool = allowed & ~forced
    if dominated_by(closed, pool) | covered != full:
        return None

    base = popcount(forced)
    best = [base + _greedy_cover(closed, full, covered, pool)]
    widest = max((popcount(closed[v]) for v in iter_bits(pool)), default=1)

    def search(covered: int, count: int, pool: int) -> None:
        if covered == full:
            if count < best[0]:
                best[0] = count
            return

        missing = full & ~covered
        if count + -(-popcount(missing) // widest) >= best[0]:
            return

        # Branch on the undominated vertex with the fewest dominators left.
        target = -1
        target_count = 0
        for u in iter_bits(missing):
            options = closed[u] & pool
            if not options:
                return
            count_u = popcount(options)
            if target < 0 or count_u < target_count:
                target, target_count = options, count_u
                if count_u == 1:
                    break

        choices = sorted(
            iter_bits(target), key=lambda v: -popcount(closed[v] & missing)
        )
        for v in choices:
            bit = 1 << v
            search(covered | closed[v], count + 1, pool & ~bit)
            pool &= ~bit

    search(covered, base, pool)
    return best[0]


def least_mask_of_size(
    n: int, k: int, accept: Callable[[int], bool]
) -> Optional[int]:
    for d in masks_of_size(n, k):
        if accept(d):
            return d
    return None


# Above this many candidate k-subsets the canonical witness is found by
# fixing bits from the top down instead of scanning.
SCAN_WITNESS_LIMIT = 4096


def canonical_min_dominating(closed: Rows, n: int) -> Tuple[int, int]:
    """Returns (gamma, D) where D is the minimum dominating set with the
    smallest integer mask."""
    full = full_mask(n)
    gamma = min_dominating_size(closed, full, full)
    if gamma is None:
        raise AssertionError("the full vertex set always dominates")

    if _binomial(n, gamma) <= SCAN_WITNESS_LIMIT:
        d = least_mask_of_size(
            n, gamma, lambda m: is_dominating(closed, full, m)
        )
        assert d is not None
        return gamma, d

    allowed = full
    forced = 0
    for v in reversed(range(n)):
        bit = 1 << v
        trial = allowed & ~bit
        size = min_dominating_size(closed, full, trial, forced)
        if size is not None and size <= gamma:
            allowed = trial
        else:
            forced |= bit
    return gamma, forced


def _binomial(n: int, k: int) -> int:
    result = 1
    for i in range(min(k, n - k)):
        result = result * (n - i) // (i + 1)
    return result


def max_independent_size(adj: Rows, n: int) -> int:
    """Branch-and-bound independence number."""
    full = full_mask(n)

    greedy = 0
    cand = full
    while cand:
        v = min(iter_bits(cand), key=lambda u: popcount(adj[u] & cand))
        cand &= ~(adj[v] | (1 << v))
        greedy += 1
    best = [greedy]

    def expand(cand: int, size: int) -> None:
        if not cand:
            if size > best[0]:
                best[0] = size
            return
        if size + popcount(cand) <= best[0]:
            return

        pick, pick_degree = -1, -1
        for v in iter_bits(cand):
            degree = popcount(adj[v] & cand)
            if degree > pick_degree:
                pick, pick_degree = v, degree
        if pick_degree == 0:
            best[0] = size + popcount(cand)
            return

        bit = 1 << pick
        expand(cand & ~bit & ~adj[pick], size + 1)
        expand(cand & ~bit, size)

    expand(full, 0)
    return best[0]


def edge_slots(n: int) -> List[Tuple[int, int]]:
    """Vertex pairs (i, j), i < j, in lexicographic order."""
    return list(combinations(range(n), 2))
