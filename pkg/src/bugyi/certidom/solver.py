"""Exact solvers for the four domination invariants.

Every invariant here decomposes over connected components, so each solver
works on one component at a time and sums the results. Witnesses are the
optimal sets with the smallest integer mask; that choice composes over
components, which keeps outputs reproducible.
"""

from dataclasses import dataclass
import enum
from functools import lru_cache
import logging
from typing import Any, Callable, Dict, Iterator, List, Optional, Tuple

from . import bits
from .config import Limits
from .domination import deficiency, is_dominating
from .errors import PreconditionError, SolverLimitError
from .graph import (
    Graph,
    components,
    delete_vertex,
    induced_subgraph,
    is_connected,
    min_degree,
)
from .vertexset import VertexSet


logger = logging.getLogger(__name__)

_CACHE_SIZE = 1 << 16

# Largest order for which whole-graph subset tables are built.
MAX_SUBSET_SCAN_ORDER = 16


class InvariantKind(enum.Enum):
    GAMMA = "Gamma"
    GAMMA_CER = "GammaCer"
    UPPER_GAMMA = "UpperGamma"
    UPPER_GAMMA_CER = "UpperGammaCer"

    @property
    def option(self) -> str:
        """The name used for this invariant on the command line."""
        return {
            InvariantKind.GAMMA: "gamma",
            InvariantKind.GAMMA_CER: "gamma_cer",
            InvariantKind.UPPER_GAMMA: "upper_gamma",
            InvariantKind.UPPER_GAMMA_CER: "upper_gamma_cer",
        }[self]

    @classmethod
    def from_option(cls, option: str) -> "InvariantKind":
        for kind in cls:
            if kind.option == option:
                return kind
        raise ValueError(f"Unknown invariant: {option!r}")


@dataclass(frozen=True)
class Certificate:
    """How a value was established.

    For the minimum kinds no qualifying set of size <= @bound exists
    (@bound is value - 1). For the upper kinds no minimal qualifying set of
    size >= @bound exists (@bound is value + 1), and @private_neighbors
    pairs each member of an upper-domination witness with one of its
    private neighbours.
    """

    method: str
    bound: int
    private_neighbors: Tuple[Tuple[int, int], ...] = ()

    def to_json(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"method": self.method, "bound": self.bound}
        if self.private_neighbors:
            result["private_neighbors"] = [
                list(pair) for pair in self.private_neighbors
            ]
        return result


@dataclass(frozen=True)
class InvariantResult:
    kind: InvariantKind
    value: int
    witness: VertexSet
    certificate: Certificate

    def to_json(self) -> Dict[str, Any]:
        return {
            "kind": self.kind.value,
            "value": self.value,
            "witness": self.witness.to_list(),
            "n": self.witness.n,
            "certificate": self.certificate.to_json(),
        }


ComponentSolver = Callable[[Graph], Tuple[int, int]]


def _certified_test(H: Graph) -> Callable[[int], bool]:
    adj, closed, full = H.adj, H.closed, H.full
    return lambda d: bits.is_certified(adj, closed, full, d)


@lru_cache(maxsize=_CACHE_SIZE)
def _gamma_of_component(H: Graph) -> Tuple[int, int]:
    return bits.canonical_min_dominating(H.closed, H.n)


@lru_cache(maxsize=_CACHE_SIZE)
def _gamma_cer_of_component(H: Graph) -> Tuple[int, int]:
    gamma_value, _ = _gamma_of_component(H)
    accept = _certified_test(H)
    for k in range(gamma_value, H.n + 1):
        # V - {x} is never certified dominating.
        if k == H.n - 1 and H.n > 1:
            continue
        d = bits.least_mask_of_size(H.n, k, accept)
        if d is not None:
            return k, d
    raise AssertionError("the full vertex set is always certified")


@lru_cache(maxsize=_CACHE_SIZE)
def _upper_gamma_of_component(H: Graph) -> Tuple[int, int]:
    closed, full = H.closed, H.full
    for k in range(H.n, 0, -1):
        d = bits.least_mask_of_size(
            H.n, k, lambda m: bits.is_minimal_dominating(closed, full, m)
        )
        if d is not None:
            return k, d
    raise AssertionError("some minimal dominating set always exists")


@lru_cache(maxsize=_CACHE_SIZE)
def _upper_gamma_cer_of_component(H: Graph) -> Tuple[int, int]:
    minimal = bits.minimal_table(bits.certified_table(H.adj, H.n))
    for k in range(H.n, 0, -1):
        if k == H.n - 1 and H.n > 1:
            continue
        d = bits.least_mask_of_size(H.n, k, minimal.__getitem__)
        if d is not None:
            return k, d
    raise AssertionError("some minimal certified dominating set exists")


def _solve(G: Graph, solve_component: ComponentSolver) -> Tuple[int, int]:
    parts = components(G)
    if len(parts) == 1:
        return solve_component(G)

    total = mask = 0
    for vertices, H in parts:
        value, local = solve_component(H)
        total += value
        mask |= bits.spread(local, vertices.to_list())
    return total, mask


def _check_limit(
    G: Graph, kind: InvariantKind, max_order: Optional[int]
) -> None:
    if max_order is not None and G.n > max_order:
        raise SolverLimitError(kind.option, G.n, max_order)


def _result(
    G: Graph,
    kind: InvariantKind,
    solved: Tuple[int, int],
    certificate: Certificate,
) -> InvariantResult:
    value, mask = solved
    logger.debug(
        "Computed invariant. | kind=%s  n=%d  value=%d",
        kind.value,
        G.n,
        value,
    )
    return InvariantResult(kind, value, VertexSet(G.n, mask), certificate)


def gamma(G: Graph, *, max_order: Optional[int] = None) -> InvariantResult:
    """The domination number, by branch-and-bound.

    Examples:
        >>> from bugyi.certidom.graph import from_edge_list
        >>> P6 = from_edge_list(6, [(i, i + 1) for i in range(5)])
        >>> result = gamma(P6)
        >>> result.value, result.witness.to_list()
        (2, [1, 4])
    """
    _check_limit(G, InvariantKind.GAMMA, max_order)
    solved = _solve(G, _gamma_of_component)
    return _result(
        G,
        InvariantKind.GAMMA,
        solved,
        Certificate("branch-and-bound", solved[0] - 1),
    )


def gamma_cer(
    G: Graph, *, max_order: Optional[int] = None
) -> InvariantResult:
    """The certified domination number.

    Sizes from the domination number upwards are scanned; size n - 1 is
    skipped since no n - 1 vertices ever form a certified dominating set.
    """
    _check_limit(G, InvariantKind.GAMMA_CER, max_order)
    solved = _solve(G, _gamma_cer_of_component)
    return _result(
        G,
        InvariantKind.GAMMA_CER,
        solved,
        Certificate("subset-scan", solved[0] - 1),
    )


def upper_gamma(
    G: Graph, *, max_order: Optional[int] = None
) -> InvariantResult:
    _check_limit(G, InvariantKind.UPPER_GAMMA, max_order)
    value, mask = _solve(G, _upper_gamma_of_component)
    private = tuple(
        (v, (epn & -epn).bit_length() - 1)
        for v, epn in bits.private_masks(G.closed, mask)
    )
    return _result(
        G,
        InvariantKind.UPPER_GAMMA,
        (value, mask),
        Certificate("descending-scan", value + 1, private),
    )


def upper_gamma_cer(
    G: Graph, *, max_order: Optional[int] = None
) -> InvariantResult:
    _check_limit(G, InvariantKind.UPPER_GAMMA_CER, max_order)
    solved = _solve(G, _upper_gamma_cer_of_component)
    return _result(
        G,
        InvariantKind.UPPER_GAMMA_CER,
        solved,
        Certificate("subset-table", solved[0] + 1),
    )


def solve(
    G: Graph, kind: InvariantKind, *, limits: Optional[Limits] = None
) -> InvariantResult:
    """Dispatches to the solver for @kind, honouring @limits."""
    limits = Limits.unlimited() if limits is None else limits
    if kind is InvariantKind.GAMMA:
        return gamma(G, max_order=limits.gamma)
    if kind is InvariantKind.GAMMA_CER:
        return gamma_cer(G, max_order=limits.gamma_cer)
    if kind is InvariantKind.UPPER_GAMMA:
        return upper_gamma(G, max_order=limits.upper_gamma)
    return upper_gamma_cer(G, max_order=limits.upper_gamma_cer)


def invariant_quadruple(G: Graph) -> Tuple[int, int, int, int]:
    """Returns (gamma, Gamma, gamma_cer, Gamma_cer)."""
    return (
        gamma(G).value,
        upper_gamma(G).value,
        gamma_cer(G).value,
        upper_gamma_cer(G).value,
    )


def gamma_equals_gamma_cer(G: Graph) -> bool:
    """Decides whether gamma(G) == gamma_cer(G).

    Only sets of size gamma are scanned (per component), which is far
    cheaper than computing gamma_cer when the two differ.
    """
    for _, H in components(G):
        value, _ = _gamma_of_component(H)
        if bits.least_mask_of_size(H.n, value, _certified_test(H)) is None:
            return False
    return True


def _check_scan_order(G: Graph, what: str) -> None:
    if G.n > MAX_SUBSET_SCAN_ORDER:
        raise SolverLimitError(what, G.n, MAX_SUBSET_SCAN_ORDER)


def enumerate_minimal_sets(G: Graph, certified: bool) -> Iterator[VertexSet]:
    """Yields every minimal (certified) dominating set in mask order."""
    _check_scan_order(G, "minimal-set enumeration")
    return _minimal_sets(G, certified)


def _minimal_sets(G: Graph, certified: bool) -> Iterator[VertexSet]:
    if certified:
        minimal = bits.minimal_table(bits.certified_table(G.adj, G.n))
        for mask, flag in enumerate(minimal):
            if flag:
                yield VertexSet(G.n, mask)
        return

    closed, full = G.closed, G.full
    for mask in range(1, 1 << G.n):
        if bits.is_minimal_dominating(closed, full, mask):
            yield VertexSet(G.n, mask)


def _defining_test(G: Graph, kind: InvariantKind) -> Callable[[int], bool]:
    adj, closed, full = G.adj, G.closed, G.full
    if kind is InvariantKind.GAMMA:
        return lambda d: bits.is_dominating(closed, full, d)
    if kind is InvariantKind.GAMMA_CER:
        return _certified_test(G)
    if kind is InvariantKind.UPPER_GAMMA:
        return lambda d: bits.is_minimal_dominating(closed, full, d)
    return lambda d: bits.is_certified(
        adj, closed, full, d
    ) and not bits.has_certified_proper_subset(adj, closed, full, d)


def optimal_sets(G: Graph, kind: InvariantKind) -> List[VertexSet]:
    """Every set attaining the invariant @kind, in mask order."""
    _check_scan_order(G, "optimal-set enumeration")
    size = solve(G, kind).value
    accept = _defining_test(G, kind)
    return [
        VertexSet(G.n, d) for d in bits.masks_of_size(G.n, size) if accept(d)
    ]


def _require_connected(G: Graph, min_order: int, what: str) -> None:
    if G.n < min_order or not is_connected(G):
        raise PreconditionError(
            f"{what} needs a connected graph with at least {min_order}"
            f" vertices"
        )


def gamma_equality_witness(G: Graph) -> Optional[VertexSet]:
    """A minimum dominating set whose members all have two or more
    neighbours outside it, if one exists.

    Such a set exists exactly when the domination and certified domination
    numbers coincide.
    """
    _require_connected(G, 3, "gamma_equality_witness")
    for D in optimal_sets(G, InvariantKind.GAMMA):
        if not deficiency(G, D).at_most_one:
            return D
    return None


def unique_gamma_set(G: Graph) -> Optional[VertexSet]:
    sets = optimal_sets(G, InvariantKind.GAMMA)
    return sets[0] if len(sets) == 1 else None


def gamma_vertex_deleted_profile(G: Graph) -> Dict[int, int]:
    """Maps every vertex v to the domination number of G - v."""
    if G.n < 2:
        raise PreconditionError("Vertex deletion needs at least 2 vertices")
    return {v: gamma(delete_vertex(G, v)).value for v in range(G.n)}


def naive_gamma(G: Graph) -> int:
    """Domination number by plain subset scan (the reference oracle)."""
    closed, full = G.closed, G.full
    for k in range(G.n + 1):
        for d in bits.masks_of_size(G.n, k):
            if bits.is_dominating(closed, full, d):
                return k
    raise AssertionError("the full vertex set always dominates")


def is_gamma_gamma_cer_perfect(G: Graph) -> bool:
    """True iff every connected induced subgraph other than K2 has equal
    domination and certified domination numbers."""
    for mask in range(1, 1 << G.n):
        # One vertex is trivially fine; two connected vertices form K2.
        if bits.popcount(mask) < 3:
            continue
        H = induced_subgraph(G, VertexSet(G.n, mask))
        if not is_connected(H):
            continue
        if _gamma_of_component(H)[0] != _gamma_cer_of_component(H)[0]:
            return False
    return True


def certify_gamma_set(G: Graph, D: VertexSet) -> VertexSet:
    """Turns a minimum dominating set into one whose members all have at
    least two outside neighbours.

    A member v with exactly one outside neighbour u is traded for u; every
    swap shrinks the set of deficient members, so this terminates after at
    most |D| swaps. Needs minimum degree 2.
    """
    if min_degree(G) < 2:
        raise PreconditionError("certify_gamma_set needs minimum degree 2")
    if not is_dominating(G, D) or len(D) != gamma(G).value:
        raise PreconditionError(f"{D} is not a minimum dominating set")

    mask = D.mask
    while True:
        deficient = deficiency(G, VertexSet(G.n, mask)).at_most_one
        if not deficient:
            return VertexSet(G.n, mask)
        v = min(deficient)
        outside = G.adj[v] & ~mask
        if bits.popcount(outside) != 1:
            raise AssertionError(
                f"vertex {v} of a minimum dominating set has no outside"
                " neighbour"
            )
        mask = (mask & ~(1 << v)) | outside
        logger.debug(
            "Swapped deficient vertex. | out=%d  in=%d",
            v,
            outside.bit_length() - 1,
        )
