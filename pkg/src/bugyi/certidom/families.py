"""Named graph families and the closed-form invariant values known for
them."""

from dataclasses import dataclass
import enum
import logging
from typing import Any, Dict, List, Optional, Tuple

from .corona import corona_k1
from .errors import GraphError, ParseError
from .graph import Graph, empty_graph, from_edge_list, is_connected
from .structure import corona_pairing


logger = logging.getLogger(__name__)


class FamilyKind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    COMPLETE_BIPARTITE = "kbip"
    JOIN_K2 = "joink2"
    JOIN_K2_BAR = "joink2bar"
    EMPTY = "empty"
    CORONA_OF = "corona"
    SIMPLE_DIADEM_OF = "sdiadem"
    DIADEM_OF = "diadem"


_DERIVED_KINDS = (
    FamilyKind.CORONA_OF,
    FamilyKind.SIMPLE_DIADEM_OF,
    FamilyKind.DIADEM_OF,
)

# Smallest admissible first parameter of each parametrized kind.
_MINIMUM: Dict[FamilyKind, int] = {
    FamilyKind.PATH: 1,
    FamilyKind.CYCLE: 3,
    FamilyKind.COMPLETE: 1,
    FamilyKind.STAR: 1,
    FamilyKind.COMPLETE_BIPARTITE: 1,
    FamilyKind.JOIN_K2: 3,
    FamilyKind.JOIN_K2_BAR: 3,
    FamilyKind.EMPTY: 1,
}


@dataclass(frozen=True)
class FamilySpec:
    """A member of a named family.

    @params holds the integer arguments (n, or m and n for kbip); @base is
    the graph a corona or diadem is built on. Diadem kinds require a corona
    base.
    """

    kind: FamilyKind
    params: Tuple[int, ...] = ()
    base: Optional["FamilySpec"] = None

    def __post_init__(self) -> None:
        if self.kind in _DERIVED_KINDS:
            if self.base is None or self.params:
                raise GraphError(f"{self.kind.value} takes a base family")
            needs_corona = self.kind is not FamilyKind.CORONA_OF
            if needs_corona and self.base.kind is not FamilyKind.CORONA_OF:
                raise GraphError(
                    f"{self.kind.value} needs a corona base, not {self.base}"
                )
            return

        arity = 2 if self.kind is FamilyKind.COMPLETE_BIPARTITE else 1
        if self.base is not None or len(self.params) != arity:
            raise GraphError(
                f"{self.kind.value} takes {arity} integer parameter(s)"
            )
        if self.params[0] < _MINIMUM[self.kind]:
            raise GraphError(
                f"{self.kind.value} needs n >= {_MINIMUM[self.kind]},"
                f" not {self.params[0]}"
            )
        if arity == 2 and self.params[0] > self.params[1]:
            raise GraphError(
                f"kbip needs m <= n, not m={self.params[0]}"
                f" n={self.params[1]}"
            )

    def __str__(self) -> str:
        if self.base is not None:
            return f"{self.kind.value}:{self.base}"
        return self.kind.value + ":" + ",".join(str(p) for p in self.params)


@dataclass(frozen=True)
class ExpectedInvariants:
    """Closed-form values; None where no formula applies."""

    gamma: Optional[int] = None
    gamma_cer: Optional[int] = None
    upper_gamma: Optional[int] = None
    upper_gamma_cer: Optional[int] = None

    def as_dict(self) -> Dict[str, Optional[int]]:
        return {
            "gamma": self.gamma,
            "gamma_cer": self.gamma_cer,
            "upper_gamma": self.upper_gamma,
            "upper_gamma_cer": self.upper_gamma_cer,
        }


def path(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.PATH, (n,))


def cycle(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.CYCLE, (n,))


def complete(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.COMPLETE, (n,))


def star(n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.STAR, (n,))


def complete_bipartite(m: int, n: int) -> FamilySpec:
    return FamilySpec(FamilyKind.COMPLETE_BIPARTITE, (m, n))


def corona_of(base: FamilySpec) -> FamilySpec:
    return FamilySpec(FamilyKind.CORONA_OF, base=base)


def simple_diadem_of(base: FamilySpec) -> FamilySpec:
    return FamilySpec(FamilyKind.SIMPLE_DIADEM_OF, base=base)


def diadem_of(base: FamilySpec) -> FamilySpec:
    return FamilySpec(FamilyKind.DIADEM_OF, base=base)


def _join(n: int, adjacent: bool) -> Graph:
    edges = [(a, c) for a in (0, 1) for c in range(2, n)]
    if adjacent:
        edges.append((0, 1))
    return from_edge_list(n, edges)


def _with_new_vertex(G: Graph, attachment: List[int]) -> Graph:
    return from_edge_list(
        G.n + 1, G.edges() + [(v, G.n) for v in attachment]
    )


def build(spec: FamilySpec) -> Graph:
    """Builds the graph named by @spec.

    Numbering: paths and cycles run 0, 1, ...; a star has centre 0; kbip
    puts the m-side first; a join puts the two dominating vertices at 0 and
    1. A corona of an h-vertex base keeps the base at 0..h-1 and hangs the
    pendant of v at h+v. Diadems add vertex 2h, attached to the lowest
    support (and, for a diadem, that support's leaf).

    Examples:
        >>> build(path(4)).edges()
        [(0, 1), (1, 2), (2, 3)]
        >>> build(simple_diadem_of(corona_of(complete(2)))).edges()
        [(0, 1), (0, 2), (0, 4), (1, 3)]
    """
    kind, params = spec.kind, spec.params
    if kind is FamilyKind.PATH:
        n = params[0]
        return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
    if kind is FamilyKind.CYCLE:
        n = params[0]
        return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])
    if kind is FamilyKind.COMPLETE:
        n = params[0]
        return from_edge_list(
            n, [(i, j) for i in range(n) for j in range(i + 1, n)]
        )
    if kind is FamilyKind.STAR:
        n = params[0]
        return from_edge_list(n + 1, [(0, i) for i in range(1, n + 1)])
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        m, n = params
        return from_edge_list(
            m + n, [(i, m + j) for i in range(m) for j in range(n)]
        )
    if kind is FamilyKind.JOIN_K2:
        return _join(params[0], adjacent=True)
    if kind is FamilyKind.JOIN_K2_BAR:
        return _join(params[0], adjacent=False)
    if kind is FamilyKind.EMPTY:
        return empty_graph(params[0])

    assert spec.base is not None
    if kind is FamilyKind.CORONA_OF:
        return corona_k1(build(spec.base)).graph

    corona = build(spec.base)
    pairing = corona_pairing(corona)
    assert pairing is not None
    support, leaf = min(pairing)
    if kind is FamilyKind.SIMPLE_DIADEM_OF:
        return _with_new_vertex(corona, [support])
    return _with_new_vertex(corona, [support, leaf])


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def expected(spec: FamilySpec) -> ExpectedInvariants:
    """Closed-form invariant values for @spec, where known.

    Guards: K2 is excluded from the complete-graph formula; the path
    formula for the certified number fails for P2 and P4 (both are coronas,
    whose certified number is their order); the upper path formulas need
    n >= 5; the star formulas other than Gamma need n >= 2; joins and
    diadems are only covered when connected.

    Examples:
        >>> expected(cycle(8)).as_dict()["upper_gamma"]
        4
    """
    kind, params = spec.kind, spec.params
    if kind is FamilyKind.COMPLETE:
        if params[0] == 2:
            return ExpectedInvariants()
        return ExpectedInvariants(1, 1, 1, 1)

    if kind is FamilyKind.PATH:
        n = params[0]
        upper_cer = (n - 1) // 2 if n >= 5 else None
        return ExpectedInvariants(
            gamma=_ceil_div(n, 3),
            gamma_cer=_ceil_div(n, 3) if n not in (2, 4) else None,
            upper_gamma=None if upper_cer is None else upper_cer + 1,
            upper_gamma_cer=upper_cer,
        )

    if kind is FamilyKind.CYCLE:
        n = params[0]
        return ExpectedInvariants(
            _ceil_div(n, 3), _ceil_div(n, 3), n // 2, n // 2
        )

    if kind is FamilyKind.STAR or (
        kind is FamilyKind.COMPLETE_BIPARTITE and params[0] == 1
    ):
        n = params[-1]
        if n == 1:
            return ExpectedInvariants(upper_gamma=1)
        return ExpectedInvariants(1, 1, n, 1)

    if kind is FamilyKind.COMPLETE_BIPARTITE:
        n = params[1]
        return ExpectedInvariants(2, 2, n, n)

    if kind in (FamilyKind.JOIN_K2, FamilyKind.JOIN_K2_BAR):
        return ExpectedInvariants(upper_gamma_cer=params[0] - 2)

    if kind is FamilyKind.CORONA_OF:
        assert spec.base is not None
        h = build(spec.base).n
        return ExpectedInvariants(
            gamma=h, gamma_cer=2 * h, upper_gamma_cer=2 * h
        )

    if kind in (FamilyKind.SIMPLE_DIADEM_OF, FamilyKind.DIADEM_OF):
        G = build(spec)
        if is_connected(G):
            return ExpectedInvariants(upper_gamma_cer=G.n - 2)
        return ExpectedInvariants()

    return ExpectedInvariants()


def parse_family(text: str) -> FamilySpec:
    """Parses the command-line family syntax.

    Examples:
        >>> str(parse_family("kbip:2,3"))
        'kbip:2,3'
        >>> str(parse_family("diadem:corona:complete:2").base)
        'corona:complete:2'
    """
    head, _, rest = text.strip().partition(":")
    try:
        kind = FamilyKind(head.lower())
    except ValueError as e:
        valid = ", ".join(k.value for k in FamilyKind)
        raise ParseError(
            f"Unknown family {head!r}; expected one of: {valid}", cause=e
        ) from e

    try:
        if kind in _DERIVED_KINDS:
            if not rest:
                raise ParseError(f"{kind.value} needs a base family")
            return FamilySpec(kind, base=parse_family(rest))

        try:
            params = tuple(int(p) for p in rest.split(",") if p.strip())
        except ValueError as e:
            raise ParseError(
                f"Family parameters must be integers, not {rest!r}", cause=e
            ) from e
        return FamilySpec(kind, params)
    except GraphError as e:
        raise ParseError(f"Invalid family {text!r}", cause=e) from e


def family_json(spec: FamilySpec) -> Dict[str, Any]:
    return {"family": str(spec), "expected": expected(spec).as_dict()}
