"""Registry of the finite-checkable statements about domination and
certified domination.

Every entry pairs a scope (the graphs the statement talks about) with an
evaluator that computes the statement's hypothesis and conclusion for one
graph. Statements about partition families are evaluated against an
explicit family or, when none is given, against every family of the graph
(or a seeded sample of them when there are too many).
"""

from dataclasses import dataclass, field
import enum
from itertools import islice
import logging
import random
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    List,
    Optional,
    Sequence,
    Tuple,
)
import zlib

from . import bits
from .config import DEFAULT_SEED
from .corona import (
    PartitionFamily,
    all_families,
    coarsenings,
    corona_k1,
    equality_predicate,
    family_count,
    format_partition_family,
    is_maximal_family,
    p_corona,
    p_corona_gamma_set,
    random_family,
    refinements,
    singleton_family,
    two_subdivision,
)
from .domination import (
    deficiency,
    enclosed_core,
    is_certified_dominating,
)
from .errors import UnknownTheoremError
from .graph import (
    Graph,
    components,
    induced_subgraph,
    is_complete_k2,
    is_connected,
    is_independent,
    is_p4_free,
    leaf_support_report,
    max_independent_set_size,
    min_degree,
)
from .graph6 import encode_graph6
from .solver import (
    MAX_SUBSET_SCAN_ORDER,
    InvariantKind,
    certify_gamma_set,
    enumerate_minimal_sets,
    gamma,
    gamma_cer,
    gamma_equality_witness,
    gamma_equals_gamma_cer,
    gamma_vertex_deleted_profile,
    is_gamma_gamma_cer_perfect,
    optimal_sets,
    unique_gamma_set,
    upper_gamma,
    upper_gamma_cer,
)
from .structure import Structure, classify_structure, is_corona
from .vertexset import VertexSet


logger = logging.getLogger(__name__)

# Exhaustive family checks above this many families fall back to sampling.
MAX_EXHAUSTIVE_FAMILIES = 64
SAMPLED_FAMILIES = 16
# Refinements examined per family by the monotonicity check.
MAX_REFINEMENTS = 256

# Statements that stay cheap enough to sweep over every graph of order 7.
CHEAP_IDS = ("thm-2.1", "cor-2.3", "gap-law", "thm-3.2", "lem-3.4")

Detail = Dict[str, Any]
Evaluation = Tuple[bool, bool, Detail]
Evaluator = Callable[[Graph, Optional[PartitionFamily]], Evaluation]


class CheckKind(enum.Enum):
    IMPLICATION = "implication"
    BICONDITIONAL = "biconditional"
    INVARIANT = "invariant"


class Outcome(enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    SKIPPED = "skipped"


@dataclass(frozen=True)
class Scope:
    """The graphs a statement applies to."""

    min_order: int = 1
    max_order: Optional[int] = None
    connected: bool = False
    min_degree: int = 0
    exclude_k2: bool = False

    def __call__(self, G: Graph) -> bool:
        if G.n < self.min_order:
            return False
        if self.max_order is not None and G.n > self.max_order:
            return False
        if self.connected and not is_connected(G):
            return False
        if self.min_degree and min_degree(G) < self.min_degree:
            return False
        return not (self.exclude_k2 and is_complete_k2(G))

    def __str__(self) -> str:
        parts = []
        if self.connected:
            parts.append("connected")
        if self.min_order > 1:
            parts.append(f"n >= {self.min_order}")
        if self.max_order is not None:
            parts.append(f"n <= {self.max_order}")
        if self.min_degree:
            parts.append(f"min degree >= {self.min_degree}")
        if self.exclude_k2:
            parts.append("not K2")
        return ", ".join(parts) or "all graphs"


EVERY_GRAPH = Scope()
SCANNABLE = Scope(max_order=MAX_SUBSET_SCAN_ORDER)
# Coronas and subdivisions of these still fit within MAX_ORDER vertices.
SMALL = Scope(max_order=8)


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    kind: CheckKind
    statement: str
    scope: Scope
    evaluate: Evaluator
    needs_family: bool = False

    def to_json(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "kind": self.kind.value,
            "statement": self.statement,
            "scope": str(self.scope),
            "needs_family": self.needs_family,
        }


@dataclass(frozen=True)
class CheckResult:
    theorem_id: str
    outcome: Outcome
    hypothesis: Optional[bool] = None
    conclusion: Optional[bool] = None
    detail: Detail = field(default_factory=dict)

    def to_json(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem_id,
            "outcome": self.outcome.value,
            "hypothesis": self.hypothesis,
            "conclusion": self.conclusion,
            "detail": self.detail,
        }


THEOREMS: Dict[str, TheoremCheck] = {}


def theorem(
    theorem_id: str,
    kind: CheckKind,
    statement: str,
    scope: Scope = EVERY_GRAPH,
    *,
    needs_family: bool = False,
) -> Callable[[Evaluator], Evaluator]:
    """Registers the decorated evaluator under @theorem_id."""

    def register(evaluate: Evaluator) -> Evaluator:
        assert theorem_id not in THEOREMS, f"duplicate id: {theorem_id}"
        THEOREMS[theorem_id] = TheoremCheck(
            theorem_id, kind, statement, scope, evaluate, needs_family
        )
        return evaluate

    return register


def theorem_ids() -> List[str]:
    return list(THEOREMS)


def resolve_ids(requested: Iterable[str]) -> List[str]:
    """Expands "all" and "cheap", drops duplicates and rejects unknown ids.

    Examples:
        >>> resolve_ids(["gap-law", "all"])[:2]
        ['gap-law', 'thm-2.1']
    """
    result: List[str] = []
    for item in requested:
        if item == "all":
            names: Sequence[str] = theorem_ids()
        elif item == "cheap":
            names = CHEAP_IDS
        elif item in THEOREMS:
            names = [item]
        else:
            raise UnknownTheoremError(item, theorem_ids())
        result.extend(name for name in names if name not in result)
    return result


def is_failure(kind: CheckKind, hypothesis: bool, conclusion: bool) -> bool:
    if kind is CheckKind.IMPLICATION:
        return hypothesis and not conclusion
    if kind is CheckKind.BICONDITIONAL:
        return hypothesis != conclusion
    return not conclusion


def _families_for(G: Graph, seed: int) -> List[PartitionFamily]:
    if family_count(G) <= MAX_EXHAUSTIVE_FAMILIES:
        return list(all_families(G))
    # str hashes are salted per process; crc32 keeps sampling reproducible.
    rng = random.Random(seed ^ zlib.crc32(encode_graph6(G).encode()))
    return [random_family(G, rng) for _ in range(SAMPLED_FAMILIES)]


def check_theorem(
    theorem_id: str,
    graph: Graph,
    family: Optional[PartitionFamily] = None,
    *,
    seed: int = DEFAULT_SEED,
) -> CheckResult:
    """Evaluates one registered statement on @graph.

    Graphs outside the statement's scope are "skipped". Family statements
    use @family when given and otherwise every family of @graph (or
    SAMPLED_FAMILIES seeded ones when there are more than
    MAX_EXHAUSTIVE_FAMILIES); the first failing family is reported.

    Examples:
        >>> from bugyi.certidom.graph import from_edge_list
        >>> C5 = from_edge_list(5, [(i, (i + 1) % 5) for i in range(5)])
        >>> check_theorem("cor-2.3", C5).outcome.value
        'pass'
    """
    check = THEOREMS.get(theorem_id)
    if check is None:
        raise UnknownTheoremError(theorem_id, theorem_ids())

    if not check.scope(graph):
        return CheckResult(theorem_id, Outcome.SKIPPED)

    if not check.needs_family or family is not None:
        hypothesis, conclusion, detail = check.evaluate(graph, family)
        failed = is_failure(check.kind, hypothesis, conclusion)
        return CheckResult(
            theorem_id,
            Outcome.FAIL if failed else Outcome.PASS,
            hypothesis,
            conclusion,
            detail,
        )

    families = _families_for(graph, seed)
    for P in families:
        hypothesis, conclusion, detail = check.evaluate(graph, P)
        if is_failure(check.kind, hypothesis, conclusion):
            detail["family"] = format_partition_family(P)
            return CheckResult(
                theorem_id, Outcome.FAIL, hypothesis, conclusion, detail
            )
    return CheckResult(
        theorem_id,
        Outcome.PASS,
        detail={"families_checked": len(families)},
    )


def _equal_gammas(G: Graph) -> Tuple[int, int, Detail]:
    g = gamma(G)
    gc = gamma_cer(G)
    return (
        g.value,
        gc.value,
        {
            "gamma": g.value,
            "gamma_cer": gc.value,
            "gamma_set": g.witness.to_list(),
            "gamma_cer_set": gc.witness.to_list(),
        },
    )


def _upper_values(G: Graph) -> Tuple[int, int]:
    return (
        upper_gamma(G).value,
        upper_gamma_cer(G).value,
    )


@theorem(
    "thm-2.1",
    CheckKind.BICONDITIONAL,
    "gamma = gamma_cer iff some gamma-set has every member with at least"
    " two neighbours outside it",
    Scope(min_order=3, max_order=MAX_SUBSET_SCAN_ORDER, connected=True),
)
def _gamma_equality_witness(
    G: Graph, _: Optional[PartitionFamily]
) -> Evaluation:
    g, gc, detail = _equal_gammas(G)
    witness = gamma_equality_witness(G)
    detail["witness"] = None if witness is None else witness.to_list()
    return witness is not None, g == gc, detail


def _no_leaf(G: Graph, D: VertexSet) -> bool:
    return not (leaf_support_report(G).leaves & D)


@theorem(
    "cor-2.2",
    CheckKind.IMPLICATION,
    "an independent gamma-set containing no leaf forces gamma = gamma_cer",
    Scope(min_order=3, max_order=MAX_SUBSET_SCAN_ORDER, connected=True),
)
def _independent_leafless(
    G: Graph, _: Optional[PartitionFamily]
) -> Evaluation:
    g, gc, detail = _equal_gammas(G)
    found = next(
        (
            D
            for D in optimal_sets(G, InvariantKind.GAMMA)
            if is_independent(G, D) and _no_leaf(G, D)
        ),
        None,
    )
    detail["independent_gamma_set"] = (
        None if found is None else found.to_list()
    )
    return found is not None, g == gc, detail


@theorem(
    "cor-2.3",
    CheckKind.IMPLICATION,
    "min degree >= 2 gives a gamma-set with no deficient member, hence"
    " gamma = gamma_cer",
)
def _leafless(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    g, gc, detail = _equal_gammas(G)
    hypothesis = min_degree(G) >= 2
    conclusion = g == gc
    if hypothesis:
        D = certify_gamma_set(G, gamma(G).witness)
        detail["certified_gamma_set"] = D.to_list()
        conclusion = conclusion and not deficiency(G, D).at_most_one
    return hypothesis, conclusion, detail


@theorem(
    "cor-2.4",
    CheckKind.IMPLICATION,
    "a unique gamma-set forces gamma = gamma_cer",
    SCANNABLE,
)
def _unique(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    g, gc, detail = _equal_gammas(G)
    D = unique_gamma_set(G)
    detail["unique_gamma_set"] = None if D is None else D.to_list()
    return D is not None, g == gc, detail


@theorem(
    "cor-2.5",
    CheckKind.IMPLICATION,
    "a gamma-set D with gamma(G - x) > gamma(G) for every x in D forces"
    " gamma = gamma_cer",
    Scope(min_order=2, max_order=MAX_SUBSET_SCAN_ORDER),
)
def _critical_set(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    g, gc, detail = _equal_gammas(G)
    profile = gamma_vertex_deleted_profile(G)
    found = next(
        (
            D
            for D in optimal_sets(G, InvariantKind.GAMMA)
            if all(profile[x] > g for x in D)
        ),
        None,
    )
    detail["profile"] = [profile[v] for v in range(G.n)]
    detail["critical_gamma_set"] = None if found is None else found.to_list()
    return found is not None, g == gc, detail


@theorem(
    "thm-2.6",
    CheckKind.IMPLICATION,
    "gamma(G - v) >= gamma(G) for every v in every gamma-set forces"
    " gamma = gamma_cer",
    Scope(min_order=3, max_order=MAX_SUBSET_SCAN_ORDER, connected=True),
)
def _deletion_stable(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    g, gc, detail = _equal_gammas(G)
    profile = gamma_vertex_deleted_profile(G)
    members = 0
    for D in optimal_sets(G, InvariantKind.GAMMA):
        members |= D.mask
    hypothesis = all(profile[v] >= g for v in bits.iter_bits(members))
    detail["profile"] = [profile[v] for v in range(G.n)]
    detail["gamma_set_members"] = list(bits.iter_bits(members))
    return hypothesis, g == gc, detail


@theorem(
    "thm-2.7",
    CheckKind.IMPLICATION,
    "a connected P4-free graph other than K2 has gamma = gamma_cer",
    Scope(connected=True, exclude_k2=True),
)
def _p4_free(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    g, gc, detail = _equal_gammas(G)
    return is_p4_free(G), g == gc, detail


@theorem(
    "cor-2.8",
    CheckKind.BICONDITIONAL,
    "every connected induced subgraph other than K2 has gamma = gamma_cer"
    " iff the graph is P4-free",
    SCANNABLE,
)
def _perfect(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    perfect = is_gamma_gamma_cer_perfect(G)
    p4_free = is_p4_free(G)
    return perfect, p4_free, {"perfect": perfect, "p4_free": p4_free}


@theorem(
    "lem-2.9",
    CheckKind.IMPLICATION,
    "when gamma = gamma_cer every gamma_cer-set avoids the leaves and"
    " contains the supports",
    Scope(min_order=3, max_order=MAX_SUBSET_SCAN_ORDER, connected=True),
)
def _no_leaves_in_gamma_cer_sets(
    G: Graph, _: Optional[PartitionFamily]
) -> Evaluation:
    g, gc, detail = _equal_gammas(G)
    report = leaf_support_report(G)
    offending = [
        D.to_list()
        for D in optimal_sets(G, InvariantKind.GAMMA_CER)
        if report.leaves & D or not report.supports.issubset(D)
    ]
    detail["offending_sets"] = offending
    return g == gc, not offending, detail


def _corona_detail(G: Graph, P: PartitionFamily) -> Tuple[Graph, Detail]:
    H = p_corona(G, P).graph
    return H, {"corona_order": H.n, "corona_graph6": encode_graph6(H)}


def _require_family(P: Optional[PartitionFamily]) -> PartitionFamily:
    assert P is not None, "family statements are always given a family"
    return P


@theorem(
    "lem-2.10",
    CheckKind.INVARIANT,
    "the P-corona of G has domination number |V(G)|",
    SMALL,
    needs_family=True,
)
def _corona_gamma(G: Graph, P: Optional[PartitionFamily]) -> Evaluation:
    H, detail = _corona_detail(G, _require_family(P))
    value = gamma(H).value
    detail["gamma"] = value
    return True, value == G.n, detail


def _corona_equality(G: Graph, P: PartitionFamily) -> bool:
    H = p_corona(G, P).graph
    if equality_predicate(G, P):
        D = p_corona_gamma_set(G, P)
        if is_certified_dominating(H, D) and len(D) == gamma(H).value:
            return True
    return gamma_equals_gamma_cer(H)


@theorem(
    "thm-2.11",
    CheckKind.BICONDITIONAL,
    "the P-corona has gamma = gamma_cer iff the vertices with two or more"
    " blocks dominate G",
    Scope(max_order=5, min_degree=1),
    needs_family=True,
)
def _corona_equality_predicate(
    G: Graph, P: Optional[PartitionFamily]
) -> Evaluation:
    family = _require_family(P)
    _, detail = _corona_detail(G, family)
    predicate = equality_predicate(G, family)
    equal = _corona_equality(G, family)
    detail.update(predicate=predicate, equal=equal)
    return predicate, equal, detail


@theorem(
    "cor-corona-strict",
    CheckKind.INVARIANT,
    "the corona G o K1 has gamma < gamma_cer",
    SMALL,
)
def _corona_strict(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    H = corona_k1(G).graph
    g = gamma(H).value
    equal = gamma_equals_gamma_cer(H)
    detail = {"corona_order": H.n, "gamma": g, "equal": equal}
    return True, not equal, detail


@theorem(
    "cor-2subdivision",
    CheckKind.IMPLICATION,
    "without K2 components the 2-subdivision has gamma = gamma_cer",
    SMALL,
)
def _subdivision(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    hypothesis = not any(is_complete_k2(H) for _, H in components(G))
    S = two_subdivision(G).graph
    D = p_corona_gamma_set(G, singleton_family(G))
    value = gamma(S).value
    certified = is_certified_dominating(S, D)
    conclusion = certified and len(D) == value
    if not conclusion:
        conclusion = gamma_equals_gamma_cer(S)
    detail = {
        "subdivision_order": S.n,
        "gamma": value,
        "candidate": D.to_list(),
        "candidate_certified": certified,
    }
    return hypothesis, conclusion, detail


@theorem(
    "thm-maximal-family",
    CheckKind.BICONDITIONAL,
    "P is maximal for gamma = gamma_cer iff every P(v) has at most two"
    " blocks and the two-block vertices form a minimal dominating set",
    Scope(max_order=4, min_degree=1),
    needs_family=True,
)
def _maximal_family(G: Graph, P: Optional[PartitionFamily]) -> Evaluation:
    family = _require_family(P)
    report = is_maximal_family(G, family)
    equal = _corona_equality(G, family)
    coarser_equal = [
        format_partition_family(Q)
        for Q in coarsenings(G, family)
        if _corona_equality(G, Q)
    ]
    detail = {
        "report": report.to_json(),
        "equal": equal,
        "coarser_with_equality": coarser_equal,
    }
    return report.maximal, equal and not coarser_equal, detail


@theorem(
    "refinement-monotonicity",
    CheckKind.IMPLICATION,
    "equality for P carries over to every refinement of P",
    SMALL,
    needs_family=True,
)
def _refinements(G: Graph, P: Optional[PartitionFamily]) -> Evaluation:
    family = _require_family(P)
    hypothesis = equality_predicate(G, family)
    if not hypothesis:
        return False, True, {"predicate": False}
    broken = [
        format_partition_family(Q)
        for Q in islice(refinements(G, family), MAX_REFINEMENTS)
        if not equality_predicate(G, Q)
    ]
    return True, not broken, {"predicate": True, "broken": broken}


@theorem(
    "lem-3.1",
    CheckKind.INVARIANT,
    "in a minimal certified dominating set the enclosed vertices are"
    " leaves or weak supports and induce a corona",
    Scope(min_order=2, max_order=MAX_SUBSET_SCAN_ORDER, connected=True),
)
def _enclosed_core(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    report = leaf_support_report(G)
    allowed = report.leaves | report.weak_supports
    offending = []
    for D in enumerate_minimal_sets(G, certified=True):
        F = enclosed_core(G, D)
        if not F:
            continue
        if not F.issubset(allowed) or not is_corona(induced_subgraph(G, F)):
            offending.append({"set": D.to_list(), "core": F.to_list()})
    return True, not offending, {"offending": offending}


def _components_are_coronas(G: Graph) -> bool:
    return all(H.n == 1 or is_corona(H) for _, H in components(G))


@theorem(
    "thm-3.2",
    CheckKind.INVARIANT,
    "every non-trivial component is a corona iff gamma_cer = n iff"
    " Gamma_cer = n",
    SCANNABLE,
)
def _full_order(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    coronas = _components_are_coronas(G)
    gc = gamma_cer(G).value
    _, ugc = _upper_values(G)
    detail = {"coronas": coronas, "gamma_cer": gc, "upper_gamma_cer": ugc}
    return True, coronas == (gc == G.n) == (ugc == G.n), detail


_N_MINUS_TWO = frozenset(
    {
        Structure.SIMPLE_DIADEM,
        Structure.DIADEM,
        Structure.JOIN_K2,
        Structure.JOIN_K2_BAR,
    }
)


@theorem(
    "thm-3.3",
    CheckKind.BICONDITIONAL,
    "Gamma_cer = n - 2 iff G is a simple diadem, a diadem, or a join of K2"
    " or its complement with an edgeless graph",
    Scope(min_order=3, max_order=MAX_SUBSET_SCAN_ORDER, connected=True),
)
def _n_minus_two(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    _, ugc = _upper_values(G)
    label = classify_structure(G)
    detail = {"upper_gamma_cer": ugc, "structure": label.to_json()}
    return ugc == G.n - 2, bool(_N_MINUS_TWO & set(label.matches)), detail


@theorem(
    "gap-law",
    CheckKind.INVARIANT,
    "Gamma_cer is never n - 1",
    SCANNABLE,
)
def _gap(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    _, ugc = _upper_values(G)
    return True, G.n == 1 or ugc != G.n - 1, {"upper_gamma_cer": ugc}


@theorem(
    "lem-3.4",
    CheckKind.IMPLICATION,
    "min degree >= 2 gives Gamma_cer <= Gamma",
    SCANNABLE,
)
def _upper_order(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    ug, ugc = _upper_values(G)
    detail = {"upper_gamma": ug, "upper_gamma_cer": ugc}
    return min_degree(G) >= 2, ugc <= ug, detail


@theorem(
    "thm-3.5",
    CheckKind.IMPLICATION,
    "min degree >= 2 and an independent Gamma-set give Gamma = Gamma_cer",
    Scope(max_order=MAX_SUBSET_SCAN_ORDER),
)
def _independent_upper(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    ug, ugc = _upper_values(G)
    detail: Detail = {"upper_gamma": ug, "upper_gamma_cer": ugc}
    if min_degree(G) < 2:
        return False, ug == ugc, detail
    found = next(
        (
            D
            for D in optimal_sets(G, InvariantKind.UPPER_GAMMA)
            if is_independent(G, D)
        ),
        None,
    )
    detail["independent_upper_set"] = (
        None if found is None else found.to_list()
    )
    return found is not None, ug == ugc, detail


@theorem(
    "cor-3.6",
    CheckKind.IMPLICATION,
    "min degree >= 2 and independence number = Gamma give Gamma ="
    " Gamma_cer",
    SCANNABLE,
)
def _independence_number(
    G: Graph, _: Optional[PartitionFamily]
) -> Evaluation:
    ug, ugc = _upper_values(G)
    beta = max_independent_set_size(G)
    detail = {"upper_gamma": ug, "upper_gamma_cer": ugc, "beta0": beta}
    return min_degree(G) >= 2 and beta == ug, ug == ugc, detail


@theorem(
    "sandwich",
    CheckKind.INVARIANT,
    "gamma <= gamma_cer <= Gamma_cer and gamma <= Gamma",
    SCANNABLE,
)
def _sandwich(G: Graph, _: Optional[PartitionFamily]) -> Evaluation:
    g, gc, detail = _equal_gammas(G)
    ug, ugc = _upper_values(G)
    detail.update(upper_gamma=ug, upper_gamma_cer=ugc)
    return True, g <= gc <= ugc and g <= ug, detail
