"""Sweeps of the theorem registry over graph sources, chain patterns and
invariant censuses.

A sweep turns its SweepConfig into a stream of numbered cases (graphs,
optionally paired with a partition family), evaluates the requested
statements on each case and tallies the outcomes. Cases are produced in a
fixed order and results are consumed in that same order, with or without
worker processes, so equal configs give identical reports.
"""

from dataclasses import dataclass, field
import enum
import logging
import multiprocessing
from pathlib import Path
import sys
from typing import (
    Any,
    Callable,
    Dict,
    Iterable,
    Iterator,
    List,
    Optional,
    Sequence,
    Tuple,
    TypeVar,
)

from result import Err, Ok

from .catalog import (
    enumerate_labeled_graphs,
    ingest_graph6_file,
    ingest_graph6_lines,
    sample_corona_pairs,
)
from .config import (
    DEFAULT_SAMPLE_ORDER,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    enumeration_cap,
)
from .corona import PartitionFamily, format_partition_family
from .errors import CertidomError, CResult
from .families import build, parse_family
from .graph import Graph
from .graph6 import encode_graph6
from .io import format_tsv, with_schema
from .solver import MAX_SUBSET_SCAN_ORDER, invariant_quadruple
from .theorems import CheckResult, Outcome, check_theorem, resolve_ids


logger = logging.getLogger(__name__)

R = TypeVar("R")

Quadruple = Tuple[int, int, int, int]

# Cases handed to a worker process at a time.
_CHUNK_SIZE = 16


class SourceKind(enum.Enum):
    ENUMERATE = "enumerate"
    GRAPH6 = "graph6"
    FAMILIES = "families"
    SAMPLES = "samples"


@dataclass(frozen=True)
class SweepConfig:
    """Where the graphs of a sweep (or census) come from.

    ENUMERATE walks every labeled graph of order min_order..max_order;
    GRAPH6 reads @graph6_path ("-" is stdin); FAMILIES builds each named
    family in @families; SAMPLES draws @samples seeded (graph, family)
    pairs with at most @sample_order vertices.
    """

    source: SourceKind
    min_order: int = 1
    max_order: int = 1
    connected_only: bool = False
    graph6_path: Optional[str] = None
    families: Tuple[str, ...] = ()
    samples: int = DEFAULT_SAMPLES
    sample_order: int = DEFAULT_SAMPLE_ORDER
    seed: int = DEFAULT_SEED
    jobs: int = 1

    def to_json(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {"source": self.source.value}
        if self.source is SourceKind.ENUMERATE:
            result.update(
                min_order=self.min_order,
                max_order=self.max_order,
                connected_only=self.connected_only,
            )
        elif self.source is SourceKind.GRAPH6:
            result["graph6_path"] = self.graph6_path
        elif self.source is SourceKind.FAMILIES:
            result["families"] = list(self.families)
        else:
            result.update(
                samples=self.samples, sample_order=self.sample_order
            )
        result["seed"] = self.seed
        return result


@dataclass(frozen=True)
class Case:
    """One graph of a sweep; @label says where it came from."""

    index: int
    graph: Graph
    label: str
    family: Optional[PartitionFamily] = None


@dataclass
class TheoremTally:
    checked: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0

    def record(self, outcome: Outcome) -> None:
        if outcome is Outcome.SKIPPED:
            self.skipped += 1
            return
        self.checked += 1
        if outcome is Outcome.PASS:
            self.passed += 1
        else:
            self.failed += 1

    def merge(self, other: "TheoremTally") -> "TheoremTally":
        return TheoremTally(
            self.checked + other.checked,
            self.passed + other.passed,
            self.failed + other.failed,
            self.skipped + other.skipped,
        )

    def to_json(self) -> Dict[str, int]:
        return {
            "checked": self.checked,
            "passed": self.passed,
            "failed": self.failed,
            "skipped": self.skipped,
        }


@dataclass(frozen=True)
class Counterexample:
    theorem_id: str
    index: int
    label: str
    graph6: str
    quadruple: Optional[Quadruple]
    result: CheckResult
    family: Optional[str] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "theorem": self.theorem_id,
            "index": self.index,
            "label": self.label,
            "graph6": self.graph6,
            "family": self.family,
            "quadruple": (
                None if self.quadruple is None else list(self.quadruple)
            ),
            "hypothesis": self.result.hypothesis,
            "conclusion": self.result.conclusion,
            "detail": self.result.detail,
        }


@dataclass(frozen=True)
class InputError:
    line_number: Optional[int]
    message: str

    def to_json(self) -> Dict[str, Any]:
        return {"line": self.line_number, "error": self.message}


@dataclass
class SweepReport:
    config: SweepConfig
    theorem_ids: List[str]
    tallies: Dict[str, TheoremTally] = field(default_factory=dict)
    counterexamples: List[Counterexample] = field(default_factory=list)
    input_errors: List[InputError] = field(default_factory=list)
    graphs: int = 0

    def __post_init__(self) -> None:
        for theorem_id in self.theorem_ids:
            self.tallies.setdefault(theorem_id, TheoremTally())

    @property
    def failed(self) -> int:
        return sum(tally.failed for tally in self.tallies.values())

    def all_passed(self) -> bool:
        return self.failed == 0

    def merge(self, other: "SweepReport") -> "SweepReport":
        """Combines two partial reports over disjoint cases of one sweep."""
        ids = self.theorem_ids + [
            i for i in other.theorem_ids if i not in self.theorem_ids
        ]
        tallies = {
            i: self.tallies.get(i, TheoremTally()).merge(
                other.tallies.get(i, TheoremTally())
            )
            for i in ids
        }
        return SweepReport(
            config=self.config,
            theorem_ids=ids,
            tallies=tallies,
            counterexamples=sorted(
                self.counterexamples + other.counterexamples,
                key=lambda c: (c.index, ids.index(c.theorem_id)),
            ),
            input_errors=sorted(
                self.input_errors + other.input_errors,
                key=lambda e: e.line_number or 0,
            ),
            graphs=self.graphs + other.graphs,
        )

    def to_json(self) -> Dict[str, Any]:
        return with_schema(
            {
                "config": self.config.to_json(),
                "graphs": self.graphs,
                "theorems": {
                    i: self.tallies[i].to_json() for i in self.theorem_ids
                },
                "failed": self.failed,
                "counterexamples": [
                    c.to_json() for c in self.counterexamples
                ],
                "input_errors": [e.to_json() for e in self.input_errors],
            }
        )

    def to_tsv(self) -> str:
        return format_tsv(
            ["theorem", "checked", "passed", "failed", "skipped"],
            (
                [
                    i,
                    self.tallies[i].checked,
                    self.tallies[i].passed,
                    self.tallies[i].failed,
                    self.tallies[i].skipped,
                ]
                for i in self.theorem_ids
            ),
        )


def _graph6_source(config: SweepConfig) -> Iterator[Tuple[int, Any]]:
    path = config.graph6_path
    if path is None:
        raise CertidomError("A graph6 sweep needs a graph6 path")
    if path == "-":
        return ingest_graph6_lines(sys.stdin.read().splitlines())
    return ingest_graph6_file(Path(path))


def iter_cases(config: SweepConfig) -> Iterator[CResult[Case]]:
    """Yields the cases of @config in a fixed order.

    Malformed graph6 lines come out as Err values carrying a ParseError;
    every other problem (unreadable file, enumeration cap, bad family)
    raises before the first case is produced.
    """
    if config.source is SourceKind.ENUMERATE:
        cap = enumeration_cap()
        orders = range(config.min_order, config.max_order + 1)
        streams = [
            enumerate_labeled_graphs(n, config.connected_only, cap=cap)
            for n in orders
        ]
        index = 0
        for n, stream in zip(orders, streams):
            for number, G in enumerate(stream):
                yield Ok(Case(index, G, f"n={n} #{number}"))
                index += 1
    elif config.source is SourceKind.GRAPH6:
        for number, parsed in _graph6_source(config):
            if isinstance(parsed, Err):
                yield Err(parsed.err())
            else:
                yield Ok(Case(number, parsed.unwrap(), f"line {number}"))
    elif config.source is SourceKind.FAMILIES:
        specs = [parse_family(text) for text in config.families]
        for index, spec in enumerate(specs):
            yield Ok(Case(index, build(spec), str(spec)))
    else:
        pairs = sample_corona_pairs(
            config.seed, config.samples, config.sample_order
        )
        for index, (G, P) in enumerate(pairs):
            yield Ok(Case(index, G, f"sample {index}", P))


def _map_ordered(
    worker: Callable[[Any], R], tasks: Iterable[Any], jobs: int
) -> Iterator[R]:
    """Maps @worker over @tasks, in order, on @jobs processes."""
    if jobs <= 1:
        yield from map(worker, tasks)
        return
    with multiprocessing.Pool(processes=jobs) as pool:
        yield from pool.imap(worker, tasks, chunksize=_CHUNK_SIZE)


def _split_errors(
    config: SweepConfig, errors: List[InputError]
) -> Iterator[Case]:
    for item in iter_cases(config):
        if isinstance(item, Err):
            e = item.err()
            errors.append(
                InputError(getattr(e, "line_number", None), str(e))
            )
        else:
            yield item.unwrap()


def _quadruple_or_none(G: Graph) -> Optional[Quadruple]:
    if G.n > MAX_SUBSET_SCAN_ORDER:
        return None
    return invariant_quadruple(G)


_SweepTask = Tuple[Tuple[str, ...], Case, int]


def _check_case(
    task: _SweepTask,
) -> Tuple[Case, List[CheckResult], Optional[Quadruple]]:
    ids, case, seed = task
    results = [
        check_theorem(i, case.graph, case.family, seed=seed) for i in ids
    ]
    failed = any(r.outcome is Outcome.FAIL for r in results)
    quadruple = _quadruple_or_none(case.graph) if failed else None
    return case, results, quadruple


def sweep(ids: Sequence[str], config: SweepConfig) -> SweepReport:
    """Checks every requested statement on every case of @config.

    Failures never stop the sweep; each one is kept as a Counterexample
    with the graph's graph6 string and invariant quadruple.
    """
    resolved = resolve_ids(ids)
    report = SweepReport(config=config, theorem_ids=resolved)
    logger.info(
        "Starting sweep. | theorems=%d  source=%s  jobs=%d",
        len(resolved),
        config.source.value,
        config.jobs,
    )

    tasks = (
        (tuple(resolved), case, config.seed)
        for case in _split_errors(config, report.input_errors)
    )
    for case, results, quadruple in _map_ordered(
        _check_case, tasks, config.jobs
    ):
        report.graphs += 1
        for result in results:
            report.tallies[result.theorem_id].record(result.outcome)
            if result.outcome is not Outcome.FAIL:
                continue
            logger.warning(
                "Theorem check failed. | theorem=%s  case=%s",
                result.theorem_id,
                case.label,
            )
            report.counterexamples.append(
                Counterexample(
                    theorem_id=result.theorem_id,
                    index=case.index,
                    label=case.label,
                    graph6=encode_graph6(case.graph),
                    quadruple=quadruple,
                    result=result,
                    family=(
                        None
                        if case.family is None
                        else format_partition_family(case.family)
                    ),
                )
            )
        if report.graphs % 1000 == 0:
            logger.debug("Sweep progress. | graphs=%d", report.graphs)

    logger.info(
        "Sweep finished. | graphs=%d  failed=%d",
        report.graphs,
        report.failed,
    )
    return report


class ChainPattern(enum.Enum):
    """Where Gamma sits relative to gamma_cer and Gamma_cer.

    CHAIN1: Gamma <= gamma_cer.
    CHAIN2: gamma_cer <= Gamma <= Gamma_cer.
    CHAIN3: Gamma_cer <= Gamma.
    """

    CHAIN1 = "chain1"
    CHAIN2 = "chain2"
    CHAIN3 = "chain3"


@dataclass(frozen=True)
class ChainClassification:
    pattern: ChainPattern
    degenerate: bool
    holds: Tuple[ChainPattern, ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "pattern": self.pattern.value,
            "degenerate": self.degenerate,
            "holds": [p.value for p in self.holds],
        }


def chain_pattern_of(quadruple: Quadruple) -> ChainClassification:
    """Classifies a (gamma, Gamma, gamma_cer, Gamma_cer) tuple.

    Ties can make more than one pattern hold; the lowest-numbered one wins
    and the result is flagged degenerate.

    Examples:
        >>> c = chain_pattern_of((2, 3, 2, 3))
        >>> c.pattern.value, c.degenerate
        ('chain2', True)
    """
    _, upper, cer, upper_cer = quadruple
    holds = []
    if upper <= cer:
        holds.append(ChainPattern.CHAIN1)
    if cer <= upper <= upper_cer:
        holds.append(ChainPattern.CHAIN2)
    if upper_cer <= upper:
        holds.append(ChainPattern.CHAIN3)
    return ChainClassification(holds[0], len(holds) > 1, tuple(holds))


def chain_pattern(G: Graph) -> ChainClassification:
    return chain_pattern_of(invariant_quadruple(G))


@dataclass
class CensusRow:
    count: int
    witness: str
    chain: ChainClassification


@dataclass
class CensusReport:
    """Invariant tuples (gamma, Gamma, gamma_cer, Gamma_cer) with their
    multiplicities and the first graph realizing each."""

    config: SweepConfig
    rows: Dict[Quadruple, CensusRow] = field(default_factory=dict)
    input_errors: List[InputError] = field(default_factory=list)
    graphs: int = 0

    def add(self, quadruple: Quadruple, graph6: str) -> None:
        self.graphs += 1
        row = self.rows.get(quadruple)
        if row is None:
            self.rows[quadruple] = CensusRow(
                1, graph6, chain_pattern_of(quadruple)
            )
        else:
            row.count += 1

    def chain_witnesses(self) -> Dict[str, Optional[str]]:
        """Maps each pattern to the first strict (non-degenerate) witness
        in tuple order, or None when the census has none."""
        found: Dict[str, Optional[str]] = {p.value: None for p in ChainPattern}
        for quadruple in sorted(self.rows):
            row = self.rows[quadruple]
            key = row.chain.pattern.value
            if not row.chain.degenerate and found[key] is None:
                found[key] = row.witness
        return found

    def notes(self) -> List[str]:
        return [
            f"no strict {pattern} witness among these graphs"
            for pattern, witness in self.chain_witnesses().items()
            if witness is None
        ]

    def to_json(self) -> Dict[str, Any]:
        return with_schema(
            {
                "config": self.config.to_json(),
                "graphs": self.graphs,
                "rows": [
                    {
                        "tuple": list(quadruple),
                        "count": self.rows[quadruple].count,
                        "witness": self.rows[quadruple].witness,
                        "chain": self.rows[quadruple].chain.to_json(),
                    }
                    for quadruple in sorted(self.rows)
                ],
                "chain_witnesses": self.chain_witnesses(),
                "notes": self.notes(),
                "input_errors": [e.to_json() for e in self.input_errors],
            }
        )

    def to_tsv(self) -> str:
        header = [
            "gamma",
            "upper_gamma",
            "gamma_cer",
            "upper_gamma_cer",
            "count",
            "witness",
            "chain",
            "degenerate",
        ]
        return format_tsv(
            header,
            (
                [
                    *quadruple,
                    self.rows[quadruple].count,
                    self.rows[quadruple].witness,
                    self.rows[quadruple].chain.pattern.value,
                    self.rows[quadruple].chain.degenerate,
                ]
                for quadruple in sorted(self.rows)
            ),
        )


def _census_case(case: Case) -> Tuple[Quadruple, str]:
    return invariant_quadruple(case.graph), encode_graph6(case.graph)


def census(config: SweepConfig) -> CensusReport:
    """Tabulates the invariant tuples of every graph in @config's source.

    Examples:
        >>> config = SweepConfig(SourceKind.ENUMERATE, 1, 2)
        >>> sorted(census(config).rows)
        [(1, 1, 1, 1), (1, 1, 2, 2), (2, 2, 2, 2)]
    """
    report = CensusReport(config=config)
    cases = _split_errors(config, report.input_errors)
    for quadruple, graph6 in _map_ordered(_census_case, cases, config.jobs):
        report.add(quadruple, graph6)
    logger.info(
        "Census finished. | graphs=%d  tuples=%d",
        report.graphs,
        len(report.rows),
    )
    return report
