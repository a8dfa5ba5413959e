"""The certidom command: compute, classify, construct, verify and census.

Exit codes:
    0: success.
    1: a verification sweep found failing theorem checks.
    2: malformed input, bad flags, an unknown theorem id or an invalid
       partition family.
    3: a solver refused a graph above its order limit (see --force).
"""

import argparse
from dataclasses import dataclass
import logging
from pathlib import Path
import sys
from typing import (
    Any,
    Callable,
    Dict,
    List,
    Literal,
    Optional,
    Sequence,
    Tuple,
)

from result import Err

from .catalog import ingest_graph6_lines
from .config import (
    DEFAULT_SAMPLE_ORDER,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    Limits,
)
from .corona import (
    PCoronaGraph,
    corona_k1,
    format_p_corona,
    parse_partition_family,
    p_corona,
    two_subdivision,
)
from .errors import CertidomError, SolverLimitError, UsageError
from .families import build, family_json, parse_family
from .graph import Graph, leaf_support_report, min_degree
from .graph import is_p4_free
from .graph6 import (
    format_edge_list_text,
    graph_summary,
    parse_edge_list_text,
)
from .harness import SourceKind, SweepConfig, census, sweep
from .io import box, colors, dump_json, format_tsv, key_value_lines
from .io import with_schema
from .solver import InvariantKind, solve
from .structure import classify_structure
from .types import assert_never, literal_to_list


logger = logging.getLogger(__name__)

Command = Literal["compute", "classify", "construct", "verify", "census"]
OutputFormat = Literal["json", "tsv", "human"]
Construction = Literal["graph", "p-corona", "corona-k1", "two-subdivision"]

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_LIMIT = 3


@dataclass(frozen=True)
class CliConfig:
    """Everything a command needs, taken from the parsed flags."""

    command: Command
    output_format: OutputFormat
    families: Tuple[str, ...] = ()
    edges: Optional[str] = None
    graph6: Optional[str] = None
    partitions: Optional[str] = None
    construction: Construction = "graph"
    invariants: Tuple[InvariantKind, ...] = tuple(InvariantKind)
    theorems: Tuple[str, ...] = ("all",)
    enumerate_order: Optional[int] = None
    min_order: int = 1
    connected: bool = False
    samples: Optional[int] = None
    sample_order: int = DEFAULT_SAMPLE_ORDER
    seed: int = DEFAULT_SEED
    jobs: int = 1
    force: bool = False
    verbose: bool = False

    @property
    def limits(self) -> Limits:
        return Limits.unlimited() if self.force else Limits()

    @classmethod
    def from_namespace(cls, args: argparse.Namespace) -> "CliConfig":
        construction: Construction = "graph"
        for flag, mode in _CONSTRUCTION_FLAGS:
            if getattr(args, flag, False):
                construction = mode
        return cls(
            command=args.command,
            output_format=args.format or _DEFAULT_FORMATS[args.command],
            families=tuple(args.family or ()),
            edges=args.edges,
            graph6=args.graph6,
            partitions=getattr(args, "partitions", None),
            construction=construction,
            invariants=tuple(getattr(args, "invariants", InvariantKind)),
            theorems=tuple(getattr(args, "theorems", ("all",))),
            enumerate_order=getattr(args, "enumerate", None),
            min_order=getattr(args, "min_order", 1),
            connected=getattr(args, "connected", False),
            samples=getattr(args, "samples", None),
            sample_order=getattr(args, "sample_order", DEFAULT_SAMPLE_ORDER),
            seed=getattr(args, "seed", DEFAULT_SEED),
            jobs=getattr(args, "jobs", 1),
            force=getattr(args, "force", False),
            verbose=args.verbose,
        )


_CONSTRUCTION_FLAGS: Tuple[Tuple[str, Construction], ...] = (
    ("p_corona", "p-corona"),
    ("corona_k1", "corona-k1"),
    ("two_subdivision", "two-subdivision"),
)

_DEFAULT_FORMATS: Dict[str, OutputFormat] = {
    "compute": "json",
    "classify": "json",
    "construct": "human",
    "verify": "json",
    "census": "json",
}


def _comma_list(text: str) -> List[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _invariant_list(text: str) -> List[InvariantKind]:
    try:
        return [InvariantKind.from_option(o) for o in _comma_list(text)]
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1: {text}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0: {text}")
    return value


def _add_graph_input(parser: argparse.ArgumentParser, many: bool) -> None:
    group = parser.add_argument_group("input")
    group.add_argument(
        "--family",
        action="append",
        metavar="SPEC",
        help=(
            "A named family such as path:5, kbip:2,3 or corona:cycle:4."
            + (" May be repeated." if many else "")
        ),
    )
    group.add_argument(
        "--edges",
        metavar="TEXT",
        help=(
            'An inline edge list: "n m" then one "u v" pair per line'
            ' (a literal "\\n" separates lines).'
        ),
    )
    group.add_argument(
        "--graph6",
        metavar="PATH",
        help='A file of graph6 lines; "-" reads standard input.',
    )


def _add_sweep_source(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("sweep source")
    group.add_argument(
        "--enumerate",
        type=_positive_int,
        metavar="N",
        help="Every labeled graph of order min-order..N.",
    )
    group.add_argument("--min-order", type=_positive_int, default=1)
    group.add_argument(
        "--connected",
        action="store_true",
        help="Keep only connected graphs when enumerating.",
    )
    group.add_argument(
        "--samples",
        type=_non_negative_int,
        metavar="K",
        nargs="?",
        const=DEFAULT_SAMPLES,
        help=(
            "K seeded (graph, partition family) pairs"
            f" (default {DEFAULT_SAMPLES})."
        ),
    )
    group.add_argument(
        "--sample-order", type=_positive_int, default=DEFAULT_SAMPLE_ORDER
    )
    group.add_argument("--seed", type=int, default=DEFAULT_SEED)
    group.add_argument("--jobs", type=_positive_int, default=1)


def _parse_args(argv: Optional[Sequence[str]] = None) -> argparse.Namespace:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=literal_to_list(OutputFormat),
        help="Output format (json, tsv or human).",
    )
    common.add_argument(
        "-v",
        "--verbose",
        action="store_true",
        help="Log debug messages to stderr.",
    )

    parser = argparse.ArgumentParser(
        prog="certidom",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    commands = parser.add_subparsers(dest="command", metavar="COMMAND")
    commands.required = True

    compute = commands.add_parser(
        "compute", parents=[common], help="Compute domination invariants."
    )
    _add_graph_input(compute, many=False)
    compute.add_argument(
        "--invariants",
        type=_invariant_list,
        default=list(InvariantKind),
        metavar="LIST",
        help=(
            "Comma-separated subset of gamma, gamma_cer, upper_gamma and"
            " upper_gamma_cer (default: all four)."
        ),
    )
    compute.add_argument(
        "--force",
        action="store_true",
        help="Lift the per-solver graph order limits.",
    )

    classify = commands.add_parser(
        "classify", parents=[common], help="Recognize graph structure."
    )
    _add_graph_input(classify, many=False)

    construct = commands.add_parser(
        "construct", parents=[common], help="Build corona constructions."
    )
    _add_graph_input(construct, many=False)
    mode = construct.add_mutually_exclusive_group()
    mode.add_argument("--p-corona", action="store_true")
    mode.add_argument("--corona-k1", action="store_true")
    mode.add_argument("--two-subdivision", action="store_true")
    construct.add_argument(
        "--partitions",
        metavar="PATH",
        help='Partition family file ("v: {a,b}|{c}" lines) for --p-corona.',
    )

    verify = commands.add_parser(
        "verify", parents=[common], help="Check theorems over many graphs."
    )
    _add_graph_input(verify, many=True)
    _add_sweep_source(verify)
    verify.add_argument(
        "--theorems",
        type=_comma_list,
        default=["all"],
        metavar="IDS",
        help='Comma-separated theorem ids, "all" or "cheap".',
    )

    census_parser = commands.add_parser(
        "census",
        parents=[common],
        help="Tabulate invariant tuples over many graphs.",
    )
    _add_graph_input(census_parser, many=True)
    _add_sweep_source(census_parser)

    return parser.parse_args(argv)


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as e:
        raise CertidomError(f"Unable to read file: {path}", cause=e) from e


def _single_graph(cfg: CliConfig) -> Tuple[Graph, Dict[str, Any]]:
    """Loads the one input graph, with JSON context about its source."""
    given = [
        flag
        for flag, value in (
            ("--family", cfg.families),
            ("--edges", cfg.edges),
            ("--graph6", cfg.graph6),
        )
        if value
    ]
    if len(given) != 1 or len(cfg.families) > 1:
        raise UsageError(
            "Exactly one of --family, --edges or --graph6 must be given"
            " (and --family only once)"
        )

    if cfg.families:
        spec = parse_family(cfg.families[0])
        return build(spec), family_json(spec)

    if cfg.edges is not None:
        return parse_edge_list_text(cfg.edges.replace("\\n", "\n")), {}

    assert cfg.graph6 is not None
    graphs = []
    for _, parsed in ingest_graph6_lines(
        _read_text(cfg.graph6).splitlines()
    ):
        if isinstance(parsed, Err):
            raise parsed.err()
        graphs.append(parsed.unwrap())
    if len(graphs) != 1:
        raise UsageError(
            f"Expected exactly one graph6 line, found {len(graphs)}"
        )
    return graphs[0], {}


def _sweep_config(cfg: CliConfig) -> SweepConfig:
    sources = [
        kind
        for kind, given in (
            (SourceKind.ENUMERATE, cfg.enumerate_order is not None),
            (SourceKind.GRAPH6, cfg.graph6 is not None),
            (SourceKind.FAMILIES, bool(cfg.families)),
            (SourceKind.SAMPLES, cfg.samples is not None),
        )
        if given
    ]
    if cfg.edges is not None:
        raise UsageError(f"--edges is not a source for {cfg.command}")
    if len(sources) != 1:
        raise UsageError(
            "Exactly one of --enumerate, --graph6, --family or --samples"
            " must be given"
        )

    return SweepConfig(
        source=sources[0],
        min_order=cfg.min_order,
        max_order=cfg.enumerate_order or 1,
        connected_only=cfg.connected,
        graph6_path=cfg.graph6,
        families=cfg.families,
        samples=DEFAULT_SAMPLES if cfg.samples is None else cfg.samples,
        sample_order=cfg.sample_order,
        seed=cfg.seed,
        jobs=cfg.jobs,
    )


def _human(title: str, pairs: List[Tuple[str, Any]]) -> str:
    return f"{box(title)}\n{key_value_lines(pairs)}\n"


def cmd_compute(cfg: CliConfig) -> Tuple[int, str]:
    G, context = _single_graph(cfg)
    results = [solve(G, kind, limits=cfg.limits) for kind in cfg.invariants]

    if cfg.output_format == "json":
        payload = {
            "graph": graph_summary(G),
            "invariants": {r.kind.option: r.to_json() for r in results},
            **context,
        }
        return EXIT_OK, dump_json(with_schema(payload)) + "\n"
    if cfg.output_format == "tsv":
        rows = [
            [r.kind.option, r.value, ",".join(map(str, r.witness))]
            for r in results
        ]
        return EXIT_OK, format_tsv(["invariant", "value", "witness"], rows)
    title = context.get("family", graph_summary(G)["graph6"])
    pairs = [(r.kind.option, r.value) for r in results]
    pairs += [
        (f"{r.kind.option}_witness", ",".join(map(str, r.witness)))
        for r in results
    ]
    return EXIT_OK, _human(title, pairs)


def cmd_classify(cfg: CliConfig) -> Tuple[int, str]:
    G, context = _single_graph(cfg)
    label = classify_structure(G)
    report = leaf_support_report(G)
    payload: Dict[str, Any] = {
        "graph": graph_summary(G),
        **label.to_json(),
        "p4_free": is_p4_free(G),
        "min_degree": min_degree(G),
        "leaves": report.leaves.to_list(),
        "supports": report.supports.to_list(),
        "weak_supports": report.weak_supports.to_list(),
        "strong_supports": report.strong_supports.to_list(),
        **context,
    }

    if cfg.output_format == "json":
        return EXIT_OK, dump_json(with_schema(payload)) + "\n"
    keys = [
        "label",
        "p4_free",
        "min_degree",
        "leaves",
        "supports",
        "weak_supports",
        "strong_supports",
    ]
    if cfg.output_format == "tsv":
        row = [
            ",".join(map(str, value)) if isinstance(value, list) else value
            for value in (payload[key] for key in keys)
        ]
        return EXIT_OK, format_tsv(keys, [row])
    title = context.get("family", payload["graph"]["graph6"])
    return EXIT_OK, _human(title, [(key, payload[key]) for key in keys])


def _construct(cfg: CliConfig, G: Graph) -> Optional[PCoronaGraph]:
    if cfg.partitions is not None and cfg.construction != "p-corona":
        raise UsageError("--partitions only applies to --p-corona")

    if cfg.construction == "graph":
        return None
    elif cfg.construction == "p-corona":
        if cfg.partitions is None:
            raise UsageError("--p-corona needs --partitions")
        family = parse_partition_family(_read_text(cfg.partitions), G.n)
        return p_corona(G, family)
    elif cfg.construction == "corona-k1":
        return corona_k1(G)
    elif cfg.construction == "two-subdivision":
        return two_subdivision(G)
    else:
        assert_never(cfg.construction)


def cmd_construct(cfg: CliConfig) -> Tuple[int, str]:
    G, context = _single_graph(cfg)
    pc = _construct(cfg, G)

    if cfg.output_format == "json":
        payload: Dict[str, Any] = {
            "construction": cfg.construction,
            "base": graph_summary(G),
            **context,
        }
        if pc is None:
            payload["edges"] = [list(edge) for edge in G.edges()]
        else:
            payload.update(pc.to_json())
        return EXIT_OK, dump_json(with_schema(payload)) + "\n"

    if pc is None:
        return EXIT_OK, format_edge_list_text(G)
    return EXIT_OK, format_p_corona(pc)


def cmd_verify(cfg: CliConfig) -> Tuple[int, str]:
    report = sweep(cfg.theorems, _sweep_config(cfg))
    code = EXIT_OK if report.all_passed() else EXIT_FAILED

    if cfg.output_format == "json":
        return code, dump_json(report.to_json()) + "\n"
    if cfg.output_format == "tsv":
        return code, report.to_tsv()

    paint = sys.stdout.isatty()
    lines = []
    for theorem_id in report.theorem_ids:
        tally = report.tallies[theorem_id]
        verdict = "FAIL" if tally.failed else "PASS"
        if paint:
            verdict = (colors.red if tally.failed else colors.green)(verdict)
        lines.append(
            f"{verdict} {theorem_id}: checked={tally.checked}"
            f" failed={tally.failed} skipped={tally.skipped}"
        )
    for example in report.counterexamples:
        lines.append(
            f"  {example.theorem_id} fails on {example.graph6}"
            f" ({example.label})"
        )
    for error in report.input_errors:
        lines.append(f"  skipped input: {error.message}")
    lines.append(f"graphs={report.graphs} failed={report.failed}")
    return code, "\n".join(lines) + "\n"


def cmd_census(cfg: CliConfig) -> Tuple[int, str]:
    report = census(_sweep_config(cfg))

    if cfg.output_format == "json":
        return EXIT_OK, dump_json(report.to_json()) + "\n"
    text = report.to_tsv()
    if cfg.output_format == "human":
        text += "".join(f"# {note}\n" for note in report.notes())
    return EXIT_OK, text


_COMMANDS: Dict[str, Callable[[CliConfig], Tuple[int, str]]] = {
    "compute": cmd_compute,
    "classify": cmd_classify,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "census": cmd_census,
}


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    cfg = CliConfig.from_namespace(args)
    _configure_logging(cfg.verbose)
    logger.debug("Running command. | config=%s", cfg)

    try:
        code, output = _COMMANDS[cfg.command](cfg)
    except SolverLimitError as e:
        print(f"certidom: {e.describe()}", file=sys.stderr)
        return EXIT_LIMIT
    except CertidomError as e:
        print(f"certidom: {e.describe()}", file=sys.stderr)
        return EXIT_USAGE

    sys.stdout.write(output)
    return code
