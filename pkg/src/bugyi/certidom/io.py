"""Report rendering helpers: JSON, TSV and boxed human-readable text."""

import json
import logging
from typing import Any, Callable, Iterable, Sequence

from .config import JSON_SCHEMA_VERSION


logger = logging.getLogger(__name__)


def dump_json(payload: Any) -> str:
    """Serializes @payload with sorted keys so identical reports are
    byte-identical.

    Examples:
        >>> print(dump_json({"b": 1, "a": [1, 2]}))
        {
          "a": [
            1,
            2
          ],
          "b": 1
        }
    """
    return json.dumps(payload, indent=2, sort_keys=True)


def with_schema(payload: Any) -> Any:
    """Stamps a JSON payload with the report schema version."""
    return {"schema": JSON_SCHEMA_VERSION, **payload}


def format_tsv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    r"""Tab-separated rows under @header; None renders as "-".

    Examples:
        >>> format_tsv(["a", "b"], [[1, None], [True, "x"]])
        'a\tb\n1\t-\ntrue\tx\n'
    """
    lines = ["\t".join(header)]
    for row in rows:
        lines.append("\t".join(_tsv_cell(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _tsv_cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def box(title: str) -> str:
    """Wraps @title in an ASCII box.

    Examples:
        >>> print(box("P4"))
        +----------------------+
        |          P4          |
        +----------------------+
    """
    middle = f"|          {title}          |"
    top = bottom = "+" + ("-" * (len(middle) - 2)) + "+"
    return f"{top}\n{middle}\n{bottom}"


def key_value_lines(pairs: Iterable[Sequence[Any]], indent: int = 2) -> str:
    """Aligns "key: value" lines for human output."""
    items = [(str(k), v) for k, v in pairs]
    width = max((len(k) for k, _ in items), default=0)
    pad = " " * indent
    return "\n".join(
        f"{pad}{k.ljust(width)} : {_tsv_cell(v)}" for k, v in items
    )


def _color_factory(N: int) -> Callable[[str], str]:
    def color(msg: str) -> str:
        return "%s%s%s" % ("\033[{}m".format(N), msg, "\033[0m")

    return color


class colors:
    """Namespace for <color>() functions."""

    green = _color_factory(32)
    red = _color_factory(31)
