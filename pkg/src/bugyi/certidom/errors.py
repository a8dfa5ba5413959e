"""Custom error handling code lives here."""

from typing import Iterator, Optional, Sequence

from result import Result

from .types import E, T


class CertidomError(Exception):
    """Root of every error raised by this package."""

    def __init__(self, emsg: str, cause: Optional[Exception] = None) -> None:
        chain_errors(self, cause)
        super().__init__(emsg)

    def __iter__(self) -> Iterator[BaseException]:
        yield self

        e = self.__cause__
        while e:
            yield e
            e = e.__cause__

    def describe(self) -> str:
        """Renders this error and every error that caused it on one line.

        Examples:
            >>> e = CertidomError("outer", cause=ValueError("inner"))
            >>> e.describe()
            'outer (caused by: inner)'
        """
        messages = [str(e) for e in self]
        head, causes = messages[0], messages[1:]
        if not causes:
            return head
        return "{} (caused by: {})".format(head, " <- ".join(causes))


class GraphError(CertidomError):
    """A graph (or a graph request) is malformed or out of range."""


class ParseError(CertidomError):
    """Text input (graph6, edge lists, partition files, ...) is malformed."""

    def __init__(
        self,
        emsg: str,
        *,
        line_number: Optional[int] = None,
        cause: Optional[Exception] = None,
    ) -> None:
        self.line_number = line_number
        if line_number is not None:
            emsg = f"line {line_number}: {emsg}"
        super().__init__(emsg, cause=cause)


class PartitionError(CertidomError):
    """A partition family is not valid for its base graph."""

    def __init__(self, violation: object) -> None:
        self.violation = violation
        super().__init__(f"Invalid partition family: {violation}")


class PreconditionError(CertidomError):
    """An operation was called on a graph outside its domain."""


class SolverLimitError(CertidomError):
    """A solver was asked for a graph larger than its configured limit."""

    def __init__(self, invariant: str, order: int, limit: int) -> None:
        self.invariant = invariant
        self.order = order
        self.limit = limit
        super().__init__(
            f"Refusing to compute {invariant} on a graph of order {order}"
            f" (limit is {limit}); pass --force to lift the limit"
        )


class EnumerationLimitError(CertidomError):
    """Labeled-graph enumeration was requested above the configured cap."""

    def __init__(self, order: int, cap: int) -> None:
        self.order = order
        self.cap = cap
        super().__init__(
            f"Refusing to enumerate labeled graphs of order {order}"
            f" (cap is {cap}); raise CERTIDOM_MAX_N to lift the cap"
        )


class UsageError(CertidomError):
    """Command-line flags were combined in an unsupported way."""


class UnknownTheoremError(CertidomError):
    """A theorem id is not present in the registry."""

    def __init__(self, theorem_id: str, valid_ids: Sequence[str]) -> None:
        self.theorem_id = theorem_id
        self.valid_ids = tuple(valid_ids)
        super().__init__(
            f"Unknown theorem id {theorem_id!r}; valid ids are: "
            + ", ".join(self.valid_ids)
        )


CResult = Result[T, CertidomError]


def chain_errors(e1: E, e2: Optional[Exception]) -> E:
    """Chain two exceptions together.

    This is the functional equivalent to ``raise e1 from e2``.

    Args:
        e1: An exception.
        e2: The exception we want to chain to @e1. If @e1 already has a
          cause, we attach @e2 to the end of that chain instead.

    Returns:
        @e1 after @e2 has been chained to it.
    """
    if e2 is None:
        return e1

    e: BaseException = e1
    cause = e.__cause__
    while cause:
        e = cause
        cause = e.__cause__
    e.__cause__ = e2
    return e1
