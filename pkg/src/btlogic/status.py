"""Three-valued task status and its combinator algebra.

A polled task is always in one of three states: failing (F), running (U)
or complete (T), ranked -1 / 0 / +1. Nine operators compose statuses:

* ``conj`` -- sequencing; the right operand runs only if the left completed.
* ``disj`` -- fallback; the right operand runs only if the left failed.
* ``lenient`` / ``strict`` -- parallel-any / parallel-all (rank max / min).
* ``disregard`` -- both sides run, the left result is kept.
* ``negate`` / ``promote`` / ``demote`` / ``condone`` -- unary decorators.

``conj`` and ``disj`` take a lazy right operand so that a composed task is
never executed when the left operand already decides the outcome. Unlike
Kleene connectives they are not commutative: a running left operand hides
the right one entirely. The parallel combinators take plain statuses; by
the time they apply, both sides have already run.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union


@dataclass(frozen=True, order=True)
class Status:
    """Task state with rank -1 (failing), 0 (running) or +1 (complete)."""

    rank: int

    def __post_init__(self):
        if self.rank not in (-1, 0, 1):
            raise ValueError(f"status rank must be -1, 0 or +1, got {self.rank!r}")

    @property
    def is_failing(self) -> bool:
        return self.rank == -1

    @property
    def is_running(self) -> bool:
        return self.rank == 0

    @property
    def is_complete(self) -> bool:
        return self.rank == 1

    @property
    def letter(self) -> str:
        """Canonical one-character form used by traces and the DSL."""
        return "FUT"[self.rank + 1]

    def __str__(self) -> str:
        return self.letter

    def __repr__(self) -> str:
        return f"Status({self.letter})"

    def __bool__(self):
        raise TypeError(
            "Status is three-valued; test is_failing / is_running / is_complete"
        )

    # Operator sugar mirrors the surface syntax of the DSL for the eager
    # combinators only; sequencing and fallback need laziness and stay
    # function calls.
    def __add__(self, other: "Status") -> "Status":
        return lenient(self, other)

    def __mul__(self, other: "Status") -> "Status":
        return strict(self, other)

    def __mod__(self, other: "Status") -> "Status":
        return disregard(self, other)

    def __pos__(self) -> "Status":
        return promote(self)

    def __neg__(self) -> "Status":
        return demote(self)

    def __invert__(self) -> "Status":
        return condone(self)


FAILING = Status(-1)
RUNNING = Status(0)
COMPLETE = Status(1)

#: Short aliases; F < U < T under rank ordering.
F, U, T = FAILING, RUNNING, COMPLETE


def from_bool(b: bool) -> Status:
    """Embed a plain condition: true completes, false fails, never running."""
    return COMPLETE if b else FAILING


def as_status(value) -> Status:
    """Coerce a task result: Status passes through, bool embeds via from_bool."""
    if isinstance(value, Status):
        return value
    if isinstance(value, bool):
        return from_bool(value)
    raise TypeError(f"expected Status or bool, got {type(value).__name__}")


_WORDS = {
    "F": FAILING,
    "U": RUNNING,
    "T": COMPLETE,
    "failing": FAILING,
    "running": RUNNING,
    "complete": COMPLETE,
    "true": COMPLETE,
    "false": FAILING,
}


def parse_status(text: str) -> Status:
    """Read the canonical letters, the long names, or true/false."""
    try:
        return _WORDS[text]
    except KeyError:
        raise ValueError(f"not a status: {text!r}") from None


class Deferred:
    """A status computation that runs only when forced.

    Construction never evaluates the thunk. Each ``force`` runs it and
    bumps ``forced``, so tests can observe exactly when (and how often)
    ``conj``/``disj`` touch their right operand.
    """

    def __init__(self, thunk: Callable[[], "Status | bool"]):
        self.thunk = thunk
        self.forced = 0

    def force(self) -> Status:
        self.forced += 1
        return as_status(self.thunk())


Lazy = Union[Status, Deferred, Callable[[], "Status | bool"]]


def _force(y: Lazy) -> Status:
    if isinstance(y, Status):
        return y
    if isinstance(y, Deferred):
        return y.force()
    return as_status(y())


def conj(x: Status, y: Lazy) -> Status:
    """Sequence: y runs only once x has completed; otherwise x stands."""
    if not x.is_complete:
        return x
    return _force(y)


def disj(x: Status, y: Lazy) -> Status:
    """Fallback: y runs only once x has failed; otherwise x stands."""
    if not x.is_failing:
        return x
    return _force(y)


def lenient(x: Status, y: Status) -> Status:
    """Parallel-any: the better result wins (rank maximum)."""
    return x if x.rank >= y.rank else y


def strict(x: Status, y: Status) -> Status:
    """Parallel-all: the worse result wins (rank minimum)."""
    return x if x.rank <= y.rank else y


def disregard(x: Status, y: Status) -> Status:
    """Keep x; y ran for its side effects only."""
    return x


def negate(x: Status) -> Status:
    """F and T swap; running stays running."""
    return Status(-x.rank)


def promote(x: Status) -> Status:
    """Shift one rank up, saturating at complete."""
    return Status(min(x.rank + 1, 1))


def demote(x: Status) -> Status:
    """Shift one rank down, saturating at failing."""
    return Status(max(x.rank - 1, -1))


def condone(x: Status) -> Status:
    """Forgive failure: F reads as T, everything else is unchanged."""
    return COMPLETE if x.is_failing else x


UNARY_OPS = {
    "negate": negate,
    "promote": promote,
    "demote": demote,
    "condone": condone,
}


def apply_unary(op: str, x: Status) -> Status:
    """Apply a unary decorator by name (negate, promote, demote, condone)."""
    try:
        fn = UNARY_OPS[op]
    except KeyError:
        raise ValueError(f"unknown unary operator: {op!r}") from None
    return fn(x)
