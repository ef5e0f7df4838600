"""Tick-driven tasks: leaf tasks, latched stateful composites, reference folds.

Stateless composition is just expression evaluation: the whole tree is
re-derived from world state every tick. A StatefulNode instead keeps a
cursor, runs one child per tick, and latches its terminal result; once
latched it answers from storage without touching children until reset.
"""

from __future__ import annotations

from typing import Callable, Iterable, Optional

from .dsl import Expr, evaluate
from .status import COMPLETE, FAILING, RUNNING, Status, as_status
from .trace import TraceEvent, Tracer


class Task:
    """Named leaf; ``fn(world)`` yields a Status (or bool) when ticked."""

    def __init__(self, id: str, fn: Callable):
        self.id = id
        self.fn = fn

    def tick(self, world=None) -> Status:
        return as_status(self.fn(world))

    def __repr__(self) -> str:
        return f"Task({self.id!r})"


SEQUENCE = "sequence"
SELECTOR = "selector"


class StatefulNode:
    """Composite that advances one child per tick and latches its result.

    A sequence moves past complete children and latches F at the first
    failure; a selector moves past failing children and latches T at the
    first success. Running out of children latches the identity (T for
    sequence, F for selector). Optional hooks: ``on_init`` fires on the
    first tick after construction or reset, ``on_end(status)`` fires when
    the node latches.
    """

    def __init__(
        self,
        id: str,
        kind: str,
        children: Iterable,
        on_init: Optional[Callable[[], None]] = None,
        on_end: Optional[Callable[[Status], None]] = None,
    ):
        if kind not in (SEQUENCE, SELECTOR):
            raise ValueError(f"kind must be {SEQUENCE!r} or {SELECTOR!r}, got {kind!r}")
        self.id = id
        self.kind = kind
        self.children = list(children)
        self.on_init = on_init
        self.on_end = on_end
        self.cursor = 0
        self.latched: Optional[Status] = None
        self._started = False

    @property
    def phase(self) -> str:
        if self.latched is not None:
            return "latched"
        return "running" if self._started else "fresh"

    def tick(self, world=None, tracer: Optional[Tracer] = None) -> Status:
        if self.latched is not None:
            return self.latched
        if not self._started:
            self._started = True
            if self.on_init is not None:
                self.on_init()
        if self.cursor >= len(self.children):  # empty composite
            return self._latch(COMPLETE if self.kind == SEQUENCE else FAILING)
        child = self.children[self.cursor]
        if isinstance(child, StatefulNode):
            status = child.tick(world, tracer)
        else:
            status = child.tick(world)
        if tracer is not None:
            tracer.emit(child.id, status)
        if status.is_running:
            return RUNNING
        advance_on = COMPLETE if self.kind == SEQUENCE else FAILING
        if status == advance_on:
            self.cursor += 1
            if self.cursor == len(self.children):
                return self._latch(advance_on)
            return RUNNING
        return self._latch(status)

    def _latch(self, status: Status) -> Status:
        self.latched = status
        if self.on_end is not None:
            self.on_end(status)
        return status

    def reset(self) -> None:
        """Back to fresh: cursor at 0, nothing latched, recursively."""
        self.cursor = 0
        self.latched = None
        self._started = False
        for child in self.children:
            child_reset = getattr(child, "reset", None)
            if child_reset is not None:
                child_reset()

    def __repr__(self) -> str:
        return f"StatefulNode({self.id!r}, {self.kind}, phase={self.phase})"


def reference_sequence(children: Iterable[Task], world=None) -> Status:
    """First-principles sequence: walk children until one runs or fails."""
    for child in children:
        status = child.tick(world)
        if status.is_running:
            return RUNNING
        if status.is_failing:
            return FAILING
    return COMPLETE


def reference_selector(children: Iterable[Task], world=None) -> Status:
    """First-principles fallback: walk children until one runs or completes."""
    for child in children:
        status = child.tick(world)
        if status.is_running:
            return RUNNING
        if status.is_complete:
            return COMPLETE
    return FAILING


def tick_stateless(
    expr: Expr, bindings: dict, world=None, tick: int = 0
) -> tuple[Status, list[TraceEvent]]:
    """Evaluate an expression tree once, returning its status and trace.

    Short-circuited subtrees leave no events: a task that did not run
    this tick does not appear.
    """
    tracer = Tracer(tick)
    status = evaluate(expr, bindings, world, tracer)
    return status, tracer.events
