"""Deterministic tick loop driving a scenario's tree against its world.

Per tick: passive dynamics, due interferences, one root evaluation,
trace recording, goal test. No randomness, no wall clock; identical
inputs produce byte-identical traces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Union

from ..dsl import Expr, evaluate
from ..engine import StatefulNode
from ..status import FAILING, Status
from ..trace import TraceEvent, Tracer
from .world import Interference, World

GOAL_REACHED = "goal-reached"
TIMEOUT = "timeout"
LATCHED_FAILURE = "latched-failure"


class UnknownMutation(Exception):
    def __init__(self, name: str, known: Iterable[str]):
        self.name = name
        self.known = sorted(known)
        super().__init__(
            f"unknown mutation {name!r}; known: {', '.join(self.known) or '(none)'}"
        )


@dataclass
class Scenario:
    """A world, a root behavior, and the rules that move the world.

    ``root`` is either a parsed status expression (with ``bindings``
    naming its tasks and variables) or a StatefulNode tree. ``passive``
    runs every tick before the tree; ``mutations`` names the world edits
    an Interference may invoke; ``goal`` is side-effect free.
    """

    name: str
    world: World
    root: Union[Expr, StatefulNode]
    goal: Callable[[World], bool]
    passive: Callable[[World], None]
    bindings: Optional[dict] = None
    mutations: dict[str, Callable[[World], None]] = field(default_factory=dict)


@dataclass(frozen=True)
class Outcome:
    kind: str  # goal-reached | timeout | latched-failure
    tick: int  # tick of detection; for timeout, the number of ticks run

    def summary(self) -> str:
        return f"outcome={self.kind} tick={self.tick}"


@dataclass
class RunResult:
    outcome: Outcome
    events: list[TraceEvent]
    world: World


def run(
    scenario: Scenario,
    max_ticks: int = 200,
    interference: Iterable[Interference] = (),
    on_event: Optional[Callable[[TraceEvent], None]] = None,
) -> RunResult:
    """Drive the scenario until its goal, a latched failure, or max_ticks."""
    if max_ticks <= 0:
        raise ValueError("max_ticks must be positive")
    interference = list(interference)
    for itf in interference:
        if itf.mutation not in scenario.mutations:
            raise UnknownMutation(itf.mutation, scenario.mutations)
    world = scenario.world
    root = scenario.root
    tracer = Tracer()
    emitted = 0

    def flush() -> None:
        nonlocal emitted
        if on_event is not None:
            for event in tracer.events[emitted:]:
                on_event(event)
        emitted = len(tracer.events)

    for tick in range(max_ticks):
        world.tick_count = tick
        tracer.tick = tick
        scenario.passive(world)
        for itf in interference:
            if itf.at_tick == tick:
                scenario.mutations[itf.mutation](world)
        if isinstance(root, StatefulNode):
            status = root.tick(world, tracer)
            tracer.emit(root.id, status)
        else:
            evaluate(root, scenario.bindings or {}, world, tracer)
        flush()
        if scenario.goal(world):
            return RunResult(Outcome(GOAL_REACHED, tick), tracer.events, world)
        if isinstance(root, StatefulNode) and root.latched == FAILING:
            return RunResult(Outcome(LATCHED_FAILURE, tick), tracer.events, world)
    return RunResult(Outcome(TIMEOUT, max_ticks), tracer.events, world)
