"""Deterministic scenario simulator: worlds, tick loop, stock scenarios."""

from __future__ import annotations

from . import coffee, forager
from .runner import (
    GOAL_REACHED,
    LATCHED_FAILURE,
    TIMEOUT,
    Outcome,
    RunResult,
    Scenario,
    UnknownMutation,
    run,
)
from .world import Interference, UndeclaredVariable, World

SCENARIOS = {
    "coffee-stateless": coffee.stateless_scenario,
    "coffee-stateful": coffee.stateful_scenario,
    "forager": forager.scenario,
}


class UnknownScenario(Exception):
    def __init__(self, name: str):
        self.name = name
        self.known = sorted(SCENARIOS)
        super().__init__(f"unknown scenario {name!r}; known: {', '.join(self.known)}")


def build_scenario(name: str) -> Scenario:
    """Construct a fresh instance of a named stock scenario."""
    try:
        factory = SCENARIOS[name]
    except KeyError:
        raise UnknownScenario(name) from None
    return factory()


__all__ = [
    "GOAL_REACHED",
    "LATCHED_FAILURE",
    "TIMEOUT",
    "Interference",
    "Outcome",
    "RunResult",
    "Scenario",
    "SCENARIOS",
    "UndeclaredVariable",
    "UnknownMutation",
    "UnknownScenario",
    "World",
    "build_scenario",
    "coffee",
    "forager",
    "run",
]
