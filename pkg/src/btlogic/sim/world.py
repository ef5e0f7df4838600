"""Named-variable world store with declared-only access."""

from __future__ import annotations

from dataclasses import dataclass


class UndeclaredVariable(KeyError):
    def __init__(self, name: str):
        super().__init__(name)
        self.name = name

    def __str__(self) -> str:
        return f"undeclared world variable: {self.name!r}"


def _render(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


class World:
    """Flat store of booleans, bounded integers, and enumerated labels.

    Every variable exists from construction; reading or writing an
    undeclared name raises. Transitions are whatever the scenario's
    passive dynamics and task actions do to it, so identical inputs
    replay identically.
    """

    def __init__(self, variables: dict):
        self._vars = dict(variables)
        self.tick_count = 0

    def __getitem__(self, name: str):
        try:
            return self._vars[name]
        except KeyError:
            raise UndeclaredVariable(name) from None

    def __setitem__(self, name: str, value) -> None:
        if name not in self._vars:
            raise UndeclaredVariable(name)
        self._vars[name] = value

    def __contains__(self, name: str) -> bool:
        return name in self._vars

    def names(self) -> list[str]:
        return sorted(self._vars)

    def as_dict(self) -> dict:
        return dict(self._vars)

    def snapshot(self) -> str:
        """Sorted name=value lines; the golden-test text form."""
        return "\n".join(f"{n}={_render(self._vars[n])}" for n in sorted(self._vars))

    def copy(self) -> "World":
        clone = World(self._vars)
        clone.tick_count = self.tick_count
        return clone

    def __repr__(self) -> str:
        return f"World(tick={self.tick_count}, {self._vars!r})"


@dataclass(frozen=True)
class Interference:
    """A named world edit applied once, after passive dynamics, before the tree."""

    at_tick: int
    mutation: str
