"""Flat per-tick record of which nodes ran and what they returned."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .status import Status


@dataclass(frozen=True)
class TraceEvent:
    tick: int
    node: str
    status: Status

    def to_text(self) -> str:
        return f"{self.tick}\t{self.node}\t{self.status.letter}"

    def to_json(self) -> str:
        return json.dumps(
            {"tick": self.tick, "node": self.node, "status": self.status.letter}
        )


class Tracer:
    """Collects events in evaluation order; the driver advances ``tick``."""

    def __init__(self, tick: int = 0):
        self.tick = tick
        self.events: list[TraceEvent] = []

    def emit(self, node: str, status: Status) -> None:
        self.events.append(TraceEvent(self.tick, node, status))


def render_text(events: Iterable[TraceEvent]) -> str:
    return "".join(e.to_text() + "\n" for e in events)


def render_jsonl(events: Iterable[TraceEvent]) -> str:
    return "".join(e.to_json() + "\n" for e in events)
