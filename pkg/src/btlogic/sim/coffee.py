"""Coffee-brewing worlds: one goal, two control styles.

The reactive variant is a fallback chain re-read from world state every
tick; it reaches a full cup from any consistent starting point and
shrugs off interference. The latched variant is a stateful sequence of
the same actions; it is simpler to follow but assumes the canonical
starting state, and interference mid-run latches it failed until reset.

Physics: a kettle with cold water heats while on, going hot after
``heat_ticks`` ticks and switching itself off; a poured pot infuses for
``infuse_ticks`` ticks before the coffee is ready; every pour takes one
tick. Pours are idempotent (pouring into a full vessel succeeds as a
no-op) so reactive re-entry never fails spuriously.
"""

from __future__ import annotations

import itertools
from typing import Callable

from ..dsl import Expr, parse
from ..engine import SEQUENCE, StatefulNode, Task
from ..status import COMPLETE, FAILING, RUNNING
from .runner import Scenario
from .world import World

HEAT_TICKS = 3
INFUSE_TICKS = 2

CANONICAL = {
    "kettleWater": "empty",  # empty | cold | hot
    "kettleOn": False,
    "kettleHeat": 0,  # heating progress, 0..heat_ticks
    "potGround": False,
    "potWater": False,
    "infuseRemaining": 0,
    "coffeeReady": False,
    "cupFull": False,
}

STATELESS_EXPR = (
    "pour_cup || wait_infused || kettle_to_pot || pour_ground || kettle_on || fill_kettle"
)


def consistent_initial_states(infuse_ticks: int = INFUSE_TICKS) -> list[dict]:
    """Every physically reachable assignment of the scenario variables.

    Excluded as contradictory: a kettle running empty, infusion without
    water and grounds in the pot, and ready coffee still infusing.
    Heating progress always starts at zero. Order is deterministic, so
    an index addresses the same state forever.
    """
    states = []
    for kettle_water, kettle_on, pot_ground, pot_water, infusing, ready, cup in (
        itertools.product(
            ("empty", "cold", "hot"),
            (False, True),
            (False, True),
            (False, True),
            range(infuse_ticks + 1),
            (False, True),
            (False, True),
        )
    ):
        if kettle_on and kettle_water == "empty":
            continue
        if infusing > 0 and not (pot_water and pot_ground):
            continue
        if ready and infusing > 0:
            continue
        states.append(
            {
                "kettleWater": kettle_water,
                "kettleOn": kettle_on,
                "kettleHeat": 0,
                "potGround": pot_ground,
                "potWater": pot_water,
                "infuseRemaining": infusing,
                "coffeeReady": ready,
                "cupFull": cup,
            }
        )
    return states


def world_init(profile="canonical", infuse_ticks: int = INFUSE_TICKS) -> World:
    """Build a starting world: the all-empty canonical one, or state #n."""
    if profile == "canonical":
        return World(CANONICAL)
    states = consistent_initial_states(infuse_ticks)
    if not 0 <= profile < len(states):
        raise IndexError(f"initial-state index {profile} out of range 0..{len(states) - 1}")
    return World(states[profile])


def _passive(world: World, heat_ticks: int) -> None:
    if world["kettleOn"]:
        if world["kettleWater"] == "cold":
            world["kettleHeat"] += 1
            if world["kettleHeat"] >= heat_ticks:
                world["kettleWater"] = "hot"
                world["kettleHeat"] = 0
                world["kettleOn"] = False  # switches itself off when hot
        else:
            world["kettleOn"] = False  # boil-dry cutoff / already hot
    if world["infuseRemaining"] > 0:
        world["infuseRemaining"] -= 1
        if world["infuseRemaining"] == 0:
            world["coffeeReady"] = True


def _start_infusion(world: World, infuse_ticks: int) -> None:
    world["infuseRemaining"] = infuse_ticks
    world["coffeeReady"] = False


def _pour_kettle_into_pot(world: World, infuse_ticks: int) -> None:
    world["kettleWater"] = "empty"
    world["potWater"] = True
    if world["potGround"]:
        _start_infusion(world, infuse_ticks)


def _pour_cup(world: World) -> bool:
    if not world["coffeeReady"]:
        return False
    world["cupFull"] = True
    world["coffeeReady"] = False
    world["potWater"] = False
    world["potGround"] = False
    return True


def _empty_kettle(world: World) -> None:
    # Someone walked off with the water; a kettle without water cannot stay on.
    world["kettleWater"] = "empty"
    world["kettleHeat"] = 0
    world["kettleOn"] = False


def _mutations() -> dict[str, Callable[[World], None]]:
    return {"empty-kettle": _empty_kettle}


def stateless_root(infuse_ticks: int = INFUSE_TICKS) -> tuple[Expr, dict]:
    """Fallback chain over six guarded one-tick actions.

    Each task completes when its action applies this tick, reports
    running while a wait is in progress, and fails when its guard does
    not hold, handing control to the next step.
    """

    def pour_cup(w):
        return _pour_cup(w)

    def wait_infused(w):
        # Running holds the tree while brewing; failing lets later steps run.
        return RUNNING if w["infuseRemaining"] > 0 else FAILING

    def kettle_to_pot(w):
        if w["kettleOn"] or w["kettleWater"] != "hot":
            return False
        _pour_kettle_into_pot(w, infuse_ticks)
        return True

    def pour_ground(w):
        if w["potGround"]:
            return False
        w["potGround"] = True
        if w["potWater"]:
            _start_infusion(w, infuse_ticks)
        return True

    def kettle_on(w):
        if w["kettleWater"] != "cold":
            return False
        w["kettleOn"] = True
        return True

    def fill_kettle(w):
        if w["kettleWater"] != "empty":
            return False
        w["kettleWater"] = "cold"
        return True

    fns = [pour_cup, wait_infused, kettle_to_pot, pour_ground, kettle_on, fill_kettle]
    bindings = {fn.__name__: Task(fn.__name__, fn) for fn in fns}
    return parse(STATELESS_EXPR), bindings


def stateful_root(infuse_ticks: int = INFUSE_TICKS) -> StatefulNode:
    """Seven steps run start to finish, one child per tick, then latch."""

    def pour_water(w):
        if w["kettleWater"] == "empty":
            w["kettleWater"] = "cold"
        return True  # pouring into a full kettle is a no-op that succeeds

    def turn_on(w):
        if w["kettleWater"] == "empty":
            return False
        w["kettleOn"] = True
        return True

    def pour_grounds(w):
        if not w["potGround"]:
            w["potGround"] = True
            if w["potWater"]:
                _start_infusion(w, infuse_ticks)
        return True

    def wait_kettle_off(w):
        return RUNNING if w["kettleOn"] else COMPLETE

    def pour_hot_water(w):
        if w["kettleWater"] != "hot":
            return False
        _pour_kettle_into_pot(w, infuse_ticks)
        return True

    def wait_infused(w):
        return RUNNING if w["infuseRemaining"] > 0 else COMPLETE

    def pour_cup(w):
        return _pour_cup(w)

    steps = [
        ("pour-water", pour_water),
        ("kettle-on", turn_on),
        ("pour-grounds", pour_grounds),
        ("wait-kettle-off", wait_kettle_off),
        ("pour-hot-water", pour_hot_water),
        ("wait-infused", wait_infused),
        ("pour-cup", pour_cup),
    ]
    children = [Task(f"root/{name}", fn) for name, fn in steps]
    return StatefulNode("root", SEQUENCE, children)


def _goal(world: World) -> bool:
    return world["cupFull"]


def stateless_scenario(
    profile="canonical",
    heat_ticks: int = HEAT_TICKS,
    infuse_ticks: int = INFUSE_TICKS,
) -> Scenario:
    expr, bindings = stateless_root(infuse_ticks)
    return Scenario(
        name="coffee-stateless",
        world=world_init(profile, infuse_ticks),
        root=expr,
        bindings=bindings,
        goal=_goal,
        passive=lambda w: _passive(w, heat_ticks),
        mutations=_mutations(),
    )


def stateful_scenario(
    profile="canonical",
    heat_ticks: int = HEAT_TICKS,
    infuse_ticks: int = INFUSE_TICKS,
) -> Scenario:
    return Scenario(
        name="coffee-stateful",
        world=world_init(profile, infuse_ticks),
        root=stateful_root(infuse_ticks),
        goal=_goal,
        passive=lambda w: _passive(w, heat_ticks),
        mutations=_mutations(),
    )
