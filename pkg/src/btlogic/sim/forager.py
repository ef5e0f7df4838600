"""Day/night forager: hunt or gather while the light lasts, sleep at home.

Prey and food come and go on fixed schedules, so the run is an endless
deterministic rhythm rather than a goal chase: by day the forager leaves
home and hunts if there is prey, gathers if there is food, and roams
(running) otherwise; by night it heads home and sleeps.
"""

from __future__ import annotations

from ..dsl import Expr, parse
from ..engine import Task
from ..status import RUNNING
from .runner import Scenario
from .world import World

DAY_TICKS = 4  # half a day/night cycle

EXPR = "is_day && exit_home && (hunt || gather || roam) || enter_home && sleep"

INITIAL = {
    "isDay": True,
    "indoors": True,
    "preyPresent": False,
    "foodPresent": False,
}


def _passive(world: World) -> None:
    tick = world.tick_count
    world["isDay"] = (tick // DAY_TICKS) % 2 == 0
    world["preyPresent"] = tick % 3 == 1
    world["foodPresent"] = tick % 2 == 0


def root() -> tuple[Expr, dict]:
    """Day/night behavior with its task and variable bindings.

    The day branch cannot fail (roam keeps it running at worst), so the
    fallback to the night branch triggers only when is_day is false.
    """
    return parse(EXPR), _bindings()


def _bindings() -> dict:
    def exit_home(w):
        w["indoors"] = False
        return True

    def enter_home(w):
        w["indoors"] = True
        return True

    def hunt(w):
        return w["preyPresent"]

    def gather(w):
        return w["foodPresent"]

    def roam(w):
        return RUNNING

    def sleep(w):
        return RUNNING

    fns = [exit_home, enter_home, hunt, gather, roam, sleep]
    bindings: dict = {fn.__name__: Task(fn.__name__, fn) for fn in fns}
    bindings["is_day"] = lambda w: w["isDay"]
    return bindings


def scenario() -> Scenario:
    expr, bindings = root()
    return Scenario(
        name="forager",
        world=World(INITIAL),
        root=expr,
        bindings=bindings,
        goal=lambda w: False,  # open-ended behavior; runs end by timeout
        passive=_passive,
        mutations={},
    )
