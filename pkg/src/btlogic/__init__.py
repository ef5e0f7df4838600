"""Behavior trees as three-valued status expressions.

The status algebra lives in :mod:`btlogic.status`; parsing and
evaluation of the textual expression form in :mod:`btlogic.dsl`; leaf
tasks and latched composites in :mod:`btlogic.engine`; deterministic
scenario simulation in :mod:`btlogic.sim`.
"""

from . import sim
from .dsl import (
    Binary,
    BinaryOp,
    Expr,
    Ident,
    Literal,
    SourceError,
    Unary,
    UnaryOp,
    evaluate,
    parse,
    pretty_print,
    tokenize,
)
from .engine import (
    SELECTOR,
    SEQUENCE,
    StatefulNode,
    Task,
    reference_selector,
    reference_sequence,
    tick_stateless,
)
from .status import (
    COMPLETE,
    F,
    FAILING,
    RUNNING,
    Status,
    T,
    U,
    Deferred,
    apply_unary,
    as_status,
    condone,
    conj,
    demote,
    disj,
    disregard,
    from_bool,
    lenient,
    negate,
    parse_status,
    promote,
    strict,
)
from .trace import TraceEvent, Tracer, render_jsonl, render_text

__version__ = "0.1.0"
