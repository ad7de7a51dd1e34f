"""Reasoning about conforming and conflicting values under action effects.

The library models how executing actions in particular world states moves
named values up or down. On top of that table it classifies value pairs
per execution cell and across whole models, validates well-formedness,
derives the inherent-conflict pairing, answers set-level consistency and
conflict queries, and simulates value-state trajectories. A line-oriented
text format and a CLI expose the same operations on files.
"""

from .analysis import (
    InherentRelation,
    NormalizeResult,
    PairRelation,
    ValidationReport,
    classify_pair,
    derive_conflict_base,
    inherent_relation,
    normalize,
    validate,
)
from .dynamics import ValueStateVector, apply_action, initial_vector, run_trace
from .errors import (
    Condition3Error,
    DomainMismatchError,
    MergeConflictError,
    NotExecutableError,
    ParseError,
    ReflexivePairError,
    TraceStepError,
    UnknownIdError,
    ValidationError,
    ValueModelError,
)
from .model import (
    ActivationModel,
    ConflictBase,
    Effect,
    ModelDocument,
    ValueSet,
    cell_effects,
    effect_of,
    load_document,
    parse_document,
    serialize_document,
)
from .sets import ConflictVerdict, ConsistencyVerdict, is_consistent, sets_conflicting

__version__ = "0.1.0"

__all__ = [
    "ActivationModel",
    "Condition3Error",
    "ConflictBase",
    "ConflictVerdict",
    "ConsistencyVerdict",
    "DomainMismatchError",
    "Effect",
    "InherentRelation",
    "MergeConflictError",
    "ModelDocument",
    "NormalizeResult",
    "NotExecutableError",
    "PairRelation",
    "ParseError",
    "ReflexivePairError",
    "TraceStepError",
    "UnknownIdError",
    "ValidationError",
    "ValidationReport",
    "ValueModelError",
    "ValueSet",
    "ValueStateVector",
    "apply_action",
    "cell_effects",
    "classify_pair",
    "derive_conflict_base",
    "effect_of",
    "inherent_relation",
    "initial_vector",
    "is_consistent",
    "load_document",
    "normalize",
    "parse_document",
    "run_trace",
    "serialize_document",
    "sets_conflicting",
    "validate",
]
