"""Pairwise and whole-model classification of value relations.

Two values conflict in an execution cell when it moves their states in
opposite directions, and conform when it moves them the same way. A pair
whose relation is fixed across every executable cell is inherently
conflicting (or conforming); those relations no longer depend on any
particular action. This module classifies single cells and whole models,
checks the three well-formedness conditions, derives the conflict base,
and collapses values that are effect-identical everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import (
    Condition3Error,
    MergeConflictError,
    ReflexivePairError,
    UnknownIdError,
)
from .model import ActivationModel, ConflictBase, Effect, effect_of


class PairRelation(Enum):
    """How one execution cell relates two values."""

    CONFORMING = "Conforming"
    CONFLICTING = "Conflicting"
    BOTH_INDIFFERENT = "BothIndifferent"
    MIXED = "Mixed"


class InherentRelation(Enum):
    """Relation of two values quantified over every executable cell."""

    INHERENTLY_CONFLICTING = "InherentlyConflicting"
    INHERENTLY_CONFORMING = "InherentlyConforming"
    NEITHER = "Neither"


def classify_pair(
    model: ActivationModel, state: str, action: str, first: str, second: str
) -> PairRelation:
    """Classify a distinct value pair for one executable cell.

    Conflicting when the effects are active and opposite, conforming when
    active and equal, both-indifferent when neither value moves, and mixed
    when exactly one does. Symmetric in the two values.
    """
    if first == second:
        raise ReflexivePairError(f"cannot classify value {first!r} against itself")
    one = effect_of(model, state, action, first)
    two = effect_of(model, state, action, second)
    if one is Effect.UNCHANGED and two is Effect.UNCHANGED:
        return PairRelation.BOTH_INDIFFERENT
    if one is Effect.UNCHANGED or two is Effect.UNCHANGED:
        return PairRelation.MIXED
    return PairRelation.CONFORMING if one is two else PairRelation.CONFLICTING


def inherent_relation(
    model: ActivationModel, first: str, second: str
) -> InherentRelation:
    """Classify a value pair across every executable cell of the model.

    Inherently conforming when every cell is conforming or jointly
    indifferent, inherently conflicting when every cell is conflicting or
    jointly indifferent, otherwise neither. A pair that is jointly
    indifferent everywhere satisfies both readings; it is reported as
    inherently conforming, the direction under which the pair behaves as
    a single value.
    """
    if first == second:
        raise ReflexivePairError(f"cannot relate value {first!r} to itself")
    for value in (first, second):
        if value not in model._value_set:
            raise UnknownIdError(f"unknown value {value!r}")
    conforming = True
    conflicting = True
    for state, action in model.effects:
        relation = classify_pair(model, state, action, first, second)
        if relation not in (PairRelation.CONFORMING, PairRelation.BOTH_INDIFFERENT):
            conforming = False
        if relation not in (PairRelation.CONFLICTING, PairRelation.BOTH_INDIFFERENT):
            conflicting = False
        if not conforming and not conflicting:
            return InherentRelation.NEITHER
    if conforming:
        return InherentRelation.INHERENTLY_CONFORMING
    if conflicting:
        return InherentRelation.INHERENTLY_CONFLICTING
    return InherentRelation.NEITHER


@dataclass(frozen=True)
class ValidationReport:
    """Violations of the three well-formedness conditions.

    Condition 1: every value must be moved by at least one executable
    cell. Condition 2: no two distinct values may be inherently
    conforming. Condition 3: no value may have more than one
    inherent-conflict partner. All entries follow declaration order.
    """

    condition1_violations: tuple[str, ...] = ()
    condition2_violations: tuple[tuple[str, str], ...] = ()
    condition3_violations: tuple[tuple[str, tuple[str, ...]], ...] = ()

    @property
    def ok(self) -> bool:
        return not (
            self.condition1_violations
            or self.condition2_violations
            or self.condition3_violations
        )


def validate(model: ActivationModel) -> ValidationReport:
    """Check the model against all three conditions; violations are data."""
    touched: set[str] = set()
    for cell in model.effects.values():
        touched.update(cell)
    condition1 = tuple(v for v in model.values if v not in touched)

    conforming: list[tuple[str, str]] = []
    partners: dict[str, list[str]] = {v: [] for v in model.values}
    for i, first in enumerate(model.values):
        for second in model.values[i + 1 :]:
            relation = inherent_relation(model, first, second)
            if relation is InherentRelation.INHERENTLY_CONFORMING:
                conforming.append((first, second))
            elif relation is InherentRelation.INHERENTLY_CONFLICTING:
                partners[first].append(second)
                partners[second].append(first)
    condition3 = tuple(
        (value, tuple(partners[value]))
        for value in model.values
        if len(partners[value]) >= 2
    )
    return ValidationReport(condition1, tuple(conforming), condition3)


def derive_conflict_base(model: ActivationModel) -> ConflictBase:
    """Collect every inherently conflicting pair into a conflict base.

    Raises ``Condition3Error`` when some value has two partners, since the
    base's pairs must be disjoint.
    """
    partners: dict[str, list[str]] = {v: [] for v in model.values}
    pairs: list[tuple[str, str]] = []
    for i, first in enumerate(model.values):
        for second in model.values[i + 1 :]:
            if (
                inherent_relation(model, first, second)
                is InherentRelation.INHERENTLY_CONFLICTING
            ):
                pairs.append((first, second))
                partners[first].append(second)
                partners[second].append(first)
    for value in model.values:
        if len(partners[value]) >= 2:
            raise Condition3Error(value, tuple(partners[value]))
    return ConflictBase(model.values, tuple(pairs))


class NormalizeResult(NamedTuple):
    model: ActivationModel
    merge_map: dict[str, str]


def normalize(model: ActivationModel) -> NormalizeResult:
    """Collapse inherently conforming values into one representative each.

    Values are partitioned by the reflexive-transitive closure of the
    inherently-conforming relation; each class keeps its lexicographically
    smallest member and the effect cells are rewritten accordingly. The
    returned merge map sends every original value to its representative.
    The result satisfies Conditions 2 and 3 and is a fixed point of
    ``normalize``.
    """
    parent = {value: value for value in model.values}

    def find(value: str) -> str:
        root = value
        while parent[root] != root:
            root = parent[root]
        while parent[value] != root:
            parent[value], value = root, parent[value]
        return root

    for i, first in enumerate(model.values):
        for second in model.values[i + 1 :]:
            if (
                inherent_relation(model, first, second)
                is InherentRelation.INHERENTLY_CONFORMING
            ):
                parent[find(first)] = find(second)

    classes: dict[str, list[str]] = {}
    for value in model.values:
        classes.setdefault(find(value), []).append(value)
    representative = {root: min(members) for root, members in classes.items()}
    merge_map = {value: representative[find(value)] for value in model.values}

    for (state, action), cell in model.effects.items():
        for value in model.values:
            kept = merge_map[value]
            if cell.get(value, Effect.UNCHANGED) is not cell.get(kept, Effect.UNCHANGED):
                raise MergeConflictError(
                    f"values {value!r} and {kept!r} were grouped together "
                    f"but disagree in cell ({state}, {action})"
                )

    new_values = tuple(v for v in model.values if merge_map[v] == v)
    new_effects = {
        key: {v: e for v, e in cell.items() if merge_map[v] == v}
        for key, cell in model.effects.items()
    }
    normalized = ActivationModel(
        values=new_values,
        actions=model.actions,
        states=model.states,
        executable=model.executable,
        effects=new_effects,
    )
    return NormalizeResult(normalized, merge_map)
