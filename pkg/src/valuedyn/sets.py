"""Set-level consistency and conflict queries over a conflict base."""

from __future__ import annotations

from collections.abc import Iterable
from typing import NamedTuple

from .errors import UnknownIdError
from .model import ConflictBase, ValueSet


class ConsistencyVerdict(NamedTuple):
    consistent: bool
    witness: tuple[str, str] | None


class ConflictVerdict(NamedTuple):
    conflicting: bool
    witness: tuple[str, str] | None


def _members(base: ConflictBase, values: ValueSet | Iterable[str]) -> frozenset[str]:
    members = values.members if isinstance(values, ValueSet) else frozenset(values)
    unknown = members - frozenset(base.universe)
    if unknown:
        raise UnknownIdError(
            "values outside the universe: " + ", ".join(sorted(unknown))
        )
    return members


def is_consistent(
    base: ConflictBase, values: ValueSet | Iterable[str]
) -> ConsistencyVerdict:
    """A set is inconsistent iff it contains both members of some pair.

    Returns the verdict together with the lexicographically smallest
    witnessing pair, or ``None`` when the set is consistent. Values
    without an inherent-conflict partner never matter.
    """
    members = _members(base, values)
    witnesses = [
        tuple(sorted(pair))
        for pair in base.pairs
        if pair[0] in members and pair[1] in members
    ]
    if witnesses:
        return ConsistencyVerdict(False, min(witnesses))
    return ConsistencyVerdict(True, None)


def sets_conflicting(
    base: ConflictBase,
    first: ValueSet | Iterable[str],
    second: ValueSet | Iterable[str],
) -> ConflictVerdict:
    """Two sets conflict iff some pair has one member in each set.

    Symmetric; the witness is again the lexicographically smallest pair.
    """
    left = _members(base, first)
    right = _members(base, second)
    witnesses = [
        tuple(sorted(pair))
        for pair in base.pairs
        if (pair[0] in left and pair[1] in right)
        or (pair[1] in left and pair[0] in right)
    ]
    if witnesses:
        return ConflictVerdict(True, min(witnesses))
    return ConflictVerdict(False, None)
