"""Value-state vectors and their evolution under action execution.

A vector assigns an integer state to every value in the model. Applying
an action moves each value by one unit in the direction its effect cell
prescribes; untouched values keep their exact state. Magnitudes carry no
meaning beyond direction, and states may go negative.
"""

from __future__ import annotations

from collections.abc import Sequence

from .errors import DomainMismatchError, TraceStepError, ValueModelError
from .model import ActivationModel, Effect, cell_effects

ValueStateVector = dict[str, int]


def initial_vector(model: ActivationModel, fill: int = 0) -> ValueStateVector:
    """A vector assigning ``fill`` to every value of the model."""
    return {value: fill for value in model.values}


def _check_domain(model: ActivationModel, vector: ValueStateVector) -> None:
    if set(vector) != set(model.values):
        raise DomainMismatchError(
            "vector domain does not match the model's value universe"
        )


def apply_action(
    model: ActivationModel, vector: ValueStateVector, state: str, action: str
) -> ValueStateVector:
    """Return a new vector after executing ``action`` in ``state``.

    The input vector is never modified.
    """
    cell = cell_effects(model, state, action)
    _check_domain(model, vector)
    result = dict(vector)
    for value, effect in cell.items():
        result[value] += 1 if effect is Effect.UP else -1
    return result


def run_trace(
    model: ActivationModel,
    initial: ValueStateVector,
    steps: Sequence[tuple[str, str]],
) -> list[ValueStateVector]:
    """Fold ``apply_action`` over ``steps``, keeping every intermediate vector.

    The result starts with a copy of ``initial`` and has one more entry
    than ``steps``. A failing step raises ``TraceStepError`` carrying its
    position in the sequence.
    """
    _check_domain(model, initial)
    trace = [dict(initial)]
    for index, (state, action) in enumerate(steps):
        try:
            trace.append(apply_action(model, trace[-1], state, action))
        except ValueModelError as exc:
            raise TraceStepError(index, str(exc)) from exc
    return trace
