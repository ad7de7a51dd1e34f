"""Exception types raised by the library."""

from __future__ import annotations


class ValueModelError(Exception):
    """Base class for every error raised by valuedyn."""


class ParseError(ValueModelError):
    """A document line could not be parsed."""

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class ValidationError(ValueModelError):
    """A document or model violates a structural invariant."""


class UnknownIdError(ValueModelError):
    """A query referenced a value, action, state, or set that is not declared."""


class NotExecutableError(ValueModelError):
    """A query targeted a state in which the action cannot be executed."""

    def __init__(self, state: str, action: str):
        super().__init__(f"action {action!r} is not executable in state {state!r}")
        self.state = state
        self.action = action


class ReflexivePairError(ValueModelError):
    """A pair query named the same value twice."""


class DomainMismatchError(ValueModelError):
    """A value-state vector does not cover exactly the model's value universe."""


class Condition3Error(ValueModelError):
    """A value has more than one inherent-conflict partner."""

    def __init__(self, value: str, partners: tuple[str, ...]):
        partners = tuple(partners)
        super().__init__(
            f"value {value!r} inherently conflicts with more than one value: "
            + ", ".join(partners)
        )
        self.value = value
        self.partners = partners


class MergeConflictError(ValueModelError):
    """Values grouped for merging turned out to disagree in some cell."""


class TraceStepError(ValueModelError):
    """A simulation step failed; carries the index of the offending step."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"step {index}: {reason}")
        self.index = index
        self.reason = reason
