"""Activation models and their line-oriented text format.

An activation model fixes finite universes of values, actions, and world
states, records the states in which each action is executable, and
tabulates how executing an action in a state moves each value's state:
up, down, or not at all. Values missing from a cell are implicitly
unchanged, so cells only ever store the values an execution actually
touches.

Documents may carry an activation model, a directly declared set of
inherent-conflict pairs (a conflict base), or both; named value sets ride
along for set-level queries. ``parse_document`` and ``serialize_document``
implement the text format; serialization is canonical, so parsing its
output reproduces the document exactly.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from pathlib import Path
from enum import Enum

from .errors import (
    NotExecutableError,
    ParseError,
    UnknownIdError,
    ValidationError,
)

_TOKEN_RE = re.compile(r"[A-Za-z0-9_]+\Z")
_EFFECT_TOKEN_RE = re.compile(r"([A-Za-z0-9_]+)([+\-~])\Z")


class Effect(Enum):
    """Direction in which one execution pushes a value's state."""

    UP = "+"
    DOWN = "-"
    UNCHANGED = "~"

    def opposite(self) -> "Effect":
        """Mirror the direction; the neutral effect is its own opposite."""
        if self is Effect.UP:
            return Effect.DOWN
        if self is Effect.DOWN:
            return Effect.UP
        return Effect.UNCHANGED


def _check_token(name: str, kind: str) -> None:
    if not isinstance(name, str) or not _TOKEN_RE.match(name):
        raise ValidationError(
            f"invalid {kind} name {name!r}: expected letters, digits, or '_'"
        )


def _check_universe(names: Iterable[str], kind: str) -> None:
    seen = set()
    for name in names:
        _check_token(name, kind)
        if name in seen:
            raise ValidationError(f"duplicate {kind} name {name!r}")
        seen.add(name)


@dataclass(frozen=True)
class ActivationModel:
    """Finite effect table over declared values, actions, and states.

    ``executable`` maps each action to the states where it may run; actions
    missing from the mapping (or the whole mapping, when ``None``) default
    to every declared state. ``effects`` is keyed by ``(state, action)``
    and may omit executable cells (treated as all-unchanged) and unchanged
    entries inside a cell. Construction normalizes both mappings so equal
    models compare equal, and validates every cross-reference.

    Instances are frozen; treat the contained mappings as read-only.
    """

    values: tuple[str, ...] = ()
    actions: tuple[str, ...] = ()
    states: tuple[str, ...] = ()
    executable: Mapping[str, frozenset[str]] | None = None
    effects: Mapping[tuple[str, str], Mapping[str, Effect]] | None = None

    def __post_init__(self):
        values = tuple(self.values)
        actions = tuple(self.actions)
        states = tuple(self.states)
        _check_universe(values, "value")
        _check_universe(actions, "action")
        _check_universe(states, "state")
        value_set = frozenset(values)
        action_set = frozenset(actions)
        state_set = frozenset(states)

        declared_exec = dict(self.executable or {})
        for action in declared_exec:
            if action not in action_set:
                raise ValidationError(f"exec entry for unknown action {action!r}")
        executable: dict[str, frozenset[str]] = {}
        for action in actions:
            if action in declared_exec:
                where = frozenset(declared_exec[action])
                unknown = where - state_set
                if unknown:
                    raise ValidationError(
                        f"exec entry for {action!r} references unknown states: "
                        + ", ".join(sorted(unknown))
                    )
                executable[action] = where
            else:
                executable[action] = state_set

        cells: dict[tuple[str, str], dict[str, Effect]] = {}
        for action in actions:
            for state in states:
                if state in executable[action]:
                    cells[(state, action)] = {}
        for key, cell in (self.effects or {}).items():
            try:
                state, action = key
            except (TypeError, ValueError):
                raise ValidationError(f"effect cell key {key!r} is not a (state, action) pair")
            if (state, action) not in cells:
                if action not in action_set:
                    raise ValidationError(f"effect cell references unknown action {action!r}")
                if state not in state_set:
                    raise ValidationError(f"effect cell references unknown state {state!r}")
                raise ValidationError(
                    f"effect declared for ({state}, {action}) "
                    f"but {action!r} is not executable in {state!r}"
                )
            normalized = {}
            for value, effect in cell.items():
                if value not in value_set:
                    raise ValidationError(
                        f"effect cell ({state}, {action}) references unknown value {value!r}"
                    )
                if not isinstance(effect, Effect):
                    raise ValidationError(
                        f"effect cell ({state}, {action}) holds non-effect {effect!r}"
                    )
                if effect is not Effect.UNCHANGED:
                    normalized[value] = effect
            cells[(state, action)] = normalized

        object.__setattr__(self, "values", values)
        object.__setattr__(self, "actions", actions)
        object.__setattr__(self, "states", states)
        object.__setattr__(self, "executable", executable)
        object.__setattr__(self, "effects", cells)
        object.__setattr__(self, "_value_set", value_set)
        object.__setattr__(self, "_action_set", action_set)
        object.__setattr__(self, "_state_set", state_set)


def cell_effects(
    model: ActivationModel, state: str, action: str
) -> Mapping[str, Effect]:
    """Return one executable cell's non-neutral entries; read-only."""
    if action not in model._action_set:
        raise UnknownIdError(f"unknown action {action!r}")
    if state not in model._state_set:
        raise UnknownIdError(f"unknown state {state!r}")
    if state not in model.executable[action]:
        raise NotExecutableError(state, action)
    return model.effects[(state, action)]


def effect_of(model: ActivationModel, state: str, action: str, value: str) -> Effect:
    """Look up how executing ``action`` in ``state`` moves ``value``.

    Values the cell does not mention are unchanged. Raises
    ``UnknownIdError`` for undeclared identifiers and
    ``NotExecutableError`` when the action cannot run in the state.
    """
    if value not in model._value_set:
        raise UnknownIdError(f"unknown value {value!r}")
    return cell_effects(model, state, action).get(value, Effect.UNCHANGED)


@dataclass(frozen=True)
class ValueSet:
    """A named collection of values for set-level queries."""

    name: str
    members: frozenset[str] = frozenset()

    def __post_init__(self):
        _check_token(self.name, "set")
        members = frozenset(self.members)
        for member in members:
            _check_token(member, "value")
        object.__setattr__(self, "members", members)


@dataclass(frozen=True)
class ConflictBase:
    """Inherent-conflict pairing over a value universe.

    ``pairs`` holds unordered, mutually disjoint two-value pairs; every
    value participates in at most one pair, and each paired value's unique
    partner is recoverable through :meth:`partner`. Pairs are stored
    canonically (members in universe declaration order, pairs sorted the
    same way), so equal bases compare equal regardless of input order.
    """

    universe: tuple[str, ...] = ()
    pairs: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        universe = tuple(self.universe)
        _check_universe(universe, "value")
        index = {value: i for i, value in enumerate(universe)}
        partner: dict[str, str] = {}
        canonical: list[tuple[str, str]] = []
        for raw in self.pairs:
            members = tuple(raw)
            if len(members) != 2:
                raise ValidationError(f"pair {raw!r} must name exactly two values")
            first, second = members
            if first == second:
                raise ValidationError(f"pair may not relate {first!r} to itself")
            for member in members:
                if member not in index:
                    raise ValidationError(f"pair references unknown value {member!r}")
                if member in partner:
                    raise ValidationError(
                        f"value {member!r} appears in more than one declared pair"
                    )
            partner[first] = second
            partner[second] = first
            if index[second] < index[first]:
                first, second = second, first
            canonical.append((first, second))
        canonical.sort(key=lambda pair: (index[pair[0]], index[pair[1]]))
        object.__setattr__(self, "universe", universe)
        object.__setattr__(self, "pairs", tuple(canonical))
        object.__setattr__(self, "_partner", partner)
        object.__setattr__(self, "_universe_set", frozenset(universe))

    @property
    def vperp(self) -> frozenset[str]:
        """All values that participate in some inherent-conflict pair."""
        return frozenset(self._partner)

    def partner(self, value: str) -> str | None:
        """The unique value paired with ``value``, or ``None`` if unpaired."""
        if value not in self._universe_set:
            raise UnknownIdError(f"unknown value {value!r}")
        return self._partner.get(value)


@dataclass(frozen=True)
class ModelDocument:
    """One parsed document: activation model, declared pairs, named sets.

    At least one of ``model`` and ``base`` must be present. When both are,
    the declared pairs must coincide with the pairs derived from the
    effect table, and the universes must match.
    """

    model: ActivationModel | None = None
    base: ConflictBase | None = None
    sets: Mapping[str, ValueSet] = field(default_factory=dict)

    def __post_init__(self):
        if self.model is None and self.base is None:
            raise ValidationError(
                "document declares neither an activation model nor conflict pairs"
            )
        sets = dict(self.sets)
        for name, value_set in sets.items():
            if not isinstance(value_set, ValueSet) or value_set.name != name:
                raise ValidationError(f"set entry {name!r} does not match its key")
        object.__setattr__(self, "sets", sets)
        universe = frozenset(self.universe)
        for value_set in sets.values():
            missing = value_set.members - universe
            if missing:
                raise ValidationError(
                    f"set {value_set.name!r} references unknown values: "
                    + ", ".join(sorted(missing))
                )
        if self.model is not None and self.base is not None:
            if self.base.universe != self.model.values:
                raise ValidationError(
                    "declared pair universe must match the model's value universe"
                )
            from .analysis import derive_conflict_base
            from .errors import Condition3Error

            try:
                derived = derive_conflict_base(self.model)
            except Condition3Error as exc:
                raise ValidationError(
                    f"declared pairs cannot match the effect table: {exc}"
                ) from exc
            if derived.pairs != self.base.pairs:
                raise ValidationError(
                    "declared pairs do not match the pairs derived from the effect table"
                )

    @property
    def universe(self) -> tuple[str, ...]:
        """The declared value universe, wherever the document keeps it."""
        if self.model is not None:
            return self.model.values
        return self.base.universe

    def conflict_base(self) -> ConflictBase:
        """The declared conflict base, or the one derived from the model."""
        if self.base is not None:
            return self.base
        from .analysis import derive_conflict_base

        return derive_conflict_base(self.model)


def _split_list(text: str) -> list[str]:
    return [token for token in re.split(r"[,\s]+", text.strip()) if token]


def parse_document(text: str) -> ModelDocument:
    """Parse document text into a validated :class:`ModelDocument`.

    The format is line oriented; ``#`` starts a comment and blank lines are
    skipped. Recognized directives::

        values: a b c d
        actions: a1 a2
        states: s1 s2
        exec: a1 = s1, s2
        effect: s1, a1 = a+ b- c~
        pair: a ~ abar
        set: V = a, b, c

    ``values:`` is mandatory. ``actions:`` and ``states:`` appear together
    and switch the document into activation-model mode; without them the
    document declares a conflict base directly. An omitted ``exec:`` line
    makes the action executable in every state, an omitted cell leaves all
    values unchanged, and a ``~`` suffix marks an explicitly unchanged
    value. Syntax problems raise ``ParseError`` with the offending line
    number; semantic problems raise ``ValidationError``.
    """
    values: list[str] | None = None
    actions: list[str] | None = None
    states: list[str] | None = None
    exec_lines: dict[str, list[str]] = {}
    effect_cells: dict[tuple[str, str], dict[str, Effect]] = {}
    pairs: list[tuple[str, str]] = []
    set_lines: dict[str, list[str]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" not in line:
            raise ParseError(lineno, "expected '<directive>: ...'")
        key, rest = line.split(":", 1)
        key = key.strip()
        rest = rest.strip()

        if key in ("values", "actions", "states"):
            current = {"values": values, "actions": actions, "states": states}[key]
            if current is not None:
                raise ParseError(lineno, f"duplicate '{key}:' line")
            tokens = _split_list(rest)
            if key == "values":
                values = tokens
            elif key == "actions":
                actions = tokens
            else:
                states = tokens
        elif key == "exec":
            if "=" not in rest:
                raise ParseError(lineno, "expected 'exec: <action> = <states>'")
            left, right = rest.split("=", 1)
            left_tokens = _split_list(left)
            if len(left_tokens) != 1:
                raise ParseError(lineno, "expected a single action before '='")
            action = left_tokens[0]
            if action in exec_lines:
                raise ValidationError(f"line {lineno}: duplicate exec line for {action!r}")
            exec_lines[action] = _split_list(right)
        elif key == "effect":
            if "=" not in rest:
                raise ParseError(lineno, "expected 'effect: <state>, <action> = <effects>'")
            left, right = rest.split("=", 1)
            left_tokens = _split_list(left)
            if len(left_tokens) != 2:
                raise ParseError(lineno, "expected '<state>, <action>' before '='")
            state, action = left_tokens
            if (state, action) in effect_cells:
                raise ValidationError(
                    f"line {lineno}: duplicate effect cell ({state}, {action})"
                )
            cell: dict[str, Effect] = {}
            for token in _split_list(right):
                match = _EFFECT_TOKEN_RE.match(token)
                if not match:
                    raise ParseError(
                        lineno, f"bad effect token {token!r}: expected '<value>+', '<value>-', or '<value>~'"
                    )
                value, suffix = match.groups()
                if value in cell:
                    raise ValidationError(
                        f"line {lineno}: value {value!r} appears twice in cell ({state}, {action})"
                    )
                cell[value] = Effect(suffix)
            effect_cells[(state, action)] = cell
        elif key == "pair":
            sides = rest.split("~")
            if len(sides) != 2:
                raise ParseError(lineno, "expected 'pair: <value> ~ <value>'")
            left_tokens = _split_list(sides[0])
            right_tokens = _split_list(sides[1])
            if len(left_tokens) != 1 or len(right_tokens) != 1:
                raise ParseError(lineno, "expected one value on each side of '~'")
            pairs.append((left_tokens[0], right_tokens[0]))
        elif key == "set":
            if "=" not in rest:
                raise ParseError(lineno, "expected 'set: <name> = <values>'")
            left, right = rest.split("=", 1)
            left_tokens = _split_list(left)
            if len(left_tokens) != 1:
                raise ParseError(lineno, "expected a single set name before '='")
            name = left_tokens[0]
            if name in set_lines:
                raise ValidationError(f"line {lineno}: duplicate set {name!r}")
            set_lines[name] = _split_list(right)
        else:
            raise ParseError(lineno, f"unknown directive {key!r}")

    if values is None:
        raise ValidationError("document is missing a 'values:' line")
    if (actions is None) != (states is None):
        raise ValidationError("'actions:' and 'states:' must be declared together")
    model_mode = actions is not None
    if not model_mode and (exec_lines or effect_cells):
        raise ValidationError(
            "exec/effect lines require 'actions:' and 'states:' sections"
        )

    if model_mode:
        model = ActivationModel(
            values=tuple(values),
            actions=tuple(actions),
            states=tuple(states),
            executable={a: frozenset(sts) for a, sts in exec_lines.items()},
            effects=effect_cells,
        )
        base = ConflictBase(tuple(values), tuple(pairs)) if pairs else None
    else:
        model = None
        base = ConflictBase(tuple(values), tuple(pairs))

    sets = {
        name: ValueSet(name, frozenset(members)) for name, members in set_lines.items()
    }
    return ModelDocument(model=model, base=base, sets=sets)


def load_document(path: str | Path) -> ModelDocument:
    """Read and parse a document file."""
    return parse_document(Path(path).read_text(encoding="utf-8"))


def _line(prefix: str, rest: str) -> str:
    return f"{prefix} {rest}" if rest else prefix


def serialize_document(doc: ModelDocument) -> str:
    """Render a document in canonical form.

    Sections appear in a fixed order, identifiers follow declaration
    order, unchanged effects are omitted, ``exec:`` lines appear only when
    an action is not executable everywhere, and every executable cell gets
    an ``effect:`` line even when empty. Parsing the output reproduces the
    document, and serializing again yields identical bytes.
    """
    lines: list[str] = []
    if doc.model is not None:
        model = doc.model
        lines.append(_line("values:", " ".join(model.values)))
        lines.append(_line("actions:", " ".join(model.actions)))
        lines.append(_line("states:", " ".join(model.states)))
        everywhere = frozenset(model.states)
        for action in model.actions:
            if model.executable[action] != everywhere:
                where = [s for s in model.states if s in model.executable[action]]
                lines.append(_line(f"exec: {action} =", ", ".join(where)))
        for action in model.actions:
            for state in model.states:
                if state in model.executable[action]:
                    cell = model.effects[(state, action)]
                    tokens = [f"{v}{cell[v].value}" for v in model.values if v in cell]
                    lines.append(_line(f"effect: {state}, {action} =", " ".join(tokens)))
    else:
        lines.append(_line("values:", " ".join(doc.base.universe)))
    if doc.base is not None:
        for first, second in doc.base.pairs:
            lines.append(f"pair: {first} ~ {second}")
    universe_index = {value: i for i, value in enumerate(doc.universe)}
    for name in sorted(doc.sets):
        members = sorted(doc.sets[name].members, key=universe_index.__getitem__)
        lines.append(_line(f"set: {name} =", ", ".join(members)))
    return "\n".join(lines) + "\n"
