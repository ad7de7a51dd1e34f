"""Command-line interface over model documents.

Every command is a thin adapter around the library: it parses the file
named by ``--file``, calls the corresponding function, and renders the
result. Exit codes: 0 when the query succeeds or the checked property
holds, 1 when a violation or negative verdict is found, 2 on usage,
parse, or lookup errors. Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .analysis import (
    classify_pair,
    derive_conflict_base,
    inherent_relation,
    normalize,
    validate,
)
from .dynamics import initial_vector, run_trace
from .errors import (
    Condition3Error,
    UnknownIdError,
    ValidationError,
    ValueModelError,
)
from .model import (
    ActivationModel,
    ConflictBase,
    ModelDocument,
    load_document,
    serialize_document,
)
from .sets import is_consistent, sets_conflicting


def _require_model(doc: ModelDocument) -> ActivationModel:
    if doc.model is None:
        raise ValidationError("document has no activation model")
    return doc.model


def _condition3_line(exc: Condition3Error) -> str:
    return f"condition3: {exc.value} -> {{{','.join(exc.partners)}}}"


def _cmd_validate(args) -> int:
    report = validate(_require_model(load_document(args.file)))
    for value in report.condition1_violations:
        print(f"condition1: {value}")
    for first, second in report.condition2_violations:
        print(f"condition2: {{{first},{second}}}")
    for value, partners in report.condition3_violations:
        print(f"condition3: {value} -> {{{','.join(partners)}}}")
    return 0 if report.ok else 1


def _cmd_classify(args) -> int:
    model = _require_model(load_document(args.file))
    relation = classify_pair(model, args.state, args.action, args.first, args.second)
    print(relation.value)
    return 0


def _cmd_inherent(args) -> int:
    model = _require_model(load_document(args.file))
    print(inherent_relation(model, args.first, args.second).value)
    return 0


def _cmd_partition(args) -> int:
    model = _require_model(load_document(args.file))
    try:
        base = derive_conflict_base(model)
    except Condition3Error as exc:
        print(_condition3_line(exc))
        return 1
    members = [value for value in model.values if value in base.vperp]
    print(f"Vperp: {' '.join(members)}" if members else "Vperp:")
    for first, second in base.pairs:
        print(f"pair: {first} ~ {second}")
    return 0


def _cmd_normalize(args) -> int:
    model = _require_model(load_document(args.file))
    result = normalize(model)
    text = serialize_document(ModelDocument(model=result.model))
    Path(args.out).write_text(text, encoding="utf-8")
    for value in model.values:
        kept = result.merge_map[value]
        if kept != value:
            print(f"merge: {value} -> {kept}")
    return 0


def _document_base(doc: ModelDocument) -> ConflictBase:
    if doc.base is not None:
        return doc.base
    return derive_conflict_base(_require_model(doc))


def _named_set(doc: ModelDocument, name: str):
    try:
        return doc.sets[name]
    except KeyError:
        raise UnknownIdError(f"unknown set {name!r}") from None


def _cmd_consistent(args) -> int:
    doc = load_document(args.file)
    members = _named_set(doc, args.set)
    try:
        base = _document_base(doc)
    except Condition3Error as exc:
        print(_condition3_line(exc))
        return 1
    verdict = is_consistent(base, members)
    if verdict.consistent:
        print("consistent")
        return 0
    first, second = verdict.witness
    print(f"inconsistent: {{{first}, {second}}}")
    return 1


def _cmd_conflict(args) -> int:
    doc = load_document(args.file)
    left = _named_set(doc, args.first)
    right = _named_set(doc, args.second)
    try:
        base = _document_base(doc)
    except Condition3Error as exc:
        print(_condition3_line(exc))
        return 1
    verdict = sets_conflicting(base, left, right)
    if not verdict.conflicting:
        print("non-conflicting")
        return 0
    first, second = verdict.witness
    print(f"conflicting: {{{first}, {second}}}")
    return 1


def _parse_init(spec: str | None, model: ActivationModel) -> dict[str, int]:
    vector = initial_vector(model)
    if not spec:
        return vector
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        name, sep, number = chunk.partition("=")
        name = name.strip()
        number = number.strip()
        if not sep or not name or not number:
            raise ValidationError(f"bad init entry {chunk!r}: expected 'value=integer'")
        if name not in vector:
            raise UnknownIdError(f"unknown value {name!r} in --init")
        try:
            vector[name] = int(number)
        except ValueError:
            raise ValidationError(
                f"bad init entry {chunk!r}: {number!r} is not an integer"
            ) from None
    return vector


def _parse_steps(spec: str | None) -> list[tuple[str, str]]:
    steps: list[tuple[str, str]] = []
    if not spec:
        return steps
    for chunk in spec.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [part.strip() for part in chunk.split(",")]
        if len(parts) != 2 or not all(parts):
            raise ValidationError(f"bad step {chunk!r}: expected 'state,action'")
        steps.append((parts[0], parts[1]))
    return steps


def _cmd_simulate(args) -> int:
    model = _require_model(load_document(args.file))
    vector = _parse_init(args.init, model)
    steps = _parse_steps(args.steps)
    trace = run_trace(model, vector, steps)

    def render(index: int, state: str, action: str, vec: dict[str, int]) -> str:
        cells = [str(index), state, action]
        cells.extend(f"{value}={vec[value]}" for value in model.values)
        return "\t".join(cells)

    print(render(0, "-", "-", trace[0]))
    for index, ((state, action), vec) in enumerate(zip(steps, trace[1:]), start=1):
        print(render(index, state, action, vec))
    return 0


def _cmd_report(args) -> int:
    model = _require_model(load_document(args.file))
    pairs = [
        (first, second)
        for i, first in enumerate(model.values)
        for second in model.values[i + 1 :]
    ]
    print("== pairwise ==")
    for action in model.actions:
        for state in model.states:
            if state in model.executable[action]:
                for first, second in pairs:
                    relation = classify_pair(model, state, action, first, second)
                    print(f"{state}, {action}: {first}, {second} = {relation.value}")
    print("== inherent ==")
    for first, second in pairs:
        print(f"{first}, {second} = {inherent_relation(model, first, second).value}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="valuedyn",
        description="Reason about conforming and conflicting values over "
        "action effect models.",
    )
    parser.add_argument(
        "--file", required=True, metavar="PATH", help="model document to operate on"
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("validate", help="check the three well-formedness conditions")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("classify", help="classify a value pair in one cell")
    p.add_argument("--state", required=True)
    p.add_argument("--action", required=True)
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("inherent", help="classify a value pair across the whole model")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(handler=_cmd_inherent)

    p = sub.add_parser("partition", help="derive the inherent-conflict pairing")
    p.set_defaults(handler=_cmd_partition)

    p = sub.add_parser("normalize", help="collapse effect-identical values")
    p.add_argument("--out", required=True, metavar="PATH", help="normalized model file")
    p.set_defaults(handler=_cmd_normalize)

    p = sub.add_parser("consistent", help="check one named set for internal conflict")
    p.add_argument("set", metavar="SET")
    p.set_defaults(handler=_cmd_consistent)

    p = sub.add_parser("conflict", help="check two named sets against each other")
    p.add_argument("first", metavar="SET1")
    p.add_argument("second", metavar="SET2")
    p.set_defaults(handler=_cmd_conflict)

    p = sub.add_parser("simulate", help="run a value-state trace")
    p.add_argument("--init", metavar="SPEC", help="initial states, e.g. 'a=5, b=2'")
    p.add_argument(
        "--steps", metavar="SPEC", help="steps to execute, e.g. 's1,a1; s2,a1'"
    )
    p.set_defaults(handler=_cmd_simulate)

    p = sub.add_parser("report", help="dump every pairwise and inherent relation")
    p.set_defaults(handler=_cmd_report)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueModelError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
