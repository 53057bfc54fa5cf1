"""Instance documents: the JSON exchange format of the CLI.

A document carries ``version`` (must be 1), ``kind`` ("instance", "series"
or "plan"), the rational lists ``a`` and ``b`` (strings "p/q" or bare
integers), and optionally ``plan`` (1-based move indices), ``kappa`` and
``eps``.  An "instance" has one more mass than gaps (the trailing sink); a
"series" or "plan" has equally many white and black runs, and "plan"
requires the move list.
"""

import json
from dataclasses import dataclass

from .errors import BooksortError
from .rational import parse_rational
from .series import AlternatingSeries, Instance, SeriesPlan, to_instance

KINDS = ("instance", "series", "plan")


class ParseError(BooksortError):
    """A document failed validation; ``field`` names the offending entry."""

    def __init__(self, field, message):
        self.field = field
        super().__init__(f"field {field!r}: {message}")


@dataclass(frozen=True)
class InstanceDocument:
    version: int
    kind: str
    a: tuple
    b: tuple
    plan: tuple | None
    kappa: object
    eps: object

    def to_instance(self) -> Instance:
        if self.kind == "instance":
            return Instance(self.a, self.b)
        return to_instance(self.to_series())

    def to_series(self) -> AlternatingSeries:
        if self.kind == "instance":
            if self.a[-1] != 0:
                raise ParseError("a", "instance needs a zero sink mass to form a series")
            return AlternatingSeries(self.a[:-1], self.b)
        return AlternatingSeries(self.a, self.b)

    def to_series_plan(self) -> SeriesPlan:
        if self.plan is None:
            raise ParseError("plan", "document has no plan")
        return SeriesPlan(self.to_series(), self.plan)


def _rational_list(raw, field, allow_empty=False):
    if not isinstance(raw, list) or (not raw and not allow_empty):
        raise ParseError(field, "expected a non-empty list of rationals")
    out = []
    for idx, item in enumerate(raw):
        try:
            value = parse_rational(item)
        except ValueError as exc:
            raise ParseError(f"{field}[{idx}]", str(exc)) from exc
        if value < 0:
            raise ParseError(f"{field}[{idx}]", "must be nonnegative")
        out.append(value)
    return tuple(out)


def parse_document(text: str) -> InstanceDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError("<document>", f"invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError("<document>", "top level must be an object")

    version = raw.get("version")
    if not isinstance(version, int) or isinstance(version, bool) or version != 1:
        raise ParseError("version", f"unsupported version {version!r}; expected 1")

    kind = raw.get("kind")
    if kind not in KINDS:
        raise ParseError("kind", f"expected one of {KINDS}, got {kind!r}")

    a = _rational_list(raw.get("a"), "a")
    b_raw = raw.get("b")
    if b_raw is None:
        b_raw = []
    b = _rational_list(b_raw, "b", allow_empty=True)

    if kind == "instance":
        if len(a) != len(b) + 1:
            raise ParseError("b", f"instance needs {len(a) - 1} gaps, got {len(b)}")
    else:
        if len(a) != len(b):
            raise ParseError("b", f"series needs {len(a)} black runs, got {len(b)}")

    plan = raw.get("plan")
    if plan is not None:
        if not isinstance(plan, list) or any(
            not isinstance(j, int) or isinstance(j, bool) or j < 1 for j in plan
        ):
            raise ParseError("plan", "expected a list of 1-based move indices")
        plan = tuple(plan)
    if kind == "plan" and plan is None:
        raise ParseError("plan", "kind 'plan' requires a move list")

    kappa = eps = None
    for name in ("kappa", "eps"):
        if raw.get(name) is not None:
            try:
                value = parse_rational(raw[name])
            except ValueError as exc:
                raise ParseError(name, str(exc)) from exc
            if name == "kappa":
                kappa = value
            else:
                eps = value

    return InstanceDocument(
        version=version, kind=kind, a=a, b=b, plan=plan, kappa=kappa, eps=eps
    )


def load_document(path) -> InstanceDocument:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError("<file>", f"cannot read {path}: {exc}") from exc
    return parse_document(text)
