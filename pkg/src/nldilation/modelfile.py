"""JSON model files and the event-expression language.

A model file is a JSON object::

    {
      "atoms": ["w1", "w2", "w3"],
      "p0": ["1/10", "0", "9/10"],
      "params": {"kind": "pmm", "delta": "1/5"},
      "events": {"A": "w1 | w3"},
      "partitions": {"P": ["w1 | w2", "w3"]}
    }

``params`` is either ``{"a": ..., "b": ...}`` or a named submodel:
``{"kind": "vacuous"}``, ``{"kind": "epsilon", "epsilon": ...}``,
``{"kind": "pmm", "delta": ...}`` or ``{"kind": "tvm", "a": ...}``.
Numbers are strings (``"p/q"`` or decimals) or integers.

Event expressions use atom labels and named events, ``!`` (not), ``&``
(and), ``|`` (or), parentheses and the keywords ``TRUE`` / ``FALSE``;
``!`` binds tighter than ``&``, which binds tighter than ``|``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Mapping, Optional, Union

from .errors import InvalidParameterError, UsageError
from .events import Event, Partition, SampleSpace
from .model import NLModel, Submodel, make_submodel, submodel_params, to_fraction


class ParseError(UsageError):
    def __init__(self, message: str, position: Optional[int] = None):
        where = f" at position {position}" if position is not None else ""
        super().__init__(f"{message}{where}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_.\-]*)|(\S)|$)")
_OPERATORS = {"!": "!", "¬": "!", "~": "!", "&": "&", "∧": "&", "|": "|", "∨": "|", "(": "(", ")": ")"}


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("id", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            op = _OPERATORS.get(m.group(2))
            if op is None:
                raise ParseError(f"unexpected character {m.group(2)!r}", m.start(2))
            tokens.append((op, op, m.start(2)))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, space: SampleSpace, named: Mapping[str, Event]):
        self.tokens = _tokenize(text)
        self.i = 0
        self.space = space
        self.named = named

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind: str):
        tok = self.tokens[self.i]
        if tok[0] != kind:
            shown = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {shown}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> Event:
        event = self.disjunction()
        self.take("end")
        return event

    def disjunction(self) -> Event:
        event = self.conjunction()
        while self.peek()[0] == "|":
            self.i += 1
            event = event | self.conjunction()
        return event

    def conjunction(self) -> Event:
        event = self.negation()
        while self.peek()[0] == "&":
            self.i += 1
            event = event & self.negation()
        return event

    def negation(self) -> Event:
        if self.peek()[0] == "!":
            self.i += 1
            return ~self.negation()
        return self.primary()

    def primary(self) -> Event:
        kind, value, pos = self.peek()
        if kind == "(":
            self.i += 1
            event = self.disjunction()
            self.take(")")
            return event
        if kind == "id":
            self.i += 1
            if value == "TRUE":
                return self.space.omega
            if value == "FALSE":
                return self.space.empty
            if value in self.named:
                return self.named[value]
            if value in self.space.atoms:
                return self.space.atom(value)
            raise ParseError(f"unknown atom or event {value!r}", pos)
        shown = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected an atom, event name or '(', found {shown}", pos)


def parse_event(text: str, space: SampleSpace, named: Optional[Mapping[str, Event]] = None) -> Event:
    """Parse an event expression such as ``"w1 | !(w2 & w3)"``."""
    return _Parser(text, space, named or {}).parse()


def parse_partition(
    spec: Union[str, list], space: SampleSpace, named: Optional[Mapping[str, Event]] = None
) -> Partition:
    """A partition from block expressions separated by ``;`` or from a list of blocks.

    List items may be expressions or lists of atom labels.
    """
    if isinstance(spec, str):
        items = [s for s in spec.split(";")]
    else:
        items = list(spec)
    blocks = []
    for item in items:
        if isinstance(item, str):
            blocks.append(parse_event(item, space, named))
        elif isinstance(item, list) and all(isinstance(x, str) for x in item):
            blocks.append(space.event(*item))
        else:
            raise ParseError(f"partition block must be an expression or a list of atoms, got {item!r}")
    return Partition(blocks)


@dataclass(frozen=True)
class ModelFile:
    model: NLModel
    params: dict
    events: dict = field(default_factory=dict)
    partitions: dict = field(default_factory=dict)

    def event(self, text: str) -> Event:
        return parse_event(text, self.model.space, self.events)

    def partition(self, text: str) -> Partition:
        if text in self.partitions:
            return self.partitions[text]
        return parse_partition(text, self.model.space, self.events)


_KIND_PARAM = {"vacuous": None, "epsilon": "epsilon", "pmm": "delta", "tvm": "a"}


def _number(value, where: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise ParseError(f"{where}: numbers must be strings or integers, got {value!r}")
    try:
        return to_fraction(value)
    except InvalidParameterError as exc:
        raise ParseError(f"{where}: {exc}") from None


def _params(raw) -> tuple[dict, Fraction, Fraction]:
    if not isinstance(raw, dict):
        raise ParseError("'params' must be an object")
    if "kind" in raw:
        kind = raw["kind"]
        if kind not in _KIND_PARAM:
            raise ParseError(f"unknown submodel kind {kind!r}")
        name = _KIND_PARAM[kind]
        expected = {"kind"} | ({name} if name else set())
        if set(raw) != expected:
            raise ParseError(f"params for {kind!r} take exactly the keys {sorted(expected)}")
        value = _number(raw[name], f"params.{name}") if name else None
        a, b = submodel_params(Submodel(kind, value))
        canonical = {"kind": kind} if name is None else {"kind": kind, name: str(value)}
        return canonical, a, b
    if set(raw) != {"a", "b"}:
        raise ParseError("'params' needs exactly the keys 'a' and 'b', or a 'kind'")
    a, b = _number(raw["a"], "params.a"), _number(raw["b"], "params.b")
    return {"a": str(a), "b": str(b)}, a, b


def loads(text: str) -> ModelFile:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos) from None
    if not isinstance(raw, dict):
        raise ParseError("a model file must be a JSON object")
    unknown = set(raw) - {"atoms", "p0", "params", "events", "partitions"}
    if unknown:
        raise ParseError(f"unknown keys {sorted(unknown)}")
    for key in ("atoms", "p0", "params"):
        if key not in raw:
            raise ParseError(f"missing key {key!r}")
    atoms = raw["atoms"]
    if not isinstance(atoms, list) or not all(isinstance(a, str) for a in atoms):
        raise ParseError("'atoms' must be a list of strings")
    for label in atoms:
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_.\-]*", label) or label in ("TRUE", "FALSE"):
            raise ParseError(f"atom label {label!r} is not a valid identifier")
    space = SampleSpace(atoms)
    if not isinstance(raw["p0"], list):
        raise ParseError("'p0' must be a list")
    p0 = [_number(p, f"p0[{i}]") for i, p in enumerate(raw["p0"])]
    params, a, b = _params(raw["params"])
    model = NLModel(space, p0, a, b)

    events: dict[str, Event] = {}
    for name, expr in (raw.get("events") or {}).items():
        if name in space.atoms or name in ("TRUE", "FALSE"):
            raise ParseError(f"event name {name!r} clashes with an atom or keyword")
        if isinstance(expr, list):
            events[name] = space.event(*expr)
        elif isinstance(expr, str):
            events[name] = parse_event(expr, space, events)
        else:
            raise ParseError(f"event {name!r} must be an expression or a list of atoms")
    partitions = {
        name: parse_partition(spec, space, events)
        for name, spec in (raw.get("partitions") or {}).items()
    }
    return ModelFile(model, params, events, partitions)


def load(path: Union[str, Path]) -> ModelFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read model file {path}: {exc.strerror}") from None
    return loads(text)


def dumps(mf: ModelFile) -> str:
    """Canonical form: exact ``p/q`` strings, events and blocks as atom-label lists."""
    doc = {
        "atoms": list(mf.model.space.atoms),
        "p0": [str(p) for p in mf.model.p0],
        "params": mf.params,
    }
    if mf.events:
        doc["events"] = {name: list(e.labels) for name, e in mf.events.items()}
    if mf.partitions:
        doc["partitions"] = {
            name: [list(b.labels) for b in p] for name, p in mf.partitions.items()
        }
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def from_model(model: NLModel, events=None, partitions=None) -> ModelFile:
    params = {"a": str(model.a), "b": str(model.b)}
    return ModelFile(model, params, dict(events or {}), dict(partitions or {}))


def submodel_file(tag: Submodel, space: SampleSpace, p0, events=None, partitions=None) -> ModelFile:
    model = make_submodel(tag, space, p0)
    name = _KIND_PARAM.get(tag.kind)
    params = {"kind": tag.kind} if name is None else {"kind": tag.kind, name: str(tag.value)}
    return ModelFile(model, params, dict(events or {}), dict(partitions or {}))
