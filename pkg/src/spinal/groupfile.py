"""JSON group files.

    {"alphabet_size": 4,
     "rooted_generators": {"s": [0, 3, 2, 1], "r": [1, 2, 3, 0]},
     "directed_generators": {"b": {"1": ["s"], "2": ["s"], "3": ["s", "r"]}}}

Section keys are nonzero letters written as decimal strings; section values
are words in rooted-generator tokens.  An optional "name" is kept.
"""

from __future__ import annotations

import json
import re
from importlib import resources
from pathlib import Path
from typing import Any

import jsonschema

from .permcore import Perm
from .selfsim import CSGroup, CSGroupError, InvalidDefinition

SCHEMA: dict[str, Any] = {
    "type": "object",
    "required": ["alphabet_size", "rooted_generators", "directed_generators"],
    "additionalProperties": False,
    "properties": {
        "name": {"type": "string"},
        "alphabet_size": {"type": "integer", "minimum": 2},
        "rooted_generators": {
            "type": "object",
            "minProperties": 1,
            "additionalProperties": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        },
        "directed_generators": {
            "type": "object",
            "minProperties": 1,
            "additionalProperties": {
                "type": "object",
                "propertyNames": {"pattern": "^[1-9][0-9]*$"},
                "additionalProperties": {"type": "array", "items": {"type": "string"}},
            },
        },
    },
}


class GroupFileError(CSGroupError):
    """Malformed group file (bad JSON or wrong shape)."""


def group_from_dict(data: Any) -> CSGroup:
    try:
        jsonschema.validate(data, SCHEMA)
    except jsonschema.ValidationError as exc:
        where = "/".join(map(str, exc.absolute_path)) or "<root>"
        raise GroupFileError(f"{where}: {exc.message}") from None
    m = data["alphabet_size"]
    rooted = {}
    for name, images in data["rooted_generators"].items():
        try:
            rooted[name] = Perm(images)
        except ValueError:
            raise InvalidDefinition(f"rooted generator {name!r} is not a permutation: {images}") from None
    directed = {
        name: {int(x): tuple(word) for x, word in secs.items()}
        for name, secs in data["directed_generators"].items()
    }
    return CSGroup(m, rooted, directed, name=data.get("name", ""))


def group_to_dict(group: CSGroup) -> dict[str, Any]:
    out: dict[str, Any] = {}
    if group.name:
        out["name"] = group.name
    out["alphabet_size"] = group.alphabet_size
    out["rooted_generators"] = {k: list(v) for k, v in group.rooted_generators.items()}
    out["directed_generators"] = {
        name: {str(x): list(word) for x, word in sorted(secs.items())}
        for name, secs in group.directed_words.items()
    }
    return out


def loads_group(text: str) -> CSGroup:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GroupFileError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return group_from_dict(data)


def load_group(path: str | Path) -> CSGroup:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise GroupFileError(f"cannot read {path}: {exc.strerror}") from None
    return loads_group(text)


_FLAT_LIST = re.compile(r"\[[^\[\]{}]*\]")


def dumps_group(group: CSGroup) -> str:
    text = json.dumps(group_to_dict(group), indent=2)
    # Keep image arrays and words on one line.
    return _FLAT_LIST.sub(lambda m: json.dumps(json.loads(m.group(0))), text) + "\n"


def dump_group(group: CSGroup, path: str | Path) -> None:
    Path(path).write_text(dumps_group(group))


def shipped_path(name: str) -> Path:
    """Path of a bundled fixture such as ``"d4"`` or ``"gs3.json"``."""
    fname = name if name.endswith(".json") else f"{name}.json"
    return Path(str(resources.files("spinal") / "data" / fname))


def load_shipped(name: str) -> CSGroup:
    return load_group(shipped_path(name))
