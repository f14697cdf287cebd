"""JSON instance files.

Schema (unknown keys are rejected at every level)::

    {
      "budget": 10,
      "elements": [{"id": "a", "cost": 3, "profit": 5}, ...],
      "family": [{"name": "X", "members": ["a", "b"], "capacity": 1}, ...],
      "metadata": {...}
    }

``family``, a set's ``name`` and ``metadata`` are optional.  Integers must be
written without a fraction part; they may be arbitrarily large.  A missing
ground set is added with capacity ``|S|`` and duplicate sets are merged,
keeping the smaller capacity.
"""

from __future__ import annotations

import json
from typing import Any, Mapping

from .exceptions import ParseError
from .matroid import Element, FamilySet, LaminarInstance, load_instance

__all__ = ["parse_instance", "instance_from_dict", "instance_to_dict", "serialize_instance", "read_instance", "write_instance"]

_TOP_KEYS = {"budget", "elements", "family", "metadata"}
_ELEMENT_KEYS = {"id", "cost", "profit"}
_SET_KEYS = {"name", "members", "capacity"}


def _schema(message: str, where: str) -> ParseError:
    return ParseError(f"{where}: {message}", "SCHEMA", field=where)


def _check_keys(obj, allowed: set, required: set, where: str) -> None:
    if not isinstance(obj, dict):
        raise _schema(f"expected an object, got {type(obj).__name__}", where)
    unknown = set(obj) - allowed
    if unknown:
        raise _schema(f"unknown keys {sorted(unknown)}", where)
    missing = required - set(obj)
    if missing:
        raise _schema(f"missing keys {sorted(missing)}", where)


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise _schema(f"expected an integer, got {value!r}", where)
    return value


def _nat(value, where: str) -> int:
    if _int(value, where) < 0:
        raise _schema(f"expected a non-negative integer, got {value}", where)
    return value


def instance_from_dict(data: Mapping[str, Any]) -> LaminarInstance:
    """Build a canonical instance from an already-decoded instance object."""
    _check_keys(data, _TOP_KEYS, {"budget", "elements"}, "$")
    budget = _nat(data["budget"], "budget")

    raw_elements = data["elements"]
    if not isinstance(raw_elements, list):
        raise _schema("expected a list", "elements")
    elements = []
    for i, item in enumerate(raw_elements):
        where = f"elements[{i}]"
        _check_keys(item, _ELEMENT_KEYS, _ELEMENT_KEYS, where)
        if not isinstance(item["id"], str):
            raise _schema("id must be a string", f"{where}.id")
        elements.append(Element(item["id"], _nat(item["cost"], f"{where}.cost"), _nat(item["profit"], f"{where}.profit")))

    raw_family = data.get("family", [])
    if not isinstance(raw_family, list):
        raise _schema("expected a list", "family")
    family = []
    for i, item in enumerate(raw_family):
        where = f"family[{i}]"
        _check_keys(item, _SET_KEYS, {"members", "capacity"}, where)
        members = item["members"]
        if not isinstance(members, list) or not all(isinstance(m, str) for m in members):
            raise _schema("members must be a list of element ids", f"{where}.members")
        name = item.get("name", where)
        if not isinstance(name, str):
            raise _schema("name must be a string", f"{where}.name")
        family.append(FamilySet(frozenset(members), _int(item["capacity"], f"{where}.capacity"), name))

    metadata = data.get("metadata", {})
    if not isinstance(metadata, dict):
        raise _schema("expected an object", "metadata")
    return load_instance(LaminarInstance(elements, family, budget, dict(metadata)))


def parse_instance(text: str) -> LaminarInstance:
    """Parse instance-file text into a validated, canonical instance.

    Raises :class:`ParseError` (``SYNTAX`` or ``SCHEMA``) or
    :class:`~laminar_blm.exceptions.ValidationError`.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}", "SYNTAX", line=exc.lineno, column=exc.colno) from exc
    return instance_from_dict(data)


def instance_to_dict(instance: LaminarInstance) -> dict:
    data = {
        "budget": instance.budget,
        "elements": [{"id": e.id, "cost": e.cost, "profit": e.profit} for e in instance.elements],
        "family": [
            {"name": fs.label, "members": sorted(fs.members), "capacity": fs.capacity} for fs in instance.family
        ],
    }
    if instance.metadata:
        data["metadata"] = instance.metadata
    return data


def serialize_instance(instance: LaminarInstance) -> str:
    return json.dumps(instance_to_dict(instance), indent=2) + "\n"


def read_instance(path) -> LaminarInstance:
    try:
        with open(path, encoding="utf-8") as fh:
            return parse_instance(fh.read())
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path}: not valid UTF-8", "SYNTAX") from exc


def write_instance(instance: LaminarInstance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_instance(instance))
