"""Reading the JSON input formats into library objects, and writing them back."""

from __future__ import annotations

import json
from pathlib import Path

from .catalog import builtin
from .errors import ParseError, SchemaError
from .fuzzyset import FuzzySet, PointMap
from .group import GradedOpTable
from .lattice import UNIT_INTERVAL, lattice_from_dict
from .rough import ApproximationSpace
from .topology import LTopSpace


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def resolve_lattice(ref, base_dir="."):
    """
    A lattice from an inline spec, ``"builtin:<name>"``, ``"unit-interval"``
    or a path (relative paths resolve against ``base_dir``).
    """
    if isinstance(ref, dict):
        return lattice_from_dict(ref)
    if not isinstance(ref, str):
        raise SchemaError("lattice must be an inline object or a string reference")
    if ref == "unit-interval":
        return UNIT_INTERVAL
    if ref.startswith("builtin:"):
        return builtin(ref[len("builtin:") :])
    path = Path(ref)
    if not path.is_absolute():
        path = Path(base_dir) / path
    return lattice_from_dict(read_json(path))


def load_lattice(ref):
    """CLI helper: ``builtin:<name>`` or a JSON file."""
    if isinstance(ref, str) and ref.startswith("builtin:"):
        return builtin(ref[len("builtin:") :])
    return lattice_from_dict(read_json(ref))


def _require(data, *keys, what):
    if not isinstance(data, dict):
        raise SchemaError(f"{what} must be a JSON object")
    missing = [k for k in keys if k not in data]
    if missing:
        raise SchemaError(f"{what} is missing {missing}")


def fuzzyset_from_dict(data, base_dir=".", lattice=None) -> FuzzySet:
    _require(data, "base", "membership", what="fuzzy set")
    if lattice is None:
        _require(data, "lattice", what="fuzzy set")
        lattice = resolve_lattice(data["lattice"], base_dir)
    if not isinstance(data["base"], list) or not isinstance(data["membership"], dict):
        raise SchemaError("'base' must be a list and 'membership' an object")
    return FuzzySet.from_mapping(data["base"], lattice, data["membership"])


def pointmap_from_dict(data, source, target=None) -> PointMap:
    _require(data, "map", what="point map")
    mapping = data["map"]
    if target is None:
        target = data.get("target")
    if target is None:
        target = list(dict.fromkeys(mapping[x] for x in source if x in mapping))
    return PointMap(tuple(source), tuple(target), dict(mapping))


def space_from_dict(data, base_dir=".") -> LTopSpace:
    _require(data, "carrier", "opens", what="topological space")
    carrier = fuzzyset_from_dict(data["carrier"], base_dir)
    opens = []
    for item in data["opens"]:
        if isinstance(item, dict) and "membership" not in item:
            item = {"base": list(carrier.base), "membership": item}
        opens.append(fuzzyset_from_dict({"base": list(carrier.base), **item}, base_dir, carrier.lattice))
    return LTopSpace(carrier, tuple(opens))


def group_from_dict(data, base_dir="."):
    _require(data, "carrier", "gr", what="fuzzy group")
    carrier = fuzzyset_from_dict(data["carrier"], base_dir)
    grades = {}
    for entry in data["gr"]:
        _require(entry, "lhs", "rhs", "grade", what="gr entry")
        if not isinstance(entry["lhs"], list) or len(entry["lhs"]) != 2:
            raise SchemaError("gr 'lhs' must be a pair of points")
        grades[entry["lhs"][0], entry["lhs"][1], entry["rhs"]] = entry["grade"]
    return carrier, GradedOpTable(carrier.base, carrier.lattice, grades)


def rough_from_dict(data):
    _require(data, "universe", "partition", what="approximation space")
    space = ApproximationSpace.from_blocks(data["universe"], data["partition"])
    return space, data.get("target", []), data.get("alpha"), data.get("beta")
