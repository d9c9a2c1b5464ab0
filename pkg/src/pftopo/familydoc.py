"""The family file format: canonical JSON with decimal-string grades.

Document shape (format_version "1")::

    {
      "format_version": "1",
      "universe": ["a", "b", "c"],
      "sets": [
        {"name": "K1",
         "values": {"a": {"mu": "0.25", "rho": "0.20", "sigma": "0.30"},
                    ...}},
        ...
      ]
    }

Grades travel as decimal strings end to end; binary floating point never
appears.  Saving is canonical: two-space indentation, schema key order,
members in canonical order (full first, null second, then ascending grade
vectors), grades printed with two decimals when exact and up to four
otherwise.  save(load(save(f))) is byte-identical to save(f).
"""

from __future__ import annotations

import json

from .core import Grade, MembershipTriple, PictureFuzzySet, Universe
from .errors import (
    GradeSumExceeded,
    MalformedNumber,
    OutOfRange,
    ParseError,
    PrecisionExceeded,
    SchemaError,
    ValidationError,
)
from .families import Family, NamedSet, canonical_order

FORMAT_VERSION = "1"

_SET_KEYS = {"name", "values"}
_VALUE_KEYS = {"mu", "rho", "sigma"}
_TOP_KEYS = {"format_version", "universe", "sets"}


def load_family(data: bytes | str, strict: bool = True) -> Family:
    """Parse and validate a family document.

    Raises ParseError for malformed JSON/UTF-8, SchemaError for wrong
    document shape, ValidationError (with kind, set and element) for value
    violations.  strict=False waives only the grade-sum bound, so listings
    published with out-of-contract triples can still be loaded and
    analysed; every other validation stays in force.
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"not valid UTF-8: {e}") from None
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as e:
        raise ParseError(f"malformed JSON at line {e.lineno} column {e.colno}: {e.msg}") from None

    if not isinstance(doc, dict):
        raise SchemaError("top-level value must be an object")
    missing = _TOP_KEYS - doc.keys()
    unknown = doc.keys() - _TOP_KEYS
    if missing:
        raise SchemaError(f"missing top-level fields: {sorted(missing)}")
    if unknown:
        raise SchemaError(f"unknown top-level fields: {sorted(unknown)}")
    if doc["format_version"] != FORMAT_VERSION:
        raise SchemaError(
            f"unsupported format_version {doc['format_version']!r} (expected {FORMAT_VERSION!r})"
        )

    labels = doc["universe"]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise SchemaError("universe must be an array of strings")
    if not labels:
        raise ValidationError("empty-universe", "universe must not be empty")
    if len(set(labels)) != len(labels):
        raise ValidationError("duplicate-label", "universe labels must be distinct")
    universe = Universe(tuple(labels))

    raw_sets = doc["sets"]
    if not isinstance(raw_sets, list):
        raise SchemaError("sets must be an array")
    members: list[NamedSet] = []
    seen: set[str] = set()
    for entry in raw_sets:
        if not isinstance(entry, dict):
            raise SchemaError("each set must be an object")
        if entry.keys() != _SET_KEYS:
            raise SchemaError(
                f"set object must have exactly the fields name and values, got {sorted(entry.keys())}"
            )
        name = entry["name"]
        if not isinstance(name, str) or not name:
            raise SchemaError("set name must be a non-empty string")
        if name in seen:
            raise ValidationError("duplicate-name", f"set name {name!r} appears twice",
                                  set_name=name)
        seen.add(name)
        values = entry["values"]
        if not isinstance(values, dict):
            raise SchemaError(f"values of set {name!r} must be an object")
        missing_elems = set(labels) - values.keys()
        extra_elems = values.keys() - set(labels)
        if missing_elems:
            element = sorted(missing_elems)[0]
            raise ValidationError(
                "coverage", f"set {name!r} has no entry for element {element!r}",
                set_name=name, element=element,
            )
        if extra_elems:
            element = sorted(extra_elems)[0]
            raise ValidationError(
                "coverage", f"set {name!r} maps unknown element {element!r}",
                set_name=name, element=element,
            )
        triples = []
        for label in labels:
            cell = values[label]
            if not isinstance(cell, dict):
                raise SchemaError(f"grades of set {name!r} at {label!r} must be an object")
            if cell.keys() != _VALUE_KEYS:
                raise SchemaError(
                    f"grade object of set {name!r} at {label!r} must have exactly "
                    f"mu, rho and sigma, got {sorted(cell.keys())}"
                )
            grades = {}
            for component in ("mu", "rho", "sigma"):
                text = cell[component]
                if not isinstance(text, str):
                    raise SchemaError(
                        f"{component} of set {name!r} at {label!r} must be a decimal string"
                    )
                try:
                    grades[component] = Grade.from_decimal(text)
                except MalformedNumber as e:
                    raise ValidationError("malformed-number", f"set {name!r}, element {label!r}: {e}",
                                          set_name=name, element=label) from None
                except PrecisionExceeded as e:
                    raise ValidationError("precision", f"set {name!r}, element {label!r}: {e}",
                                          set_name=name, element=label) from None
                except OutOfRange as e:
                    raise ValidationError("out-of-range", f"set {name!r}, element {label!r}: {e}",
                                          set_name=name, element=label) from None
            if strict:
                try:
                    triples.append(
                        MembershipTriple(grades["mu"], grades["rho"], grades["sigma"])
                    )
                except GradeSumExceeded as e:
                    raise ValidationError(
                        "grade-sum", f"set {name!r}, element {label!r}: {e}",
                        set_name=name, element=label,
                    ) from None
            else:
                triples.append(
                    MembershipTriple.unchecked(grades["mu"], grades["rho"], grades["sigma"])
                )
        members.append(NamedSet(name, PictureFuzzySet(universe, tuple(triples))))
    return Family(universe, tuple(members))


def set_values(s: PictureFuzzySet) -> dict[str, dict[str, str]]:
    """The values mapping for one set, in universe order, decimal strings."""
    return {
        label: {"mu": t.mu.decimal(), "rho": t.rho.decimal(), "sigma": t.sigma.decimal()}
        for label, t in zip(s.universe, s.triples)
    }


def family_to_doc(family: Family) -> dict:
    """Canonical document dict: schema key order, canonical member order."""
    ordered = canonical_order(family)
    return {
        "format_version": FORMAT_VERSION,
        "universe": list(family.universe.elements),
        "sets": [{"name": m.name, "values": set_values(m.value)} for m in ordered],
    }


def save_family(family: Family) -> bytes:
    """Canonical bytes for a family document."""
    return (json.dumps(family_to_doc(family), indent=2, ensure_ascii=True) + "\n").encode("utf-8")
