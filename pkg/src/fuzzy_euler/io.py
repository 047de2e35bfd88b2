"""JSON documents for fuzzy numbers and sequences.

A fuzzy number is ``{"levels": [...], "lower": [...], "upper": [...]}``.
Shorthands ``{"tri": [a, b, c]}`` (triangular, support ``[a, c]``, peak
``b``) and ``{"crisp": r}`` expand on the default grid.  A sequence is a
JSON array of such documents.  Floats are written with ``repr`` precision
so a dump/load round trip is exact.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Union

from .fuzzy import FuzzyNumber, FuzzySequence, SequenceLike, as_sequence, crisp, triangular

__all__ = [
    "FormatError",
    "dump_sequence",
    "dumps_sequence",
    "fuzzy_from_doc",
    "fuzzy_to_doc",
    "load_sequence",
    "loads_sequence",
]


class FormatError(ValueError):
    """Raised when a document does not describe a fuzzy number or sequence."""


def fuzzy_to_doc(u: FuzzyNumber) -> dict[str, list[float]]:
    return {
        "levels": [float(a) for a in u.levels],
        "lower": [float(a) for a in u.lower],
        "upper": [float(a) for a in u.upper],
    }


def fuzzy_from_doc(doc: Any, levels=None) -> FuzzyNumber:
    if not isinstance(doc, dict):
        raise FormatError(f"expected an object for a fuzzy number, got {type(doc).__name__}")
    try:
        if "tri" in doc:
            a, b, c = (float(x) for x in doc["tri"])
            return triangular(a, b, c, levels)
        if "crisp" in doc:
            return crisp(float(doc["crisp"]), levels)
        missing = {"levels", "lower", "upper"} - doc.keys()
        if missing:
            raise FormatError(f"fuzzy number document lacks {sorted(missing)}")
        return FuzzyNumber(doc["levels"], doc["lower"], doc["upper"])
    except FormatError:
        raise
    except (TypeError, ValueError) as exc:
        raise FormatError(f"invalid fuzzy number document: {exc}") from exc


def dumps_sequence(seq: SequenceLike, indent: Union[int, None] = None) -> str:
    return json.dumps([fuzzy_to_doc(u) for u in as_sequence(seq)], indent=indent)


def loads_sequence(text: str, levels=None) -> FuzzySequence:
    try:
        docs = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"not valid JSON: {exc}") from exc
    if not isinstance(docs, list) or not docs:
        raise FormatError("a fuzzy sequence must be a nonempty JSON array")
    return FuzzySequence(tuple(fuzzy_from_doc(d, levels) for d in docs))


def dump_sequence(seq: SequenceLike, path: Union[str, Path]) -> None:
    Path(path).write_text(dumps_sequence(seq) + "\n")


def load_sequence(path: Union[str, Path], levels=None) -> FuzzySequence:
    return loads_sequence(Path(path).read_text(), levels)
