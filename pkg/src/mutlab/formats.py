"""JSON wire/file formats. All indices on the wire are 1-based."""

from __future__ import annotations

import json
from typing import Any

from .core import CVector, ExchangeMatrix, YSeed, initial_seed
from .companion import Companion


def matrix_to_obj(seed: YSeed) -> dict[str, Any]:
    return {
        "n": seed.n,
        "B": [list(row) for row in seed.matrix.entries],
        "c": [list(c.coords) for c in seed.cvectors],
        "indexing": 1,
    }


def seed_from_obj(obj: dict[str, Any]) -> YSeed:
    """Parse {"n", "B", optional "c", "indexing": 1}; c defaults to identity."""
    if not isinstance(obj, dict) or "B" not in obj:
        raise ValueError('matrix object must contain "B"')
    if obj.get("indexing", 1) != 1:
        raise ValueError("only 1-based external indexing is supported")
    B = ExchangeMatrix.from_entries(obj["B"])
    if "n" in obj and obj["n"] != B.n:
        raise ValueError('"n" does not match the shape of "B"')
    if obj.get("c") is None:
        return initial_seed(B)
    c = obj["c"]
    if len(c) != B.n:
        raise ValueError('"c" must contain n rows')
    return YSeed(tuple(CVector(tuple(int(v) for v in row)) for row in c), B)


def word_from_obj(obj: dict[str, Any], n: int) -> list[int]:
    """Parse {"word": [...]} with 1-based letters into 0-based indices."""
    word = obj.get("word")
    if not isinstance(word, list):
        raise ValueError('word object must contain a "word" list')
    out = []
    for k in word:
        if not isinstance(k, int) or not 1 <= k <= n:
            raise ValueError(f"letter {k} out of range 1..{n}")
        out.append(k - 1)
    return out


def companion_to_obj(A: Companion) -> dict[str, Any]:
    return {"A": [list(row) for row in A.entries]}


def parse_word_arg(text: str, n: int) -> list[int]:
    """Accept either a JSON word object or a bare comma list like "2,1,3"."""
    text = text.strip()
    if text.startswith("{"):
        return word_from_obj(json.loads(text), n)
    if not text or text == "[]":
        return []
    letters = json.loads(text) if text.startswith("[") else [
        int(p) for p in text.split(",")
    ]
    return word_from_obj({"word": letters}, n)


def dumps(obj: Any) -> str:
    """Canonical serialization: sorted keys, stable spacing, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"
