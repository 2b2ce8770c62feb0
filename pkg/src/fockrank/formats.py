"""Flat-file formats: JSON Lines corpus input, CSV matrix export, and
fixed-point number display."""

from __future__ import annotations

import json
from decimal import ROUND_HALF_EVEN, Decimal
from pathlib import Path
from typing import Union

import numpy as np

from fockrank.errors import CorpusFormatError


def format_fixed(x: float, places: int = 4) -> str:
    """Render ``x`` with ``places`` decimals, rounding half to even.

    Rounding happens on the shortest decimal representation of the float,
    so 0.00125 at three places gives "0.001" (ties to even), and negative
    zero normalizes to plain zero.
    """
    quantum = Decimal(1).scaleb(-places)
    d = Decimal(repr(float(x))).quantize(quantum, rounding=ROUND_HALF_EVEN)
    if d == 0:
        d = abs(d)
    return f"{d:.{places}f}" if places > 0 else str(d)


def matrix_csv_lines(matrix: np.ndarray, places: int = 4) -> list[str]:
    """Row-major, headerless CSV rows with fixed-point values."""
    m = np.asarray(matrix)
    if np.issubdtype(m.dtype, np.integer):
        return [",".join(str(int(x)) for x in row) for row in m]
    return [",".join(format_fixed(float(x), places) for x in row) for row in m]


def read_corpus_jsonl(path: Union[str, Path]) -> list[tuple[str, str]]:
    """Load a JSON Lines corpus: one object per line with string fields
    ``id`` and ``text``.  Blank lines are skipped."""
    docs: list[tuple[str, str]] = []
    try:
        raw = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusFormatError(f"cannot read corpus file {path}: {exc}") from exc
    for lineno, line in enumerate(raw.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusFormatError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
        if not isinstance(obj, dict) or "id" not in obj or "text" not in obj:
            raise CorpusFormatError(
                f"{path}:{lineno}: expected an object with 'id' and 'text' fields")
        doc_id, text = obj["id"], obj["text"]
        if not isinstance(doc_id, str) or not isinstance(text, str):
            raise CorpusFormatError(f"{path}:{lineno}: 'id' and 'text' must be strings")
        docs.append((doc_id, text))
    return docs
