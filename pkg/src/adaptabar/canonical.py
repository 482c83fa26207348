"""Canonical JSON serialization.

Snapshots, profiles and golden files all share one encoding: keys sorted,
no whitespace, integers unpadded, rationals rendered as decimal strings.
Equal in-memory states therefore always produce identical bytes, which is
what makes replay outputs diffable.
"""

from __future__ import annotations

import hashlib
import json
from fractions import Fraction

from .rational import rational_str


def _default(value: object) -> str:
    if isinstance(value, Fraction):
        return rational_str(value)
    raise TypeError(f"not canonically serializable: {type(value).__name__}")


def canonical_json(value: object) -> str:
    """One-line canonical JSON text for a JSON-able structure."""
    return json.dumps(
        value, sort_keys=True, separators=(",", ":"), ensure_ascii=True, default=_default
    )


def canonical_bytes(value: object) -> bytes:
    """Canonical JSON as bytes with a trailing newline, ready to write to disk."""
    return (canonical_json(value) + "\n").encode("ascii")


def digest(value: object) -> str:
    """Hex SHA-256 of a structure's canonical serialization."""
    return hashlib.sha256(canonical_bytes(value)).hexdigest()
