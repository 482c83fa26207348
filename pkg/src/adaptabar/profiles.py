"""Per-user usage-profile persistence.

One canonical JSON file per user under a store directory. Saves are atomic
(write temp, rename) and loading a file back always reproduces the saved
profile exactly; malformed content raises instead of silently resetting a
user's history.
"""

from __future__ import annotations

import json
import os
import re
from pathlib import Path

from .canonical import canonical_bytes, digest
from .errors import ProfileParseError
from .priority import UsageProfile

_USER_RE = re.compile(r"^[A-Za-z0-9][A-Za-z0-9_.@-]*$")


def check_user_id(user: str) -> str:
    """Validate a user id; it doubles as a file name stem."""
    if not _USER_RE.match(user):
        raise ProfileParseError(f"invalid user id {user!r}")
    return user


def profile_path(store_dir: Path | str, user: str) -> Path:
    return Path(store_dir) / f"{check_user_id(user)}.profile.json"


def profile_doc(profile: UsageProfile) -> dict:
    return {
        "user": profile.user_id,
        "counts": dict(profile.counts),
        "last_used": dict(profile.last_used),
        "next_seq": profile.next_seq,
    }


def profile_digest(profile: UsageProfile) -> str:
    return digest(profile_doc(profile))


def _require(condition: bool, path: Path, what: str) -> None:
    if not condition:
        raise ProfileParseError(f"{path}: {what}")


def load_profile(store_dir: Path | str, user: str) -> UsageProfile:
    """Load a user's profile, or a fresh empty one when no file exists yet."""
    path = profile_path(store_dir, user)
    if not path.exists():
        return UsageProfile(user_id=user)
    try:
        doc = json.loads(path.read_text(encoding="ascii"))
    except (ValueError, UnicodeDecodeError) as exc:
        raise ProfileParseError(f"{path}: {exc}") from exc
    _require(isinstance(doc, dict), path, "profile document must be an object")
    for key in ("user", "counts", "last_used", "next_seq"):
        _require(key in doc, path, f"missing field {key!r}")
    _require(doc["user"] == user, path, f"profile belongs to {doc['user']!r}")
    _require(isinstance(doc["counts"], dict), path, "counts must be an object")
    _require(isinstance(doc["last_used"], dict), path, "last_used must be an object")
    _require(
        isinstance(doc["next_seq"], int) and not isinstance(doc["next_seq"], bool),
        path,
        "next_seq must be an integer",
    )
    for mapping_name in ("counts", "last_used"):
        for control, value in doc[mapping_name].items():
            _require(
                isinstance(value, int) and not isinstance(value, bool),
                path,
                f"{mapping_name}[{control!r}] must be an integer",
            )
    try:
        return UsageProfile(
            user_id=user,
            counts=doc["counts"],
            last_used=doc["last_used"],
            next_seq=doc["next_seq"],
        )
    except ValueError as exc:
        raise ProfileParseError(f"{path}: {exc}") from exc


def save_profile(store_dir: Path | str, profile: UsageProfile) -> None:
    """Atomically write a profile's canonical form; save then load is identity."""
    path = profile_path(store_dir, profile.user_id)
    path.parent.mkdir(parents=True, exist_ok=True)
    temp = path.with_suffix(".json.tmp")
    temp.write_bytes(canonical_bytes(profile_doc(profile)))
    os.replace(temp, path)
