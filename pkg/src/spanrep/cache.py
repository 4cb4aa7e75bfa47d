"""Content-addressed result cache.

Entries are envelopes keyed by a hash of (command, parameters, schema
version); files are written atomically (temp file in the same directory,
then rename).  A corrupt entry is reported, never trusted.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .serialize import SCHEMA_VERSION, envelope_bytes, envelope_from_bytes

__all__ = ["cache_get", "cache_key", "cache_put"]

ENV_CACHE_DIR = "SPANREP_CACHE_DIR"


def cache_key(command: str, parameters: dict) -> str:
    canonical = json.dumps(
        {"command": command, "parameters": parameters, "schema_version": SCHEMA_VERSION},
        sort_keys=True,
        separators=(",", ":"),
    )
    return hashlib.sha256(canonical.encode()).hexdigest()


def _entry_path(cache_dir: str | Path, key: str) -> Path:
    return Path(cache_dir) / f"{key}.json"


def cache_put(cache_dir: str | Path, key: str, envelope: dict) -> Path:
    path = _entry_path(cache_dir, key)
    path.parent.mkdir(parents=True, exist_ok=True)
    data = envelope_bytes(envelope)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    return path


def cache_get(cache_dir: str | Path, key: str) -> tuple[str, dict | None]:
    """Look up a key: returns ("hit", envelope), ("miss", None), or
    ("corrupt", None) -- a corrupt entry must be recomputed, never used."""
    path = _entry_path(cache_dir, key)
    if not path.exists():
        return "miss", None
    try:
        return "hit", envelope_from_bytes(path.read_bytes())
    except (ValueError, json.JSONDecodeError, OSError):
        return "corrupt", None
