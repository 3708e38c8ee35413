"""Content-addressed on-disk memo for expensive character and LR tables.

Entries are JSON files named by the SHA-256 of ``(operation, canonical args)``
and carry a checksum of their payload.  A corrupt or tampered entry is
ignored and recomputed, so the cache can never change a result.  Disk caching
is off until :func:`configure` is called (the CLI does this).
"""

from __future__ import annotations

import functools
import hashlib
import json
import logging
import os
from pathlib import Path

log = logging.getLogger(__name__)

ENV_VAR = "COVRES_CACHE_DIR"

_active: "DiskCache | None" = None


def _digest(obj) -> str:
    return hashlib.sha256(json.dumps(obj, sort_keys=True, separators=(",", ":")).encode()).hexdigest()


class DiskCache:
    def __init__(self, root):
        self.root = Path(root)
        self.enabled = True
        self.hits = 0
        self.misses = 0
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            probe = self.root / ".probe"
            probe.write_text("ok")
            probe.unlink()
        except OSError as exc:
            log.warning("cache directory %s unusable (%s); continuing in memory only", self.root, exc)
            self.enabled = False

    def _path(self, op: str, args) -> Path:
        h = _digest([op, args])
        return self.root / h[:2] / f"{h[2:]}.json"

    def get(self, op: str, args):
        """Return ``(True, value)`` on a verified hit, ``(False, None)`` otherwise."""
        if not self.enabled:
            return False, None
        path = self._path(op, args)
        try:
            entry = json.loads(path.read_text())
        except FileNotFoundError:
            self.misses += 1
            return False, None
        except (OSError, ValueError):
            log.warning("unreadable cache entry %s ignored", path)
            self.misses += 1
            return False, None
        if not isinstance(entry, dict) or entry.get("key") != [op, args] or entry.get("checksum") != _digest(entry.get("value")):
            log.warning("cache entry %s failed its checksum; recomputing", path)
            self.misses += 1
            return False, None
        self.hits += 1
        return True, entry["value"]

    def put(self, op: str, args, value) -> None:
        if not self.enabled:
            return
        path = self._path(op, args)
        entry = {"key": [op, args], "value": value, "checksum": _digest(value)}
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(f".{os.getpid()}.tmp")
            tmp.write_text(json.dumps(entry, sort_keys=True))
            tmp.replace(path)
        except OSError as exc:
            log.warning("cache write failed (%s); continuing in memory only", exc)
            self.enabled = False


def default_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "covres"


def configure(directory=None, enabled: bool = True) -> "DiskCache | None":
    global _active
    _active = DiskCache(directory or default_dir()) if enabled else None
    return _active


def active() -> "DiskCache | None":
    return _active


def disk_memo(op: str, encode, decode, key=None):
    """Memoize through the active disk cache.

    ``key`` maps the call arguments to a JSON-able canonical form (defaults to
    the positional args as lists).
    """

    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args):
            cache = _active
            if cache is None:
                return fn(*args)
            k = key(*args) if key else [list(a) if isinstance(a, tuple) else a for a in args]
            hit, value = cache.get(op, k)
            if hit:
                try:
                    return decode(value)
                except Exception:  # malformed payload that still passed the checksum
                    log.warning("cache entry for %s %s could not be decoded; recomputing", op, k)
            result = fn(*args)
            cache.put(op, k, encode(result))
            return result

        return wrapper

    return deco
