"""On-disk character cache.

Entries are JSON files addressed by the datum content hash and the highest
weight. Writers hold an advisory lock and publish with an atomic rename, so
readers see either no entry or a complete one.
"""

from __future__ import annotations

import json
import logging
import os
import tempfile
from pathlib import Path

from filelock import FileLock

log = logging.getLogger(__name__)

DEFAULT_DIR = ".langdualkit-cache"
SCHEMA = "v1"


def default_cache_dir(cli_value: str | None = None) -> Path:
    env = os.environ.get("LDK_CACHE")
    if env:
        return Path(env)
    return Path(cli_value or DEFAULT_DIR)


class CharacterCache:
    def __init__(self, root):
        self.root = Path(root)
        self.corrupted: list[Path] = []

    def _path(self, datum_hash: str, lam) -> Path:
        key = "_".join(str(c) for c in lam) or "empty"
        return self.root / datum_hash / f"char_{key}.json"

    def get(self, datum_hash: str, lam):
        """Stored ``(weight, mult)`` pairs, or ``None``; corrupt files are dropped."""
        path = self._path(datum_hash, lam)
        try:
            text = path.read_text()
        except FileNotFoundError:
            return None
        try:
            doc = json.loads(text)
            if doc.get("schema") != SCHEMA or doc.get("highest") != list(lam):
                raise ValueError("schema or key mismatch")
            pairs = [(tuple(e["weight"]), int(e["mult"])) for e in doc["entries"]]
            if any(m <= 0 for _, m in pairs):
                raise ValueError("non-positive multiplicity")
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("cache entry %s is corrupt (%s); rebuilding it", path, exc)
            self.corrupted.append(path)
            try:
                path.unlink()
            except FileNotFoundError:
                pass
            return None
        return pairs

    def put(self, datum_hash: str, lam, pairs) -> None:
        path = self._path(datum_hash, lam)
        path.parent.mkdir(parents=True, exist_ok=True)
        doc = {
            "schema": SCHEMA,
            "highest": list(lam),
            "entries": [{"weight": list(w), "mult": m} for w, m in sorted(pairs)],
        }
        with FileLock(str(self.root / ".lock")):
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
            try:
                with os.fdopen(fd, "w") as fh:
                    json.dump(doc, fh, sort_keys=True)
                os.replace(tmp, path)
            except BaseException:
                if os.path.exists(tmp):
                    os.unlink(tmp)
                raise
