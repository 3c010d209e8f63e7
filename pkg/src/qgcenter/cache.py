"""Persistent JSON result cache: content-addressed, checksummed, atomic.

One file per logical object, named by the SHA-256 of its canonical key, plus a
human-readable index.  Writes go through a temp file and rename, reads verify
the payload checksum; corruption is always reported, never silently reused.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile

ENV_CACHE_DIR = "QGCENTER_CACHE"


class CacheCorruption(RuntimeError):
    pass


def canonical_json(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


class ResultCache:
    def __init__(self, root: str):
        self.root = root
        os.makedirs(root, exist_ok=True)
        self.index_path = os.path.join(root, "index.json")

    def _path_for(self, key: dict) -> str:
        return os.path.join(self.root, _digest(canonical_json(key)) + ".json")

    def put(self, key: dict, payload) -> str:
        doc = {
            "key": key,
            "payload": payload,
            "checksum": _digest(canonical_json(payload)),
        }
        path = self._path_for(key)
        self._atomic_write(path, canonical_json(doc))
        index = {}
        if os.path.exists(self.index_path):
            try:
                with open(self.index_path, "r", encoding="utf-8") as fh:
                    index = json.load(fh)
            except (OSError, json.JSONDecodeError):
                index = {}
        index[canonical_json(key)] = os.path.basename(path)
        self._atomic_write(self.index_path, json.dumps(index, sort_keys=True, indent=1))
        return path

    def get(self, key: dict):
        """The cached payload, or None; raises CacheCorruption on bad checksum."""
        path = self._path_for(key)
        if not os.path.exists(path):
            return None
        with open(path, "r", encoding="utf-8") as fh:
            try:
                doc = json.load(fh)
            except json.JSONDecodeError as exc:
                raise CacheCorruption(f"unparseable cache file {path}") from exc
        payload = doc.get("payload")
        if doc.get("checksum") != _digest(canonical_json(payload)):
            raise CacheCorruption(f"checksum mismatch in {path}")
        return payload

    def roundtrip_report(self) -> dict:
        """Re-verify every entry; byte-identity of canonical payloads."""
        entries = 0
        corrupt = []
        for name in sorted(os.listdir(self.root)):
            if not name.endswith(".json") or name == "index.json":
                continue
            path = os.path.join(self.root, name)
            entries += 1
            try:
                with open(path, "r", encoding="utf-8") as fh:
                    doc = json.load(fh)
                payload = doc.get("payload")
                if doc.get("checksum") != _digest(canonical_json(payload)):
                    corrupt.append(name)
                    continue
                # round-trip: parse + re-serialize must be byte-identical
                if canonical_json(json.loads(canonical_json(payload))) != canonical_json(payload):
                    corrupt.append(name)
            except (OSError, json.JSONDecodeError):
                corrupt.append(name)
        return {"entries": entries, "corrupt": corrupt, "ok": not corrupt}

    @staticmethod
    def _atomic_write(path: str, text: str):
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(path), suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(text)
            os.replace(tmp, path)
        except BaseException:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def default_cache_dir() -> str | None:
    return os.environ.get(ENV_CACHE_DIR)
