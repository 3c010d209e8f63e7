import json
import os

import pytest

from qgcenter.cache import CacheCorruption, ResultCache, canonical_json


def test_fresh_dir_empty_report(tmp_path):
    cache = ResultCache(str(tmp_path / "c"))
    report = cache.roundtrip_report()
    assert report == {"entries": 0, "corrupt": [], "ok": True}


def test_put_get_roundtrip(tmp_path):
    cache = ResultCache(str(tmp_path))
    key = {"kind": "mults", "type": "A", "rank": 2, "lambda": ["1", "0"]}
    payload = {"mults": [{"mu": ["1", "0"], "m": 1}], "dimension": 3}
    path = cache.put(key, payload)
    assert os.path.exists(path)
    again = cache.get(key)
    assert again == payload
    assert canonical_json(again) == canonical_json(payload)
    report = cache.roundtrip_report()
    assert report["entries"] == 1 and report["ok"]
    # index is human-readable and lists the entry
    with open(cache.index_path) as fh:
        index = json.load(fh)
    assert list(index.values()) == [os.path.basename(path)]


def test_get_missing_returns_none(tmp_path):
    cache = ResultCache(str(tmp_path))
    assert cache.get({"kind": "nothing"}) is None


def test_tampering_detected(tmp_path):
    cache = ResultCache(str(tmp_path))
    key = {"kind": "gram", "beta": [1, 1]}
    path = cache.put(key, {"rank": 2})
    with open(path) as fh:
        doc = json.load(fh)
    doc["payload"]["rank"] = 3
    with open(path, "w") as fh:
        json.dump(doc, fh)
    with pytest.raises(CacheCorruption):
        cache.get(key)
    report = cache.roundtrip_report()
    assert not report["ok"] and len(report["corrupt"]) == 1


def test_write_then_reread_byte_identical(tmp_path):
    cache = ResultCache(str(tmp_path))
    key = {"kind": "mults", "type": "B", "rank": 2, "lambda": ["0", "1"]}
    payload = {"a": [3, 2, 1], "b": {"x": "5/3"}}
    path = cache.put(key, payload)
    with open(path, "rb") as fh:
        first = fh.read()
    cache.put(key, payload)
    with open(path, "rb") as fh:
        second = fh.read()
    assert first == second
