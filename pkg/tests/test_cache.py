import json
import logging
import threading

from langdualkit.cache import CharacterCache, default_cache_dir
from langdualkit.root_datum import named_datum
from langdualkit.weight_mult import weyl_character

A2 = named_datum("adjoint:A2")


def test_round_trip(tmp_path):
    cache = CharacterCache(tmp_path)
    assert cache.get("abc", (1, 1)) is None
    cache.put("abc", (1, 1), [((0, 0), 2), ((1, 1), 1)])
    assert cache.get("abc", (1, 1)) == [((0, 0), 2), ((1, 1), 1)]
    assert not list((tmp_path / "abc").glob(".tmp-*"))


def test_character_uses_cache(tmp_path):
    cache = CharacterCache(tmp_path)
    cold = weyl_character(A2, (2, 1), cache)
    files = list((tmp_path / A2.content_hash).glob("char_*.json"))
    assert [f.name for f in files] == ["char_2_1.json"]
    warm = weyl_character(A2, (2, 1), cache)
    assert warm == cold and warm.total == 15


def test_cache_is_keyed_by_content(tmp_path):
    cache = CharacterCache(tmp_path)
    weyl_character(A2, (1, 1), cache)
    weyl_character(named_datum("simply-connected:A2"), (1, 1), cache)
    assert len([p for p in tmp_path.iterdir() if p.is_dir()]) == 2


def test_corrupt_entry_is_rebuilt(tmp_path, caplog):
    cache = CharacterCache(tmp_path)
    good = weyl_character(A2, (1, 1), cache)
    path = tmp_path / A2.content_hash / "char_1_1.json"
    for junk in ["{not json", json.dumps({"schema": "v0"}), json.dumps({"schema": "v1", "highest": [1, 1], "entries": [{"weight": [0, 0], "mult": -3}]})]:
        path.write_text(junk)
        with caplog.at_level(logging.WARNING):
            assert cache.get(A2.content_hash, (1, 1)) is None
        assert "corrupt" in caplog.text
        assert not path.exists()
        assert weyl_character(A2, (1, 1), cache) == good
        assert path.exists()
    assert len(cache.corrupted) == 3


def test_concurrent_writers_leave_complete_entries(tmp_path):
    cache = CharacterCache(tmp_path)
    pairs = [((i, -i), 1) for i in range(200)]
    errors = []

    def reader():
        for _ in range(200):
            got = cache.get("h", (0, 0))
            if got is not None and got != sorted(pairs):
                errors.append(got)

    def writer():
        for _ in range(20):
            cache.put("h", (0, 0), pairs)

    threads = [threading.Thread(target=f) for f in (writer, writer, reader, reader)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert not errors and not cache.corrupted


def test_default_dir(monkeypatch, tmp_path):
    monkeypatch.delenv("LDK_CACHE", raising=False)
    assert str(default_cache_dir()) == ".langdualkit-cache"
    assert default_cache_dir("x") == default_cache_dir("x").__class__("x")
    monkeypatch.setenv("LDK_CACHE", str(tmp_path))
    assert default_cache_dir("x") == tmp_path
