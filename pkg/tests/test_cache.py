import json

from schubert_quiver import cache


def test_disk_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))
    calls = []

    @cache.persistent("square", encode=lambda v: v, decode=lambda v: v)
    def square(x):
        calls.append(x)
        return x * x

    assert square(7) == 49 and square(7) == 49
    assert calls == [7]
    blobs = list(tmp_path.rglob("*.json"))
    assert len(blobs) == 1 and json.loads(blobs[0].read_text()) == 49
    assert not list(tmp_path.rglob("*.tmp"))

    @cache.persistent("square", encode=lambda v: v, decode=lambda v: v)
    def square_again(x):
        calls.append(("again", x))
        return -1

    assert square_again(7) == 49
    assert calls == [7]


def test_corrupt_blob_is_recomputed(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path))

    @cache.persistent("cube", encode=lambda v: v, decode=lambda v: v)
    def cube(x):
        return x ** 3

    assert cube(2) == 8
    (blob,) = tmp_path.rglob("*.json")
    blob.write_text("{not json")

    @cache.persistent("cube", encode=lambda v: v, decode=lambda v: v)
    def cube_fresh(x):
        return x ** 3

    assert cube_fresh(2) == 8
    assert json.loads(blob.read_text()) == 8


def test_no_directory_means_memory_only(tmp_path, monkeypatch):
    monkeypatch.delenv(cache.ENV_VAR, raising=False)
    assert cache.cache_dir() is None

    @cache.persistent("ident", encode=lambda v: v, decode=lambda v: v)
    def ident(x):
        return x

    assert ident(3) == 3
    assert not list(tmp_path.iterdir())
