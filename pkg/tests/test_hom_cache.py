import os

from surgtorsion.groups import builtin_group
from surgtorsion.hom_cache import HomCache
from surgtorsion.homs import SearchConstraint
from surgtorsion.seifert import enumerate_SG, parse_params


def test_digest_is_stable(trefoil):
    s3 = builtin_group("S3")
    first = HomCache.digest(trefoil.presentation, s3)
    assert first == HomCache.digest(trefoil.presentation, s3)
    assert first != HomCache.digest(trefoil.presentation, builtin_group("C3"))
    constrained = SearchConstraint(conjugate_generators=trefoil.generators)
    assert first != HomCache.digest(trefoil.presentation, s3, constrained)


def test_memory_cache(trefoil):
    cache = HomCache()
    s3 = builtin_group("S3")
    classes = cache.enumerate(trefoil.presentation, s3)
    assert len(classes) == 1
    assert cache.get(HomCache.digest(trefoil.presentation, s3)) == [classes[0].images]
    assert [h.images for h in cache.enumerate(trefoil.presentation, s3)] == [classes[0].images]


def test_disk_cache_survives_a_new_instance(tmp_path, trefoil):
    s3 = builtin_group("S3")
    first = HomCache(str(tmp_path)).enumerate(trefoil.presentation, s3)
    assert [name for name in os.listdir(tmp_path) if name.endswith(".homs")]
    second = HomCache(str(tmp_path))
    assert second.get(HomCache.digest(trefoil.presentation, s3)) == [h.images for h in first]


def test_corrupt_file_is_a_miss(tmp_path, trefoil):
    s3 = builtin_group("S3")
    cache = HomCache(str(tmp_path))
    digest = HomCache.digest(trefoil.presentation, s3)
    (tmp_path / f"{digest}.homs").write_bytes(b"\x00\x01garbage")
    assert cache.get(digest) is None
    assert len(cache.enumerate(trefoil.presentation, s3)) == 1


def test_clear(tmp_path):
    cache = HomCache(str(tmp_path))
    cache.put("abc", [(0, 1)])
    (tmp_path / "notes.txt").write_text("kept")
    cache.clear()
    assert cache.get("abc") is None
    assert os.listdir(tmp_path) == ["notes.txt"]


def test_sg_enumeration_goes_through_the_cache(tmp_path, monkeypatch, a4):
    params = parse_params("2/1, 3/1, 3/1")
    expected = enumerate_SG(params, a4)
    assert expected
    cache = HomCache(str(tmp_path))
    assert enumerate_SG(params, a4, cache) == expected
    digest = HomCache.key_digest("S_G", params.fibres, a4.degree, a4.generators)
    assert (tmp_path / f"{digest}.homs").exists()
    # a fresh instance reads the file instead of searching again
    monkeypatch.setattr("surgtorsion.seifert._enumerate_SG", lambda *args: [])
    assert enumerate_SG(params, a4, HomCache(str(tmp_path))) == expected
    assert enumerate_SG(params, a4) == []
