import pytest

from visemap import (Coverage, DuplicateMapId, UnknownMap, avl2_inventory, builtin_maps, get_map,
                     load_catalog, paired_maps, published_confusion_factors)
from visemap.catalog import maps_by_coverage, resolve_map
from visemap.maps import serialize_map


@pytest.fixture(autouse=True)
def no_extra_catalog(monkeypatch):
    monkeypatch.delenv("VISEMAP_CATALOG", raising=False)


def test_counts_by_coverage():
    assert len(maps_by_coverage(Coverage.CONSONANT)) == 15
    assert len(maps_by_coverage(Coverage.VOWEL)) == 8
    assert len(maps_by_coverage(Coverage.FULL)) == 16


def test_builtins_sorted_and_unique():
    ids = [m.id for m in builtin_maps()]
    assert ids == sorted(ids) and len(ids) == len(set(ids))


def test_woodward_has_four_classes():
    assert len(get_map("woodward-consonants").classes) == 4


def test_unknown_map():
    with pytest.raises(UnknownMap):
        get_map("nobody-consonants")


def test_every_map_has_published_cf():
    published = published_confusion_factors()
    assert {m.id for m in builtin_maps()} == set(published)


def test_paired_maps_distinct_partitions():
    maps = paired_maps(avl2_inventory())
    assert len({frozenset(m.partition()) for m in maps}) == 120


def test_extra_catalog_directory(tmp_path, monkeypatch):
    extra = get_map("lee-vowels")
    text = serialize_map(extra).replace("# id: lee-vowels", "# id: my-vowels")
    (tmp_path / "mine.map").write_text(text, encoding="utf-8")
    monkeypatch.setenv("VISEMAP_CATALOG", str(tmp_path))
    catalog = load_catalog()
    assert "my-vowels" in catalog
    assert len(catalog) == len(builtin_maps()) + 1


def test_extra_catalog_duplicate_id(tmp_path):
    (tmp_path / "dup.map").write_text(serialize_map(get_map("lee-vowels")), encoding="utf-8")
    with pytest.raises(DuplicateMapId):
        load_catalog(tmp_path)


def test_resolve_map_file_or_id(tmp_path):
    path = tmp_path / "x.map"
    path.write_text(serialize_map(get_map("lee-vowels")), encoding="utf-8")
    assert resolve_map(str(path)) == resolve_map("lee-vowels")
