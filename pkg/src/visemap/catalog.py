"""Built-in map catalog.

The shipped maps live as plain map files under ``visemap/data/maps``: fifteen
consonant maps, eight vowel maps and sixteen talker-dependent maps derived
from lip-reading confusions (four talkers, tight/loose, mixed/split). Setting
``VISEMAP_CATALOG`` to a directory merges extra ``*.map`` files in.
"""

from __future__ import annotations

import csv
import io
import os
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from itertools import product
from pathlib import Path

from .errors import DuplicateMapId, UnknownMap
from .inventory import PhonemeInventory, avl2_inventory
from .maps import Coverage, VisemeMap, combine, parse_map

CATALOG_ENV = "VISEMAP_CATALOG"


@lru_cache(maxsize=1)
def _shipped() -> tuple[VisemeMap, ...]:
    root = resources.files("visemap").joinpath("data", "maps")
    files = sorted((f for f in root.iterdir() if f.name.endswith(".map")), key=lambda f: f.name)
    return tuple(parse_map(f.read_text(encoding="utf-8")) for f in files)


def builtin_maps() -> tuple[VisemeMap, ...]:
    """All shipped maps, sorted by id."""
    return _shipped()


def load_catalog(extra_dir: str | os.PathLike | None = None) -> dict[str, VisemeMap]:
    """Built-ins plus any maps from ``extra_dir`` (default: ``$VISEMAP_CATALOG``)."""
    catalog = {m.id: m for m in builtin_maps()}
    if extra_dir is None:
        extra_dir = os.environ.get(CATALOG_ENV) or None
    if extra_dir is not None:
        for path in sorted(Path(extra_dir).glob("*.map")):
            m = parse_map(path.read_text(encoding="utf-8"))
            if m.id in catalog:
                raise DuplicateMapId(f"map id {m.id!r} from {path} is already in the catalog")
            catalog[m.id] = m
    return catalog


def maps_by_coverage(coverage: Coverage, catalog: dict[str, VisemeMap] | None = None):
    catalog = load_catalog() if catalog is None else catalog
    return [m for m in catalog.values() if m.coverage is coverage]


def get_map(map_id: str, catalog: dict[str, VisemeMap] | None = None) -> VisemeMap:
    catalog = load_catalog() if catalog is None else catalog
    try:
        return catalog[map_id]
    except KeyError:
        raise UnknownMap(f"no map with id {map_id!r}") from None


def resolve_map(ref: str, catalog: dict[str, VisemeMap] | None = None) -> VisemeMap:
    """A catalog id, or a path to a map file if one exists at ``ref``."""
    path = Path(ref)
    if path.is_file():
        return parse_map(path.read_text(encoding="utf-8"))
    return get_map(ref, catalog)


def paired_maps(inventory: PhonemeInventory | None = None,
                consonants=None, vowels=None) -> list[VisemeMap]:
    """Every consonant map combined with every vowel map."""
    inventory = avl2_inventory() if inventory is None else inventory
    if consonants is None:
        consonants = maps_by_coverage(Coverage.CONSONANT)
    if vowels is None:
        vowels = maps_by_coverage(Coverage.VOWEL)
    return [combine(c, v, inventory) for c, v in product(consonants, vowels)]


@dataclass(frozen=True)
class PublishedFactor:
    map_id: str
    viseme_count: int | None
    phoneme_count: int | None
    cf: float


def published_confusion_factors() -> dict[str, PublishedFactor]:
    """Confusion factors as printed alongside the shipped maps.

    Values are two-decimal strings in the source; published V:P counts are
    only available for the consonant and vowel maps.
    """
    text = resources.files("visemap").joinpath("data", "published_cf.csv").read_text(encoding="utf-8")
    out = {}
    for row in csv.DictReader(io.StringIO(text)):
        out[row["map_id"]] = PublishedFactor(
            row["map_id"],
            int(row["visemes"]) if row["visemes"] else None,
            int(row["phonemes"]) if row["phonemes"] else None,
            float(row["cf"]),
        )
    return out
