"""Viseme maps: many-to-one assignments of phonemes to viseme classes.

A map file looks like::

    # id: lee-vowels
    # citation: Lee and Yook (2002)
    # coverage: vowel
    # excluded:
    V01: i ih
    V02: e ei ae

Phonemes a map does not cover, and phonemes it explicitly excludes, fall into
the reserved garbage class ``gar`` when a transcript is converted.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import CoverageMismatch, EmptyMap, OverlappingClasses, ParseError
from .inventory import PhonemeClass, PhonemeInventory

GARBAGE = "gar"


class Coverage(enum.Enum):
    CONSONANT = "consonant"
    VOWEL = "vowel"
    FULL = "full"


@dataclass(frozen=True)
class Viseme:
    label: str
    members: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(self.members))
        if not self.label or any(c.isspace() for c in self.label) or ":" in self.label:
            raise ParseError(f"invalid viseme label {self.label!r}")
        if not self.members and self.label != GARBAGE:
            raise ParseError(f"viseme {self.label!r} has no members")
        if len(set(self.members)) != len(self.members):
            raise OverlappingClasses(f"viseme {self.label!r} lists a phoneme twice")

    @property
    def is_garbage(self) -> bool:
        return self.label == GARBAGE


@dataclass(frozen=True)
class VisemeMap:
    id: str
    citation: str
    coverage: Coverage
    classes: tuple[Viseme, ...]
    excluded: frozenset[str] = frozenset()
    notes: tuple[str, ...] = ()
    _lookup: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))
        object.__setattr__(self, "excluded", frozenset(self.excluded))
        object.__setattr__(self, "notes", tuple(self.notes))
        lookup = {}
        labels = set()
        for v in self.classes:
            if v.label in labels:
                raise ParseError(f"map {self.id!r}: label {v.label!r} used twice")
            labels.add(v.label)
            for sym in v.members:
                if sym in lookup:
                    raise OverlappingClasses(
                        f"map {self.id!r}: {sym!r} is in both {lookup[sym]!r} and {v.label!r}")
                lookup[sym] = v.label
        clash = self.excluded & lookup.keys()
        if clash:
            raise OverlappingClasses(
                f"map {self.id!r}: excluded phonemes also assigned: {' '.join(sorted(clash))}")
        object.__setattr__(self, "_lookup", lookup)

    def viseme_of(self, symbol: str) -> str:
        """Label of the class holding ``symbol``; garbage when uncovered or excluded."""
        return self._lookup.get(symbol, GARBAGE)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(v.label for v in self.classes)

    def visemes(self) -> tuple[Viseme, ...]:
        """Non-garbage classes."""
        return tuple(v for v in self.classes if not v.is_garbage)

    def covered(self) -> frozenset[str]:
        return frozenset(s for v in self.visemes() for s in v.members)

    def partition(self) -> set[frozenset[str]]:
        return {frozenset(v.members) for v in self.visemes()}


def check_coverage(vmap: VisemeMap, inv: PhonemeInventory) -> None:
    """Raise :class:`CoverageMismatch` when a map holds phonemes of the wrong class.

    Only symbols declared in ``inv`` are checked. Full maps always pass.
    """
    if vmap.coverage is Coverage.FULL:
        return
    wanted = PhonemeClass.VOWEL if vmap.coverage is Coverage.VOWEL else PhonemeClass.CONSONANT
    wrong = sorted(s for s in vmap.covered() if s in inv and inv[s].cls is not wanted)
    if wrong:
        raise CoverageMismatch(
            f"{vmap.coverage.value} map {vmap.id!r} contains {' '.join(wrong)}")


@dataclass(frozen=True)
class ConfusionFactorReport:
    viseme_count: int
    phoneme_count: int

    @property
    def cf(self) -> float:
        return self.viseme_count / self.phoneme_count

    def __str__(self):
        return f"V={self.viseme_count} P={self.phoneme_count} CF={self.cf:.3f}"


def confusion_factor(vmap: VisemeMap) -> ConfusionFactorReport:
    visemes = vmap.visemes()
    if not visemes:
        raise EmptyMap(f"map {vmap.id!r} has no non-garbage classes")
    return ConfusionFactorReport(len(visemes), len(vmap.covered()))


def apply_map(vmap: VisemeMap, units: Sequence[str]) -> list[str]:
    """Replace each phoneme by the label of its viseme (``gar`` when uncovered)."""
    return [vmap.viseme_of(u) for u in units]


def combine(consonants: VisemeMap, vowels: VisemeMap, inventory: PhonemeInventory) -> VisemeMap:
    """Pair a consonant map with a vowel map into a full map.

    Consonant classes are relabelled ``C01..``, vowel classes ``V01..``. A
    symbol listed by both inputs stays with the consonant map. Inventory
    phonemes covered by neither map land in the garbage class.
    """
    if consonants.coverage is not Coverage.CONSONANT:
        raise CoverageMismatch(f"{consonants.id!r} is not a consonant map")
    if vowels.coverage is not Coverage.VOWEL:
        raise CoverageMismatch(f"{vowels.id!r} is not a vowel map")

    classes = [Viseme(f"C{i:02d}", v.members)
               for i, v in enumerate(consonants.visemes(), 1)]
    taken = consonants.covered()
    vowel_classes = [tuple(s for s in v.members if s not in taken) for v in vowels.visemes()]
    classes += [Viseme(f"V{i:02d}", m)
                for i, m in enumerate((m for m in vowel_classes if m), 1)]
    covered = taken | vowels.covered()
    excluded = (consonants.excluded | vowels.excluded) - covered
    garbage = tuple(s for s in inventory.symbols if s not in covered and s not in excluded)
    classes.append(Viseme(GARBAGE, garbage))
    return VisemeMap(
        id=f"{consonants.id}+{vowels.id}",
        citation=f"{consonants.citation}; {vowels.citation}",
        coverage=Coverage.FULL,
        classes=tuple(classes),
        excluded=excluded,
    )


def merge_classes(vmap: VisemeMap, a: str, b: str) -> VisemeMap:
    """Return a copy of ``vmap`` with class ``b`` folded into class ``a``."""
    if a == b:
        raise ValueError("cannot merge a class with itself")
    by_label = {v.label: v for v in vmap.classes}
    if a not in by_label or b not in by_label:
        raise KeyError(f"unknown class label {a if a not in by_label else b!r}")
    merged = []
    for v in vmap.classes:
        if v.label == a:
            merged.append(Viseme(a, v.members + by_label[b].members))
        elif v.label != b:
            merged.append(v)
    return VisemeMap(vmap.id, vmap.citation, vmap.coverage, tuple(merged), vmap.excluded, vmap.notes)


def from_partition(id: str, citation: str, coverage: Coverage,
                   classes: Iterable[Iterable[str]], excluded: Iterable[str] = (),
                   notes: Iterable[str] = (), prefix: str = "V") -> VisemeMap:
    visemes = tuple(Viseme(f"{prefix}{i:02d}", tuple(m)) for i, m in enumerate(classes, 1))
    return VisemeMap(id, citation, coverage, visemes, frozenset(excluded), tuple(notes))


# -- map files ---------------------------------------------------------------

_HEADER_KEYS = ("id", "citation", "coverage", "excluded")


def parse_map(text: str) -> VisemeMap:
    header = {}
    notes = []
    classes = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            key, sep, value = line[1:].strip().partition(":")
            key = key.strip()
            if not sep:
                continue
            if key == "note":
                notes.append(value.strip())
            elif key in _HEADER_KEYS:
                header[key] = value.strip()
            continue
        label, sep, body = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: expected '<label>: <symbol> ...'")
        classes.append(Viseme(label.strip(), tuple(body.split())))
    for key in ("id", "coverage"):
        if not header.get(key):
            raise ParseError(f"missing '# {key}:' header")
    try:
        coverage = Coverage(header["coverage"].lower())
    except ValueError:
        raise ParseError(f"unknown coverage token {header['coverage']!r}") from None
    return VisemeMap(
        id=header["id"],
        citation=header.get("citation", ""),
        coverage=coverage,
        classes=tuple(classes),
        excluded=frozenset(header.get("excluded", "").split()),
        notes=tuple(notes),
    )


def serialize_map(vmap: VisemeMap) -> str:
    lines = [f"# id: {vmap.id}",
             f"# citation: {vmap.citation}".rstrip(),
             f"# coverage: {vmap.coverage.value}",
             f"# excluded: {' '.join(sorted(vmap.excluded))}".rstrip()]
    lines += [f"# note: {n}" for n in vmap.notes]
    for v in vmap.classes:
        lines.append(f"{v.label}: {' '.join(v.members)}".rstrip())
    return "\n".join(lines) + "\n"
