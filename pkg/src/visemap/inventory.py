"""Phoneme inventories.

An inventory is an ordered, duplicate-free list of phonemes, each tagged as a
vowel or a consonant. Symbols are short ASCII identifiers so that they can be
typed on a command line; the IPA rendering is kept for display only.

Inventory files hold one phoneme per line::

    # inventory: avl2
    p consonant p
    ae vowel æ

Comment lines at the top of the file are kept and written back by
:func:`serialize_inventory`, so a shipped inventory round-trips byte for byte.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from importlib import resources
from os import PathLike
from pathlib import Path

from .errors import DuplicatePhoneme, ParseError, UnknownPhoneme


class PhonemeClass(enum.Enum):
    VOWEL = "vowel"
    CONSONANT = "consonant"


@dataclass(frozen=True)
class Phoneme:
    symbol: str
    cls: PhonemeClass
    ipa: str = ""

    def __post_init__(self):
        if not self.symbol or any(c.isspace() for c in self.symbol):
            raise ParseError(f"invalid phoneme symbol {self.symbol!r}")
        if not isinstance(self.cls, PhonemeClass):
            raise ParseError(f"invalid phoneme class {self.cls!r}")


@dataclass(frozen=True)
class PhonemeInventory:
    name: str
    phonemes: tuple[Phoneme, ...]
    header: tuple[str, ...] = ()
    _index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        index = {}
        for ph in self.phonemes:
            if ph.symbol in index:
                raise DuplicatePhoneme(f"{ph.symbol!r} declared twice in inventory {self.name!r}")
            index[ph.symbol] = ph
        object.__setattr__(self, "_index", index)

    def __len__(self):
        return len(self.phonemes)

    def __iter__(self):
        return iter(self.phonemes)

    def __contains__(self, symbol):
        return symbol in self._index

    def __getitem__(self, symbol: str) -> Phoneme:
        try:
            return self._index[symbol]
        except KeyError:
            raise UnknownPhoneme(f"{symbol!r} is not in inventory {self.name!r}") from None

    @property
    def symbols(self) -> tuple[str, ...]:
        return tuple(ph.symbol for ph in self.phonemes)

    def vowels(self) -> tuple[str, ...]:
        return tuple(p.symbol for p in self.phonemes if p.cls is PhonemeClass.VOWEL)

    def consonants(self) -> tuple[str, ...]:
        return tuple(p.symbol for p in self.phonemes if p.cls is PhonemeClass.CONSONANT)


def classify(inv: PhonemeInventory, symbol: str) -> PhonemeClass:
    """Return the vowel/consonant class of ``symbol``.

    Raises :class:`UnknownPhoneme` if the symbol is not declared in ``inv``.
    """
    return inv[symbol].cls


def parse_inventory(text: str, name: str = "inventory") -> PhonemeInventory:
    header = []
    phonemes = []
    in_header = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            in_header = False
            continue
        if line.startswith("#"):
            if in_header:
                header.append(raw.rstrip())
                if line[1:].strip().startswith("inventory:"):
                    name = line[1:].strip()[len("inventory:"):].strip() or name
            continue
        in_header = False
        parts = line.split(None, 2)
        if len(parts) < 2:
            raise ParseError(f"line {lineno}: expected '<symbol> <vowel|consonant> [ipa]'")
        symbol, token = parts[0], parts[1].lower()
        try:
            cls = PhonemeClass(token)
        except ValueError:
            raise ParseError(f"line {lineno}: unknown class token {parts[1]!r}") from None
        ipa = parts[2].strip() if len(parts) == 3 else ""
        phonemes.append(Phoneme(symbol, cls, ipa))
    return PhonemeInventory(name, tuple(phonemes), tuple(header))


def load_inventory(source: str | PathLike) -> PhonemeInventory:
    path = Path(source)
    return parse_inventory(path.read_text(encoding="utf-8"), name=path.stem)


def serialize_inventory(inv: PhonemeInventory) -> str:
    lines = list(inv.header)
    for ph in inv.phonemes:
        fields = [ph.symbol, ph.cls.value]
        if ph.ipa:
            fields.append(ph.ipa)
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"


def _data_text(name: str) -> str:
    return resources.files("visemap").joinpath("data", name).read_text(encoding="utf-8")


def avl2_inventory() -> PhonemeInventory:
    """The 25-phoneme British English letter-recitation inventory (silence excluded)."""
    return parse_inventory(_data_text("avl2.inv"), name="avl2")


def catalog_inventory() -> PhonemeInventory:
    """Every symbol used by the built-in maps, including the AVL2 symbols."""
    return parse_inventory(_data_text("catalog.inv"), name="catalog")


def avl2_lexicon() -> dict[str, tuple[str, ...]]:
    """Pronunciations of the letters A-Z over the AVL2 symbols."""
    lexicon = {}
    for line in _data_text("avl2_letters.dict").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        word, *phones = line.split()
        lexicon[word] = tuple(phones)
    return lexicon
