"""Phoneme confusion matrices and the confusion graph built from them.

``counts[i, j]`` is the number of times reference phoneme ``labels[i]`` was
recognised as ``labels[j]``. Two phonemes are *confused* when either direction
has a positive count; the graph edge weight is the symmetrised sum.

CSV layout::

    ,p,b
    p,5,0
    b,1,7
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from os import PathLike
from pathlib import Path

import numpy as np

from .errors import DuplicatePhoneme, ParseError, ShapeError, UnknownPhoneme
from .inventory import PhonemeInventory


@dataclass(frozen=True, eq=False)
class ConfusionMatrix:
    labels: tuple[str, ...]
    counts: np.ndarray
    name: str = ""

    def __post_init__(self):
        labels = tuple(self.labels)
        counts = np.array(self.counts, copy=True)
        if counts.ndim != 2 or counts.shape[0] != counts.shape[1]:
            raise ShapeError(f"confusion counts must be square, got shape {counts.shape}")
        if counts.shape[0] != len(labels):
            raise ShapeError(f"{len(labels)} labels for a {counts.shape[0]}x{counts.shape[0]} matrix")
        if len(set(labels)) != len(labels):
            dup = next(l for l in labels if labels.count(l) > 1)
            raise DuplicatePhoneme(f"label {dup!r} appears twice")
        if counts.size and not np.issubdtype(counts.dtype, np.integer):
            if not np.all(np.equal(np.mod(counts, 1), 0)):
                raise ParseError("confusion counts must be integers")
        counts = counts.astype(np.int64)
        if (counts < 0).any():
            raise ParseError("confusion counts must be non-negative")
        counts.flags.writeable = False
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "counts", counts)

    def __eq__(self, other):
        if not isinstance(other, ConfusionMatrix):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.counts, other.counts)

    def __len__(self):
        return len(self.labels)

    def index(self, symbol: str) -> int:
        try:
            return self.labels.index(symbol)
        except ValueError:
            raise UnknownPhoneme(f"{symbol!r} is not a matrix label") from None

    def count(self, ref: str, hyp: str) -> int:
        return int(self.counts[self.index(ref), self.index(hyp)])

    def symmetric(self) -> np.ndarray:
        """``counts + counts.T`` with the diagonal zeroed."""
        sym = self.counts + self.counts.T
        np.fill_diagonal(sym, 0)
        return sym

    def canonical(self) -> ConfusionMatrix:
        """Same matrix with labels in sorted order."""
        order = sorted(range(len(self.labels)), key=lambda i: self.labels[i])
        return ConfusionMatrix(tuple(self.labels[i] for i in order),
                               self.counts[np.ix_(order, order)], self.name)

    def check_labels(self, inv: PhonemeInventory) -> None:
        missing = [l for l in self.labels if l not in inv]
        if missing:
            raise UnknownPhoneme(f"labels not in inventory {inv.name!r}: {' '.join(missing)}")


@dataclass(frozen=True)
class ConfusionGraph:
    vertices: tuple[str, ...]
    weights: dict = field(default_factory=dict)

    def __post_init__(self):
        adj = {v: set() for v in self.vertices}
        for pair, w in self.weights.items():
            a, b = tuple(pair)
            if w <= 0:
                raise ValueError(f"edge {a}-{b} has non-positive weight")
            adj[a].add(b)
            adj[b].add(a)
        object.__setattr__(self, "_adj", {v: frozenset(n) for v, n in adj.items()})

    def neighbours(self, v: str) -> frozenset[str]:
        return self._adj[v]

    def has_edge(self, a: str, b: str) -> bool:
        return b in self._adj.get(a, ())

    def weight(self, a: str, b: str) -> int:
        return self.weights.get(frozenset((a, b)), 0)

    @property
    def edges(self) -> list[tuple[str, str]]:
        return sorted(tuple(sorted(p)) for p in self.weights)

    def isolated(self) -> list[str]:
        return [v for v in self.vertices if not self._adj[v]]

    def subgraph(self, keep) -> ConfusionGraph:
        keep = set(keep)
        verts = tuple(v for v in self.vertices if v in keep)
        return ConfusionGraph(verts, {p: w for p, w in self.weights.items() if p <= keep})


def to_graph(m: ConfusionMatrix) -> ConfusionGraph:
    sym = m.symmetric()
    weights = {}
    n = len(m.labels)
    for i in range(n):
        for j in range(i + 1, n):
            if sym[i, j] > 0:
                weights[frozenset((m.labels[i], m.labels[j]))] = int(sym[i, j])
    return ConfusionGraph(m.labels, weights)


def true_positive_only(m: ConfusionMatrix) -> set[str]:
    """Phonemes only ever recognised as themselves.

    A phoneme with an all-zero row and column (never seen, never emitted) is
    not included: it was not correctly identified either.
    """
    off = m.counts.copy()
    np.fill_diagonal(off, 0)
    diag = np.diag(m.counts)
    return {l for i, l in enumerate(m.labels)
            if diag[i] > 0 and not off[i, :].any() and not off[:, i].any()}


def parse_confusion(text: str, name: str = "") -> ConfusionMatrix:
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows:
        raise ParseError("empty confusion CSV")
    header = [c.strip() for c in rows[0]]
    labels = header[1:]
    if any(not l for l in labels):
        raise ParseError("empty label in header row")
    if len(set(labels)) != len(labels):
        dup = next(l for l in labels if labels.count(l) > 1)
        raise DuplicatePhoneme(f"label {dup!r} appears twice in header")
    body = rows[1:]
    if len(body) != len(labels):
        raise ShapeError(f"{len(labels)} columns but {len(body)} rows")
    counts = np.zeros((len(labels), len(labels)), dtype=np.int64)
    for i, row in enumerate(body):
        if len(row) != len(labels) + 1:
            raise ShapeError(f"row {i + 1} has {len(row) - 1} cells, expected {len(labels)}")
        if row[0].strip() != labels[i]:
            raise ParseError(f"row {i + 1} is labelled {row[0].strip()!r}, expected {labels[i]!r}")
        for j, cell in enumerate(row[1:]):
            cell = cell.strip()
            try:
                value = int(cell)
            except ValueError:
                raise ParseError(f"cell ({labels[i]}, {labels[j]}) = {cell!r} is not an integer") from None
            if value < 0:
                raise ParseError(f"cell ({labels[i]}, {labels[j]}) is negative")
            counts[i, j] = value
    return ConfusionMatrix(tuple(labels), counts, name)


def load_confusion(source: str | PathLike) -> ConfusionMatrix:
    path = Path(source)
    return parse_confusion(path.read_text(encoding="utf-8"), name=str(source))


def serialize_confusion(m: ConfusionMatrix) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([""] + list(m.labels))
    for label, row in zip(m.labels, m.counts):
        writer.writerow([label] + [int(c) for c in row])
    return out.getvalue()
