"""Scoring hypothesis transcripts against references.

Correctness is ``C = (N - D - S) / N``: insertions are ignored. Counts are
pooled over all utterances before dividing. Cross-validation folds are
scored separately and summarised as mean and standard error of the mean.

Transcript files are tab separated, one utterance per line::

    <utterance_id> TAB <fold> TAB <label> <label> ...
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from os import PathLike
from pathlib import Path
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import EmptyInput, EmptyReference, IdMismatch, IncompleteSweep, ParseError
from .maps import VisemeMap, apply_map


@dataclass(frozen=True)
class Transcript:
    utterance_id: str
    fold: int
    units: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "units", tuple(self.units))
        if not self.utterance_id or any(c.isspace() for c in self.utterance_id):
            raise ParseError(f"invalid utterance id {self.utterance_id!r}")
        for u in self.units:
            if not u or any(c.isspace() for c in u):
                raise ParseError(f"invalid label {u!r} in {self.utterance_id!r}")


def convert(vmap: VisemeMap, t: Transcript) -> Transcript:
    """Phoneme transcript to viseme transcript under ``vmap``."""
    return Transcript(t.utterance_id, t.fold, tuple(apply_map(vmap, t.units)))


def parse_transcripts(text: str) -> list[Transcript]:
    out = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        if not raw.strip():
            continue
        parts = raw.split("\t")
        if len(parts) == 2:
            parts.append("")
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected '<id>\\t<fold>\\t<labels>'")
        uid, fold, labels = parts[0].strip(), parts[1].strip(), parts[2]
        try:
            fold_no = int(fold)
        except ValueError:
            raise ParseError(f"line {lineno}: fold {fold!r} is not an integer") from None
        if fold_no < 1:
            raise ParseError(f"line {lineno}: folds are numbered from 1")
        if uid in seen:
            raise ParseError(f"line {lineno}: utterance {uid!r} listed twice")
        seen.add(uid)
        out.append(Transcript(uid, fold_no, tuple(labels.split())))
    return out


def read_transcripts(path: str | PathLike) -> list[Transcript]:
    return parse_transcripts(Path(path).read_text(encoding="utf-8"))


def format_transcripts(transcripts: Iterable[Transcript]) -> str:
    return "".join(f"{t.utterance_id}\t{t.fold}\t{' '.join(t.units)}\n" for t in transcripts)


@dataclass(frozen=True)
class AlignmentResult:
    n_ref: int
    matches: int
    substitutions: int
    deletions: int
    insertions: int
    pairs: tuple[tuple[str | None, str | None], ...] = ()

    @property
    def errors(self) -> int:
        return self.substitutions + self.deletions + self.insertions


def align(ref: Transcript | Sequence[str], hyp: Transcript | Sequence[str]) -> AlignmentResult:
    """Minimum edit-distance alignment with unit costs.

    On traceback, ties prefer match, then substitution, then deletion, then
    insertion, so the returned pair list is reproducible.
    """
    if isinstance(ref, Transcript) and isinstance(hyp, Transcript):
        if ref.utterance_id != hyp.utterance_id:
            raise IdMismatch(f"reference {ref.utterance_id!r} vs hypothesis {hyp.utterance_id!r}")
    r = ref.units if isinstance(ref, Transcript) else tuple(ref)
    h = hyp.units if isinstance(hyp, Transcript) else tuple(hyp)
    n, m = len(r), len(h)

    cost = [[0] * (m + 1) for _ in range(n + 1)]
    for i in range(1, n + 1):
        cost[i][0] = i
    for j in range(1, m + 1):
        cost[0][j] = j
    for i in range(1, n + 1):
        ri = r[i - 1]
        row, prev = cost[i], cost[i - 1]
        for j in range(1, m + 1):
            row[j] = min(prev[j - 1] + (ri != h[j - 1]), prev[j] + 1, row[j - 1] + 1)

    pairs = []
    matches = subs = dels = ins = 0
    i, j = n, m
    while i > 0 or j > 0:
        here = cost[i][j]
        if i > 0 and j > 0 and r[i - 1] == h[j - 1] and here == cost[i - 1][j - 1]:
            matches += 1
            pairs.append((r[i - 1], h[j - 1]))
            i, j = i - 1, j - 1
        elif i > 0 and j > 0 and here == cost[i - 1][j - 1] + 1:
            subs += 1
            pairs.append((r[i - 1], h[j - 1]))
            i, j = i - 1, j - 1
        elif i > 0 and here == cost[i - 1][j] + 1:
            dels += 1
            pairs.append((r[i - 1], None))
            i -= 1
        else:
            ins += 1
            pairs.append((None, h[j - 1]))
            j -= 1
    pairs.reverse()
    return AlignmentResult(n, matches, subs, dels, ins, tuple(pairs))


def correctness(results: Iterable[AlignmentResult]) -> float:
    n = d = s = 0
    for res in results:
        n += res.n_ref
        d += res.deletions
        s += res.substitutions
    if n == 0:
        raise EmptyReference("no reference labels to score against")
    return (n - d - s) / n


@dataclass(frozen=True)
class CorrectnessSummary:
    per_fold: dict
    mean: float
    std_error: float

    @property
    def fold_count(self) -> int:
        return len(self.per_fold)


def aggregate(fold_scores: Mapping) -> CorrectnessSummary:
    """Mean and standard error (n-1 sample deviation over sqrt(n)) across folds.

    Any grouping key works: folds, talkers, or (talker, fold) pairs.
    """
    if not fold_scores:
        raise EmptyInput("no fold scores to aggregate")
    values = np.array([fold_scores[k] for k in sorted(fold_scores)], dtype=float)
    mean = float(values.mean())
    if len(values) < 2:
        se = 0.0
    else:
        se = float(values.std(ddof=1) / math.sqrt(len(values)))
    return CorrectnessSummary(dict(sorted(fold_scores.items())), mean, se)


def pair_up(refs: Sequence[Transcript], hyps: Sequence[Transcript]) -> list[tuple[Transcript, Transcript]]:
    by_id = {h.utterance_id: h for h in hyps}
    out = []
    for r in refs:
        h = by_id.get(r.utterance_id)
        if h is None:
            raise IdMismatch(f"no hypothesis for utterance {r.utterance_id!r}")
        out.append((r, h))
    return out


def score_by_fold(refs: Sequence[Transcript], hyps: Sequence[Transcript]) -> dict[int, list[AlignmentResult]]:
    """Align every reference with its hypothesis, grouped by the reference fold."""
    folds = defaultdict(list)
    for r, h in pair_up(refs, hyps):
        folds[r.fold].append(align(r, h))
    return dict(sorted(folds.items()))


@dataclass(frozen=True)
class SweepRow:
    map_id: str
    mean_c: float
    std_error: float
    fold_count: int


def sweep(maps: Sequence[VisemeMap], refs: Sequence[Transcript],
          hyps: Mapping[str, Sequence[Transcript]]) -> list[SweepRow]:
    """Score many maps against one set of phoneme references.

    References are converted through each map before alignment. Rows come
    back sorted by mean correctness, best first; ties keep id order.
    """
    rows = []
    for vmap in maps:
        if vmap.id not in hyps:
            raise IncompleteSweep(f"no hypotheses for map {vmap.id!r}")
        converted = [convert(vmap, r) for r in refs]
        have = {h.utterance_id for h in hyps[vmap.id]}
        missing = [r.utterance_id for r in refs if r.utterance_id not in have]
        if missing:
            raise IncompleteSweep(f"map {vmap.id!r}: no hypothesis for {missing[0]!r}"
                                  f" ({len(missing)} missing)")
        folds = score_by_fold(converted, hyps[vmap.id])
        summary = aggregate({f: correctness(res) for f, res in folds.items()})
        rows.append(SweepRow(vmap.id, summary.mean, summary.std_error, summary.fold_count))
    rows.sort(key=lambda row: (-row.mean_c, row.map_id))
    return rows
