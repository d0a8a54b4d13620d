"""Talker-dependent viseme maps built from phoneme confusions.

Tight maps: phonemes only ever recognised as themselves become singleton
visemes; the rest are grouped greedily, each step taking the largest set of
mutually confused phonemes (a maximum clique of the confusion graph) among
those still unassigned.

Loose maps: a single pass over the tight map in which each singleton joins
the multi-phoneme class it is most confused with, if it is confused with any.

In split mode no viseme may mix vowels and consonants.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .confusion import ConfusionGraph, ConfusionMatrix, to_graph, true_positive_only
from .errors import LabelMismatch
from .inventory import PhonemeInventory, classify
from .maps import Coverage, Viseme, VisemeMap


class Mode(enum.Enum):
    MIXED = "mixed"
    SPLIT = "split"


class Stage(enum.Enum):
    TIGHT = "tight"
    LOOSE = "loose"


@dataclass(frozen=True)
class DerivationConfig:
    mode: Mode = Mode.MIXED
    stage: Stage = Stage.TIGHT
    aggregate: str = "sum"  # loose-merge confusion mass: "sum" or "max" over class members


def max_clique(g: ConfusionGraph, candidates) -> frozenset[str]:
    """Maximum clique of the subgraph induced on ``candidates``.

    Exact Bron-Kerbosch search with Tomita pivoting and a size bound. Among
    cliques of maximum size the one whose sorted member tuple is
    lexicographically smallest is returned.
    """
    cand = frozenset(candidates)
    unknown = cand.difference(g.vertices)
    if unknown:
        raise ValueError(f"candidates not in graph: {' '.join(sorted(unknown))}")
    if not cand:
        return frozenset()
    adj = {v: g.neighbours(v) & cand for v in cand}
    best: list[tuple[str, ...]] = [()]

    def expand(r: list[str], p: set[str], x: set[str]):
        if not p and not x:
            found = tuple(sorted(r))
            if len(found) > len(best[0]) or (len(found) == len(best[0]) and found < best[0]):
                best[0] = found
            return
        # strict bound: equal-size branches may still win the tie-break
        if len(r) + len(p) < len(best[0]):
            return
        pivot = max(sorted(p | x), key=lambda u: len(p & adj[u]))
        for v in sorted(p - adj[pivot]):
            expand(r + [v], p & adj[v], x & adj[v])
            p.discard(v)
            x.add(v)

    expand([], set(cand), set())
    return frozenset(best[0])


@dataclass(frozen=True)
class TightStep:
    kind: str  # "true-positive" or "clique"
    members: tuple[str, ...]
    candidates: frozenset[str]


def _mode_graph(m: ConfusionMatrix, inv: PhonemeInventory | None, mode: Mode) -> ConfusionGraph:
    g = to_graph(m)
    if mode is Mode.MIXED:
        return g
    cls = {l: classify(inv, l) for l in m.labels}
    keep = {p: w for p, w in g.weights.items() if len({cls[s] for s in p}) == 1}
    return ConfusionGraph(g.vertices, keep)


def tight_steps(m: ConfusionMatrix, inv: PhonemeInventory | None = None,
                mode: Mode = Mode.MIXED) -> list[TightStep]:
    """The sequence of classes the tight derivation emits, with the pool each was drawn from."""
    if mode is Mode.SPLIT and inv is None:
        raise ValueError("split mode needs an inventory to tell vowels from consonants")
    m = m.canonical()
    if inv is not None:
        m.check_labels(inv)
    g = _mode_graph(m, inv, mode)

    steps = []
    remaining = set(m.labels)
    for sym in sorted(true_positive_only(m)):
        steps.append(TightStep("true-positive", (sym,), frozenset(remaining)))
        remaining.discard(sym)
    while remaining:
        clique = max_clique(g, remaining)
        steps.append(TightStep("clique", tuple(sorted(clique)), frozenset(remaining)))
        remaining -= clique
    return steps


def _default_id(m: ConfusionMatrix, stage: str, mode: Mode) -> tuple[str, str]:
    source = m.name or "matrix"
    return f"derived-{stage}-{mode.value}", f"derived({source}, {stage}, {mode.value})"


def derive_tight(m: ConfusionMatrix, inv: PhonemeInventory | None = None,
                 mode: Mode = Mode.MIXED, id: str | None = None,
                 citation: str | None = None) -> VisemeMap:
    default_id, default_cite = _default_id(m, "tight", mode)
    steps = tight_steps(m, inv, mode)
    classes = tuple(Viseme(f"V{i:02d}", s.members) for i, s in enumerate(steps, 1))
    return VisemeMap(id or default_id, citation or default_cite, Coverage.FULL, classes)


def derive_loose(tight: VisemeMap, m: ConfusionMatrix, inv: PhonemeInventory | None = None,
                 mode: Mode = Mode.MIXED, aggregate: str = "sum",
                 id: str | None = None, citation: str | None = None) -> VisemeMap:
    """Merge singleton classes of ``tight`` into their most-confused multi-phoneme class.

    Confusion mass toward a class is the sum (or, with ``aggregate="max"``, the
    largest) of symmetrised counts between the singleton and each member of
    the class as it stood in ``tight``. Singletons are visited in symbol order;
    equal mass goes to the class holding the smallest symbol.
    """
    if aggregate not in ("sum", "max"):
        raise ValueError(f"aggregate must be 'sum' or 'max', not {aggregate!r}")
    if tight.covered() != set(m.labels):
        extra = sorted(tight.covered() ^ set(m.labels))
        raise LabelMismatch(f"map and matrix disagree on labels: {' '.join(extra)}")
    if mode is Mode.SPLIT and inv is None:
        raise ValueError("split mode needs an inventory to tell vowels from consonants")
    g = to_graph(m)
    cls_of = (lambda s: classify(inv, s)) if mode is Mode.SPLIT else (lambda s: None)

    multi = [v for v in tight.visemes() if len(v.members) > 1]
    singles = sorted((v for v in tight.visemes() if len(v.members) == 1), key=lambda v: v.members[0])
    joined: dict[str, list[str]] = {v.label: [] for v in multi}
    absorbed = set()
    for single in singles:
        x = single.members[0]
        target, target_key = None, None
        for v in multi:
            if any(cls_of(y) != cls_of(x) for y in v.members):
                continue
            ws = [g.weight(x, y) for y in v.members]
            mass = sum(ws) if aggregate == "sum" else max(ws)
            if mass <= 0:
                continue
            key = (-mass, min(v.members))
            if target_key is None or key < target_key:
                target, target_key = v, key
        if target is not None:
            joined[target.label].append(x)
            absorbed.add(single.label)

    classes = []
    for v in tight.classes:
        if v.label in absorbed:
            continue
        extra = joined.get(v.label)
        classes.append(Viseme(v.label, v.members + tuple(extra)) if extra else v)

    default_id, default_cite = _default_id(m, "loose", mode)
    if id is None:
        id = tight.id.replace("tight", "loose", 1) if "tight" in tight.id else default_id
    if citation is None:
        citation = (tight.citation.replace(", tight,", ", loose,")
                    if ", tight," in tight.citation else default_cite)
    return VisemeMap(id, citation, tight.coverage, tuple(classes), tight.excluded)


def derive(m: ConfusionMatrix, inv: PhonemeInventory | None, config: DerivationConfig,
           id: str | None = None, citation: str | None = None) -> VisemeMap:
    """Run the tight pass, and the loose pass on top of it when asked."""
    if config.stage is Stage.TIGHT:
        return derive_tight(m, inv, config.mode, id=id, citation=citation)
    tight = derive_tight(m, inv, config.mode)
    return derive_loose(tight, m, inv, config.mode, config.aggregate, id=id, citation=citation)


def is_homogeneous(members, inv: PhonemeInventory) -> bool:
    """True when all members are vowels or all are consonants."""
    return len({classify(inv, s) for s in members}) <= 1

