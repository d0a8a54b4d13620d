"""``visemap`` command line.

Exit status: 0 on success, 1 on a domain error (the error class name is
printed), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import os
import sys
import tempfile
from pathlib import Path

from . import catalog as cat
from .confusion import load_confusion, to_graph
from .derivation import DerivationConfig, Mode, Stage, derive
from .errors import UnknownMap, VisemapError
from .evaluation import (aggregate, convert, correctness, format_transcripts, read_transcripts,
                         score_by_fold, sweep)
from .inventory import PhonemeInventory, avl2_inventory, catalog_inventory, load_inventory
from .maps import Coverage, combine, confusion_factor, serialize_map

SHIPPED_INVENTORIES = {"avl2": avl2_inventory, "catalog": catalog_inventory}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")


def write_atomic(path: str, text: str, stdout) -> None:
    """Write ``text`` to ``path`` via a temporary file and rename; ``-`` means stdout."""
    if path == "-":
        stdout.write(text)
        return
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _inventory(ref: str | None) -> PhonemeInventory | None:
    if ref is None:
        return None
    if ref in SHIPPED_INVENTORIES and not Path(ref).exists():
        return SHIPPED_INVENTORIES[ref]()
    return load_inventory(ref)


def _csv(rows) -> str:
    out = io.StringIO()
    csv.writer(out, lineterminator="\n").writerows(rows)
    return out.getvalue()


# -- subcommands -------------------------------------------------------------

def cmd_list(args, out):
    maps = list(cat.load_catalog().values())
    if args.coverage:
        maps = [m for m in maps if m.coverage is Coverage(args.coverage)]
    maps.sort(key=lambda m: m.id)
    if args.format == "csv":
        rows = [("map_id", "coverage", "visemes", "phonemes", "citation")]
        for m in maps:
            r = confusion_factor(m)
            rows.append((m.id, m.coverage.value, r.viseme_count, r.phoneme_count, m.citation))
        out.write(_csv(rows))
    else:
        for m in maps:
            out.write(f"{m.id:<22} {m.coverage.value:<9} {len(m.visemes()):>2}  {m.citation}\n")


def cmd_show(args, out):
    out.write(serialize_map(cat.resolve_map(args.map)))


def cmd_cf(args, out):
    m = cat.resolve_map(args.map)
    r = confusion_factor(m)
    if args.format == "csv":
        out.write(_csv([("map_id", "visemes", "phonemes", "cf"),
                        (m.id, r.viseme_count, r.phoneme_count, f"{r.cf:.6f}")]))
    else:
        out.write(f"{r}\n")


def cmd_combine(args, out):
    catalog = cat.load_catalog()
    vmap = combine(cat.resolve_map(args.consonants, catalog), cat.resolve_map(args.vowels, catalog),
                   _inventory(args.inventory))
    write_atomic(args.output, serialize_map(vmap), out)


def cmd_apply(args, out):
    vmap = cat.resolve_map(args.map)
    converted = [convert(vmap, t) for t in read_transcripts(args.input)]
    write_atomic(args.output, format_transcripts(converted), out)


def cmd_graph(args, out):
    g = to_graph(load_confusion(args.confusions))
    if args.stats:
        out.write(f"vertices={len(g.vertices)}\n")
        out.write(f"edges={len(g.edges)}\n")
        out.write(f"isolated={' '.join(sorted(g.isolated()))}\n")
    else:
        for a, b in g.edges:
            out.write(f"{a} {b} {g.weight(a, b)}\n")


def cmd_derive(args, out):
    m = load_confusion(args.confusions)
    config = DerivationConfig(Mode(args.classes), Stage(args.stage), args.aggregate)
    citation = f"derived({args.confusions}, {args.stage}, {args.classes})"
    vmap = derive(m, _inventory(args.inventory), config,
                  id=args.id or f"derived-{args.stage}-{args.classes}", citation=citation)
    write_atomic(args.output, serialize_map(vmap), out)


def cmd_score(args, out):
    folds = score_by_fold(read_transcripts(args.ref), read_transcripts(args.hyp))
    if args.per_fold:
        for fold, results in folds.items():
            n, d, s = _totals(results)
            out.write(f"fold={fold} N={n} D={d} S={s} C={correctness(results):.3f}\n")
        summary = aggregate({f: correctness(r) for f, r in folds.items()})
        out.write(f"mean={summary.mean:.3f} std_error={summary.std_error:.3f} "
                  f"folds={summary.fold_count}\n")
    everything = [r for results in folds.values() for r in results]
    n, d, s = _totals(everything)
    out.write(f"N={n} D={d} S={s} C={correctness(everything):.3f}\n")


def _totals(results):
    return (sum(r.n_ref for r in results), sum(r.deletions for r in results),
            sum(r.substitutions for r in results))


def _select(choice: str, coverage: Coverage, catalog):
    pool = {m.id: m for m in catalog.values() if m.coverage is coverage}
    if choice == "all":
        return [pool[k] for k in sorted(pool)]
    picked = []
    for map_id in choice.split(","):
        if map_id not in pool:
            raise UnknownMap(f"no {coverage.value} map with id {map_id!r}")
        picked.append(pool[map_id])
    return picked


def cmd_sweep(args, out):
    catalog = cat.load_catalog()
    maps = cat.paired_maps(_inventory(args.inventory),
                           _select(args.consonant_maps, Coverage.CONSONANT, catalog),
                           _select(args.vowel_maps, Coverage.VOWEL, catalog))
    refs = read_transcripts(args.ref)
    hyp_dir = Path(args.hyp_dir)
    hyps = {}
    for m in maps:
        path = hyp_dir / f"{m.id}.tsv"
        if path.is_file():
            hyps[m.id] = read_transcripts(path)
    rows = [("map_id", "mean_c", "std_error", "fold_count")]
    rows += [(r.map_id, f"{r.mean_c:.6f}", f"{r.std_error:.6f}", r.fold_count)
             for r in sweep(maps, refs, hyps)]
    write_atomic(args.output, _csv(rows), out)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="visemap", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser, required=True)

    s = sub.add_parser("list", help="list catalog maps")
    s.add_argument("--coverage", choices=[c.value for c in Coverage])
    s.add_argument("--format", choices=["text", "csv"], default="text")
    s.set_defaults(func=cmd_list)

    s = sub.add_parser("show", help="print a map in map-file format")
    s.add_argument("map", help="catalog id or map file")
    s.set_defaults(func=cmd_show)

    s = sub.add_parser("cf", help="confusion factor of a map")
    s.add_argument("map", help="catalog id or map file")
    s.add_argument("--format", choices=["text", "csv"], default="text")
    s.set_defaults(func=cmd_cf)

    s = sub.add_parser("combine", help="pair a consonant map with a vowel map")
    s.add_argument("--consonants", required=True)
    s.add_argument("--vowels", required=True)
    s.add_argument("--inventory", default="avl2", help="inventory file, or 'avl2' / 'catalog'")
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_combine)

    s = sub.add_parser("apply", help="convert phoneme transcripts to viseme transcripts")
    s.add_argument("--map", required=True)
    s.add_argument("--in", dest="input", required=True)
    s.add_argument("--out", dest="output", required=True)
    s.set_defaults(func=cmd_apply)

    s = sub.add_parser("graph", help="inspect the confusion graph of a matrix")
    s.add_argument("--confusions", required=True)
    s.add_argument("--stats", action="store_true")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("derive", help="derive a viseme map from a confusion matrix")
    s.add_argument("--confusions", required=True)
    s.add_argument("--inventory", help="inventory file, or 'avl2' / 'catalog'; needed for split")
    s.add_argument("--stage", choices=[x.value for x in Stage], default="tight")
    s.add_argument("--classes", choices=[x.value for x in Mode], default="mixed")
    s.add_argument("--aggregate", choices=["sum", "max"], default="sum")
    s.add_argument("--id")
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_derive)

    s = sub.add_parser("score", help="correctness of hypothesis against reference transcripts")
    s.add_argument("--ref", required=True)
    s.add_argument("--hyp", required=True)
    s.add_argument("--per-fold", action="store_true")
    s.set_defaults(func=cmd_score)

    s = sub.add_parser("sweep", help="score every consonant x vowel pairing")
    s.add_argument("--consonant-maps", default="all")
    s.add_argument("--vowel-maps", default="all")
    s.add_argument("--inventory", default="avl2")
    s.add_argument("--ref", required=True)
    s.add_argument("--hyp-dir", required=True)
    s.add_argument("-o", "--output", default="-")
    s.set_defaults(func=cmd_sweep)
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return 2
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        args.func(args, stdout)
    except (VisemapError, ValueError, OSError) as exc:
        stderr.write(f"visemap: {type(exc).__name__}: {exc}\n")
        return 1
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
