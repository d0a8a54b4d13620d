"""Scoring all 120 paired maps on synthetic hypotheses.

Real hypotheses come from a trained recogniser. Here each map's hypotheses
are its converted references with a fixed share of labels swapped, so the
expected ranking is known in advance.

Run: python demos/scoring_sweep.py
"""

import numpy as np

from visemap import Transcript, avl2_lexicon, paired_maps, sweep
from visemap.evaluation import convert

rng = np.random.default_rng(0)
lexicon = avl2_lexicon()

# %% References
# Seven folds, each one recitation of the alphabet.
refs = [Transcript(f"{fold}-{letter}", fold, lexicon[letter])
        for fold in range(1, 8) for letter in sorted(lexicon)]
print(f"{len(refs)} utterances, {sum(len(r.units) for r in refs)} phonemes")

# %% Hypotheses
maps = sorted(paired_maps(), key=lambda m: m.id)
rates = {m.id: rng.choice([0.0, 0.05, 0.1, 0.2, 0.3]) for m in maps}


def noisy(vmap, rate):
    out = []
    for r in refs:
        units = list(convert(vmap, r).units)
        for j in range(len(units)):
            if rng.random() < rate:
                units[j] = rng.choice([l for l in vmap.labels if l != units[j]])
        out.append(Transcript(r.utterance_id, r.fold, units))
    return out


hyps = {m.id: noisy(m, rates[m.id]) for m in maps}

# %% Sweep
rows = sweep(maps, refs, hyps)
print(f"\n{'map':<40} {'rate':>5} {'mean C':>7} {'s.e.':>6}")
for row in rows[:5] + rows[-5:]:
    print(f"{row.map_id:<40} {rates[row.map_id]:5.2f} {row.mean_c:7.3f} {row.std_error:6.3f}")

# %% Mean C by corruption rate
print()
for rate in sorted(set(rates.values())):
    cs = [r.mean_c for r in rows if rates[r.map_id] == rate]
    print(f"rate {rate:.2f}: {len(cs):3d} maps, mean C {np.mean(cs):.3f}")
