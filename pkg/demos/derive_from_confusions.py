"""Deriving a talker's viseme map from a phoneme confusion matrix.

Run: python demos/derive_from_confusions.py
"""

from pathlib import Path

from visemap import (Mode, avl2_inventory, confusion_factor, derive_loose, derive_tight,
                     load_confusion, tight_steps, to_graph, true_positive_only)

inv = avl2_inventory()
m = load_confusion(Path(__file__).parent / "data" / "talker.csv")

# %% The confusion graph
# Two phonemes are joined when either was ever recognised as the other.
g = to_graph(m)
print("edges:")
for a, b in g.edges:
    print(f"  {a:>2} - {b:<2} weight {g.weight(a, b)}")
print("only ever recognised as themselves:", " ".join(sorted(true_positive_only(m))))

# %% Tight pass
# True-positive-only phonemes become singletons. The rest are taken as
# maximum cliques, largest first, among the phonemes still unassigned.
for mode in Mode:
    print(f"\ntight, {mode.value}:")
    for step in tight_steps(m, inv, mode):
        print(f"  {step.kind:<13} {' '.join(step.members):<10} from {len(step.candidates)} left")

# %% Loose pass
# Each remaining singleton joins the multi-phoneme class it is most confused
# with. A singleton with no confusion stays alone.
for mode in Mode:
    tight = derive_tight(m, inv, mode)
    loose = derive_loose(tight, m, inv, mode)
    print(f"\n{mode.value}: tight CF {confusion_factor(tight).cf:.3f}, loose CF {confusion_factor(loose).cf:.3f}")
    for v in loose.classes:
        print(f"  {v.label}: {' '.join(v.members)}")
