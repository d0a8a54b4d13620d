"""Published viseme maps: what they cover and how much they contract.

Run: python demos/published_maps.py
"""

from collections import Counter

from visemap import (Coverage, avl2_inventory, builtin_maps, confusion_factor, paired_maps,
                     published_confusion_factors)

inv = avl2_inventory()
printed = published_confusion_factors()

# %% The catalog
# Fifteen consonant maps and eight vowel maps from the lip-reading
# literature, plus sixteen maps derived for four individual talkers.
by_coverage = Counter(m.coverage for m in builtin_maps())
for cov in Coverage:
    print(f"{cov.value:<10} {by_coverage[cov]} maps")

# %% Confusion factor
# CF = visemes / phonemes. A low value means many phonemes share a viseme.
print(f"\n{'map':<22} {'V:P':>6} {'CF':>6} {'printed':>8}")
for vmap in sorted(builtin_maps(), key=lambda m: confusion_factor(m).cf):
    if vmap.coverage is Coverage.FULL:
        continue
    r = confusion_factor(vmap)
    p = printed[vmap.id]
    flag = "" if (p.viseme_count, p.phoneme_count) == (r.viseme_count, r.phoneme_count) else \
        f"  (printed {p.viseme_count}:{p.phoneme_count})"
    print(f"{vmap.id:<22} {r.viseme_count:>2}:{r.phoneme_count:<3} {r.cf:6.3f} {p.cf:8.2f}{flag}")

# %% Pairing
# Every consonant map is combined with every vowel map. Phonemes neither map
# covers fall into the garbage viseme.
maps = paired_maps(inv)
print(f"\n{len(maps)} full maps over {len(inv)} phonemes")
garbage = Counter(len(next((v.members for v in m.classes if v.label == "gar"), ())) for m in maps)
for size, count in sorted(garbage.items()):
    print(f"  {count:3d} maps send {size} phoneme(s) to gar")
