"""Phoneme-to-viseme maps for visual speech recognition.

Published consonant and vowel maps, their pairings into full maps, maps
derived from recogniser confusion matrices, and correctness scoring.
"""

from .catalog import builtin_maps, get_map, load_catalog, paired_maps, published_confusion_factors
from .confusion import (ConfusionGraph, ConfusionMatrix, load_confusion, parse_confusion,
                        serialize_confusion, to_graph, true_positive_only)
from .derivation import (DerivationConfig, Mode, Stage, derive, derive_loose, derive_tight,
                         max_clique, tight_steps)
from .errors import *  # noqa: F401,F403
from .evaluation import (AlignmentResult, CorrectnessSummary, SweepRow, Transcript, aggregate,
                         align, correctness, read_transcripts, sweep)
from .inventory import (Phoneme, PhonemeClass, PhonemeInventory, avl2_inventory, avl2_lexicon,
                        catalog_inventory, classify, load_inventory, parse_inventory,
                        serialize_inventory)
from .maps import (GARBAGE, ConfusionFactorReport, Coverage, Viseme, VisemeMap, apply_map,
                   combine, confusion_factor, parse_map, serialize_map)

__version__ = "0.1.0"
