"""Effective central-charge windows per category.

Each of the three classes of c mod 24 gets a positive-side cutoff (the
diagonal of chi eventually goes negative) and a negative-side cutoff
(|chi_10| drops below 1 forever); combining them leaves finitely many
candidate genera per category.
"""

from extremal2.bounds import (
    bound_report,
    c_extremes,
    negative_threshold,
    nmax_positive,
    positive_threshold_witness,
)
from extremal2.chimat import seed
from extremal2.genus import CATALOG

for cat in CATALOG:
    c_min, c_max = c_extremes(cat)
    print(f"{cat.id:18s} c in [{c_min}, {c_max}]")

print()
c, chi, h = seed("semion", 1)
print(f"example: semion class c = {c}")
print(f"  n_max = {nmax_positive(chi, h)}")
print(f"  threshold witness = {positive_threshold_witness(chi, h)} "
      f"(~{float(positive_threshold_witness(chi, h)):.4f})")

rep = bound_report("semion", 0, "negative")
print(f"negative side base point c = {rep.class_rep_c}: n_max = {rep.n_max}, "
      f"threshold = {rep.threshold_witness} (~{float(rep.threshold_witness):.4f})")
