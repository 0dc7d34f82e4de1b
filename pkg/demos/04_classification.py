"""The full classification sweep.

Every admissible charge inside each category's window is tested: first
the constant terms of the would-be character (both must be non-negative
integers), then the series coefficients through order 8.  Three
candidates survive the first filter only to develop a negative q^2
coefficient; the remaining fifteen are the classified genera.
"""

from extremal2.classify import classify_all, survey

outcomes = survey()
print(f"candidates across all categories: {len(outcomes)}")

constant_pass = [o for o in outcomes if o.constant_term_ok]
print(f"pass the constant-term filter:    {len(constant_pass)}")

deep_rejected = [o for o in constant_pass if not o.series_ok]
print("rejected only by series coefficients:")
for o in deep_rejected:
    print(f"  ({o.category.id}, c = {o.c})  first column = "
          f"({o.chi.x}, {o.chi.z})")

print()
print("the fifteen surviving genera:")
for row in classify_all():
    print(f"  {row.category.id:12s} c = {str(row.c):6s} h_ext = {str(row.h_ext):5s} "
          f"ell = {row.ell}  [{row.realization_note}]")
