"""Effective central-charge bounds per category.

Two one-sided arguments turn the recurrence into a finite search window:

* positive side: along c -> c + 24n the diagonal iterate makes chi_00
  eventually negative; the published per-class cutoff n_max is the sign
  change of the concave quadratic

      Qt(n) = -240 n^2 + |M| n + |(h - 1) chi_00|,
      M = chi_00 + chi_11 - 240 (h - 1),

  whose positive root is the radical threshold quoted in the bound.  The
  sign test is decided in exact rational arithmetic; no square roots are
  ever evaluated.

* negative side: once h < 0, beta > 1 and |chi_10| <= 1 hold, |beta| stays
  above 1 (so chi_10 can never again be an integer) for every
  n > |alpha - 120(1-h)| (1-h) / 860, an exactly rational threshold.

``c_extremes`` combines the 3 classes per category into (c_min, c_max).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chimat import CharMatrix, alpha_beta, f_minus, f_plus, seed
from .genus import CATALOG, CategoryInfo, category

__all__ = [
    "BoundReport",
    "nmax_positive",
    "positive_threshold_witness",
    "nmax_negative",
    "negative_threshold",
    "negative_base_point",
    "bound_report",
    "c_extremes",
    "silly_estimate_holds",
    "positive_table",
    "negative_table",
]


@dataclass(frozen=True)
class BoundReport:
    """One per-class bound: the cutoff n_max plus its exact threshold data.

    ``threshold_witness`` is the exact rational threshold for the negative
    direction.  For the positive direction the true threshold is a
    quadratic surd; the witness is then that surd when it happens to be
    rational, and otherwise the least multiple of 1e-6 above it (computed
    by integer square root, still without floats).
    """

    category: CategoryInfo
    class_rep_c: Fraction
    n_max: int
    direction: str
    threshold_witness: Fraction

    def to_json(self) -> dict:
        return {
            "category": self.category.id,
            "class_rep_c": str(self.class_rep_c),
            "n_max": self.n_max,
            "direction": self.direction,
            "threshold_witness": str(self.threshold_witness),
        }


def _quadratic_data(m: CharMatrix, h: Fraction) -> tuple[Fraction, Fraction]:
    big_m = m.x + m.w - 240 * (h - 1)
    return abs(big_m), abs((h - 1) * m.x)


def nmax_positive(m: CharMatrix, h: Fraction) -> int:
    """Least n_max >= 0 with Qt(n) < 0 for every integer n > n_max.

    Qt is the absolute-coefficient quadratic described in the module
    docstring; it is concave with one sign change on n >= 1, so a forward
    scan of exact evaluations terminates and is exact.
    """
    h = Fraction(h)
    if h <= 0:
        raise ValueError("lemma requires h_ext > 0")
    a, b = _quadratic_data(m, h)

    def qt(n: int) -> Fraction:
        return -240 * n * n + a * n + b

    last_nonneg = 0
    n = 1
    while qt(n) >= 0:
        last_nonneg = n
        n += 1
    return last_nonneg


def _isqrt_ceil(value: int) -> int:
    r = math.isqrt(value)
    return r if r * r == value else r + 1


def positive_threshold_witness(m: CharMatrix, h: Fraction) -> Fraction:
    """Rational witness for the positive-side threshold (|M| + sqrt(disc))/480.

    Exact when disc is a perfect rational square; otherwise the least
    multiple of 1e-6 at or above the true irrational threshold.
    """
    h = Fraction(h)
    if h <= 0:
        raise ValueError("lemma requires h_ext > 0")
    a, b = _quadratic_data(m, h)
    disc = a * a + 960 * b
    num, den = disc.numerator, disc.denominator
    rn, rd = math.isqrt(num), math.isqrt(den)
    if rn * rn == num and rd * rd == den:
        return (a + Fraction(rn, rd)) / 480
    # least s with (s/10^6)^2 >= disc, i.e. s^2 * den >= num * 10^12
    scale = 10**6
    s = _isqrt_ceil(-(-num * scale * scale // den))
    while s * s * den < num * scale * scale:
        s += 1
    return (a + Fraction(s, scale)) / 480


def negative_threshold(m: CharMatrix, h: Fraction) -> Fraction:
    """Exact rational threshold |alpha - 120(1-h)| (1-h) / 860."""
    ab = alpha_beta(m)
    return abs(ab.alpha - 120 * (1 - h)) * (1 - h) / 860


def nmax_negative(m: CharMatrix, h: Fraction) -> int:
    """Least n_max >= 0 such that every integer n > n_max exceeds the threshold.

    Hypotheses: h < 0, beta > 1 and |chi_10| <= 1; each violation is
    reported by name.
    """
    h = Fraction(h)
    if h >= 0:
        raise ValueError("lemma requires h_ext < 0")
    ab = alpha_beta(m)
    if not ab.beta > 1:
        raise ValueError("lemma requires beta > 1")
    if not abs(m.z) <= 1:
        raise ValueError("lemma requires |chi10| <= 1")
    threshold = negative_threshold(m, h)
    n = math.floor(threshold)
    n_max = n if n + 1 > threshold else n + 1
    return max(0, n_max)


def negative_base_point(
    cat: CategoryInfo | str, class_index: int
) -> tuple[Fraction, CharMatrix, Fraction]:
    """Walk f_minus from the class seed until the negative-side hypotheses hold.

    Returns the first (c, chi, h) with h < 0, beta > 1 and |chi_10| <= 1;
    these are the per-class base points the lower bound is anchored at.
    """
    c, m, h = seed(cat, class_index)
    for _ in range(64):
        if h < 0 and alpha_beta(m).beta > 1 and abs(m.z) <= 1:
            return c, m, h
        m, h = f_minus(m, h)
        c -= 24
    raise RuntimeError("no valid negative-side base point within 64 steps")


def bound_report(cat: CategoryInfo | str, class_index: int, direction: str) -> BoundReport:
    """Assemble the BoundReport for one (category, class, direction)."""
    cat = category(cat if isinstance(cat, str) else cat.id)
    if direction == "positive":
        c, m, h = seed(cat, class_index)
        return BoundReport(
            cat, c, nmax_positive(m, h), "positive", positive_threshold_witness(m, h)
        )
    if direction == "negative":
        c, m, h = negative_base_point(cat, class_index)
        return BoundReport(
            cat, c, nmax_negative(m, h), "negative", negative_threshold(m, h)
        )
    raise ValueError("direction must be 'positive' or 'negative'")


def c_extremes(cat: CategoryInfo | str) -> tuple[Fraction, Fraction]:
    """(c_min, c_max) for a category, combining its three classes."""
    cat = category(cat if isinstance(cat, str) else cat.id)
    c_max = max(
        (r.class_rep_c + 24 * r.n_max)
        for r in (bound_report(cat, i, "positive") for i in range(3))
    )
    c_min = min(
        (r.class_rep_c - 24 * r.n_max)
        for r in (bound_report(cat, i, "negative") for i in range(3))
    )
    return c_min, c_max


def silly_estimate_holds(
    A: Fraction, B: Fraction, C: Fraction, n: Fraction
) -> bool:
    """Sufficient condition A n^2 > 2 B (1 + C^2) for A n^4 > B (n + C)^2.

    All four arguments must be positive with n >= 1; the caller relies on
    the implication, never on necessity.
    """
    A, B, C, n = (Fraction(v) for v in (A, B, C, n))
    if min(A, B, C, n) <= 0:
        raise ValueError("all arguments must be positive")
    if n < 1:
        raise ValueError("n must be at least 1")
    return A * n * n > 2 * B * (1 + C * C)


def positive_table() -> list[dict]:
    """The 24 positive-side rows (category x class, ascending class c)."""
    rows = []
    for cat in CATALOG:
        for i in range(3):
            c, m, h = seed(cat, i)
            rows.append(
                {
                    "category": cat.id,
                    "c": c,
                    "chi": m,
                    "h_ext": h,
                    "n_max": nmax_positive(m, h),
                }
            )
    return rows


def negative_table() -> list[dict]:
    """The 24 negative-side rows (category x class, descending base c)."""
    rows = []
    for cat in CATALOG:
        for i in reversed(range(3)):
            c, m, h = negative_base_point(cat, i)
            ab = alpha_beta(m)
            rows.append(
                {
                    "category": cat.id,
                    "c": c,
                    "chi": m,
                    "h_ext": h,
                    "alpha": ab.alpha,
                    "beta": ab.beta,
                    "n_max": nmax_negative(m, h),
                    "chi10": m.z,
                }
            )
    return rows
