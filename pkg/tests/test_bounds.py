from __future__ import annotations

import json
import math
from fractions import Fraction
from importlib import resources

import pytest

from extremal2.bounds import (
    bound_report,
    c_extremes,
    negative_base_point,
    negative_threshold,
    nmax_negative,
    nmax_positive,
    positive_table,
    negative_table,
    positive_threshold_witness,
    silly_estimate_holds,
)
from extremal2.chimat import CharMatrix, alpha_beta, f_minus, iterate, seed, seed_rows
from extremal2.genus import CATALOG, category

from conftest import random_fraction

F = Fraction


def fixture(name: str):
    return json.loads(
        resources.files("extremal2").joinpath("fixtures", name).read_text()
    )["rows"]


GOLDEN_EXTREMES = {
    "semion": (F(-23), F(57)),
    "semion-bar": (F(-17), F(39)),
    "semion-dagger": (F(-13), F(67)),
    "semion-bar-dagger": (F(-19), F(37)),
    "fib": (F(-106, 5), F(174, 5)),
    "fib-bar": (F(-94, 5), F(186, 5)),
    "yang-lee": (F(-62, 5), F(338, 5)),
    "yang-lee-bar": (F(-98, 5), F(222, 5)),
}


# ---------------------------------------------------------------------------
# positive side


def test_nmax_positive_examples():
    assert nmax_positive(CharMatrix(3, 26752, 2, -247), F(1, 4)) == 0
    assert nmax_positive(CharMatrix(251, 26752, 2, 1), F(1, 4)) == 2
    assert nmax_positive(CharMatrix(-245, 1, 26999, 1), F(9, 5)) == 2


def test_nmax_positive_requires_positive_h():
    with pytest.raises(ValueError, match="h_ext > 0"):
        nmax_positive(CharMatrix(3, 26752, 2, -247), F(-1, 4))


def test_positive_threshold_witness_values():
    # chi(1): threshold (64 + sqrt(6256))/480 = 0.2981..., quoted as 0.298
    w = positive_threshold_witness(CharMatrix(3, 26752, 2, -247), F(1, 4))
    assert math.floor(w * 1000) == 298
    # the yang-lee-bar class seed has a perfect-square radicand: threshold exactly 1
    w = positive_threshold_witness(CharMatrix(-55, 32509, 11, 59), F(1, 5))
    assert w == 1
    assert nmax_positive(CharMatrix(-55, 32509, 11, 59), F(1, 5)) == 1


def test_positive_witness_consistent_with_nmax():
    """n_max is the least n with n + 1 strictly above the threshold witness."""
    for cat in CATALOG:
        for _, m, h in seed_rows(cat):
            n_max = nmax_positive(m, h)
            w = positive_threshold_witness(m, h)
            assert n_max + 1 > w
            assert n_max == 0 or n_max <= w  # w is an upper bound on the root


def test_positive_table_matches_fixture():
    got = [
        {
            "category": r["category"],
            "c": str(r["c"]),
            "chi": r["chi"].to_json(),
            "h_ext": str(r["h_ext"]),
            "n_max": r["n_max"],
        }
        for r in positive_table()
    ]
    assert got == fixture("nmax_positive.json")


def test_bound_is_not_vacuous():
    """One step past n_max the diagonal really is negative."""
    for cat in CATALOG:
        for c, m, h in seed_rows(cat):
            n_max = nmax_positive(m, h)
            out, _ = iterate(m, h, n_max + 1)
            assert out.x < 0


def test_quadratic_nonnegative_somewhere_when_nmax_positive():
    """n_max > 0 only when the absolute-coefficient quadratic is >= 0 at some n <= n_max."""
    for cat in CATALOG:
        for _, m, h in seed_rows(cat):
            n_max = nmax_positive(m, h)
            if n_max == 0:
                continue
            big_m = abs(m.x + m.w - 240 * (h - 1))
            const = abs((h - 1) * m.x)
            assert any(
                -240 * n * n + big_m * n + const >= 0 for n in range(1, n_max + 1)
            )


# ---------------------------------------------------------------------------
# negative side


def test_nmax_negative_example_chi_minus23():
    m = CharMatrix(F(713, 11), F(57264144384, 11), F(1, 26752), F(-3397, 11))
    assert nmax_negative(m, F(-7, 4)) == 0
    t = negative_threshold(m, F(-7, 4))
    assert t == F(6, 43)  # = 0.1395..., quoted as 0.13
    assert math.floor(t * 100) == 13


def test_nmax_negative_zero_threshold_synthetic():
    # alpha = 120(1 - h) makes the threshold exactly zero
    h = F(-3, 4)
    alpha = 120 * (1 - h)
    m = CharMatrix(alpha, 4, F(1, 2), 0)  # x - w = alpha, beta = 2 > 1, |z| <= 1
    assert alpha_beta(m).alpha == alpha
    assert negative_threshold(m, h) == 0
    assert nmax_negative(m, h) == 0


def test_nmax_negative_precondition_errors():
    good = CharMatrix(F(713, 11), F(57264144384, 11), F(1, 26752), F(-3397, 11))
    with pytest.raises(ValueError, match="h_ext < 0"):
        nmax_negative(good, F(1, 4))
    with pytest.raises(ValueError, match="beta > 1"):
        nmax_negative(CharMatrix(1, 1, F(1, 2), 0), F(-1, 4))
    with pytest.raises(ValueError, match="chi10"):
        nmax_negative(CharMatrix(1, 400, 2, 0), F(-1, 4))


def test_negative_table_matches_fixture_and_all_zero():
    rows = negative_table()
    got = [
        {
            "category": r["category"],
            "c": str(r["c"]),
            "chi": r["chi"].to_json(),
            "h_ext": str(r["h_ext"]),
            "alpha": str(r["alpha"]),
            "beta": str(r["beta"]),
            "n_max": r["n_max"],
            "chi10": str(r["chi10"]),
        }
        for r in rows
    ]
    assert got == fixture("nmax_negative.json")
    assert all(r["n_max"] == 0 for r in rows)


def test_negative_base_points_are_one_step_down():
    for cat in CATALOG:
        for i in range(3):
            c_seed, _, h_seed = seed(cat, i)
            c, m, h = negative_base_point(cat, i)
            assert c == c_seed - 24
            assert h == h_seed - 2 and h < 0
            assert alpha_beta(m).beta > 1 and abs(m.z) <= 1


def test_chi10_stays_small_under_further_descent():
    """|chi_10| < 1 for five more reverse steps from every base point."""
    for cat in CATALOG:
        for i in range(3):
            _, m, h = negative_base_point(cat, i)
            state = (m, h)
            for _ in range(5):
                state = f_minus(*state)
                assert abs(state[0].z) < 1
                assert state[0].z != 0


# ---------------------------------------------------------------------------
# combined window and the simple estimate


def test_c_extremes_golden_values():
    for cat in CATALOG:
        assert c_extremes(cat) == GOLDEN_EXTREMES[cat.id]


def test_bound_report_serializes():
    rep = bound_report("semion", 0, "negative")
    data = rep.to_json()
    assert data["category"] == "semion"
    assert data["class_rep_c"] == "-23"
    assert data["n_max"] == 0
    assert F(data["threshold_witness"]) == F(6, 43)
    with pytest.raises(ValueError):
        bound_report("semion", 0, "sideways")


def test_silly_estimate_examples():
    assert silly_estimate_holds(F(3), F(1), F(1), F(2))
    assert 3 * 2**4 > 1 * (2 + 1) ** 2
    assert not silly_estimate_holds(F(1), F(1), F(1), F(1))


def test_silly_estimate_rejects_bad_arguments():
    with pytest.raises(ValueError):
        silly_estimate_holds(F(1), F(-1), F(1), F(2))
    with pytest.raises(ValueError):
        silly_estimate_holds(F(1), F(1), F(1), F(1, 2))


def test_silly_estimate_implication_on_randoms(rng):
    hits = 0
    for _ in range(400):
        A = abs(random_fraction(rng)) + 1
        B = abs(random_fraction(rng, span=20, den=5)) + F(1, 7)
        C = abs(random_fraction(rng, span=3, den=4)) + F(1, 7)
        n = 1 + abs(random_fraction(rng, span=8, den=5))
        if silly_estimate_holds(A, B, C, n):
            hits += 1
            assert A * n**4 > B * (n + C) ** 2
    assert hits > 50  # the positive branch is actually exercised
