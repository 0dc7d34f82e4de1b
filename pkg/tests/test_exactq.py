from __future__ import annotations

from fractions import Fraction

import pytest

from extremal2.exactq import QSeries, delta, eisenstein, j_and_script_e, sigma

from conftest import random_fraction


# ---------------------------------------------------------------------------
# independent oracles


def sigma_oracle(n: int, k: int) -> int:
    return sum(d**k for d in range(1, n + 1) if n % d == 0)


def convolve_oracle(a: list[Fraction], b: list[Fraction], terms: int) -> list[Fraction]:
    out = [Fraction(0)] * terms
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            if i + j < terms:
                out[i + j] += ai * bj
    return out


def long_division_oracle(a: list[Fraction], terms: int) -> list[Fraction]:
    """Coefficients of 1/sum(a_i u^i) with a_0 != 0, by schoolbook division."""
    b = [Fraction(0)] * terms
    b[0] = 1 / a[0]
    for m in range(1, terms):
        acc = Fraction(0)
        for i in range(1, m + 1):
            if i < len(a):
                acc += a[i] * b[m - i]
        b[m] = -acc / a[0]
    return b


def eta24_oracle(terms: int) -> list[Fraction]:
    """Coefficients of prod (1 - q^n)^24 by repeated polynomial multiplication."""
    out = [Fraction(0)] * terms
    out[0] = Fraction(1)
    for n in range(1, terms):
        factor = [Fraction(0)] * terms
        factor[0] = Fraction(1)
        if n < terms:
            factor[n] = Fraction(-1)
        for _ in range(24):
            out = convolve_oracle(out, factor, terms)
    return out


# ---------------------------------------------------------------------------
# series plumbing


def test_addition_merges_windows():
    a = QSeries(-1, (Fraction(1), Fraction(1)), 1)  # q^-1 + 1
    b = QSeries(0, (Fraction(1),), 1)  # 1
    total = a + b
    assert (total.lead, total.coeffs, total.trunc) == (-1, (Fraction(1), Fraction(2)), 1)


def test_monomial_product_adds_exponents():
    a = QSeries.monomial(1, -1, 3)
    b = QSeries.monomial(1, 1, 3)
    prod = a * b
    assert prod.coeff(0) == 1 and prod.lead == 0


def test_leading_zeros_are_trimmed():
    s = QSeries(0, (Fraction(0), Fraction(2), Fraction(0)), 3)
    assert s.lead == 1 and s.coeffs == (Fraction(2), Fraction(0))


def test_coeff_beyond_trunc_raises():
    s = QSeries.constant(1, 4)
    with pytest.raises(ValueError, match="beyond trunc"):
        s.coeff(4)


def test_mul_truncation_rule():
    a = QSeries(-1, tuple(Fraction(1) for _ in range(4)), 3)
    b = QSeries(2, tuple(Fraction(1) for _ in range(3)), 5)
    assert (a * b).trunc == min(a.trunc + b.lead, b.trunc + a.lead)


def test_geometric_series_inversion():
    one_minus_q = QSeries(0, (Fraction(1), Fraction(-1)) + (Fraction(0),) * 4, 6)
    inv = one_minus_q.invert()
    assert inv.coeffs == tuple(Fraction(1) for _ in range(6))


def test_invert_monomial():
    q = QSeries.monomial(1, 1, 4)
    assert q.invert().lead == -1
    assert q.invert().coeff(-1) == 1


def test_invert_zero_leading_coefficient_rejected():
    with pytest.raises(ValueError, match="not invertible"):
        QSeries.zero(3).invert()


def test_mul_inverse_roundtrip_on_random_series(rng):
    for _ in range(50):
        lead = rng.randint(-3, 3)
        coeffs = [random_fraction(rng) for _ in range(6)]
        while coeffs[0] == 0:
            coeffs[0] = random_fraction(rng)
        s = QSeries(lead, tuple(coeffs), lead + 6)
        prod = s * s.invert()
        assert prod.lead == 0 and prod.coeff(0) == 1
        assert all(prod.coeff(n) == 0 for n in range(1, prod.trunc))


# ---------------------------------------------------------------------------
# the arithmetic the pipeline needs


def test_sigma_against_bruteforce():
    for n in range(1, 65):
        for k in (3, 5):
            assert sigma(n, k) == sigma_oracle(n, k)


def test_eisenstein_small_expansions():
    assert eisenstein(4, 3).coeffs == (1, 240 * sigma_oracle(1, 3), 240 * sigma_oracle(2, 3))
    assert eisenstein(4, 3).coeffs == (1, 240, 2160)
    assert eisenstein(6, 2).coeffs == (1, -504 * sigma_oracle(1, 5))
    assert eisenstein(4, 1).coeffs == (Fraction(1),)


def test_eisenstein_validates_arguments():
    with pytest.raises(ValueError):
        eisenstein(8, 3)
    with pytest.raises(ValueError):
        eisenstein(4, 0)


def test_e4_times_e6_matches_convolution_oracle():
    e4 = eisenstein(4, 3)
    e6 = eisenstein(6, 3)
    expected = convolve_oracle(list(e4.coeffs), list(e6.coeffs), 3)
    assert list((e4 * e6).coeffs) == expected
    assert expected == [1, -264, -135432]


def test_delta_is_integral_with_lead_one():
    d = delta(10)
    assert d.lead == 1
    assert all(c.denominator == 1 for c in d.coeffs)


def test_delta_matches_eta_power_oracle():
    d = delta(8)
    expected = eta24_oracle(7)  # prod (1-q^n)^24, to be shifted by q
    assert [d.coeff(n) for n in range(1, 8)] == expected


def test_j_and_script_e_printed_coefficients():
    j, e = j_and_script_e(3)
    assert (j.coeff(-1), j.coeff(0), j.coeff(1)) == (1, 0, 196884)
    assert (e.coeff(-1), e.coeff(0), e.coeff(1)) == (1, -240, -141444)


def test_script_e_inverse_against_long_division_oracle():
    _, e = j_and_script_e(6)
    inv = e.invert()
    # divide out the q^-1: 1/E = q * (1 / (1 - 240q - 141444q^2 - ...))
    expected = long_division_oracle(list(e.coeffs), 4)
    assert [inv.coeff(n) for n in range(1, 5)] == expected
    assert expected[:3] == [1, 240, 199044]


def test_script_e_is_e4e6_over_delta():
    _, e = j_and_script_e(8)
    d = delta(12)
    e4e6 = eisenstein(4, 10) * eisenstein(6, 10)
    prod = e * d
    assert all(prod.coeff(n) == e4e6.coeff(n) for n in range(0, prod.trunc))


def test_j_needs_two_terms():
    with pytest.raises(ValueError):
        j_and_script_e(1)
