"""Exact truncated Laurent series in q with rational coefficients.

Everything downstream of this module decides integrality and positivity
questions exactly, so no floating point is allowed here.  A series knows
its lowest power ``lead`` and the first untrusted power ``trunc``;
arithmetic shrinks the trusted window instead of erroring.

The module also builds the specific series the classification pipeline
needs: the Eisenstein series E4 and E6, the discriminant form
Delta = (E4^3 - E6^2)/1728, the normalized Hauptmodul
J = E4^3/Delta - 744 (constant term zero), and the weight-minus-two
combination E4*E6/Delta = q^-1 - 240 - 141444q - ... that drives the
character recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction]

__all__ = ["QSeries", "sigma", "eisenstein", "delta", "j_and_script_e"]


@dataclass(frozen=True)
class QSeries:
    """Series sum_{n >= lead} c_n q^n known exactly for lead <= n < trunc.

    ``coeffs[k]`` is the coefficient of ``q^(lead + k)``; the list length
    always equals ``trunc - lead``.  Leading zero coefficients are trimmed
    on construction, so a nonzero series has ``coeffs[0] != 0``.
    """

    lead: int
    coeffs: tuple[Fraction, ...]
    trunc: int

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) != self.trunc - self.lead:
            raise ValueError(
                f"need {self.trunc - self.lead} coefficients for window "
                f"[{self.lead}, {self.trunc}), got {len(coeffs)}"
            )
        lead = self.lead
        while coeffs and coeffs[0] == 0:
            coeffs = coeffs[1:]
            lead += 1
        object.__setattr__(self, "lead", lead)
        object.__setattr__(self, "coeffs", coeffs)

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, trunc: int) -> "QSeries":
        return cls(trunc, (), trunc)

    @classmethod
    def constant(cls, value: Scalar, trunc: int) -> "QSeries":
        return cls.monomial(value, 0, trunc)

    @classmethod
    def monomial(cls, value: Scalar, power: int, trunc: int) -> "QSeries":
        if power >= trunc:
            raise ValueError("monomial power lies beyond the truncation")
        pad = [Fraction(0)] * (trunc - power - 1)
        return cls(power, (Fraction(value), *pad), trunc)

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, n: int) -> Fraction:
        """Coefficient of q^n; zero below the lead, error at or past trunc."""
        if n >= self.trunc:
            raise ValueError(f"coefficient of q^{n} lies beyond trunc={self.trunc}")
        if n < self.lead:
            return Fraction(0)
        return self.coeffs[n - self.lead]

    def truncate(self, new_trunc: int) -> "QSeries":
        """Shrink the trusted window to powers < new_trunc."""
        if new_trunc > self.trunc:
            raise ValueError("cannot extend the trusted window")
        if new_trunc <= self.lead:
            return QSeries.zero(new_trunc)
        return QSeries(self.lead, self.coeffs[: new_trunc - self.lead], new_trunc)

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            n = self.lead + k
            if n == 0:
                parts.append(f"{c}")
            elif n == 1:
                parts.append(f"{c}*q")
            else:
                parts.append(f"{c}*q^{n}")
        body = " + ".join(parts) if parts else "0"
        return f"{body} + O(q^{self.trunc})"

    # -- ring operations --------------------------------------------------

    def _add_scalar(self, s: Scalar) -> "QSeries":
        return self + QSeries.constant(s, self.trunc)

    def __add__(self, other: "QSeries | Scalar") -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self._add_scalar(other)
        lead = min(self.lead, other.lead)
        trunc = min(self.trunc, other.trunc)
        if trunc <= lead:
            return QSeries.zero(trunc)
        out = [
            self.coeff(n) + other.coeff(n) if n < trunc else Fraction(0)
            for n in range(lead, trunc)
        ]
        return QSeries(lead, tuple(out), trunc)

    def __radd__(self, other: Scalar) -> "QSeries":
        return self + other

    def __neg__(self) -> "QSeries":
        return QSeries(self.lead, tuple(-c for c in self.coeffs), self.trunc)

    def __sub__(self, other: "QSeries | Scalar") -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self._add_scalar(-Fraction(other))
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "QSeries":
        return (-self) + other

    def __mul__(self, other: "QSeries | Scalar") -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return QSeries(
                self.lead, tuple(Fraction(other) * c for c in self.coeffs), self.trunc
            )
        # The first unknown power of the product is governed by the first
        # unknown power of either factor shifted by the other's lead.
        trunc = min(self.trunc + other.lead, other.trunc + self.lead)
        lead = self.lead + other.lead
        if self.is_zero() or other.is_zero() or trunc <= lead:
            return QSeries.zero(trunc)
        out = [Fraction(0)] * (trunc - lead)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                k = i + j
                if k >= len(out):
                    break
                out[k] += a * b
        return QSeries(lead, tuple(out), trunc)

    def __rmul__(self, other: Scalar) -> "QSeries":
        return self * other

    def __pow__(self, n: int) -> "QSeries":
        if n < 0:
            return self.invert() ** (-n)
        if n == 0:
            return QSeries.constant(1, self.trunc - self.lead)
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def invert(self) -> "QSeries":
        """Multiplicative inverse b with self*b = 1 through the window.

        Standard long division against the leading coefficient; requires a
        nonzero leading coefficient.
        """
        if self.is_zero():
            raise ValueError("not invertible: zero series")
        a = self.coeffs
        k = len(a)
        b = [Fraction(0)] * k
        b[0] = 1 / a[0]
        for m in range(1, k):
            acc = Fraction(0)
            for i in range(1, m + 1):
                acc += a[i] * b[m - i]
            b[m] = -acc / a[0]
        lead = -self.lead
        return QSeries(lead, tuple(b), lead + k)

    def __truediv__(self, other: "QSeries | Scalar") -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        return self * other.invert()


def sigma(n: int, k: int) -> int:
    """Divisor power sum sigma_k(n) by trial division."""
    if n < 1:
        raise ValueError("sigma is defined for n >= 1")
    total = 0
    d = 1
    while d * d <= n:
        if n % d == 0:
            total += d**k
            e = n // d
            if e != d:
                total += e**k
        d += 1
    return total


def eisenstein(k: int, n_terms: int) -> QSeries:
    """Eisenstein series E4 or E6 with ``n_terms`` exact coefficients.

    E4 = 1 + 240 sum sigma_3(n) q^n and E6 = 1 - 504 sum sigma_5(n) q^n.
    """
    if k not in (4, 6):
        raise ValueError("only weights 4 and 6 are supported")
    if n_terms < 1:
        raise ValueError("need at least one term")
    mult, power = (240, 3) if k == 4 else (-504, 5)
    coeffs = [Fraction(1)]
    coeffs += [Fraction(mult * sigma(n, power)) for n in range(1, n_terms)]
    return QSeries(0, tuple(coeffs), n_terms)


def delta(n_terms: int) -> QSeries:
    """The discriminant form (E4^3 - E6^2)/1728, leading term q."""
    e4 = eisenstein(4, n_terms)
    e6 = eisenstein(6, n_terms)
    return (e4**3 - e6**2) / 1728


def j_and_script_e(n_terms: int) -> tuple[QSeries, QSeries]:
    """The pair (J, E) with ``n_terms`` coefficients each from q^-1 on.

    J = E4^3/Delta - 744 has vanishing constant term and first positive
    coefficient 196884; E = E4*E6/Delta starts q^-1 - 240 - 141444q.
    """
    if n_terms < 2:
        raise ValueError("need at least two terms")
    m = n_terms + 2
    e4 = eisenstein(4, m)
    e6 = eisenstein(6, m)
    dlt = (e4**3 - e6**2) / 1728
    inv = dlt.invert()
    j = e4**3 * inv - 744
    script_e = e4 * e6 * inv
    return j.truncate(n_terms - 1), script_e.truncate(n_terms - 1)
