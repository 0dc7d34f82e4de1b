from __future__ import annotations

import random
from fractions import Fraction

import pytest

from extremal2.chimat import CharMatrix

# Filled by the acceptance tests; printed after the run so the one-line
# per-criterion report survives pytest's output capture.
ACCEPTANCE_REPORT: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_REPORT:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_REPORT:
            terminalreporter.write_line(line)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(0x5EED)


def random_fraction(rng: random.Random, span: int = 300, den: int = 12) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, den))


def random_noninteger_h(rng: random.Random) -> Fraction:
    q = rng.randint(2, 7)
    p = rng.randint(1, q - 1)
    return rng.randint(-6, 6) + Fraction(p, q)


def random_charmatrix(rng: random.Random) -> CharMatrix:
    def nonzero() -> Fraction:
        while True:
            v = random_fraction(rng)
            if v != 0:
                return v

    return CharMatrix(random_fraction(rng), nonzero(), nonzero(), random_fraction(rng))
