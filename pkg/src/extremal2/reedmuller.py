"""GF(2) coding engine: Reed-Muller codes and the c = 33 certificates.

Codewords are fixed-length bit vectors; coordinate 1 is the leftmost
printed bit, stored at the most significant position of the backing
integer, so ``Codeword.from_string("0110 ...")`` reads exactly like the
row notation it came from.  Sum is XOR, pointwise product is AND.

The codes in play are RM(1,4) (from its five generator rows), its dual
RM(2,4) (also the span of pairwise products of RM(1,4) words), RM(1,6)
(spanned by the four-fold repetitions of the RM(1,4) basis plus two block
indicators), and RM(4,6) = RM(1,6)^perp.  RM(4,6) has dimension 57 and is
never enumerated: membership goes through either dual orthogonality or
the block characterization

    (a, b, c, d) in RM(4,6)  iff  a+b+c+d in RM(2,4) and
                                  wt(a) = wt(b) = wt(c) = wt(d) (mod 2).

On top of these sit the certification scans: the subcode/doubly-even
conditions (i)-(iv) for words xi = (nu1, nu2, nu3, nu4), the sweep over
weight-6 words of RM(2,4) whose coset xi + RM(1,6) always has weight
enumerator 64 x^28 + 64 x^36, and the explicit word of the construction
whose minimum coset weight 28 certifies twisted-module top weight
28/16 = 7/4.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Codeword",
    "LinearCode",
    "RMCodes",
    "rm_codes",
    "weight_enumerator",
    "rm46_member",
    "rm46_member_dual",
    "min_weight_rm46",
    "Lemma5Report",
    "lemma5_check",
    "Lemma6Report",
    "lemma6_scan",
    "XiCertificate",
    "verify_theorem1_xi",
    "XI_ALPHA",
    "construction_xi",
]

ENUMERATION_LIMIT = 20


@dataclass(frozen=True)
class Codeword:
    """Bit vector of fixed length; bit 1 is the leftmost printed symbol."""

    bits: int
    length: int

    def __post_init__(self) -> None:
        if not 0 <= self.bits < (1 << self.length):
            raise ValueError("bit pattern does not fit the stated length")

    @classmethod
    def from_string(cls, text: str) -> "Codeword":
        clean = text.replace(" ", "")
        if clean.strip("01"):
            raise ValueError(f"not a binary string: {text!r}")
        return cls(int(clean, 2), len(clean))

    @classmethod
    def zero(cls, length: int) -> "Codeword":
        return cls(0, length)

    @classmethod
    def ones(cls, length: int) -> "Codeword":
        return cls((1 << length) - 1, length)

    def bit(self, i: int) -> int:
        """Coordinate i, 1-based from the left."""
        if not 1 <= i <= self.length:
            raise ValueError(f"coordinate {i} out of range 1..{self.length}")
        return (self.bits >> (self.length - i)) & 1

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def _check_partner(self, other: "Codeword") -> None:
        if self.length != other.length:
            raise ValueError("length mismatch")

    def __add__(self, other: "Codeword") -> "Codeword":
        self._check_partner(other)
        return Codeword(self.bits ^ other.bits, self.length)

    def __mul__(self, other: "Codeword") -> "Codeword":
        self._check_partner(other)
        return Codeword(self.bits & other.bits, self.length)

    def dot(self, other: "Codeword") -> int:
        self._check_partner(other)
        return (self.bits & other.bits).bit_count() & 1

    def complement(self) -> "Codeword":
        return Codeword(self.bits ^ ((1 << self.length) - 1), self.length)

    def blocks(self, count: int) -> tuple["Codeword", ...]:
        """Split into ``count`` equal consecutive blocks, leftmost first."""
        if self.length % count:
            raise ValueError("length not divisible by block count")
        size = self.length // count
        mask = (1 << size) - 1
        return tuple(
            Codeword((self.bits >> (size * (count - 1 - i))) & mask, size)
            for i in range(count)
        )

    @classmethod
    def concat(cls, parts: tuple["Codeword", ...]) -> "Codeword":
        bits = 0
        length = 0
        for p in parts:
            bits = (bits << p.length) | p.bits
            length += p.length
        return cls(bits, length)

    def __str__(self) -> str:
        raw = format(self.bits, f"0{self.length}b")
        return " ".join(raw[i : i + 4] for i in range(0, len(raw), 4))


def _reduce_rows(rows: list[int]) -> list[int]:
    """Row-reduce bitmask rows over GF(2); returns echelon rows, MSB pivots."""
    basis: list[int] = []
    for row in rows:
        for b in basis:
            row = min(row, row ^ b)
        if row:
            basis.append(row)
            basis.sort(reverse=True)
    return basis


class LinearCode:
    """Binary linear code presented by independent basis rows."""

    def __init__(self, length: int, basis: list[Codeword]):
        for word in basis:
            if word.length != length:
                raise ValueError("basis word length mismatch")
        reduced = _reduce_rows([w.bits for w in basis])
        if len(reduced) != len(basis):
            raise ValueError("basis rows are linearly dependent")
        self.length = length
        self.basis = tuple(basis)
        self._echelon = tuple(reduced)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __contains__(self, word: Codeword) -> bool:
        if word.length != self.length:
            return False
        bits = word.bits
        for row in self._echelon:
            bits = min(bits, bits ^ row)
        return bits == 0

    def codewords(self) -> list[Codeword]:
        """Full span; guarded so RM(4,6) (dim 57) can never be expanded."""
        if self.dim > ENUMERATION_LIMIT:
            raise ValueError(
                f"enumeration infeasible: dimension {self.dim} > {ENUMERATION_LIMIT}"
            )
        words = [0]
        for row in self._echelon:
            words += [w ^ row for w in words]
        return [Codeword(w, self.length) for w in words]

    def dual(self) -> "LinearCode":
        """The orthogonal code, from the nullspace of the basis matrix."""
        n = self.length
        # Full reduced echelon form: clear every pivot column from the
        # other rows (descending pivot order needs a single pass).
        rows = sorted(self._echelon, reverse=True)
        for i in range(len(rows)):
            pivot_bit = 1 << (rows[i].bit_length() - 1)
            for k in range(len(rows)):
                if k != i and rows[k] & pivot_bit:
                    rows[k] ^= rows[i]
        row_of = {n - r.bit_length(): r for r in rows}  # pivot column -> row
        dual_basis = []
        for free in range(n):
            if free in row_of:
                continue
            bits = 1 << (n - 1 - free)
            for col, r in row_of.items():
                if (r >> (n - 1 - free)) & 1:
                    bits |= 1 << (n - 1 - col)
            dual_basis.append(Codeword(bits, n))
        return LinearCode(n, dual_basis)

    def product(self, other: "LinearCode") -> "LinearCode":
        """Span of all pointwise products of codewords of the two codes."""
        if self.length != other.length:
            raise ValueError("length mismatch")
        products = [
            a.bits & b.bits for a in self.basis for b in other.basis
        ]
        reduced = _reduce_rows(products)
        return LinearCode(self.length, [Codeword(r, self.length) for r in reduced])

    def __repr__(self) -> str:
        return f"LinearCode(length={self.length}, dim={self.dim})"


def weight_enumerator(code: LinearCode) -> dict[int, int]:
    """Exact weight distribution over the full span (dim <= 20)."""
    counts: dict[int, int] = {}
    for word in code.codewords():
        counts[word.weight] = counts.get(word.weight, 0) + 1
    return dict(sorted(counts.items()))


_ALPHA_ROWS = ("1111111111111111", "1111111100000000", "1111000011110000",
               "1100110011001100", "1010101010101010")


@dataclass(frozen=True)
class RMCodes:
    rm14: LinearCode
    rm24: LinearCode
    rm16: LinearCode
    rm46: LinearCode


@lru_cache(maxsize=1)
def rm_codes() -> RMCodes:
    """Build RM(1,4), RM(2,4), RM(1,6) and RM(4,6)."""
    alpha = [Codeword.from_string(r) for r in _ALPHA_ROWS]
    rm14 = LinearCode(16, alpha)
    rm24 = rm14.product(rm14)
    gamma = [Codeword.concat((a, a, a, a)) for a in alpha]
    gamma.append(Codeword.from_string("0" * 16 + "1" * 16 + "0" * 16 + "1" * 16))
    gamma.append(Codeword.from_string("0" * 32 + "1" * 32))
    rm16 = LinearCode(64, gamma)
    rm46 = rm16.dual()
    return RMCodes(rm14, rm24, rm16, rm46)


@lru_cache(maxsize=1)
def _rm24_bitset() -> frozenset[int]:
    return frozenset(w.bits for w in rm_codes().rm24.codewords())


@lru_cache(maxsize=1)
def _rm14_bitset() -> frozenset[int]:
    return frozenset(w.bits for w in rm_codes().rm14.codewords())


@lru_cache(maxsize=1)
def _rm16_words() -> tuple[Codeword, ...]:
    return tuple(rm_codes().rm16.codewords())


def rm46_member(word: Codeword) -> bool:
    """Block characterization of RM(4,6) membership (no enumeration)."""
    if word.length != 64:
        raise ValueError("RM(4,6) words have length 64")
    a, b, c, d = word.blocks(4)
    parity = a.weight & 1
    if any(blk.weight & 1 != parity for blk in (b, c, d)):
        return False
    return (a + b + c + d).bits in _rm24_bitset()


def rm46_member_dual(word: Codeword) -> bool:
    """Reference definition: orthogonality to the RM(1,6) basis."""
    if word.length != 64:
        raise ValueError("RM(4,6) words have length 64")
    return all(word.dot(g) == 0 for g in rm_codes().rm16.basis)


def min_weight_rm46() -> tuple[int, Codeword]:
    """Minimum weight of RM(4,6) with a witness word.

    Exhausts all 43744 words of weight at most 3 (none belong), then
    produces a weight-4 member by planting a weight-4 RM(2,4) word in the
    first block.
    """
    for wt in (1, 2, 3):
        for positions in itertools.combinations(range(64), wt):
            bits = 0
            for p in positions:
                bits |= 1 << (63 - p)
            if rm46_member(Codeword(bits, 64)):
                raise AssertionError(f"unexpected weight-{wt} word in RM(4,6)")
    planted = [w.bits for w in rm_codes().rm24.codewords() if w.weight == 4]
    if not planted:
        raise AssertionError("no weight-4 word in RM(2,4)")
    witness = Codeword(min(planted) << 48, 64)
    if not (rm46_member(witness) and rm46_member_dual(witness)):
        raise AssertionError("witness rejected")
    return 4, witness


@dataclass(frozen=True)
class Lemma5Report:
    """Subcode/doubly-even conditions for xi = (nu1, nu2, nu3, nu4).

    (i)   nu1+nu2+nu3+nu4 in RM(1,4)
    (ii)  nui+nuj in RM(1,4)^perp for all i < j
    (iii) every block has even weight
    (iv)  xi * (a,a,a,a) is doubly even for each RM(1,4) basis word a

    ``subcode_ok`` / ``doubly_even_ok`` are brute-forced over all 128
    elements of RM(1,6) and must satisfy (i & ii & iii) == subcode_ok and
    (i & ii & iii & iv) == doubly_even_ok.
    """

    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    cond_iv: bool
    subcode_ok: bool
    doubly_even_ok: bool

    @property
    def consistent(self) -> bool:
        first3 = self.cond_i and self.cond_ii and self.cond_iii
        return (first3 == self.subcode_ok) and (
            (first3 and self.cond_iv) == self.doubly_even_ok
        )


def lemma5_check(xi: Codeword) -> Lemma5Report:
    """Evaluate conditions (i)-(iv) and their brute-force counterparts."""
    if xi.length != 64:
        raise ValueError("xi must have length 64")
    codes = rm_codes()
    nus = xi.blocks(4)
    total = nus[0] + nus[1] + nus[2] + nus[3]
    cond_i = total.bits in _rm14_bitset()
    cond_ii = all(
        (nus[i] + nus[j]).bits in _rm24_bitset()
        for i in range(4)
        for j in range(i + 1, 4)
    )
    cond_iii = all(nu.weight % 2 == 0 for nu in nus)
    cond_iv = all(
        (xi * g).weight % 4 == 0 for g in codes.rm16.basis[:5]
    )
    products = [xi * g for g in _rm16_words()]
    subcode_ok = all(rm46_member_dual(p) for p in products)
    doubly_even_ok = subcode_ok and all(p.weight % 4 == 0 for p in products)
    return Lemma5Report(cond_i, cond_ii, cond_iii, cond_iv, subcode_ok, doubly_even_ok)


def _coset_enumerator(xi: Codeword) -> dict[int, int]:
    counts: dict[int, int] = {}
    for g in _rm16_words():
        w = (xi + g).weight
        counts[w] = counts.get(w, 0) + 1
    return dict(sorted(counts.items()))


@dataclass(frozen=True)
class Lemma6Report:
    """Sweep over every weight-6 word of RM(2,4)."""

    weight6_count: int
    all_conditions_pass: bool
    all_cosets_match: bool
    coset_enumerator: dict[int, int]


def lemma6_scan() -> Lemma6Report:
    """For every weight-6 alpha in RM(2,4), certify (alpha,alpha,alpha,alpha^c)."""
    expected = {28: 64, 36: 64}
    count = 0
    conditions_ok = True
    cosets_ok = True
    for alpha in rm_codes().rm24.codewords():
        if alpha.weight != 6:
            continue
        count += 1
        xi = Codeword.concat((alpha, alpha, alpha, alpha.complement()))
        report = lemma5_check(xi)
        if not (
            report.cond_i
            and report.cond_ii
            and report.cond_iii
            and report.cond_iv
            and report.doubly_even_ok
        ):
            conditions_ok = False
        if _coset_enumerator(xi) != expected:
            cosets_ok = False
    return Lemma6Report(count, conditions_ok, cosets_ok, expected)


# The explicit weight-6 word of the c = 33 construction.
XI_ALPHA = Codeword.from_string("0110 1100 1010 0000")


def construction_xi() -> Codeword:
    """The 64-bit word (alpha, alpha, alpha, alpha^c) built from XI_ALPHA."""
    return Codeword.concat((XI_ALPHA, XI_ALPHA, XI_ALPHA, XI_ALPHA.complement()))


@dataclass(frozen=True)
class XiCertificate:
    xi: Codeword
    alpha_in_rm24: bool
    alpha_weight: int
    conditions: Lemma5Report
    coset_enumerator: dict[int, int]
    min_coset_weight: int
    top_weight: Fraction


def verify_theorem1_xi() -> XiCertificate:
    """Certificate behind the c = 33 construction: min coset weight 28.

    The minimum of wt(xi + g) over the 128 words g of RM(1,6) divided by
    16 lower-bounds the top weight of the twisted module; equality at
    28/16 = 7/4 is what the construction needs.
    """
    xi = construction_xi()
    enum = _coset_enumerator(xi)
    min_w = min(enum)
    return XiCertificate(
        xi=xi,
        alpha_in_rm24=XI_ALPHA in rm_codes().rm24,
        alpha_weight=XI_ALPHA.weight,
        conditions=lemma5_check(xi),
        coset_enumerator=enum,
        min_coset_weight=min_w,
        top_weight=Fraction(min_w, 16),
    )
