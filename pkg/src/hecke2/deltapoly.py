"""Polynomials in the cusp-form generator over GF(2).

The ambient space of level-1 modular forms mod 2 is the polynomial ring in
Delta; a form is stored as the set of its exponents, packed into one integer
(bit ``k`` set means the monomial ``Delta^k`` is present).  Addition is the
symmetric difference of exponent sets, multiplication is the carry-less
product shared with the series kernel.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import NotAPolynomial, PrecisionTooLow, ZeroPolynomial
from .gf2series import BitSeries, clmul, delta, spread_bits

__all__ = [
    "DeltaPoly",
    "FormDecomposition",
    "Parity",
    "ZERO",
    "ONE",
    "monomial",
    "to_series",
    "from_series",
    "decompose",
]


class Parity(enum.Enum):
    ZERO = "zero"
    EVEN = "even"
    ODD = "odd"
    MIXED = "mixed"


_EVEN_BITS = None  # lazily built alternating mask, grown on demand
_EVEN_BITS_LEN = 0


def _even_mask(nbits: int) -> int:
    """0b...0101 mask covering at least nbits positions."""
    global _EVEN_BITS, _EVEN_BITS_LEN
    if _EVEN_BITS_LEN < nbits:
        words = (nbits + 63) // 64
        _EVEN_BITS = int.from_bytes(b"\x55" * (words * 8), "little")
        _EVEN_BITS_LEN = words * 64
    return _EVEN_BITS


@dataclass(frozen=True, slots=True)
class DeltaPoly:
    """A GF(2) polynomial in Delta, stored as a packed exponent set."""

    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValueError("exponent mask must be nonnegative")

    @classmethod
    def from_exponents(cls, exponents) -> "DeltaPoly":
        mask = 0
        for e in exponents:
            if e < 0:
                raise ValueError("exponents must be nonnegative")
            mask ^= 1 << e
        return cls(mask)

    @property
    def degree(self) -> int:
        if self.mask == 0:
            raise ZeroPolynomial("the zero polynomial has no degree")
        return self.mask.bit_length() - 1

    def exponents(self) -> tuple[int, ...]:
        out = []
        m = self.mask
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return tuple(out)

    def __bool__(self) -> bool:
        return self.mask != 0

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, exponent: int) -> bool:
        return exponent >= 0 and (self.mask >> exponent) & 1 == 1

    def __add__(self, other: "DeltaPoly") -> "DeltaPoly":
        return DeltaPoly(self.mask ^ other.mask)

    def __mul__(self, other: "DeltaPoly") -> "DeltaPoly":
        return DeltaPoly(clmul(self.mask, other.mask))

    def square(self) -> "DeltaPoly":
        return DeltaPoly(spread_bits(self.mask, 2))

    def frobenius(self, s: int = 1) -> "DeltaPoly":
        """The 2^s-th power: every exponent scaled by 2^s."""
        if s < 0:
            raise ValueError("s must be nonnegative")
        return DeltaPoly(spread_bits(self.mask, 1 << s))

    def pow(self, k: int) -> "DeltaPoly":
        if k < 0:
            raise ValueError("negative powers are not defined")
        if k == 0:
            return ONE
        acc = self
        for i in range(k.bit_length() - 2, -1, -1):
            acc = acc.square()
            if (k >> i) & 1:
                acc = acc * self
        return acc

    def parity_class(self) -> Parity:
        if self.mask == 0:
            return Parity.ZERO
        even = self.mask & _even_mask(self.mask.bit_length())
        if even == self.mask:
            return Parity.EVEN
        if even == 0:
            return Parity.ODD
        return Parity.MIXED

    def render(self) -> str:
        """Text form ``x^a + x^b`` with exponents strictly decreasing."""
        if self.mask == 0:
            return "0"
        return " + ".join(f"x^{e}" for e in reversed(self.exponents()))

    def __str__(self) -> str:
        return self.render()


ZERO = DeltaPoly(0)
ONE = DeltaPoly(1)


def monomial(exponent: int) -> DeltaPoly:
    if exponent < 0:
        raise ValueError("exponents must be nonnegative")
    return DeltaPoly(1 << exponent)


@dataclass(frozen=True, slots=True)
class FormDecomposition:
    """2-adic splitting ``f = [1] + sum_s part_s^(2^s)`` with odd parts."""

    has_constant: bool
    components: tuple[tuple[int, DeltaPoly], ...]

    def reassemble(self) -> DeltaPoly:
        mask = 1 if self.has_constant else 0
        for s, part in self.components:
            mask ^= spread_bits(part.mask, 1 << s)
        return DeltaPoly(mask)


def decompose(f: DeltaPoly) -> FormDecomposition:
    """Group the exponents of ``f`` by their 2-adic valuation.

    Component ``s`` collects ``{k >> s : v2(k) = s}``; each part has only odd
    exponents and the reassembly identity is exact.
    """
    groups: dict[int, int] = {}
    has_constant = 0 in f
    m = f.mask & ~1
    while m:
        low = m & -m
        e = low.bit_length() - 1
        s = (e & -e).bit_length() - 1
        groups[s] = groups.get(s, 0) | (1 << (e >> s))
        m ^= low
    components = tuple((s, DeltaPoly(groups[s])) for s in sorted(groups))
    return FormDecomposition(has_constant, components)


def to_series(f: DeltaPoly, precision: int) -> BitSeries:
    """Expand ``f`` as a q-series to the given precision."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    d = delta(precision)
    gap_powers: dict[int, BitSeries] = {}
    acc = 0
    cur: BitSeries | None = None
    last = 0
    for e in f.exponents():
        if cur is None:
            cur = d.pow(e)
        else:
            gap = e - last
            step = gap_powers.get(gap)
            if step is None:
                step = gap_powers[gap] = d.pow(gap)
            cur = cur * step
        last = e
        acc ^= cur.bits
    return BitSeries(acc, precision)


def from_series(f: BitSeries, max_deg: int) -> DeltaPoly:
    """Recover the unique polynomial of degree <= ``max_deg`` matching ``f``.

    Peels off the least nonzero coefficient ``j`` (each power of the
    generator starts with ``q^j``), so the residual's valuation strictly
    increases.  A residual term with ``j > max_deg`` means no polynomial in
    the degree budget matches the known coefficients; non-membership beyond
    the supplied precision is not decidable, so a match here only certifies
    agreement on the known window.
    """
    if max_deg < 0:
        raise ValueError("max_deg must be nonnegative")
    if f.precision < max_deg + 1:
        raise PrecisionTooLow(
            f"precision {f.precision} cannot pin down degree <= {max_deg}"
        )
    d = delta(f.precision)
    gap_powers: dict[int, int] = {}
    residual = f.bits
    mask = 0
    cur = 1  # expansion of the current generator power
    last = 0
    while residual:
        j = (residual & -residual).bit_length() - 1
        if j > max_deg:
            raise NotAPolynomial(
                f"residual term q^{j} exceeds the degree bound {max_deg}"
            )
        gap = j - last
        step = gap_powers.get(gap)
        if step is None:
            step = gap_powers[gap] = d.pow(gap).bits
        cur = clmul(cur, step) & ((1 << f.precision) - 1)
        last = j
        mask ^= 1 << j
        residual ^= cur
    return DeltaPoly(mask)
