"""Truncated formal power series over GF(2).

A series is stored as a single Python integer whose bit ``n`` is the
coefficient of ``q^n``, together with an explicit ``precision`` (the number
of known coefficients).  Arithmetic never invents unknown coefficients:
results carry the minimum precision of their operands.

The module also provides the two generators everything else is built from:
``delta`` (the weight-12 cusp form reduced mod 2, whose expansion has a
coefficient 1 exactly at the odd squares) and its ``q -> q^p`` substitution.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import PrecisionTooLow

__all__ = [
    "BitSeries",
    "clmul",
    "spread_bits",
    "zero",
    "one",
    "delta",
    "delta_qpow",
]

# Below this popcount a plain shift-xor loop beats the numpy round trip.
_SPREAD_LOOP_LIMIT = 512


def clmul(a: int, b: int) -> int:
    """Carry-less (GF(2)) product of two coefficient masks.

    Iterates over the set bits of the sparser operand, so dense-by-sparse
    products cost one big xor per set bit.
    """
    if a.bit_count() > b.bit_count():
        a, b = b, a
    acc = 0
    while a:
        low = a & -a
        acc ^= b << (low.bit_length() - 1)
        a ^= low
    return acc


def spread_bits(mask: int, factor: int, limit: int | None = None) -> int:
    """Move every set bit ``n`` to position ``n * factor``.

    This is the exponent map behind squaring (``factor=2``) and the
    ``q -> q^p`` substitution (``factor=p``).  ``limit`` truncates the result
    to bits below ``limit``.
    """
    if factor == 1:
        return mask if limit is None else mask & ((1 << limit) - 1)
    if limit is not None:
        # Source bits at n >= ceil(limit/factor) land beyond the cut.
        mask &= (1 << ((limit + factor - 1) // factor)) - 1
    if mask == 0:
        return 0
    if mask.bit_count() <= _SPREAD_LOOP_LIMIT:
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << ((low.bit_length() - 1) * factor)
            mask ^= low
        return out if limit is None else out & ((1 << limit) - 1)
    nbits = mask.bit_length()
    src = np.frombuffer(mask.to_bytes((nbits + 7) // 8, "little"), np.uint8)
    idx = np.nonzero(np.unpackbits(src, bitorder="little"))[0].astype(np.int64)
    idx *= factor
    if limit is not None:
        idx = idx[idx < limit]
    size = int(idx[-1]) + 1
    bits = np.zeros(size, np.uint8)
    bits[idx] = 1
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


@dataclass(frozen=True, slots=True)
class BitSeries:
    """A power series over GF(2) known up to (excluding) ``precision``."""

    bits: int
    precision: int

    def __post_init__(self) -> None:
        if self.precision < 1:
            raise ValueError("precision must be >= 1")
        if self.bits < 0 or self.bits >> self.precision:
            raise ValueError("coefficients set beyond the stated precision")

    def coeff(self, n: int) -> int:
        """Coefficient of ``q^n``; asking past the precision is an error."""
        if n < 0 or n >= self.precision:
            raise PrecisionTooLow(f"coefficient {n} unknown at precision {self.precision}")
        return (self.bits >> n) & 1

    def support(self) -> tuple[int, ...]:
        """Exponents of the nonzero coefficients, ascending."""
        out = []
        m = self.bits
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return tuple(out)

    def truncate(self, precision: int) -> "BitSeries":
        if precision > self.precision:
            raise PrecisionTooLow(f"cannot extend precision {self.precision} to {precision}")
        return BitSeries(self.bits & ((1 << precision) - 1), precision)

    def is_zero(self) -> bool:
        return self.bits == 0

    def __bool__(self) -> bool:
        return self.bits != 0

    def __add__(self, other: "BitSeries") -> "BitSeries":
        prec = min(self.precision, other.precision)
        return BitSeries((self.bits ^ other.bits) & ((1 << prec) - 1), prec)

    def __mul__(self, other: "BitSeries") -> "BitSeries":
        prec = min(self.precision, other.precision)
        return BitSeries(clmul(self.bits, other.bits) & ((1 << prec) - 1), prec)

    def square(self) -> "BitSeries":
        """Frobenius square: the exponent-doubling bit spread, truncated."""
        return BitSeries(spread_bits(self.bits, 2, self.precision), self.precision)

    def pow(self, k: int) -> "BitSeries":
        """k-th power by a square-and-multiply chain (squares are cheap)."""
        if k < 0:
            raise ValueError("negative powers are not defined for series")
        if k == 0:
            return one(self.precision)
        acc = self
        for i in range(k.bit_length() - 2, -1, -1):
            acc = acc.square()
            if (k >> i) & 1:
                acc = acc * self
        return acc


def zero(precision: int) -> BitSeries:
    return BitSeries(0, precision)


def one(precision: int) -> BitSeries:
    """The constant series 1."""
    return BitSeries(1, precision)


def delta(precision: int) -> BitSeries:
    """The cusp-form generator: coefficient 1 exactly at odd squares."""
    if precision < 1:
        raise ValueError("precision must be >= 1")
    bits = 0
    m = 1
    while m * m < precision:
        bits |= 1 << (m * m)
        m += 2
    return BitSeries(bits, precision)


def delta_qpow(p: int, precision: int) -> BitSeries:
    """The generator with ``q`` replaced by ``q^p``: bits at ``p * m**2``, m odd."""
    if p < 1:
        raise ValueError("p must be >= 1")
    if precision < 1:
        raise ValueError("precision must be >= 1")
    bits = 0
    m = 1
    while p * m * m < precision:
        bits |= 1 << (p * m * m)
        m += 2
    return BitSeries(bits, precision)
