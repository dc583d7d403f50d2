import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hecke2.deltapoly import (
    ONE,
    ZERO,
    DeltaPoly,
    Parity,
    decompose,
    from_series,
    to_series,
)
from hecke2.errors import NotAPolynomial, PrecisionTooLow, ZeroPolynomial
from hecke2.gf2series import BitSeries, delta, zero


def poly(*exponents):
    return DeltaPoly.from_exponents(exponents)


def test_to_series_basics():
    assert to_series(poly(1), 30) == delta(30)
    assert to_series(ZERO, 10) == zero(10)
    cube = to_series(poly(3), 12)
    assert cube.coeff(3) == 1 and cube.coeff(11) == 1
    d = delta(12)
    assert cube == d * d * d


def test_from_series_round_trips():
    assert from_series(to_series(poly(1, 3), 40), 5) == poly(1, 3)
    assert from_series(delta(40).square(), 4) == poly(2)


def test_from_series_rejects_non_polynomial():
    # q^2 + q^3 padded with zeros; at precision 10 it is still matched by
    # x^2 + x^3 (whose next expansion term is q^11), so the mismatch only
    # becomes visible from precision 12 on
    assert from_series(BitSeries(0b1100, 10), 5) == poly(2, 3)
    target = BitSeries(0b1100, 16)
    for bits in range(64):  # no degree <= 5 polynomial matches
        cand = DeltaPoly(bits)
        assert to_series(cand, 16) != target
    with pytest.raises(NotAPolynomial):
        from_series(target, 5)


def test_from_series_requires_precision():
    with pytest.raises(PrecisionTooLow):
        from_series(delta(5), 5)


def test_add_mul_examples():
    assert poly(1, 3) + poly(3, 5) == poly(1, 5)
    assert poly(1) * poly(4) == poly(5)
    assert poly(4, 2) * poly(4) == poly(8, 6)


def test_parity_classes():
    assert ZERO.parity_class() is Parity.ZERO
    assert poly(4, 12).parity_class() is Parity.EVEN
    assert poly(1, 4).parity_class() is Parity.MIXED
    assert poly(1, 3).parity_class() is Parity.ODD
    assert ONE.parity_class() is Parity.EVEN


def test_degree():
    assert poly(5, 2).degree == 5
    with pytest.raises(ZeroPolynomial):
        ZERO.degree


def test_decompose_examples():
    dec = decompose(poly(2, 3))
    assert not dec.has_constant
    assert dec.components == ((0, poly(3)), (1, poly(1)))

    dec = decompose(poly(0, 5))
    assert dec.has_constant
    assert dec.components == ((0, poly(5)),)

    dec = decompose(poly(12))
    assert dec.components == ((2, poly(3)),)


def test_render():
    assert poly(13, 5).render() == "x^13 + x^5"
    assert ZERO.render() == "0"
    assert ONE.render() == "x^0"
    assert str(poly(1)) == "x^1"


def test_frobenius_and_pow():
    f = poly(1, 3)
    assert f.square() == poly(2, 6)
    assert f.frobenius(2) == poly(4, 12)
    assert f.pow(0) == ONE
    assert f.pow(1) == f
    assert f.pow(3) == f * f * f


def test_exponent_container_protocol():
    f = poly(0, 7)
    assert 0 in f and 7 in f and 3 not in f
    assert len(f) == 2
    assert f.exponents() == (0, 7)


masks = st.integers(min_value=0, max_value=(1 << 128) - 1)


@given(masks)
def test_round_trip_property(mask):
    f = DeltaPoly(mask)
    d = f.degree if f else 0
    assert from_series(to_series(f, d + 1), d) == f


@settings(max_examples=60, deadline=None)
@given(st.integers(0, (1 << 48) - 1), st.integers(0, (1 << 48) - 1))
def test_expansion_is_ring_homomorphism(a, b):
    f, g = DeltaPoly(a), DeltaPoly(b)
    n = 120
    assert to_series(f * g, n) == to_series(f, n) * to_series(g, n)
    assert to_series(f + g, n) == to_series(f, n) + to_series(g, n)


@given(masks)
def test_decompose_reassembles(mask):
    f = DeltaPoly(mask)
    dec = decompose(f)
    assert dec.reassemble() == f
    seen = []
    for s, part in dec.components:
        assert part
        assert all(e % 2 == 1 for e in part.exponents())
        seen.append(s)
    assert seen == sorted(set(seen))


@given(masks, masks)
def test_addition_is_symmetric_difference(a, b):
    f, g = DeltaPoly(a), DeltaPoly(b)
    want = set(f.exponents()) ^ set(g.exponents())
    assert set((f + g).exponents()) == want


def test_mul_matches_exponent_convolution():
    f, g = poly(0, 1, 4), poly(2, 3)
    count = {}
    for a, b in itertools.product(f.exponents(), g.exponents()):
        count[a + b] = count.get(a + b, 0) + 1
    want = {e for e, c in count.items() if c % 2}
    assert set((f * g).exponents()) == want
