import pytest

from hecke2.codes import code, dominant_exponent, h_poly
from hecke2.deltapoly import ZERO, DeltaPoly, Parity, monomial
from hecke2.hecke import cached_charpoly, hecke_naive
from hecke2.structural import (
    a_seq,
    check_corollary_values,
    check_shift3,
    check_shift5,
    q_poly,
    u_poly,
    v_poly,
    w_poly,
    y_poly,
)


def poly(*exponents):
    return DeltaPoly.from_exponents(exponents)


def test_a_seq_values():
    assert [a_seq(n) for n in range(8)] == [0, 1, 5, 21, 85, 341, 1365, 5461]


def test_a_seq_codes():
    for n in range(1, 12):
        assert code(a_seq(n)) == (0, (1 << (n - 1)) - 1)
        assert code(2 * a_seq(n)) == ((1 << n) - 1, 0)


def test_q_poly_values():
    assert q_poly(0) == ZERO
    assert q_poly(1) == poly(4)
    assert q_poly(2) == poly(16, 8)
    assert q_poly(3) == poly(64, 32, 24)
    assert q_poly(5) == poly(1024, 512, 384, 352, 344)


def test_uvwy_values():
    assert u_poly(2) == poly(4)
    assert u_poly(3) == poly(20, 12)
    assert u_poly(4) == poly(84, 76, 52)
    assert u_poly(5) == poly(340, 332, 308, 212, 204)
    assert v_poly(2) == poly(3)
    assert v_poly(3) == poly(19)
    assert v_poly(4) == poly(83, 51)
    assert v_poly(5) == poly(339, 307, 211)
    assert w_poly(2) == poly(16, 8)
    assert w_poly(3) == poly(64, 24)
    assert w_poly(4) == poly(256, 88, 64, 56)
    assert w_poly(5) == poly(1024, 344, 320, 312, 256, 216)
    assert y_poly(1) == poly(8)
    assert y_poly(2) == poly(32)
    assert y_poly(3) == poly(128, 32)
    assert y_poly(4) == poly(512, 160, 128)
    assert y_poly(5) == poly(2048, 672, 640, 512, 416)


def test_q_family_structure():
    for n in range(1, 9):
        q = q_poly(n)
        assert q.parity_class() is Parity.EVEN
        assert dominant_exponent(q) == 4**n
        assert h_poly(q) == 1 << (n - 1)
        assert dominant_exponent(q.square()) == 2 * 4**n
        assert h_poly(q.square()) == 1 << n


def test_uvwy_structure():
    for n in range(2, 9):
        an = a_seq(n)
        u, v, w, y = u_poly(n), v_poly(n), w_poly(n), y_poly(n)
        assert u.parity_class() is Parity.EVEN and u.degree == an - 1
        assert h_poly(u) == (1 << (n - 1)) - 1
        assert v.parity_class() is Parity.ODD and v.degree == an - 2
        assert h_poly(v) == (1 << (n - 1)) - 1
        assert w.parity_class() is Parity.EVEN and w.degree == 4**n
        assert h_poly(w) == 1 << (n - 1)
        assert y.parity_class() is Parity.EVEN and y.degree == 2 * 4**n
        assert h_poly(y) == 1 << n


def test_shift3_worked_examples():
    cp3 = cached_charpoly(3)
    assert check_shift3(2, 3, cp3)
    assert check_shift3(1, 0, cp3)
    # spelled out: image at index 19 = Q_2 * x + x^(a_2) * image at 4
    assert q_poly(2) * poly(1) == poly(17, 9)
    assert check_shift3(3, 2, cp3)


def test_shift3_against_naive_route():
    # independent check of index 66 = 4^3 + 2 through q-expansions
    lhs = hecke_naive(monomial(66), 3)
    rhs = q_poly(3) * hecke_naive(monomial(2), 3) + monomial(a_seq(3)) * hecke_naive(
        monomial(3), 3
    )
    assert lhs == rhs


def test_shift5_worked_examples():
    cp5 = cached_charpoly(5)
    assert check_shift5(1, 1, cp5)
    assert check_shift5(2, 1, cp5)
    assert check_shift5(2, 5, cp5)
    # index 17 = 4^2 + 1 reduces to x^4 * image at 5 = x^5
    assert u_poly(2) * poly(1) == poly(5)


def test_corollary_values():
    cp3, cp5 = cached_charpoly(3), cached_charpoly(5)
    for n in range(4):
        assert check_corollary_values(n, cp3, cp5)


def test_corollary_examples_spelled_out():
    assert hecke_naive(monomial(18), 3) == monomial(a_seq(2) + 1)  # x^6
    assert hecke_naive(monomial(7), 5) == monomial(3) * u_poly(1)  # x^3
    assert hecke_naive(monomial(67), 3) == monomial(1) * q_poly(3)


def test_checkers_validate_input():
    cp3, cp5 = cached_charpoly(3), cached_charpoly(5)
    with pytest.raises(ValueError):
        check_shift3(-1, 0, cp3)
    with pytest.raises(ValueError):
        check_shift3(1, 1, cp5)
    with pytest.raises(ValueError):
        check_shift5(1, 1, cp3)
