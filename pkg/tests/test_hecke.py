import pytest

from hecke2.deltapoly import ONE, ZERO, DeltaPoly, to_series
from hecke2.errors import BadK, BadResidue, CacheFormatError, NotPrime, RankDeficient
from hecke2.gf2series import BitSeries, delta, one
from hecke2 import hecke
from hecke2.hecke import (
    CharPoly,
    cached_charpoly,
    charpoly_from_text,
    charpoly_to_text,
    charpoly_via_newton,
    compute_charpoly,
    delta7_coeff_sigma,
    hecke_fast,
    hecke_fast_range,
    hecke_matrix,
    hecke_naive,
    hecke_naive_series,
    newton_initial_sums,
    prop1_closed_form,
    relation_residual,
    structure_violations,
)


def poly(*exponents):
    return DeltaPoly.from_exponents(exponents)


F3 = CharPoly(3, (ZERO, ZERO, poly(1), poly(4)))
F5 = CharPoly(5, (ZERO, poly(2), ZERO, poly(4), poly(1), poly(6)))
# golden fixture, frozen from the power-sum derivation
F7 = CharPoly(7, (ZERO, ZERO, ZERO, ZERO, ZERO, poly(2), poly(1), poly(8)))


def test_naive_series_kills_delta():
    for p in hecke.odd_primes_up_to(100):
        img = hecke_naive_series(delta(100 * p + 1), p)
        assert img.is_zero(), p


def test_naive_series_cube_to_delta():
    cube = to_series(poly(3), 91)
    assert hecke_naive_series(cube, 3) == delta(31)


def test_naive_series_kills_constants():
    assert hecke_naive_series(one(22), 7).is_zero()


def test_naive_series_precision():
    img = hecke_naive_series(BitSeries(0, 61), 3)
    assert img.precision == 21


def test_naive_polynomial_examples():
    assert hecke_naive(poly(7), 7) == poly(1)
    assert hecke_naive(poly(7), 31) == ZERO
    assert hecke_naive(poly(9), 3) == poly(3)
    assert hecke_naive(poly(13), 5) == poly(9)
    assert hecke_naive(ZERO, 5) == ZERO
    assert hecke_naive(ONE, 5) == ZERO


def test_naive_rejects_composite():
    with pytest.raises(NotPrime):
        hecke_naive(poly(3), 9)


def test_compute_charpoly_small_values():
    assert compute_charpoly(3) == F3
    assert compute_charpoly(5) == F5
    assert compute_charpoly(7) == F7


def test_charpoly_rejects_composite():
    with pytest.raises(NotPrime):
        compute_charpoly(15)


def test_tiny_window_is_rank_deficient():
    with pytest.raises(RankDeficient):
        hecke._solve_relation(3, 8)
    # the public entry point retries with doubled windows
    assert compute_charpoly(3, window=8) == F3


def test_newton_oracle_agrees():
    for p in (3, 5, 7, 11, 13, 17):
        assert charpoly_via_newton(p) == compute_charpoly(p), p


def test_newton_initial_sums():
    sums5 = newton_initial_sums(F5)
    assert sums5[0] == ZERO
    assert sums5[1:5] == (ZERO, ZERO, ZERO, ZERO)
    assert sums5[5] == poly(1)
    assert sums5[6] == ZERO
    sums3 = newton_initial_sums(F3)
    assert sums3[0] == ZERO
    assert sums3[3] == poly(1)
    assert sums3[4] == ZERO


def test_fast_range_table_values():
    t3 = hecke_fast_range(F3, 19)
    assert t3[15] == poly(13, 5)
    assert t3[19] == poly(17, 9)
    t5 = hecke_fast_range(F5, 21)
    assert t5[21] == poly(17, 9)


def test_fast_polynomial_dispatch():
    assert hecke_fast(poly(1), F5) == ZERO
    assert hecke_fast(poly(3, 5), F3) == poly(1)
    assert hecke_fast(ZERO, F3) == ZERO


def test_fast_matches_naive_on_random_forms():
    import random

    rng = random.Random(11)
    for p in (3, 5, 7, 11):
        cp = cached_charpoly(p)
        for _ in range(25):
            f = DeltaPoly(rng.getrandbits(120))
            assert hecke_fast(f, cp) == hecke_naive(f, p)


def test_image_degree_and_congruence_law():
    # images of odd powers drop degree by >= 2 and live in class pk mod 8
    for p in (3, 5, 7, 11, 29):
        table = hecke_fast_range(cached_charpoly(p), 151)
        for k in range(1, 152, 2):
            img = table[k]
            if img:
                assert img.degree <= k - 2, (p, k)
            assert all(e % 8 == (p * k) % 8 for e in img.exponents()), (p, k)


def trace_route_oracle(p: int, kmax: int) -> list[DeltaPoly]:
    """Traces of powers of the multiplication-by-y matrix over the ring.

    In the rank-(p+1) quotient by the bivariate relation, multiplying by y
    has a companion-style matrix with polynomial entries; the trace of its
    k-th power must reproduce the image of the k-th power of the generator.
    """
    cp = cached_charpoly(p)
    n = p + 1
    companion = [[ZERO] * n for _ in range(n)]
    for j in range(n - 1):
        companion[j + 1][j] = ONE
    for r in range(1, n + 1):
        companion[n - r][n - 1] = cp.s[r - 1]

    def mat_mul(a, b):
        return [
            [
                sum((a[i][l] * b[l][j] for l in range(n)), ZERO)
                for j in range(n)
            ]
            for i in range(n)
        ]

    out = []
    power = [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    for _ in range(kmax + 1):
        out.append(sum((power[i][i] for i in range(n)), ZERO))
        power = mat_mul(power, companion)
    return out


def test_trace_route_matches_fast_range():
    for p in (3, 5, 7):
        assert trace_route_oracle(p, 40) == hecke_fast_range(cached_charpoly(p), 40)


def test_structure_violations_detects_corruption():
    assert structure_violations(F5) == []
    broken = CharPoly(5, (ZERO, poly(3), ZERO, poly(4), poly(1), poly(6)))
    bad = structure_violations(broken)
    assert any("congruence" in b for b in bad)
    assert "symmetry" in bad
    too_big = CharPoly(5, (ZERO, poly(2), ZERO, poly(4), poly(1, 9), poly(6)))
    assert any("degree" in b for b in structure_violations(too_big))


def test_relation_residual_vanishes():
    for p in (3, 5, 7, 11, 13):
        cp = cached_charpoly(p)
        assert relation_residual(cp, 8 * (p + 1) ** 2).is_zero(), p


def test_relation_residual_detects_wrong_coefficients():
    broken = CharPoly(3, (ZERO, ZERO, poly(1), poly(2)))
    assert not relation_residual(broken, 128).is_zero()


def test_hecke_matrix_small():
    m = hecke_matrix(3, 5)
    # images of x, x^3, x^5 are 0, x, 0
    assert m.rows == (0, 1, 0)
    assert m.is_strictly_lower_triangular()
    assert m.power(3).is_zero()


def test_hecke_matrix_residue_one_prime():
    m = hecke_matrix(17, 31)
    assert m.is_strictly_lower_triangular()
    assert m.power(16).is_zero()


def test_hecke_matrix_validates_arguments():
    with pytest.raises(ValueError):
        hecke_matrix(3, 6)
    with pytest.raises(NotPrime):
        hecke_matrix(9, 5)


def test_delta7_coefficients():
    assert delta7_coeff_sigma(7) == 1
    assert delta7_coeff_sigma(15) == 1
    assert delta7_coeff_sigma(31) == 0
    with pytest.raises(BadResidue):
        delta7_coeff_sigma(9)
    # cross-check against the brute-force seventh power
    f = delta(200).pow(7)
    for n in range(7, 200, 8):
        assert delta7_coeff_sigma(n) == f.coeff(n)


def test_prop1_closed_forms():
    assert prop1_closed_form(3, 7) == poly(5)
    assert prop1_closed_form(13, 5) == poly(1)
    assert prop1_closed_form(17, 3) == ZERO
    assert prop1_closed_form(17, 7) == ZERO
    assert prop1_closed_form(7, 7) == poly(1)
    assert prop1_closed_form(31, 7) == ZERO
    for k in (1, 3, 5, 7):
        assert prop1_closed_form(41, k) == ZERO
    with pytest.raises(BadK):
        prop1_closed_form(3, 9)
    with pytest.raises(NotPrime):
        prop1_closed_form(15, 3)


def test_cache_round_trip():
    for cp in (F3, F5, F7, cached_charpoly(11)):
        assert charpoly_from_text(charpoly_to_text(cp)) == cp


def test_cache_parser_ignores_trailing_lines():
    text = charpoly_to_text(F5) + "F_5(X,Y) = whatever\n"
    assert charpoly_from_text(text) == F5


def test_cache_parser_rejects_corruption():
    good = charpoly_to_text(F5)
    assert good.endswith("end 4\n")
    with pytest.raises(CacheFormatError):
        charpoly_from_text(good.replace("end 4", "end 7"))
    with pytest.raises(CacheFormatError):
        charpoly_from_text(good.replace("s2:", "t2:"))
    with pytest.raises(CacheFormatError):
        charpoly_from_text("p x\n")
    with pytest.raises(CacheFormatError):
        charpoly_from_text("p 5\ns1: -\n")
    with pytest.raises(CacheFormatError):
        charpoly_from_text(good.replace("s4: 4", "s4: 2 4"))


def test_render_bivariate():
    assert F3.render() == "Y^4 + X Y + X^4"
    assert F5.render() == "Y^6 + X^2 Y^4 + X^4 Y^2 + X Y + X^6"
