"""Claim-based verification sweeps.

Each claim re-derives one structural statement (a table, identity, inequality
or structure theorem) over a configurable range and raises AssertionError on
the first violation.  The runner times the claims and assembles a report the
command line prints both as text and as line-oriented key=value records.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import structural
from .codes import cap_H, code, decode, dominates, h, h_poly, n3, n5
from .deltapoly import DeltaPoly, decompose, from_series, monomial, to_series
from .errors import ParityMismatch
from .hecke import (
    cached_charpoly,
    charpoly_via_newton,
    compute_charpoly,
    hecke_fast_range,
    hecke_matrix,
    hecke_naive,
    iter_hecke_fast,
    odd_primes_up_to,
    prop1_closed_form,
    relation_residual,
    structure_violations,
    _naive_monomial_range,
)
from .nilpotence import (
    apply_witness,
    check_bounds_g,
    check_bounds_n3,
    check_bounds_n5,
    g_bruteforce,
    g_general,
)

__all__ = ["VerifyConfig", "ClaimResult", "VerificationReport", "SUITES", "run_suite"]


@dataclass(frozen=True)
class VerifyConfig:
    kmax: int = 4095
    pmax: int = 31
    long: bool = False

    @property
    def structure_kmax(self) -> int:
        return 32999 if self.long else self.kmax


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    range_str: str
    ok: bool
    ms: int
    detail: str = ""


@dataclass
class VerificationReport:
    claims: list[ClaimResult] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.claims)

    def lines(self) -> list[str]:
        # key=value fields stay parseable: no spaces inside a field
        return [
            f"claim={c.claim_id} range={c.range_str.replace(' ', '')} "
            f"status={'pass' if c.ok else 'fail'} ms={c.ms}"
            for c in self.claims
        ]

    def summary(self) -> str:
        passed = sum(c.ok for c in self.claims)
        total_ms = sum(c.ms for c in self.claims)
        return f"{passed}/{len(self.claims)} claims passed in {total_ms} ms"


_REGISTRY: dict[str, Callable[[VerifyConfig], str]] = {}


def _claim(claim_id: str):
    def wrap(fn):
        _REGISTRY[claim_id] = fn
        return fn

    return wrap


# ---------------------------------------------------------------------------
# shared helpers


def _positions(mask: int) -> np.ndarray:
    if mask == 0:
        return np.empty(0, dtype=np.int64)
    raw = mask.to_bytes((mask.bit_length() + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, np.uint8), bitorder="little")
    return np.nonzero(bits)[0].astype(np.int64)


def _n3_n5_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized digit gathers for 0..n-1 (independent of the scalar path)."""
    ks = np.arange(n, dtype=np.int64)
    a = np.zeros(n, dtype=np.int64)
    b = np.zeros(n, dtype=np.int64)
    i = 0
    while (1 << (2 * i + 1)) < n:
        a |= ((ks >> (2 * i + 1)) & 1) << i
        if (1 << (2 * i + 2)) < n:
            b |= ((ks >> (2 * i + 2)) & 1) << i
        i += 1
    return a, b


def _image_mask(mask: int, table: list[DeltaPoly]) -> int:
    acc = 0
    while mask:
        low = mask & -mask
        acc ^= table[low.bit_length() - 1].mask
        mask ^= low
    return acc


_ODD_PATTERN = int.from_bytes(b"\xaa" * 1024, "little")
_EVEN_PATTERN = int.from_bytes(b"\x55" * 1024, "little")


def _random_odd_mask(rng: random.Random, max_deg: int) -> int:
    while True:
        m = rng.getrandbits(max_deg + 1) & _ODD_PATTERN
        if m:
            return m


def _random_even_mask(rng: random.Random, max_deg: int) -> int:
    while True:
        m = rng.getrandbits(max_deg + 1) & _EVEN_PATTERN & ~1
        if m:
            return m


def _random_form(rng: random.Random, max_deg: int) -> DeltaPoly:
    """Any nonzero form of degree >= 1 (sparse-ish, mixed parity allowed)."""
    while True:
        mask = 0
        for _ in range(rng.randint(1, 24)):
            mask ^= 1 << rng.randint(0, max_deg)
        if rng.random() < 0.2:
            mask |= 1
        if mask & ~1:
            return DeltaPoly(mask)


# ---------------------------------------------------------------------------
# prop1 suite


@_claim("low-degree-closed-forms")
def _low_degree_closed_forms(cfg: VerifyConfig) -> str:
    for p in odd_primes_up_to(cfg.pmax - 1):
        for k in (1, 3, 5, 7):
            got = hecke_naive(monomial(k), p)
            want = prop1_closed_form(p, k)
            assert got == want, f"closed form fails at p={p}, k={k}"
    return f"p<{cfg.pmax}, k in {{1,3,5,7}}"


# ---------------------------------------------------------------------------
# tables suite

_TABLE3 = {
    0: (), 1: (), 3: (1,), 5: (), 7: (5,), 9: (3,), 11: (9,), 13: (7,),
    15: (13, 5), 17: (), 19: (17, 9), 21: (7,),
}
_TABLE5 = {
    0: (), 1: (), 3: (), 5: (1,), 7: (3,), 9: (), 11: (), 13: (9,),
    15: (11, 3), 17: (5,), 19: (7,), 21: (17, 9),
}


def _check_table(p: int, table: dict[int, tuple[int, ...]]) -> None:
    fast = hecke_fast_range(cached_charpoly(p), 21)
    for k, exps in table.items():
        want = DeltaPoly.from_exponents(exps)
        assert fast[k] == want, f"fast image table fails at p={p}, k={k}"
        assert hecke_naive(monomial(k), p) == want, f"naive table fails at p={p}, k={k}"


@_claim("t3-table")
def _t3_table(cfg: VerifyConfig) -> str:
    _check_table(3, _TABLE3)
    return "k in {0,1,3,...,21}"


@_claim("t5-table")
def _t5_table(cfg: VerifyConfig) -> str:
    _check_table(5, _TABLE5)
    return "k in {0,1,3,...,21}"


@_claim("naive-fast-agree")
def _naive_fast_agree(cfg: VerifyConfig) -> str:
    kmax = 200
    rng = random.Random(0xF2)
    for p in odd_primes_up_to(min(cfg.pmax, 31)):
        cp = cached_charpoly(p)
        fast = hecke_fast_range(cp, kmax)
        naive = _naive_monomial_range(p, kmax)
        assert fast == naive, f"monomial routes disagree at p={p}"
        for _ in range(200):
            f = DeltaPoly(rng.getrandbits(kmax) | (1 << (kmax - 1)))
            img = _image_mask(f.mask, fast)
            assert hecke_naive(f, p).mask == img, f"random-form routes disagree at p={p}"
    return f"p<={min(cfg.pmax, 31)}, k<=200, 200 random forms per prime"


@_claim("newton-solve-agree")
def _newton_solve_agree(cfg: VerifyConfig) -> str:
    for p in odd_primes_up_to(min(cfg.pmax, 31)):
        assert compute_charpoly(p) == charpoly_via_newton(p), f"methods split at p={p}"
    return f"p<={min(cfg.pmax, 31)}"


@_claim("relation-structure")
def _relation_structure(cfg: VerifyConfig) -> str:
    for p in odd_primes_up_to(min(cfg.pmax, 31)):
        cp = cached_charpoly(p)
        bad = structure_violations(cp)
        assert not bad, f"{bad} at p={p}"
        res = relation_residual(cp, 8 * (p + 1) * (p + 1))
        assert res.is_zero(), f"relation residual nonzero at p={p}"
    return f"p<={min(cfg.pmax, 31)}, residual to 8(p+1)^2"


@_claim("recurrence-genfun")
def _recurrence_genfun(cfg: VerifyConfig) -> str:
    # product form of the recurrence: (sum_k P_k t^k)(1 + sum_r s_r t^r) is a
    # polynomial in t whose only term is Delta * t^p
    from .gf2series import clmul

    for p in (3, 5):
        cp = cached_charpoly(p)
        pk = hecke_fast_range(cp, 200)
        for m in range(201):
            acc = pk[m].mask
            for r in range(1, min(m, p + 1) + 1):
                sr = cp.s[r - 1].mask
                if sr:
                    acc ^= clmul(sr, pk[m - r].mask)
            want = cp.s[m - 1].mask if (m <= p + 1 and m & 1) else 0
            assert acc == want, f"product identity fails at p={p}, m={m}"
        numerator = {
            m: cp.s[m - 1] for m in range(1, p + 2, 2) if cp.s[m - 1]
        }
        assert numerator == {p: monomial(1)}, f"numerator is not Delta t^{p}"
    return "p in {3,5}, k<=200"


# ---------------------------------------------------------------------------
# codes suite

_PARITY_N3 = (0, 0, 1, 1, 0, 0, 1, 1)
_PARITY_N5 = (0, 0, 0, 0, 1, 1, 1, 1)
_PARITY_H = (0, 0, 1, 1, 1, 1, 0, 0)


@_claim("code-parity-table")
def _code_parity_table(cfg: VerifyConfig) -> str:
    lim = 100_000
    a, b = _n3_n5_arrays(lim + 1)
    ks = np.arange(lim + 1)
    r = ks & 7
    assert np.all((a & 1) == np.take(_PARITY_N3, r)), "n3 parity table fails"
    assert np.all((b & 1) == np.take(_PARITY_N5, r)), "n5 parity table fails"
    assert np.all(((a + b) & 1) == np.take(_PARITY_H, r)), "h parity table fails"
    # vectorized gathers must agree with the scalar operations
    rng = random.Random(7)
    for _ in range(2000):
        k = rng.randrange(lim + 1)
        assert n3(k) == a[k] and n5(k) == b[k], f"gather mismatch at k={k}"
    return "k<=1e5"


@_claim("odd-step-invariance")
def _odd_step_invariance(cfg: VerifyConfig) -> str:
    lim = 100_000
    a, b = _n3_n5_arrays(2 * lim + 2)
    ev = np.arange(0, 2 * lim + 1, 2)
    assert np.all(a[ev] == a[ev + 1]), "n3 changes from 2l to 2l+1"
    assert np.all(b[ev] == b[ev + 1]), "n5 changes from 2l to 2l+1"
    return "l<=1e5"


@_claim("code-doubling-rules")
def _code_doubling_rules(cfg: VerifyConfig) -> str:
    lim = 100_000
    a, b = _n3_n5_arrays(4 * lim + 1)
    ks = np.arange(1, lim + 1)
    odd = ks[ks % 2 == 1]
    even = ks[ks % 2 == 0]
    assert np.all(a[2 * odd] == 1 + 2 * b[odd]) and np.all(b[2 * odd] == a[odd])
    assert np.all(a[4 * odd] == 2 * a[odd]) and np.all(b[4 * odd] == 1 + 2 * b[odd])
    assert np.all(a[2 * even] == 2 * b[even]) and np.all(b[2 * even] == a[even])
    assert np.all(a[4 * even] == 2 * a[even]) and np.all(b[4 * even] == 2 * b[even])
    return "k<=1e5, both parities"


@_claim("h-subadditive")
def _h_subadditive(cfg: VerifyConfig) -> str:
    lim = 4096
    a, b = _n3_n5_arrays(2 * lim + 1)
    H = a + b
    ls = np.arange(lim + 1)
    hl = H[ls]
    for k in range(lim + 1):
        s = H[k + ls]
        if k & 1:
            oddl = (ls & 1) == 1
            assert np.all(s[oddl] <= h(k) + hl[oddl] + 1), f"two-odd bound fails near k={k}"
            eq = oddl & (s == h(k) + hl + 1)
            if eq.any():
                assert k % 4 == 1 and np.all(ls[eq] % 4 == 1), (
                    f"equality without 1-mod-4 at k={k}"
                )
            rest = ~oddl
            assert np.all(s[rest] <= h(k) + hl[rest]), f"mixed bound fails near k={k}"
        else:
            assert np.all(s <= h(k) + hl), f"even bound fails near k={k}"
    return "k,l<=4096 exhaustive"


@_claim("h-increments")
def _h_increments(cfg: VerifyConfig) -> str:
    lim = 1_000_000
    a, b = _n3_n5_arrays(lim + 5)
    H = a + b
    ks = np.arange(lim + 1)
    h0, h1, h2 = H[ks], H[ks + 1], H[ks + 2]
    even = (ks & 1) == 0
    assert np.all(h1[even] == h0[even]), "h(k+1) != h(k) for even k"
    assert np.all(h1[~even] <= h0[~even] + 1), "h(k+1) bound fails for odd k"
    low = (ks & 3) < 2
    assert np.all(h2[low] == h0[low] + 1), "h(k+2) != h(k)+1 for k=0,1 mod 4"
    assert np.all(h2[~low] <= h0[~low]), "h(k+2) bound fails for k=2,3 mod 4"
    assert np.all(H[ks + 3] <= h0 + 1), "h(k+3) bound fails"
    assert np.all(H[ks + 4] <= h0 + 1), "h(k+4) bound fails"
    return "k<=1e6"


@_claim("h-disjoint-support")
def _h_disjoint_support(cfg: VerifyConfig) -> str:
    lim = 2048
    a, b = _n3_n5_arrays(2 * lim + 1)
    H = a + b
    ls = np.arange(lim + 1)
    for k in range(lim + 1):
        disjoint = (ls & (k & ~1)) == 0
        s = H[k + ls]
        both_one = (k % 4 == 1) & (ls % 4 == 1)
        not_both_odd = ((k & 1) == 0) | ((ls & 1) == 0)
        sel = disjoint & not_both_odd
        assert np.all(s[sel] == H[k] + H[ls][sel]), f"disjoint additivity fails near k={k}"
        sel = disjoint & both_one
        assert np.all(s[sel] == H[k] + H[ls][sel] + 1), f"disjoint +1 case fails near k={k}"
    return "k,l<=2048 exhaustive"


def _random_sparse_pure(rng: random.Random, max_deg: int) -> DeltaPoly:
    parity = rng.randint(0, 1)
    mask = 0
    for _ in range(rng.randint(1, 6)):
        e = rng.randint(0, max_deg - 1) & ~1 | parity
        mask |= 1 << e
    return DeltaPoly(mask)


@_claim("dominant-product")
def _dominant_product(cfg: VerifyConfig) -> str:
    from .codes import dominant_exponent

    rng = random.Random(0xD0)
    done = 0
    attempts = 0
    while done < 1000:
        attempts += 1
        assert attempts < 100_000, "could not build enough admissible pairs"
        P = _random_sparse_pure(rng, 512)
        Q = _random_sparse_pure(rng, 512)
        d1 = dominant_exponent(P)
        e1 = dominant_exponent(Q)
        if (d1 & e1 & ~1) != 0:
            continue
        if (d1 & 1) and (e1 & 1) and not (d1 % 4 == 1 and e1 % 4 == 1):
            continue
        assert dominant_exponent(P * Q) == d1 + e1, (
            f"dominant product fails for {d1}, {e1}"
        )
        done += 1
    return "1000 admissible random pairs, deg<=512"


@_claim("h-product-bound")
def _h_product_bound(cfg: VerifyConfig) -> str:
    rng = random.Random(0xB0)
    for _ in range(1000):
        P = DeltaPoly(
            _random_odd_mask(rng, 512) if rng.random() < 0.5 else _random_even_mask(rng, 512)
        )
        Q = DeltaPoly(
            _random_odd_mask(rng, 512) if rng.random() < 0.5 else _random_even_mask(rng, 512)
        )
        eps = 1 if (P.mask & _ODD_PATTERN and Q.mask & _ODD_PATTERN) else 0
        assert h_poly(P * Q) <= h_poly(P) + h_poly(Q) + eps, "product bound fails"
    return "1000 random pairs, deg<=512"


@_claim("h-fourth-power")
def _h_fourth_power(cfg: VerifyConfig) -> str:
    rng = random.Random(0xF4)
    for _ in range(1000):
        odd = rng.random() < 0.5
        P = DeltaPoly(_random_odd_mask(rng, 512) if odd else _random_even_mask(rng, 512))
        want = 2 * h_poly(P) + (1 if odd else 0)
        assert h_poly(P.frobenius(2)) == want, "fourth-power rule fails"
    return "1000 random parity-pure polynomials"


@_claim("order-shift-regression")
def _order_shift_regression(cfg: VerifyConfig) -> str:
    # domination is not translation invariant: 2 < 4 but 4+2 > 4+4
    assert dominates(2, 4) == -1
    assert dominates(6, 8) == 1
    try:
        dominates(2, 3)
    except ParityMismatch:
        pass
    else:
        raise AssertionError("parity mismatch accepted")
    return "a=4, k=2, l=4"


@_claim("code-bijection")
def _code_bijection(cfg: VerifyConfig) -> str:
    for k in range(10_001):
        assert decode(code(k), k & 1) == k, f"bijection fails at k={k}"
    return "k<=1e4"


@_claim("h-prefix-gap")
def _h_prefix_gap(cfg: VerifyConfig) -> str:
    for bb in range(1, 31):
        cap_H(bb)
    return "b<=30"


# ---------------------------------------------------------------------------
# shift suite


@_claim("shift3-identities")
def _shift3_identities(cfg: VerifyConfig) -> str:
    cp3 = cached_charpoly(3)
    table = hecke_fast_range(cp3, 2 * 4**5 + 303)
    for nn in range(6):
        for k in range(301):
            structural.check_shift3(nn, k, cp3, table)
    return "n<=5, k<=300"


@_claim("shift5-identities")
def _shift5_identities(cfg: VerifyConfig) -> str:
    cp5 = cached_charpoly(5)
    table = hecke_fast_range(cp5, 2 * 4**5 + 305)
    for nn in range(6):
        for k in range(301):
            structural.check_shift5(nn, k, cp5, table)
    return "n<=5, k<=300"


@_claim("shift-special-values")
def _shift_special_values(cfg: VerifyConfig) -> str:
    cp3, cp5 = cached_charpoly(3), cached_charpoly(5)
    t3 = hecke_fast_range(cp3, 2 * 4**5 + 6)
    t5 = hecke_fast_range(cp5, 2 * 4**5 + 6)
    for nn in range(6):
        structural.check_corollary_values(nn, cp3, cp5, t3, t5)
    return "n<=5"


@_claim("q-family-structure")
def _q_family_structure(cfg: VerifyConfig) -> str:
    from .codes import dominant_exponent
    from .deltapoly import Parity

    for nn in range(1, 9):
        q = structural.q_poly(nn)
        q2 = q.square()
        assert q.parity_class() is Parity.EVEN and q2.parity_class() is Parity.EVEN
        assert dominant_exponent(q) == 4**nn, f"dominant exponent fails at n={nn}"
        assert dominant_exponent(q2) == 2 * 4**nn
        assert h_poly(q) == 1 << (nn - 1) and h_poly(q2) == 1 << nn
    return "n<=8"


@_claim("uvwy-family-structure")
def _uvwy_family_structure(cfg: VerifyConfig) -> str:
    from .codes import dominant_exponent
    from .deltapoly import Parity

    for nn in range(2, 9):
        an = structural.a_seq(nn)
        u, v = structural.u_poly(nn), structural.v_poly(nn)
        w, y = structural.w_poly(nn), structural.y_poly(nn)
        assert u.parity_class() is Parity.EVEN and u.degree == an - 1
        assert dominant_exponent(u) == an - 1 and h_poly(u) == (1 << (nn - 1)) - 1
        assert v.parity_class() is Parity.ODD and v.degree == an - 2
        assert dominant_exponent(v) == an - 2 and h_poly(v) == (1 << (nn - 1)) - 1
        assert w.parity_class() is Parity.EVEN and w.degree == 4**nn
        assert dominant_exponent(w) == 4**nn and h_poly(w) == 1 << (nn - 1)
        assert y.parity_class() is Parity.EVEN and y.degree == 2 * 4**nn
        assert dominant_exponent(y) == 2 * 4**nn and h_poly(y) == 1 << nn
    return "2<=n<=8"


# ---------------------------------------------------------------------------
# bounds suite


@_claim("g-two-sided-bounds")
def _g_two_sided_bounds(cfg: VerifyConfig) -> str:
    lim = 1_000_000
    a, b = _n3_n5_arrays(lim + 1)
    ks = np.arange(1, lim + 1, 2, dtype=np.int64)
    hh = (a + b)[ks]
    g = hh + 1
    assert np.all(4 * hh * hh >= ks - 1), "lower bound fails"
    assert np.all(4 * (g + 1) * (g + 1) <= 9 * (ks + 1)), "upper bound fails"
    low_tight = set(ks[4 * hh * hh == ks - 1].tolist())
    low_want = {1} | {4**e + 1 for e in range(1, 11) if 4**e + 1 <= lim}
    assert low_tight == low_want, "lower tightness set differs"
    up_tight = set(ks[4 * (g + 1) * (g + 1) == 9 * (ks + 1)].tolist())
    up_want = {4**e - 1 for e in range(1, 11) if 4**e - 1 <= lim}
    assert up_tight == up_want, "upper tightness set differs"
    for k in range(1, 4096, 2):
        check_bounds_g(k)
    for k in low_want | up_want:
        check_bounds_g(int(k))
    return "odd k<=1e6 (vector) + k<4096 (scalar)"


@_claim("n3-upper-bound")
def _n3_upper_bound(cfg: VerifyConfig) -> str:
    lim = 1_000_000
    a, _ = _n3_n5_arrays(lim + 1)
    ks = np.arange(1, lim + 1, 2, dtype=np.int64)
    v = a[ks]
    assert np.all(2 * (v + 1) * (v + 1) <= 3 * ks - 1), "n3 bound fails"
    tight = ks[2 * (v + 1) * (v + 1) == 3 * ks - 1]
    want = {1 + 2 * (4**e - 1) // 3 for e in range(11)}
    want = {k for k in want if k <= lim}
    assert set(tight.tolist()) == want, "n3 tightness set differs"
    for k in range(1, 4096, 2):
        check_bounds_n3(k)
    for k in want:
        check_bounds_n3(int(k))
    return "odd k<=1e6 (vector) + k<4096 (scalar)"


@_claim("n5-upper-bound")
def _n5_upper_bound(cfg: VerifyConfig) -> str:
    lim = 1_000_000
    _, b = _n3_n5_arrays(lim + 1)
    ks = np.arange(1, lim + 1, 2, dtype=np.int64)
    v = b[ks]
    assert np.all(4 * (v + 1) * (v + 1) <= 3 * ks + 1), "n5 bound fails"
    tight = ks[4 * (v + 1) * (v + 1) == 3 * ks + 1]
    want = {(4**e - 1) // 3 for e in range(1, 12)}
    want = {k for k in want if k <= lim}
    assert set(tight.tolist()) == want, "n5 tightness set differs"
    for k in range(1, 4096, 2):
        check_bounds_n5(k)
    for k in want:
        check_bounds_n5(int(k))
    return "odd k<=1e6 (vector) + k<4096 (scalar)"


# ---------------------------------------------------------------------------
# theorem suite


def _structure_sweep_t3(kmax: int) -> None:
    a, b = _n3_n5_arrays(kmax + 1)
    H = a + b
    big = 1 << 32
    for k, img in enumerate(iter_hecke_fast(cached_charpoly(3), kmax)):
        hk = int(H[k])
        if img.mask == 0:
            assert not (k & 1 and a[k] >= 1), f"odd image vanishes at k={k}"
            assert not (k % 4 == 2 and b[k] >= 1), f"2-mod-4 image vanishes at k={k}"
            continue
        pos = _positions(img.mask)
        hs = H[pos]
        hp = int(hs.max())
        assert hp <= hk - 1, f"h drop fails at k={k}"
        if k % 4 == 0:
            assert hp <= hk - 2, f"multiple-of-4 drop fails at k={k}"
        if k % 4 == 2 and b[k] == 0:
            assert hp <= hk - 3, f"2-mod-4 drop fails at k={k}"
        want_par = (hk + (1 if k % 4 else 0)) & 1
        assert hp & 1 == want_par, f"image parity fails at k={k}"
        dom = int(pos[(hs * big + b[pos]).argmax()])
        if k & 1 and a[k] >= 1:
            assert hp == hk - 1, f"odd-case h value fails at k={k}"
            assert a[dom] == a[k] - 1 and b[dom] == b[k], f"odd-case code fails at k={k}"
        elif k % 4 == 2 and b[k] >= 1:
            assert hp == hk - 1, f"2-mod-4 h value fails at k={k}"
            assert a[dom] == a[k] and b[dom] == b[k] - 1, f"2-mod-4 code fails at k={k}"


def _structure_sweep_t5(kmax: int) -> None:
    a, b = _n3_n5_arrays(kmax + 1)
    H = a + b
    big = 1 << 32
    for k, img in enumerate(iter_hecke_fast(cached_charpoly(5), kmax)):
        hk = int(H[k])
        if img.mask == 0:
            assert not (k & 1 and b[k] >= 1), f"odd image vanishes at k={k}"
            continue
        pos = _positions(img.mask)
        hs = H[pos]
        hp = int(hs.max())
        assert hp <= hk - 1, f"h drop fails at k={k}"
        if k & 1 and b[k] == 0:
            assert hp <= hk - 3, f"odd zero-n5 drop fails at k={k}"
        if k & 1 == 0:
            assert hp <= hk - 2, f"even drop fails at k={k}"
        assert (hp - hk - k) & 1 == 0, f"image parity fails at k={k}"
        if k & 1 and b[k] >= 1:
            dom = int(pos[(hs * big + b[pos]).argmax()])
            assert hp == hk - 1, f"odd-case h value fails at k={k}"
            assert a[dom] == a[k] and b[dom] == b[k] - 1, f"odd-case code fails at k={k}"


@_claim("t3-image-structure")
def _t3_image_structure(cfg: VerifyConfig) -> str:
    _structure_sweep_t3(cfg.structure_kmax)
    return f"k<={cfg.structure_kmax}"


@_claim("t5-image-structure")
def _t5_image_structure(cfg: VerifyConfig) -> str:
    _structure_sweep_t5(cfg.structure_kmax)
    return f"k<={cfg.structure_kmax}"


@_claim("frobenius-doubling")
def _frobenius_doubling(cfg: VerifyConfig) -> str:
    for p in (3, 5):
        table = hecke_fast_range(cached_charpoly(p), 1000)
        for k in range(501):
            assert table[2 * k] == table[k].square(), f"doubling fails at p={p}, k={k}"
    return "p in {3,5}, k<=500"


@_claim("theta-vanishing")
def _theta_vanishing(cfg: VerifyConfig) -> str:
    vmax = 5
    k3 = [1 + (1 << (2 * v + 2)) for v in range(vmax + 1)]
    table3 = hecke_fast_range(cached_charpoly(3), max(k3))
    for k in k3:
        assert not table3[k], f"theta image nonzero at p=3, k={k}"
    k5 = [1 + (1 << (2 * v + 1)) for v in range(vmax + 1)]
    k5 += [(1 + (1 << (2 * v + 1))) // 3 for v in range(vmax + 1)]
    table5 = hecke_fast_range(cached_charpoly(5), max(k5))
    for k in k5:
        assert not table5[k], f"theta image nonzero at p=5, k={k}"
    return f"v<={vmax}"


@_claim("witness-chain")
def _witness_chain(cfg: VerifyConfig) -> str:
    kmax = 1023
    a, b = _n3_n5_arrays(kmax + 1)
    H = a + b
    tables = {p: hecke_fast_range(cached_charpoly(p), kmax) for p in (3, 5)}
    for k in range(1, kmax + 1, 2):
        assert apply_witness(monomial(k)) == monomial(1), f"witness fails at k={k}"
        for p in (3, 5):
            img = tables[p][k]
            if img:
                hp = int(H[_positions(img.mask)].max())
                assert hp <= H[k] - 1, f"h decrement fails at p={p}, k={k}"
    return f"odd k<={kmax}"


@_claim("h-decrement")
def _h_decrement(cfg: VerifyConfig) -> str:
    rng = random.Random(0x3D)
    deg = 2048
    tables = {p: hecke_fast_range(cached_charpoly(p), deg) for p in (3, 5)}
    for _ in range(500):
        f = DeltaPoly(_random_odd_mask(rng, deg))
        for p in (3, 5):
            img = DeltaPoly(_image_mask(f.mask, tables[p]))
            assert h_poly(img) <= h_poly(f) - 1, f"h decrement fails at p={p}"
    return "500 random odd forms, deg<=2048"


@_claim("dominant-code-decrement")
def _dominant_code_decrement(cfg: VerifyConfig) -> str:
    from .codes import dominant_exponent

    rng = random.Random(0xDC)
    deg = 2048
    tables = {p: hecke_fast_range(cached_charpoly(p), deg) for p in (3, 5)}
    hits3 = hits5 = 0
    for _ in range(400):
        f = DeltaPoly(_random_odd_mask(rng, deg))
        m1 = dominant_exponent(f)
        c = code(m1)
        if c.n3 >= 1:
            img = DeltaPoly(_image_mask(f.mask, tables[3]))
            assert img, "T3 image vanishes despite n3 >= 1"
            assert code(dominant_exponent(img)) == (c.n3 - 1, c.n5), "T3 code fails"
            hits3 += 1
        if c.n5 >= 1:
            img = DeltaPoly(_image_mask(f.mask, tables[5]))
            assert img, "T5 image vanishes despite n5 >= 1"
            assert code(dominant_exponent(img)) == (c.n3, c.n5 - 1), "T5 code fails"
            hits5 += 1
    assert hits3 >= 50 and hits5 >= 50, "insufficient coverage"
    return "400 random odd forms, deg<=2048"


@_claim("delta-kernel")
def _delta_kernel(cfg: VerifyConfig) -> str:
    rng = random.Random(0x15)
    deg = 1024
    tables = {p: hecke_fast_range(cached_charpoly(p), deg) for p in (3, 5)}
    assert _image_mask(2, tables[3]) == 0 and _image_mask(2, tables[5]) == 0
    for _ in range(500):
        f = _random_odd_mask(rng, deg)
        if f == 2:
            continue
        assert _image_mask(f, tables[3]) or _image_mask(f, tables[5]), (
            "a form other than the generator is killed by both operators"
        )
    return "500 random odd forms, deg<=1024"


@_claim("g-monotone-under-hecke")
def _g_monotone_under_hecke(cfg: VerifyConfig) -> str:
    rng = random.Random(0x91)
    deg = 512
    for p in (3, 5, 7, 11, 13):
        table = hecke_fast_range(cached_charpoly(p), deg)
        for _ in range(100):
            f = _random_form(rng, deg)
            img = DeltaPoly(_image_mask(f.mask, table))
            assert g_general(f).g >= g_general(img).g + 1, f"monotonicity fails at p={p}"
    return "p in {3,5,7,11,13}, 100 random forms each"


@_claim("pm1-double-decrement")
def _pm1_double_decrement(cfg: VerifyConfig) -> str:
    rng = random.Random(0x51)
    deg = 199
    for p in (7, 17, 23, 31):
        table = hecke_fast_range(cached_charpoly(p), deg)
        for k in range(1, 200, 2):
            assert g_general(table[k]).g <= h(k) - 1, f"double decrement fails at p={p}, k={k}"
        for _ in range(200):
            f = DeltaPoly(_random_odd_mask(rng, deg))
            img = DeltaPoly(_image_mask(f.mask, table))
            assert g_general(img).g <= g_general(f).g - 2, f"double decrement fails at p={p}"
    return "p in {7,17,23,31}, odd k<=199 + 200 random forms"


@_claim("g-degree-bound")
def _g_degree_bound(cfg: VerifyConfig) -> str:
    rng = random.Random(0x6B)
    for _ in range(1000):
        f = _random_form(rng, 4096)
        d = f.degree
        g = g_general(f).g
        assert 4 * g * g < 9 * d, f"degree bound fails at degree {d}"
    return "1000 random forms, deg<=4096"


@_claim("g-vs-bruteforce")
def _g_vs_bruteforce(cfg: VerifyConfig) -> str:
    primes = (3, 5, 7, 11, 13)
    for k in range(1, 64, 2):
        assert g_bruteforce(monomial(k), primes) == h(k) + 1, f"oracle splits at k={k}"
    rng = random.Random(0x6F)
    for _ in range(200):
        f = DeltaPoly(_random_odd_mask(rng, 63))
        assert g_bruteforce(f, primes) == h_poly(f) + 1, "oracle splits on a random form"
    return "odd k<=63 + 200 random odd forms"


@_claim("triangular-nilpotent")
def _triangular_nilpotent(cfg: VerifyConfig) -> str:
    K = 99
    primes = [*odd_primes_up_to(31), 41, 73, 89, 97]
    for p in primes:
        mat = hecke_matrix(p, K)
        assert mat.is_strictly_lower_triangular(), f"matrix not triangular at p={p}"
        assert mat.power((K + 1) // 2).is_zero(), f"matrix power nonzero at p={p}"
    return f"p in {{3..31,41,73,89,97}}, K={K}"


# ---------------------------------------------------------------------------
# roundtrip claims (tables suite)


@_claim("series-roundtrips")
def _series_roundtrips(cfg: VerifyConfig) -> str:
    rng = random.Random(0x27)
    for _ in range(300):
        f = DeltaPoly(rng.getrandbits(128))
        d = f.degree if f else 0
        assert from_series(to_series(f, d + 1), d) == f, "roundtrip fails"
    for _ in range(50):
        f = DeltaPoly(rng.getrandbits(64))
        g = DeltaPoly(rng.getrandbits(64))
        n = 160
        assert to_series(f * g, n) == to_series(f, n) * to_series(g, n), (
            "expansion is not multiplicative"
        )
    return "300 random roundtrips + 50 random products"


@_claim("decompose-reassembly")
def _decompose_reassembly(cfg: VerifyConfig) -> str:
    rng = random.Random(0x2A)
    for _ in range(1000):
        f = DeltaPoly(rng.getrandbits(513))
        dec = decompose(f)
        assert dec.reassemble() == f, "reassembly fails"
        for s, part in dec.components:
            assert part and all(e & 1 for e in part.exponents()), "component not odd"
        assert [s for s, _ in dec.components] == sorted({s for s, _ in dec.components}), (
            "components not ordered"
        )
    return "1000 random polynomials, deg<=512"


# ---------------------------------------------------------------------------
# suites

SUITES: dict[str, tuple[str, ...]] = {
    "prop1": ("low-degree-closed-forms",),
    "tables": (
        "t3-table",
        "t5-table",
        "naive-fast-agree",
        "newton-solve-agree",
        "relation-structure",
        "recurrence-genfun",
        "series-roundtrips",
        "decompose-reassembly",
    ),
    "codes": (
        "code-parity-table",
        "odd-step-invariance",
        "code-doubling-rules",
        "h-subadditive",
        "h-increments",
        "h-disjoint-support",
        "dominant-product",
        "h-product-bound",
        "h-fourth-power",
        "order-shift-regression",
        "code-bijection",
        "h-prefix-gap",
    ),
    "shift": (
        "shift3-identities",
        "shift5-identities",
        "shift-special-values",
        "q-family-structure",
        "uvwy-family-structure",
    ),
    "bounds": ("g-two-sided-bounds", "n3-upper-bound", "n5-upper-bound"),
    "theorem": (
        "t3-image-structure",
        "t5-image-structure",
        "frobenius-doubling",
        "theta-vanishing",
        "witness-chain",
        "h-decrement",
        "dominant-code-decrement",
        "delta-kernel",
        "g-monotone-under-hecke",
        "pm1-double-decrement",
        "g-degree-bound",
        "g-vs-bruteforce",
        "triangular-nilpotent",
    ),
}
SUITES["all"] = sum(SUITES.values(), ())


def run_suite(suite: str, cfg: VerifyConfig | None = None) -> VerificationReport:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {sorted(SUITES)}")
    cfg = cfg or VerifyConfig()
    report = VerificationReport()
    for claim_id in SUITES[suite]:
        fn = _REGISTRY[claim_id]
        start = time.perf_counter()
        try:
            range_str = fn(cfg)
            ok, detail = True, ""
        except AssertionError as exc:
            range_str, ok, detail = "-", False, str(exc)
        ms = int((time.perf_counter() - start) * 1000)
        report.claims.append(ClaimResult(claim_id, range_str, ok, ms, detail))
    return report
