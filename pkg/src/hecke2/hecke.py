"""Hecke operators T_p on GF(2) polynomials in the cusp-form generator.

Two independent evaluation routes are provided.  The *naive* route works on
q-expansions: expand the form, drop to every p-th coefficient (folding in the
multiples of p), and recognize the image polynomial.  The *fast* route first
computes the unique symmetric bivariate relation

    F_p(X, Y) = Y^(p+1) + s_1(X) Y^p + ... + s_(p+1)(X)

satisfied by the expansions X = Delta(q), Y = Delta(q^p); its coefficients
drive an order-(p+1) linear recurrence for the images of the powers of
Delta.  The relation itself is computed by a packed GF(2) linear solve whose
unknowns are the monomial bits allowed by the degree and mod-8 congruence
constraints; the classical power-sum (Newton) identities give a second
derivation from naive data, used as an independent oracle.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import numpy as np

from .deltapoly import ZERO, DeltaPoly, from_series, monomial, to_series
from .errors import (
    BadK,
    BadResidue,
    CacheFormatError,
    NotAPolynomial,
    NotPrime,
    RankDeficient,
    SingularSystem,
)
from .gf2series import BitSeries, clmul, delta, delta_qpow

__all__ = [
    "CharPoly",
    "hecke_naive_series",
    "hecke_naive",
    "compute_charpoly",
    "charpoly_via_newton",
    "cached_charpoly",
    "newton_initial_sums",
    "iter_hecke_fast",
    "hecke_fast_range",
    "hecke_fast",
    "GF2Matrix",
    "hecke_matrix",
    "delta7_coeff_sigma",
    "prop1_closed_form",
    "structure_violations",
    "relation_residual",
    "charpoly_to_text",
    "charpoly_from_text",
    "cache_dir",
    "cache_path",
    "write_charpoly",
    "read_charpoly",
    "is_odd_prime",
    "odd_primes_up_to",
]


def is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


def odd_primes_up_to(n: int) -> list[int]:
    if n < 3:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = b"\x00" * len(sieve[i * i :: i])
    return [i for i in range(3, n + 1, 2) if sieve[i]]


def _require_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise NotPrime(f"{p} is not an odd prime")


def _bit_positions(x: int) -> list[int]:
    """Ascending positions of the set bits (numpy path for dense masks)."""
    if x == 0:
        return []
    if x.bit_count() <= 256:
        out = []
        while x:
            low = x & -x
            out.append(low.bit_length() - 1)
            x ^= low
        return out
    arr = np.frombuffer(x.to_bytes((x.bit_length() + 7) // 8, "little"), np.uint8)
    return np.nonzero(np.unpackbits(arr, bitorder="little"))[0].tolist()


def _power_ladder(base_bits: int, count: int, mask: int) -> list[int]:
    """Truncated bit masks of base^0 .. base^count."""
    out = [1]
    cur = 1
    for _ in range(count):
        cur = clmul(cur, base_bits) & mask
        out.append(cur)
    return out


# ---------------------------------------------------------------------------
# naive route


def hecke_naive_series(f: BitSeries, p: int) -> BitSeries:
    """Apply T_p on a q-expansion: gamma(n) = c(pn) (+ c(n/p) when p | n)."""
    _require_odd_prime(p)
    out_prec = (f.precision - 1) // p + 1
    bits = f.bits
    out = 0
    for n in range(out_prec):
        b = (bits >> (p * n)) & 1
        if n % p == 0:
            b ^= (bits >> (n // p)) & 1
        if b:
            out |= 1 << n
    return BitSeries(out, out_prec)


def hecke_naive(f: DeltaPoly, p: int) -> DeltaPoly:
    """T_p through q-expansions, at the minimal reconstructing precision."""
    _require_odd_prime(p)
    if not f:
        return ZERO
    deg = f.degree
    image = hecke_naive_series(to_series(f, p * deg + 1), p)
    try:
        return from_series(image, deg)
    except NotAPolynomial as exc:  # would falsify the degree-drop law
        raise AssertionError(
            f"naive T_{p} image of a degree-{deg} form is not polynomial"
        ) from exc


def _naive_monomial_range(p: int, kmax: int) -> list[DeltaPoly]:
    """Naive images of every power 0..kmax, sharing one expansion ladder."""
    _require_odd_prime(p)
    prec = p * kmax + 1
    mask = (1 << prec) - 1
    dbits = delta(prec).bits
    out = [ZERO]
    cur = 1
    for k in range(1, kmax + 1):
        cur = clmul(cur, dbits) & mask
        img = hecke_naive_series(BitSeries(cur, prec), p)
        out.append(from_series(img.truncate(k + 1), k))
    return out


# ---------------------------------------------------------------------------
# the bivariate relation


@dataclass(frozen=True, slots=True)
class CharPoly:
    """Coefficients s_1..s_(p+1) of the degree-(p+1) relation for T_p."""

    p: int
    s: tuple[DeltaPoly, ...]

    def __post_init__(self) -> None:
        if len(self.s) != self.p + 1:
            raise ValueError(f"expected {self.p + 1} coefficients, got {len(self.s)}")

    def bivariate_terms(self) -> frozenset[tuple[int, int]]:
        """(X-degree, Y-degree) pairs, including the monic Y^(p+1) term."""
        terms = {(0, self.p + 1)}
        for r, sr in enumerate(self.s, 1):
            for j in sr.exponents():
                terms.add((j, self.p + 1 - r))
        return frozenset(terms)

    def render(self) -> str:
        parts = []
        for x, y in sorted(self.bivariate_terms(), key=lambda t: (-t[1], -t[0])):
            frag = []
            if x == 1:
                frag.append("X")
            elif x:
                frag.append(f"X^{x}")
            if y == 1:
                frag.append("Y")
            elif y:
                frag.append(f"Y^{y}")
            parts.append(" ".join(frag) if frag else "1")
        return " + ".join(parts)


def structure_violations(cp: CharPoly) -> list[str]:
    """Names of violated structural invariants (empty when all hold)."""
    out = []
    for r, sr in enumerate(cp.s, 1):
        if sr and sr.degree > r:
            out.append(f"degree bound: s{r}")
        want = (cp.p * r) % 8
        if any(e % 8 != want for e in sr.exponents()):
            out.append(f"congruence class: s{r}")
    terms = cp.bivariate_terms()
    if terms != frozenset((b, a) for a, b in terms):
        out.append("symmetry")
    return out


def relation_residual(cp: CharPoly, precision: int) -> BitSeries:
    """F_p evaluated at the two expansions, truncated; must vanish."""
    p = cp.p
    big = p + 1
    mask = (1 << precision) - 1
    max_j = max((sr.degree for sr in cp.s if sr), default=0)
    apow = _power_ladder(delta(precision).bits, max_j, mask)
    bpow = _power_ladder(delta_qpow(p, precision).bits, big, mask)
    res = bpow[big]
    for r, sr in enumerate(cp.s, 1):
        if not sr:
            continue
        sa = 0
        for j in sr.exponents():
            sa ^= apow[j]
        res ^= clmul(sa, bpow[big - r]) & mask
    return BitSeries(res & mask, precision)


def _solve_relation(p: int, window: int) -> CharPoly:
    """Linear solve for the relation over one coefficient window.

    All series involved are supported on a single residue class mod 8, so the
    solve packs every eighth coefficient: bit m of a packed vector is the
    coefficient of q^(8m + class).  Unknowns are the allowed monomial bits of
    each s_r; columns are the packed expansions of Delta^j * Delta(q^p)^(P-r);
    elimination keeps pivots keyed by lowest row with deterministic insertion
    order.
    """
    big = p + 1
    n_window = ((window + 7) // 8) * 8
    cls = (p * big) % 8
    clen = n_window // 8
    cmask = (1 << clen) - 1

    # packed generator powers: cap[j] = class-(j mod 8) coefficients of Delta^j
    capd = 0
    m = 1
    while m * m < n_window:
        capd |= 1 << ((m * m - 1) >> 3)
        m += 2
    cap = [1]
    cur = 1
    for j in range(1, big + 1):
        cur = clmul(cur, capd)
        if (j - 1) % 8 == 7:
            cur <<= 1
        cur &= cmask
        cap.append(cur)

    # supports of the substituted powers Delta^i(q^p), from a short ladder
    small_prec = n_window // p + 1
    small = _power_ladder(delta(small_prec).bits, big, (1 << small_prec) - 1)
    bsupport = [_bit_positions(s) for s in small]

    def packed_product(r: int, dense: int) -> int:
        # dense holds class-(pr mod 8) coefficients; multiply by the
        # substituted power Delta(q^p)^(big-r) and repack into class `cls`
        jc = (p * r) % 8
        acc = 0
        for n in bsupport[big - r]:
            pos = p * n
            if pos >= n_window:
                break
            acc ^= dense << ((pos + jc - cls) >> 3)
        return acc & cmask

    unknowns = [(r, j) for r in range(1, big + 1) for j in range((p * r) % 8, r + 1, 8)]

    pivots: dict[int, tuple[int, int]] = {}
    for idx, (r, j) in enumerate(unknowns):
        col = packed_product(r, cap[j])
        tracker = 1 << idx
        while col:
            low = (col & -col).bit_length() - 1
            hit = pivots.get(low)
            if hit is None:
                pivots[low] = (col, tracker)
                break
            col ^= hit[0]
            tracker ^= hit[1]
        else:
            raise RankDeficient(
                f"coefficient window {n_window} leaves the relation underdetermined (p={p})"
            )

    rhs = 0
    for n in bsupport[big]:
        pos = p * n
        if pos < n_window:
            rhs |= 1 << ((pos - cls) >> 3)
    vec = rhs
    chosen = 0
    while vec:
        low = (vec & -vec).bit_length() - 1
        hit = pivots.get(low)
        if hit is None:
            raise AssertionError(f"no monic degree-{big} relation exists at p={p}")
        vec ^= hit[0]
        chosen ^= hit[1]

    smasks = [0] * (big + 1)
    for idx in _bit_positions(chosen):
        r, j = unknowns[idx]
        smasks[r] |= 1 << j
    cp = CharPoly(p, tuple(DeltaPoly(sm) for sm in smasks[1:]))

    # re-check the packed residual and the structural constraints
    res = rhs
    for r in range(1, big + 1):
        if smasks[r]:
            sa = 0
            for j in _bit_positions(smasks[r]):
                sa ^= cap[j]
            res ^= packed_product(r, sa)
    if res:
        raise AssertionError(f"solved relation leaves a residual at p={p}")
    bad = structure_violations(cp)
    if bad:
        raise AssertionError(f"solved relation violates {bad} at p={p}")
    return cp


def compute_charpoly(p: int, window: int | None = None) -> CharPoly:
    """The relation coefficients via the structured linear solve.

    The initial coefficient window is 4(p+1)^2, doubled (twice at most) if
    the system comes back rank-deficient.
    """
    _require_odd_prime(p)
    n = window if window is not None else 4 * (p + 1) * (p + 1)
    for attempt in range(3):
        try:
            return _solve_relation(p, n)
        except RankDeficient:
            if attempt == 2:
                raise
            n *= 2
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def cached_charpoly(p: int) -> CharPoly:
    return compute_charpoly(p)


# ---------------------------------------------------------------------------
# power-sum (Newton) oracle


def _exact_div(num: int, den: int) -> int:
    """Exact GF(2)[x] division of coefficient masks."""
    if den == 0:
        raise SingularSystem("division by the zero polynomial")
    q = 0
    d = den.bit_length()
    while num:
        top = num.bit_length()
        if top < d:
            raise SingularSystem("pivot does not divide the residual exactly")
        shift = top - d
        q |= 1 << shift
        num ^= den << shift
    return q


def _newton_bit_solve(
    p: int, sums: list[int], known: dict[int, int], pending: set[int]
) -> None:
    """Finish the power-sum system by bit-level elimination.

    Remaining unknowns are expanded into their allowed monomial bits (degree
    and mod-8 class constraints) and the identities are imposed coefficient
    by coefficient; raises SingularSystem if the identities do not pin the
    unknowns uniquely.
    """
    big = p + 1
    rmax = len(sums) - 1
    block = rmax + big + 2  # row stride: x-degrees occurring in one identity

    bits = [(i, j) for i in sorted(pending) for j in range((p * i) % 8, i + 1, 8)]
    residuals = []
    for m in range(1, rmax + 1):
        res = sums[m]
        for i, si in known.items():
            if m - i >= 1 and sums[m - i]:
                res ^= clmul(si, sums[m - i])
            if i == m and m <= big and m & 1:
                res ^= si
        residuals.append(res)

    pivots: dict[int, tuple[int, int]] = {}
    for idx, (i, j) in enumerate(bits):
        col = 0
        for m in range(1, rmax + 1):
            coeff = sums[m - i] if m - i >= 1 else 0
            if i == m and m & 1:
                coeff ^= 1
            if coeff:
                col ^= (coeff << j) << ((m - 1) * block)
        tracker = 1 << idx
        while col:
            low = (col & -col).bit_length() - 1
            hit = pivots.get(low)
            if hit is None:
                pivots[low] = (col, tracker)
                break
            col ^= hit[0]
            tracker ^= hit[1]
        else:
            raise SingularSystem(
                f"power-sum identities leave s_{i} underdetermined at p={p}"
            )

    vec = 0
    for m, res in enumerate(residuals, 1):
        vec ^= res << ((m - 1) * block)
    chosen = 0
    while vec:
        low = (vec & -vec).bit_length() - 1
        hit = pivots.get(low)
        if hit is None:
            raise SingularSystem(f"power-sum identities are inconsistent at p={p}")
        vec ^= hit[0]
        chosen ^= hit[1]
    for idx in _bit_positions(chosen):
        i, j = bits[idx]
        known[i] = known.get(i, 0) | (1 << j)
    for i in pending:
        known.setdefault(i, 0)
    pending.clear()


def charpoly_via_newton(p: int) -> CharPoly:
    """Independent derivation of the relation from naive power-sum images.

    The power sums N_r equal the naive images of the r-th powers; the Newton
    identities link them to the s_r.  Mod 2 the low identities only pin the
    odd-indexed s_r directly, so the solver first iterates substitution:
    whenever an unknown appears alone with a nonzero polynomial coefficient
    it is extracted by exact division.  Primes whose power sums are too
    entangled for pure substitution (p = 11 already is) fall through to a
    bit-level elimination over the same identities.
    """
    _require_odd_prime(p)
    big = p + 1
    rmax = 3 * big
    sums = [s.mask for s in _naive_monomial_range(p, rmax)]

    known: dict[int, int] = {}
    pending = set(range(1, big + 1))

    def scan(residual_only: bool) -> bool:
        progressed = False
        for m in range(1, rmax + 1):
            res = sums[m]
            open_terms: list[tuple[int, int]] = []
            hi = min(big, m - 1)
            for i in range(1, hi + 1):
                coeff = sums[m - i]
                if not coeff:
                    continue
                si = known.get(i)
                if si is not None:
                    res ^= clmul(si, coeff)
                else:
                    open_terms.append((i, coeff))
            if m <= big and m & 1:
                si = known.get(m)
                if si is not None:
                    res ^= si
                else:
                    open_terms.append((m, 1))
            if not open_terms:
                if res:
                    raise SingularSystem(
                        f"power-sum identity {m} is inconsistent at p={p}"
                    )
                continue
            if residual_only:
                raise SingularSystem(
                    f"identity {m} still has undetermined coefficients at p={p}"
                )
            if len(open_terms) == 1:
                i, coeff = open_terms[0]
                known[i] = _exact_div(res, coeff)
                pending.discard(i)
                progressed = True
        return progressed

    while pending and scan(residual_only=False):
        pass
    if pending:
        _newton_bit_solve(p, sums, known, pending)
    scan(residual_only=True)  # every identity must now close
    return CharPoly(p, tuple(DeltaPoly(known.get(r, 0)) for r in range(1, big + 1)))


# ---------------------------------------------------------------------------
# fast route


def newton_initial_sums(cp: CharPoly) -> tuple[DeltaPoly, ...]:
    """Power sums N_0..N_(p+1) rebuilt forward from the s_r.

    Mod 2 the lone r*s_r term survives exactly at odd r, and N_0 counts the
    p+1 conjugate series, an even number, so N_0 = 0.
    """
    p = cp.p
    sums = [ZERO]
    for r in range(1, p + 2):
        acc = cp.s[r - 1].mask if r & 1 else 0
        for i in range(1, r):
            si = cp.s[i - 1].mask
            if si:
                acc ^= clmul(si, sums[r - i].mask)
        sums.append(DeltaPoly(acc))
    return tuple(sums)


def iter_hecke_fast(cp: CharPoly, kmax: int | None = None):
    """Stream the images of Delta^k for k = 0, 1, 2, ...

    Seeds from the rebuilt power sums, then runs the order-(p+1) recurrence
    with a ring window of the last p+2 values, so memory stays proportional
    to p times the current degree.
    """
    p = cp.p
    size = p + 2
    window = [0] * size
    head = 0
    k = 0
    for seed in newton_initial_sums(cp):
        if kmax is not None and k > kmax:
            return
        yield seed
        window[head] = seed.mask
        head = (head + 1) % size
        k += 1
    terms = [(r, sr.exponents()) for r, sr in enumerate(cp.s, 1) if sr]
    while kmax is None or k <= kmax:
        acc = 0
        for r, exps in terms:
            m = window[(head - r) % size]
            if m:
                for e in exps:
                    acc ^= m << e
        yield DeltaPoly(acc)
        window[head] = acc
        head = (head + 1) % size
        k += 1


def hecke_fast_range(cp: CharPoly, kmax: int) -> list[DeltaPoly]:
    """Images of Delta^0..Delta^kmax as a list."""
    if kmax < 0:
        raise ValueError("kmax must be nonnegative")
    return list(iter_hecke_fast(cp, kmax))


def hecke_fast(f: DeltaPoly, cp: CharPoly) -> DeltaPoly:
    """T_p of an arbitrary polynomial, monomial-wise over the fast stream."""
    if not f:
        return ZERO
    fm = f.mask
    acc = 0
    for k, img in enumerate(iter_hecke_fast(cp, f.degree)):
        if (fm >> k) & 1:
            acc ^= img.mask
    return DeltaPoly(acc)


# ---------------------------------------------------------------------------
# matrices on the odd-power basis


@dataclass(frozen=True, slots=True)
class GF2Matrix:
    """Square GF(2) matrix; row i is a packed bit mask over columns."""

    rows: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.rows)

    def __mul__(self, other: "GF2Matrix") -> "GF2Matrix":
        if self.n != other.n:
            raise ValueError("size mismatch")
        out = []
        for row in self.rows:
            acc = 0
            m = row
            while m:
                low = m & -m
                acc ^= other.rows[low.bit_length() - 1]
                m ^= low
            out.append(acc)
        return GF2Matrix(tuple(out))

    def power(self, e: int) -> "GF2Matrix":
        if e < 0:
            raise ValueError("negative matrix powers are not defined")
        result = GF2Matrix(tuple(1 << i for i in range(self.n)))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)

    def is_strictly_lower_triangular(self) -> bool:
        return all(row >> i == 0 for i, row in enumerate(self.rows))


def hecke_matrix(p: int, K: int) -> GF2Matrix:
    """Matrix of T_p on the basis of odd powers 1, 3, ..., K (naive images).

    Row i holds the expansion of the image of the (2i+1)-st power, so strict
    lower triangularity is exactly the degree-drop/nilpotence statement.
    """
    _require_odd_prime(p)
    if K < 1 or K % 2 == 0:
        raise ValueError("K must be a positive odd integer")
    images = _naive_monomial_range(p, K)
    rows = []
    for k in range(1, K + 1, 2):
        row = 0
        for e in images[k].exponents():
            if e % 2 == 0 or e > K:
                raise AssertionError(f"image of power {k} leaves the odd basis at p={p}")
            row |= 1 << ((e - 1) // 2)
        rows.append(row)
    return GF2Matrix(tuple(rows))


# ---------------------------------------------------------------------------
# low-degree closed forms


def _sigma1(n: int) -> int:
    total = 0
    i = 1
    while i * i <= n:
        if n % i == 0:
            total += i
            j = n // i
            if j != i:
                total += j
        i += 1
    return total


def delta7_coeff_sigma(n: int) -> int:
    """Coefficient of q^n in the 7th power, via the divisor sum / 8 mod 2."""
    if n <= 0 or n % 8 != 7:
        raise BadResidue(f"n must be positive and 7 mod 8, got {n}")
    s = _sigma1(n)
    if s % 8:
        raise AssertionError(f"divisor sum of {n} is not a multiple of 8")
    return (s // 8) & 1


def prop1_closed_form(p: int, k: int) -> DeltaPoly:
    """Image of Delta^k for k in {1,3,5,7}, as a closed form in p mod 8/16."""
    _require_odd_prime(p)
    if k not in (1, 3, 5, 7):
        raise BadK(f"no closed form for k={k}")
    r = p % 8
    if k == 1:
        return ZERO
    if k == 3:
        return monomial(1) if r == 3 else ZERO
    if k == 5:
        return monomial(1) if r == 5 else ZERO
    if r == 3:
        return monomial(5)
    if r == 5:
        return monomial(3)
    if p % 16 == 7:
        return monomial(1)
    return ZERO  # p = 1 mod 8, or p = 15 mod 16


# ---------------------------------------------------------------------------
# cache files


def charpoly_to_text(cp: CharPoly) -> str:
    """Serialize to the cache format: exponent lists, strictly decreasing."""
    lines = [f"p {cp.p}"]
    count = 0
    for r, sr in enumerate(cp.s, 1):
        exps = sr.exponents()
        count += len(exps)
        body = " ".join(str(e) for e in reversed(exps)) if exps else "-"
        lines.append(f"s{r}: {body}")
    lines.append(f"end {count}")
    return "\n".join(lines) + "\n"


def charpoly_from_text(text: str) -> CharPoly:
    """Parse the cache format back; trailing lines after `end` are ignored."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("p "):
        raise CacheFormatError("missing `p <value>` header")
    try:
        p = int(lines[0][2:])
    except ValueError as exc:
        raise CacheFormatError("malformed prime header") from exc
    if len(lines) < p + 3:
        raise CacheFormatError("truncated cache file")
    s = []
    count = 0
    for r in range(1, p + 2):
        line = lines[r]
        prefix = f"s{r}:"
        if not line.startswith(prefix):
            raise CacheFormatError(f"expected `{prefix}` on line {r + 1}")
        body = line[len(prefix) :].strip()
        if body == "-":
            s.append(ZERO)
            continue
        try:
            exps = [int(tok) for tok in body.split()]
        except ValueError as exc:
            raise CacheFormatError(f"bad exponent list for s{r}") from exc
        if any(e < 0 for e in exps) or any(
            a <= b for a, b in zip(exps, exps[1:])
        ):
            raise CacheFormatError(f"exponents of s{r} must strictly decrease")
        count += len(exps)
        s.append(DeltaPoly.from_exponents(exps))
    tail = lines[p + 2]
    if not tail.startswith("end "):
        raise CacheFormatError("missing `end <count>` checksum line")
    try:
        declared = int(tail[4:])
    except ValueError as exc:
        raise CacheFormatError("malformed checksum line") from exc
    if declared != count:
        raise CacheFormatError(f"checksum mismatch: {declared} declared, {count} found")
    return CharPoly(p, tuple(s))


def cache_dir() -> Path:
    return Path(os.environ.get("HECKE2_CACHE_DIR", "fp_cache"))


def cache_path(p: int) -> Path:
    return cache_dir() / f"fp_{p}.txt"


def write_charpoly(cp: CharPoly, path: Path | None = None) -> Path:
    target = path if path is not None else cache_path(cp.p)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(charpoly_to_text(cp))
    return target


def read_charpoly(p: int, path: Path | None = None) -> CharPoly:
    source = path if path is not None else cache_path(p)
    cp = charpoly_from_text(source.read_text())
    if cp.p != p:
        raise CacheFormatError(f"cache file holds p={cp.p}, expected {p}")
    return cp
