"""Rigorous interval enclosures for the degree-bound calculator.

Built on mpmath's outward-rounded interval arithmetic, with adaptive
precision escalation and exact Fraction endpoints (binary floats convert
exactly).  The driver computes alpha = k*e for an exact integer k, the
ceiling of alpha^alpha when its digit count is affordable, and a rigorous
log10 enclosure of that ceiling either way.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass
from fractions import Fraction

from mpmath import iv, mp
from mpmath.libmp import to_rational


def _mpf_to_fraction(x) -> Fraction:
    p, q = to_rational(x._mpf_)
    return Fraction(int(p), int(q))


def _interval_to_fractions(x) -> tuple[Fraction, Fraction]:
    mp_prev = mp.prec
    try:
        mp.prec = iv.prec + 8
        return _mpf_to_fraction(mp.mpf(x.a)), _mpf_to_fraction(mp.mpf(x.b))
    finally:
        mp.prec = mp_prev


def _ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


@dataclass(frozen=True)
class PowerEnclosure:
    """A rigorous enclosure of alpha = k*e and of n = ceil(alpha^alpha)."""

    k: int
    alpha_lo: Fraction
    alpha_hi: Fraction
    n: int | None
    log10_lo: Fraction
    log10_hi: Fraction
    digits: int
    precision_bits: int


def scaled_e_interval(k: int, precision_bits: int) -> tuple[Fraction, Fraction]:
    """Exact-endpoint enclosure of k*e at the given working precision."""
    prev = iv.prec
    try:
        iv.prec = precision_bits
        return _interval_to_fractions(iv.mpf(k) * iv.e)
    finally:
        iv.prec = prev


def power_self_enclosure(k: int, digit_cap: int = 100_000,
                         precision_bits: int | None = None) -> PowerEnclosure:
    """Enclose alpha = k*e and n = ceil(alpha^alpha) for an integer k >= 1.

    The working precision starts at the requested number of bits (or 96)
    and doubles until the ceiling is pinned between the interval endpoints;
    when the digit count of n exceeds ``digit_cap`` the exact integer is
    skipped and only the log10 enclosure is reported.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    prev = iv.prec
    bits = max(precision_bits or 96, 96)
    try:
        iv.prec = bits
        alpha = iv.mpf(k) * iv.e
        x = iv.exp(alpha * iv.log(alpha))
        log10_x = iv.log(x) / iv.log(iv.mpf(10))
        digits = int(_interval_to_fractions(log10_x)[1]) + 1
        want_exact = digits <= digit_cap
        if want_exact:
            needed = int(digits * 3.33) + 64
            if bits < needed:
                bits = needed
        n_exact = None
        for _ in range(8):
            iv.prec = bits
            alpha = iv.mpf(k) * iv.e
            x = iv.exp(alpha * iv.log(alpha))
            lo, hi = _interval_to_fractions(x)
            if not want_exact:
                break
            if _ceil_fraction(lo) == _ceil_fraction(hi):
                n_exact = _ceil_fraction(lo)
                break
            bits *= 2
        alpha_lo, alpha_hi = _interval_to_fractions(alpha)
        # n - 1 < alpha^alpha <= n, so log10(n) lies between log10(x) and
        # log10(x + 1); widen the upper endpoint accordingly.
        log10_n = iv.log(x + 1) / iv.log(iv.mpf(10))
        log10_lo = _interval_to_fractions(iv.log(x) / iv.log(iv.mpf(10)))[0]
        log10_hi = _interval_to_fractions(log10_n)[1]
        if n_exact is not None:
            digits = _digit_count(n_exact)
        return PowerEnclosure(k, alpha_lo, alpha_hi, n_exact, log10_lo, log10_hi,
                              digits, bits)
    finally:
        iv.prec = prev


def _digit_count(n: int) -> int:
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(max(sys.get_int_max_str_digits(), 10_000_000))
    return len(str(n))


def int_to_str(n: int) -> str:
    """str() for big integers regardless of the interpreter's digit guard."""
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(max(sys.get_int_max_str_digits(), 10_000_000))
    return str(n)


def fraction_to_decimal(x: Fraction, places: int, round_up: bool) -> str:
    """Directed decimal rendering of a Fraction (outward rounding helper)."""
    sign = "-" if x < 0 else ""
    y = -x if x < 0 else x
    scaled = y.numerator * 10 ** places
    q, r = divmod(scaled, y.denominator)
    if r and (round_up != (x < 0)):
        q += 1
    digits = str(q).rjust(places + 1, "0")
    whole, frac = digits[:-places] or "0", digits[-places:]
    return f"{sign}{whole}.{frac}" if places else f"{sign}{whole}"
