"""Integer linear recurrences satisfied by S(m, a, .) at h-step dyadic scales.

The effective roots Z_j of the spectral module are the roots of a monic
degree-r polynomial z^r + c_1 z^(r-1) + ... + c_r whose integer coefficients
drive both

    S(m, a, 2^(n + r*h + 1)) + sum_q c_q S(m, a, 2^(n + (r-q)*h + 1)) = 0
    S(m, a, 2^(r*h + 1) u)   + sum_q c_q S(m, a, 2^((r-q)*h + 1) u)   = 0

for every offset n >= 0 and every positive multiplier u.  The coefficients
are derived twice, independently: by expanding the root polynomial in
complex arithmetic, and by solving the integer linear system the first
identity induces at consecutive offsets, in exact rational arithmetic.
verify_recurrence then checks both identities with exact integer sums;
a passing report always has defect 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import mpmath

from .cosets import PRIMITIVE, CosetDecomposition, classify_prime, cyclotomic_cosets
from .spectral import (
    MP_ABS_TOL,
    ResidualError,
    _dps_for_bits,
    _unit_table_mp,
    characteristic_roots,
)
from .sums import newman_sum_dp

#: Offsets tried for the sum-based linear system before reporting singularity.
SYSTEM_OFFSETS = range(0, 6)


class SingularSystemError(ArithmeticError):
    """The sum-based system was singular at every tried offset.

    This genuinely happens when effective roots coincide (the sequence then
    satisfies a lower-order recurrence, so every r x r window is rank
    deficient); it is reported, never papered over.
    """


class NonIntegerCoefficientError(ArithmeticError):
    """An exactly-solved coefficient came out non-integral."""


class RecurrenceDefectError(ArithmeticError):
    """An exact-integer recurrence check failed."""


@dataclass(frozen=True)
class RecurrenceSpec:
    m: int
    r: int
    h: int
    coefficients: tuple[int, ...]   # c_1 .. c_r
    residuals: tuple[float, ...]    # pre-rounding distance to the integer


@dataclass(frozen=True)
class VerificationReport:
    m: int
    a: int
    depth: int
    multipliers: tuple[int, ...]
    checks: int
    max_defect: int  # 0 for a passing report


def _poly_from_roots(roots):
    """Monic polynomial coefficients [1, c_1, ..., c_r] from its roots."""
    poly = [roots[0] * 0 + 1] if roots else [1]
    for root in roots:
        nxt = [poly[0] * 0] * (len(poly) + 1)
        for i, c in enumerate(poly):
            nxt[i] += c
            nxt[i + 1] -= c * root
        poly = nxt
    return poly


def _effective_roots_mp(dec: CosetDecomposition):
    table = _unit_table_mp(dec.m)
    out = []
    for coset, size in zip(dec.cosets, dec.sizes):
        z = mpmath.mpc(1)
        for t in coset:
            z *= 1 - table[t]
        out.append(z ** (dec.h // size))
    return out


def coefficients_spectral(dec: CosetDecomposition) -> RecurrenceSpec:
    """c_i = (-1)^i e_i(Z_1, ..., Z_r) by expanding prod (z - Z_j).

    Machine arithmetic first; if any pre-rounding residual is suspicious for
    the coefficient scale, the whole expansion is redone in extended
    precision sized to the coefficient bound before giving up.
    """
    spectrum = characteristic_roots(dec)
    tail = _poly_from_roots(list(spectrum.effective_roots))[1:]
    scale = max(1.0, max(abs(c) for c in tail))
    trustworthy = math.isfinite(scale) and scale < 2.0**52
    coeffs = [round(c.real) for c in tail] if trustworthy else [0] * len(tail)
    residuals = (
        [abs(c - k) for c, k in zip(tail, coeffs)] if trustworthy else [math.inf]
    )
    tol = min(0.01, 1e-6 * scale)
    if max(residuals) > tol:
        # |c_i| <= C(r, i) * 2^(h i) < 2^(r (h+1)), so this precision leaves
        # plenty of correct fractional digits
        dps = _dps_for_bits(dec.r * (dec.h + 1) + 8)
        with mpmath.workdps(dps):
            tail_mp = _poly_from_roots(_effective_roots_mp(dec))[1:]
            coeffs = [int(mpmath.nint(c.real)) for c in tail_mp]
            residuals = [float(abs(c - k)) for c, k in zip(tail_mp, coeffs)]
        if max(residuals) > MP_ABS_TOL:
            raise ResidualError(
                f"m={dec.m}: coefficient residual {max(residuals):.3e} at "
                f"{dps} digits; coefficients may be genuinely non-integral"
            )
    return RecurrenceSpec(
        m=dec.m,
        r=dec.r,
        h=dec.h,
        coefficients=tuple(coeffs),
        residuals=tuple(float(x) for x in residuals),
    )


def _solve_fraction_system(rows, rhs):
    """Gauss-Jordan over exact Fractions; None if the matrix is singular."""
    n = len(rows)
    aug = [[Fraction(v) for v in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col]
        aug[col] = [v / inv for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [v - f * w for v, w in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def coefficients_from_sums(m: int, a: int) -> RecurrenceSpec:
    """Recover c_1..c_r from exact S values at consecutive dyadic offsets.

    Builds the r x r system of the offset identity at n = n0 .. n0+r-1 and
    solves it in exact rational arithmetic; offsets n0 = 0..5 are tried in
    turn when the matrix is singular.
    """
    dec = cyclotomic_cosets(m)
    if not 0 <= a < m:
        raise ValueError(f"residue must satisfy 0 <= a < m, got a={a}, m={m}")
    r, h = dec.r, dec.h
    for n0 in SYSTEM_OFFSETS:
        rows = [
            [newman_sum_dp(m, a, 1 << (n + (r - q) * h + 1)) for q in range(1, r + 1)]
            for n in range(n0, n0 + r)
        ]
        rhs = [-newman_sum_dp(m, a, 1 << (n + r * h + 1)) for n in range(n0, n0 + r)]
        solution = _solve_fraction_system(rows, rhs)
        if solution is None:
            continue
        if any(c.denominator != 1 for c in solution):
            raise NonIntegerCoefficientError(
                f"m={m}, a={a}, offset {n0}: non-integer solution {solution}"
            )
        return RecurrenceSpec(
            m=m,
            r=r,
            h=h,
            coefficients=tuple(int(c) for c in solution),
            residuals=(0.0,) * r,
        )
    raise SingularSystemError(
        f"m={m}, a={a}: system singular at every offset in {list(SYSTEM_OFFSETS)}"
    )


def verify_recurrence(
    spec: RecurrenceSpec,
    a: int,
    depth: int = 8,
    multipliers: tuple[int, ...] = (1, 3, 5),
) -> VerificationReport:
    """Exact-integer check of both recurrence identities.

    Offsets n = 0..depth and every multiplier u are checked; any nonzero
    defect raises RecurrenceDefectError naming the offending instance.
    """
    if depth < 1:
        raise ValueError(f"depth must be >= 1, got {depth}")
    m, r, h = spec.m, spec.r, spec.h
    if not 0 <= a < m:
        raise ValueError(f"residue must satisfy 0 <= a < m, got a={a}, m={m}")
    coeffs = spec.coefficients
    checks = 0
    for n in range(depth + 1):
        defect = newman_sum_dp(m, a, 1 << (n + r * h + 1))
        for q, c in enumerate(coeffs, start=1):
            defect += c * newman_sum_dp(m, a, 1 << (n + (r - q) * h + 1))
        checks += 1
        if defect:
            raise RecurrenceDefectError(
                f"m={m}, a={a}: offset identity fails at n={n} with defect {defect}"
            )
    for u in multipliers:
        if u < 1:
            raise ValueError(f"multipliers must be positive, got {u}")
        defect = newman_sum_dp(m, a, (1 << (r * h + 1)) * u)
        for q, c in enumerate(coeffs, start=1):
            defect += c * newman_sum_dp(m, a, (1 << ((r - q) * h + 1)) * u)
        checks += 1
        if defect:
            raise RecurrenceDefectError(
                f"m={m}, a={a}: multiplier identity fails at u={u} with defect {defect}"
            )
    return VerificationReport(
        m=m,
        a=a,
        depth=depth,
        multipliers=tuple(multipliers),
        checks=checks,
        max_defect=0,
    )


def simple_prime_c1(p: int, a: int) -> int:
    """c_1 for a prime with 2 primitive, from a single exact sum:
    (-1)^(s(a)+1) * S(p, a, 2^p) for a in {0, 1}, with bound a * 2^p for
    a >= 2 (where the single term below 2a pins the initial condition)."""
    cls = classify_prime(p)
    if cls.classification != PRIMITIVE:
        raise ValueError(f"2 is not a primitive root of {p} (class {cls.classification})")
    if not 0 <= a < p:
        raise ValueError(f"residue must satisfy 0 <= a < p, got a={a}, p={p}")
    u = 1 if a <= 1 else a
    sign = 1 if a.bit_count() & 1 else -1  # (-1)^(s(a)+1)
    return sign * newman_sum_dp(p, a, u << p)
