"""Exact Newman-like alternating digit sums over residue classes.

The central quantity is

    S(m, a, x) = sum of (-1)^s(n) over 0 <= n < x with n == a (mod m),

where s(n) is the number of 1-bits of n.  Two independent evaluators are
provided: direct enumeration (the oracle, capped) and a digit-DP over the
binary expansion of x.  Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from typing import NamedTuple

#: Default upper bound on x for the O(x/m) enumeration path.
ENUMERATION_CAP = 1 << 26


class EnumerationCapError(ValueError):
    """Raised when enumeration is asked to walk past its configured cap."""


class ParityCount(NamedTuple):
    """Counts of n < x, n == a (mod m) split by digit-sum parity."""

    t_even: int
    t_odd: int


def _check_query(m: int, a: int, x: int) -> None:
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got m={m}")
    if not 0 <= a < m:
        raise ValueError(f"residue must satisfy 0 <= a < m, got a={a}, m={m}")
    if x < 0:
        raise ValueError(f"upper bound must be >= 0, got x={x}")


def digit_sum(n: int) -> int:
    """Number of 1's in the binary expansion of n (n >= 0)."""
    if n < 0:
        raise ValueError(f"digit_sum needs n >= 0, got {n}")
    return n.bit_count()


def binary_exponents(n: int) -> list[int]:
    """Strictly decreasing exponents with n = sum of 2**e (n >= 1)."""
    if n < 1:
        raise ValueError(f"binary_exponents needs n >= 1, got {n}")
    return [i for i in range(n.bit_length() - 1, -1, -1) if (n >> i) & 1]


def newman_sum_enumerate(m: int, a: int, x: int, cap: int = ENUMERATION_CAP) -> int:
    """S(m, a, x) by direct enumeration. Refuses x > cap; use the DP instead."""
    _check_query(m, a, x)
    if x > cap:
        raise EnumerationCapError(
            f"x={x} exceeds the enumeration cap {cap}; use newman_sum_dp"
        )
    total = 0
    for n in range(a, x, m):
        total += 1 - ((n.bit_count() & 1) << 1)
    return total


def _parity_dp(m: int, a: int, x: int) -> tuple[int, int]:
    """(even, odd) digit-sum parity counts of n < x, n == a (mod m).

    Digit DP over the binary expansion of x, most significant bit first.
    level[i] holds, per residue class mod m, how many i-bit suffixes have
    even/odd popcount; each set bit of x contributes one block of numbers
    that agree with x above the bit and are free below it.
    """
    if x <= 0:
        return 0, 0
    nbits = x.bit_length()
    ev = [0] * m
    od = [0] * m
    ev[0] = 1
    levels = [(ev, od)]
    pw = 1 % m  # 2^i mod m
    for _ in range(nbits):
        pev, pod = levels[-1]
        nev = pev[:]
        nod = pod[:]
        for c in range(m):
            c2 = c + pw
            if c2 >= m:
                c2 -= m
            nev[c2] += pod[c]
            nod[c2] += pev[c]
        levels.append((nev, nod))
        pw = pw * 2 % m
    even = odd = 0
    for i in range(nbits - 1, -1, -1):
        if not (x >> i) & 1:
            continue
        head = x >> (i + 1)
        head_res = (head % m) * pow(2, i + 1, m) % m
        need = (a - head_res) % m
        e = levels[i][0][need]
        o = levels[i][1][need]
        if head.bit_count() & 1:
            e, o = o, e
        even += e
        odd += o
    return even, odd


def newman_sum_dp(m: int, a: int, x: int) -> int:
    """S(m, a, x) in O(m log x) exact integer work via digit DP."""
    _check_query(m, a, x)
    even, odd = _parity_dp(m, a, x)
    return even - odd


def parity_counts(m: int, a: int, x: int) -> ParityCount:
    """ParityCount(t_even, t_odd) with t_even - t_odd = S(m, a, x) and
    t_even + t_odd = #{n < x : n == a (mod m)}."""
    _check_query(m, a, x)
    return ParityCount(*_parity_dp(m, a, x))


def reduce_even(m: int, a: int) -> tuple[int, int, int]:
    """Halving step for even moduli.

    Returns (m', a', sign) = (m/2, a//2, (-1)^a) with
    S(m, a, 2x) = sign * S(m', a', x) for every x.
    """
    if m < 2 or m % 2:
        raise ValueError(f"reduce_even needs an even modulus >= 2, got m={m}")
    if not 0 <= a < m:
        raise ValueError(f"residue must satisfy 0 <= a < m, got a={a}, m={m}")
    return m // 2, a // 2, -1 if a & 1 else 1
