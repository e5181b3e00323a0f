"""Acceptance suite: one test per criterion, each printing a PASS line with
its runtime.  Run with `pytest tests/test_acceptance.py -v -s`.

Criterion 9 may surface findings (singular systems); those are printed and
only fail the suite if the exact recurrence verification itself fails.
"""

import json
import math
import random
import time

import gelfond.cli as cli
from gelfond import (
    LAMBDA,
    SingularSystemError,
    alpha,
    alpha_closed_prime,
    characteristic_roots,
    coefficients_from_sums,
    coefficients_spectral,
    cyclotomic_cosets,
    dyadic_profile,
    envelope_check,
    fit_exponent,
    newman_sum_dp,
    newman_sum_enumerate,
    newman_sum_explicit,
    reduce_even,
    scan_semiprimitive,
    verify_recurrence,
)

PAPER_ALPHA_4DEC = {
    3: "0.7924", 5: "0.5804", 7: "0.4678", 11: "0.3459", 13: "0.3083",
    17: "0.6332", 19: "0.2359", 23: "0.2056", 29: "0.1734", 31: "0.6358",
    37: "0.1447", 41: "0.4339", 43: "0.6337", 47: "0.1207",
}


class _Timer:
    def __init__(self, budget_s):
        self.budget = budget_s

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.elapsed = time.perf_counter() - self.start
        return False


def _report(number, timer, detail):
    print(f"ACCEPTANCE {number} PASS ({timer.elapsed:.2f}s): {detail}", flush=True)


def test_criterion_01_paper_alpha_table(capsys):
    with _Timer(1.0) as t:
        code = cli.main(["table", "--set", "paper"])
        out = capsys.readouterr().out
        assert code == 0
        rows = json.loads(out)["result"]["rows"]
        got = {row["m"]: row["alpha_4dec"] for row in rows}
        assert got == PAPER_ALPHA_4DEC
    assert t.elapsed < 1.0, f"table took {t.elapsed:.2f}s (budget 1s)"
    _report(1, t, "all 14 published alpha values reproduced under truncation")


def test_criterion_02_m17_bundle():
    with _Timer(5.0) as t:
        dec = cyclotomic_cosets(17)
        assert [list(c) for c in dec.cosets] == [
            [1, 2, 4, 8, 16, 15, 13, 9],
            [3, 6, 12, 7, 14, 11, 5, 10],
        ]
        report = alpha(17)
        per_rep = dict(report.per_rep)
        assert abs(per_rep[1] - (-0.12228749)) <= 1e-6
        assert abs(per_rep[3] - 0.63322035) <= 1e-6
        closed = math.log(17 + 4 * math.sqrt(17)) / math.log(256)
        assert abs(report.alpha - closed) <= 1e-9

        spectral = coefficients_spectral(dec)
        from_sums = coefficients_from_sums(17, 0)
        assert spectral.coefficients == (-34, 17)
        assert from_sums.coefficients == (-34, 17)

        expected = {1: 1, 2: 1, 9: 21, 10: 29, 17: 697, 18: 969}
        for nu, value in expected.items():
            x = 1 << nu
            assert newman_sum_enumerate(17, 0, x) == value
            assert newman_sum_dp(17, 0, x) == value
            assert newman_sum_explicit(17, 0, x) == value

        # offset identity for n = 0..12 and scaled identity for x in {1,3,5,7}
        verified = verify_recurrence(spectral, 0, depth=12, multipliers=(1, 3, 5, 7))
        assert verified.max_defect == 0
    assert t.elapsed < 5.0, f"m=17 bundle took {t.elapsed:.2f}s (budget 5s)"
    _report(2, t, "cosets, exponents, coefficients, six exact sums, 17 recurrence checks")


def test_criterion_03_oracle_equivalence():
    with _Timer(60.0) as t:
        rng = random.Random(20260810)
        for m in range(3, 22, 2):
            for a in range(m):
                for _ in range(50):
                    x = rng.randrange(1 << 16)
                    enum = newman_sum_enumerate(m, a, x)
                    assert newman_sum_dp(m, a, x) == enum, (m, a, x)
                    assert newman_sum_explicit(m, a, x) == enum, (m, a, x)
    assert t.elapsed < 60.0, f"oracle equivalence took {t.elapsed:.2f}s (budget 60s)"
    _report(3, t, "enumerate = dp = explicit on 6000 random queries, odd m in [3,21]")


def test_criterion_04_even_reduction():
    with _Timer(60.0) as t:
        rng = random.Random(42)
        for m in (2, 4, 6, 10, 12, 20):
            for a in range(m):
                m2, a2, sign = reduce_even(m, a)
                for _ in range(100):
                    x = rng.randrange((1 << 12) + 1)
                    lhs = newman_sum_enumerate(m, a, 2 * x)
                    rhs = sign * newman_sum_enumerate(m2, a2, x)
                    assert lhs == rhs, (m, a, x)
    _report(4, t, "halving identity exact for m in {2,4,6,10,12,20}, 100 x per class")


def test_criterion_05_closed_forms():
    with _Timer(60.0) as t:
        for p in (3, 5, 11, 13, 19, 29, 37, 53, 7, 23, 47, 71, 79, 103):
            closed = math.log(p) / ((p - 1) * math.log(2))
            assert abs(alpha(p).alpha - closed) <= 1e-9, p
            assert abs(alpha_closed_prime(p) - closed) <= 1e-15, p
            # sine-product identity by direct multiplication
            prod = math.prod(math.sin(l * math.pi / p) for l in range(1, p))
            target = p / 2 ** (p - 1)
            assert abs(prod - target) <= 1e-10, p
            assert abs(prod - target) / target <= 1e-10, p
    _report(5, t, "ln p/((p-1) ln 2) and the sine-product identity, 14 primes")


def test_criterion_06_semiprimitive_scan():
    with _Timer(60.0) as t:
        assert scan_semiprimitive(263) == [7, 23, 47, 71, 79, 103, 167, 191, 199, 239, 263]
    _report(6, t, "semiprimitive scan to 263 returns the 11 published primes")


def test_criterion_07_multiples_of_three():
    with _Timer(60.0) as t:
        for m in (3, 9, 15, 21, 33, 45):
            assert abs(alpha(m).alpha - LAMBDA) <= 1e-9, m
        for m in range(3, 100, 2):
            if m % 3:
                assert abs(alpha(m).alpha - LAMBDA) > 1e-6, m
    _report(7, t, "alpha = ln3/ln4 iff 3 | m, odd m <= 99")


def test_criterion_08_spectral_invariants():
    with _Timer(60.0) as t:
        for m in range(3, 100, 2):
            spectrum = characteristic_roots(cyclotomic_cosets(m))
            prod = 1 + 0j
            for z in spectrum.roots:
                prod *= z
            assert abs(prod - m) <= 1e-6 * m, m
            assert abs(alpha(m).alpha - math.log2(spectrum.v)) <= 1e-9, m
    _report(8, t, "prod z_j = m and alpha = log2 v for all odd m <= 99")


def test_criterion_09_recurrence_suite():
    findings = []
    with _Timer(300.0) as t:
        for m in range(3, 64, 2):
            dec = cyclotomic_cosets(m)
            spectral = coefficients_spectral(dec)
            for a in (0, 1):
                try:
                    from_sums = coefficients_from_sums(m, a)
                except SingularSystemError as exc:
                    findings.append(str(exc))
                else:
                    assert from_sums.coefficients == spectral.coefficients, (m, a)
                report = verify_recurrence(spectral, a, depth=8, multipliers=(1, 3, 5))
                assert report.max_defect == 0, (m, a)
    assert t.elapsed < 300.0, f"recurrence suite took {t.elapsed:.2f}s (budget 300s)"
    for finding in findings:
        print(f"  finding (non-fatal): {finding}", flush=True)
    _report(9, t, f"31 moduli verified with zero defect; {len(findings)} singular-system findings")


def test_criterion_10_empirical():
    with _Timer(600.0) as t:
        profile3 = dyadic_profile(3, 0, 28)
        fit3 = fit_exponent(profile3)
        assert 0.74 <= fit3.exponent_estimate <= 0.85, fit3

        profile5 = dyadic_profile(5, 0, 28)
        fit5 = fit_exponent(profile5)
        assert 0.48 <= fit5.exponent_estimate <= 0.68, fit5

        # streaming boundaries agree exactly with the DP evaluator
        for profile in (profile3, profile5):
            for nu, value in enumerate(profile.boundary_sums):
                assert value == newman_sum_dp(profile.m, profile.a, 1 << nu), (
                    profile.m,
                    nu,
                )

        # soft O/Omega envelopes for every odd m <= 21 (scan depth 26)
        for m in range(3, 22, 2):
            profile = dyadic_profile(m, 0, 26)
            report = envelope_check(profile, alpha(m).alpha)
            assert report.upper_violations == (), (m, report.upper_violations)
            assert report.omega_attained, (m, report.omega_margin)
    assert t.elapsed < 600.0, f"empirical suite took {t.elapsed:.2f}s (budget 600s)"
    _report(
        10,
        t,
        f"fits m=3: {fit3.exponent_estimate:.4f}, m=5: {fit5.exponent_estimate:.4f}; "
        "boundaries exact; envelopes hold for odd m <= 21",
    )
