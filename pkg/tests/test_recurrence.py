import pytest

from gelfond import (
    RecurrenceDefectError,
    RecurrenceSpec,
    SingularSystemError,
    characteristic_roots,
    coefficients_from_sums,
    coefficients_spectral,
    cyclotomic_cosets,
    newman_sum_dp,
    newman_sum_enumerate,
    simple_prime_c1,
    verify_recurrence,
)


def test_coefficients_m17():
    spec = coefficients_spectral(cyclotomic_cosets(17))
    assert spec.coefficients == (-34, 17)
    assert spec.r == 2 and spec.h == 8
    assert max(spec.residuals) < 1e-9
    assert coefficients_from_sums(17, 0).coefficients == (-34, 17)


def test_coefficients_m3():
    assert coefficients_spectral(cyclotomic_cosets(3)).coefficients == (-3,)
    assert coefficients_from_sums(3, 2).coefficients == (-3,)


@pytest.mark.parametrize("p", [3, 5, 11, 13])
def test_primitive_prime_has_c1_minus_p(p):
    spec = coefficients_spectral(cyclotomic_cosets(p))
    assert spec.coefficients == (-p,)
    assert spec.r == 1 and spec.h == p - 1


def test_effective_roots_drive_m9():
    # coset {3,6} has size 2 < h = 6; raw roots would give (-6, 9) which fails
    spec = coefficients_spectral(cyclotomic_cosets(9))
    assert spec.coefficients == (-30, 81)
    verify_recurrence(spec, 0, depth=6, multipliers=(1, 3))
    wrong = RecurrenceSpec(m=9, r=2, h=6, coefficients=(-6, 9), residuals=(0.0, 0.0))
    with pytest.raises(RecurrenceDefectError):
        verify_recurrence(wrong, 0, depth=3, multipliers=(1,))


def test_verify_rejects_wrong_coefficients():
    wrong = RecurrenceSpec(m=17, r=2, h=8, coefficients=(-34, 16), residuals=(0.0, 0.0))
    with pytest.raises(RecurrenceDefectError):
        verify_recurrence(wrong, 0, depth=2, multipliers=(1,))


def test_verify_m17_paper_instances():
    # S(2^(n+17)) = 34 S(2^(n+9)) - 17 S(2^(n+1)) for n = 0..12,
    # and the same with dyadic bounds scaled by x in {1,3,5,7}
    for n in range(13):
        lhs = newman_sum_dp(17, 0, 1 << (n + 17))
        rhs = 34 * newman_sum_dp(17, 0, 1 << (n + 9)) - 17 * newman_sum_dp(17, 0, 1 << (n + 1))
        assert lhs == rhs, n
    for x in (1, 3, 5, 7):
        lhs = newman_sum_dp(17, 0, (1 << 17) * x)
        rhs = 34 * newman_sum_dp(17, 0, (1 << 9) * x) - 17 * newman_sum_dp(17, 0, 2 * x)
        assert lhs == rhs, x


def test_m3_simple_recurrence_all_multipliers():
    # S(8u) = 3 S(2u) for the residue-2 class
    for u in range(1, 101):
        assert newman_sum_enumerate(3, 2, 8 * u) == 3 * newman_sum_enumerate(3, 2, 2 * u)


def test_cross_method_equality_small_sweep():
    # Singular systems are genuine findings: they arise for every residue
    # when effective roots coincide (eta > 1) and for isolated residues whose
    # expansion misses a root (e.g. m=27, a=26).  The recurrence itself must
    # still hold, so verification is the arbiter in those cases.
    singular = []
    for m in range(3, 32, 2):
        spectral = coefficients_spectral(cyclotomic_cosets(m))
        for a in (0, 1, m - 1):
            try:
                sums = coefficients_from_sums(m, a)
            except SingularSystemError:
                singular.append((m, a))
                verify_recurrence(spectral, a, depth=4, multipliers=(1, 3))
                continue
            assert sums.coefficients == spectral.coefficients, (m, a)
    assert singular == [(15, 0), (15, 1), (15, 14), (21, 0), (21, 1), (21, 20),
                        (27, 26), (31, 1), (31, 30)]


def test_singular_system_reported_for_m15():
    with pytest.raises(SingularSystemError):
        coefficients_from_sums(15, 0)


def test_verification_small_sweep():
    for m in range(3, 32, 2):
        spec = coefficients_spectral(cyclotomic_cosets(m))
        for a in (0, 1):
            report = verify_recurrence(spec, a, depth=8, multipliers=(1, 3, 5))
            assert report.max_defect == 0
            assert report.checks == 12


def test_trailing_coefficient_is_modulus():
    # c_r = (-1)^r m exactly when every coset has full size h
    for m in range(3, 100, 2):
        dec = cyclotomic_cosets(m)
        if all(size == dec.h for size in dec.sizes):
            spec = coefficients_spectral(dec)
            assert spec.coefficients[-1] == (-1) ** dec.r * m, m


def test_recurrence_root_ties_to_spectral_growth():
    # dominant root of the monic polynomial equals v^h
    import numpy as np

    for m in range(3, 64, 2):
        dec = cyclotomic_cosets(m)
        spec = coefficients_spectral(dec)
        spectrum = characteristic_roots(dec)
        dominant = max(abs(z) for z in np.roots([1, *spec.coefficients]))
        assert dominant == pytest.approx(spectrum.v**spec.h, rel=1e-6), m


def test_simple_prime_c1_examples():
    assert simple_prime_c1(3, 2) == -3
    assert simple_prime_c1(3, 0) == -3
    assert simple_prime_c1(5, 1) == -5


def test_simple_prime_c1_all_residues():
    for p in (3, 5, 11, 13):
        for a in range(p):
            assert simple_prime_c1(p, a) == -p, (p, a)


def test_simple_prime_c1_validation():
    with pytest.raises(ValueError):
        simple_prime_c1(17, 0)  # 2 is not primitive mod 17
    with pytest.raises(ValueError):
        simple_prime_c1(5, 5)


def test_from_sums_validation():
    with pytest.raises(ValueError):
        coefficients_from_sums(15, 15)
    with pytest.raises(ValueError):
        coefficients_from_sums(8, 1)
