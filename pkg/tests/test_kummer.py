from fractions import Fraction

import pytest

from kummerchi.dd_partitions import EnumerationCapError, count_pd
from kummerchi.kummer import (
    Check,
    KummerRow,
    Report,
    chi_kummer_closed,
    chi_kummer_stratified,
    dt_invariant,
    kummer_rows,
    ns_from_c,
    partition_count_table,
    run_all_verifiers,
    sigma,
    verify_chi_series,
    verify_first_order,
    verify_sigma2_convolution,
    verify_single_step,
)
from kummerchi.series import log_coefficients, product_expansion


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def test_sigma_examples():
    assert sigma(2, 1) == 1
    assert sigma(2, 6) == 50
    assert sigma(1, 4) == 7
    assert sigma(0, 12) == 6
    with pytest.raises(ValueError):
        sigma(2, 0)


def test_sigma_against_naive_divisor_sum():
    for n in range(1, 60):
        for k in (0, 1, 2, 3):
            assert sigma(k, n) == sum(d**k for d in divisors(n))


def test_chi_closed_examples():
    assert chi_kummer_closed(1) == 1
    assert chi_kummer_closed(2) == 160
    assert chi_kummer_closed(3) == 2430
    with pytest.raises(ValueError):
        chi_kummer_closed(0)


def test_chi_stratified_hand_case():
    # n = 2, g = 3: alpha = 2^1 gives c = 2, P2(2) = 3; alpha = 1^2 gives c = -1
    assert chi_kummer_stratified(2, 3) == 2**5 * (2 * 3 - 1)
    assert chi_kummer_stratified(2, 3) == 160
    assert chi_kummer_stratified(2, 2) == 24
    assert chi_kummer_stratified(1, 4) == 1


def test_chi_routes_agree():
    table = partition_count_table(2, 16)
    for n in range(1, 17):
        assert chi_kummer_closed(n) == chi_kummer_stratified(n, 3, table=table)


def test_ns_from_c_examples():
    assert ns_from_c(3, 3) == 10
    assert ns_from_c(2, 2) == 3
    assert ns_from_c(5, 1) == 1
    with pytest.raises(ValueError):
        ns_from_c(0, 3)
    with pytest.raises(ValueError):
        ns_from_c(3, 0)


def test_ns_from_c_closed_forms():
    for n in range(1, 16):
        assert ns_from_c(n, 1) == 1
        assert ns_from_c(n, 2) == sigma(1, n)
        assert ns_from_c(n, 3) == sigma(2, n)


def test_three_routes_to_sigma2():
    # divisor sums, the signed stratification, and the series logarithm
    s = log_coefficients(partition_count_table(2, 15))
    for n in range(1, 16):
        assert sigma(2, n) == ns_from_c(n, 3) == n * s[n - 1]


def test_dt_examples():
    assert dt_invariant(1) == 1
    assert dt_invariant(2) == Fraction(-5, 2)
    assert dt_invariant(3) == Fraction(10, 3)


def test_dt_formula_and_denominators():
    for n in range(1, 21):
        dt = dt_invariant(n)
        assert dt == (-1) ** (n + 1) * Fraction(sigma(2, n), n)
        assert n % dt.denominator == 0


def test_partition_count_table_small_d():
    assert partition_count_table(0, 5) == [1] * 6
    assert partition_count_table(1, 6) == [1, 1, 2, 3, 5, 7, 11]
    assert partition_count_table(2, 6) == [1, 1, 3, 6, 13, 24, 48]
    assert partition_count_table(1, 0) == [1]


def test_partition_count_table_d3_cross_checked():
    assert partition_count_table(3, 8) == [count_pd(3, n) for n in range(9)]
    with pytest.raises(EnumerationCapError):
        partition_count_table(3, 13)
    with pytest.raises(ValueError):
        partition_count_table(-1, 5)


def test_kummer_rows_threefold():
    rows = kummer_rows(6, g=3)
    assert [r.n for r in rows] == [1, 2, 3, 4, 5, 6]
    for r in rows:
        assert r.chi == r.n**5 * r.sigma2
        assert r.dt == (-1) ** (r.n + 1) * Fraction(r.sigma2, r.n)
        assert r.s == Fraction(r.sigma2, r.n)
        assert r.n % r.dt.denominator == 0
    assert rows[1] == KummerRow(
        n=2, sigma2=5, chi=160, dt=Fraction(-5, 2), s=Fraction(5, 2)
    )


def test_kummer_rows_other_genus():
    rows = kummer_rows(4, g=2)
    # chi = n^3 sigma_1(n) for Abelian surfaces
    assert [r.chi for r in rows] == [n**3 * sigma(1, n) for n in range(1, 5)]
    assert rows[1].dt == Fraction(-3, 2)
    ones = kummer_rows(5, g=1)
    assert [r.chi for r in ones] == [1, 2, 3, 4, 5]
    with pytest.raises(ValueError):
        kummer_rows(0)


def test_report_structure():
    good = Check("demo", 1, True, "1", "1")
    bad = Check("demo", 2, False, "1", "2", g=3, detail="why")
    report = Report("demo", (good, bad))
    assert not report.passed
    assert report.failures() == [bad]
    assert Report("empty", ()).passed


def test_verify_sigma2_convolution():
    report = verify_sigma2_convolution(12)
    assert report.passed
    assert len(report.checks) == 12
    first = report.checks[0]
    assert (first.n, first.lhs, first.rhs) == (1, "1", "1")


def test_verify_single_step():
    report = verify_single_step(10)
    assert report.passed
    # base cases are skipped: no checks mention a single-part alpha
    assert not any(c.detail.startswith("alpha=5^1 ") for c in report.checks)
    # every composite alpha appears with its closure line
    assert any(c.detail == "alpha=1^2 closure" for c in report.checks)
    assert any("g3-fibres" in c.detail for c in report.checks)


def test_verify_chi_series_all_supported_genera():
    for g in (1, 2, 3):
        assert verify_chi_series(g, 12).passed
    assert verify_chi_series(4, 8).passed
    report = verify_chi_series(3, 6)
    assert any(c.detail == "closed-form" for c in report.checks)
    assert all(c.g == 3 for c in report.checks)


def test_verify_chi_series_cap_propagates():
    with pytest.raises(EnumerationCapError):
        verify_chi_series(4, 13)
    assert verify_chi_series(4, 13, enum_cap=13).passed


def test_verify_first_order():
    assert verify_first_order(2, 10).passed
    assert verify_first_order(3, 10).passed
    assert verify_first_order(1, 10).passed


def test_run_all_verifiers():
    reports = run_all_verifiers(6, [1, 3])
    names = [r.name for r in reports]
    assert names == [
        "sigma2-convolution",
        "single-step",
        "chi-series(g=1)",
        "first-order(g=1)",
        "chi-series(g=3)",
        "first-order(g=3)",
    ]
    assert all(r.passed for r in reports)
