"""Euler characteristics of generalized Kummer schemes and the identity harness.

For an Abelian variety A of dimension g, the generalized Kummer scheme
K^n A sits inside the Hilbert scheme of n + 1 points as the fibre of the
summation map over 0.  Its Euler characteristic is computed here along
two independent routes:

* closed form, g = 3 only:  chi(K^n) = n^5 * sigma_2(n);
* stratification by the partition type alpha of the supporting cycle,
  any g:  chi(K^n) = n^(2g-1) * sum over alpha of n of
  c(alpha) * prod_i P_{g-1}(i)^(alpha_i),
  with c the signed weights from `partitions` and P_{g-1} the counts of
  (g-1)-dimensional partitions (the punctual Hilbert scheme counts of
  A^g at a point).

Both tie into one generating identity: writing s_n for the logarithmic
coefficients of sum_n P_{g-1}(n) q^n, chi(K^n) = n^(2g) * s_n.  The
verify_* functions check all of this coefficient by coefficient with
exact arithmetic and return structured reports that the CLI and the
test suite share.  A failed check is data, not an exception; caps on
brute-force enumeration do raise (`EnumerationCapError`), so resource
refusal is never conflated with a failed identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

from .dd_partitions import check_enumeration_cap, count_pd, count_pd_alt
from .partitions import (
    c_value,
    enumerate_partitions,
    num_parts,
    remove_part,
    weighted_product,
)
from .series import FirstOrderSeries, TruncatedSeries, log_coefficients, product_expansion

__all__ = [
    "sigma",
    "chi_kummer_closed",
    "chi_kummer_stratified",
    "dt_invariant",
    "ns_from_c",
    "partition_count_table",
    "KummerRow",
    "kummer_rows",
    "Check",
    "Report",
    "verify_sigma2_convolution",
    "verify_single_step",
    "verify_chi_series",
    "verify_first_order",
    "run_all_verifiers",
]


def sigma(k: int, n: int) -> int:
    """Sum of the k-th powers of the divisors of n >= 1, by trial division."""
    if n < 1:
        raise ValueError("sigma is defined for n >= 1")
    total = 0
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            total += d**k
            q = n // d
            if q != d:
                total += q**k
    return total


def chi_kummer_closed(n: int) -> int:
    """chi(K^n) of an Abelian threefold: n^5 * sigma_2(n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return n**5 * sigma(2, n)


def partition_count_table(d: int, max_n: int, enum_cap: int | None = None) -> list[int]:
    """[P_d(0), ..., P_d(max_n)] for d >= 0; P_0(n) = 1 for all n.

    d = 1 and d = 2 come from the Euler and MacMahon product expansions;
    d >= 3 is counted by the layered recursion and cross-checked against
    the DFS counter, so it is subject to the enumeration cap.
    """
    if d < 0:
        raise ValueError("d must be nonnegative")
    if max_n < 0:
        raise ValueError("max_n must be nonnegative")
    if d == 0:
        return [1] * (max_n + 1)
    if d <= 2:
        ser = product_expansion((lambda k: 1) if d == 1 else (lambda k: k), max_n)
        values = []
        for c in ser.coeffs:
            if c.denominator != 1:
                raise ArithmeticError(f"non-integral partition count {c}")
            values.append(int(c))
        return values
    check_enumeration_cap(d, max_n, enum_cap)
    values = []
    for n in range(max_n + 1):
        v = count_pd(d, n)
        alt = count_pd_alt(d, n, enum_cap=enum_cap)
        if v != alt:
            raise ArithmeticError(f"P_{d}({n}): layered gives {v}, DFS gives {alt}")
        values.append(v)
    return values


def ns_from_c(
    n: int, g: int, table: Sequence[int] | None = None, enum_cap: int | None = None
) -> int:
    """n * s_n out of the signed recursion: sum over alpha of n of c(alpha) * prod P_{g-1}.

    Equals sigma_2(n) at g = 3, sigma_1(n) at g = 2 and 1 at g = 1.
    `table` may carry a precomputed `partition_count_table(g - 1, >= n)`.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if g < 1:
        raise ValueError("g must be >= 1")
    if table is None:
        table = partition_count_table(g - 1, n, enum_cap=enum_cap)
    return sum(c_value(a) * weighted_product(a, table) for a in enumerate_partitions(n))


def chi_kummer_stratified(
    n: int, g: int, table: Sequence[int] | None = None, enum_cap: int | None = None
) -> int:
    """chi(K^n) for Abelian g-folds via the partition stratification."""
    return n ** (2 * g - 1) * ns_from_c(n, g, table=table, enum_cap=enum_cap)


def dt_invariant(n: int) -> Fraction:
    """The degree-n DT invariant of the threefold: (-1)^(n+1) * sigma_2(n) / n.

    Computed both as written and as (-1)^(n+1) * chi(K^n) / n^6; the two
    must agree exactly or something inside this package is broken.
    """
    sign = 1 if n % 2 else -1
    via_chi = Fraction(sign * chi_kummer_closed(n), n**6)
    direct = Fraction(sign * sigma(2, n), n)
    if via_chi != direct:
        raise ArithmeticError(f"DT mismatch at n={n}: {via_chi} vs {direct}")
    return direct


@dataclass(frozen=True)
class KummerRow:
    """One table row: everything the CLI prints for a single n."""

    n: int
    sigma2: int
    chi: int
    dt: Fraction
    s: Fraction


def kummer_rows(max_n: int, g: int = 3, enum_cap: int | None = None) -> list[KummerRow]:
    """Rows for n = 1..max_n at a fixed g.

    chi uses the closed formula at g = 3 and the stratified sum for any
    other g; dt generalizes the threefold DT invariant as
    (-1)^(n+1) * chi / n^(2g), which is (-1)^(n+1) * s_n.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    table = partition_count_table(g - 1, max_n, enum_cap=enum_cap)
    s = log_coefficients(table)
    rows = []
    for n in range(1, max_n + 1):
        if g == 3:
            chi = chi_kummer_closed(n)
        else:
            chi = chi_kummer_stratified(n, g, table=table)
        sign = 1 if n % 2 else -1
        rows.append(
            KummerRow(
                n=n,
                sigma2=sigma(2, n),
                chi=chi,
                dt=sign * Fraction(chi, n ** (2 * g)),
                s=s[n - 1],
            )
        )
    return rows


@dataclass(frozen=True)
class Check:
    """One exact identity instance, with both sides kept for the record."""

    identity: str
    n: int
    ok: bool
    lhs: str
    rhs: str
    g: int | None = None
    detail: str = ""


@dataclass(frozen=True)
class Report:
    """Everything one verifier checked."""

    name: str
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


def verify_sigma2_convolution(max_n: int) -> Report:
    """n * P_2(n) = sum_{k=1..n} sigma_2(k) * P_2(n-k), P_2 from the product expansion."""
    p2 = partition_count_table(2, max_n)
    checks = []
    for n in range(1, max_n + 1):
        lhs = n * p2[n]
        rhs = sum(sigma(2, k) * p2[n - k] for k in range(1, n + 1))
        checks.append(Check("sigma2-convolution", n, lhs == rhs, str(lhs), str(rhs)))
    return Report("sigma2-convolution", tuple(checks))


def verify_single_step(max_n: int) -> Report:
    """Exhaustive check of the one-part-removal relation on c, n = 1..max_n.

    For every alpha of n with at least two parts and every part size i
    present in alpha:

        c(alpha-hat-i) * n * (parts(alpha) - 1) = -alpha_i * (n - i) * c(alpha)

    plus the same relation with the g = 3 geometric factors (n-i)^6/n^6
    left uncancelled, plus the closure: summing over the distinct sizes
    i recovers c(alpha) = -sum_i c(alpha-hat-i), which is the defining
    recursion.  Single-part alpha are the recursion's base case and are
    skipped.
    """
    checks = []
    for n in range(1, max_n + 1):
        for alpha in enumerate_partitions(n):
            p = num_parts(alpha)
            if p < 2:
                continue
            ca = c_value(alpha)
            removed_total = 0
            for i, m in enumerate(alpha.mult, start=1):
                if not m:
                    continue
                chat = c_value(remove_part(alpha, i))
                removed_total += chat
                lhs = chat * n * (p - 1)
                rhs = -m * (n - i) * ca
                checks.append(
                    Check(
                        "single-step",
                        n,
                        lhs == rhs,
                        str(lhs),
                        str(rhs),
                        detail=f"alpha={alpha.label()} i={i}",
                    )
                )
                raw_lhs = Fraction((n - i) ** 5 * chat)
                raw_rhs = Fraction(-m * (n - i) ** 6, n**6 * (p - 1)) * (n**5 * ca)
                checks.append(
                    Check(
                        "single-step",
                        n,
                        raw_lhs == raw_rhs,
                        str(raw_lhs),
                        str(raw_rhs),
                        detail=f"alpha={alpha.label()} i={i} g3-fibres",
                    )
                )
            checks.append(
                Check(
                    "single-step",
                    n,
                    removed_total == -ca,
                    str(removed_total),
                    str(-ca),
                    detail=f"alpha={alpha.label()} closure",
                )
            )
    return Report("single-step", tuple(checks))


def verify_chi_series(g: int, max_n: int, enum_cap: int | None = None) -> Report:
    """n^(2g) * s_n = stratified chi(K^n), a positive integer, for n <= max_n.

    s_n are the logarithmic coefficients of the P_{g-1} series.  At
    g = 3 the closed formula n^5 * sigma_2(n) is checked as well.
    """
    table = partition_count_table(g - 1, max_n, enum_cap=enum_cap)
    s = log_coefficients(table)
    checks = []
    for n in range(1, max_n + 1):
        val = n ** (2 * g) * s[n - 1]
        strat = chi_kummer_stratified(n, g, table=table)
        checks.append(
            Check("chi-series", n, val == strat, str(val), str(strat), g=g, detail="stratified")
        )
        checks.append(
            Check(
                "chi-series",
                n,
                val.denominator == 1 and val > 0,
                str(val),
                "a positive integer",
                g=g,
                detail="integrality",
            )
        )
        if g == 3:
            closed = chi_kummer_closed(n)
            checks.append(
                Check(
                    "chi-series",
                    n,
                    val == closed,
                    str(val),
                    str(closed),
                    g=g,
                    detail="closed-form",
                )
            )
    return Report(f"chi-series(g={g})", tuple(checks))


def verify_first_order(g: int, max_n: int, enum_cap: int | None = None) -> Report:
    """First-order expansion check, coefficient by coefficient in Q[eps]/(eps^2):

        1 + eps * sum_{n>=1} chi(K^n)/n^(2g) q^n
            = exp(eps * log sum_{n>=0} P_{g-1}(n) q^n).
    """
    table = partition_count_table(g - 1, max_n, enum_cap=enum_cap)
    rhs = FirstOrderSeries(
        TruncatedSeries.zero(max_n), TruncatedSeries(table).log()
    ).exp()
    eps_coeffs = [Fraction(0)] + [
        Fraction(chi_kummer_stratified(n, g, table=table), n ** (2 * g))
        for n in range(1, max_n + 1)
    ]
    lhs = FirstOrderSeries(TruncatedSeries.one(max_n), TruncatedSeries(eps_coeffs))
    checks = []
    for n in range(max_n + 1):
        ok = lhs.real[n] == rhs.real[n] and lhs.eps[n] == rhs.eps[n]
        checks.append(
            Check(
                "first-order",
                n,
                ok,
                f"{lhs.real[n]} + eps*{lhs.eps[n]}",
                f"{rhs.real[n]} + eps*{rhs.eps[n]}",
                g=g,
            )
        )
    return Report(f"first-order(g={g})", tuple(checks))


def run_all_verifiers(
    max_n: int, genus: Iterable[int], enum_cap: int | None = None
) -> list[Report]:
    """All identity checks up to max_n, the g-dependent ones once per requested g."""
    reports = [verify_sigma2_convolution(max_n), verify_single_step(max_n)]
    for g in genus:
        reports.append(verify_chi_series(g, max_n, enum_cap=enum_cap))
        reports.append(verify_first_order(g, max_n, enum_cap=enum_cap))
    return reports
