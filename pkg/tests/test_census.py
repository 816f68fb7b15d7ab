"""Exact censuses, the d-local box count, and Monte Carlo determinism."""

import json
import math
import random
from itertools import product

import pytest

from eisenshift import (
    BudgetError,
    DomainError,
    FactorBudget,
    IntPoly,
    census_h_subset,
    eisenstein_primes,
    exact_census,
    h_subset_main_term,
    is_eisenstein,
    monte_carlo,
    naive_shift_scan,
    reports_to_csv,
    taylor_shift,
    wilson_interval,
)
from eisenshift.census import CSV_COLUMNS


def test_wilson_interval_known_values():
    lo, hi = wilson_interval(50, 100)
    assert 0.40 < lo < 0.45
    assert 0.55 < hi < 0.60
    assert abs((lo + hi) / 2 - 0.5) < 1e-9  # symmetric at p-hat = 1/2
    lo0, hi0 = wilson_interval(0, 50)
    assert lo0 == 0.0
    assert hi0 > 0
    lo1, hi1 = wilson_interval(50, 50)
    assert hi1 == 1.0
    assert lo1 < 1
    with pytest.raises(DomainError):
        wilson_interval(5, 0)
    with pytest.raises(DomainError):
        wilson_interval(7, 3)


def test_wilson_interval_covers_proportion():
    rng = random.Random(70)
    for _ in range(200):
        n = rng.randrange(10, 500)
        k = rng.randrange(0, n + 1)
        lo, hi = wilson_interval(k, n)
        assert 0 <= lo <= k / n <= hi <= 1


def _direct_eisenstein(coeffs):
    """Independent Eisenstein check: trial conditions over every p <= |a0|."""
    a0 = coeffs[0]
    if a0 == 0:
        return False
    for p in range(2, abs(a0) + 1):
        if any(p % d == 0 for d in range(2, p)):
            continue
        if all(c % p == 0 for c in coeffs[:-1]) and a0 % (p * p) and coeffs[-1] % p:
            return True
    return False


def test_exact_census_degree2_small_heights():
    r1 = exact_census(2, 1)
    assert (r1.eisenstein, r1.f_count) == (0, 0)
    assert r1.samples == 3 * 3 * 2
    assert r1.unresolved == 0
    assert r1.ratio is None

    r2 = exact_census(2, 2)
    assert r2.eisenstein == 12
    assert r2.samples == 5 * 5 * 4
    assert r2.unresolved == 0
    assert r2.shifted >= r2.eisenstein >= r2.f_count

    # independent recount of the Eisenstein column
    direct = sum(
        1
        for a0 in range(-2, 3)
        for a1 in range(-2, 3)
        for a2 in (-2, -1, 1, 2)
        if _direct_eisenstein((a0, a1, a2))
    )
    assert direct == r2.eisenstein == 12


def _scan_box(n, height):
    """Classify every degree-n polynomial of height <= `height` by brute scan.

    Returns (poly_height, scan_says_shifted, is_plain_eisenstein) triples.
    """
    rows = []
    for coeffs in product(range(-height, height + 1), repeat=n + 1):
        if coeffs[-1] == 0:
            continue
        f = IntPoly(coeffs)
        rows.append(
            (
                max(abs(c) for c in coeffs),
                naive_shift_scan(f).verdict.value == "yes",
                is_eisenstein(f),
            )
        )
    return rows


def test_exact_census_columns_match_scan_oracle_exhaustively():
    # Every census column must equal a per-polynomial recount by the
    # independent brute-force scan, cumulatively for each height cutoff.
    rows2 = _scan_box(2, 6)
    for cutoff in range(1, 7):
        report = exact_census(2, cutoff)
        assert report.shifted == sum(1 for h, s, _ in rows2 if h <= cutoff and s)
        assert report.eisenstein == sum(1 for h, _, e in rows2 if h <= cutoff and e)

    rows3 = _scan_box(3, 3)
    for cutoff in range(1, 4):
        report = exact_census(3, cutoff)
        assert report.shifted == sum(1 for h, s, _ in rows3 if h <= cutoff and s)
        assert report.eisenstein == sum(1 for h, _, e in rows3 if h <= cutoff and e)


def test_monte_carlo_subsampling_covers_census_proportions():
    # Sampling from the same box the census enumerates must be unbiased:
    # the exact proportions should fall inside the per-run 95% Wilson
    # intervals for the vast majority of seeds.
    truth = exact_census(2, 6)
    p_eis = truth.eisenstein / truth.samples
    p_shifted = truth.shifted / truth.samples
    covered = 0
    for seed in range(11, 21):
        r = monte_carlo(2, 6, 10_000, seed=seed)
        lo_e, hi_e = wilson_interval(r.eisenstein, r.samples)
        lo_s, hi_s = wilson_interval(r.shifted, r.samples)
        covered += (lo_e <= p_eis <= hi_e) and (lo_s <= p_shifted <= hi_s)
    assert covered >= 9


def test_f_subset_witness_primes_are_disjoint():
    # For every polynomial counted by f_count (Eisenstein, and still
    # Eisenstein after the shift x -> x+1), the witness primes before and
    # after the shift can never coincide: shifting by 1 turns the constant
    # term into f(1), which the original witness cannot divide.
    members = 0
    for coeffs in product(range(-6, 7), repeat=3):
        if coeffs[-1] == 0:
            continue
        f = IntPoly(coeffs)
        if not is_eisenstein(f):
            continue
        g = taylor_shift(f, 1)
        if not is_eisenstein(g):
            continue
        members += 1
        assert not set(eisenstein_primes(f)) & set(eisenstein_primes(g))
    assert members == exact_census(2, 6).f_count
    assert members > 0


def test_exact_census_rejects_bad_arguments():
    with pytest.raises(DomainError):
        exact_census(1, 3)
    with pytest.raises(DomainError):
        exact_census(2, 0)
    with pytest.raises(BudgetError):
        exact_census(2, 100, enumeration_cap=1000)


def _brute_h_subset(n, d, height):
    count = 0
    for coeffs in product(range(-height, height + 1), repeat=n + 1):
        if coeffs[-1] == 0:
            continue
        if any(c % d for c in coeffs[:-1]):
            continue
        if math.gcd(coeffs[0] // d, d) != 1:
            continue
        if math.gcd(coeffs[-1], d) != 1:
            continue
        count += 1
    return count


def test_census_h_subset_fixed_point():
    assert census_h_subset(2, 2, 2) == 12


def test_census_h_subset_matches_brute_force():
    for n, d, height in [(2, 1, 3), (2, 2, 5), (2, 3, 7), (3, 2, 4), (2, 6, 6), (3, 5, 5)]:
        assert census_h_subset(n, d, height) == _brute_h_subset(n, d, height)


def test_census_h_subset_rejects_non_squarefree():
    with pytest.raises(DomainError):
        census_h_subset(2, 4, 10)
    with pytest.raises(DomainError):
        census_h_subset(2, 12, 10)
    with pytest.raises(DomainError):
        census_h_subset(2, 0, 10)
    with pytest.raises(DomainError):
        census_h_subset(1, 2, 10)


def test_h_subset_main_term_accuracy():
    exact = census_h_subset(2, 2, 50)
    main = h_subset_main_term(2, 2, 50)
    assert abs(exact - main) / exact < 0.10


def test_monte_carlo_reproducible():
    a = monte_carlo(2, 100, 500, seed=11)
    b = monte_carlo(2, 100, 500, seed=11)
    assert a == b
    c = monte_carlo(2, 100, 500, seed=12)
    assert (a.eisenstein, a.shifted) != (c.eisenstein, c.shifted) or a != c


def test_monte_carlo_chunking_invariant():
    # chunk boundaries are part of the substream definition, so equal chunk
    # sizes must agree regardless of sample-count alignment
    a = monte_carlo(2, 50, 300, seed=9, chunk_size=256)
    b = monte_carlo(2, 50, 300, seed=9, chunk_size=256)
    assert a == b
    assert a.samples == 300


def test_monte_carlo_worker_counts_agree():
    base = monte_carlo(2, 100, 512, seed=21, workers=1)
    two = monte_carlo(2, 100, 512, seed=21, workers=2)
    four = monte_carlo(2, 100, 512, seed=21, workers=4)
    assert base == two == four
    assert json.dumps(base.as_record(), sort_keys=True) == json.dumps(
        two.as_record(), sort_keys=True
    )


def test_monte_carlo_counts_are_consistent():
    r = monte_carlo(3, 1000, 400, seed=3)
    assert 0 <= r.f_count <= r.eisenstein <= r.shifted <= r.samples
    assert r.unresolved >= 0
    assert r.kind == "montecarlo"
    if r.eisenstein:
        assert r.ci_low <= r.ratio <= r.ci_high


def test_monte_carlo_unresolved_under_tiny_budget():
    tiny = FactorBudget(trial_bound=2, rho_iterations=0, perfect_power=False)
    r = monte_carlo(2, 10**6, 300, seed=5, budget=tiny)
    assert r.unresolved > 0  # most discriminants have odd prime factors


def test_monte_carlo_rejects_bad_arguments():
    with pytest.raises(DomainError):
        monte_carlo(1, 10, 10)
    with pytest.raises(DomainError):
        monte_carlo(2, 0, 10)
    with pytest.raises(DomainError):
        monte_carlo(2, 10, 0)
    with pytest.raises(DomainError):
        monte_carlo(2, 10, 10, workers=0)


def test_csv_round_trip():
    report = monte_carlo(2, 50, 200, seed=4)
    census = exact_census(2, 1)
    text = reports_to_csv([report, census])
    lines = text.strip().split("\n")
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 3
    mc_row = lines[1].split(",")
    assert mc_row[0] == "montecarlo"
    assert int(mc_row[3]) == 200
    assert int(mc_row[10]) == 4
    census_row = lines[2].split(",")
    assert census_row[0] == "census"
    assert census_row[7] == ""  # no ratio when eisenstein count is 0
    assert census_row[10] == ""  # censuses have no seed