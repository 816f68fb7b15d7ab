"""Eisenstein and shifted-Eisenstein irreducibility decisions with certificates.

A polynomial f of degree n is Eisenstein with respect to a prime p when p
divides every non-leading coefficient, p^2 does not divide the constant term,
and p does not divide the leading coefficient.  f is shifted-Eisenstein when
f(x+s) is Eisenstein for some integer s; either way f is irreducible over Q.

The decision procedure rests on two facts.  First, if f(x+s) is Eisenstein
with respect to p then p^(n-1) divides the discriminant D(f), which is
shift-invariant, so candidate primes come from D(f).  Second, such a prime
admits a working shift among the roots of f modulo p, and shifts repeat with
period p, so only residues 0 <= s < p need checking.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .algebra import discriminant, max_shift_bound, principal_subresultant
from .errors import BudgetError, DomainError
from .intpoly import IntPoly, derivative, taylor_shift
from .primes import (
    DEFAULT_BUDGET,
    FactorBudget,
    factorize,
    is_prime,
    roots_mod_p,
)

__all__ = [
    "Verdict",
    "ShiftCertificate",
    "ShiftedDecision",
    "eisenstein_primes",
    "is_eisenstein",
    "is_eisenstein_with",
    "shifted_eisenstein",
    "verify_certificate",
    "naive_shift_scan",
    "periodicity_check",
]

# Scan/splitting crossover passed to roots_mod_p by the decision engine; the
# root set is method-independent, this only picks the cheaper evaluation.
_ENGINE_SCAN_THRESHOLD = 512

# Inline trial division handles coefficient gcds up to this divisor bound;
# anything rougher goes through the budgeted factorizer.
_WITNESS_TRIAL_LIMIT = 1_000_000


class Verdict(enum.Enum):
    YES = "yes"
    NO_CERTIFIED = "no-certified"
    NO_HEURISTIC = "no-heuristic"


@dataclass(frozen=True)
class ShiftCertificate:
    """Checkable witness: f(x+shift) is Eisenstein with respect to prime."""

    shift: int
    prime: int


@dataclass(frozen=True)
class ShiftedDecision:
    """Outcome of a shifted-Eisenstein decision.

    `reason` explains a NO ("discriminant-zero", "no-qualifying-prime",
    "no-root-shift-works"); `cofactor` carries the unsplit composite part of
    the factorization behind a heuristic NO.
    """

    verdict: Verdict
    certificate: ShiftCertificate | None = None
    reason: str | None = None
    cofactor: int | None = None


def _prime_factors_ascending(g: int, budget: FactorBudget):
    """Distinct prime factors of g >= 2 in ascending order."""
    fact = factorize(g, budget)
    if not fact.certified:
        raise BudgetError("could not fully factor coefficient gcd %d" % g)
    return [p for p, _ in fact.factors]


def _coefficient_gcd(f: IntPoly) -> int:
    g = 0
    for c in f.coeffs[:-1]:
        g = math.gcd(g, c)
        if g == 1:
            break
    return g


def eisenstein_primes(f: IntPoly, budget: FactorBudget = DEFAULT_BUDGET) -> list[int]:
    """All primes with respect to which f is Eisenstein, ascending."""
    if f.degree < 1:
        raise DomainError("eisenstein_primes needs degree >= 1")
    a0 = f.coeffs[0]
    an = f.leading
    if a0 == 0:
        return []  # p^2 | 0 always, so condition (ii) can never hold
    g = _coefficient_gcd(f)
    if g == 1:
        return []
    out = []
    for p in _prime_factors_ascending(g, budget):
        if a0 % (p * p) != 0 and an % p != 0:
            out.append(p)
    return out


def _smallest_witness(f: IntPoly) -> int | None:
    """Smallest Eisenstein witness prime of f, or None; early-exit search."""
    if f.degree < 1:
        raise DomainError("is_eisenstein needs degree >= 1")
    a0 = f.coeffs[0]
    if a0 == 0:
        return None
    g = _coefficient_gcd(f)
    if g == 1:
        return None
    an = f.leading
    m = g
    d = 2
    while d * d <= m and d <= _WITNESS_TRIAL_LIMIT:
        if m % d == 0:
            if a0 % (d * d) != 0 and an % d != 0:
                return d
            while m % d == 0:
                m //= d
        d += 1 if d == 2 else 2
    if m == 1:
        return None
    if d * d > m:  # remainder is prime
        if a0 % (m * m) != 0 and an % m != 0:
            return m
        return None
    # Coefficient gcd too rough for inline trial division.
    for p in _prime_factors_ascending(m, DEFAULT_BUDGET):
        if a0 % (p * p) != 0 and an % p != 0:
            return p
    return None


def is_eisenstein(f: IntPoly) -> bool:
    """True iff f is Eisenstein with respect to some prime."""
    return _smallest_witness(f) is not None


def is_eisenstein_with(f: IntPoly, p: int) -> bool:
    """Check the three Eisenstein conditions for one specific prime p."""
    if p < 2 or not is_prime(p):
        raise DomainError("is_eisenstein_with needs a prime, got %r" % (p,))
    if f.degree < 1:
        return False
    a0 = f.coeffs[0]
    if a0 % (p * p) == 0:
        return False
    if f.leading % p == 0:
        return False
    for c in f.coeffs[:-1]:
        if c % p != 0:
            return False
    return True


def _certificate_search(
    f: IntPoly, candidates: list[int], seed: int
) -> ShiftCertificate | None:
    """First working (prime, shift) over ascending primes and shifts."""
    an = f.leading
    for p in candidates:
        if an % p == 0:
            continue  # the leading coefficient is shift-invariant
        for s in roots_mod_p(f, p, scan_threshold=_ENGINE_SCAN_THRESHOLD, seed=seed):
            if is_eisenstein_with(taylor_shift(f, s), p):
                return ShiftCertificate(s, p)
    return None


def shifted_eisenstein(
    f: IntPoly, budget: FactorBudget = DEFAULT_BUDGET
) -> ShiftedDecision:
    """Decide whether f(x+s) is Eisenstein for some integer s.

    Candidate primes must satisfy p^(n-1) | D(f).  For n >= 3 they must also
    divide the next principal subresultant of (f, f'): an Eisenstein shift
    forces f = lc * (x-s)^n mod p, so gcd(f, f') mod p has degree n-1 >= 2
    and both trailing subresultant coefficients vanish mod p.  Factoring
    gcd(D, sres_1) instead of D keeps the certified path cheap even when D
    itself is far beyond the factoring budget.  YES answers always carry a
    verified certificate with 0 <= shift < prime (smallest prime, then
    smallest shift); a NO is certified when the candidate list is provably
    complete, otherwise the verdict is heuristic and carries the unsplit
    cofactor.
    """
    n = f.degree
    if n < 2:
        raise DomainError("shifted_eisenstein needs degree >= 2")
    witness = _smallest_witness(f)
    if witness is not None:
        return ShiftedDecision(Verdict.YES, ShiftCertificate(0, witness))
    d = discriminant(f)
    if d == 0:
        return ShiftedDecision(Verdict.NO_CERTIFIED, reason="discriminant-zero")
    ad = abs(d)
    if n == 2:
        # Every prime factor of D qualifies when n - 1 = 1.
        fact = factorize(ad, budget)
        certified = fact.certified
        cofactor = fact.cofactor
        candidates = [p for p, _ in fact.factors]
    else:
        s1 = principal_subresultant(f, derivative(f), 1)
        shared = math.gcd(ad, abs(s1))  # s1 == 0 degrades to |d| itself
        if shared == 1:
            return ShiftedDecision(Verdict.NO_CERTIFIED, reason="no-qualifying-prime")
        fact = factorize(shared, budget)
        certified = fact.certified
        cofactor = fact.cofactor
        candidates = []
        for p, _ in fact.factors:
            if ad % p**(n - 1) == 0:
                candidates.append(p)
    cert = _certificate_search(f, candidates, budget.seed)
    if cert is not None:
        return ShiftedDecision(Verdict.YES, cert)
    reason = "no-qualifying-prime" if not candidates else "no-root-shift-works"
    if certified:
        return ShiftedDecision(Verdict.NO_CERTIFIED, reason=reason)
    return ShiftedDecision(Verdict.NO_HEURISTIC, reason=reason, cofactor=cofactor)


def verify_certificate(f: IntPoly, certificate: ShiftCertificate) -> bool:
    """Recheck a certificate from scratch; False on any malformed input."""
    try:
        s = certificate.shift
        p = certificate.prime
        if not isinstance(s, int) or not isinstance(p, int):
            return False
        if not 0 <= s < p:
            return False
        if not is_prime(p):
            return False
        return is_eisenstein_with(taylor_shift(f, s), p)
    except Exception:
        return False


def naive_shift_scan(f: IntPoly, scan_cap: int = 1_000_000) -> ShiftedDecision:
    """Decide by trying every shift 0 <= s <= max_shift_bound(f) directly.

    Independent of the discriminant machinery, hence useful as an oracle.
    Refuses (BudgetError) when the scan bound exceeds scan_cap.  The first
    working shift is returned; by shift periodicity it satisfies s < p for
    its smallest witness prime, so the certificate is already canonical.
    """
    n = f.degree
    if n < 2:
        raise DomainError("naive_shift_scan needs degree >= 2")
    bound = max_shift_bound(f)
    if bound > scan_cap:
        raise BudgetError("scan bound %d exceeds cap %d" % (bound, scan_cap))
    g = f
    for s in range(bound + 1):
        witness = _smallest_witness(g)
        if witness is not None:
            return ShiftedDecision(Verdict.YES, ShiftCertificate(s % witness, witness))
        g = taylor_shift(g, 1)
    return ShiftedDecision(Verdict.NO_CERTIFIED, reason="no-root-shift-works")


def periodicity_check(f: IntPoly, s: int, p: int, k: int) -> bool:
    """True when f(x + s + k*p) is Eisenstein with respect to p."""
    return is_eisenstein_with(taylor_shift(f, s + k * p), p)