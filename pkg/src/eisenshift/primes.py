"""Prime sieving, budgeted integer factorization, and roots of polynomials mod p.

Everything here is deterministic: primality testing uses fixed Miller-Rabin
base sets, Pollard rho restarts walk a fixed parameter schedule, and the
randomized root-splitting step reseeds from its inputs.  Budgets make the
expensive operations refuse predictably instead of running away.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .errors import BudgetError, DomainError
from .intpoly import IntPoly

__all__ = [
    "sieve_primes",
    "first_primes",
    "is_prime",
    "iroot",
    "FactorBudget",
    "Factorization",
    "factorize",
    "nearly_full_prime_divisors",
    "roots_mod_p",
    "euler_phi",
    "omega",
    "mobius",
]

DEFAULT_SEED = 0x5EED

# Deterministic Miller-Rabin is proven correct below this bound for the
# 13-prime base set; larger inputs fall back to the same bases plus more,
# which is adequate for the cofactor sizes reached by the budgets here.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
_MR_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)


def sieve_primes(limit: int) -> list[int]:
    """All primes <= limit, ascending (empty for limit < 2)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i in range(limit + 1) if sieve[i]]


def first_primes(count: int) -> list[int]:
    """The first `count` primes, ascending."""
    if count < 0:
        raise DomainError("count must be nonnegative")
    if count == 0:
        return []
    bound = 15
    if count >= 6:
        x = float(count)
        bound = int(x * (math.log(x) + math.log(math.log(x)))) + 10
    primes = sieve_primes(bound)
    while len(primes) < count:
        bound *= 2
        primes = sieve_primes(bound)
    return primes[:count]


_SMALL_PRIMES = sieve_primes(1000)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test (fixed base sets)."""
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n == p:
            return True
        if n % p == 0:
            return False
        if p * p > n:
            return True
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases = _MR_BASES
    if n >= _MR_DETERMINISTIC_BOUND:
        bases = _MR_BASES + _MR_EXTRA_BASES
    for a in bases:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def iroot(x: int, k: int) -> tuple[int, bool]:
    """Floor k-th root of x >= 0 and whether it is exact."""
    if x < 0 or k < 1:
        raise DomainError("iroot needs x >= 0 and k >= 1")
    if k == 1 or x in (0, 1):
        return x, True
    r = 1 << ((x.bit_length() + k - 1) // k)
    while True:
        nxt = ((k - 1) * r + x // r ** (k - 1)) // k
        if nxt >= r:
            break
        r = nxt
    while r**k > x:
        r -= 1
    return r, r**k == x


@dataclass(frozen=True)
class FactorBudget:
    """Work bound for factorization: trial division, perfect powers, rho."""

    trial_bound: int = 100_000
    rho_iterations: int = 1_000_000
    perfect_power: bool = True
    seed: int = DEFAULT_SEED

    def scaled(self, factor: int) -> "FactorBudget":
        """Same budget with trial bound and rho iterations multiplied."""
        return FactorBudget(
            trial_bound=self.trial_bound * factor,
            rho_iterations=self.rho_iterations * factor,
            perfect_power=self.perfect_power,
            seed=self.seed,
        )


DEFAULT_BUDGET = FactorBudget()


@dataclass(frozen=True)
class Factorization:
    """Outcome of a budgeted factorization of |n|.

    `factors` lists (prime, exponent) ascending; `cofactor` multiplies any
    composite part the budget could not split (1 when complete); `certified`
    is True exactly when cofactor == 1, i.e. the factorization is proven.
    """

    factors: tuple[tuple[int, int], ...]
    cofactor: int
    certified: bool

    def reconstruct(self) -> int:
        out = self.cofactor
        for p, e in self.factors:
            out *= p**e
        return out


def _perfect_power(m: int) -> tuple[int, int] | None:
    """Decompose m = base^k with k maximal (k >= 2), or None."""
    best_base, best_k = m, 1
    changed = True
    while changed:
        changed = False
        limit = best_base.bit_length()
        for k in _SMALL_PRIMES:
            if k > limit:
                break
            root, exact = iroot(best_base, k)
            if exact and root > 1:
                best_base = root
                best_k *= k
                changed = True
                break
    if best_k >= 2:
        return best_base, best_k
    return None


def _brent_rho(n: int, budget: list[int]) -> int | None:
    """One Brent-Pollard rho factor of odd composite n, or None on budget out.

    Restart parameters follow a fixed schedule so runs are reproducible; the
    shared `budget` cell counts every squaring step across restarts.
    """
    if n % 2 == 0:
        return 2
    attempt = 0
    from math import gcd

    while budget[0] > 0:
        y = 2 + attempt
        c = 1 + 2 * attempt
        attempt += 1
        g = 1
        r = 1
        q = 1
        x = y
        ys = y
        while g == 1 and budget[0] > 0:
            x = y
            for _ in range(min(r, budget[0])):
                y = (y * y + c) % n
            budget[0] -= min(r, budget[0])
            k = 0
            while k < r and g == 1 and budget[0] > 0:
                ys = y
                steps = min(128, r - k, budget[0])
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                budget[0] -= steps
                g = gcd(q, n)
                k += steps
            r *= 2
        if g == n:
            # Batched gcd overshot; walk back one step at a time.
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if 1 < g < n:
            return g
    return None


def factorize(n: int, budget: FactorBudget = DEFAULT_BUDGET) -> Factorization:
    """Factor |n| under the given budget.

    Trial division up to budget.trial_bound, perfect-power extraction, then
    Brent-Pollard rho with a shared iteration budget; every split piece is
    retested for primality.  Pieces the budget cannot split end up multiplied
    into the cofactor and the result is marked uncertified.
    """
    if n == 0:
        raise DomainError("cannot factor 0")
    m = abs(n)
    found: dict[int, int] = {}
    if m == 1:
        return Factorization((), 1, True)
    for p in _trial_primes(budget.trial_bound):
        if p * p > m:
            break
        while m % p == 0:
            found[p] = found.get(p, 0) + 1
            m //= p
        if m == 1:
            break
    cofactor = 1
    if m > 1:
        pending = [(m, 1)]
        rho_left = [budget.rho_iterations]
        while pending:
            value, mult = pending.pop()
            if value == 1:
                continue
            if is_prime(value):
                found[value] = found.get(value, 0) + mult
                continue
            if budget.perfect_power:
                power = _perfect_power(value)
                if power is not None:
                    base, k = power
                    pending.append((base, mult * k))
                    continue
            divisor = _brent_rho(value, rho_left)
            if divisor is None:
                cofactor *= value**mult
                continue
            pending.append((divisor, mult))
            pending.append((value // divisor, mult))
    factors = tuple(sorted(found.items()))
    return Factorization(factors, cofactor, cofactor == 1)


_SIEVE_CACHE_CAP = 8_000_000
_sieve_cache: list[int] = _SMALL_PRIMES
_sieve_cover = 1000


def _trial_primes(bound: int):
    """Primes up to `bound`, growing a cached sieve for reuse across calls."""
    global _sieve_cache, _sieve_cover
    if bound > _sieve_cover and bound <= _SIEVE_CACHE_CAP:
        _sieve_cache = sieve_primes(bound)
        _sieve_cover = bound
    if bound <= _sieve_cover:
        for p in _sieve_cache:
            if p > bound:
                return
            yield p
        return
    yield from _sieve_cache
    # Beyond the cache cap: odd candidates filtered by is_prime.
    for cand in range(_sieve_cover + 1 + (_sieve_cover % 2), bound + 1, 2):
        if is_prime(cand):
            yield cand


def _padic_valuation(value: int, p: int) -> int:
    e = 0
    while value % p == 0:
        value //= p
        e += 1
    return e


def nearly_full_prime_divisors(
    d: int, n: int, budget: FactorBudget = DEFAULT_BUDGET
) -> tuple[list[int], bool]:
    """Primes p with p^(n-1) | d, plus a flag certifying the list is complete.

    Any qualifying prime satisfies p <= |d|^(1/(n-1)), so for n >= 3 the list
    is certifiably complete once trial division alone covers that range, once
    the factorization is complete, or once the unsplit cofactor is too small
    to hide another (n-1)-th power of a prime above the trial bound.
    """
    if d == 0:
        raise DomainError("zero has every prime power as a divisor")
    if n < 2:
        raise DomainError("nearly_full_prime_divisors needs n >= 2")
    ad = abs(d)
    fact = factorize(ad, budget)
    qualifying = []
    for p, _ in fact.factors:
        if _padic_valuation(ad, p) >= n - 1:
            qualifying.append(p)
    certified = fact.certified
    if not certified and n >= 3:
        cutoff, exact = iroot(ad, n - 1)
        if not exact:
            cutoff += 1
        if budget.trial_bound >= cutoff:
            certified = True
        elif (
            budget.perfect_power
            and fact.cofactor <= budget.trial_bound**n
            and all(fact.cofactor % p for p, _ in fact.factors)
        ):
            # The cofactor is coprime to every discovered prime, has no
            # factor <= trial_bound, and is neither prime nor a perfect
            # power.  A hidden p^(n-1) would force it above trial_bound^n.
            certified = True
    return sorted(qualifying), certified


# ---------------------------------------------------------------------------
# Polynomial arithmetic over F_p (dense ascending lists), used for root finding.


def _ptrim(a: list[int]) -> list[int]:
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    if not a:
        return [0]
    return a


def _pmod_reduce(a: list[int], f: list[int], p: int) -> list[int]:
    """Reduce a modulo the monic polynomial f over F_p."""
    a = [c % p for c in a]
    df = len(f) - 1
    while len(a) - 1 >= df and any(a):
        d = len(a) - 1
        if a[-1] == 0:
            a.pop()
            continue
        lead = a[-1]
        shift = d - df
        for i in range(df + 1):
            a[shift + i] = (a[shift + i] - lead * f[i]) % p
        a.pop()
    return _ptrim(a)


def _pmulmod(a: list[int], b: list[int], f: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _pmod_reduce(out, f, p)


def _ppowmod(base: list[int], exp: int, f: list[int], p: int) -> list[int]:
    result = [1]
    acc = _pmod_reduce(list(base), f, p)
    while exp:
        if exp & 1:
            result = _pmulmod(result, acc, f, p)
        acc = _pmulmod(acc, acc, f, p)
        exp >>= 1
    return result


def _pgcd_monic(a: list[int], b: list[int], p: int) -> list[int]:
    a = _ptrim([c % p for c in a])
    b = _ptrim([c % p for c in b])
    while b != [0]:
        inv = pow(b[-1], -1, p)
        bm = [(c * inv) % p for c in b]
        r = _pmod_reduce(a, bm, p)
        a, b = bm, r
    if a != [0]:
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def _split_linear(g: list[int], p: int, rng: random.Random) -> list[int]:
    """Roots of a monic product of distinct linear factors over F_p."""
    d = len(g) - 1
    if d <= 0:
        return []
    if d == 1:
        return [(-g[0]) % p]
    while True:
        a = rng.randrange(p)
        # gcd(g, (x+a)^((p-1)/2) - 1) separates the roots r with r+a a QR.
        h = _ppowmod([a, 1], (p - 1) // 2, g, p)
        h = list(h)
        h[0] = (h[0] - 1) % p
        h = _ptrim(h)
        w = _pgcd_monic(g, h, p)
        dw = len(w) - 1
        if 0 < dw < d:
            other = _pquot(g, w, p)
            return _split_linear(w, p, rng) + _split_linear(other, p, rng)


def _pquot(a: list[int], b: list[int], p: int) -> list[int]:
    """Quotient a / b over F_p for monic b dividing a exactly."""
    a = [c % p for c in a]
    db = len(b) - 1
    out = [0] * (len(a) - db)
    for d in range(len(a) - 1, db - 1, -1):
        coef = a[d] % p
        if coef:
            out[d - db] = coef
            for i in range(db + 1):
                a[d - db + i] = (a[d - db + i] - coef * b[i]) % p
    return _ptrim(out)


def roots_mod_p(
    f: IntPoly,
    p: int,
    scan_threshold: int = 1_000_000,
    seed: int = DEFAULT_SEED,
) -> list[int]:
    """All residues s with f(s) = 0 (mod p), ascending.

    Below `scan_threshold` every residue is tried directly.  Above it the
    roots come from gcd(x^p - x, f) over F_p followed by randomized splitting
    of the linear-factor product; the splitter is reseeded from (seed, p, f)
    so repeated calls give identical results.
    """
    if not is_prime(p):
        raise DomainError("roots_mod_p needs a prime modulus")
    fbar = _ptrim([c % p for c in f.coeffs])
    if fbar == [0]:
        raise DomainError("polynomial vanishes identically modulo p")
    if p <= max(scan_threshold, 3):
        out = []
        for s in range(p):
            acc = 0
            for c in reversed(fbar):
                acc = (acc * s + c) % p
            if acc == 0:
                out.append(s)
        return out
    inv = pow(fbar[-1], -1, p)
    monic = [(c * inv) % p for c in fbar]
    if len(monic) == 1:
        return []
    xp = _ppowmod([0, 1], p, monic, p)
    xp = list(xp) + [0, 0]
    xp[1] = (xp[1] - 1) % p  # x^p - x
    g = _pgcd_monic(monic, _ptrim(xp), p)
    if g == [1]:
        return []
    mix = seed & 0xFFFFFFFFFFFFFFFF
    for c in f.coeffs:
        mix = (mix * 0x9E3779B97F4A7C15 + (c & 0xFFFFFFFFFFFFFFFF) + 1) & 0xFFFFFFFFFFFFFFFF
    mix = (mix + p) & 0xFFFFFFFFFFFFFFFF
    rng = random.Random(mix)
    return sorted(_split_linear(g, p, rng))


def _certified_factors(d: int, what: str) -> Factorization:
    fact = factorize(d)
    if not fact.certified:
        raise BudgetError("%s(%d) needs a complete factorization" % (what, d))
    return fact


def euler_phi(d: int) -> int:
    """Euler totient of d >= 1."""
    if d < 1:
        raise DomainError("euler_phi needs d >= 1")
    out = d
    for p, _ in _certified_factors(d, "euler_phi").factors:
        out -= out // p
    return out


def omega(d: int) -> int:
    """Number of distinct prime factors of d >= 1."""
    if d < 1:
        raise DomainError("omega needs d >= 1")
    return len(_certified_factors(d, "omega").factors)


def mobius(d: int) -> int:
    """Mobius function of d >= 1."""
    if d < 1:
        raise DomainError("mobius needs d >= 1")
    fact = _certified_factors(d, "mobius")
    for _, e in fact.factors:
        if e > 1:
            return 0
    return -1 if len(fact.factors) % 2 else 1
