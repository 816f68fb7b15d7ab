"""Density constants for Eisenstein and shifted-Eisenstein polynomials.

For degree n, the local density of Eisenstein behaviour at a prime p is
(p-1)^2 / p^(n+2): the constant term must be a nonzero multiple of p modulo
p^2, the middle coefficients multiples of p, and the leading coefficient a
non-multiple.  Everything else here is built from these local terms:

    P_n   = sum over p of (p-1)^2 / p^(n+2)
    rho_n = 1 - prod over p of (1 - (p-1)^2 / p^(n+2))
    tau_n = P_n^2 - sum over p of (p-1)^4 / p^(2n+4)
    gamma_n = (1 - tau_n/rho_n) / 2^(n^2+n)

Sums and products run over an explicit finite prime list; tail bounds are
reported so callers can see the truncation error.  All arithmetic is mpmath
with a configurable working precision (>= 36 significant digits resolves
gamma_10 ~ 1e-33 comfortably at the default of 50).
"""

from __future__ import annotations

from dataclasses import dataclass

from mpmath import mp, mpf, sinh, workdps

from .errors import DomainError

__all__ = [
    "DensityReport",
    "compute_p_n",
    "compute_rho",
    "compute_tau",
    "compute_gamma",
    "predicted_eisenstein_count",
    "sinh_bound_check",
    "density_report",
]

DEFAULT_DPS = 50


def _check_args(n: int, primes) -> None:
    if n < 2:
        raise DomainError("density constants need degree n >= 2")
    if not primes:
        raise DomainError("need a nonempty prime list")


def _accumulate(n: int, primes: list[int]):
    """One pass over the primes: (sum x_p, sum x_p^2, prod (1 - x_p))."""
    total = mpf(0)
    squares = mpf(0)
    prod = mpf(1)
    for p in primes:
        x = mpf((p - 1) ** 2) / mpf(p) ** (n + 2)
        total += x
        squares += x * x
        prod *= 1 - x
    return total, squares, prod


def compute_p_n(n: int, primes: list[int], dps: int = DEFAULT_DPS):
    """(P_n truncated to `primes`, tail bound B^(1-n)/(n-1)) as mpf values.

    The tail bound dominates sum_{m > B} m^(-n) with B the largest prime
    supplied, and each dropped term is below p^(-n).
    """
    _check_args(n, primes)
    with workdps(dps):
        total = mpf(0)
        for p in primes:
            total += mpf((p - 1) ** 2) / mpf(p) ** (n + 2)
        tail = mpf(primes[-1]) ** (1 - n) / (n - 1)
        return +total, +tail


def compute_rho(n: int, primes: list[int], dps: int = DEFAULT_DPS):
    """rho_n = 1 - prod_p (1 - (p-1)^2/p^(n+2)) over the supplied primes."""
    _check_args(n, primes)
    with workdps(dps):
        prod = mpf(1)
        for p in primes:
            prod *= 1 - mpf((p - 1) ** 2) / mpf(p) ** (n + 2)
        return +(1 - prod)


def compute_tau(n: int, primes: list[int], dps: int = DEFAULT_DPS):
    """tau_n = P_n^2 - sum_p (p-1)^4/p^(2n+4), the two-prime correction."""
    _check_args(n, primes)
    with workdps(dps):
        total, squares, _ = _accumulate(n, primes)
        return +(total * total - squares)


def compute_gamma(n: int, primes: list[int], dps: int = DEFAULT_DPS):
    """gamma_n = (1 - tau_n/rho_n) / 2^(n^2+n)."""
    _check_args(n, primes)
    with workdps(dps):
        total, squares, prod = _accumulate(n, primes)
        rho = 1 - prod
        tau = total * total - squares
        return +((1 - tau / rho) / mpf(2) ** (n * n + n))


def predicted_eisenstein_count(n: int, height: int, primes: list[int], dps: int = DEFAULT_DPS):
    """Main-term prediction rho_n * 2^(n+1) * height^(n+1) for #E_n(height)."""
    _check_args(n, primes)
    if height < 1:
        raise DomainError("height must be >= 1")
    with workdps(dps):
        rho = compute_rho(n, primes, dps)
        return +(rho * mpf(2) ** (n + 1) * mpf(height) ** (n + 1))


def sinh_bound_check(primes: list[int], dps: int = DEFAULT_DPS):
    """(partial sum of 1/p^2 with tail, 2*sinh of it) for the union bound.

    With enough primes the first value settles in (0.45, 0.46) and the
    second stays below 1, which is what makes the two-prime correction
    argument close.
    """
    if not primes:
        raise DomainError("need a nonempty prime list")
    with workdps(dps):
        total = mpf(0)
        for p in primes:
            total += mpf(1) / (mpf(p) * p)
        total += mpf(1) / primes[-1]  # tail: sum_{m > B} 1/m^2 <= 1/B
        return +total, +(2 * sinh(total))


@dataclass(frozen=True)
class DensityReport:
    """Density constants for one degree over one truncated prime list."""

    n: int
    prime_count: int
    largest_prime: int
    p_n: object
    p_n_tail: object
    rho: object
    tau: object
    gamma: object

    def as_record(self) -> dict:
        return {
            "n": self.n,
            "prime_count": self.prime_count,
            "largest_prime": self.largest_prime,
            "p_n": mp.nstr(self.p_n, 12),
            "p_n_tail": mp.nstr(self.p_n_tail, 6),
            "rho": mp.nstr(self.rho, 12),
            "tau": mp.nstr(self.tau, 12),
            "gamma": mp.nstr(self.gamma, 12),
        }


def density_report(n: int, primes: list[int], dps: int = DEFAULT_DPS) -> DensityReport:
    """All density constants for degree n over the supplied primes."""
    _check_args(n, primes)
    with workdps(dps):
        total, squares, prod = _accumulate(n, primes)
        rho = +(1 - prod)
        tau = +(total * total - squares)
        gamma = +((1 - tau / rho) / mpf(2) ** (n * n + n))
        tail = +(mpf(primes[-1]) ** (1 - n) / (n - 1))
        return DensityReport(
            n=n,
            prime_count=len(primes),
            largest_prime=primes[-1],
            p_n=+total,
            p_n_tail=tail,
            rho=rho,
            tau=tau,
            gamma=gamma,
        )
