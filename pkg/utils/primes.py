"""Primality proving and integer factorization."""

from __future__ import annotations

import random
from functools import lru_cache
from math import isqrt
from typing import Dict, List, Optional, Tuple

import gmpy2
import numpy as np

from config import settings
from core.exceptions import DomainError, FactorizationError, MismatchError
from utils.logging_config import get_logger

logger = get_logger(__name__)

# Miller-Rabin with the first 13 primes as bases is exact below this bound.
MILLER_RABIN_BOUND = 3_317_044_064_679_887_385_961_981
MILLER_RABIN_BASES: Tuple[int, ...] = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


@lru_cache(maxsize=8)
def small_primes(limit: int) -> Tuple[int, ...]:
    """Primes p <= limit by a sieve of Eratosthenes."""
    if limit < 2:
        return ()
    sieve = np.ones(limit + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p::p] = False
    return tuple(np.nonzero(sieve)[0].tolist())


def _strong_probable_prime(n: int, base: int) -> bool:
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = gmpy2.powmod(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = gmpy2.powmod(x, 2, n)
        if x == n - 1:
            return True
    return False


def _lucas_certificate(n: int) -> bool:
    """Prove n prime from the complete factorization of n - 1.

    n is prime iff some a has a^(n-1) = 1 and a^((n-1)/q) != 1 (mod n)
    for every prime q dividing n - 1.
    """
    prime_divisors = list(factorize(n - 1))
    for a in range(2, 1000):
        if gmpy2.powmod(a, n - 1, n) != 1:
            return False
        if all(gmpy2.powmod(a, (n - 1) // q, n) != 1 for q in prime_divisors):
            return True
    raise FactorizationError(f"no Lucas witness below 1000 for {n}")


def is_prime(n: int) -> bool:
    """Deterministic primality test.

    Miller-Rabin with fixed bases is exact below MILLER_RABIN_BOUND;
    above it a strong probable prime is confirmed by a Lucas certificate.
    """
    if n < 2:
        return False
    for p in MILLER_RABIN_BASES:
        if n % p == 0:
            return n == p
    if not all(_strong_probable_prime(n, base) for base in MILLER_RABIN_BASES):
        return False
    if n < MILLER_RABIN_BOUND:
        return True
    return _lucas_certificate(n)


def pollard_brent(n: int, rng: random.Random, max_restarts: Optional[int] = None) -> int:
    """A non-trivial factor of the odd composite n (Brent's rho).

    Args:
        n: Odd composite, not a perfect square of a prime
        rng: Source of the polynomial constants, for reproducible runs
        max_restarts: New polynomials tried before giving up

    Raises:
        FactorizationError: If every restart failed
    """
    if n % 2 == 0:
        return 2
    restarts = settings.rho_max_restarts if max_restarts is None else max_restarts
    N = gmpy2.mpz(n)

    for attempt in range(restarts):
        y = gmpy2.mpz(rng.randrange(1, n))
        c = gmpy2.mpz(rng.randrange(1, n))
        m = 128
        g = r = q = gmpy2.mpz(1)
        x = ys = y

        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % N
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % N
                    q = q * abs(x - y) % N
                g = gmpy2.gcd(q, N)
                k += m
            r *= 2

        if g == N:
            # The batched gcd overshot; step back one at a time.
            while True:
                ys = (ys * ys + c) % N
                g = gmpy2.gcd(abs(x - ys), N)
                if g > 1:
                    break

        if g != N:
            logger.debug(f"rho split {n} after {attempt + 1} attempt(s)")
            return int(g)

    raise FactorizationError(f"Pollard-Brent found no factor of {n} in {restarts} attempts")


def factorize(n: int, seed: Optional[int] = None) -> Dict[int, int]:
    """Complete factorization of n >= 1 as {prime: exponent}.

    Trial division by small primes, then perfect-square splitting,
    deterministic primality tests and Brent's rho on what remains. The
    product of the result is checked against n.

    Raises:
        DomainError: If n < 1
        MismatchError: If the factors do not multiply back to n
    """
    if n < 1:
        raise DomainError(f"can only factor positive integers, got {n}")
    rng = random.Random(settings.factor_seed if seed is None else seed)
    factors: Dict[int, int] = {}
    remaining = n

    for p in small_primes(settings.trial_division_bound):
        if p * p > remaining:
            break
        while remaining % p == 0:
            factors[p] = factors.get(p, 0) + 1
            remaining //= p

    pending: List[int] = [remaining] if remaining > 1 else []
    while pending:
        m = pending.pop()
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        root, exact = gmpy2.iroot(gmpy2.mpz(m), 2)
        if exact:
            pending.extend([int(root), int(root)])
            continue
        d = pollard_brent(m, rng)
        pending.extend([d, m // d])

    product = 1
    for p, e in factors.items():
        product *= p ** e
    if product != n:
        raise MismatchError(f"factors of {n} multiply to {product}", expected=n, actual=product)
    return dict(sorted(factors.items()))
