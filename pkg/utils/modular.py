"""Roots of integer polynomials modulo p and p^2."""

from __future__ import annotations

from typing import List, Sequence, Set, Tuple

import gmpy2
import numpy as np


def eval_mod(coefficients: Sequence[int], t: int, modulus: int) -> int:
    """poly(t) mod modulus, coefficients constant term first."""
    acc = 0
    for c in reversed(coefficients):
        acc = (acc * t + c) % modulus
    return acc


def derivative_coefficients(coefficients: Sequence[int]) -> List[int]:
    return [i * c for i, c in enumerate(coefficients)][1:]


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, as -1, 0 or 1."""
    return int(gmpy2.legendre(a % p, p))


def _non_residue(p: int) -> int:
    for z in range(2, p):
        if legendre(z, p) == -1:
            return z
    raise ValueError(f"no quadratic non-residue modulo {p}")


def sqrt_mod_prime(a: int, p: int) -> Tuple[int, ...]:
    """All x in [0, p) with x^2 = a (mod p), p an odd prime (Tonelli-Shanks).

    Returns:
        () for a non-residue, (0,) for a = 0, else the two roots ascending
    """
    a %= p
    if a == 0:
        return (0,)
    if legendre(a, p) != 1:
        return ()

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1

    if s == 1:
        x = pow(a, (p + 1) // 4, p)
    else:
        c = pow(_non_residue(p), q, p)
        x = pow(a, (q + 1) // 2, p)
        t = pow(a, q, p)
        m = s
        while t != 1:
            i, t2 = 0, t
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            x = x * b % p
            c = b * b % p
            t = t * c % p
            m = i

    assert x * x % p == a
    return tuple(sorted({x, p - x}))


def _reduced(coefficients: Sequence[int], p: int) -> List[int]:
    reduced = [c % p for c in coefficients]
    while reduced and reduced[-1] == 0:
        reduced.pop()
    return reduced


def roots_mod_prime(coefficients: Sequence[int], p: int) -> List[int]:
    """All t in [0, p) with poly(t) = 0 (mod p).

    Linear and quadratic reductions are solved directly (the quadratic one
    through a square root of the discriminant for odd p); anything of
    higher degree is evaluated at every residue.
    """
    reduced = _reduced(coefficients, p)
    if not reduced:
        return list(range(p))
    degree = len(reduced) - 1
    if degree == 0:
        return []
    if degree == 1:
        return [(-reduced[0] * pow(reduced[1], -1, p)) % p]
    if degree == 2 and p != 2:
        c0, c1, c2 = reduced
        inverse = pow(2 * c2, -1, p)
        return sorted({(-c1 + s) * inverse % p for s in sqrt_mod_prime(c1 * c1 - 4 * c2 * c0, p)})

    ts = np.arange(p, dtype=np.int64)
    acc = np.zeros(p, dtype=np.int64)
    for c in reversed(reduced):
        acc = (acc * ts + c) % p
    return np.nonzero(acc == 0)[0].tolist()


def hensel_lift(coefficients: Sequence[int], root: int, p: int) -> List[int]:
    """Roots mod p^2 lying above a root mod p.

    A simple root lifts uniquely; when the derivative vanishes mod p all
    p candidates root + k*p are tested.
    """
    p2 = p * p
    slope = eval_mod(derivative_coefficients(coefficients), root, p)
    if slope:
        value = eval_mod(coefficients, root, p2)
        return [(root - value * pow(slope, -1, p2)) % p2]
    return [x for x in range(root, p2, p) if eval_mod(coefficients, x, p2) == 0]


def two_adic_roots(coefficients: Sequence[int], modulus: int = 4) -> List[int]:
    """All t mod 2^k (modulus = 2^k) with poly(t) = 0, by enumeration."""
    if modulus & (modulus - 1) or modulus < 2:
        raise ValueError(f"modulus must be a power of two, got {modulus}")
    return [t for t in range(modulus) if eval_mod(coefficients, t, modulus) == 0]


def roots_mod_prime_square(coefficients: Sequence[int], p: int) -> List[int]:
    """All t in [0, p^2) with p^2 | poly(t)."""
    if p == 2:
        return two_adic_roots(coefficients, 4)
    lifted: Set[int] = set()
    for root in roots_mod_prime(coefficients, p):
        lifted.update(hensel_lift(coefficients, root, p))
    return sorted(lifted)
