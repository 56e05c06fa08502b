"""Exact arithmetic for counting subspaces of F_p^n.

The building block is the product (p - 1)(p^2 - 1)...(p^r - 1); ratios of
these give the Gaussian binomial coefficients, which count the k-dimensional
subspaces of an n-dimensional space over the field with p elements. Every
quantity exists twice: numerically for a fixed integer base p >= 2, and
symbolically as an IntPolynomial in p.

The base is deliberately not required to be prime. All identities here are
polynomial identities in p; only the subgroup-lattice interpretation needs
primality, and the lattice module enforces that separately.
"""

from __future__ import annotations

from functools import lru_cache

from .polynomial import ONE, IntPolynomial


def _check_base(p: int) -> None:
    if p < 2:
        raise ValueError(f"base p must be >= 2, got {p}")


@lru_cache(maxsize=None)
def q_factorial(r: int, p: int) -> int:
    """The product (p - 1)(p^2 - 1)...(p^r - 1); the empty product (r=0) is 1."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    _check_base(p)
    out = 1
    power = 1
    for _ in range(r):
        power *= p
        out *= power - 1
    return out


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int, p: int) -> int:
    """Number of k-dimensional subspaces of F_p^n (q-binomial at q = p).

    Computed as q_factorial(n) / (q_factorial(k) * q_factorial(n-k)). The
    division is exact for every integer p >= 2, not just primes, because the
    quotient is a fixed integer polynomial evaluated at p.
    """
    if not 0 <= k <= n:
        raise ValueError(f"k must satisfy 0 <= k <= n, got k={k}, n={n}")
    _check_base(p)
    quot, rem = divmod(q_factorial(n, p), q_factorial(k, p) * q_factorial(n - k, p))
    assert rem == 0
    return quot


@lru_cache(maxsize=None)
def q_factorial_poly(r: int) -> IntPolynomial:
    """q_factorial with the base left symbolic: the product of (X^s - 1) for s = 1..r."""
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    out = ONE
    for s in range(1, r + 1):
        out = out * (IntPolynomial.monomial(s) - 1)
    return out


@lru_cache(maxsize=None)
def gaussian_binomial_poly(n: int, k: int) -> IntPolynomial:
    """The q-binomial [n choose k] as a polynomial in the base.

    Built bottom-up with the Pascal-style recurrence

        [n k] = [n-1 k-1] + X^k * [n-1 k],   [n 0] = [n n] = 1,

    which never needs polynomial division. Evaluating the result at any
    integer p >= 2 agrees with gaussian_binomial(n, k, p).
    """
    if not 0 <= k <= n:
        raise ValueError(f"k must satisfy 0 <= k <= n, got k={k}, n={n}")
    if k == 0 or k == n:
        return ONE
    return gaussian_binomial_poly(n - 1, k - 1) + IntPolynomial.monomial(k) * gaussian_binomial_poly(n - 1, k)


def galois_number(n: int, p: int) -> int:
    """Total number of subspaces of F_p^n, summed over all dimensions."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    _check_base(p)
    return sum(gaussian_binomial(n, k, p) for k in range(n + 1))


def clear_caches() -> None:
    """Drop all memoized values (useful for benchmarks and test isolation)."""
    q_factorial.cache_clear()
    gaussian_binomial.cache_clear()
    q_factorial_poly.cache_clear()
    gaussian_binomial_poly.cache_clear()
