"""Counting chains in the subgroup lattice of Z_p^n.

A chain is a nonempty set of subgroups totally ordered by inclusion; it is
rooted if it contains the whole group. Call a chain bounded if it contains
both the trivial subgroup and the whole group. For rank n >= 1 adding or
removing the trivial subgroup is a bijection between rooted chains that
contain it and rooted chains that do not, so

    rooted = 2 * bounded        (rank 0 is the exception: a single chain).

Writing b_n for the bounded count, removing the whole group from a bounded
chain leaves a bounded chain of some proper subgroup, which is again
elementary abelian of smaller rank, giving the recurrence

    b_0 = 1,    b_n = sum_{k=0}^{n-1} gaussian_binomial(n, k, p) * b_k.

Unrolling it yields an explicit sum over subsets of {1, ..., n-1}: a subset
read in descending order is a chain of intermediate dimensions, and
contributes the product of the Gaussian binomials between consecutive
dimensions (the empty subset contributes 1). Both forms are implemented,
numerically and as polynomials in p, and must agree exactly.
"""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from functools import lru_cache

from .polynomial import ONE, IntPolynomial
from .qarith import _check_base, gaussian_binomial, gaussian_binomial_poly

CLOSED_FORM_CAP_ENV = "SUBCHAINS_MAX_N"
DEFAULT_CLOSED_FORM_CAP = 24

METHODS = ("recurrence", "closed_form")


@dataclass(frozen=True)
class ChainCounts:
    """Chain tallies for one group: rooted, unrooted, and all chains."""

    rooted: int
    unrooted: int
    total: int

    @classmethod
    def from_rooted(cls, rooted: int) -> ChainCounts:
        """Derive the unrooted and total tallies from the rooted count.

        Adding the whole group is a bijection from unrooted chains to rooted
        chains of size >= 2, and the only other rooted chain is the singleton
        {G}; hence unrooted = rooted - 1 and total = 2 * rooted - 1.
        """
        return cls(rooted=rooted, unrooted=rooted - 1, total=2 * rooted - 1)


def _check_rank(n: int) -> None:
    if n < 0:
        raise ValueError(f"rank n must be >= 0, got {n}")


# Bounded-chain values memoized per base p; the lock keeps concurrent callers
# from growing the same table at once.
_bounded_cache: dict[int, list[int]] = {}
_bounded_lock = threading.Lock()


def bounded_chains_recurrence(n: int, p: int) -> int:
    """Number of chains containing both the trivial subgroup and Z_p^n.

    Evaluates the recurrence over proper-subgroup tops with a per-base memo
    table, so reaching rank n costs O(n^2) big-integer operations. This is
    the workhorse path; it handles n in the hundreds.
    """
    _check_rank(n)
    _check_base(p)
    with _bounded_lock:
        table = _bounded_cache.setdefault(p, [1])
        for m in range(len(table), n + 1):
            table.append(sum(gaussian_binomial(m, k, p) * table[k] for k in range(m)))
        return table[n]


def closed_form_cap() -> int:
    """Largest rank accepted by bounded_chains_closed_form, from the environment."""
    raw = os.environ.get(CLOSED_FORM_CAP_ENV)
    if raw is None:
        return DEFAULT_CLOSED_FORM_CAP
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{CLOSED_FORM_CAP_ENV} must be an integer, got {raw!r}") from None


def bounded_chains_closed_form(n: int, p: int, cap: int | None = None) -> int:
    """Same count as bounded_chains_recurrence, by direct subset enumeration.

    Sums over all 2^(n-1) subsets of {1, ..., n-1} in binary-counter order;
    each subset contributes the product of Gaussian binomials along its
    descending dimension chain, topped by the count of subspaces of the
    largest chosen dimension inside the full space. Exponential in n, so
    ranks above the cap are refused (default 24; override with the cap
    argument or the SUBCHAINS_MAX_N environment variable).
    """
    _check_rank(n)
    _check_base(p)
    if cap is None:
        cap = closed_form_cap()
    if n > cap:
        raise ValueError(
            f"n={n} exceeds the closed-form enumeration cap of {cap}; "
            f"use the recurrence, or raise the cap via {CLOSED_FORM_CAP_ENV}"
        )
    if n == 0:
        return 1
    total = 0
    for mask in range(1 << (n - 1)):
        dims = [b + 1 for b in range(n - 1) if (mask >> b) & 1]
        if not dims:
            total += 1
            continue
        term = gaussian_binomial(n, dims[-1], p)
        for lower, upper in zip(dims, dims[1:]):
            term *= gaussian_binomial(upper, lower, p)
        total += term
    return total


def chain_counts(n: int, p: int, method: str = "recurrence", cap: int | None = None) -> ChainCounts:
    """All three chain tallies for Z_p^n.

    method selects how the bounded count is computed: "recurrence" (default,
    unbounded rank) or "closed_form" (subset enumeration, capped rank).
    """
    if method == "recurrence":
        bounded = bounded_chains_recurrence(n, p)
    elif method == "closed_form":
        bounded = bounded_chains_closed_form(n, p, cap=cap)
    else:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    rooted = 1 if n == 0 else 2 * bounded
    return ChainCounts.from_rooted(rooted)


@lru_cache(maxsize=None)
def bounded_chains_poly(n: int) -> IntPolynomial:
    """Bounded-chain count with the base left symbolic."""
    _check_rank(n)
    if n == 0:
        return ONE
    total = IntPolynomial()
    for k in range(n):
        total = total + gaussian_binomial_poly(n, k) * bounded_chains_poly(k)
    return total


def rooted_chains_poly(n: int) -> IntPolynomial:
    """Rooted-chain count of Z_p^n as a polynomial in p.

    For n >= 1 this has degree n(n-1)/2, leading coefficient 2, and constant
    term 2^n; the n = 0 count is the constant 1.
    """
    _check_rank(n)
    if n == 0:
        return ONE
    return 2 * bounded_chains_poly(n)


def clear_caches() -> None:
    """Drop all memoized values (useful for benchmarks and test isolation)."""
    with _bounded_lock:
        _bounded_cache.clear()
    bounded_chains_poly.cache_clear()
