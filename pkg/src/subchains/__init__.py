"""Exact chain counting in the subgroup lattice of Z_p^n.

Rooted chains of subgroups (those containing the whole group) are in
bijection with the distinct fuzzy subgroups of the group, which is what
makes these counts worth computing exactly. The package provides the counts
as unbounded integers for a fixed base and as integer polynomials in the
base, plus a brute-force subgroup-lattice oracle that validates everything
at small scale.
"""

from .chains import (
    ChainCounts,
    bounded_chains_closed_form,
    bounded_chains_poly,
    bounded_chains_recurrence,
    chain_counts,
    rooted_chains_poly,
)
from .lattice import (
    OracleCounts,
    SubgroupLattice,
    Subspace,
    build_lattice,
    count_chains,
    enumerate_subspaces,
    is_prime,
)
from .polynomial import IntPolynomial
from .qarith import (
    galois_number,
    gaussian_binomial,
    gaussian_binomial_poly,
    q_factorial,
    q_factorial_poly,
)

__version__ = "0.1.0"

__all__ = [
    "ChainCounts",
    "IntPolynomial",
    "OracleCounts",
    "SubgroupLattice",
    "Subspace",
    "bounded_chains_closed_form",
    "bounded_chains_poly",
    "bounded_chains_recurrence",
    "build_lattice",
    "chain_counts",
    "count_chains",
    "enumerate_subspaces",
    "galois_number",
    "gaussian_binomial",
    "gaussian_binomial_poly",
    "is_prime",
    "q_factorial",
    "q_factorial_poly",
    "rooted_chains_poly",
]
