import random
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from subchains.chains import chain_counts
from subchains.lattice import (
    DEFAULT_NODE_BUDGET,
    OracleCounts,
    Subspace,
    build_lattice,
    count_chains,
    enumerate_subspaces,
    is_prime,
    node_budget,
)
from subchains.qarith import galois_number, gaussian_binomial

# largest lattices here: (2,4) has 67 nodes, (3,3) has 28
ORACLE_GRID = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2)]


def test_is_prime():
    assert [m for m in range(20) if is_prime(m)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert is_prime(97)
    assert not is_prime(91)


def test_enumerate_f2_squared_lines():
    found = set(enumerate_subspaces(2, 2, 1))
    assert found == {
        Subspace(2, 2, ((1, 0),)),
        Subspace(2, 2, ((0, 1),)),
        Subspace(2, 2, ((1, 1),)),
    }


def test_enumerate_full_space_unique():
    spaces = enumerate_subspaces(3, 1, 1)
    assert spaces == [Subspace(3, 1, ((1,),))]


def test_enumerate_counts_match_gaussian_binomial():
    for p, n_hi in {(p, n) for p, n in ORACLE_GRID}:
        for n in range(n_hi + 1):
            for k in range(n + 1):
                spaces = enumerate_subspaces(p, n, k)
                assert len(spaces) == len(set(spaces))
                assert len(spaces) == gaussian_binomial(n, k, p)


def test_enumerate_rejects_composite_base():
    for bad in (1, 4, 9, 15):
        with pytest.raises(ValueError, match="prime"):
            enumerate_subspaces(bad, 2, 1)


def test_enumerate_rejects_bad_dimension():
    with pytest.raises(ValueError):
        enumerate_subspaces(2, 3, 4)
    with pytest.raises(ValueError):
        enumerate_subspaces(2, 3, -1)


def test_budget_refusal_names_the_size():
    size = galois_number(10, 2)
    assert size > 1000
    with pytest.raises(ValueError, match=str(size)):
        enumerate_subspaces(2, 10, 5, budget=1000)
    with pytest.raises(ValueError, match=str(size)):
        build_lattice(2, 10, budget=1000)


def test_budget_env_override(monkeypatch):
    monkeypatch.setenv("SUBCHAINS_ORACLE_BUDGET", "4")
    assert node_budget() == 4
    with pytest.raises(ValueError, match="budget"):
        build_lattice(2, 2)
    monkeypatch.setenv("SUBCHAINS_ORACLE_BUDGET", "5")
    assert count_chains(build_lattice(2, 2)).total_subgroups == 5


def test_is_subspace_of_examples():
    a = Subspace(2, 2, ((1, 0),))
    b = Subspace(2, 2, ((0, 1),))
    zero = Subspace(2, 2, ())
    full = Subspace(2, 2, ((1, 0), (0, 1)))
    assert a.is_subspace_of(a)
    assert zero.is_subspace_of(a) and zero.is_subspace_of(full)
    assert not a.is_subspace_of(b)
    assert a.is_subspace_of(full)
    with pytest.raises(ValueError, match="ambient"):
        a.is_subspace_of(Subspace(3, 2, ((1, 0),)))
    with pytest.raises(ValueError, match="ambient"):
        a.is_subspace_of(Subspace(2, 3, ((1, 0, 0),)))


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2)])
def test_containment_is_a_partial_order(p, n):
    nodes = build_lattice(p, n).nodes
    for a in nodes:
        assert a.is_subspace_of(a)
    for a in nodes:
        for b in nodes:
            if a.is_subspace_of(b) and b.is_subspace_of(a):
                assert a == b
            for c in nodes:
                if a.is_subspace_of(b) and b.is_subspace_of(c):
                    assert a.is_subspace_of(c)


@pytest.mark.parametrize("p,n,nodes", [(2, 2, 5), (2, 3, 16), (3, 3, 28)])
def test_lattice_node_counts(p, n, nodes):
    lattice = build_lattice(p, n)
    assert len(lattice.nodes) == nodes
    assert galois_number(n, p) == nodes


def test_lattice_shape():
    lattice = build_lattice(2, 3)
    assert lattice.nodes[0].dim == 0
    assert lattice.nodes[-1].dim == 3
    assert lattice.dim_counts() == (1, 7, 7, 1)
    # the top contains every other node; the bottom contains none
    assert lattice.below[-1] == tuple(range(len(lattice.nodes) - 1))
    assert lattice.below[0] == ()
    # containment edges only point down in dimension
    for sup, under in enumerate(lattice.below):
        for sub in under:
            assert lattice.nodes[sub].dim < lattice.nodes[sup].dim


@pytest.mark.parametrize(
    "p,n,expected",
    [(2, 1, (2, 1, 3)), (2, 2, (8, 7, 15)), (3, 2, (10, 9, 19))],
)
def test_count_chains_examples(p, n, expected):
    counts = count_chains(build_lattice(p, n)).counts
    assert (counts.rooted, counts.unrooted, counts.total) == expected


def test_lattice_agrees_with_formulas_on_grid():
    for p, n in ORACLE_GRID:
        oracle = count_chains(build_lattice(p, n))
        formula = chain_counts(n, p)
        assert oracle.counts.rooted == formula.rooted
        assert oracle.subgroups_by_dim == tuple(gaussian_binomial(n, k, p) for k in range(n + 1))
        assert oracle.total_subgroups == sum(oracle.subgroups_by_dim)
        # tallied independently, so these are discovered facts, not construction
        assert oracle.counts.rooted == oracle.counts.unrooted + 1
        assert oracle.counts.total == 2 * oracle.counts.rooted - 1


def _all_spans(p, n):
    """Span of every tuple of at most n vectors, canonicalized; slow but total."""
    vectors = list(product(range(p), repeat=n))
    seen = set()
    for size in range(n + 1):
        for choice in product(vectors, repeat=size):
            seen.add(Subspace.from_vectors(p, n, choice))
    return seen


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2)])
def test_enumeration_matches_exhaustive_spans(p, n):
    by_enumeration = {k: set(enumerate_subspaces(p, n, k)) for k in range(n + 1)}
    by_spans = {k: set() for k in range(n + 1)}
    for space in _all_spans(p, n):
        by_spans[space.dim].add(space)
    assert by_enumeration == by_spans


@pytest.mark.parametrize("p,n", [(2, 3), (3, 2)])
def test_recanonicalizing_scrambled_bases_is_stable(p, n):
    rng = random.Random(20260809)
    for k in range(n + 1):
        for space in enumerate_subspaces(p, n, k):
            rows = [list(row) for row in space.rows]
            scrambled = [row[:] for row in rows]
            for _ in range(3):  # add random row combinations: span unchanged
                if rows:
                    coefs = [rng.randrange(p) for _ in rows]
                    combo = [sum(c * row[j] for c, row in zip(coefs, rows)) % p for j in range(n)]
                    scrambled.append(combo)
            rng.shuffle(scrambled)
            assert Subspace.from_vectors(p, n, scrambled) == space


@settings(deadline=None)
@given(
    st.sampled_from([(2, 3), (3, 2)]),
    st.data(),
)
def test_from_vectors_lands_in_the_enumeration(pn, data):
    p, n = pn
    vectors = data.draw(
        st.lists(st.lists(st.integers(0, p - 1), min_size=n, max_size=n), max_size=4)
    )
    space = Subspace.from_vectors(p, n, vectors)
    assert space in set(enumerate_subspaces(p, n, space.dim))


def test_from_vectors_validates_input():
    with pytest.raises(ValueError, match="prime"):
        Subspace.from_vectors(4, 2, [(1, 0)])
    with pytest.raises(ValueError, match="length"):
        Subspace.from_vectors(2, 2, [(1, 0, 1)])


def test_dump_format():
    lattice = build_lattice(2, 2)
    lines = list(lattice.dump_lines())
    assert lines[0] == "lattice p=2 n=2 nodes=5"
    node_lines = [line for line in lines if line.startswith("node ")]
    edge_lines = [line for line in lines if line.startswith("edge ")]
    assert len(node_lines) == 5
    assert node_lines[0] == "node 0 dim=0 basis=-"
    assert node_lines[1] == "node 1 dim=1 basis=0,1"
    assert node_lines[4] == "node 4 dim=2 basis=1,0;0,1"
    # 3 lines over the origin plus 4 proper subspaces under the plane
    assert len(edge_lines) == 7
    assert edge_lines == sorted(edge_lines, key=lambda s: tuple(map(int, s.split()[1:])))


def test_default_budget_is_documented_value():
    assert node_budget() == DEFAULT_NODE_BUDGET


def test_oracle_counts_is_a_plain_record():
    oracle = count_chains(build_lattice(2, 1))
    assert oracle == OracleCounts(oracle.counts, (1, 1), 2)
