import random

import pytest

from matvol.bitset import elements_of, mask_of
from matvol.errors import (
    EmptyBasisFamily,
    ExchangeAxiomViolation,
    GroundSetTooLarge,
    InvalidTruncationRank,
    InvalidUniformParams,
    UnequalCardinality,
)
from matvol.invariants import beta
from matvol.matroid import (
    Graph,
    coconnected_flats,
    components,
    contract,
    delete,
    direct_sum,
    dual,
    from_bases,
    graphic,
    is_connected,
    restriction,
    truncate,
    uniform,
)

PYRAMID_BASES = [0b0011, 0b0101, 0b1001, 0b0110, 0b1010]  # 12 13 14 23 24


@pytest.fixture
def pyramid():
    return from_bases(4, PYRAMID_BASES)


def test_from_bases_pyramid(pyramid):
    assert pyramid.rank_value == 2
    assert len(pyramid.bases) == 5


def test_from_bases_single_coloop():
    m = from_bases(1, [0b1])
    assert m.rank_value == 1
    assert m.bases == frozenset({1})


def test_from_bases_unequal_cardinality():
    with pytest.raises(UnequalCardinality):
        from_bases(3, [0b011, 0b100])


def test_from_bases_empty():
    with pytest.raises(EmptyBasisFamily):
        from_bases(3, [])


def test_from_bases_exchange_violation():
    # {1,2} and {3,4} admit no exchange for element 1
    with pytest.raises(ExchangeAxiomViolation):
        from_bases(4, [0b0011, 0b1100])


def test_ground_set_cap():
    with pytest.raises(GroundSetTooLarge):
        from_bases(21, [1])


def test_rank_examples(pyramid):
    assert pyramid.rank(mask_of([1, 2])) == 2
    assert pyramid.rank(0) == 0
    assert uniform(2, 4).rank(mask_of([1, 2, 3])) == 2


def test_rank_memo_matches_fresh_computation(catalog5):
    for entry in catalog5:
        m = entry.matroid
        for s in range(1 << m.n):
            fresh = max((s & b).bit_count() for b in m.bases)
            assert m.rank(s) == fresh, entry.name


def test_rank_submodular(catalog5):
    rng = random.Random(20260810)
    for entry in catalog5:
        m = entry.matroid
        full = m.full_mask
        for _ in range(1000):
            a = rng.randint(0, full)
            b = rng.randint(0, full)
            assert m.rank(a) + m.rank(b) >= m.rank(a | b) + m.rank(a & b), entry.name


def test_contract_drops_rank():
    m = contract(uniform(2, 3), mask_of([1]))
    assert m == uniform(1, 2)
    assert m.parent_labels == (2, 3)


def test_dual_uniform():
    assert dual(uniform(2, 3)) == uniform(1, 3)


def test_contract_pyramid_top(pyramid):
    m = contract(pyramid, mask_of([3, 4]))
    assert m.n == 2
    assert m.rank_value == 1
    assert m.bases == frozenset({0b01, 0b10})


def test_dual_involution(catalog5):
    for entry in catalog5:
        assert dual(dual(entry.matroid)) == entry.matroid, entry.name


def test_minor_commutation(catalog5):
    rng = random.Random(42)
    for entry in catalog5:
        m = entry.matroid
        if m.n < 2:
            continue
        for _ in range(20):
            a = rng.randint(0, m.full_mask)
            b = rng.randint(0, m.full_mask) & ~a
            if a == m.full_mask or (a | b) == m.full_mask and b:
                continue
            first = delete(contract(m, a), _relabel(m, a, b))
            second = contract(delete(m, b), _relabel(m, b, a))
            assert first.bases == second.bases, entry.name


def _relabel(parent, removed, target):
    """Mask of ``target`` in the child coordinates after removing ``removed``."""
    labels = elements_of(parent.full_mask & ~removed)
    out = 0
    for child_index, label in enumerate(labels, 1):
        if target >> (label - 1) & 1:
            out |= 1 << (child_index - 1)
    return out


def test_direct_sum_bases():
    m = direct_sum(uniform(1, 1), uniform(1, 1))
    assert m.n == 2
    assert m.bases == frozenset({0b11})
    assert not is_connected(m)


def test_truncate_examples():
    m = from_bases(3, [0b011, 0b101])
    t1 = truncate(m, 1)
    assert t1.bases == frozenset({0b001, 0b010, 0b100})
    assert truncate(m, m.rank_value) == m
    assert truncate(uniform(2, 4), 1) == uniform(1, 4)
    with pytest.raises(InvalidTruncationRank):
        truncate(m, 3)
    with pytest.raises(InvalidTruncationRank):
        truncate(m, 0)


def test_truncation_rank_function(catalog5):
    rng = random.Random(3)
    for entry in catalog5:
        m = entry.matroid
        if m.rank_value < 1:
            continue
        i = rng.randint(1, m.rank_value)
        t = truncate(m, i)
        for _ in range(30):
            s = rng.randint(0, m.full_mask)
            assert t.rank(s) == min(i, m.rank(s)), entry.name


def test_is_connected_examples(pyramid):
    assert is_connected(uniform(2, 3))
    assert not is_connected(direct_sum(uniform(1, 1), uniform(1, 1)))
    assert is_connected(pyramid)
    # exhaustive check of all proper splits of the pyramid matroid
    full = pyramid.full_mask
    for a in range(1, full):
        assert pyramid.rank(a) + pyramid.rank(full ^ a) > pyramid.rank_value


def test_single_element_connectivity():
    assert is_connected(uniform(1, 1))
    assert not is_connected(uniform(0, 1))


def test_components_of_direct_sum():
    m = direct_sum(uniform(2, 3), uniform(1, 2))
    assert components(m) == [0b00111, 0b11000]
    assert restriction(m, 0b00111) == uniform(2, 3)


def test_coconnected_flats_examples():
    assert coconnected_flats(uniform(2, 3)) == [0, 0b001, 0b010, 0b100]
    assert coconnected_flats(uniform(1, 3)) == [0]
    free3 = uniform(3, 3)
    assert coconnected_flats(free3) == [0b011, 0b101, 0b110]


def test_coconnected_flats_match_beta_support(catalog5):
    for entry in catalog5:
        m = entry.matroid
        flats = coconnected_flats(m)
        by_connectivity = [
            a for a in range(1 << m.n)
            if a != m.full_mask and is_connected(contract(m, a))
        ]
        by_beta = [
            a for a in range(1 << m.n)
            if a != m.full_mask and beta(contract(m, a)) != 0
        ]
        assert sorted(flats) == by_connectivity == by_beta, entry.name


def test_uniform_examples():
    assert uniform(2, 3).bases == frozenset({0b011, 0b101, 0b110})
    assert uniform(4, 4).bases == frozenset({0b1111})
    assert uniform(0, 2).rank_value == 0
    with pytest.raises(InvalidUniformParams):
        uniform(3, 2)
    with pytest.raises(InvalidUniformParams):
        uniform(0, 0)


def test_graphic_triangle():
    g = Graph(3, ((1, 2), (2, 3), (3, 1)))
    assert graphic(g) == uniform(2, 3)


def test_graphic_with_loop_and_parallel():
    g = Graph(2, ((1, 2), (1, 2), (1, 1)))
    m = graphic(g)
    assert m.rank_value == 1
    assert m.bases == frozenset({0b001, 0b010})
    assert m.is_loop(3)
