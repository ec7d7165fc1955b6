"""Matroids given by their basis families: rank oracle, minors, duality.

A matroid lives on ground set [n] with n <= 20 so that every subset fits in
a machine word and every subset-indexed table has exactly 2^n entries.
Matroids are immutable after construction except for the internal rank memo,
which is only ever filled with identical values and is therefore safe to
share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from .bitset import elements_of, mask_of, subset_sort_key
from .errors import (
    EmptyBasisFamily,
    ExchangeAxiomViolation,
    GroundSetTooLarge,
    InvalidTruncationRank,
    InvalidUniformParams,
    UnequalCardinality,
)

MAX_GROUND_SET = 20


@dataclass(frozen=True)
class Graph:
    """Multigraph on 1-based vertices; loops and parallel edges allowed.

    Edges are numbered 1..m in list order and form the ground set of the
    associated graphic matroid.
    """

    vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for u, v in self.edges:
            if not (1 <= u <= self.vertices and 1 <= v <= self.vertices):
                raise ValueError(f"edge ({u},{v}) outside vertex range 1..{self.vertices}")


@dataclass(frozen=True)
class Matroid:
    """A matroid on [n] with rank ``rank_value``, given by its basis masks.

    ``parent_labels`` maps this matroid's elements back to the labels of the
    matroid it was derived from by ``contract``/``delete``; it does not take
    part in equality.
    """

    n: int
    rank_value: int
    bases: frozenset[int]
    parent_labels: tuple[int, ...] | None = field(default=None, compare=False, repr=False)
    _rank_memo: list = field(default=None, init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "_rank_memo", [-1] * (1 << self.n))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def rank(self, subset: int) -> int:
        """Rank of a subset: the largest intersection with a basis."""
        r = self._rank_memo[subset]
        if r < 0:
            r = max((subset & b).bit_count() for b in self.bases)
            self._rank_memo[subset] = r
        return r

    def is_independent(self, subset: int) -> bool:
        return self.rank(subset) == subset.bit_count()

    def is_loop(self, element: int) -> bool:
        return self.rank(1 << (element - 1)) == 0

    def has_loops(self) -> bool:
        return any(self.is_loop(e) for e in range(1, self.n + 1))

    def sorted_bases(self) -> list[int]:
        return sorted(self.bases)


def _check_ground_set(n: int) -> None:
    if n < 1:
        raise ValueError(f"ground set must have at least one element, got n={n}")
    if n > MAX_GROUND_SET:
        raise GroundSetTooLarge(f"n={n} exceeds the hard limit of {MAX_GROUND_SET} elements")


def from_bases(n: int, bases: Iterable[int], validate: bool = True) -> Matroid:
    """Build a matroid from basis masks, checking the basis exchange axiom."""
    _check_ground_set(n)
    basis_set = frozenset(bases)
    if not basis_set:
        raise EmptyBasisFamily("a matroid needs at least one basis")
    full = (1 << n) - 1
    for b in basis_set:
        if b & ~full:
            raise ValueError(f"basis mask {b} has elements outside 1..{n}")
    sizes = {b.bit_count() for b in basis_set}
    if len(sizes) > 1:
        small = min(basis_set, key=subset_sort_key)
        big = max(basis_set, key=subset_sort_key)
        raise UnequalCardinality(
            f"bases {sorted(elements_of(small))} and {sorted(elements_of(big))} differ in size"
        )
    rank = sizes.pop()
    if validate:
        _check_exchange(basis_set)
    return Matroid(n=n, rank_value=rank, bases=basis_set)


def _check_exchange(bases: frozenset[int]) -> None:
    ordered = sorted(bases)
    for b1 in ordered:
        for b2 in ordered:
            if b1 == b2:
                continue
            only_b1 = b1 & ~b2
            only_b2 = b2 & ~b1
            e_bits = only_b1
            while e_bits:
                e = e_bits & -e_bits
                e_bits &= e_bits - 1
                stripped = b1 & ~e
                f_bits = only_b2
                ok = False
                while f_bits:
                    f = f_bits & -f_bits
                    f_bits &= f_bits - 1
                    if (stripped | f) in bases:
                        ok = True
                        break
                if not ok:
                    raise ExchangeAxiomViolation(
                        f"no exchange for element {elements_of(e)[0]} of basis "
                        f"{sorted(elements_of(b1))} against basis {sorted(elements_of(b2))}"
                    )


def uniform(k: int, n: int) -> Matroid:
    """Uniform matroid U_{k,n}; k = 0 gives the rank-0 matroid with basis {}."""
    if n < 1 or not 0 <= k <= n:
        raise InvalidUniformParams(f"uniform matroid needs 0 <= k <= n and n >= 1, got k={k}, n={n}")
    _check_ground_set(n)
    bases = frozenset(mask_of(c) for c in combinations(range(1, n + 1), k))
    return Matroid(n=n, rank_value=k, bases=bases)


def graphic(g: Graph) -> Matroid:
    """Graphic matroid of a multigraph: bases are its maximal spanning forests."""
    m = len(g.edges)
    _check_ground_set(m)

    def forest_size(edge_indices: Iterable[int]) -> int:
        parent = list(range(g.vertices + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        count = 0
        for i in edge_indices:
            u, v = g.edges[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                count += 1
        return count

    rank = forest_size(range(m))
    bases = set()
    for combo in combinations(range(m), rank):
        if forest_size(combo) == rank:
            bases.add(mask_of(i + 1 for i in combo))
    return Matroid(n=m, rank_value=rank, bases=frozenset(bases))


def _minor(parent: Matroid, removed: int, new_rank: int, keep_spanning: int) -> Matroid:
    """Shared relabeling machinery for contraction and deletion.

    ``keep_spanning`` is the mask whose rank a candidate basis must complete:
    contraction passes the contracted set, deletion passes 0.
    """
    labels = elements_of(parent.full_mask & ~removed)
    m = len(labels)
    target = parent.rank(keep_spanning) + new_rank
    bases = set()
    for combo in combinations(range(m), new_rank):
        x = mask_of(labels[i] for i in combo)
        if parent.rank(keep_spanning | x) == target:
            bases.add(mask_of(i + 1 for i in combo))
    return Matroid(n=m, rank_value=new_rank, bases=frozenset(bases), parent_labels=labels)


def contract(m: Matroid, a: int) -> Matroid:
    """Contraction M/A on ground set E-A relabeled to [n-|A|]."""
    if a == m.full_mask:
        return Matroid(n=0, rank_value=0, bases=frozenset({0}), parent_labels=())
    return _minor(m, a, m.rank_value - m.rank(a), a)


def delete(m: Matroid, a: int) -> Matroid:
    """Deletion M\\A on ground set E-A relabeled to [n-|A|]."""
    if a == m.full_mask:
        return Matroid(n=0, rank_value=0, bases=frozenset({0}), parent_labels=())
    return _minor(m, a, m.rank(m.full_mask & ~a), 0)


def dual(m: Matroid) -> Matroid:
    """Dual matroid: bases are the complements of the bases."""
    full = m.full_mask
    return Matroid(
        n=m.n,
        rank_value=m.n - m.rank_value,
        bases=frozenset(full ^ b for b in m.bases),
    )


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    """Direct sum on the concatenated ground set [n1 + n2]."""
    n = m1.n + m2.n
    if n > MAX_GROUND_SET:
        raise GroundSetTooLarge(f"direct sum has {n} > {MAX_GROUND_SET} elements")
    bases = frozenset(b1 | (b2 << m1.n) for b1 in m1.bases for b2 in m2.bases)
    return Matroid(n=n, rank_value=m1.rank_value + m2.rank_value, bases=bases)


def truncate(m: Matroid, i: int) -> Matroid:
    """Rank-i truncation: bases are the independent sets of size i."""
    if not 1 <= i <= m.rank_value:
        raise InvalidTruncationRank(f"truncation rank {i} outside 1..{m.rank_value}")
    bases = set()
    for combo in combinations(range(1, m.n + 1), i):
        x = mask_of(combo)
        if m.rank(x) == i:
            bases.add(x)
    return Matroid(n=m.n, rank_value=i, bases=frozenset(bases))


def is_connected(m: Matroid) -> bool:
    """No proper nonempty split A with r(A) + r(E-A) = r(E).

    Single elements: a coloop is connected, a loop is not, so that
    connectivity coincides with a nonzero beta invariant on all ground sets.
    """
    if m.n == 0:
        return False
    if m.n == 1:
        return m.rank_value == 1
    full = m.full_mask
    r = m.rank_value
    # Odd masks < full enumerate each proper split once (side containing 1).
    for a in range(1, full, 2):
        if m.rank(a) + m.rank(full ^ a) == r:
            return False
    return True


def components(m: Matroid) -> list[int]:
    """Ground-set partition into connected components, as masks.

    The component of e is the intersection of all separators containing e;
    separators are the subsets with r(A) + r(E-A) = r(E).
    """
    if m.n == 0:
        return []
    full = m.full_mask
    r = m.rank_value
    comp = [full] * m.n
    for a in range(1, full, 2):
        if m.rank(a) + m.rank(full ^ a) != r:
            continue
        for e in range(m.n):
            if a >> e & 1:
                comp[e] &= a
            else:
                comp[e] &= full ^ a
    seen: list[int] = []
    for c in comp:
        if c not in seen:
            seen.append(c)
    return sorted(seen)


def restriction(m: Matroid, subset: int) -> Matroid:
    """Restriction M|S, i.e. deletion of the complement of S."""
    return delete(m, m.full_mask & ~subset)


def coconnected_flats(m: Matroid) -> list[int]:
    """All proper subsets A of E whose contraction M/A is connected.

    These are exactly the subsets with a nonzero signed beta invariant of
    M/A, hence the support of the base polytope decomposition.
    """
    out = [a for a in range(1 << m.n) if a != m.full_mask and is_connected(contract(m, a))]
    out.sort(key=subset_sort_key)
    return out
