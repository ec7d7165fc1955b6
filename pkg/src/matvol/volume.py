"""Exact polytope volumes via signed mixed-volume expansions over subset tuples.

All volumes are lattice-normalized so the standard simplex on n vertices has
volume 1/(n-1)!.  The engines sum, over tuples of contraction sets drawn
from an invariant's support, the product of the invariant values; a tuple
contributes exactly when its sets satisfy intersection bounds

    strict:  |J_{i_1} cap ... cap J_{i_k}| <  n - k   (hyperplane families)
    weak:    |J_{i_1} cap ... cap J_{i_k}| <= n - k   (orthant families)

for every choice of distinct indices.  The strict bound is the dragon
marriage condition; the weak one says the complements admit a system of
distinct representatives.  Enumeration runs over multisets with multinomial
counting and prunes a branch as soon as any index subset violates its bound.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Sequence

from .bitset import subset_sort_key
from .decomposition import FAMILY_DELTA, SignedDecomposition
from .errors import DimensionMismatch, DisconnectedMatroid, NonIntegerNormalizedVolume
from .invariants import signed_beta_contractions, signed_gamma_contractions
from .matroid import Matroid, components, dual, is_connected, restriction


# ---------------------------------------------------------------------------
# tuple conditions
# ---------------------------------------------------------------------------

def _intersection_condition(sets: Sequence[int], n: int, strict: bool) -> bool:
    bound = n - 1 if strict else n
    count = len(sets)
    full = (1 << n) - 1
    inter = [full] * (1 << count)
    for s in range(1, 1 << count):
        low = (s & -s).bit_length() - 1
        inter[s] = inter[s & (s - 1)] & sets[low]
        if inter[s].bit_count() + s.bit_count() > bound:
            return False
    return True


def _max_matching_size(left_masks: Sequence[int], n: int) -> int:
    """Maximum bipartite matching from mask-valued sets into [n] (Kuhn)."""
    match_to = [-1] * n

    def augment(u: int, seen: list[int]) -> bool:
        while True:
            cand = left_masks[u] & ~seen[0]
            if not cand:
                return False
            b = (cand & -cand).bit_length() - 1
            seen[0] |= 1 << b
            if match_to[b] < 0 or augment(match_to[b], seen):
                match_to[b] = u
                return True

    size = 0
    for u in range(len(left_masks)):
        if augment(u, [0]):
            size += 1
    return size


def dragon_marriage(sets: Sequence[int], n: int) -> bool:
    """Dragon marriage condition for an (n-1)-tuple of subsets of [n].

    Checked via matchings: for every k the complements must admit a system
    of distinct representatives avoiding k.
    """
    if len(sets) != n - 1:
        raise ValueError(f"expected {n - 1} subsets, got {len(sets)}")
    full = (1 << n) - 1
    complements = [full ^ j for j in sets]
    for k in range(n):
        masked = [c & ~(1 << k) for c in complements]
        if _max_matching_size(masked, n) != n - 1:
            return False
    return True


def dragon_marriage_intersection_bounds(sets: Sequence[int], n: int) -> bool:
    """Dragon marriage via the defining strict intersection bounds."""
    if len(sets) != n - 1:
        raise ValueError(f"expected {n - 1} subsets, got {len(sets)}")
    return _intersection_condition(sets, n, strict=True)


def sdr_condition(sets: Sequence[int], n: int) -> bool:
    """True iff the complements of an n-tuple of subsets admit an SDR."""
    if len(sets) != n:
        raise ValueError(f"expected {n} subsets, got {len(sets)}")
    full = (1 << n) - 1
    return _max_matching_size([full ^ j for j in sets], n) == n


def sdr_condition_intersection_bounds(sets: Sequence[int], n: int) -> bool:
    """SDR criterion via the equivalent weak intersection bounds (Hall)."""
    if len(sets) != n:
        raise ValueError(f"expected {n} subsets, got {len(sets)}")
    return _intersection_condition(sets, n, strict=False)


# ---------------------------------------------------------------------------
# multiset tuple enumeration
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TermGroup:
    """Ordered-tuple count and signed contribution of one census group."""

    tuples: int
    signed_sum: int


def _support_table(table: Sequence[int], skip_mask: int | None) -> list[tuple[int, int]]:
    support = [
        (mask, coeff)
        for mask, coeff in enumerate(table)
        if coeff != 0 and mask != skip_mask
    ]
    support.sort(key=lambda mc: subset_sort_key(mc[0]))
    return support


def signed_tuple_sum(
    support: Sequence[tuple[int, int]],
    length: int,
    n: int,
    strict: bool,
    threads: int = 1,
    census: dict[tuple[int, ...], TermGroup] | None = None,
) -> int:
    """Sum over all valid ordered tuples of the product of coefficients.

    ``support`` lists (mask, coefficient) pairs.  Tuples are enumerated as
    multisets with multinomial counting; the bounds only tighten as
    multiplicities grow, so each branch dies at the first violated index
    subset.  Two refinements keep large supports tractable: an intersection
    record that can no longer be violated within the remaining budget is
    dropped, and once nothing can be violated at all the rest of the sum
    collapses to a power of the remaining coefficient total, since
    unconstrained ordered tuples factorize.  When ``census`` is given it is
    filled keyed by the sorted tuple of set cardinalities (small inputs
    only: the census path enumerates every multiset).
    """
    bound = n - 1 if strict else n
    if length == 0:
        if census is not None:
            census[()] = TermGroup(1, 1)
        return 1
    if census is not None:
        return _tuple_sum_with_census(support, length, bound, census)

    ordered = sorted(support, key=lambda mc: (-mc[0].bit_count(), mc[0]))
    count = len(ordered)
    fact = factorial(length)
    suffix_sum = [0] * (count + 1)
    suffix_maxpc = [0] * (count + 1)
    for i in range(count - 1, -1, -1):
        suffix_sum[i] = suffix_sum[i + 1] + ordered[i][1]
        suffix_maxpc[i] = max(suffix_maxpc[i + 1], ordered[i][0].bit_count())

    def run_task(task: tuple[int, int]) -> int:
        start, mult = task
        mask, coeff = ordered[start]
        pc = mask.bit_count()
        if pc + mult > bound:
            return 0
        total = 0
        budget0 = length - mult
        entries0 = [(mask, pc, mult)] if pc + mult + budget0 > bound else []
        stack = [(start + 1, budget0, entries0, coeff**mult, factorial(mult))]
        while stack:
            idx, budget, entries, prod, denom = stack.pop()
            if budget == 0:
                total += (fact // denom) * prod
                continue
            if idx == count:
                continue
            if not entries and suffix_maxpc[idx] + budget <= bound:
                total += (
                    fact // (denom * factorial(budget))
                ) * prod * suffix_sum[idx] ** budget
                continue
            stack.append((idx + 1, budget, entries, prod, denom))
            m_, c_ = ordered[idx]
            mpc = m_.bit_count()
            for mu in range(1, budget + 1):
                rest = budget - mu
                if mpc + mu > bound:
                    break
                new_entries = []
                if mpc + mu + rest > bound:
                    new_entries.append((m_, mpc, mu))
                ok = True
                for im, ipc, cnt in entries:
                    nm = im & m_
                    npc = nm.bit_count()
                    nc = cnt + mu
                    if npc + nc > bound:
                        ok = False
                        break
                    if npc + nc + rest > bound:
                        new_entries.append((nm, npc, nc))
                    if ipc + cnt + rest > bound:
                        new_entries.append((im, ipc, cnt))
                if not ok:
                    break
                stack.append(
                    (idx + 1, rest, new_entries, prod * c_**mu, denom * factorial(mu))
                )
        return total

    tasks = [(i, mult) for i in range(count) for mult in range(1, length + 1)]
    if threads <= 1 or len(tasks) <= 1:
        results = [run_task(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run_task, tasks))
    return sum(results)


def _tuple_sum_with_census(
    support: Sequence[tuple[int, int]],
    length: int,
    bound: int,
    census: dict[tuple[int, ...], TermGroup],
) -> int:
    """Exhaustive multiset walk that also groups ordered-tuple contributions
    by the sorted cardinalities of the chosen sets."""
    ordered = sorted(support, key=lambda mc: subset_sort_key(mc[0]))
    fact = factorial(length)
    grand = [0]

    def leaf(chosen, prod, denom):
        perms = fact // denom
        grand[0] += perms * prod
        sig = []
        for m_, mu in chosen:
            sig.extend([m_.bit_count()] * mu)
        key = tuple(sorted(sig))
        prev = census.get(key, TermGroup(0, 0))
        census[key] = TermGroup(prev.tuples + perms, prev.signed_sum + perms * prod)

    def dfs(idx, budget, entries, chosen, prod, denom):
        if budget == 0:
            leaf(chosen, prod, denom)
            return
        if idx == len(ordered):
            return
        dfs(idx + 1, budget, entries, chosen, prod, denom)
        m_, c_ = ordered[idx]
        for mu in range(1, budget + 1):
            new_entries = [(m_, mu)]
            ok = m_.bit_count() + mu <= bound
            if ok:
                for im, cnt in entries:
                    nm = im & m_
                    nc = cnt + mu
                    if nm.bit_count() + nc > bound:
                        ok = False
                        break
                    new_entries.append((nm, nc))
            if not ok:
                break
            dfs(
                idx + 1,
                budget - mu,
                entries + new_entries,
                chosen + [(m_, mu)],
                prod * c_**mu,
                denom * factorial(mu),
            )

    dfs(0, length, [], [], 1, 1)
    return grand[0]


def signed_tuple_sum_ordered(
    support: Sequence[tuple[int, int]], length: int, n: int, strict: bool
) -> int:
    """Naive ordered-tuple enumeration; validation oracle for small inputs."""
    total = 0
    for combo in product(range(len(support)), repeat=length):
        sets = [support[i][0] for i in combo]
        if _intersection_condition(sets, n, strict):
            prod = 1
            for i in combo:
                prod *= support[i][1]
            total += prod
    return total


def ordered_contributing_terms(
    support: Sequence[tuple[int, int]], length: int, n: int, strict: bool
) -> list[tuple[tuple[int, ...], int]]:
    """All valid ordered tuples with their products; small inputs only."""
    out = []
    for combo in product(range(len(support)), repeat=length):
        sets = tuple(support[i][0] for i in combo)
        if _intersection_condition(sets, n, strict):
            prod = 1
            for i in combo:
                prod *= support[i][1]
            out.append((sets, prod))
    return out


# ---------------------------------------------------------------------------
# volumes
# ---------------------------------------------------------------------------

def _beta_support(m: Matroid) -> list[tuple[int, int]]:
    return _support_table(signed_beta_contractions(m), m.full_mask)


def _gamma_support(m: Matroid) -> list[tuple[int, int]]:
    return _support_table(signed_gamma_contractions(m), m.full_mask)


def volume_base_polytope(m: Matroid, threads: int = 1) -> Fraction:
    """Volume of the base polytope.

    Connected matroids use the signed-beta tuple sum, run on whichever of M
    and its dual has the smaller support (the two polytopes are congruent).
    Disconnected matroids factor into a product over components.
    """
    if m.n == 1:
        return Fraction(1)  # a single point either way
    if not is_connected(m):
        result = Fraction(1)
        for comp in components(m):
            result *= volume_base_polytope(restriction(m, comp), threads)
        return result
    support = _beta_support(m)
    dual_support = _beta_support(dual(m))
    if len(dual_support) < len(support):
        support = dual_support
    total = signed_tuple_sum(support, m.n - 1, m.n, strict=True, threads=threads)
    return Fraction(total, factorial(m.n - 1))


def volume_independent_polytope(m: Matroid, threads: int = 1) -> Fraction:
    """Full-dimensional volume of the independent set polytope.

    Disconnected matroids factor as a coordinate product; a loop flattens
    its factor to a point, so any loop forces volume 0.
    """
    if m.n == 1:
        return Fraction(m.rank_value)  # unit segment for a coloop, point for a loop
    if not is_connected(m):
        result = Fraction(1)
        for comp in components(m):
            result *= volume_independent_polytope(restriction(m, comp), threads)
        return result
    total = signed_tuple_sum(_beta_support(m), m.n, m.n, strict=False, threads=threads)
    return Fraction(total, factorial(m.n))


def volume_truncation_flag(m: Matroid, threads: int = 1) -> Fraction:
    """Volume of the truncation flag polytope via the signed-gamma tuple sum.

    The expansion needs the flag polytope to be full-dimensional in its
    hyperplane, which holds exactly when M has no loops (the rank-1
    truncation is then the full simplex).
    """
    if m.has_loops():
        raise DisconnectedMatroid(
            "flag polytope is lower-dimensional for matroids with loops"
        )
    if m.n == 1:
        return Fraction(1)
    total = signed_tuple_sum(_gamma_support(m), m.n - 1, m.n, strict=True, threads=threads)
    return Fraction(total, factorial(m.n - 1))


def volume_signed_sum(d: SignedDecomposition, threads: int = 1) -> Fraction:
    """Volume of a signed sum of simplex summands via 0/1 mixed volumes.

    Delta families expand over (n-1)-tuples whose complements must satisfy
    the strict bounds; D families over n-tuples with the weak bounds.
    """
    if d.n < 1:
        raise DimensionMismatch("signed sums need an ambient ground set")
    full = (1 << d.n) - 1
    support = sorted(
        ((full ^ mask, coeff) for mask, coeff in d.coeffs.items()),
        key=lambda mc: subset_sort_key(mc[0]),
    )
    if d.family == FAMILY_DELTA:
        length, strict = d.n - 1, True
    else:
        length, strict = d.n, False
    total = signed_tuple_sum(support, length, d.n, strict=strict, threads=threads)
    return Fraction(total, factorial(length))


def orbit_degree(m: Matroid) -> tuple[Fraction, int]:
    """Base polytope volume together with its integer (n-1)! multiple."""
    if not is_connected(m):
        raise DisconnectedMatroid("degree is defined here for connected matroids only")
    vol = volume_base_polytope(m)
    scaled = vol * factorial(m.n - 1)
    if scaled.denominator != 1:
        raise NonIntegerNormalizedVolume(
            f"(n-1)! * volume = {scaled} is not an integer; this is a bug"
        )
    return vol, int(scaled)


def independent_volume_census(m: Matroid) -> dict[tuple[int, ...], TermGroup]:
    """Signed term census of the independent set volume, keyed by the sorted
    cardinalities of the contraction sets in each ordered tuple."""
    if not is_connected(m):
        raise DisconnectedMatroid("the term census expands the connected formula")
    census: dict[tuple[int, ...], TermGroup] = {}
    signed_tuple_sum(_beta_support(m), m.n, m.n, strict=False, census=census)
    return census


def flag_volume_ordered_terms(m: Matroid) -> list[tuple[tuple[int, ...], int]]:
    """Every ordered tuple contributing to the flag volume, with its product."""
    if m.has_loops():
        raise DisconnectedMatroid(
            "flag polytope is lower-dimensional for matroids with loops"
        )
    return ordered_contributing_terms(_gamma_support(m), m.n - 1, m.n, strict=True)
