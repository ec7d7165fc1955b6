"""Cross-checks of the formula engines against the geometric oracle.

Each matroid gets one check unit per polytope family: the decomposition is
recomputed through the profile transforms, its support function is compared
against direct combinatorial optimization in random integer directions, the
signed sum identity is checked as equality of actual vertex sets, and the
formula volume is compared with the oracle volume where the oracle scales
(ground sets up to 6, flags up to 5).
"""

from __future__ import annotations

import itertools
import random
import zlib
from dataclasses import dataclass

from .decomposition import (
    SignedDecomposition,
    add,
    decompose_base_polytope,
    decompose_independent_polytope,
    decompose_truncation_flag,
    support_function,
    y_from_z_gp,
    y_from_z_q,
    z_from_matroid,
    z_from_matroid_indep,
)
from .matroid import Matroid, is_connected, truncate
from .oracle import LatticeFrame, vertices_base, vertices_flag, vertices_indep, volume_exact
from .volume import (
    volume_base_polytope,
    volume_independent_polytope,
    volume_truncation_flag,
)

ORACLE_VOLUME_MAX_N = 6
ORACLE_FLAG_MAX_N = 5
SUPPORT_DIRECTIONS = 100


@dataclass(frozen=True)
class Mismatch:
    matroid_name: str
    check: str
    detail: str


def _seed_for(m: Matroid) -> int:
    payload = f"{m.n}:{sorted(m.bases)}".encode()
    return zlib.crc32(payload)


def greedy_max_basis(m: Matroid, order: list[int]) -> int:
    """Max-weight basis for weights decreasing along ``order`` (0-based).

    The matroid greedy algorithm; for injective weights the optimum basis is
    unique, so the returned mask is the argmax.
    """
    current = 0
    size = 0
    rank = m.rank
    r_cur = 0
    for e in order:
        candidate = current | (1 << e)
        if rank(candidate) > r_cur:
            current = candidate
            r_cur += 1
            size += 1
            if size == m.rank_value:
                break
    return current


def max_basis_weight(m: Matroid, w: list[int]) -> int:
    order = sorted(range(m.n), key=lambda e: -w[e])
    basis = greedy_max_basis(m, order)
    return sum(w[e] for e in range(m.n) if basis >> e & 1)


def max_independent_weight(m: Matroid, w: list[int]) -> int:
    """Greedy optimum over independent sets with free disposal."""
    order = sorted(range(1, m.n + 1), key=lambda e: -w[e - 1])
    current = 0
    total = 0
    for e in order:
        if w[e - 1] <= 0:
            break
        candidate = current | (1 << (e - 1))
        if m.rank(candidate) > m.rank(current):
            current = candidate
            total += w[e - 1]
    return total


def _signed_sum_vertex_sets(m: Matroid, d: SignedDecomposition):
    """Vertex sets of P + (negative part) and of (positive part).

    Every vertex maximizes some direction with distinct entries, and such a
    direction picks a unique vertex in each summand, so running over all
    coordinate orderings enumerates both vertex sets exactly.
    """
    n = m.n
    neg = [(tuple(e for e in range(n) if mask >> e & 1), -c) for mask, c in d.coeffs.items() if c < 0]
    pos = [(tuple(e for e in range(n) if mask >> e & 1), c) for mask, c in d.coeffs.items() if c > 0]
    left: set[tuple[int, ...]] = set()
    right: set[tuple[int, ...]] = set()
    pos_of = [0] * n
    for perm in itertools.permutations(range(n)):
        for position, e in enumerate(perm):
            pos_of[e] = n - position  # first in perm = heaviest
        basis = greedy_max_basis(m, list(perm))
        point = [1 if basis >> e & 1 else 0 for e in range(n)]
        for elements, mult in neg:
            top = max(elements, key=pos_of.__getitem__)
            point[top] += mult
        left.add(tuple(point))
        point = [0] * n
        for elements, mult in pos:
            top = max(elements, key=pos_of.__getitem__)
            point[top] += mult
        right.add(tuple(point))
    return left, right


def check_base_polytope(m: Matroid, name: str) -> list[Mismatch]:
    out = []
    d = decompose_base_polytope(m)
    via_transform = y_from_z_gp(z_from_matroid(m))
    if d != via_transform:
        out.append(Mismatch(name, "base-decomposition", "contraction coefficients disagree with the profile inversion"))
    rng = random.Random(_seed_for(m))
    for _ in range(SUPPORT_DIRECTIONS):
        w = [rng.randint(-9, 9) for _ in range(m.n)]
        lhs = support_function(d, w)
        rhs = max_basis_weight(m, w)
        if lhs != rhs:
            out.append(Mismatch(name, "base-support", f"direction {w}: decomposition gives {lhs}, bases give {rhs}"))
            break
    left, right = _signed_sum_vertex_sets(m, d)
    if left != right:
        out.append(Mismatch(name, "base-hull-identity", f"vertex sets differ: {sorted(left - right)[:3]} vs {sorted(right - left)[:3]}"))
    if is_connected(m) and m.n <= ORACLE_VOLUME_MAX_N:
        formula = volume_base_polytope(m)
        geometric = volume_exact(vertices_base(m), LatticeFrame.ROOT)
        if formula != geometric:
            out.append(Mismatch(name, "base-volume", f"formula {formula} vs oracle {geometric}"))
    return out


def check_independent_polytope(m: Matroid, name: str) -> list[Mismatch]:
    out = []
    d = decompose_independent_polytope(m)
    via_transform = y_from_z_q(z_from_matroid_indep(m))
    if d != via_transform:
        out.append(Mismatch(name, "indep-decomposition", "contraction coefficients disagree with the profile inversion"))
    rng = random.Random(_seed_for(m) ^ 0x5EED)
    for _ in range(SUPPORT_DIRECTIONS):
        w = [rng.randint(-9, 9) for _ in range(m.n)]
        lhs = support_function(d, w)
        rhs = max_independent_weight(m, w)
        if lhs != rhs:
            out.append(Mismatch(name, "indep-support", f"direction {w}: decomposition gives {lhs}, independents give {rhs}"))
            break
    if m.n <= ORACLE_VOLUME_MAX_N:
        formula = volume_independent_polytope(m)
        if m.has_loops():
            if formula != 0:
                out.append(Mismatch(name, "indep-volume", f"loops flatten the polytope but formula gives {formula}"))
        else:
            geometric = volume_exact(vertices_indep(m), LatticeFrame.STANDARD)
            if formula != geometric:
                out.append(Mismatch(name, "indep-volume", f"formula {formula} vs oracle {geometric}"))
    return out


def check_flag_polytope(m: Matroid, name: str) -> list[Mismatch]:
    out = []
    d = decompose_truncation_flag(m)
    summed = None
    for i in range(1, m.rank_value + 1):
        piece = decompose_base_polytope(truncate(m, i))
        summed = piece if summed is None else add(summed, piece)
    if summed != d:
        out.append(Mismatch(name, "flag-decomposition", "gamma coefficients disagree with the truncation sum"))
    rng = random.Random(_seed_for(m) ^ 0xF1A6)
    for _ in range(SUPPORT_DIRECTIONS):
        w = [rng.randint(-9, 9) for _ in range(m.n)]
        lhs = support_function(d, w)
        rhs = sum(max_basis_weight(truncate(m, i), w) for i in range(1, m.rank_value + 1))
        if lhs != rhs:
            out.append(Mismatch(name, "flag-support", f"direction {w}: decomposition gives {lhs}, truncations give {rhs}"))
            break
    if m.n <= ORACLE_FLAG_MAX_N:
        formula = volume_truncation_flag(m)
        geometric = volume_exact(vertices_flag(m), LatticeFrame.ROOT)
        if formula != geometric:
            out.append(Mismatch(name, "flag-volume", f"formula {formula} vs oracle {geometric}"))
    return out


def verify_matroid(m: Matroid, name: str) -> tuple[int, list[Mismatch]]:
    """Run every applicable polytope check; returns (checks run, mismatches)."""
    checks = 0
    mismatches: list[Mismatch] = []
    checks += 1
    mismatches.extend(check_base_polytope(m, name))
    checks += 1
    mismatches.extend(check_independent_polytope(m, name))
    if not m.has_loops():
        checks += 1
        mismatches.extend(check_flag_polytope(m, name))
    return checks, mismatches
