"""Exact convex hull machinery for integer point sets.

Facet enumeration runs the double description method on the cone of valid
inequalities: the extreme rays of {(a, b) : a.p <= b for all points p} are
exactly the facet inequalities of the hull (plus the trivial ray 0 <= b).
Everything is integer arithmetic; rays are kept primitive by gcd division.

Volumes are lattice-normalized: for full-dimensional integer point sets the
normalized volume equals the Euclidean volume, computed by a recursive
pyramid decomposition.  A face's facet candidates are inherited from its
parent (every ridge is the intersection of two facets), so the double
description runs once per polytope rather than once per face.

An exhaustive hyperplane-enumeration facet finder is kept alongside as an
independent cross-check for small inputs.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import factorial, gcd
from typing import Sequence

Vec = tuple[int, ...]
Facet = tuple[Vec, int]


# ---------------------------------------------------------------------------
# exact linear algebra helpers
# ---------------------------------------------------------------------------

def _dot(u: Sequence[int], v: Sequence[int]) -> int:
    return sum(a * b for a, b in zip(u, v))


def _gcd_vec(v: Sequence[int]) -> int:
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def _primitive(v: Sequence[int]) -> Vec:
    """Divide by the gcd, keeping orientation."""
    g = _gcd_vec(v)
    if g > 1:
        return tuple(x // g for x in v)
    return tuple(v)


def _primitive_signed(v: Sequence[int]) -> Vec:
    """Primitive vector with the first nonzero entry positive."""
    p = _primitive(v)
    for x in p:
        if x > 0:
            return p
        if x < 0:
            return tuple(-y for y in p)
    return p


def matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank of an integer (or Fraction) matrix by exact elimination."""
    work = [list(map(Fraction, row)) for row in rows]
    if not work:
        return 0
    cols = len(work[0])
    rank = 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[rank])]
        rank += 1
        if rank == len(work):
            break
    return rank


def affine_rank(points: Sequence[Sequence[int]]) -> int:
    """Dimension of the affine hull of the points."""
    if len(points) <= 1:
        return 0
    p0 = points[0]
    return matrix_rank([[x - y for x, y in zip(p, p0)] for p in points[1:]])


def integer_det(rows: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    a = [list(row) for row in rows]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[-1][-1]


# ---------------------------------------------------------------------------
# double description
# ---------------------------------------------------------------------------

def _greedy_affine_basis(points: Sequence[Vec]) -> list[int]:
    """Indices of an inclusion-maximal affinely independent subset."""
    chosen = [0]
    rank = 0
    for i in range(1, len(points)):
        diffs = [
            [x - y for x, y in zip(points[j], points[0])] for j in chosen[1:] + [i]
        ]
        r = matrix_rank(diffs)
        if r > rank:
            chosen.append(i)
            rank = r
    return chosen


def dd_facets(points: Sequence[Vec]) -> list[Facet]:
    """Facet inequalities a.x <= b of a full-dimensional conv(points).

    Normals come out primitive and the list is sorted; raises if the input
    is not full-dimensional in its ambient space.
    """
    pts = sorted(set(points))
    d = len(pts[0])
    if d == 0:
        return []
    basis = _greedy_affine_basis(pts)
    if len(basis) != d + 1:
        raise ValueError("dd_facets needs a full-dimensional point set")

    order = basis + [i for i in range(len(pts)) if i not in set(basis)]
    rows = [tuple(pts[i]) + (-1,) for i in order]

    dim = d + 1
    lin: list[Vec] = [tuple(1 if j == i else 0 for j in range(dim)) for i in range(dim)]
    rays: list[Vec] = []
    processed: list[Vec] = []

    for c in rows:
        pivot = next((i for i, v in enumerate(lin) if _dot(c, v) != 0), None)
        if pivot is not None:
            v = lin.pop(pivot)
            dv = _dot(c, v)
            if dv < 0:
                v = tuple(-x for x in v)
                dv = -dv
            lin = [
                _primitive_signed([dv * wx - _dot(c, w) * vx for wx, vx in zip(w, v)])
                for w in lin
            ]
            rays = [
                _primitive([dv * rx - _dot(c, r) * vx for rx, vx in zip(r, v)])
                for r in rays
            ]
            rays.append(_primitive([-x for x in v]))
        else:
            dots = [_dot(c, r) for r in rays]
            if any(x > 0 for x in dots):
                active = [_active_mask(r, processed) for r in rays]
                keep = [r for r, x in zip(rays, dots) if x <= 0]
                new = []
                for i, ri in enumerate(rays):
                    if dots[i] <= 0:
                        continue
                    for j, rj in enumerate(rays):
                        if dots[j] >= 0:
                            continue
                        common = active[i] & active[j]
                        if any(
                            k != i and k != j and common & ~active[k] == 0
                            for k in range(len(rays))
                        ):
                            continue
                        combo = [
                            dots[i] * rjx - dots[j] * rix for rix, rjx in zip(ri, rj)
                        ]
                        new.append(_primitive(combo))
                rays = keep + new
        processed.append(c)

    facets = set()
    for ray in rays:
        a, b = ray[:-1], ray[-1]
        if any(a):
            facets.add((tuple(a), b))
    return sorted(facets)


def _active_mask(ray: Vec, constraints: list[Vec]) -> int:
    mask = 0
    for idx, c in enumerate(constraints):
        if _dot(c, ray) == 0:
            mask |= 1 << idx
    return mask


def exhaustive_facets(points: Sequence[Vec]) -> list[Facet]:
    """Facets by brute-force hyperplane enumeration; cross-check for small inputs.

    Every d-subset of points spanning a hyperplane nominates its hyperplane;
    keep the ones with all points on one side.
    """
    pts = sorted(set(points))
    d = len(pts[0])
    facets = set()
    for combo in combinations(pts, d):
        normal = _hyperplane_normal(combo)
        if normal is None:
            continue
        b = _dot(normal, combo[0])
        values = [_dot(normal, p) for p in pts]
        if all(v <= b for v in values):
            facets.add((normal, b))
        elif all(v >= b for v in values):
            facets.add((tuple(-x for x in normal), -b))
    return sorted(facets)


def _hyperplane_normal(pts: Sequence[Vec]) -> Vec | None:
    """Primitive normal of the hyperplane spanned by d points, if they span one."""
    d = len(pts[0])
    diffs = [[x - y for x, y in zip(p, pts[0])] for p in pts[1:]]
    if matrix_rank(diffs) != d - 1:
        return None
    kernel = _kernel_vector(diffs, d)
    return _primitive_signed(kernel)


def _kernel_vector(rows: Sequence[Sequence[int]], d: int) -> Vec:
    """An integer vector orthogonal to d-1 independent rows."""
    work = [list(map(Fraction, r)) for r in rows]
    pivots: list[int] = []
    rank = 0
    for col in range(d):
        pivot = next((i for i in range(rank, len(work)) if work[i][col] != 0), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = 1 / work[rank][col]
        work[rank] = [x * inv for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[rank])]
        pivots.append(col)
        rank += 1
    free = next(c for c in range(d) if c not in pivots)
    sol = [Fraction(0)] * d
    sol[free] = Fraction(1)
    for r, col in enumerate(pivots):
        sol[col] = -work[r][free]
    denom = 1
    for x in sol:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    return tuple(int(x * denom) for x in sol)


def hull_vertex_flags(points: Sequence[Vec], facets: Sequence[Facet]) -> list[bool]:
    """Whether each point is a vertex: its active facet normals span R^d."""
    d = len(points[0])
    flags = []
    for p in points:
        active = [a for a, b in facets if _dot(a, p) == b]
        flags.append(len(active) >= d and matrix_rank(active) == d)
    return flags


# ---------------------------------------------------------------------------
# normalized volume
# ---------------------------------------------------------------------------

def normalized_volume(points: Sequence[Vec]) -> Fraction:
    """Lattice-normalized volume of a full-dimensional integer point hull."""
    pts = sorted(set(points))
    d = len(pts[0])
    if d == 0:
        return Fraction(1)
    if affine_rank(pts) != d:
        raise ValueError("normalized_volume needs a full-dimensional point set")
    memo: dict = {}
    if len(pts) == d + 1:
        return _simplex_volume(pts, d)
    facets = dd_facets(pts)
    return _volume_rec(tuple(pts), facets, d, memo, candidates_are_facets=True)


def _simplex_volume(pts: Sequence[Vec], d: int) -> Fraction:
    rows = [[x - y for x, y in zip(p, pts[0])] for p in pts[1:]]
    return Fraction(abs(integer_det(rows)), factorial(d))


def _volume_rec(
    pts: tuple[Vec, ...],
    candidates: Sequence[Facet],
    d: int,
    memo: dict,
    candidates_are_facets: bool = False,
) -> Fraction:
    if d == 1:
        lo = min(p[0] for p in pts)
        hi = max(p[0] for p in pts)
        return Fraction(hi - lo)
    if len(pts) == d + 1:
        return _simplex_volume(pts, d)
    key = (d, pts)
    if key in memo:
        return memo[key]

    facets: list[tuple[Facet, tuple[Vec, ...]]] = []
    seen = set()
    for a, b in candidates:
        g = _gcd_vec(a)
        if g > 1:
            if b % g != 0:
                continue  # plane carries no integer points, cannot be a facet
            norm = tuple(x // g for x in a)
            fb = b // g
        else:
            norm, fb = tuple(a), b
        if (norm, fb) in seen:
            continue
        seen.add((norm, fb))
        touching = tuple(p for p in pts if _dot(norm, p) == fb)
        if len(touching) < d:
            continue
        if candidates_are_facets or affine_rank(touching) == d - 1:
            facets.append(((norm, fb), touching))

    apex = pts[0]
    total = Fraction(0)
    for (a, b), touching in facets:
        height = b - _dot(a, apex)
        if height == 0:
            continue
        i = max(range(d), key=lambda j: abs(a[j]))
        sub_pts = tuple(sorted(p[:i] + p[i + 1 :] for p in touching))
        sub_candidates = []
        for (c, e), _ in facets:
            if (c, e) == (a, b):
                continue
            projected = _project_inequality(c, e, a, b, i)
            if projected is not None:
                sub_candidates.append(projected)
        sub_vol = _volume_rec(sub_pts, sub_candidates, d - 1, memo)
        total += Fraction(height, abs(a[i])) * sub_vol
    result = total / d
    memo[key] = result
    return result


def _project_inequality(c: Vec, e: int, a: Vec, b: int, i: int) -> Facet | None:
    """Substitute the equality a.x = b into c.x <= e, eliminating coordinate i."""
    s = 1 if a[i] > 0 else -1
    new_c = [s * (a[i] * c[j] - c[i] * a[j]) for j in range(len(c)) if j != i]
    new_e = s * (a[i] * e - c[i] * b)
    if not any(new_c):
        return None
    g = _gcd_vec(new_c)
    g = gcd(g, new_e)
    if g > 1:
        new_c = [x // g for x in new_c]
        new_e //= g
    return tuple(new_c), new_e
