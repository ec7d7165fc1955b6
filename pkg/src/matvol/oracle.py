"""Brute-force geometry used to validate the formula engines.

Vertex sets come straight from the combinatorial definitions (indicator
vectors of bases, of independent sets, of basis flags); volumes come from
exact convex hulls and pyramid decompositions, with no reference to the
invariant formulas they are checked against.

Volumes are measured in one of two lattices: base and flag polytopes live
in a coordinate-sum hyperplane and are normalized with respect to the
lattice spanned by the consecutive coordinate differences e_i - e_{i+1}
(``ROOT``); independent set polytopes are full-dimensional and use the
standard integer lattice (``STANDARD``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd

from .errors import DegenerateInput, DimensionMismatch
from .hull import (
    Facet,
    Vec,
    affine_rank,
    dd_facets,
    hull_vertex_flags,
    matrix_rank,
    normalized_volume,
)
from .matroid import Matroid


class LatticeFrame(Enum):
    ROOT = "root"
    STANDARD = "standard"


@dataclass(frozen=True)
class VertexSet:
    """A finite integer point set together with its ambient dimension."""

    n: int
    points: tuple[Vec, ...]
    affine_dim: int = field(init=False, compare=False)

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be distinct")
        for p in self.points:
            if len(p) != self.n:
                raise ValueError(f"point {p} does not have length {self.n}")
        object.__setattr__(self, "affine_dim", affine_rank(self.points))


def _vertex_set(n: int, pts) -> VertexSet:
    return VertexSet(n, tuple(sorted(set(map(tuple, pts)))))


def _indicator(mask: int, n: int) -> Vec:
    return tuple((mask >> i) & 1 for i in range(n))


def vertices_base(m: Matroid) -> VertexSet:
    """Indicator vectors of the bases."""
    return _vertex_set(m.n, (_indicator(b, m.n) for b in m.bases))


def vertices_indep(m: Matroid) -> VertexSet:
    """Indicator vectors of all independent sets, the empty set included."""
    pts = [_indicator(s, m.n) for s in range(1 << m.n) if m.is_independent(s)]
    return _vertex_set(m.n, pts)


def vertices_flag(m: Matroid) -> VertexSet:
    """Sums of indicator vectors along every flag of truncation bases.

    A flag is a chain of independent sets of sizes 1..r, each contained in
    the next; the element added at depth j contributes r - j + 1 to its
    coordinate.
    """
    r = m.rank_value
    points: set[Vec] = set()

    def grow(current: int, depth: int, vec: list[int]):
        if depth > r:
            points.add(tuple(vec))
            return
        for e in range(m.n):
            bit = 1 << e
            if current & bit:
                continue
            nxt = current | bit
            if m.rank(nxt) != depth:
                continue
            vec[e] += r - depth + 1
            grow(nxt, depth + 1, vec)
            vec[e] -= r - depth + 1

    grow(0, 1, [0] * m.n)
    return _vertex_set(m.n, points)


# ---------------------------------------------------------------------------
# affine coordinatization for hulls of non-full-dimensional point sets
# ---------------------------------------------------------------------------

class _AffineChart:
    """Exact rational coordinates on the affine hull of a point set."""

    def __init__(self, points: tuple[Vec, ...]):
        self.origin = points[0]
        self.n = len(points[0])
        diffs = [[x - y for x, y in zip(p, self.origin)] for p in points[1:]]
        basis: list[list[int]] = []
        for row in diffs:
            if matrix_rank(basis + [row]) > len(basis):
                basis.append(row)
        self.k = len(basis)
        self.basis = basis
        gram = [[sum(a * b for a, b in zip(u, v)) for v in basis] for u in basis]
        self.gram_inv = _invert_fraction_matrix(gram)
        # coords(p) = gram_inv @ basis @ (p - origin)
        self.coord_rows = [
            [
                sum(self.gram_inv[i][j] * Fraction(self.basis[j][c]) for j in range(self.k))
                for c in range(self.n)
            ]
            for i in range(self.k)
        ]

    def coords(self, p: Vec) -> tuple[Fraction, ...]:
        shifted = [x - y for x, y in zip(p, self.origin)]
        return tuple(sum(row[c] * shifted[c] for c in range(self.n)) for row in self.coord_rows)

    def integer_coords(self, points) -> tuple[list[Vec], list[int]]:
        """All points in chart coordinates, scaled per-axis to integers."""
        raw = [self.coords(p) for p in points]
        scales = []
        for i in range(self.k):
            s = 1
            for coords in raw:
                d = coords[i].denominator
                s = s * d // gcd(s, d)
            scales.append(s)
        pts = [tuple(int(c[i] * scales[i]) for i in range(self.k)) for c in raw]
        return pts, scales

    def pull_back(self, a: Vec, b: int, scales: list[int]) -> Facet:
        """Map a chart inequality a.y <= b back to a primitive one on x."""
        alpha = [
            sum(Fraction(a[i] * scales[i]) * self.coord_rows[i][c] for i in range(self.k))
            for c in range(self.n)
        ]
        beta = Fraction(b) + sum(al * o for al, o in zip(alpha, self.origin))
        denom = 1
        for f in alpha + [beta]:
            denom = denom * f.denominator // gcd(denom, f.denominator)
        ints = [int(f * denom) for f in alpha]
        off = int(beta * denom)
        g = 0
        for x in ints + [off]:
            g = gcd(g, x)
        if g > 1:
            ints = [x // g for x in ints]
            off //= g
        return tuple(ints), off


def _invert_fraction_matrix(m: list[list[int]]) -> list[list[Fraction]]:
    k = len(m)
    work = [[Fraction(m[i][j]) for j in range(k)] + [Fraction(int(i == j)) for j in range(k)] for i in range(k)]
    for col in range(k):
        pivot = next(i for i in range(col, k) if work[i][col] != 0)
        work[col], work[pivot] = work[pivot], work[col]
        inv = 1 / work[col][col]
        work[col] = [x * inv for x in work[col]]
        for i in range(k):
            if i != col and work[i][col] != 0:
                f = work[i][col]
                work[i] = [x - f * y for x, y in zip(work[i], work[col])]
    return [row[k:] for row in work]


def _canonicalize_fixed_sum(facets: list[Facet], points: tuple[Vec, ...]) -> list[Facet]:
    """Reduce normals modulo the all-ones direction when the hull is fixed-sum."""
    sums = {sum(p) for p in points}
    if len(sums) != 1:
        return sorted(set(facets))
    s = sums.pop()
    out = set()
    for a, b in facets:
        lo = min(a)
        a2 = tuple(x - lo for x in a)
        b2 = b - lo * s
        g = 0
        for x in a2:
            g = gcd(g, x)
        g = gcd(g, b2)
        if g > 1:
            a2 = tuple(x // g for x in a2)
            b2 //= g
        out.add((a2, b2))
    return sorted(out)


def hull_facets(v: VertexSet) -> list[Facet]:
    """All facet inequalities a.x <= b of conv(points) within its affine hull.

    Normals are primitive integers.  When the affine hull is a coordinate-sum
    hyperplane the normals are normalized modulo the all-ones vector so that
    each facet has a single canonical form with minimum entry 0.
    """
    if v.affine_dim == 0:
        raise DegenerateInput("hull of a single point has no facets")
    if v.affine_dim == v.n:
        return sorted(dd_facets(v.points))
    chart = _AffineChart(v.points)
    pts, scales = chart.integer_coords(v.points)
    chart_facets = dd_facets(pts)
    pulled = [chart.pull_back(a, b, scales) for a, b in chart_facets]
    return _canonicalize_fixed_sum(pulled, v.points)


def minkowski_sum_vertices(v1: VertexSet, v2: VertexSet) -> VertexSet:
    """Pairwise sums reduced to the hull's vertex set."""
    if v1.n != v2.n:
        raise DimensionMismatch(f"ambient dimensions differ: {v1.n} vs {v2.n}")
    sums = sorted({tuple(a + b for a, b in zip(p, q)) for p in v1.points for q in v2.points})
    if affine_rank(sums) == 0:
        return _vertex_set(v1.n, sums)
    chart = _AffineChart(tuple(sums))
    pts, _ = chart.integer_coords(sums)
    facets = dd_facets(pts)
    flags = hull_vertex_flags(pts, facets)
    return _vertex_set(v1.n, (p for p, keep in zip(sums, flags) if keep))


def simplex_vertices(n: int, mask: int, coned: bool = False) -> VertexSet:
    """Unit coordinate simplex on the elements of ``mask``; with the origin
    appended this is the coned variant."""
    pts = [tuple(1 if i == e else 0 for i in range(n)) for e in range(n) if mask >> e & 1]
    if coned:
        pts.append((0,) * n)
    return _vertex_set(n, pts)


def _root_lattice_coords(points: tuple[Vec, ...]) -> list[Vec]:
    """Coordinates in the basis e_1-e_2, ..., e_{n-1}-e_n after shifting by
    the lexicographically smallest point: prefix sums of the difference."""
    base = min(points)
    out = []
    for p in points:
        diff = [x - y for x, y in zip(p, base)]
        acc = 0
        coords = []
        for x in diff[:-1]:
            acc += x
            coords.append(acc)
        out.append(tuple(coords))
    return out


def volume_exact(v: VertexSet, frame: LatticeFrame) -> Fraction:
    """Lattice-normalized volume of conv(points) in the given frame."""
    if frame is LatticeFrame.ROOT:
        if len({sum(p) for p in v.points}) != 1 or v.affine_dim != v.n - 1:
            raise DimensionMismatch(
                "root-lattice volume needs a fixed-sum point set of affine dimension n-1"
            )
        if v.n == 1:
            return Fraction(1)
        return normalized_volume(_root_lattice_coords(v.points))
    if frame is LatticeFrame.STANDARD:
        if v.affine_dim != v.n:
            raise DimensionMismatch("standard-lattice volume needs a full-dimensional point set")
        return normalized_volume(list(v.points))
    raise ValueError(f"unknown lattice frame {frame!r}")
