import random
from fractions import Fraction
from math import factorial

import pytest

from matvol.decomposition import decompose_base_polytope
from matvol.errors import DegenerateInput, DimensionMismatch
from matvol.hull import dd_facets, exhaustive_facets, normalized_volume
from matvol.matroid import from_bases, is_connected, uniform
from matvol.oracle import (
    LatticeFrame,
    VertexSet,
    hull_facets,
    minkowski_sum_vertices,
    simplex_vertices,
    vertices_base,
    vertices_flag,
    vertices_indep,
    volume_exact,
)

PYRAMID = from_bases(4, [0b0011, 0b0101, 0b1001, 0b0110, 0b1010])
U23 = uniform(2, 3)


def test_vertices_base_pyramid():
    v = vertices_base(PYRAMID)
    assert set(v.points) == {
        (1, 1, 0, 0), (1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1),
    }
    assert v.affine_dim == 3


def test_vertices_flag_golden():
    m = from_bases(3, [0b011, 0b101])
    assert set(vertices_flag(m).points) == {(2, 1, 0), (2, 0, 1), (1, 2, 0), (1, 0, 2)}


def test_vertices_indep_single_element():
    assert set(vertices_indep(uniform(1, 1)).points) == {(0,), (1,)}


def test_hull_facets_unit_square():
    square = VertexSet(2, ((0, 0), (0, 1), (1, 0), (1, 1)))
    assert len(hull_facets(square)) == 4


def test_hull_facets_triangle():
    assert len(hull_facets(vertices_base(U23))) == 3


def test_hull_facets_pyramid():
    assert len(hull_facets(vertices_base(PYRAMID))) == 5


def test_hull_facets_degenerate():
    with pytest.raises(DegenerateInput):
        hull_facets(VertexSet(2, ((1, 1),)))


def test_facets_are_rank_inequalities(catalog5):
    """Each facet of the base polytope is x(A) <= r(A) or x_i >= 0, up to the
    coordinate-sum relation."""
    for entry in catalog5:
        m = entry.matroid
        if not is_connected(m) or m.n < 2:
            continue
        candidates = set()
        r = m.rank_value
        for a in range(1, 1 << m.n):
            # x(A) <= r(A), reduced modulo the all-ones normal
            normal = tuple(1 if a >> e & 1 else 0 for e in range(m.n))
            candidates.add(_reduce_fixed_sum(normal, m.rank(a), r))
        for e in range(m.n):
            normal = tuple(-1 if i == e else 0 for i in range(m.n))
            candidates.add(_reduce_fixed_sum(normal, 0, r))
        for facet in hull_facets(vertices_base(m)):
            assert facet in candidates, (entry.name, facet)


def _reduce_fixed_sum(normal, offset, coord_sum):
    from math import gcd

    lo = min(normal)
    normal = tuple(x - lo for x in normal)
    offset = offset - lo * coord_sum
    g = 0
    for x in normal:
        g = gcd(g, x)
    g = gcd(g, offset)
    if g > 1:
        normal = tuple(x // g for x in normal)
        offset //= g
    return (normal, offset)


def test_volume_exact_standard_simplices():
    for n in range(2, 6):
        v = simplex_vertices(n, (1 << n) - 1)
        assert volume_exact(v, LatticeFrame.ROOT) == Fraction(1, factorial(n - 1))


def test_volume_exact_goldens():
    assert volume_exact(vertices_indep(U23), LatticeFrame.STANDARD) == Fraction(5, 6)
    m = from_bases(3, [0b011, 0b101])
    assert volume_exact(vertices_flag(m), LatticeFrame.ROOT) == Fraction(3, 2)


def test_volume_exact_frame_validation():
    with pytest.raises(DimensionMismatch):
        volume_exact(vertices_indep(U23), LatticeFrame.ROOT)
    with pytest.raises(DimensionMismatch):
        volume_exact(vertices_base(U23), LatticeFrame.STANDARD)


def test_volume_permutation_invariance():
    rng = random.Random(17)
    base = vertices_indep(uniform(2, 4))
    reference = volume_exact(base, LatticeFrame.STANDARD)
    for _ in range(5):
        perm = list(range(4))
        rng.shuffle(perm)
        shuffled = VertexSet(4, tuple(sorted(tuple(p[i] for i in perm) for p in base.points)))
        assert volume_exact(shuffled, LatticeFrame.STANDARD) == reference


def test_minkowski_identity_with_origin():
    v = vertices_base(U23)
    origin = VertexSet(3, ((0, 0, 0),))
    assert minkowski_sum_vertices(v, origin).points == v.points


def test_minkowski_segment_dilation():
    seg = simplex_vertices(2, 0b11)
    doubled = minkowski_sum_vertices(seg, seg)
    assert set(doubled.points) == {(2, 0), (0, 2)}


def test_minkowski_figure_identity():
    """The pyramid's signed decomposition as an honest vertex identity:
    D234 + D134 + D12 equals P_M + D1234."""
    left = minkowski_sum_vertices(simplex_vertices(4, 0b1110), simplex_vertices(4, 0b1101))
    left = minkowski_sum_vertices(left, simplex_vertices(4, 0b0011))
    right = minkowski_sum_vertices(vertices_base(PYRAMID), simplex_vertices(4, 0b1111))
    assert left.points == right.points


def test_signed_identity_positive_form(catalog5):
    """P_M plus the negated negative part has the same hull as the positive
    part, via explicit pairwise Minkowski sums on small matroids."""
    for entry in catalog5:
        m = entry.matroid
        if m.n > 4:
            continue
        d = decompose_base_polytope(m)
        left = vertices_base(m)
        for mask, c in sorted(d.coeffs.items()):
            for _ in range(-c if c < 0 else 0):
                left = minkowski_sum_vertices(left, simplex_vertices(m.n, mask))
        right = VertexSet(m.n, ((0,) * m.n,))  # empty sum is the origin
        for mask, c in sorted(d.coeffs.items()):
            for _ in range(c if c > 0 else 0):
                right = minkowski_sum_vertices(right, simplex_vertices(m.n, mask))
        assert left.points == right.points, entry.name


def test_dd_matches_exhaustive_enumeration():
    rng = random.Random(23)
    cases = [
        [(0, 0), (0, 1), (1, 0), (1, 1)],
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)],
    ]
    for _ in range(20):
        d = rng.choice((2, 3))
        pts = {tuple(rng.randint(0, 2) for _ in range(d)) for _ in range(rng.randint(4, 9))}
        cases.append(sorted(pts))
    for pts in cases:
        from matvol.hull import affine_rank

        if affine_rank(pts) != len(pts[0]):
            continue
        assert dd_facets(pts) == exhaustive_facets(pts)


def test_normalized_volume_cube():
    cube = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    assert normalized_volume(cube) == 1
    stretched = [(2 * x, y, z) for x, y, z in cube]
    assert normalized_volume(stretched) == 2


def test_vertex_set_validation():
    with pytest.raises(ValueError):
        VertexSet(2, ((0, 0), (0, 0)))
    with pytest.raises(ValueError):
        VertexSet(2, ((0, 0, 1),))
