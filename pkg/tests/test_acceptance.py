"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with ``pytest tests/test_acceptance.py -v`` (add ``-s`` to see the
per-criterion lines as they complete).
"""

import random
from fractions import Fraction
from itertools import product
from math import factorial

from matvol.cli import main
from matvol.decomposition import (
    FAMILY_D,
    FAMILY_DELTA,
    KIND_GP,
    KIND_Q,
    ZProfile,
    decompose_base_polytope,
    decompose_independent_polytope,
    decompose_truncation_flag,
    make_decomposition,
    support_function,
    y_from_z_gp,
    y_from_z_q,
    z_from_y_gp,
    z_from_y_q,
)
from matvol.invariants import beta, gamma, gamma_from_rank_sum, tutte
from matvol.matroid import (
    Graph,
    direct_sum,
    dual,
    from_bases,
    graphic,
    is_connected,
    uniform,
)
from matvol.oracle import LatticeFrame, vertices_base, vertices_flag, vertices_indep, volume_exact
from matvol.verify import (
    _signed_sum_vertex_sets,
    max_basis_weight,
    max_independent_weight,
)
from matvol.volume import (
    TermGroup,
    dragon_marriage,
    dragon_marriage_intersection_bounds,
    flag_volume_ordered_terms,
    independent_volume_census,
    sdr_condition,
    sdr_condition_intersection_bounds,
    volume_base_polytope,
    volume_independent_polytope,
    volume_truncation_flag,
)

PYRAMID = from_bases(4, [0b0011, 0b0101, 0b1001, 0b0110, 0b1010])
U23 = uniform(2, 3)
U13 = uniform(1, 3)
FLAG_EXAMPLE = from_bases(3, [0b011, 0b101])


def _delta(n, coeffs):
    return make_decomposition(n, FAMILY_DELTA, coeffs)


def _cone(n, coeffs):
    return make_decomposition(n, FAMILY_D, coeffs)


def test_criterion_1_decomposition_goldens():
    assert decompose_base_polytope(PYRAMID) == _delta(
        4, {0b1110: 1, 0b1101: 1, 0b0011: 1, 0b1111: -1}
    )
    assert decompose_base_polytope(U23) == _delta(3, {0b011: 1, 0b101: 1, 0b110: 1, 0b111: -1})
    assert decompose_base_polytope(U13) == _delta(3, {0b111: 1})
    assert decompose_independent_polytope(U23) == _cone(
        3, {0b011: 1, 0b101: 1, 0b110: 1, 0b111: -1}
    )
    # The published form of the flag example drops the point summand on {1};
    # the gamma formula and the truncation sum both produce it, and the
    # example's own vertices have coordinate sum 3, which forces it.
    flag = decompose_truncation_flag(FLAG_EXAMPLE)
    assert flag == _delta(3, {0b111: 1, 0b110: 1, 0b001: 1})
    shape_only = {mask: c for mask, c in flag.coeffs.items() if mask.bit_count() > 1}
    assert shape_only == {0b111: 1, 0b110: 1}
    print("ACCEPTANCE 1 decomposition goldens: PASS")


def test_criterion_2_volume_goldens():
    assert volume_base_polytope(U13) == Fraction(1, 2)
    assert volume_base_polytope(U23) == Fraction(1, 2)

    assert volume_independent_polytope(U23) == Fraction(5, 6)
    census = independent_volume_census(U23)
    assert census == {
        (1, 1, 1): TermGroup(24, 24),
        (0, 1, 1): TermGroup(27, -27),
        (0, 0, 1): TermGroup(9, 9),
        (0, 0, 0): TermGroup(1, -1),
    }

    assert volume_truncation_flag(FLAG_EXAMPLE) == Fraction(3, 2)
    terms = flag_volume_ordered_terms(FLAG_EXAMPLE)
    assert sorted(t for t, _ in terms) == [(0, 0), (0, 1), (1, 0)]
    assert all(p == 1 for _, p in terms)
    print("ACCEPTANCE 2 volume goldens: PASS")


def _gen_comb(m, j):
    """Binomial coefficient by falling factorial, defined for negative m."""
    num = 1
    for i in range(j):
        num *= m - i
    return num // factorial(j)


def test_criterion_3_gamma_identities():
    for n in range(2, 9):
        for k in range(1, n):
            u = uniform(k, n)
            expected = -_gen_comb(n - 3, k - 1)
            assert gamma(u) == expected, (k, n)
            assert gamma_from_rank_sum(u) == expected, (k, n)
            with_coloop = direct_sum(u, uniform(1, 1))
            expected_c = _gen_comb(n - 2, k - 1)
            assert gamma(with_coloop) == expected_c, (k, n)
            assert gamma_from_rank_sum(with_coloop) == expected_c, (k, n)
    print("ACCEPTANCE 3 gamma identities: PASS")


def test_criterion_4_oracle_equivalence(catalog6):
    checked = 0
    for entry in catalog6:
        m = entry.matroid
        if not is_connected(m):
            continue
        assert volume_base_polytope(m) == volume_exact(
            vertices_base(m), LatticeFrame.ROOT
        ), entry.name
        assert volume_independent_polytope(m) == volume_exact(
            vertices_indep(m), LatticeFrame.STANDARD
        ), entry.name
        checked += 2
        if m.n <= 5:
            assert volume_truncation_flag(m) == volume_exact(
                vertices_flag(m), LatticeFrame.ROOT
            ), entry.name
            checked += 1
    assert checked > 100
    print(f"ACCEPTANCE 4 oracle equivalence ({checked} volume comparisons): PASS")


def test_criterion_5_signed_minkowski_identities(catalog6):
    rng = random.Random(0xD1CE)
    for entry in catalog6:
        m = entry.matroid
        d = decompose_base_polytope(m)
        left, right = _signed_sum_vertex_sets(m, d)
        assert left == right, entry.name
        di = decompose_independent_polytope(m)
        for _ in range(100):
            w = [rng.randint(-9, 9) for _ in range(m.n)]
            assert support_function(d, w) == max_basis_weight(m, w), entry.name
            assert support_function(di, w) == max_independent_weight(m, w), entry.name
    print(f"ACCEPTANCE 5 signed Minkowski identities ({len(catalog6)} matroids): PASS")


def test_criterion_6_transform_roundtrips():
    rng = random.Random(0x5EED5)
    for n in range(3, 9):
        size = 1 << n
        for _ in range(1000):
            values = tuple([0] + [rng.randint(-99, 99) for _ in range(size - 1)])
            zg = ZProfile(n, KIND_GP, values)
            assert z_from_y_gp(y_from_z_gp(zg)).values == values
            zq = ZProfile(n, KIND_Q, values)
            assert z_from_y_q(y_from_z_q(zq)).values == values
    print("ACCEPTANCE 6 transform roundtrips: PASS")


def test_criterion_7_invariant_suite(catalog6):
    for entry in catalog6:
        m = entry.matroid
        assert (beta(m) == 0) == (not is_connected(m)), entry.name
        if m.n >= 2:
            t = tutte(m)
            assert beta(m) == t.coefficient(1, 0) == t.coefficient(0, 1), entry.name
        assert volume_base_polytope(m) == volume_base_polytope(dual(m)), entry.name
        if is_connected(m):
            scaled = volume_base_polytope(m) * factorial(m.n - 1)
            assert scaled.denominator == 1, entry.name
    for k in range(2, 7):
        edges = tuple((i, i % k + 1) for i in range(1, k + 1))
        assert beta(graphic(Graph(k, edges))) == 1, k
    print("ACCEPTANCE 7 invariant suite: PASS")


def test_criterion_8_condition_checker_equivalence():
    for n in (3, 4):
        subsets = range(1 << n)
        for sets in product(subsets, repeat=n - 1):
            assert dragon_marriage(sets, n) == dragon_marriage_intersection_bounds(sets, n)
        for sets in product(subsets, repeat=n):
            assert sdr_condition(sets, n) == sdr_condition_intersection_bounds(sets, n)
    rng = random.Random(0xC0DE)
    for n in (5, 6):
        full = (1 << n) - 1
        for _ in range(100_000):
            dragon = tuple(rng.randint(0, full) for _ in range(n - 1))
            assert dragon_marriage(dragon, n) == dragon_marriage_intersection_bounds(dragon, n)
            sdr = tuple(rng.randint(0, full) for _ in range(n))
            assert sdr_condition(sdr, n) == sdr_condition_intersection_bounds(sdr, n)
    print("ACCEPTANCE 8 condition checker equivalence: PASS")


def test_criterion_9_cli_thread_determinism(tmp_path, capsys):
    files = {
        "u23": "n: 3\nbases: 1,2 1,3 2,3\n",
        "u13": "n: 3\nuniform: 1 3\n",
        "u24": "n: 4\nuniform: 2 4\n",
        "k3": "n: 3\ngraph: 1-2 2-3 3-1\n",
        "chain": "n: 3\nbases: 1,2 1,3\n",
    }
    for name, text in files.items():
        path = tmp_path / f"{name}.matroid"
        path.write_text(text)
        for polytope in ("base", "indep"):
            outputs = set()
            for threads in ("1", "2", "8"):
                code = main(["volume", str(path), "--polytope", polytope, "--threads", threads])
                assert code == 0
                outputs.add(capsys.readouterr().out)
            assert len(outputs) == 1, (name, polytope)
    print("ACCEPTANCE 9 CLI thread determinism: PASS")
