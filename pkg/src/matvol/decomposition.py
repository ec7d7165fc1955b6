"""Signed Minkowski decompositions and the subset-lattice transforms behind them.

Two polytope families appear as summands:

* ``Delta`` -- faces of the standard simplex, conv{e_i : i in J}; sums of
  these are cut out by a total-sum equality and lower bounds on coordinate
  sums over subsets ("GP" profiles).
* ``D`` -- the same faces coned to the origin, conv{0, e_i : i in J}; sums
  live in the nonnegative orthant under upper bounds on coordinate sums
  ("Q" profiles).

A profile value z_I is the tight right-hand side for subset I; a
decomposition coefficient y_I is the signed multiplicity of the summand on
I.  The two are related by zeta/Moebius transforms over the subset lattice,
implemented as in-place n*2^n passes.  Profiles are accepted as raw data:
for non-tight right-hand sides the transform output is still well defined
but has no geometric meaning, which is the caller's responsibility.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .bitset import elements_of, subset_sort_key
from .errors import FamilyMismatch
from .invariants import signed_beta_contractions, signed_gamma_contractions
from .matroid import Matroid

KIND_GP = "GP"
KIND_Q = "Q"
FAMILY_DELTA = "Delta"
FAMILY_D = "D"


@dataclass(frozen=True)
class ZProfile:
    """Dense subset-indexed right-hand sides; values[0] is always 0."""

    n: int
    kind: str
    values: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in (KIND_GP, KIND_Q):
            raise ValueError(f"unknown profile kind {self.kind!r}")
        if len(self.values) != 1 << self.n:
            raise ValueError(f"profile needs {1 << self.n} values, got {len(self.values)}")
        if self.values[0] != 0:
            raise ValueError("profile value on the empty set must be 0")


@dataclass(frozen=True, eq=False)
class SignedDecomposition:
    """Sparse signed summand multiplicities keyed by nonempty subset masks.

    Zero coefficients are never stored, so equality of decompositions is
    literal equality of the coefficient maps.  Singleton Delta summands are
    points; they carry translation information and are kept like any other
    nonzero term.
    """

    n: int
    family: str
    coeffs: Mapping[int, int]

    def __post_init__(self):
        if self.family not in (FAMILY_DELTA, FAMILY_D):
            raise ValueError(f"unknown summand family {self.family!r}")
        for mask, c in self.coeffs.items():
            if mask <= 0 or mask >= 1 << self.n:
                raise ValueError(f"summand mask {mask} outside the nonempty subsets of [{self.n}]")
            if c == 0:
                raise ValueError("zero coefficients must be dropped")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedDecomposition):
            return NotImplemented
        return (
            self.n == other.n
            and self.family == other.family
            and dict(self.coeffs) == dict(other.coeffs)
        )

    def sorted_items(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items(), key=lambda kv: subset_sort_key(kv[0]))

    def is_empty(self) -> bool:
        return not self.coeffs


def make_decomposition(n: int, family: str, coeffs: Mapping[int, int]) -> SignedDecomposition:
    """Normalize a coefficient mapping by dropping zeros."""
    return SignedDecomposition(n, family, {k: v for k, v in coeffs.items() if v != 0})


def zeta_subsets(values: Sequence[int], n: int) -> list[int]:
    """z[I] = sum of values over subsets of I."""
    out = list(values)
    for b in range(n):
        bit = 1 << b
        for mask in range(1 << n):
            if mask & bit:
                out[mask] += out[mask ^ bit]
    return out


def mobius_subsets(values: Sequence[int], n: int) -> list[int]:
    """Inverse of ``zeta_subsets``: y[I] = sum over J <= I of (-1)^(|I|-|J|) z[J]."""
    out = list(values)
    for b in range(n):
        bit = 1 << b
        for mask in range(1 << n):
            if mask & bit:
                out[mask] -= out[mask ^ bit]
    return out


def z_from_matroid(m: Matroid) -> ZProfile:
    """Tight GP profile of the base polytope: z_I = r - r(E-I)."""
    r = m.rank_value
    full = m.full_mask
    values = tuple(r - m.rank(full ^ i) for i in range(1 << m.n))
    return ZProfile(m.n, KIND_GP, values)


def z_from_matroid_indep(m: Matroid) -> ZProfile:
    """Tight Q profile of the independent set polytope: z_J = r(J)."""
    values = tuple(m.rank(j) for j in range(1 << m.n))
    return ZProfile(m.n, KIND_Q, values)


def y_from_z_gp(z: ZProfile) -> SignedDecomposition:
    """Moebius inversion of a GP profile into Delta summand coefficients."""
    if z.kind != KIND_GP:
        raise FamilyMismatch(f"expected a GP profile, got {z.kind}")
    y = mobius_subsets(z.values, z.n)
    return make_decomposition(z.n, FAMILY_DELTA, {mask: y[mask] for mask in range(1, 1 << z.n)})


def z_from_y_gp(d: SignedDecomposition) -> ZProfile:
    """Zeta transform of Delta summand coefficients back to the GP profile."""
    if d.family != FAMILY_DELTA:
        raise FamilyMismatch(f"expected a Delta decomposition, got {d.family}")
    dense = [0] * (1 << d.n)
    for mask, c in d.coeffs.items():
        dense[mask] = c
    return ZProfile(d.n, KIND_GP, tuple(zeta_subsets(dense, d.n)))


def y_from_z_q(z: ZProfile) -> SignedDecomposition:
    """Inversion of a Q profile into D summand coefficients.

    Rewriting z_J = sum of y over summands meeting J as a statement about
    the complement turns this into a plain subset Moebius inversion of
    g[K] = z_full - z[full - K].
    """
    if z.kind != KIND_Q:
        raise FamilyMismatch(f"expected a Q profile, got {z.kind}")
    full = (1 << z.n) - 1
    g = [z.values[full] - z.values[full ^ k] for k in range(1 << z.n)]
    y = mobius_subsets(g, z.n)
    return make_decomposition(z.n, FAMILY_D, {mask: y[mask] for mask in range(1, 1 << z.n)})


def z_from_y_q(d: SignedDecomposition) -> ZProfile:
    """Forward Q transform: z_J counts summands meeting J, with multiplicity."""
    if d.family != FAMILY_D:
        raise FamilyMismatch(f"expected a D decomposition, got {d.family}")
    dense = [0] * (1 << d.n)
    for mask, c in d.coeffs.items():
        dense[mask] = c
    acc = zeta_subsets(dense, d.n)
    full = (1 << d.n) - 1
    total = acc[full]
    values = tuple(total - acc[full ^ j] for j in range(1 << d.n))
    return ZProfile(d.n, KIND_Q, values)


def decompose_base_polytope(m: Matroid) -> SignedDecomposition:
    """Base polytope as a signed sum of Delta faces.

    The coefficient of the summand on E-A is the signed beta invariant of
    M/A; it is nonzero exactly on the coconnected flats A.
    """
    table = signed_beta_contractions(m)
    full = m.full_mask
    coeffs = {full ^ a: table[a] for a in range(1 << m.n) if a != full and table[a] != 0}
    return SignedDecomposition(m.n, FAMILY_DELTA, coeffs)


def decompose_independent_polytope(m: Matroid) -> SignedDecomposition:
    """Independent set polytope as a signed sum of D summands.

    Same coefficients as the base polytope decomposition, on the coned
    family.
    """
    table = signed_beta_contractions(m)
    full = m.full_mask
    coeffs = {full ^ a: table[a] for a in range(1 << m.n) if a != full and table[a] != 0}
    return SignedDecomposition(m.n, FAMILY_D, coeffs)


def decompose_truncation_flag(m: Matroid) -> SignedDecomposition:
    """Truncation flag polytope as a signed sum of Delta faces.

    The coefficient of the summand on E-I is the signed gamma invariant of
    M/I; coefficient-wise this equals the sum of the base polytope
    decompositions of all truncations of M.
    """
    table = signed_gamma_contractions(m)
    full = m.full_mask
    coeffs = {full ^ a: table[a] for a in range(1 << m.n) if a != full and table[a] != 0}
    return SignedDecomposition(m.n, FAMILY_DELTA, coeffs)


def add(d1: SignedDecomposition, d2: SignedDecomposition) -> SignedDecomposition:
    """Coefficient-wise sum; Minkowski addition on the polytope side."""
    if d1.n != d2.n or d1.family != d2.family:
        raise FamilyMismatch(
            f"cannot add ({d1.n}, {d1.family}) and ({d2.n}, {d2.family}) decompositions"
        )
    merged = dict(d1.coeffs)
    for mask, c in d2.coeffs.items():
        merged[mask] = merged.get(mask, 0) + c
    return make_decomposition(d1.n, d1.family, merged)


def scale(d: SignedDecomposition, factor: int) -> SignedDecomposition:
    """Multiply every coefficient by an integer factor."""
    return make_decomposition(d.n, d.family, {k: factor * v for k, v in d.coeffs.items()})


def support_function(d: SignedDecomposition, w: Sequence[int]) -> int:
    """Value of the signed sum's support function at an integer direction.

    Support functions are additive under Minkowski sums, so this is the
    coefficient-weighted sum of the summands' maxima; D summands floor at 0
    because they contain the origin.  Integer inputs make the result exact.
    """
    if len(w) != d.n:
        raise ValueError(f"direction has length {len(w)}, expected {d.n}")
    total = 0
    for mask, c in d.coeffs.items():
        best = max(w[e - 1] for e in elements_of(mask))
        if d.family == FAMILY_D and best < 0:
            best = 0
        total += c * best
    return total
