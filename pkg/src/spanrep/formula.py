"""Closed-form side: the tableau formula for the graded Frobenius image.

The cohomology of the space of n spanning lines in C^k is concentrated in
even degrees; everything here is indexed by the half degree s (so H^{2s}).
The formula sums q^maj(T) * qbinom(n - des(T) - 1, n - k) * s_shape(T)
over all standard tableaux with n boxes; tableaux with too many descents
are killed by the vanishing q-binomial.

`shape_multiplicity` recomputes single coefficients by brute-force
enumeration of (tableau, bounded partition) pairs, which is the
stabilization mechanism: once n is large enough the bounding rectangle
stops mattering and the count freezes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinat import (
    GradedPoly,
    Partition,
    des,
    maj,
    pad,
    partitions_of,
    q_binomial,
    syt_enumerate,
)
from .symfun import SchurExpansion, dimension

__all__ = [
    "Elementary",
    "FixedCodim",
    "FixedK",
    "GradedFrobenius",
    "Homogeneous",
    "delta_eigenvalue",
    "grfrob_tableaux",
    "shape_multiplicity",
    "stable_multiplicity",
]


@dataclass(frozen=True)
class GradedFrobenius:
    """Graded Frobenius image, indexed by half cohomological degree s."""

    n: int
    k: int
    by_degree: dict[int, SchurExpansion]

    def degrees(self) -> list[int]:
        return sorted(self.by_degree)

    def top_degree(self) -> int:
        return max(self.by_degree, default=-1)

    def coefficient(self, s: int, lam: Partition) -> GradedPoly:
        exp = self.by_degree.get(s)
        return exp.coefficient(lam) if exp is not None else GradedPoly.zero()

    def dims(self) -> dict[int, int]:
        return {s: int(dimension(exp).evaluate()) for s, exp in sorted(self.by_degree.items())}

    def total_dimension(self) -> int:
        return sum(self.dims().values())

    def hilbert(self) -> GradedPoly:
        out = GradedPoly.zero()
        for s, d in self.dims().items():
            out = out + GradedPoly.term(d, q=s)
        return out

    def as_q_expansion(self) -> SchurExpansion:
        """The same data as one expansion with q-polynomial coefficients."""
        coeffs: dict[Partition, GradedPoly] = {}
        for s, exp in self.by_degree.items():
            for lam, poly in exp.items():
                coeffs[lam] = coeffs.get(lam, GradedPoly.zero()) + poly * GradedPoly.term(1, q=s)
        return SchurExpansion(self.n, coeffs)


def grfrob_tableaux(n: int, k: int) -> GradedFrobenius:
    """Graded Frobenius image of the spanning-line cohomology ring, by tableaux."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    acc: dict[int, dict[Partition, int]] = {}
    for lam in partitions_of(n):
        for t in syt_enumerate(lam):
            gap = q_binomial(n - des(t) - 1, n - k)
            if not gap:
                continue
            m = maj(t)
            for (qe, _, _), c in gap.items():
                bucket = acc.setdefault(m + qe, {})
                bucket[lam] = bucket.get(lam, 0) + c
    by_degree = {
        s: SchurExpansion(n, {lam: GradedPoly.const(c) for lam, c in bucket.items()})
        for s, bucket in acc.items()
    }
    return GradedFrobenius(n, k, by_degree)


def shape_multiplicity(lam: Partition, k: int, s: int) -> int:
    """Multiplicity of the shape in half-degree s, by brute-force pairs.

    Counts pairs (T, nu) with T a standard tableau of shape lam, nu a
    partition inside the (k - des(T) - 1) x (n - k) rectangle, and
    maj(T) + |nu| = s.  Enumerated directly -- this is deliberately
    independent of the q-binomial route in `grfrob_tableaux`.
    """
    n = lam.size
    if k < 1 or k > n or s < 0:
        return 0
    total = 0
    for t in syt_enumerate(lam):
        rows_avail = k - des(t) - 1
        if rows_avail < 0:
            continue
        rem = s - maj(t)
        if rem < 0:
            continue
        if rem == 0:
            total += 1  # the empty partition fits in any rectangle
            continue
        total += sum(
            1 for nu in partitions_of(rem) if nu.fits_in_box(rows_avail, n - k)
        )
    return total


@dataclass(frozen=True)
class FixedK:
    """Grow n with the ambient dimension k held fixed."""

    k: int


@dataclass(frozen=True)
class FixedCodim:
    """Grow n with the codimension m = n - k held fixed."""

    m: int


Mode = FixedK | FixedCodim


def stabilization_bound(mu: Partition, s: int, mode: Mode) -> int:
    """Least n at which the multiplicity sequence is guaranteed constant."""
    if isinstance(mode, FixedK):
        return max(2 * s, s + mode.k) + 1
    return max(2 * s + mode.m + 1, mu.size + mu.first_part()) + 1


def stable_multiplicity(mu: Partition, s: int, mode: Mode) -> int:
    """Eventual multiplicity of the padded shape mu in half-degree s."""
    if s < 0:
        raise ValueError("s must be nonnegative")
    if mu.size > s:
        return 0  # maj of any tableau of a padded shape is at least |mu|
    big_n = stabilization_bound(mu, s, mode)
    if isinstance(mode, FixedK):
        if mode.k < 1:
            return 0
        return shape_multiplicity(pad(mu, big_n), mode.k, s)
    return shape_multiplicity(pad(mu, big_n), big_n - mode.m, s)


@dataclass(frozen=True)
class Elementary:
    """Elementary symmetric function e_j, as an evaluation spec."""

    degree: int


@dataclass(frozen=True)
class Homogeneous:
    """Complete homogeneous symmetric function h_j, as an evaluation spec."""

    degree: int


FSpec = "Elementary | Homogeneous | tuple"


def _eval_elementary(j: int, monomials: list[GradedPoly]) -> GradedPoly:
    if j < 0:
        return GradedPoly.zero()
    table = [GradedPoly.const(1)] + [GradedPoly.zero()] * j
    for m in monomials:
        for i in range(j, 0, -1):
            table[i] = table[i] + m * table[i - 1]
    return table[j]


def _eval_homogeneous(j: int, monomials: list[GradedPoly]) -> GradedPoly:
    if j < 0:
        return GradedPoly.zero()
    table = [GradedPoly.const(1)] + [GradedPoly.zero()] * j
    for m in monomials:
        for i in range(1, j + 1):  # ascending: multiset repetition allowed
            table[i] = table[i] + m * table[i - 1]
    return table[j]


def _eval_fspec(f, monomials: list[GradedPoly]) -> GradedPoly:
    if isinstance(f, Elementary):
        return _eval_elementary(f.degree, monomials)
    if isinstance(f, Homogeneous):
        return _eval_homogeneous(f.degree, monomials)
    if isinstance(f, (tuple, list)):
        out = GradedPoly.const(1)
        for factor in f:
            out = out * _eval_fspec(factor, monomials)
        return out
    raise TypeError(f"not an evaluable symmetric-function spec: {f!r}")


def cell_monomials(mu: Partition) -> list[GradedPoly]:
    """q^col * t^row for each 0-indexed cell of mu except the corner (0, 0)."""
    out = []
    for row, row_len in enumerate(mu.parts):
        for col in range(row_len):
            if row == 0 and col == 0:
                continue
            out.append(GradedPoly.term(1, q=col, t=row))
    return out


def delta_eigenvalue(f, mu: Partition) -> GradedPoly:
    """Eigenvalue of the primed delta operator for F on the mu basis element.

    Evaluates F at the multiset of cell monomials of mu with the corner
    removed.  F may be Elementary(j), Homogeneous(j), or a tuple of those
    (meaning their product); general plethysm is out of scope.
    """
    if not mu.parts:
        raise ValueError("mu must be nonempty")
    return _eval_fspec(f, cell_monomials(mu))
