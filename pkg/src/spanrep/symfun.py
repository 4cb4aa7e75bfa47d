"""Schur-basis bookkeeping and symmetric-group character theory.

Irreducible characters come from the Murnaghan-Nakayama recursion,
memoized on (shape, cycle type).  Inner products use exact rationals and
any non-integrality or negativity while decomposing is raised as
:class:`NotACharacterError` instead of being rounded: a failed
decomposition means whoever produced the traces has a bug.

Everything is pure; the memo tables are only ever extended, never
invalidated, so concurrent readers see consistent values.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache

from .combinat import GradedPoly, Partition, partitions_of, syt_count, z_lambda
from .errors import NotACharacterError

__all__ = [
    "ClassFunction",
    "SchurExpansion",
    "dimension",
    "expansion_character",
    "irr_character",
    "omega",
    "q_reverse",
    "schur_decompose",
]


@cache
def _mn(lam: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """Murnaghan-Nakayama recursion via first-column hook lengths."""
    if not rho:
        return 1
    r, rest = rho[0], rho[1:]
    ell = len(lam)
    beta = tuple(lam[i] + ell - 1 - i for i in range(ell))  # strictly decreasing
    beta_set = set(beta)
    total = 0
    for b in beta:
        nb = b - r
        if nb < 0 or nb in beta_set:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new_beta = sorted((nb if x == b else x for x in beta), reverse=True)
        new_lam = tuple(
            x - (len(new_beta) - 1 - i) for i, x in enumerate(new_beta)
        )
        new_lam = tuple(x for x in new_lam if x > 0)
        total += (-1) ** height * _mn(new_lam, rest)
    return total


def irr_character(lam: Partition, rho: Partition) -> int:
    """Character of the irreducible indexed by lam at cycle type rho."""
    if lam.size != rho.size:
        raise ValueError(f"size mismatch: |{lam.parts}| != |{rho.parts}|")
    return _mn(lam.parts, rho.parts)


@dataclass(frozen=True, eq=False)
class ClassFunction:
    """Exact-rational class function, stored on cycle types of S_n."""

    n: int
    values: dict[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        vals = {rho: Fraction(v) for rho, v in self.values.items()}
        object.__setattr__(self, "values", vals)
        expected = set(partitions_of(self.n))
        if set(vals) != expected:
            missing = sorted(p.parts for p in expected - set(vals))
            raise ValueError(f"class function must cover every cycle type; missing {missing}")

    def value(self, rho: Partition) -> Fraction:
        return self.values[rho]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ClassFunction)
            and self.n == other.n
            and self.values == other.values
        )


class SchurExpansion:
    """Mapping from partitions of n to GradedPoly coefficients.

    Zero coefficients are never stored, so dict equality is semantic
    equality of expansions.
    """

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coeffs: dict[Partition, GradedPoly] | None = None):
        self.n = n
        clean: dict[Partition, GradedPoly] = {}
        for lam, poly in (coeffs or {}).items():
            if lam.size != n:
                raise ValueError(f"shape {lam.parts} is not a partition of {n}")
            if isinstance(poly, int):
                poly = GradedPoly.const(poly)
            if poly:
                clean[lam] = poly
        self._coeffs = clean

    def coefficient(self, lam: Partition) -> GradedPoly:
        return self._coeffs.get(lam, GradedPoly.zero())

    def shapes(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def items(self) -> list[tuple[Partition, GradedPoly]]:
        """(shape, coefficient) pairs in canonical (lex-decreasing) order."""
        return sorted(self._coeffs.items(), key=lambda kv: kv[0].parts, reverse=True)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurExpansion)
            and self.n == other.n
            and self._coeffs == other._coeffs
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._coeffs.items())))

    def __add__(self, other: "SchurExpansion") -> "SchurExpansion":
        if self.n != other.n:
            raise ValueError("cannot add expansions of different degrees")
        out = dict(self._coeffs)
        for lam, poly in other._coeffs.items():
            out[lam] = out.get(lam, GradedPoly.zero()) + poly
        return SchurExpansion(self.n, out)

    def scaled(self, factor: GradedPoly | int) -> "SchurExpansion":
        return SchurExpansion(self.n, {lam: poly * factor for lam, poly in self._coeffs.items()})

    def __repr__(self) -> str:
        body = ", ".join(f"s{list(l.parts)}: {p.as_str()}" for l, p in self.items())
        return f"SchurExpansion(n={self.n}, {{{body}}})"


def schur_decompose(chi: ClassFunction) -> SchurExpansion:
    """Decompose a genuine character into Schur multiplicities.

    Multiplicities are computed by the standard inner product with exact
    rationals; any non-integer or negative result raises
    NotACharacterError.
    """
    n = chi.n
    coeffs: dict[Partition, GradedPoly] = {}
    for lam in partitions_of(n):
        acc = Fraction(0)
        for rho in partitions_of(n):
            acc += Fraction(chi.value(rho) * irr_character(lam, rho), z_lambda(rho))
        if acc.denominator != 1 or acc < 0:
            raise NotACharacterError(f"multiplicity of {lam.parts} came out {acc}")
        if acc:
            coeffs[lam] = GradedPoly.const(int(acc))
    return SchurExpansion(n, coeffs)


def expansion_character(expansion: SchurExpansion) -> ClassFunction:
    """Class function of an expansion with constant integer coefficients."""
    mults = {}
    for lam, poly in expansion.items():
        if not poly.is_constant():
            raise ValueError("expansion has graded coefficients, not plain multiplicities")
        mults[lam] = poly.coefficient()
    values = {
        rho: Fraction(sum(m * irr_character(lam, rho) for lam, m in mults.items()))
        for rho in partitions_of(expansion.n)
    }
    return ClassFunction(expansion.n, values)


def omega(expansion: SchurExpansion) -> SchurExpansion:
    """The involution sending each shape to its conjugate."""
    return SchurExpansion(
        expansion.n, {lam.conjugate(): poly for lam, poly in expansion.items()}
    )


def q_reverse(expansion: SchurExpansion, top: int) -> SchurExpansion:
    """Reverse q-exponents around top in every coefficient."""
    return SchurExpansion(
        expansion.n, {lam: poly.reverse_q(top) for lam, poly in expansion.items()}
    )


def dimension(expansion: SchurExpansion) -> GradedPoly:
    """Graded dimension: sum of coefficient * (number of standard tableaux)."""
    total = GradedPoly.zero()
    for lam, poly in expansion.items():
        total = total + poly * syt_count(lam)
    return total
