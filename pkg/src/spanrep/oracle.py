"""Brute-force ground truth: exact linear algebra on graded quotient rings.

Ideal pieces are spanned degree by degree with {monomial x generator}
products and row-reduced over exact rationals -- no Groebner machinery.
Traces of permutations on quotients are (fixed monomials) minus the trace
on the ideal subspace, the latter read off pivot coordinates of the
reduced echelon basis (valid because the ideals are stable under the
subscript action; tests exercise that stability directly).

Scale guards: the commuting oracle refuses n > 7, superspace quotients
refuse n > 5, and the Grassmann oracle refuses d*n > 8.  These fail
loudly rather than thrash.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import combinations, combinations_with_replacement, permutations, product

from .combinat import GradedPoly, Partition, partitions_of
from .errors import ScaleGuardError
from .linalg import EchelonBasis
from .superspace import SuperMonomial, apply_perm, mono_mul
from .symfun import ClassFunction, SchurExpansion, dimension, schur_decompose

__all__ = [
    "GradedDecomposition",
    "character_on_quotient",
    "complete_sym",
    "decompose_coinvariants",
    "decompose_super_coinvariants",
    "decompose_superspace",
    "elementary_sym",
    "grassmann_quotient",
    "monomials_of_degree",
    "quotient_basis",
]

COMMUTING_MAX_N = 7
SUPER_QUOTIENT_MAX_N = 5
GRASSMANN_MAX_VARS = 8

Poly = dict  # exponent tuple -> int coefficient


def _guard(cond: bool, message: str) -> None:
    if not cond:
        raise ScaleGuardError(message)


@cache
def monomials_of_degree(nvars: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All exponent tuples of total degree d, lexicographically ascending."""
    if nvars == 0:
        return ((),) if d == 0 else ()
    out = []
    for e in range(d + 1):
        for rest in monomials_of_degree(nvars - 1, d - e):
            out.append((e,) + rest)
    return tuple(out)


def elementary_sym(d: int, indices: tuple[int, ...], nvars: int) -> Poly:
    """Elementary symmetric polynomial e_d in the given variables.

    Zero when d exceeds the number of variables.
    """
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return {(0,) * nvars: 1}
    out: Poly = {}
    for subset in combinations(indices, d):
        exps = [0] * nvars
        for i in subset:
            exps[i] = 1
        out[tuple(exps)] = 1
    return out


def complete_sym(d: int, indices: tuple[int, ...], nvars: int) -> Poly:
    """Complete homogeneous symmetric polynomial h_d in the given variables."""
    if d < 0:
        raise ValueError("degree must be nonnegative")
    if d == 0:
        return {(0,) * nvars: 1}
    out: Poly = {}
    for multiset in combinations_with_replacement(indices, d):
        exps = [0] * nvars
        for i in multiset:
            exps[i] += 1
        key = tuple(exps)
        out[key] = out.get(key, 0) + 1
    return out


def _power_poly(i: int, k: int, nvars: int) -> Poly:
    exps = [0] * nvars
    exps[i] = k
    return {tuple(exps): 1}


def _shift(poly: Poly, mono: tuple[int, ...]) -> Poly:
    return {tuple(e + m for e, m in zip(exps, mono)): c for exps, c in poly.items()}


def _poly_degree(poly: Poly) -> int:
    return sum(next(iter(poly)))


@cache
def _coinvariant_generators(n: int, k: int) -> tuple[Poly, ...]:
    """x_i^k for each i, plus the top k elementary symmetric polynomials."""
    everyone = tuple(range(n))
    gens = [_power_poly(i, k, n) for i in range(n)]
    gens += [elementary_sym(j, everyone, n) for j in range(n, n - k, -1)]
    return tuple(gens)


def _span_ideal_degree(generators: tuple[Poly, ...], nvars: int, d: int) -> EchelonBasis:
    basis = EchelonBasis()
    for gen in generators:
        if not gen:
            continue
        gd = _poly_degree(gen)
        if gd > d:
            continue
        for mono in monomials_of_degree(nvars, d - gd):
            basis.insert(_shift(gen, mono))
    return basis


@cache
def _ideal_basis(n: int, k: int, d: int) -> EchelonBasis:
    return _span_ideal_degree(_coinvariant_generators(n, k), n, d)


def quotient_basis(n: int, k: int, d: int) -> tuple[int, EchelonBasis]:
    """Dimension of the degree-d quotient piece and the ideal piece in RREF."""
    _guard(n <= COMMUTING_MAX_N, f"commuting oracle limited to n <= {COMMUTING_MAX_N}, got n={n}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    if d < 0:
        raise ValueError("degree must be nonnegative")
    basis = _ideal_basis(n, k, d)
    return len(monomials_of_degree(n, d)) - basis.rank, basis


def perm_of_type(rho: Partition, n: int) -> tuple[int, ...]:
    """A representative permutation with the given cycle type (w[i] = image)."""
    if rho.size != n:
        raise ValueError(f"cycle type {rho.parts} is not a partition of {n}")
    w = list(range(n))
    start = 0
    for part in rho.parts:
        for j in range(part):
            w[start + j] = start + (j + 1) % part
        start += part
    return tuple(w)


def _count_fixed_monomials(rho: Partition, d: int) -> int:
    """Monomials of degree d fixed by a permutation of this cycle type.

    Exponents must be constant on cycles, so this is the number of ways to
    write d as a sum of cycle lengths with repetition.
    """
    counts = [1] + [0] * d
    for ell in rho.parts:
        for i in range(ell, d + 1):
            counts[i] += counts[i - ell]
    return counts[d]


def character_on_quotient(n: int, k: int, d: int, rho: Partition) -> int:
    """Trace of a permutation of cycle type rho on the degree-d quotient piece."""
    if rho.size != n:
        raise ValueError(f"cycle type {rho.parts} is not a partition of {n}")
    _, basis = quotient_basis(n, k, d)
    w = perm_of_type(rho, n)
    ideal_trace = Fraction(0)
    for pivot, row in basis.rows():
        # (w . row)[pivot] = row[w^{-1} . pivot]; exponents of the preimage
        # monomial are read through w directly.
        pre = tuple(pivot[w[j]] for j in range(n))
        ideal_trace += row.get(pre, Fraction(0))
    if ideal_trace.denominator != 1:
        raise RuntimeError(f"non-integer ideal trace {ideal_trace}: ideal not stable?")
    return _count_fixed_monomials(rho, d) - int(ideal_trace)


@dataclass(frozen=True)
class GradedDecomposition:
    """Per-degree Schur decompositions plus raw dimensions."""

    by_degree: dict[int, SchurExpansion] = field(default_factory=dict)
    dims: dict[int, int] = field(default_factory=dict)
    truncated: bool = False

    def degrees(self) -> list[int]:
        return sorted(self.by_degree)

    def top_degree(self) -> int:
        return max(self.by_degree, default=-1)

    def total_dimension(self) -> int:
        return sum(self.dims.values())

    def hilbert(self) -> GradedPoly:
        out = GradedPoly.zero()
        for d, dim in sorted(self.dims.items()):
            out = out + GradedPoly.term(dim, q=d)
        return out


def decompose_coinvariants(n: int, k: int, max_degree: int | None = None) -> GradedDecomposition:
    """Schur decomposition of every graded piece of the spanning-line quotient.

    Iterates degrees until the quotient piece vanishes at a degree past
    every generator degree; the quotient ring is generated in degree one,
    so all higher pieces vanish too.  `max_degree` truncates early (the
    result is then flagged) which keeps large-n probes affordable when
    only low degrees are needed.
    """
    _guard(n <= COMMUTING_MAX_N, f"commuting oracle limited to n <= {COMMUTING_MAX_N}, got n={n}")
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    types = partitions_of(n)
    by_degree: dict[int, SchurExpansion] = {}
    dims: dict[int, int] = {}
    d = 0
    truncated = False
    while True:
        dim, _ = quotient_basis(n, k, d)
        if dim:
            chi = ClassFunction(
                n, {rho: Fraction(character_on_quotient(n, k, d, rho)) for rho in types}
            )
            exp = schur_decompose(chi)
            if int(dimension(exp).evaluate()) != dim:
                raise RuntimeError(f"decomposition dimension mismatch at degree {d}")
            by_degree[d] = exp
            dims[d] = dim
        saturated = dim == 0 and d >= n  # n is the top generator degree
        if saturated:
            break
        if max_degree is not None and d >= max_degree:
            truncated = True
            break
        d += 1
    return GradedDecomposition(by_degree=by_degree, dims=dims, truncated=truncated)


# -- superspace pieces -------------------------------------------------


def _multidegree_basis(
    n: int, alpha: tuple[int, ...], beta: tuple[int, ...]
) -> tuple[SuperMonomial, ...]:
    x_choices = [monomials_of_degree(n, a) for a in alpha]
    t_choices = [tuple(combinations(range(n), b)) for b in beta]
    return tuple(
        SuperMonomial(xs, ths)
        for xs in product(*x_choices)
        for ths in product(*t_choices)
    )


def _signed_fixed_trace(basis: tuple[SuperMonomial, ...], w: tuple[int, ...]) -> int:
    tr = 0
    for mono in basis:
        img, sign = apply_perm(mono, w)
        if img == mono:
            tr += sign
    return tr


def decompose_superspace(
    n: int, m: int, p: int, alpha: tuple[int, ...], beta: tuple[int, ...]
) -> SchurExpansion:
    """Schur decomposition of one free multidegree piece of the mixed ring.

    The diagonal subscript action permutes basis super-monomials up to the
    theta reordering sign, so traces are signed fixed-point counts.
    """
    _guard(n <= COMMUTING_MAX_N, f"superspace pieces limited to n <= {COMMUTING_MAX_N}, got n={n}")
    if len(alpha) != m or len(beta) != p:
        raise ValueError("multidegree arity must match the batch counts")
    basis = _multidegree_basis(n, alpha, beta)
    values = {
        rho: Fraction(_signed_fixed_trace(basis, perm_of_type(rho, n)))
        for rho in partitions_of(n)
    }
    return schur_decompose(ClassFunction(n, values))


@cache
def _invariant_basis(
    n: int, alpha: tuple[int, ...], beta: tuple[int, ...]
) -> EchelonBasis:
    """Echelon basis of the diagonal invariants of one multidegree piece,
    from unnormalized symmetrization (Reynolds up to the 1/n! scalar)."""
    basis = EchelonBasis()
    perms = list(permutations(range(n)))
    for mono in _multidegree_basis(n, alpha, beta):
        acc: dict[SuperMonomial, int] = {}
        for w in perms:
            img, sign = apply_perm(mono, w)
            acc[img] = acc.get(img, 0) + sign
        vec = {k: Fraction(v) for k, v in acc.items() if v}
        if vec:
            basis.insert(vec)
    return basis


def _mono_times_vector(mono: SuperMonomial, vec: dict) -> dict:
    out: dict[SuperMonomial, Fraction] = {}
    for other, c in vec.items():
        mm, sign = mono_mul(mono, other)
        if mm is None:
            continue
        out[mm] = out.get(mm, Fraction(0)) + sign * c
    return {k: v for k, v in out.items() if v}


def _componentwise_below(bound: tuple[int, ...]):
    return product(*(range(b + 1) for b in bound))


def decompose_super_coinvariants(
    n: int, m: int, p: int, alpha: tuple[int, ...], beta: tuple[int, ...]
) -> SchurExpansion:
    """Schur decomposition of one multidegree piece of the quotient by the
    ideal of positive-multidegree diagonal invariants.

    The invariant subspaces feeding the ideal are computed multidegree by
    multidegree with exact symmetrization; the ideal piece is spanned by
    monomial-times-invariant products and row-reduced.
    """
    _guard(
        n <= SUPER_QUOTIENT_MAX_N,
        f"superspace quotients limited to n <= {SUPER_QUOTIENT_MAX_N}, got n={n}",
    )
    if len(alpha) != m or len(beta) != p:
        raise ValueError("multidegree arity must match the batch counts")
    basis = _multidegree_basis(n, alpha, beta)
    ideal = EchelonBasis()
    for gamma in _componentwise_below(alpha):
        for delta in _componentwise_below(beta):
            if not any(gamma) and not any(delta):
                continue
            inv = _invariant_basis(n, gamma, delta)
            if not inv.rank:
                continue
            cof_alpha = tuple(a - g for a, g in zip(alpha, gamma))
            cof_beta = tuple(b - d for b, d in zip(beta, delta))
            for cof in _multidegree_basis(n, cof_alpha, cof_beta):
                for _, row in inv.rows():
                    vec = _mono_times_vector(cof, row)
                    if vec:
                        ideal.insert(vec)
    values = {}
    for rho in partitions_of(n):
        w = perm_of_type(rho, n)
        w_inv = _w_inverse(w)
        full = _signed_fixed_trace(basis, w)
        ideal_trace = Fraction(0)
        for pivot, row in ideal.rows():
            pre, sign = apply_perm(pivot, w_inv)
            ideal_trace += sign * row.get(pre, Fraction(0))
        if ideal_trace.denominator != 1:
            raise RuntimeError(f"non-integer ideal trace {ideal_trace}: ideal not stable?")
        values[rho] = Fraction(full - int(ideal_trace))
    return schur_decompose(ClassFunction(n, values))


def _w_inverse(w: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(w)
    for i, wi in enumerate(w):
        inv[wi] = i
    return tuple(inv)


# -- Grassmann presentation --------------------------------------------


def _batch_indices(d: int, i: int) -> tuple[int, ...]:
    return tuple(range(i * d, (i + 1) * d))


def _apply_varperm(mono: tuple[int, ...], w: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(mono)
    for i, e in enumerate(mono):
        out[w[i]] = e
    return tuple(out)


def grassmann_quotient(d: int, n: int, k: int) -> GradedDecomposition:
    """Per-degree dimensions and Schur decomposition for spanning d-plane
    configurations, via the batch-symmetric quotient presentation.

    The ideal in the d*n variables is generated by the top k elementary
    symmetric polynomials of all variables together with the complete
    homogeneous h_k, ..., h_{k-d+1} of each batch; invariants under the
    within-batch symmetric groups are taken with exact symmetrization, and
    the symmetric group character permutes whole batches.
    """
    if d < 1 or n < 1:
        raise ValueError("d and n must be positive")
    if not d <= k <= d * n:
        raise ValueError(f"need d <= k <= d*n, got d={d}, n={n}, k={k}")
    nvars = d * n
    _guard(
        nvars <= GRASSMANN_MAX_VARS,
        f"Grassmann oracle limited to d*n <= {GRASSMANN_MAX_VARS}, got {nvars}",
    )
    everyone = tuple(range(nvars))
    gens: list[Poly] = [elementary_sym(j, everyone, nvars) for j in range(nvars, nvars - k, -1)]
    for i in range(n):
        batch = _batch_indices(d, i)
        gens += [complete_sym(j, batch, nvars) for j in range(k, k - d, -1)]
    generators = tuple(gens)

    # within-batch permutations as permutations of all d*n variables
    group: list[tuple[int, ...]] = []
    for gs in product(permutations(range(d)), repeat=n):
        w = [0] * nvars
        for i, g in enumerate(gs):
            for t in range(d):
                w[i * d + t] = i * d + g[t]
        group.append(tuple(w))

    types = partitions_of(n)
    by_degree: dict[int, SchurExpansion] = {}
    dims: dict[int, int] = {}
    deg = 0
    while True:
        ideal = _span_ideal_degree(generators, nvars, deg)
        monos = monomials_of_degree(nvars, deg)
        pivot_set = set(ideal.pivots())
        standard = [mm for mm in monos if mm not in pivot_set]
        qdim = len(standard)
        if qdim:
            invariants = EchelonBasis()
            for mm in standard:
                acc: dict[tuple[int, ...], Fraction] = {}
                for g in group:
                    red = ideal.reduce({_apply_varperm(mm, g): Fraction(1)})
                    for key, c in red.items():
                        nc = acc.get(key, Fraction(0)) + c
                        if nc:
                            acc[key] = nc
                        else:
                            acc.pop(key, None)
                if acc:
                    invariants.insert(acc)
            if invariants.rank:
                values = {}
                for rho in types:
                    sigma = perm_of_type(rho, n)
                    # batch permutation: variable (i, t) -> (sigma(i), t)
                    varperm = tuple(
                        sigma[i] * d + t for i in range(n) for t in range(d)
                    )
                    tr = Fraction(0)
                    for pivot, row in invariants.rows():
                        image: dict[tuple[int, ...], Fraction] = {}
                        for mono, c in row.items():
                            key = _apply_varperm(mono, varperm)
                            image[key] = image.get(key, Fraction(0)) + c
                        red = ideal.reduce(image)
                        tr += red.get(pivot, Fraction(0))
                    if tr.denominator != 1:
                        raise RuntimeError(f"non-integer trace {tr} at degree {deg}")
                    values[rho] = tr
                exp = schur_decompose(ClassFunction(n, values))
                by_degree[deg] = exp
                dims[deg] = invariants.rank
        if qdim == 0 and deg >= nvars:  # e_{d*n} is the top generator degree
            break
        deg += 1
    return GradedDecomposition(by_degree=by_degree, dims=dims)
