from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from spanrep.combinat import GradedPoly, Partition
from spanrep.errors import ScaleGuardError
from spanrep.oracle import decompose_coinvariants
from spanrep.superspace import (
    SuperMonomial,
    SuperPoly,
    d_theta,
    d_x,
    frobenius_of_closure,
    harmonic_closure,
    polarization,
    superspace_vandermonde,
    vandermonde_derivative_identity,
)
from spanrep.symfun import SchurExpansion


def x(i, n=2, m=1, p=1, batch=0):
    return SuperPoly.x(n, m, p, i, batch)


def th(i, n=2, m=1, p=1, batch=0):
    return SuperPoly.theta(n, m, p, i, batch)


# -- multiplication -----------------------------------------------------------


def test_theta_multiplication_signs():
    t0, t1 = th(0), th(1)
    assert t0 * t1 == -(t1 * t0)
    assert not t0 * t0
    assert (x(0) * t0) * (x(1) * t1) == x(0) * x(1) * t0 * t1


def test_batch_mismatch_raises():
    with pytest.raises(ValueError):
        SuperPoly.x(2, 1, 1, 0) + SuperPoly.x(3, 1, 1, 0)
    with pytest.raises(ValueError):
        SuperPoly.x(2, 1, 1, 0) * SuperPoly.x(2, 2, 1, 0)


# -- the antisymmetrized seed ---------------------------------------------------


def test_vandermonde_2_2_is_classical():
    assert superspace_vandermonde(2, 2) == x(0) - x(1)


def test_vandermonde_2_1_is_theta_difference():
    assert superspace_vandermonde(2, 1) == th(0) - th(1)


def test_vandermonde_full_k_matches_product_formula():
    for n in range(2, 5):
        product = SuperPoly.one(n, 1, 1)
        for i in range(n):
            for j in range(i + 1, n):
                product = product * (x(i, n) - x(j, n))
        assert superspace_vandermonde(n, n) == product


def test_vandermonde_antisymmetry():
    for n in range(2, 5):
        for k in range(1, n + 1):
            delta = superspace_vandermonde(n, k)
            for i in range(n - 1):
                w = list(range(n))
                w[i], w[i + 1] = w[i + 1], w[i]
                assert delta.apply(tuple(w)) == -delta


# -- derivatives ----------------------------------------------------------------


def test_d_theta_position_signs():
    prod = th(0, 3) * th(1, 3)
    assert d_theta(prod, 0) == th(1, 3)
    assert d_theta(prod, 1) == -th(0, 3)
    assert not d_theta(prod, 2)


def test_d_x_basic():
    poly = x(0) * x(0) * th(0)
    assert d_x(poly, 0) == 2 * (x(0) * th(0))
    assert not d_x(poly, 1)


small_monos = st.builds(
    lambda exps, thetas: SuperMonomial((tuple(exps),), (tuple(sorted(set(thetas))),)),
    st.lists(st.integers(0, 2), min_size=4, max_size=4),
    st.lists(st.integers(0, 3), max_size=3),
)
small_polys = st.dictionaries(small_monos, st.integers(-5, 5).map(Fraction), max_size=5).map(
    lambda terms: SuperPoly(4, 1, 1, terms)
)


@settings(max_examples=40, deadline=None)
@given(small_polys, st.integers(0, 3), st.integers(0, 3))
def test_d_theta_anticommutes(poly, i, j):
    left = d_theta(d_theta(poly, j), i)
    right = d_theta(d_theta(poly, i), j)
    assert left == -right
    if i == j:
        assert not left


# -- polarization ----------------------------------------------------------------


def test_polarization_basic():
    y1 = SuperPoly.x(3, 2, 1, 0, batch=0)
    rho = polarization(0, 1, 1, kind="x")
    assert rho(y1) == SuperPoly.x(3, 2, 1, 0, batch=1)

    squares = SuperPoly.zero(3, 2, 1)
    for i in range(2):
        yi = SuperPoly.x(3, 2, 1, i, batch=0)
        squares = squares + yi * yi
    rho2 = polarization(0, 1, 2, kind="x")
    expected = 2 * (SuperPoly.x(3, 2, 1, 0, batch=1) + SuperPoly.x(3, 2, 1, 1, batch=1))
    assert rho2(squares) == expected


def test_polarization_anticommuting_signs():
    xi = lambda i: SuperPoly.theta(3, 1, 2, i, batch=0)
    tau = lambda i: SuperPoly.theta(3, 1, 2, i, batch=1)
    rho = polarization(0, 1, kind="theta")
    assert rho(xi(0) * xi(1)) == tau(0) * xi(1) - tau(1) * xi(0)


def test_polarization_validation():
    with pytest.raises(ValueError):
        polarization(0, 0, kind="x")
    with pytest.raises(ValueError):
        polarization(0, 1, 2, kind="theta")
    with pytest.raises(ValueError):
        polarization(0, 1, kind="grassmann")


# -- harmonic closures -------------------------------------------------------------


def test_closure_2_1_1_2():
    space = harmonic_closure(2, 1, 1, 2)
    assert space.hilbert() == GradedPoly({(0, 0, 0): 1, (1, 0, 0): 1})
    assert space.theta_slice_dims(0) == {0: 1, 1: 1}


def test_closure_2_1_1_1():
    space = harmonic_closure(2, 1, 1, 1)
    assert space.dims() == {((0,), (0,)): 1, ((0,), (1,)): 1}


def test_closure_classical_harmonics():
    # theta-degree-0 slice of the full-k closure carries the coinvariant Hilbert series
    for n in range(1, 5):
        space = harmonic_closure(n, 1, 1, n)
        assert space.theta_slice_dims(0) == decompose_coinvariants(n, n).dims


def test_closure_is_operator_closed():
    for n, k in [(2, 1), (3, 2), (3, 3)]:
        space = harmonic_closure(n, 1, 1, k)
        ops = [lambda f, i=i: d_x(f, i) for i in range(n)]
        ops += [lambda f, i=i: d_theta(f, i) for i in range(n)]
        for md, basis in space.spaces.items():
            for _, row in basis.rows():
                vec = SuperPoly(n, 1, 1, row)
                for op in ops:
                    image = op(vec)
                    if not image:
                        continue
                    target = image.items()[0][0].multidegree()
                    assert space.spaces[target].contains(image.terms()), (n, k, md)


def test_closure_is_symmetric_group_stable():
    for n, k in [(2, 2), (3, 2)]:
        space = harmonic_closure(n, 1, 1, k)
        for w in permutations(range(n)):
            for md, basis in space.spaces.items():
                for _, row in basis.rows():
                    image = SuperPoly(n, 1, 1, row).apply(w)
                    assert basis.contains(image.terms()), (n, k, md, w)


def test_closure_scale_guard():
    with pytest.raises(ScaleGuardError):
        harmonic_closure(9, 1, 1, 3)


def test_closure_with_polarization_batches():
    # two commuting batches: polarized images must live in the closure
    space = harmonic_closure(2, 2, 1, 2)
    md = ((0, 1), (0,))  # x-degree moved to the second batch
    assert space.spaces[md].rank == 1


# -- Frobenius of the closure --------------------------------------------------------


def test_frobenius_of_closure_constants_and_sign():
    tables = frobenius_of_closure(2, 1, 1, 1)
    triv = SchurExpansion(2, {Partition((2,)): GradedPoly.const(1)})
    sign = SchurExpansion(2, {Partition((1, 1)): GradedPoly.const(1)})
    assert tables[((0,), (0,))] == triv
    assert tables[((0,), (1,))] == sign


def test_frobenius_of_closure_dimensions_agree():
    from spanrep.symfun import dimension

    for n, k in [(2, 2), (3, 2), (3, 3)]:
        space = harmonic_closure(n, 1, 1, k)
        tables = frobenius_of_closure(n, 1, 1, k, closure=space)
        dims = space.dims()
        assert set(tables) == set(dims)
        for md, exp in tables.items():
            assert int(dimension(exp).evaluate()) == dims[md]


def test_top_theta_slice_twist_regression():
    # Regression fixture, not a theorem: the observed transform carrying the
    # ring-side table onto the top-theta closure slice is conjugation
    # composed with q-reversal, for every n <= 4.  If this changes, the
    # closure or the formula changed.
    from spanrep.combinat import GradedPoly
    from spanrep.formula import grfrob_tableaux
    from spanrep.symfun import omega, q_reverse

    for n in range(1, 5):
        for k in range(1, n + 1):
            tables = frobenius_of_closure(n, 1, 1, k)
            coeffs = {}
            for (alpha, beta), exp in tables.items():
                if beta[0] != n - k:
                    continue
                for lam, poly in exp.items():
                    bump = poly * GradedPoly.term(1, q=alpha[0])
                    coeffs[lam] = coeffs.get(lam, GradedPoly.zero()) + bump
            v_slice = SchurExpansion(n, coeffs)
            ring = grfrob_tableaux(n, k).as_q_expansion()
            top = max(
                max((p.q_degree() for _, p in ring.items()), default=0),
                max((p.q_degree() for _, p in v_slice.items()), default=0),
            )
            assert omega(q_reverse(ring, top)) == v_slice, (n, k)


# -- the derivative identity -----------------------------------------------------------


def test_derivative_identity_worked_case():
    result = vandermonde_derivative_identity(2, 1)
    assert result.equal
    assert result.rhs == superspace_vandermonde(2, 1, ambient=3)
    assert result.lhs == result.rhs


def test_derivative_identity_all_small_cases():
    for n in range(1, 5):
        for k in range(n):
            assert vandermonde_derivative_identity(n, k).equal, (n, k)


def test_derivative_identity_validation():
    with pytest.raises(ValueError):
        vandermonde_derivative_identity(3, 3)
    with pytest.raises(ScaleGuardError):
        vandermonde_derivative_identity(7, 1)
