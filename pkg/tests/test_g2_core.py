from itertools import product

import pytest

from g2forge.g2_core import (
    D,
    D_pointwise,
    apply8,
    build_g2,
    d_left,
    d_right,
    invariance_check,
    is_automorphism8,
    is_derivation,
    left_right_mult,
    preserves_omega,
    tau,
    tau7,
)
from g2forge.linalg import Mat
from g2forge.octonion import I, IL, IMAGINARY_BASIS, J, JL, K, KL, L, ONE, associator, commutator


@pytest.fixture(scope="module")
def g2():
    return build_g2()


def test_dimension_and_basis_labels(g2):
    assert g2.dim == 14
    assert g2.labels[:3] == [(1, 2), (1, 3), (1, 4)]


def test_every_basis_element_is_a_derivation(g2):
    for m in g2.basis:
        assert is_derivation(m)
        assert preserves_omega(m)


def test_jacobi_and_compactness(g2):
    assert not g2.jacobi_failures()
    assert g2.is_antisymmetric()
    assert g2.is_negative_definite()
    assert g2.is_simple()


def test_killing_is_four_times_trace_form(g2):
    assert g2.killing_ratio == 4


def test_operator_identity_on_all_basis_triples():
    # the inner derivation equals [[x,y],z] - 3(x,y,z)
    for x, y, z in product(IMAGINARY_BASIS, repeat=3):
        lhs = D(x, y).apply(z)
        assert lhs == commutator(commutator(x, y), z) - associator(x, y, z) * 3
        assert lhs == -D_pointwise(x, y, z)


def test_literal_pointwise_sign_differs():
    assert D(I, J).apply(I) != D_pointwise(I, J, I)


def test_left_right_multiplications_are_skew():
    lx, rx = left_right_mult(I)
    assert lx.T == -lx and rx.T == -rx
    assert lx @ lx == -Mat.identity(8)


def test_d_left_right_examples():
    assert d_right(I).apply(J) == -K * 2
    assert d_left(I).apply(L) == d_right(I).apply(L)
    assert d_left(I).apply(J) == J * 0
    with pytest.raises(ValueError):
        d_left(L)


def test_d_left_right_brackets():
    for a, b in product((I, J, K), repeat=2):
        c = commutator(a, b)
        assert d_left(a).bracket(d_left(b)) == d_left(c)
        # right-type maps reverse brackets, so a -> -d_a^r is the homomorphism
        assert d_right(a).bracket(d_right(b)) == -d_right(c)
        assert not any(d_left(a).bracket(d_right(b)).flat())


def test_inner_derivation_of_quaternions_is_right_type():
    for p, q in product((I, J, K), repeat=2):
        assert D(p, q) == -d_right(commutator(p, q))


def test_tau_is_an_automorphism_of_order_four():
    t = tau()
    assert is_automorphism8(t)
    assert t @ t @ t @ t == Mat.identity(8)
    assert t @ t != Mat.identity(8)
    assert apply8(t, L) == IL
    assert tau7().shape == (7, 7)


def test_invariance_of_inner_derivations(g2):
    for d in g2.basis[:4]:
        for x, y in ((I, J), (L, KL), (JL, K)):
            assert invariance_check(d, x, y)


def test_derivations_kill_the_unit(g2):
    for m in g2.basis:
        assert not any(apply8(m.extend8(), ONE).coords)


def test_non_derivation_detected():
    lx, _ = left_right_mult(I)
    assert not is_derivation(lx)
    assert not is_derivation(Mat.identity(7))


def test_tau_commutant_in_g2_is_four_dimensional(g2):
    t = tau7()
    from g2forge.linalg import nullspace

    rows = list(zip(*[t.bracket(m).flat() for m in g2.basis]))
    assert len(nullspace(rows, g2.dim)) == 4


def test_killing_form_is_invariant(g2):
    k = g2.killing
    units = [g2.unit(a) for a in range(g2.dim)]

    def form(u, v):
        return sum(u[p] * k[p, q] * v[q] for p in range(g2.dim) for q in range(g2.dim))

    for a in units[:5]:
        for b in units:
            for c in units[::3]:
                assert form(g2.bracket(a, b), c) + form(b, g2.bracket(a, c)) == 0
