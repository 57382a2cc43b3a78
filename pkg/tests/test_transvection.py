import pytest
from hypothesis import given, strategies as st

from g2forge.exact_field import mpq
from g2forge.g2_core import build_g2
from g2forge.transvection import (
    BinaryForm,
    ad_h_spectrum_ok,
    build_split_g2,
    coords_to_forms,
    form_to_coords,
    jacobian_sum,
    ly_axioms_v10,
    ly_products_v10,
    ly_projection_consistent,
    split_bracket_forms,
    transvect,
)

X2, XY, Y2 = BinaryForm.monomial(2, 2), BinaryForm.monomial(2, 1), BinaryForm.monomial(2, 0)


def forms(n):
    return st.lists(st.integers(-3, 3), min_size=n + 1, max_size=n + 1).map(lambda c: BinaryForm(n, c))


def test_zeroth_transvectant_is_product():
    f, g = BinaryForm(2, [1, 2, 3]), BinaryForm(3, [0, 1, 0, 5])
    assert transvect(f, g, 0) == f * g


def test_first_transvectant_example():
    assert transvect(X2, Y2, 1) == XY


def test_out_of_range_order():
    with pytest.raises(ValueError):
        transvect(X2, Y2, 3)


@given(forms(4), forms(3), st.integers(0, 3))
def test_degree_law_and_symmetry(f, g, q):
    t = transvect(f, g, q)
    assert t.degree == 4 + 3 - 2 * q
    assert transvect(g, f, q) == t * (-1) ** q


@given(forms(3), forms(3), forms(3))
def test_bilinear(f, g, h):
    assert transvect(f + g, h, 2) == transvect(f, h, 2) + transvect(g, h, 2)


def test_h_action_on_v10():
    h = XY * 4
    for k in range(11):
        f = BinaryForm.monomial(10, k)
        assert transvect(h, f, 1) * 5 == f * (10 - 2 * k)


def test_split_algebra_structure():
    alg = build_split_g2()
    assert alg.dim == 14
    assert not alg.jacobi_failures()
    assert alg.is_simple()
    assert ad_h_spectrum_ok(alg)
    assert alg.killing_signature() == (8, 6, 0)
    assert build_g2().killing_signature() == (0, 14, 0)


def test_coordinates_round_trip():
    f2, f10 = BinaryForm(2, [1, 2, 3]), BinaryForm.monomial(10, 4, 7)
    assert coords_to_forms(form_to_coords(f2, f10)) == (f2, f10)


def test_v2_bracket_needs_no_rescaling():
    # the V2 bracket is the plain first transvectant
    assert split_bracket_forms(XY * 4, X2)[0] == X2 * -2
    assert split_bracket_forms(XY * 4, Y2)[0] == Y2 * 2


def test_lie_yamaguti_products():
    f = BinaryForm.monomial(10, 3)
    assert not ly_products_v10(f, f, f)[0]
    basis = [BinaryForm.monomial(10, k) for k in range(11)]
    for a in basis[::2]:
        for b in basis[1::3]:
            for c in basis[::5]:
                assert ly_projection_consistent(a, b, c)
    with pytest.raises(ValueError):
        ly_products_v10(X2, f, f)


def test_jacobian_value():
    f1, f2, f3 = BinaryForm.monomial(10, 10), BinaryForm.monomial(10, 0), BinaryForm.monomial(10, 1)
    assert jacobian_sum(f1, f2, f3) == BinaryForm.monomial(10, 1, mpq(5, 252))
    assert repr(jacobian_sum(f1, f2, f3)) == "(5/252)XY^9"


def test_lie_yamaguti_axioms_on_v10():
    res = ly_axioms_v10()
    assert len(res) == 6
    assert all(ok for ok, _ in res.values()), res
