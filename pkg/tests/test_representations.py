import random

import pytest

from g2forge.linalg import Mat, invert
from g2forge.representations import (
    ActionSpace,
    RepresentationError,
    Sl2Decomposition,
    action_on_complement,
    action_on_g2,
    action_on_o0,
    cartan_matrix,
    centralizer_dims,
    commutant_dim,
    dynkin_index,
    dynkin_index_modules,
    dynkin_index_trace,
    lie_yamaguti_from_pair,
    normalized_h,
    peel_weights,
    principal_coeffs,
    sl2_decompose,
    vn_index,
)
from g2forge.g2_core import d_left, d_right
from g2forge.octonion import I
from g2forge.subalgebras import LABELS, h8_generators, reductive_complement, subalgebra

THREE_DIM = ("h3", "h5", "h7", "h8")
G2_LISTS = {
    "h3": ("4V(1) ⊕ V(2) ⊕ 3V(0)", (8, 4)),
    "h5": ("V(2) ⊕ 2V(3) ⊕ 3V(0)", (6, 4)),
    "h7": ("3V(2) ⊕ V(4)", (4, 4)),
    "h8": ("V(2) ⊕ V(10)", (2, 2)),
}
INDICES = {"h3": 1, "h5": 3, "h7": 4, "h8": 28}


def test_commutant_examples():
    assert commutant_dim(action_on_o0(subalgebra("h8"))) == 1
    assert commutant_dim(ActionSpace([Mat.zeros(7)], 7)) == 49
    assert commutant_dim(action_on_o0(subalgebra("h3"))) > 1


def test_commutant_invariant_under_change_of_basis():
    rng = random.Random(3)
    while True:
        p = Mat([[rng.randint(-2, 2) for _ in range(7)] for _ in range(7)])
        try:
            pinv = Mat(invert(p.rows))
            break
        except (ValueError, ZeroDivisionError):
            continue
    for label in ("h3", "h8"):
        gens = action_on_o0(subalgebra(label)).generators
        conj = [p @ g @ pinv for g in gens]
        assert commutant_dim(ActionSpace(conj, 7)) == commutant_dim(ActionSpace(gens, 7))


def test_normalized_elements():
    g2 = subalgebra("h3").g2
    assert normalized_h(subalgebra("h3")) == g2.coords(d_left(I))
    assert normalized_h(subalgebra("h5")) == g2.coords(d_right(I))
    assert normalized_h(subalgebra("h8")) == g2.coords(h8_generators()[0] * 2)
    with pytest.raises(RepresentationError):
        normalized_h(subalgebra("h1"))


@pytest.mark.parametrize("label", THREE_DIM)
def test_adjoint_decompositions(label):
    dec = sl2_decompose(subalgebra(label), "g2")
    assert (str(dec), centralizer_dims(dec)) == G2_LISTS[label]
    assert dec.dim == 14


@pytest.mark.parametrize("label", THREE_DIM)
def test_o0_decompositions_have_dim_7(label):
    assert sl2_decompose(subalgebra(label), "o0").dim == 7


def test_h8_on_o0_is_irreducible():
    assert str(sl2_decompose(subalgebra("h8"), "o0")) == "V(6)"


def test_peeling_and_centralizers():
    assert sorted(peel_weights(1, {2: 1, 4: 1, 6: 1})) == [6]
    assert centralizer_dims(Sl2Decomposition([0])) == (1, 1)
    with pytest.raises(RepresentationError):
        peel_weights(0, {2: 1})


@pytest.mark.parametrize("label", THREE_DIM)
def test_dynkin_index_routes_agree(label):
    s = subalgebra(label)
    want = INDICES[label]
    assert dynkin_index(s) == want
    assert dynkin_index_trace(s) == want
    assert dynkin_index_modules(s, "o0") == want
    assert dynkin_index_modules(s, "g2") == want


def test_indices_are_pairwise_distinct():
    assert len({dynkin_index(subalgebra(x)) for x in THREE_DIM}) == 4


def test_vn_index_reference_values():
    assert vn_index(1) == 1 and vn_index(6) == 56 and vn_index(2) == 4


def test_principal_coefficients():
    assert principal_coeffs(cartan_matrix("G", 2)) == (6, 10)
    assert principal_coeffs(cartan_matrix("A", 1)) == (1,)
    assert principal_coeffs(cartan_matrix("A", 2)) == (2, 2)


@pytest.mark.parametrize(
    "kind,n", [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("B", 2), ("B", 3), ("B", 4), ("C", 3), ("C", 4), ("D", 4), ("F", 4)]
)
def test_principal_coefficients_positive(kind, n):
    assert all(c > 0 for c in principal_coeffs(cartan_matrix(kind, n)))


def test_singular_cartan_rejected():
    with pytest.raises((ValueError, ZeroDivisionError)):
        principal_coeffs([[2, -2], [-2, 2]])


@pytest.mark.parametrize("label", LABELS)
def test_lie_yamaguti_pairs(label):
    ly = lie_yamaguti_from_pair(reductive_complement(subalgebra(label)))
    res = ly.check_axioms()
    assert all(ok for ok, _ in res.values()), res
    assert ly.is_binary_zero() == (label == "h1")
    n = len(ly.space) if ly.space is not None else None
    units = [ly.unit(a) for a in range(min(n or 4, 4))]
    for x in units:
        assert not any(ly.bin(x, x))
        for y in units:
            assert not any(ly.ternary(x, x, y))


def test_complement_action_dimension():
    pair = reductive_complement(subalgebra("h8"))
    assert action_on_complement(pair).dim == 11
    assert action_on_g2(subalgebra("h8")).dim == 14
