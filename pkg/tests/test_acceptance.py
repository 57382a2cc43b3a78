"""Acceptance criteria, one test each, exact (zero) tolerance.

Each test prints a single ``[criterion N] PASS|FAIL  description`` line.
Criterion 2 is expected to fail: the literal pointwise formula carries the
opposite sign to the operator definition of D (see the decisions ledger).
"""

import time
from itertools import product

import pytest

from g2forge.exact_field import LAMBDA, UniPoly, char_poly
from g2forge.g2_core import D, D_pointwise, build_g2
from g2forge.octonion import IMAGINARY_BASIS, I, J, JL, K, L
from g2forge.representations import (
    action_on_complement,
    action_on_o0,
    cartan_matrix,
    centralizer_dims,
    commutant_dim,
    dynkin_index,
    dynkin_index_trace,
    lie_yamaguti_from_pair,
    principal_coeffs,
    sl2_decompose,
)
from g2forge.subalgebras import (
    LABELS,
    explicit_presentations,
    h8_generators,
    h8_relations,
    reductive_complement,
    subalgebra,
)


@pytest.fixture
def report(capsys):
    def emit(n, ok, text):
        with capsys.disabled():
            print(f"\n[criterion {n:>2}] {'PASS' if ok else 'FAIL'}  {text}")
        assert ok, text

    return emit


def test_criterion_01_g2_dimension_jacobi_killing(report):
    t0 = time.perf_counter()
    build_g2.cache_clear()
    g2 = build_g2()
    ok = g2.dim == 14 and not g2.jacobi_failures() and g2.killing_signature() == (0, 14, 0)
    elapsed = time.perf_counter() - t0
    report(1, ok and elapsed < 5, f"dim 14, Jacobi on 364 triples, Killing negative definite ({elapsed:.2f}s)")


def test_criterion_02_literal_pointwise_formula(report):
    bad = [
        (x, y, z)
        for x, y, z in product(IMAGINARY_BASIS, repeat=3)
        if D(x, y).apply(z) != D_pointwise(x, y, z)
    ]
    report(2, not bad, f"D_x,y(z) = [z,[x,y]] - 3(x,z,y) on 343 triples ({len(bad)} mismatches)")


def test_criterion_03_subalgebras(report):
    dims = tuple(subalgebra(lab).dim for lab in LABELS)
    closed = all(
        subalgebra(lab).contains(subalgebra(lab).g2.bracket(a, b))
        for lab in LABELS
        for a in subalgebra(lab).coords
        for b in subalgebra(lab).coords
    )
    pres = all(ok for _, ok in explicit_presentations().values())
    ok = dims == (6, 4, 3, 4, 3, 8, 3, 3) and closed and pres
    report(3, ok, f"dims {dims}, bracket-closed, presentations match constraints")


def test_criterion_04_h8_brackets_and_char_poly(report):
    rel = all(h8_relations().values())
    h = h8_generators()[0]
    want = LAMBDA
    for k in (1, 4, 9):
        want = want * (LAMBDA * LAMBDA + UniPoly([k]))
    cp = char_poly(h.rows) == want
    report(4, rel and cp, "[h,x]=y, [h,y]=-x, [x,y]=8/3 h over Q(sqrt15); char poly λ(λ²+1)(λ²+4)(λ²+9)")


def test_criterion_05_h8_commutants(report):
    s = subalgebra("h8")
    a = commutant_dim(action_on_o0(s))
    b = commutant_dim(action_on_complement(reductive_complement(s)))
    report(5, (a, b) == (1, 1), f"commutant dims on O_0 and on the 11-dim complement: ({a}, {b})")


def test_criterion_06_sl2_decompositions(report):
    want = {
        "h3": "4V(1) ⊕ V(2) ⊕ 3V(0)",
        "h5": "V(2) ⊕ 2V(3) ⊕ 3V(0)",
        "h7": "3V(2) ⊕ V(4)",
        "h8": "V(2) ⊕ V(10)",
    }
    decs = {lab: sl2_decompose(subalgebra(lab), "g2") for lab in want}
    got = {lab: str(d) for lab, d in decs.items()}
    ze = tuple(centralizer_dims(decs[lab])[0] for lab in want)
    zh = tuple(centralizer_dims(decs[lab])[1] for lab in want)
    ok = got == want and ze == (8, 6, 4, 2) and zh == (4, 4, 4, 2)
    report(6, ok, f"g2 decompositions {list(got.values())}; z(e) {ze}, z(h) {zh}")


def test_criterion_07_dynkin_indices(report):
    labs = ("h3", "h5", "h7", "h8")
    w = tuple(dynkin_index(subalgebra(x)) for x in labs)
    t = tuple(dynkin_index_trace(subalgebra(x)) for x in labs)
    report(7, w == t == (1, 3, 4, 28), f"weight formula {tuple(map(int, w))}, trace route {tuple(map(int, t))}")


def test_criterion_08_principal_coefficients(report):
    g = principal_coeffs(cartan_matrix("G", 2))
    a = principal_coeffs(cartan_matrix("A", 1))
    ok = g == (6, 10) and all(c > 0 for c in g) and a == (1,)
    report(8, ok, f"G2 -> {tuple(map(int, g))}, A1 -> {tuple(map(int, a))}")


def test_criterion_09_split_g2(report):
    from g2forge.transvection import (
        BinaryForm,
        ad_h_spectrum_ok,
        build_split_g2,
        jacobian_sum,
    )

    alg = build_split_g2()
    jac = jacobian_sum(BinaryForm.monomial(10, 10), BinaryForm.monomial(10, 0), BinaryForm.monomial(10, 1))
    ok = (
        not alg.jacobi_failures()
        and alg.is_simple()
        and ad_h_spectrum_ok(alg)
        and alg.killing_signature() == (8, 6, 0)
        and repr(jac) == "(5/252)XY^9"
    )
    report(9, ok, f"Jacobi, simple, ad(4XY) spectrum, signature (8,6), Jacobian sum {jac!r}")


def test_criterion_10_lie_yamaguti(report):
    from g2forge.transvection import ly_axioms_v10

    v10 = all(ok for ok, _ in ly_axioms_v10().values())
    pairs = {}
    for lab in LABELS:
        ly = lie_yamaguti_from_pair(reductive_complement(subalgebra(lab)))
        pairs[lab] = ly.axioms_hold()
        if lab == "h1":
            pairs["h1 binary zero"] = ly.is_binary_zero()
    ok = v10 and all(pairs.values())
    report(10, ok, f"axioms on V10 and on all 8 reductive pairs; h1 binary product zero: {pairs['h1 binary zero']}")


def test_criterion_11_homogeneous_models(report):
    from g2forge.g2_core import d_left, d_right
    from g2forge.homogeneous import (
        CURATED_TRIPLES,
        HH,
        HL,
        PROJECTIONS,
        CayleyTriple,
        base_M5,
        coassoc_duality,
        is_cayley_triple,
        m4_alpha,
        m5_witness,
        projection_equivariant,
        quadric_map,
        quaternion_dual,
        restrict_operator,
        sample_automorphisms,
        source_point,
        subtriple_N,
    )

    autos = sample_automorphisms(0, 5)
    parts = {
        "cayley": is_cayley_triple(I, J, L),
        "duality": coassoc_duality(HL) == HH and all(
            coassoc_duality(quaternion_dual(HH.image(f))) == HH.image(f) for f in autos
        ),
        "alpha": (
            m4_alpha(HL, d_left(I).extend8(), L, JL),
            m4_alpha(HL, restrict_operator(d_right(I).extend8(), HL), L, JL),
        )
        == (1, -1),
        "m5 witness": all(base_M5().act(m5_witness(base_M5().act(f))) == base_M5().act(f) for f in autos),
        "subtriple": (lambda c: c["dim"] == 5 and c["triple_closed"])(subtriple_N()),
        "quadric": quadric_map(J, K)["on_quadric"],
        "equivariance": len(set(autos)) >= 5
        and all(
            projection_equivariant(name, source_point(name, CayleyTriple(*t)), f)
            for name in PROJECTIONS
            for t in CURATED_TRIPLES[:3]
            for f in autos
        ),
    }
    bad = [k for k, v in parts.items() if not v]
    report(11, not bad, f"model certificates over {len(autos)} automorphisms" + (f"; failed: {bad}" if bad else ""))


def test_criterion_12_principal_conjugation_invariance(report):
    from g2forge.homogeneous import automorphism_from_triple, conjugate_subalgebra, is_principal_subalgebra

    f = automorphism_from_triple((J, K, L))
    h8 = subalgebra("h8")
    got = (
        is_principal_subalgebra(h8),
        is_principal_subalgebra(conjugate_subalgebra(h8, f)),
        *(is_principal_subalgebra(subalgebra(x)) for x in ("h3", "h5", "h7")),
    )
    report(12, got == (True, True, False, False, False), f"h8, conjugate, h3, h5, h7 -> {got}")
