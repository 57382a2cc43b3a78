import pytest

from g2forge.g2_core import D, build_g2, is_derivation
from g2forge.linalg import span_basis, span_equal
from g2forge.octonion import I, IL, J, K, L
from g2forge.subalgebras import (
    C_PERP,
    EXPECTED_DIMS,
    LABELS,
    certificate_ok,
    explicit_presentations,
    grading_check,
    grading_parts,
    h8_generators,
    h8_relations,
    h_left,
    h_right,
    intersection_dim,
    reductive_complement,
    solve_constraint,
    structure_certificate,
    subalgebra,
)

COMPLEMENT_DIMS = {"h1": 8, "h2": 10, "h3": 11, "h4": 10, "h5": 11, "h6": 6, "h7": 11, "h8": 11}


@pytest.mark.parametrize("label", LABELS)
def test_dimension_closure_and_derivations(label):
    s = subalgebra(label)
    assert s.dim == EXPECTED_DIMS[label]
    g2 = s.g2
    for a in s.coords:
        for b in s.coords:
            assert s.contains(g2.bracket(a, b))
    assert all(is_derivation(m) for m in s.basis)
    assert s.is_compact()


@pytest.mark.parametrize("label", LABELS)
def test_structure_certificates(label):
    assert certificate_ok(subalgebra(label))


def test_h1_splits_into_commuting_ideals():
    c = structure_certificate(subalgebra("h1"))
    assert c["ideals_commute"] and c["ideals_simple"] and c["ideals_span"]


def test_h5_is_centralizer_and_right_type():
    assert span_equal(solve_constraint("h5").coords, h_right())
    assert span_equal(solve_constraint("h3").coords, h_left())


def test_presentations_match_constraints():
    res = explicit_presentations()
    assert set(res) == {"h1", "h2", "h3", "h4", "h5", "h6", "h7"}
    assert all(ok for _, ok in res.values())


def test_literal_h6_generators_do_not_give_h6():
    g2 = build_g2()
    gens = span_basis([g2.coords(D(I, x)) for x in C_PERP])
    assert len(gens) == 6
    assert all(g2.element(v).apply(I) for v in gens)
    assert not span_equal(gens, solve_constraint("h6").coords)


def test_h8_relations_and_action():
    assert all(h8_relations().values())
    h, _, _ = h8_generators()
    assert h.apply(J) == K
    assert h.apply(L) == IL * 2


def test_grading():
    ok, report = grading_check()
    assert ok, report
    even, odd = grading_parts()
    assert (len(even), len(odd)) == (6, 8)


@pytest.mark.parametrize("label", LABELS)
def test_reductive_complement(label):
    pair = reductive_complement(subalgebra(label))
    assert pair.dim_m == COMPLEMENT_DIMS[label]
    g2 = pair.sub.g2
    v = tuple(range(1, g2.dim + 1))
    hpart, mpart = pair.split(v)
    assert tuple(a + b for a, b in zip(hpart, mpart)) == v


def test_h1_complement_is_odd_part():
    assert span_equal(reductive_complement(subalgebra("h1")).complement, grading_parts()[1])


def test_known_intersections():
    assert intersection_dim(subalgebra("h3"), subalgebra("h5")) == 0
    assert intersection_dim(subalgebra("h2"), subalgebra("h1")) == 4


def test_unknown_label():
    with pytest.raises(KeyError):
        subalgebra("h9")
