import pytest
from hypothesis import given, strategies as st

from g2forge.exact_field import mpq
from g2forge.octonion import (
    CD_TABLE,
    DICTIONARY,
    E,
    E_TABLE,
    I,
    IL,
    IMAGINARY_BASIS,
    J,
    JL,
    K,
    KL,
    L,
    ONE,
    Octonion,
    associator,
    commutator,
    cross,
    inner,
    omega,
)

octonions = st.lists(st.integers(-3, 3), min_size=8, max_size=8).map(lambda c: Octonion([mpq(x) for x in c]))


def test_dictionary_is_frozen():
    assert DICTIONARY == ((1, 0), (1, 1), (1, 2), (1, 4), (1, 3), (1, 7), (1, 5), (-1, 6))


def test_index_rule_and_doubling_tables_agree():
    # named-basis doubling table, transported through the dictionary
    for a in range(8):
        for b in range(8):
            s, c = CD_TABLE[a, b]
            (sa, ea), (sb, eb), (sc, ec) = DICTIONARY[a], DICTIONARY[b], DICTIONARY[c]
            es, e = E_TABLE[ea, eb]
            assert (e, sa * sb * es) == (ec, s * sc)


def test_index_rule():
    for n in range(7):
        a, b, c = n + 1, (n + 1) % 7 + 1, (n + 3) % 7 + 1
        assert E[a] * E[b] == E[c]


def test_named_products():
    assert I * J == K
    assert J * I == -K
    assert JL * IL == K
    assert I * L == IL
    assert L * L == -ONE


def test_associator_value():
    assert associator(I, J, L) == KL * 2


def test_quaternions_associate():
    for x in (I, J, K):
        for y in (I, J, K):
            for z in (I, J, K):
                assert not associator(x, y, z)


@given(octonions, octonions)
def test_alternative(x, y):
    assert (x * x) * y == x * (x * y)
    assert (y * x) * x == y * (x * x)
    assert (x * y) * x == x * (y * x)


@given(octonions, octonions)
def test_norm_multiplicative(x, y):
    assert (x * y).norm() == x.norm() * y.norm()
    assert (x * y).conj() == y.conj() * x.conj()


@given(octonions)
def test_conjugation(x):
    assert x * x.conj() == ONE.scale(x.norm())
    assert x + x.conj() == ONE.scale(x.trace())


def test_cross_and_omega():
    assert cross(I, J) == K
    assert omega(I, J, K) == 1
    assert omega(I, J, L) == 0
    for x in IMAGINARY_BASIS:
        for y in IMAGINARY_BASIS:
            assert inner(cross(x, y), x) == 0
            assert commutator(x, y) == cross(x, y) * 2


def test_named_constructor():
    x = Octonion.named(one=1, kl=2)
    assert x.named_coords()[0] == 1 and x.named_coords()[7] == 2
    with pytest.raises((KeyError, TypeError, ValueError)):
        Octonion.named(m=1)


def test_split_join():
    x = Octonion.named(i=1, jl=3)
    q1, q2 = x.split()
    assert Octonion.join(q1, q2) == x
