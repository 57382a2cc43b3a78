import copy
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from g2forge import _kernels_py
from g2forge.exact_field import SQRT15, mpq
from g2forge.linalg import (
    CoordinateSystem,
    Mat,
    det,
    intersect,
    invert,
    nullspace,
    rank,
    rref,
    signature,
    solve,
    span_equal,
)

small = st.integers(-4, 4)


def matrices(n, m):
    return st.lists(st.lists(small, min_size=m, max_size=m), min_size=n, max_size=n)


def _q(x):
    return mpq(int(x.p), int(x.q))


@given(matrices(4, 6))
def test_rref_matches_sympy(rows):
    r, pivots, red = rref(rows, 6)
    ref, ref_piv = sympy.Matrix(rows).rref()
    assert r == len(ref_piv)
    assert tuple(pivots) == tuple(ref_piv)
    assert [tuple(row) for row in red] == [tuple(_q(x) for x in ref.row(i)) for i in range(r)]


@given(matrices(4, 4))
def test_det_matches_sympy(rows):
    assert det(rows) == int(sympy.Matrix(rows).det())


@given(matrices(3, 5))
def test_nullspace_is_kernel(rows):
    ker = nullspace(rows, 5)
    assert len(ker) == 5 - rank(rows, 5)
    for v in ker:
        assert all(sum(a * x for a, x in zip(row, v)) == 0 for row in rows)


def test_quadratic_entries():
    m = [[1, SQRT15], [SQRT15, 15]]
    assert rank(m, 2) == 1
    assert det(m) == 0
    inv = invert([[1, SQRT15], [0, 1]])
    assert Mat(inv) @ Mat([[1, SQRT15], [0, 1]]) == Mat.identity(2)


def test_solve_and_coordinates():
    a = [[1, 2], [3, 4]]
    assert solve(a, [5, 6]) == (mpq(-4), mpq(9, 2))
    assert solve([[1, 1], [1, 1]], [0, 1]) is None
    cs = CoordinateSystem([(1, 0, 1), (0, 1, 1)])
    assert cs.coords((2, 3, 5)) == (2, 3)
    with pytest.raises(ValueError):
        cs.coords((1, 0, 0))


def test_intersection_and_span_equal():
    u = [(1, 0, 0), (0, 1, 0)]
    v = [(0, 1, 0), (0, 0, 1)]
    assert span_equal(intersect(u, v, 3), [(0, 1, 0)])


def test_signature():
    assert signature(Mat([[1, 0, 0], [0, -2, 0], [0, 0, 0]])) == (1, 1, 1)
    assert signature(Mat([[0, 1], [1, 0]])) == (1, 1, 0)


def test_compiled_kernel_matches_python():
    kernels = pytest.importorskip("g2forge._kernels")
    rng = random.Random(1)
    for n in (3, 7, 12):
        for quad in (False, True):
            a = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
            b = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)] if quad else None
            a1, b1 = copy.deepcopy(a), copy.deepcopy(b)
            a2, b2 = copy.deepcopy(a), copy.deepcopy(b)
            assert _kernels_py.ff_gauss_jordan(a1, b1, n) == kernels.ff_gauss_jordan(a2, b2, n)
            assert (a1, b1) == (a2, b2)


@settings(max_examples=30)
@given(matrices(5, 5))
def test_fallback_kernel_rank_matches_sympy(rows):
    a = copy.deepcopy(rows)
    r = _kernels_py.ff_gauss_jordan(a, None, 5)[0]
    assert r == sympy.Matrix(rows).rank()


def test_fallback_selected_without_extension():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['g2forge._kernels'] = None\n"
        "import g2forge\n"
        "from g2forge.linalg import rank\n"
        "print(g2forge.BACKEND, rank([[1, 2], [2, 4]]))"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True).stdout
    assert out.split() == ["python", "1"]
