"""Binary forms, transvectants, and the split g2 on ``V2 ⊕ V10``."""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from .exact_field import as_scalar, mpq
from .g2_core import LieAlgebra
from .linalg import Mat
from .representations import LYAlgebraData

ZERO = mpq(0)


class BinaryForm:
    """Homogeneous polynomial of degree ``n``; ``coeffs[k]`` multiplies ``X^k Y^(n-k)``."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=None):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        cs = [ZERO] * (degree + 1) if coeffs is None else [as_scalar(c) for c in coeffs]
        if len(cs) != degree + 1:
            raise ValueError(f"a form of degree {degree} has {degree + 1} coefficients")
        self.degree = degree
        self.coeffs = tuple(cs)

    @classmethod
    def monomial(cls, degree: int, k: int, c=1):
        """``c X^k Y^(degree-k)``."""
        cs = [ZERO] * (degree + 1)
        cs[k] = as_scalar(c)
        return cls(degree, cs)

    def __add__(self, other):
        self._same_degree(other)
        return BinaryForm(self.degree, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._same_degree(other)
        return BinaryForm(self.degree, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return BinaryForm(self.degree, [-a for a in self.coeffs])

    def __mul__(self, c):
        if isinstance(c, BinaryForm):
            out = [ZERO] * (self.degree + c.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(c.coeffs):
                        if b:
                            out[i + j] = out[i + j] + a * b
            return BinaryForm(self.degree + c.degree, out)
        c = as_scalar(c)
        return BinaryForm(self.degree, [a * c for a in self.coeffs])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, BinaryForm):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.degree, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def _same_degree(self, other):
        if self.degree != other.degree:
            raise ValueError("forms of different degree")

    def partial(self, dx: int, dy: int) -> "BinaryForm":
        """``∂^(dx+dy) / ∂X^dx ∂Y^dy``."""
        n = self.degree
        m = n - dx - dy
        if m < 0:
            return BinaryForm(0)
        out = [ZERO] * (m + 1)
        for k, c in enumerate(self.coeffs):
            if not c or k < dx or n - k < dy:
                continue
            f = factorial(k) // factorial(k - dx) * (factorial(n - k) // factorial(n - k - dy))
            out[k - dx] = out[k - dx] + c * f
        return BinaryForm(m, out)

    def __repr__(self):
        terms = []
        n = self.degree
        for k in range(n, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "".join(
                s for s in (_pow("X", k), _pow("Y", n - k)) if s
            )
            terms.append(mono if c == 1 and mono else (f"({c}){mono}" if mono else f"{c}"))
        return " + ".join(terms) or "0"


def _pow(v, e):
    return "" if e == 0 else (v if e == 1 else f"{v}^{e}")


def transvect(f: BinaryForm, g: BinaryForm, q: int) -> BinaryForm:
    """Transvectant ``(f, g)_q`` normalised by ``(n-q)!/n! (m-q)!/m!``."""
    n, m = f.degree, g.degree
    if not 0 <= q <= min(n, m):
        raise ValueError(f"transvectant order {q} out of range for degrees {n}, {m}")
    acc = BinaryForm(n + m - 2 * q)
    for i in range(q + 1):
        term = f.partial(q - i, i) * g.partial(i, q - i)
        c = comb(q, i)
        acc = acc + (term * (c if i % 2 == 0 else -c))
    return acc * mpq(factorial(n - q) * factorial(m - q), factorial(n) * factorial(m))


# ---------------------------------------------------------------------------
# split g2


V2_DIM = 3
V10_DIM = 11


def _basis_form(a: int) -> BinaryForm:
    if a < V2_DIM:
        return BinaryForm.monomial(2, a)
    return BinaryForm.monomial(10, a - V2_DIM)


def form_to_coords(f2: BinaryForm | None, f10: BinaryForm | None):
    a = f2.coeffs if f2 is not None else (ZERO,) * V2_DIM
    b = f10.coeffs if f10 is not None else (ZERO,) * V10_DIM
    return tuple(a) + tuple(b)


def coords_to_forms(v):
    return BinaryForm(2, v[:V2_DIM]), BinaryForm(10, v[V2_DIM:])


def split_bracket_forms(u: BinaryForm, v: BinaryForm):
    """Bracket of homogeneous elements as ``(V2 part, V10 part)``."""
    if u.degree == 2 and v.degree == 2:
        return transvect(u, v, 1), None
    if u.degree == 2 and v.degree == 10:
        return None, transvect(u, v, 1) * 5
    if u.degree == 10 and v.degree == 2:
        return None, transvect(v, u, 1) * -5
    if u.degree == 10 and v.degree == 10:
        return transvect(u, v, 9) * mpq(5, 378), transvect(u, v, 5)
    raise ValueError("elements must have degree 2 or 10")


class SplitG2(LieAlgebra):
    """``V2 ⊕ V10``; coordinates 0..2 are ``Y^2, XY, X^2`` and 3..13 are ``X^k Y^(10-k)``."""

    def __init__(self):
        n = V2_DIM + V10_DIM
        sc = [[None] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                sc[a][b] = form_to_coords(*split_bracket_forms(_basis_form(a), _basis_form(b)))
        names = [f"X^{k}Y^{2 - k}" for k in range(3)] + [f"X^{k}Y^{10 - k}" for k in range(11)]
        super().__init__(sc, names)

    def element(self, f: BinaryForm):
        if f.degree == 2:
            return form_to_coords(f, None)
        if f.degree == 10:
            return form_to_coords(None, f)
        raise ValueError("elements must have degree 2 or 10")

    def ad_h(self) -> Mat:
        """``ad(4XY)``."""
        return self.ad(self.element(BinaryForm.monomial(2, 1, 4)))


@lru_cache(maxsize=1)
def build_split_g2() -> SplitG2:
    return SplitG2()


def ad_h_spectrum_ok(alg: SplitG2) -> bool:
    """``ad(4XY)`` is diagonal with ``2-2k`` on V2 and ``10-2k`` on V10."""
    m = alg.ad_h()
    expect = [2 - 2 * k for k in range(3)] + [10 - 2 * k for k in range(11)]
    n = alg.dim
    return all(m[i, j] == (expect[i] if i == j else 0) for i in range(n) for j in range(n))


# ---------------------------------------------------------------------------
# Lie-Yamaguti structure on V10


def _check10(*fs):
    if any(f.degree != 10 for f in fs):
        raise ValueError("Lie-Yamaguti products are defined on forms of degree 10")


def ly_products_v10(f1: BinaryForm, f2: BinaryForm, f3: BinaryForm):
    """``(f1 • f2, [f1, f2, f3])``."""
    _check10(f1, f2, f3)
    binary = transvect(f1, f2, 5)
    ternary = transvect(transvect(f1, f2, 9), f3, 1) * mpq(25, 378)
    return binary, ternary


def ly_projection_consistent(f1, f2, f3) -> bool:
    """Products agree with the V10 and V2 components of the split bracket."""
    binary, ternary = ly_products_v10(f1, f2, f3)
    p2, p10 = split_bracket_forms(f1, f2)
    _, t = split_bracket_forms(p2, f3)
    return binary == p10 and ternary == t


def jacobian_sum(f1, f2, f3) -> BinaryForm:
    """``(25/378) Σ_cyc ((f_i, f_{i+1})_9, f_{i+2})_1``."""
    fs = (f1, f2, f3)
    acc = BinaryForm(10)
    for i in range(3):
        acc = acc + transvect(transvect(fs[i], fs[(i + 1) % 3], 9), fs[(i + 2) % 3], 1)
    return acc * mpq(25, 378)


@lru_cache(maxsize=1)
def ly_algebra_v10() -> LYAlgebraData:
    n = V10_DIM
    basis = [BinaryForm.monomial(10, k) for k in range(n)]
    binary = [[transvect(basis[a], basis[b], 5).coeffs for b in range(n)] for a in range(n)]
    theta = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            g = transvect(basis[a], basis[b], 9) * mpq(25, 378)
            theta[a][b] = Mat.from_columns([transvect(g, basis[c], 1).coeffs for c in range(n)])
    return LYAlgebraData(binary, theta)


def ly_axioms_v10():
    return ly_algebra_v10().check_axioms()


__all__ = [
    "BinaryForm",
    "transvect",
    "SplitG2",
    "build_split_g2",
    "split_bracket_forms",
    "form_to_coords",
    "coords_to_forms",
    "ad_h_spectrum_ok",
    "ly_products_v10",
    "ly_projection_consistent",
    "jacobian_sum",
    "ly_algebra_v10",
    "ly_axioms_v10",
]
