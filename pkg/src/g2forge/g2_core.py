"""Derivations of the octonions and the compact Lie algebra g2.

Linear maps on the imaginary octonions are 7x7 matrices acting on
coordinate columns with respect to ``e1, ..., e7``.  Operators on the whole
of O (left/right multiplications, automorphisms) are 8x8 with index 0 for
the unit.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import combinations

from .exact_field import as_scalar, char_poly, mpq
from .linalg import CoordinateSystem, Mat, dot, is_independent, leading_minors, lin_comb, rank, signature
from .octonion import (
    E,
    I,
    IMAGINARY_BASIS,
    Octonion,
    associator,
    commutator,
    imaginary,
    omega,
    qmul,
)

ZERO = mpq(0)


class LinearMap7(Mat):
    """Endomorphism of O_0; extended to O by killing 1 when applied."""

    @classmethod
    def from_function(cls, f):
        cols = [f(e).imag_vector() for e in IMAGINARY_BASIS]
        for e, c in zip(IMAGINARY_BASIS, cols):
            if f(e).real():
                raise ValueError("map does not preserve O_0")
        return cls.from_columns(cols)

    def apply(self, x: Octonion) -> Octonion:
        return imaginary(self @ x.imag_vector())

    __call__ = apply

    def extend8(self) -> Mat:
        rows = [(ZERO,) * 8] + [(ZERO,) + r for r in self.rows]
        return Mat._raw(tuple(rows))


def operator8(f) -> Mat:
    """8x8 matrix of a linear map ``f`` on O."""
    return Mat.from_columns([f(e).coords for e in E])


def apply8(m: Mat, x: Octonion) -> Octonion:
    return Octonion._raw(m @ x.coords)


def restrict7(m: Mat) -> LinearMap7:
    """Restriction of an 8x8 operator that kills 1 and preserves O_0."""
    if any(m.rows[0]) or any(r[0] for r in m.rows):
        raise ValueError("operator does not kill 1 and preserve O_0")
    return LinearMap7._raw(tuple(r[1:] for r in m.rows[1:]))


def left_right_mult(x: Octonion):
    """``(L_x, R_x)`` as 8x8 operators on O."""
    return operator8(lambda y: x * y), operator8(lambda y: y * x)


def D(x: Octonion, y: Octonion) -> LinearMap7:
    """``[L_x, L_y] + [L_x, R_y] + [R_x, R_y]`` restricted to O_0."""
    lx, rx = left_right_mult(x)
    ly, ry = left_right_mult(y)
    return restrict7(lx.bracket(ly) + lx.bracket(ry) + rx.bracket(ry))


def D_pointwise(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return commutator(z, commutator(x, y)) - associator(x, z, y).scale(3)


def _as_function(d):
    if isinstance(d, LinearMap7) or (isinstance(d, Mat) and d.shape == (7, 7)):
        m = d if isinstance(d, LinearMap7) else LinearMap7._raw(d.rows)
        return m.apply, IMAGINARY_BASIS
    if isinstance(d, Mat) and d.shape == (8, 8):
        return (lambda x: apply8(d, x)), E
    raise ValueError("expected a 7x7 or 8x8 matrix")


def is_derivation(d) -> bool:
    """Leibniz rule on basis pairs.  7x7 input is extended by ``d(1) = 0``."""
    f, basis = _as_function(d)
    for x in basis:
        fx = f(x)
        for y in basis:
            if f(x * y) != fx * y + x * f(y):
                return False
    return True


def preserves_omega(d) -> bool:
    """``Omega(dx,y,z) + Omega(x,dy,z) + Omega(x,y,dz) = 0`` on basis triples."""
    if d.shape != (7, 7):
        return False
    m = d if isinstance(d, LinearMap7) else LinearMap7._raw(d.rows)
    imgs = [m.apply(x) for x in IMAGINARY_BASIS]
    b = IMAGINARY_BASIS
    for p, q, r in combinations(range(7), 3):
        s = omega(imgs[p], b[q], b[r]) + omega(b[p], imgs[q], b[r]) + omega(b[p], b[q], imgs[r])
        if s:
            return False
    # diagonal triples are covered by skewness of the induced form
    for p in range(7):
        for q in range(7):
            if omega(imgs[p], b[p], b[q]) + omega(b[p], imgs[p], b[q]):
                return False
    return True


# ---------------------------------------------------------------------------
# quaternionic derivations and the automorphism tau


def _check_h0(a: Octonion):
    q1, q2 = a.split()
    if q1[0] or any(q2):
        raise ValueError("argument must lie in H_0 = span{i, j, k}")
    return q1


def d_left_right(a: Octonion):
    """``(d_a^l, d_a^r)`` for ``a`` in span{i, j, k}.

    ``d_a^l(q1 + q2 l) = (a q2) l`` and ``d_a^r(q1 + q2 l) = [q1, a] + (q2 a) l``.
    On ``H l`` these are ``R_l L_a R_l^-1`` and ``R_l R_a R_l^-1``; the sign
    on ``H`` is the one making ``d_a^r`` a derivation for this product.
    """
    qa = _check_h0(a)

    def dl(x):
        q1, q2 = x.split()
        return Octonion.join((ZERO,) * 4, qmul(qa, q2))

    def dr(x):
        q1, q2 = x.split()
        c = tuple(u - v for u, v in zip(qmul(q1, qa), qmul(qa, q1)))
        return Octonion.join(c, qmul(q2, qa))

    return LinearMap7.from_function(dl), LinearMap7.from_function(dr)


def d_left(a):
    return d_left_right(a)[0]


def d_right(a):
    return d_left_right(a)[1]


@lru_cache(maxsize=1)
def tau() -> Mat:
    """``q1 + q2 l -> q1 + (i q2) l`` as an 8x8 operator."""
    qi = I.split()[0]

    def f(x):
        q1, q2 = x.split()
        return Octonion.join(q1, qmul(qi, q2))

    return operator8(f)


def tau7() -> LinearMap7:
    t = tau()
    return LinearMap7._raw(tuple(r[1:] for r in t.rows[1:]))


def is_automorphism8(f: Mat) -> bool:
    for x in E:
        fx = apply8(f, x)
        for y in E:
            if apply8(f, x * y) != fx * apply8(f, y):
                return False
    return apply8(f, E[0]) == E[0]


def invariance_check(d: LinearMap7, x: Octonion, y: Octonion) -> bool:
    """``[d, D_{x,y}] = D_{d(x),y} + D_{x,d(y)}`` as matrices."""
    return d.bracket(D(x, y)) == D(d.apply(x), y) + D(x, d.apply(y))


# ---------------------------------------------------------------------------
# abstract Lie algebras given by structure constants


class LieAlgebra:
    """Lie algebra on coordinate vectors with ``[b_a, b_b] = sum_c sc[a][b][c] b_c``."""

    def __init__(self, sc, names=None):
        self.sc = sc
        self.dim = len(sc)
        self.names = names or [f"b{a}" for a in range(self.dim)]

    def bracket(self, u, v):
        n = self.dim
        out = [ZERO] * n
        for a in range(n):
            ua = u[a]
            if not ua:
                continue
            row = self.sc[a]
            for b in range(n):
                vb = v[b]
                if not vb:
                    continue
                c = ua * vb
                for k, s in enumerate(row[b]):
                    if s:
                        out[k] = out[k] + c * s
        return tuple(out)

    def unit(self, a):
        return tuple(mpq(1) if t == a else ZERO for t in range(self.dim))

    def ad(self, u) -> Mat:
        return Mat.from_columns([self.bracket(u, self.unit(b)) for b in range(self.dim)])

    @cached_property
    def ad_basis(self):
        return [Mat.from_columns([self.sc[a][b] for b in range(self.dim)]) for a in range(self.dim)]

    @cached_property
    def killing(self) -> Mat:
        ads = self.ad_basis
        n = self.dim
        rows = [[ZERO] * n for _ in range(n)]
        for a in range(n):
            for b in range(a, n):
                t = _trace_product(ads[a], ads[b])
                rows[a][b] = rows[b][a] = t
        return Mat(rows)

    def killing_form(self, u, v):
        return dot(u, self.killing @ v)

    def jacobi_failures(self):
        """Basis triples ``a < b < c`` whose Jacobi sum is nonzero."""
        bad = []
        for a, b, c in combinations(range(self.dim), 3):
            x, y, z = self.unit(a), self.unit(b), self.unit(c)
            s = [
                p + q + r
                for p, q, r in zip(
                    self.bracket(x, self.bracket(y, z)),
                    self.bracket(y, self.bracket(z, x)),
                    self.bracket(z, self.bracket(x, y)),
                )
            ]
            if any(s):
                bad.append((a, b, c))
        return bad

    def is_antisymmetric(self) -> bool:
        return all(
            self.sc[a][b] == tuple(-x for x in self.sc[b][a]) for a in range(self.dim) for b in range(self.dim)
        )

    def killing_signature(self):
        return signature(self.killing)

    def is_negative_definite(self) -> bool:
        """Leading principal minors of the Killing matrix alternate in sign."""
        from .linalg import is_positive

        for k, m in enumerate(leading_minors(self.killing), start=1):
            if not m or is_positive(m) != (k % 2 == 0):
                return False
        return True

    def ideal_closure(self, vectors):
        """Smallest ideal containing ``vectors`` (as a spanning list)."""
        span = [tuple(v) for v in vectors if any(v)]
        if not span:
            return []
        cs = _Span(span)
        queue = list(cs.basis)
        while queue:
            v = queue.pop()
            for a in range(self.dim):
                w = self.bracket(self.unit(a), v)
                if any(w) and cs.add(w):
                    queue.append(w)
        return cs.basis

    def is_simple(self) -> bool:
        return self.dim > 1 and all(len(self.ideal_closure([self.unit(a)])) == self.dim for a in range(self.dim))

    def derived_dim(self) -> int:
        vs = [self.sc[a][b] for a in range(self.dim) for b in range(a + 1, self.dim)]
        vs = [v for v in vs if any(v)]
        return rank(vs, self.dim) if vs else 0

    def center_dim(self) -> int:
        from .linalg import nullspace

        rows = []
        for b in range(self.dim):
            # row block: coefficients of [u, b_b] in each output coordinate
            for k in range(self.dim):
                rows.append(tuple(self.sc[a][b][k] for a in range(self.dim)))
        rows = [r for r in rows if any(r)]
        return len(nullspace(rows, self.dim)) if rows else self.dim


def _trace_product(a: Mat, b: Mat):
    acc = ZERO
    br = b.rows
    n = a.nrows
    for i in range(n):
        ai = a.rows[i]
        for k in range(n):
            x = ai[k]
            if x:
                y = br[k][i]
                if y:
                    acc = acc + x * y
    return acc


class _Span:
    """Incrementally grown span with membership tests."""

    def __init__(self, vectors):
        self.basis = []
        for v in vectors:
            self.add(v)

    def add(self, v) -> bool:
        v = tuple(v)
        if not self.basis:
            if any(v):
                self.basis.append(v)
                return True
            return False
        if rank(self.basis + [v]) > len(self.basis):
            self.basis.append(v)
            return True
        return False


# ---------------------------------------------------------------------------
# g2 = der(O)


class G2Algebra(LieAlgebra):
    """der(O) with a basis of 14 operators ``D_{e_a,e_b}`` chosen greedily."""

    def __init__(self, basis, labels):
        self.basis = list(basis)
        self.labels = labels
        self.cs = CoordinateSystem([m.flat() for m in self.basis])
        n = len(self.basis)
        sc = [[None] * n for _ in range(n)]
        for a in range(n):
            sc[a][a] = (ZERO,) * n
            for b in range(a + 1, n):
                c = self.coords(self.basis[a].bracket(self.basis[b]))
                sc[a][b] = c
                sc[b][a] = tuple(-x for x in c)
        super().__init__(sc, names=[f"D_{{e{p},e{q}}}" for p, q in labels])

    def coords(self, m: Mat):
        return self.cs.coords(m.flat())

    def contains(self, m: Mat) -> bool:
        return self.cs.contains(m.flat())

    def element(self, c) -> LinearMap7:
        flat = lin_comb(c, [m.flat() for m in self.basis])
        return LinearMap7._raw(tuple(tuple(flat[7 * i : 7 * i + 7]) for i in range(7)))

    @cached_property
    def trace_form(self) -> Mat:
        """``tr(u v)`` on O_0 for basis elements."""
        n = self.dim
        return Mat([[_trace_product(self.basis[a], self.basis[b]) for b in range(n)] for a in range(n)])

    @cached_property
    def killing_ratio(self):
        """The constant ``c`` with ``killing = c * trace_form``."""
        k, t = self.killing, self.trace_form
        c = k[0, 0] / t[0, 0]
        if k != t * c:
            raise AssertionError("Killing form is not proportional to the trace form")
        return as_scalar(c)

    def char_poly_on_o0(self, c):
        return char_poly(self.element(c).rows)


@lru_cache(maxsize=1)
def build_g2() -> G2Algebra:
    basis, labels = [], []
    for p, q in combinations(range(1, 8), 2):
        d = D(E[p], E[q])
        if is_independent([m.flat() for m in basis] + [d.flat()]):
            basis.append(d)
            labels.append((p, q))
        if len(basis) == 14:
            break
    if len(basis) != 14:
        raise RuntimeError(f"rank deficiency: found {len(basis)} independent derivations")
    return G2Algebra(basis, labels)


__all__ = [
    "LinearMap7",
    "LieAlgebra",
    "G2Algebra",
    "operator8",
    "apply8",
    "restrict7",
    "left_right_mult",
    "D",
    "D_pointwise",
    "is_derivation",
    "preserves_omega",
    "d_left_right",
    "d_left",
    "d_right",
    "tau",
    "tau7",
    "is_automorphism8",
    "invariance_check",
    "build_g2",
]
