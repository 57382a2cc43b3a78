"""Representation theory of the subalgebras: commutants, sl2 weights,
Dynkin indices, characteristic coefficients and Lie-Yamaguti algebras.

Dynkin index normalisation
--------------------------
For a three-dimensional simple subalgebra ``s`` let ``h'`` be the element
with ``ad_s h'`` having characteristic polynomial ``λ(λ²+4)``, so ``-i h'`` is
the semisimple element of a standard triple.  On a module ``V`` where
``h'`` has eigenvalues ``±ik`` with multiplicities ``m_k``, the restricted
representation has index ``Σ_k m_k k² = Σ_{V(n)} n(n+1)(n+2)/6`` relative
to sl2.  The seven-dimensional representation of g2 has index 2 (and the
adjoint has index 8), hence::

    j(s) = Σ_k m_k k² / 2 = -tr_7(h'²) / 4

with ``m_k`` read off on O_0.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property

from .exact_field import LAMBDA, QuadScalar, UniPoly, as_scalar, char_poly, factor_weights, mpq
from .linalg import CoordinateSystem, Mat, rank, solve, span_basis
from .subalgebras import ReductivePair, Subalgebra

ZERO = mpq(0)
SL2_ADJOINT_POLY = LAMBDA * UniPoly([4, 0, 1])
O0_INDEX = 2
ADJOINT_INDEX = 8


# ---------------------------------------------------------------------------
# commutants


@dataclass
class ActionSpace:
    generators: list
    dim: int


def commutant_dim(a) -> int:
    """Dimension of ``{T : T g = g T for every generator g}``."""
    if isinstance(a, ActionSpace):
        gens, n = a.generators, a.dim
    else:
        gens = list(a)
        n = gens[0].nrows
    rows = []
    for g in gens:
        gr = g.rows
        for i in range(n):
            for j in range(n):
                row = [ZERO] * (n * n)
                # (T g)_{ij} = sum_k T_{ik} g_{kj}
                for k in range(n):
                    if gr[k][j]:
                        row[i * n + k] = row[i * n + k] + gr[k][j]
                # (g T)_{ij} = sum_k g_{ik} T_{kj}
                for k in range(n):
                    if gr[i][k]:
                        row[k * n + j] = row[k * n + j] - gr[i][k]
                if any(row):
                    rows.append(tuple(row))
    if not rows:
        return n * n
    return n * n - rank(rows, n * n)


def action_on_o0(s: Subalgebra) -> ActionSpace:
    return ActionSpace(list(s.basis), 7)


def action_on_g2(s: Subalgebra) -> ActionSpace:
    return ActionSpace([s.g2.ad(c) for c in s.coords], s.g2.dim)


def action_on_complement(p: ReductivePair) -> ActionSpace:
    g2 = p.sub.g2
    cs = CoordinateSystem(p.complement)
    mats = []
    for u in p.sub.coords:
        cols = [cs.coords(g2.bracket(u, v)) for v in p.complement]
        mats.append(Mat.from_columns(cols))
    return ActionSpace(mats, p.dim_m)


# ---------------------------------------------------------------------------
# sl2 weights


class RepresentationError(ValueError):
    pass


def _distinguished(label):
    from .g2_core import d_left, d_right
    from .octonion import I
    from .subalgebras import h8_generators

    if label == "h3":
        return d_left(I)
    if label == "h5":
        return d_right(I)
    if label == "h7":
        return d_left(I) - d_right(I)
    if label == "h8":
        return h8_generators()[0] * 2
    return None


def _ad_local(s: Subalgebra, local):
    return s.algebra.ad(local)


def normalized_h(s: Subalgebra):
    """g2-coordinates of ``h'`` in ``s`` with ``ad_s`` char poly ``λ(λ²+4)``."""
    if s.dim != 3:
        raise RepresentationError(f"{s.label} is not three-dimensional")
    cands = []
    d = _distinguished(s.label)
    if d is not None and s.g2.contains(d):
        cands.append(s.g2.coords(d))
    for c in s.coords:
        # rescale so that ad has eigenvalues 0, ±2i when the ratio is a rational square
        p = char_poly(_ad_local(s, s.local_coords(c)).rows)
        if p.degree == 3 and not p.coeffs[0] and not p.coeffs[2] and p.coeffs[1]:
            r = _rational_sqrt(mpq(4) / p.coeffs[1]) if not isinstance(p.coeffs[1], QuadScalar) else None
            if r is not None:
                cands.append(tuple(x * r for x in c))
    for c in cands:
        if s.contains(c) and char_poly(_ad_local(s, s.local_coords(c)).rows) == SL2_ADJOINT_POLY:
            return c
    raise RepresentationError("no normalized element found")


def _rational_sqrt(q):
    from gmpy2 import is_square, isqrt

    q = mpq(q)
    if q <= 0:
        return None
    n, d = int(q.numerator), int(q.denominator)
    if is_square(n) and is_square(d):
        return mpq(int(isqrt(n)), int(isqrt(d)))
    return None


@dataclass
class Sl2Decomposition:
    summands: list  # highest weights n of V(n), descending
    m0: int = 0
    weights: dict = field(default_factory=dict)  # k -> multiplicity of the pair ±k

    @property
    def dim(self):
        return sum(n + 1 for n in self.summands)

    def counter(self):
        return Counter(self.summands)

    def __str__(self):
        cnt = self.counter()
        order = sorted((n for n in cnt if n), key=int) + ([0] if 0 in cnt else [])
        return " ⊕ ".join(f"{cnt[n] if cnt[n] > 1 else ''}V({n})" for n in order)


def peel_weights(m0: int, mult: dict) -> list:
    """Summands ``V(n)`` from the weight multiset, largest weight first."""
    w = Counter({0: m0})
    for k, m in mult.items():
        w[k] += m
        w[-k] += m
    out = []
    while +w:
        n = max(k for k, c in w.items() if c > 0)
        for t in range(-n, n + 1, 2):
            if w[t] <= 0:
                raise RepresentationError("inconsistent weights")
            w[t] -= 1
        out.append(n)
    return out


def decompose_operator(m: Mat) -> Sl2Decomposition:
    m0, mult = factor_weights(char_poly(m.rows))
    return Sl2Decomposition(peel_weights(m0, mult), m0, dict(mult))


def sl2_decompose(s: Subalgebra, space: str) -> Sl2Decomposition:
    h = normalized_h(s)
    if space in ("o0", "O0"):
        return decompose_operator(s.g2.element(h))
    if space in ("g2", "adjoint"):
        return decompose_operator(s.g2.ad(h))
    raise ValueError(f"unknown space {space!r}; expected 'o0' or 'g2'")


def centralizer_dims(dec: Sl2Decomposition):
    """``(dim z(e), dim z(h))`` for the nilpotent of the triple."""
    return len(dec.summands), sum(1 for n in dec.summands if n % 2 == 0)


# ---------------------------------------------------------------------------
# Dynkin index


def vn_index(n: int) -> int:
    return n * (n + 1) * (n + 2) // 6


def dynkin_index(s: Subalgebra):
    h = s.g2.element(normalized_h(s))
    _, mult = factor_weights(char_poly(h.rows))
    return mpq(sum(m * k * k for k, m in mult.items()), O0_INDEX)


def dynkin_index_trace(s: Subalgebra):
    """Oracle: ``-tr_7(h'²) / 4``."""
    h = s.g2.element(normalized_h(s))
    return as_scalar(-(h @ h).trace() / 4)


def dynkin_index_modules(s: Subalgebra, space: str = "o0"):
    """Oracle: V(n) indices summed over a module decomposition."""
    dec = sl2_decompose(s, space)
    ref = O0_INDEX if space == "o0" else ADJOINT_INDEX
    return mpq(sum(vn_index(n) for n in dec.summands), ref)


# ---------------------------------------------------------------------------
# characteristic coefficients


def principal_coeffs(cartan):
    """Solution ``c`` of ``C c = (2, ..., 2)``."""
    rows = [tuple(mpq(x) for x in r) for r in cartan]
    n = len(rows)
    if any(len(r) != n for r in rows) or rank(rows, n) < n:
        raise ValueError("singular Cartan matrix")
    c = solve(rows, [2] * n)
    return tuple(c)


def cartan_matrix(kind: str, n: int):
    """Cartan matrices of types A, B, C, D, G2, F4 (Bourbaki numbering)."""
    m = [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]
    if kind == "A":
        return m
    if kind == "B" and n >= 2:
        m[n - 2][n - 1] = -2
        return m
    if kind == "C" and n >= 2:
        m[n - 1][n - 2] = -2
        return m
    if kind == "D" and n >= 4:
        m[n - 2][n - 1] = m[n - 1][n - 2] = 0
        m[n - 3][n - 1] = m[n - 1][n - 3] = -1
        return m
    if kind == "G" and n == 2:
        return [[2, -1], [-3, 2]]
    if kind == "F" and n == 4:
        return [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    raise ValueError(f"no Cartan matrix of type {kind}{n}")


# ---------------------------------------------------------------------------
# Lie-Yamaguti algebras


AXIOMS = (
    "x∘x=0",
    "[x,x,y]=0",
    "cyclic",
    "cyclic ternary of binary",
    "ternary derivation of binary",
    "ternary derivation of ternary",
)


class LYAlgebraData:
    """Binary-ternary algebra on coordinates ``0..n-1``.

    ``binary[a][b]`` is ``b_a ∘ b_b`` and ``theta[a][b]`` the matrix of
    ``z -> [b_a, b_b, z]``.
    """

    def __init__(self, binary, theta, space=None):
        self.binary = binary
        self.theta = theta
        self.n = len(binary)
        self.space = space

    def unit(self, a):
        return tuple(mpq(1) if t == a else ZERO for t in range(self.n))

    def bin(self, u, v):
        out = [ZERO] * self.n
        for a, x in enumerate(u):
            if not x:
                continue
            for b, y in enumerate(v):
                if y:
                    c = x * y
                    for k, s in enumerate(self.binary[a][b]):
                        if s:
                            out[k] = out[k] + c * s
        return tuple(out)

    def theta_of(self, u, v) -> Mat:
        n = self.n
        acc = [[ZERO] * n for _ in range(n)]
        for a, x in enumerate(u):
            if not x:
                continue
            for b, y in enumerate(v):
                if not y:
                    continue
                c = x * y
                t = self.theta[a][b].rows
                for i in range(n):
                    ti, ai = t[i], acc[i]
                    for j in range(n):
                        if ti[j]:
                            ai[j] = ai[j] + c * ti[j]
        return Mat(acc)

    def ternary(self, u, v, w):
        return self.theta_of(u, v) @ tuple(w)

    def is_binary_zero(self) -> bool:
        return not any(x for row in self.binary for v in row for x in v)

    @cached_property
    def theta_span(self):
        """Basis of span{theta(x, y)} as matrices."""
        flats = [self.theta[a][b].flat() for a in range(self.n) for b in range(a + 1, self.n)]
        flats = [f for f in flats if any(f)]
        if not flats:
            return []
        n = self.n
        return [Mat([f[i * n : (i + 1) * n] for i in range(n)]) for f in span_basis(flats)]

    def check_axioms(self):
        """``{axiom: (ok, first counterexample or None)}`` over basis tuples."""
        n = self.n
        res = {}
        res[AXIOMS[0]] = self._first(
            ((a, b) for a in range(n) for b in range(a, n)),
            lambda a, b: any(self.binary[a][a]) if a == b else any(
                x + y for x, y in zip(self.binary[a][b], self.binary[b][a])
            ),
        )
        res[AXIOMS[1]] = self._first(
            ((a, b) for a in range(n) for b in range(a, n)),
            lambda a, b: not self.theta[a][a].is_zero() if a == b else not (self.theta[a][b] + self.theta[b][a]).is_zero(),
        )
        units = [self.unit(a) for a in range(n)]

        def cyc(a, b, c):
            x, y, z = units[a], units[b], units[c]
            tot = [ZERO] * n
            for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
                t = self.ternary(p, q, r)
                s = self.bin(self.bin(p, q), r)
                tot = [u + v + w for u, v, w in zip(tot, t, s)]
            return any(tot)

        # cyclic sums of maps alternating in two slots are alternating, so
        # (given the first two axioms) increasing triples suffice
        res[AXIOMS[2]] = self._first(
            ((a, b, c) for a in range(n) for b in range(a + 1, n) for c in range(b + 1, n)), cyc
        )

        def cyc_theta(a, b, c):
            x, y, z = units[a], units[b], units[c]
            m = self.theta_of(self.bin(x, y), z) + self.theta_of(self.bin(y, z), x) + self.theta_of(self.bin(z, x), y)
            return not m.is_zero()

        res[AXIOMS[3]] = self._first(
            ((a, b, c) for a in range(n) for b in range(a + 1, n) for c in range(b + 1, n)), cyc_theta
        )
        ops = self.theta_span

        def der_bin(k, a, b):
            p = ops[k]
            u, v = units[a], units[b]
            lhs = p @ self.bin(u, v)
            rhs = [x + y for x, y in zip(self.bin(p @ u, v), self.bin(u, p @ v))]
            return tuple(lhs) != tuple(rhs)

        res[AXIOMS[4]] = self._first(
            ((k, a, b) for k in range(len(ops)) for a in range(n) for b in range(a + 1, n)), der_bin
        )

        def der_tern(k, a, b):
            p = ops[k]
            u, v = units[a], units[b]
            lhs = p.bracket(self.theta[a][b])
            rhs = self.theta_of(p @ u, v) + self.theta_of(u, p @ v)
            return lhs != rhs

        res[AXIOMS[5]] = self._first(
            ((k, a, b) for k in range(len(ops)) for a in range(n) for b in range(a + 1, n)), der_tern
        )
        return res

    @staticmethod
    def _first(cases, bad):
        for case in cases:
            if bad(*case):
                return False, case
        return True, None

    def axioms_hold(self) -> bool:
        return all(ok for ok, _ in self.check_axioms().values())


def lie_yamaguti_from_pair(p: ReductivePair) -> LYAlgebraData:
    g2 = p.sub.g2
    m = p.complement
    cs = CoordinateSystem(p.sub.coords + m)
    k = p.sub.dim
    n = len(m)
    mcs = CoordinateSystem(m)
    ad_m = []
    for u in p.sub.coords:
        ad_m.append(Mat.from_columns([mcs.coords(g2.bracket(u, v)) for v in m]))
    binary = [[None] * n for _ in range(n)]
    theta = [[None] * n for _ in range(n)]
    zero_mat = Mat.zeros(n)
    for a in range(n):
        binary[a][a] = (ZERO,) * n
        theta[a][a] = zero_mat
        for b in range(a + 1, n):
            c = cs.coords(g2.bracket(m[a], m[b]))
            hpart, mpart = c[:k], tuple(c[k:])
            binary[a][b] = mpart
            binary[b][a] = tuple(-x for x in mpart)
            t = zero_mat
            for coef, mat in zip(hpart, ad_m):
                if coef:
                    t = t + mat * coef
            theta[a][b] = t
            theta[b][a] = -t
    return LYAlgebraData(binary, theta, space=m)


__all__ = [
    "ActionSpace",
    "RepresentationError",
    "commutant_dim",
    "action_on_o0",
    "action_on_g2",
    "action_on_complement",
    "normalized_h",
    "Sl2Decomposition",
    "peel_weights",
    "decompose_operator",
    "sl2_decompose",
    "centralizer_dims",
    "vn_index",
    "dynkin_index",
    "dynkin_index_trace",
    "dynkin_index_modules",
    "principal_coeffs",
    "cartan_matrix",
    "AXIOMS",
    "LYAlgebraData",
    "lie_yamaguti_from_pair",
]
