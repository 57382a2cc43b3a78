"""Points, predicates and projections for the G2-homogeneous models.

Models are numbered as follows (each with the base point used for witnesses):

* ``M0`` Cayley triples ``(X0, X1, X2)``; base ``(i, j, l)``
* ``M1`` quaternion subalgebras ``Q``; base ``H``.  ``M1'`` coassociative
  4-planes ``W = Q^⊥ ∩ O_0``; base ``H l``
* ``M2`` pairs ``(w, Q)`` with ``w ∈ Q`` a unit; base ``(i, H)``
* ``M3`` orthonormal pairs ``(X0, X1)``; base ``(i, j)``
* ``M4`` pairs ``(W, J)`` with ``J`` a cross-compatible complex structure
* ``M5`` triples ``(W, J, K)`` with ``(J, K)`` a compatible quaternionic structure
* ``M6`` unit imaginary octonions
* ``M7`` pairs ``(w, W)`` with ``W ∈ M1'`` and ``w ∈ W`` a unit; base ``(l, H l)``
* ``M8`` principal three-dimensional subalgebras of g2

Subspaces are stored through a canonical reduced row echelon basis of
8-coordinate vectors, and an endomorphism ``J`` of a 4-plane ``W`` as the
8x8 matrix of ``J ∘ P_W`` (zero on ``W^⊥``), so equality of points is
equality of data.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product

from gmpy2 import is_square, isqrt

from .exact_field import mpq
from .g2_core import D, apply8, build_g2, d_left, is_automorphism8
from .linalg import Mat, invert, lin_comb, nullspace, rank, rref, span_contains
from .octonion import (
    DICTIONARY,
    E,
    I,
    IMAGINARY_BASIS,
    J as QJ,
    K as QK,
    L,
    NAMED,
    NAMES,
    Octonion,
    cross,
    inner,
    omega,
)

ZERO = mpq(0)
ONE = mpq(1)


class ModelError(ValueError):
    pass


# ---------------------------------------------------------------------------
# subspaces and automorphisms


class Subspace:
    """Subspace of O (8-coordinate vectors) with canonical basis."""

    def __init__(self, vectors):
        vs = [tuple(v.coords if isinstance(v, Octonion) else v) for v in vectors]
        vs = [v for v in vs if any(v)]
        self.spanning = [Octonion(v) for v in vs]
        if not vs:
            self.rows = ()
            return
        _, _, red = rref(vs, 8)
        self.rows = tuple(red)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis(self):
        return [Octonion._raw(r) for r in self.rows]

    def contains(self, x) -> bool:
        v = x.coords if isinstance(x, Octonion) else tuple(x)
        if not self.rows:
            return not any(v)
        return span_contains(list(self.rows), [v])

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def perp(self, inside_o0: bool = False) -> "Subspace":
        """Orthogonal complement in O, or in O_0."""
        rows = list(self.rows)
        if inside_o0:
            rows.append(E[0].coords)
        return Subspace(nullspace(rows, 8) if rows else [e.coords for e in E])

    @cached_property
    def projector(self) -> Mat:
        """Orthogonal projection ``P_W`` as an 8x8 matrix."""
        if not self.rows:
            return Mat.zeros(8)
        b = Mat.from_columns(self.rows)
        gram = b.T @ b
        inv = Mat(invert(gram.rows))
        return b @ inv @ b.T

    def image(self, f: "Automorphism") -> "Subspace":
        return Subspace([f(x) for x in self.spanning])

    def is_subalgebra(self) -> bool:
        bs = self.basis()
        return all(self.contains(x * y) for x in bs for y in bs)

    def __repr__(self):
        return f"Subspace(dim={self.dim})"


class Automorphism:
    """An 8x8 matrix certified to be an algebra automorphism of O."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Mat, check: bool = True):
        if check and not (is_automorphism8(matrix) and _is_orthogonal(matrix)):
            raise ModelError("not an orthogonal automorphism of O")
        self.matrix = matrix

    def __call__(self, x: Octonion) -> Octonion:
        return apply8(self.matrix, x)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """``self ∘ other``."""
        return Automorphism(self.matrix @ other.matrix, check=False)

    def inverse(self) -> "Automorphism":
        return Automorphism(self.matrix.T, check=False)

    def conjugate(self, m: Mat) -> Mat:
        """``f m f^-1`` for an 8x8 operator ``m``."""
        return self.matrix @ m @ self.matrix.T

    def preserves_omega(self) -> bool:
        b = IMAGINARY_BASIS
        imgs = [self(x) for x in b]
        return all(
            omega(imgs[p], imgs[q], imgs[r]) == omega(b[p], b[q], b[r]) for p, q, r in combinations(range(7), 3)
        )

    def verify(self) -> bool:
        return is_automorphism8(self.matrix) and _is_orthogonal(self.matrix)

    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)


def _is_orthogonal(m: Mat) -> bool:
    return m.T @ m == Mat.identity(8)


IDENTITY = Automorphism(Mat.identity(8), check=False)


# ---------------------------------------------------------------------------
# Cayley triples


def is_cayley_triple(x0: Octonion, x1: Octonion, x2: Octonion) -> bool:
    xs = (x0, x1, x2)
    if any(not x.is_imaginary() for x in xs):
        return False
    for a in range(3):
        for b in range(3):
            if inner(xs[a], xs[b]) != (1 if a == b else 0):
                return False
    return not omega(x0, x1, x2)


@dataclass(frozen=True)
class CayleyTriple:
    X0: Octonion
    X1: Octonion
    X2: Octonion

    def __post_init__(self):
        if not is_cayley_triple(self.X0, self.X1, self.X2):
            raise ModelError("not a Cayley triple")

    def act(self, f: Automorphism) -> "CayleyTriple":
        return CayleyTriple(f(self.X0), f(self.X1), f(self.X2))

    def as_tuple(self):
        return self.X0, self.X1, self.X2


def _named_images(x0, x1, x2):
    """Images of the named units under the map fixed by ``(i, j, l) -> (x0, x1, x2)``."""
    x01 = x0 * x1
    return {
        "1": E[0],
        "i": x0,
        "j": x1,
        "k": x01,
        "l": x2,
        "il": x0 * x2,
        "jl": x1 * x2,
        "kl": x01 * x2,
    }


def _matrix_from_named(images) -> Mat:
    cols = [None] * 8
    for a, (s, c) in enumerate(DICTIONARY):
        img = images[NAMES[a]]
        cols[c] = img.coords if s > 0 else (-img).coords
    return Mat.from_columns(cols)


def automorphism_from_triple(t) -> Automorphism:
    """The automorphism sending ``(i, j, l)`` to the Cayley triple ``t``."""
    x0, x1, x2 = t.as_tuple() if isinstance(t, CayleyTriple) else t
    if not is_cayley_triple(x0, x1, x2):
        raise ModelError("not a Cayley triple")
    m = _matrix_from_named(_named_images(x0, x1, x2))
    try:
        return Automorphism(m)
    except ModelError:
        raise ModelError("triple map failed verification (cross product bug?)") from None


def automorphism_between(src, dst) -> Automorphism:
    """Automorphism sending the Cayley triple ``src`` to ``dst``."""
    return automorphism_from_triple(dst).compose(automorphism_from_triple(src).inverse())


# ---------------------------------------------------------------------------
# rational frames


def _rational_sqrt(q):
    q = mpq(q)
    if q < 0:
        return None
    n, d = int(q.numerator), int(q.denominator)
    if is_square(n) and is_square(d):
        return mpq(int(isqrt(n)), int(isqrt(d)))
    return None


def normalize(x: Octonion):
    """``x / |x|`` when the norm is a rational square, else ``None``."""
    r = _rational_sqrt(x.norm())
    if not r:
        return None
    return x.scale(1 / r)


def _project_out(v: Octonion, units):
    for u in units:
        c = inner(v, u)
        if c:
            v = v - u.scale(c)
    return v


def rational_unit_in(space, avoid=(), search: int = 2):
    """A unit vector of ``space`` orthogonal to the orthonormal list ``avoid``.

    Orthogonal projections of small integer combinations of the basis are
    tried in a fixed order until one has a rational norm.
    """
    basis = space.spanning if isinstance(space, Subspace) else list(space)
    avoid = list(avoid)
    rng = range(-search, search + 1)
    for w in sorted(product(rng, repeat=len(basis)), key=lambda c: (sum(map(abs, c)), c)):
        if not any(w):
            continue
        v = Octonion(lin_comb(w, [b.coords for b in basis]))
        v = _project_out(v, avoid)
        if v:
            u = normalize(v)
            if u is not None:
                return u
    raise ModelError("no rational unit vector found in the search box")


CURATED_TRIPLES = (
    (NAMED["i"], NAMED["j"], NAMED["l"]),
    (NAMED["j"], NAMED["k"], NAMED["l"]),
    (NAMED["k"], NAMED["i"], NAMED["jl"]),
    (NAMED["l"], NAMED["il"], NAMED["j"]),
    (NAMED["i"], NAMED["l"], NAMED["jl"]),
    (NAMED["jl"], NAMED["kl"], NAMED["j"]),
    (-NAMED["kl"], NAMED["j"], NAMED["i"]),
)


def random_cayley_triple(rng: random.Random, box: int = 2, tries: int = 20000) -> CayleyTriple:
    """Gram-Schmidt on small integer vectors, keeping square-norm candidates."""
    basis = list(IMAGINARY_BASIS)
    chosen = []
    for step in range(3):
        for _ in range(tries):
            v = Octonion((ZERO,) + tuple(mpq(rng.randint(-box, box)) for _ in range(7)))
            avoid = list(chosen)
            if step == 2:
                avoid.append(cross(chosen[0], chosen[1]))
            v = _project_out(v, avoid)
            if not v:
                continue
            u = normalize(v)
            if u is not None:
                chosen.append(u)
                break
        else:
            raise ModelError("rejection sampling exhausted")
    del basis
    return CayleyTriple(*chosen)


def sample_automorphisms(seed: int = 0, count: int = 5):
    """Curated signed-basis automorphisms followed by sampled ones, all distinct."""
    rng = random.Random(seed)
    out = []
    for t in CURATED_TRIPLES[1:]:
        out.append(automorphism_from_triple(t))
    while len(out) < count + len(CURATED_TRIPLES) - 1:
        f = automorphism_from_triple(random_cayley_triple(rng))
        if f not in out:
            out.append(f)
    return out


# ---------------------------------------------------------------------------
# M1 and M1'


HH = Subspace([NAMED[n] for n in ("1", "i", "j", "k")])
HL = Subspace([NAMED[n] for n in ("l", "il", "jl", "kl")])


def is_quaternion_subalgebra(q: Subspace) -> bool:
    return q.dim == 4 and q.contains(E[0]) and q.is_subalgebra()


def is_coassociative(w: Subspace) -> bool:
    if w.dim != 4 or any(x.real() for x in w.basis()):
        return False
    b = w.basis()
    return all(not omega(b[p], b[q], b[r]) for p, q, r in combinations(range(4), 3))


def coassoc_duality(w: Subspace) -> Subspace:
    """``R ⊕ W^⊥`` for a coassociative plane ``W``, certified to be a subalgebra."""
    if w.dim != 4:
        raise ModelError("expected a 4-dimensional subspace")
    if not is_coassociative(w):
        raise ModelError("not coassociative")
    q = Subspace([E[0]] + w.perp(inside_o0=True).basis())
    if not is_quaternion_subalgebra(q):
        raise ModelError("complement is not a subalgebra")
    return q


def quaternion_dual(q: Subspace) -> Subspace:
    """``Q^⊥``, a coassociative plane."""
    if not is_quaternion_subalgebra(q):
        raise ModelError("not a quaternion subalgebra")
    return q.perp()


def extend_quaternion_iso(q: Subspace, v: Octonion) -> Automorphism:
    """Automorphism carrying ``Q`` to ``H`` and ``Q v`` to ``H l``."""
    if not is_quaternion_subalgebra(q):
        raise ModelError("not a quaternion subalgebra")
    if v.norm() != 1 or not v.is_imaginary() or any(inner(v, b) for b in q.basis()):
        raise ModelError("v must be a unit vector orthogonal to Q")
    imag = Subspace([b.imag() for b in q.spanning])
    u1 = rational_unit_in(imag)
    u2 = rational_unit_in(imag, avoid=[u1])
    return automorphism_from_triple((u1, u2, v)).inverse()


def extend_quaternion_iso_literal(q: Subspace, v: Octonion, u1: Octonion, u2: Octonion) -> Mat:
    """``q1 + q2 v -> f(q1) + f(q2) l`` with ``f: Q -> H``, ``u1 -> i``, ``u2 -> j``."""
    qbasis = [E[0], u1, u2, u1 * u2]
    hbasis = [NAMED["1"], NAMED["i"], NAMED["j"], NAMED["k"]]
    src = qbasis + [b * v for b in qbasis]
    dst = hbasis + [b * L for b in hbasis]
    a = Mat.from_columns([s.coords for s in src])
    b = Mat.from_columns([d.coords for d in dst])
    return b @ Mat(invert(a.rows))


# ---------------------------------------------------------------------------
# twistor points


def operator_on(w: Subspace, images) -> Mat:
    """8x8 matrix of ``J ∘ P_W`` given ``J`` on the canonical basis of ``W``."""
    basis = w.basis()
    perp = w.perp().basis()
    a = Mat.from_columns([b.coords for b in basis] + [p.coords for p in perp])
    b = Mat.from_columns([im.coords for im in images] + [(ZERO,) * 8] * len(perp))
    return b @ Mat(invert(a.rows))


def restrict_operator(m: Mat, w: Subspace) -> Mat:
    """``m ∘ P_W`` for an 8x8 operator preserving ``W``."""
    return m @ w.projector


def _apply(m: Mat, x: Octonion) -> Octonion:
    return apply8(m, x)


def is_complex_structure(w: Subspace, j: Mat) -> bool:
    b = w.basis()
    if any(not w.contains(_apply(j, x)) for x in b):
        return False
    if any(_apply(j, _apply(j, x)) != -x for x in b):
        return False
    return all(inner(_apply(j, x), _apply(j, y)) == inner(x, y) for x in b for y in b)


def is_cross_compatible(w: Subspace, j: Mat) -> bool:
    """``J(X) × J(Y) = X × Y`` on basis pairs of ``W``."""
    b = w.basis()
    return all(cross(_apply(j, x), _apply(j, y)) == cross(x, y) for x, y in combinations(b, 2))


@dataclass(frozen=True)
class TwistorPoint:
    W: Subspace
    J: Mat

    def act(self, f: Automorphism) -> "TwistorPoint":
        return TwistorPoint(self.W.image(f), f.conjugate(self.J))


@dataclass(frozen=True)
class QuatTwistorPoint:
    W: Subspace
    J: Mat
    K: Mat

    def act(self, f: Automorphism) -> "QuatTwistorPoint":
        return QuatTwistorPoint(self.W.image(f), f.conjugate(self.J), f.conjugate(self.K))


def in_M4(p: TwistorPoint) -> bool:
    return (
        is_coassociative(p.W)
        and p.J @ p.W.projector == p.J
        and is_complex_structure(p.W, p.J)
        and is_cross_compatible(p.W, p.J)
    )


def in_M5(p: QuatTwistorPoint) -> bool:
    if not (in_M4(TwistorPoint(p.W, p.J)) and in_M4(TwistorPoint(p.W, p.K))):
        return False
    return p.J @ p.K == -(p.K @ p.J)


def base_M4() -> TwistorPoint:
    return TwistorPoint(HL, d_left(I).extend8())


def base_M5() -> QuatTwistorPoint:
    return QuatTwistorPoint(HL, d_left(I).extend8(), d_left(QJ).extend8())


def m4_alpha(w: Subspace, j: Mat, x: Octonion, y: Octonion) -> int:
    """The sign ``α`` with ``(X × Y) × J(X) = α J(Y)``."""
    jx, jy = _apply(j, x), _apply(j, y)
    lhs = cross(cross(x, y), jx)
    if lhs == jy:
        return 1
    if lhs == -jy:
        return -1
    raise ModelError("alpha not ±1")


def m4_frame(w: Subspace, j: Mat, x: Octonion, y: Octonion) -> bool:
    """``W = <X, Y, JX, JY>`` and ``W^⊥ ∩ O_0 = <X×Y, X×JX, Y×JX>``."""
    jx, jy = _apply(j, x), _apply(j, y)
    ok_w = Subspace([x, y, jx, jy]) == w
    ok_perp = Subspace([cross(x, y), cross(x, jx), cross(y, jx)]) == w.perp(inside_o0=True)
    return ok_w and ok_perp


def _pick_xy(w: Subspace, j: Mat):
    x = rational_unit_in(w)
    jx = _apply(j, x)
    y = rational_unit_in(w, avoid=[x, jx])
    return x, y


def m4_transitivity_witness(p: TwistorPoint) -> Automorphism:
    """Automorphism ``f`` with ``f · (H l, d_i^l) = (W, J)``."""
    if not in_M4(p):
        raise ModelError("point is not in M4")
    x, y = _pick_xy(p.W, p.J)
    if m4_alpha(p.W, p.J, x, y) != 1:
        raise ModelError("alpha = -1 on a cross-compatible structure")
    jx = _apply(p.J, x)
    f = automorphism_between((I, L, NAMED["jl"]), (cross(x, jx), x, y))
    if base_M4().act(f) != p:
        raise ModelError("witness failed verification")
    return f


def m5_witness(p: QuatTwistorPoint) -> Automorphism:
    """Automorphism ``f`` with ``f · (H l, (d_i^l, d_j^l)) = (W, (J, K))``."""
    if not in_M5(p):
        raise ModelError("point is not in M5")
    x = rational_unit_in(p.W)
    jx, kx = _apply(p.J, x), _apply(p.K, x)
    jkx = _apply(p.J, kx)
    if Subspace([x, jx, kx, jkx]) != p.W:
        raise ModelError("frame identity failed")
    f = automorphism_from_triple((cross(x, jx), cross(x, kx), x))
    if f(NAMED["kl"]) != jkx or base_M5().act(f) != p:
        raise ModelError("witness failed verification")
    return f


# ---------------------------------------------------------------------------
# flags and projections


@dataclass(frozen=True)
class FlagPoint:
    """``(w, W)``; ``kind`` is ``"M2"`` (W a subalgebra) or ``"M7"`` (W coassociative)."""

    w: Octonion
    W: Subspace
    kind: str

    def act(self, f: Automorphism) -> "FlagPoint":
        return FlagPoint(f(self.w), self.W.image(f), self.kind)


def in_M2(p: FlagPoint) -> bool:
    return (
        p.kind == "M2"
        and is_quaternion_subalgebra(p.W)
        and p.w.is_imaginary()
        and p.W.contains(p.w)
        and p.w.norm() == 1
    )


def in_M7(p: FlagPoint) -> bool:
    return p.kind == "M7" and is_coassociative(p.W) and p.W.contains(p.w) and p.w.norm() == 1


@dataclass(frozen=True)
class Frame2:
    X0: Octonion
    X1: Octonion

    def act(self, f: Automorphism) -> "Frame2":
        return Frame2(f(self.X0), f(self.X1))


def in_M3(p: Frame2) -> bool:
    xs = (p.X0, p.X1)
    return all(x.is_imaginary() for x in xs) and all(
        inner(xs[a], xs[b]) == (1 if a == b else 0) for a in range(2) for b in range(2)
    )


def in_M6(x: Octonion) -> bool:
    return x.is_imaginary() and x.norm() == 1


def act(f: Automorphism, point):
    if isinstance(point, Octonion):
        return f(point)
    if isinstance(point, Subspace):
        return point.image(f)
    return point.act(f)


def _pi05_automorphism(t: CayleyTriple) -> Automorphism:
    return automorphism_from_triple((t.X1, t.X2, t.X0))


def pi05_literal(t: CayleyTriple) -> QuatTwistorPoint:
    """``W = <X0, X0×X1, X0×X2, X0×(X1×X2)>`` with ``J = L_{X1}``, ``K = L_{X2}``."""
    w = _w_of_triple(t)

    def lmap(a):
        return operator_on(w, [cross(a, x) for x in w.basis()])

    return QuatTwistorPoint(w, lmap(t.X1), lmap(t.X2))


def _w_of_triple(t: CayleyTriple) -> Subspace:
    x0, x1, x2 = t.as_tuple()
    return Subspace([x0, cross(x0, x1), cross(x0, x2), cross(x0, cross(x1, x2))])


def _pi03(t):
    return Frame2(t.X0, t.X1)


def _pi36(p):
    return p.X0


def _pi31(p):
    return Subspace([E[0], p.X0, p.X1, cross(p.X0, p.X1)])


def _pi26(p):
    return p.w


def _pi21(p):
    return p.W


def _pi54(p):
    return TwistorPoint(p.W, p.J)


def _pi41(p):
    return p.W


def _pi05(t):
    return base_M5().act(_pi05_automorphism(t))


def _pi07(t):
    return FlagPoint(t.X0, _w_of_triple(t), "M7")


PROJECTIONS = {
    "pi03": (_pi03, "M0", "M3"),
    "pi36": (_pi36, "M3", "M6"),
    "pi31": (_pi31, "M3", "M1"),
    "pi26": (_pi26, "M2", "M6"),
    "pi21": (_pi21, "M2", "M1"),
    "pi76": (_pi26, "M7", "M6"),
    "pi71": (_pi21, "M7", "M1'"),
    "pi54": (_pi54, "M5", "M4"),
    "pi41": (_pi41, "M4", "M1'"),
    "pi05": (_pi05, "M0", "M5"),
    "pi07": (_pi07, "M0", "M7"),
}


def in_model(point, model: str) -> bool:
    checks = {
        "M0": lambda p: isinstance(p, CayleyTriple) and is_cayley_triple(*p.as_tuple()),
        "M1": lambda p: isinstance(p, Subspace) and is_quaternion_subalgebra(p),
        "M1'": lambda p: isinstance(p, Subspace) and is_coassociative(p),
        "M2": lambda p: isinstance(p, FlagPoint) and in_M2(p),
        "M3": lambda p: isinstance(p, Frame2) and in_M3(p),
        "M4": lambda p: isinstance(p, TwistorPoint) and in_M4(p),
        "M5": lambda p: isinstance(p, QuatTwistorPoint) and in_M5(p),
        "M6": lambda p: isinstance(p, Octonion) and in_M6(p),
        "M7": lambda p: isinstance(p, FlagPoint) and in_M7(p),
    }
    return checks[model](point)


def project(point, which: str):
    """Apply a projection after certifying source and target membership."""
    f, src, dst = PROJECTIONS[which]
    if not in_model(point, src):
        raise ModelError(f"{which}: point is not in {src}")
    out = f(point)
    if not in_model(out, dst):
        raise ModelError(f"{which}: image is not in {dst}")
    return out


def projection_equivariant(which: str, point, f: Automorphism) -> bool:
    return act(f, project(point, which)) == project(act(f, point), which)


def source_point(which: str, t: CayleyTriple):
    """A point of the source model of ``which`` built from a Cayley triple."""
    src = PROJECTIONS[which][1]
    if src == "M0":
        return t
    if src == "M3":
        return _pi03(t)
    if src == "M2":
        return FlagPoint(t.X0, _pi31(_pi03(t)), "M2")
    if src == "M7":
        return _pi07(t)
    if src == "M5":
        return _pi05(t)
    if src == "M4":
        return _pi54(_pi05(t))
    raise KeyError(src)


# ---------------------------------------------------------------------------
# oriented planes and the quadric


def quadric_map(x1: Octonion, x2: Octonion):
    """Certificate that ``X1 + iX2`` lies on the quadric, and the M2 point of the plane."""
    if inner(x1, x1) != 1 or inner(x2, x2) != 1 or inner(x1, x2):
        raise ModelError("not orthonormal")
    re = sum((a * a - b * b for a, b in zip(x1.coords, x2.coords)), ZERO)
    im = 2 * sum((a * b for a, b in zip(x1.coords, x2.coords)), ZERO)
    w = cross(x1, x2)
    point = FlagPoint(w, Subspace([E[0], x1, x2, w]), "M2")
    return {"real_part": re, "imag_part": im, "on_quadric": not re and not im, "m2_point": point}


def plane_from_m2(p: FlagPoint):
    """Oriented orthonormal basis ``(X, w × X)`` of ``W ∩ <1, w>^⊥``."""
    x = rational_unit_in(p.W, avoid=[E[0], p.w])
    return x, cross(p.w, x)


def same_oriented_plane(a, b) -> bool:
    """Bases ``a`` and ``b`` span the same plane with the same orientation."""
    if Subspace(list(a)) != Subspace(list(b)):
        return False
    # express b in terms of a through Gram matrices
    g = [[inner(x, y) for y in a] for x in a]
    h = [[inner(x, y) for y in a] for x in b]
    m = Mat(h) @ Mat(invert(g))
    return m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0] > 0


# ---------------------------------------------------------------------------
# subtriple n, principal subalgebras, tangent model


def subtriple_basis():
    g2 = build_g2()
    units = [I, QJ, QK]
    gens = []
    for a, p in enumerate(units):
        for q in units[a:]:
            gens.append(g2.coords(D(p, q * L) + D(q, p * L)) if p != q else g2.coords(D(p, p * L)))
    from .linalg import span_basis

    return span_basis(gens)


def subtriple_N():
    """Certificate for the triple-closed subspace spanned by ``D_{p, pl}``."""
    from .subalgebras import grading_parts

    g2 = build_g2()
    n = subtriple_basis()
    closed = all(
        span_contains(n, [g2.bracket(g2.bracket(a, b), c)]) for a in n for b in n for c in n
    )
    odd = grading_parts()[1]
    probe = g2.bracket(g2.bracket(g2.coords(D(I, I * L)), g2.coords(D(QJ, QJ * L))), g2.coords(D(QK, QK * L)))
    return {
        "dim": len(n),
        "triple_closed": closed,
        "inside_odd": span_contains(odd, n),
        "probe_in_n": span_contains(n, [probe]),
    }


def conjugate_subalgebra(s, f: Automorphism, label=None):
    """``f s f^-1`` as a subalgebra of g2."""
    from .g2_core import restrict7
    from .subalgebras import Subalgebra

    g2 = s.g2
    coords = [g2.coords(restrict7(f.conjugate(m.extend8()))) for m in s.basis]
    return Subalgebra(label or f"{s.label}^f", coords, g2)


def is_principal_subalgebra(s) -> bool:
    from .representations import action_on_o0, commutant_dim

    if s.dim != 3:
        return False
    if rank(s.algebra.killing.rows) != 3:
        return False
    return commutant_dim(action_on_o0(s)) == 1


def tangent_model_iso(d):
    """``f_d: H_0 -> H`` with ``d(q) = f_d(q) l``, as quaternion 4-tuples for ``i, j, k``."""
    g2 = build_g2()
    from .subalgebras import grading_parts

    if not span_contains(grading_parts()[1], [g2.coords(d)]):
        raise ModelError("derivation is not odd")
    out = []
    for q in (I, QJ, QK):
        out.append((-(d.apply(q) * L)).split()[0])
    return tuple(out)


def tangent_constraint(fd) -> bool:
    """``f(i) i + f(j) j + f(k) k = 0``."""
    from .octonion import qmul

    units = [NAMED[n].split()[0] for n in ("i", "j", "k")]
    tot = [ZERO] * 4
    for f, u in zip(fd, units):
        tot = [a + b for a, b in zip(tot, qmul(f, u))]
    return not any(tot)


def tangent_model_report():
    from .octonion import qmul
    from .subalgebras import grading_parts

    g2 = build_g2()
    odd = grading_parts()[1]
    images = [tuple(c for q in tangent_model_iso(g2.element(v)) for c in q) for v in odd]
    units = [NAMED[n].split()[0] for n in ("i", "j", "k")]
    rows = []
    for comp in range(4):
        row = [ZERO] * 12
        for t, u in enumerate(units):
            for a in range(4):
                e = tuple(ONE if b == a else ZERO for b in range(4))
                row[4 * t + a] = qmul(e, u)[comp]
        rows.append(tuple(row))
    constrained = nullspace(rows, 12)
    return {
        "injective": rank(images) == len(odd) == 8,
        "constraint_holds": all(tangent_constraint(tangent_model_iso(g2.element(v))) for v in odd),
        "constrained_dim": len(constrained),
        "image_is_constrained_space": span_contains(constrained, images) and len(constrained) == rank(images),
    }


__all__ = [
    "ModelError",
    "Subspace",
    "Automorphism",
    "IDENTITY",
    "CayleyTriple",
    "is_cayley_triple",
    "automorphism_from_triple",
    "automorphism_between",
    "normalize",
    "rational_unit_in",
    "CURATED_TRIPLES",
    "random_cayley_triple",
    "sample_automorphisms",
    "HH",
    "HL",
    "is_quaternion_subalgebra",
    "is_coassociative",
    "coassoc_duality",
    "quaternion_dual",
    "extend_quaternion_iso",
    "extend_quaternion_iso_literal",
    "operator_on",
    "restrict_operator",
    "is_complex_structure",
    "is_cross_compatible",
    "TwistorPoint",
    "QuatTwistorPoint",
    "in_M4",
    "in_M5",
    "base_M4",
    "base_M5",
    "m4_alpha",
    "m4_frame",
    "m4_transitivity_witness",
    "m5_witness",
    "FlagPoint",
    "Frame2",
    "in_M2",
    "in_M3",
    "in_M6",
    "in_M7",
    "act",
    "pi05_literal",
    "PROJECTIONS",
    "in_model",
    "project",
    "projection_equivariant",
    "source_point",
    "quadric_map",
    "plane_from_m2",
    "same_oriented_plane",
    "subtriple_basis",
    "subtriple_N",
    "conjugate_subalgebra",
    "is_principal_subalgebra",
    "tangent_model_iso",
    "tangent_constraint",
    "tangent_model_report",
]
