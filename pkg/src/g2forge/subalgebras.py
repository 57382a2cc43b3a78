"""The reductive subalgebras h1..h8 of g2 and their complements.

h1..h7 are solved from linear conditions on g2; h8 is spanned by explicit
generators over Q(sqrt 15).  Everything is stored as coordinate vectors
with respect to the canonical basis of :func:`g2forge.g2_core.build_g2`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache

from .exact_field import SQRT15, mpq
from .g2_core import D, G2Algebra, LieAlgebra, LinearMap7, build_g2, d_left, d_right, tau7
from .linalg import (
    CoordinateSystem,
    Mat,
    intersect,
    is_positive,
    leading_minors,
    lin_comb,
    nullspace,
    orthogonal_complement,
    rank,
    span_basis,
    span_contains,
    span_equal,
)
from .octonion import I, IL, J, JL, K, KL, L, Octonion

ZERO = mpq(0)
LABELS = ("h1", "h2", "h3", "h4", "h5", "h6", "h7", "h8")
EXPECTED_DIMS = {"h1": 6, "h2": 4, "h3": 3, "h4": 4, "h5": 3, "h6": 8, "h7": 3, "h8": 3}
H0 = (I, J, K)
HL = (L, IL, JL, KL)
C_PERP = (J, K, L, IL, JL, KL)


class SubalgebraError(ValueError):
    pass


@dataclass
class Subalgebra:
    label: str
    coords: list  # g2-coordinates of a basis
    g2: G2Algebra = field(repr=False)

    def __post_init__(self):
        self.coords = [tuple(c) for c in self.coords]
        self._cs = CoordinateSystem(self.coords)
        n = len(self.coords)
        sc = [[None] * n for _ in range(n)]
        for a in range(n):
            sc[a][a] = (ZERO,) * n
            for b in range(a + 1, n):
                w = self.g2.bracket(self.coords[a], self.coords[b])
                try:
                    c = self._cs.coords(w)
                except ValueError:
                    raise SubalgebraError(f"{self.label}: not closed under the bracket") from None
                sc[a][b] = c
                sc[b][a] = tuple(-x for x in c)
        self.algebra = LieAlgebra(sc)

    @property
    def dim(self) -> int:
        return len(self.coords)

    @cached_property
    def basis(self):
        return [self.g2.element(c) for c in self.coords]

    def local_coords(self, v):
        """Coordinates of a g2-vector in this subalgebra's basis."""
        return self._cs.coords(v)

    def contains(self, v) -> bool:
        return self._cs.contains(v)

    def to_g2(self, local):
        return lin_comb(local, self.coords)

    def restricted_killing(self) -> Mat:
        k = self.g2.killing
        return Mat([[_form(k, u, v) for v in self.coords] for u in self.coords])

    def is_compact(self) -> bool:
        """Killing form of g2 restricted here is negative definite."""
        for n, m in enumerate(leading_minors(self.restricted_killing()), start=1):
            if not m or is_positive(m) != (n % 2 == 0):
                return False
        return True

    def all_derivations(self) -> bool:
        from .g2_core import is_derivation

        return all(is_derivation(m) for m in self.basis)


def _form(k: Mat, u, v):
    acc = ZERO
    for a, x in enumerate(u):
        if not x:
            continue
        row = k.rows[a]
        for b, y in enumerate(v):
            if y and row[b]:
                acc = acc + x * row[b] * y
    return acc


# ---------------------------------------------------------------------------
# linear constraints on g2


def _kernel(g2: G2Algebra, functional, within=None):
    """Basis (g2-coordinates) of ``{d : functional(d) = 0}``, optionally inside a span."""
    space = within if within is not None else [g2.unit(a) for a in range(g2.dim)]
    cols = [functional(g2.element(c)) for c in space]
    rows = [r for r in zip(*cols) if any(r)]
    ker = nullspace(rows, len(space)) if rows else [
        tuple(mpq(1) if i == j else ZERO for j in range(len(space))) for i in range(len(space))
    ]
    return [lin_comb(k, space) for k in ker]


def _hl_part(x: Octonion):
    return x.split()[1]


def _preserves_H(d: LinearMap7):
    return tuple(c for q in H0 for c in _hl_part(d.apply(q)))


def _kills(*xs):
    def f(d: LinearMap7):
        return tuple(c for x in xs for c in d.apply(x).coords)

    return f


def _commutes_tau(d: LinearMap7):
    return (d @ tau7() - tau7() @ d).flat()


def _both(f, g):
    return lambda d: f(d) + g(d)


CONSTRAINTS = {
    "h1": "d(H) in H",
    "h2": "d(H) in H and d(C) = 0",
    "h3": "d(H) = 0",
    "h4": "d tau = tau d",
    "h5": "centralizer of h3 in h1",
    "h6": "d(C) = 0",
    "h7": "d(H) in H and d(l) = 0",
}


@lru_cache(maxsize=None)
def solve_constraint(label: str) -> Subalgebra:
    g2 = build_g2()
    if label == "h1":
        vs = _kernel(g2, _preserves_H)
    elif label == "h2":
        vs = _kernel(g2, _both(_preserves_H, _kills(I)))
    elif label == "h3":
        vs = _kernel(g2, _kills(*H0))
    elif label == "h4":
        vs = _kernel(g2, _commutes_tau)
    elif label == "h5":
        h1, h3 = solve_constraint("h1"), solve_constraint("h3")

        def ad_h3(d):
            c = g2.coords(d)
            return tuple(x for b in h3.coords for x in g2.bracket(c, b))

        vs = _kernel(g2, ad_h3, within=h1.coords)
    elif label == "h6":
        vs = _kernel(g2, _kills(I))
    elif label == "h7":
        vs = _kernel(g2, _both(_preserves_H, _kills(L)))
    else:
        raise KeyError(f"no defining constraint for {label!r}")
    return Subalgebra(label, vs, g2)


# ---------------------------------------------------------------------------
# explicit generators


def _coords(ms):
    g2 = build_g2()
    return [g2.coords(m) for m in ms]


def h_left():
    return _coords([d_left(a) for a in H0])


def h_right():
    return _coords([d_right(a) for a in H0])


def presentation_generators():
    """Spanning sets (g2-coordinates) from the explicit descriptions."""
    hl, hr = h_left(), h_right()
    return {
        "h1": hl + hr,
        "h2": hl + _coords([d_right(I)]),
        "h3": hl,
        "h4": hr + _coords([d_left(I)]),
        "h5": _coords([D(p, q) for p in H0 for q in H0 if p != q]),
        "h6": _coords([D(x, y) + D(I * x, I * y) for x in C_PERP for y in C_PERP]),
        "h7": _coords([d_left(a) - d_right(a) for a in H0]),
    }


def explicit_presentations():
    """``label -> (Subalgebra from generators, matches constraint solution)``."""
    g2 = build_g2()
    out = {}
    for label, gens in presentation_generators().items():
        gens = [g for g in gens if any(g)]
        sub = Subalgebra(label, span_basis(gens), g2)
        out[label] = (sub, span_equal(sub.coords, solve_constraint(label).coords))
    return out


@lru_cache(maxsize=1)
def h8_generators():
    """``(h, x, y)`` as 7x7 operators."""
    c = SQRT15 * mpq(1, 9)
    h = (D(J, K) * 4 + D(L, IL) * 5) * mpq(1, 6)
    x = D(I, K) + (D(J, L) + D(K, IL)) * c
    y = -D(I, J) + (-D(K, L) + D(J, IL)) * c
    return h, x, y


@lru_cache(maxsize=1)
def build_h8() -> Subalgebra:
    return Subalgebra("h8", _coords(h8_generators()), build_g2())


def h8_relations():
    h, x, y = h8_generators()
    return {
        "[h,x]=y": h.bracket(x) == y,
        "[h,y]=-x": h.bracket(y) == -x,
        "[x,y]=8/3h": x.bracket(y) == h * mpq(8, 3),
    }


def subalgebra(label: str) -> Subalgebra:
    if label == "h8":
        return build_h8()
    if label not in CONSTRAINTS:
        raise KeyError(f"unknown subalgebra {label!r}; expected one of {', '.join(LABELS)}")
    return solve_constraint(label)


# ---------------------------------------------------------------------------
# Z2-grading and reductive complements


def grading_parts():
    """``(even, odd)``: operators preserving resp. swapping H and H l."""
    g2 = build_g2()

    def even_cond(d):
        return tuple(c for q in H0 for c in _hl_part(d.apply(q))) + tuple(
            c for x in HL for c in x_h_part(d.apply(x))
        )

    def odd_cond(d):
        return tuple(c for q in H0 for c in x_h_part(d.apply(q))) + tuple(
            c for x in HL for c in _hl_part(d.apply(x))
        )

    return _kernel(g2, even_cond), _kernel(g2, odd_cond)


def x_h_part(x: Octonion):
    return x.split()[0]


def grading_check():
    g2 = build_g2()
    even, odd = grading_parts()
    h1 = solve_constraint("h1")
    even_span = _coords([D(p, q) for p in H0 for q in H0] + [D(p, q) for p in HL for q in HL])
    odd_span = _coords([D(p, q) for p in H0 for q in HL])
    ee = all(span_contains(even, [g2.bracket(a, b)]) for a in even for b in even)
    eo = all(span_contains(odd, [g2.bracket(a, b)]) for a in even for b in odd)
    oo = all(span_contains(even, [g2.bracket(a, b)]) for a in odd for b in odd)
    report = {
        "dim_even": len(even),
        "dim_odd": len(odd),
        "even=h1": span_equal(even, h1.coords),
        "even=D(H0,H0)+D(Hl,Hl)": span_equal(even, even_span),
        "odd=D(H0,Hl)": span_equal(odd, odd_span),
        "[even,even]<=even": ee,
        "[even,odd]<=odd": eo,
        "[odd,odd]<=even": oo,
    }
    ok = report["dim_even"] == 6 and report["dim_odd"] == 8 and all(
        v for k, v in report.items() if not k.startswith("dim")
    )
    return ok, report


@dataclass
class ReductivePair:
    sub: Subalgebra
    complement: list  # g2-coordinates

    @property
    def dim_m(self):
        return len(self.complement)

    @cached_property
    def projector(self):
        """Coordinates in the adapted basis ``sub ⊕ complement``."""
        return CoordinateSystem(self.sub.coords + self.complement)

    def split(self, v):
        """``(pi_h(v), pi_m(v))`` as g2-vectors."""
        c = self.projector.coords(v)
        k = self.sub.dim
        return lin_comb(c[:k], self.sub.coords), lin_comb(c[k:], self.complement)


def reductive_complement(s: Subalgebra) -> ReductivePair:
    g2 = s.g2
    m = orthogonal_complement(s.coords, g2.killing, g2.dim)
    if rank(s.coords + m) != g2.dim:
        raise SubalgebraError(f"{s.label}: Killing form degenerate on the subalgebra")
    for a in s.coords:
        for b in m:
            if not span_contains(m, [g2.bracket(a, b)]):
                raise SubalgebraError(f"{s.label}: complement not invariant")
    return ReductivePair(s, m)


# ---------------------------------------------------------------------------
# structural certificates


def structure_certificate(s: Subalgebra) -> dict:
    alg = s.algebra
    out = {
        "dim": s.dim,
        "center_dim": alg.center_dim(),
        "derived_dim": alg.derived_dim(),
        "killing_nondegenerate": rank(alg.killing.rows) == s.dim,
        "compact": s.is_compact(),
    }
    if s.label == "h1":
        hl = [s.local_coords(v) for v in h_left()]
        hr = [s.local_coords(v) for v in h_right()]
        out["ideals_commute"] = all(not any(alg.bracket(a, b)) for a in hl for b in hr)
        out["ideals_simple"] = all(_is_simple_ideal(alg, part) for part in (hl, hr))
        out["ideals_span"] = rank(hl + hr) == 6
    return out


def _is_simple_ideal(alg: LieAlgebra, vs) -> bool:
    """``vs`` spans an ideal that is simple as a Lie algebra."""
    for u in [alg.unit(a) for a in range(alg.dim)]:
        for v in vs:
            if not span_contains(vs, [alg.bracket(u, v)]):
                return False
    cs = CoordinateSystem(vs)
    n = len(vs)
    sc = [[cs.coords(alg.bracket(vs[a], vs[b])) for b in range(n)] for a in range(n)]
    return LieAlgebra(sc).is_simple()


def certificate_ok(s: Subalgebra) -> bool:
    c = structure_certificate(s)
    if not c["compact"]:
        return False
    lab = s.label
    if lab == "h1":
        return c["center_dim"] == 0 and c["ideals_commute"] and c["ideals_simple"] and c["ideals_span"]
    if lab in ("h2", "h4"):
        return c["center_dim"] == 1 and c["derived_dim"] == 3
    if lab in ("h3", "h5", "h7", "h8"):
        return c["dim"] == 3 and c["killing_nondegenerate"]
    if lab == "h6":
        return c["center_dim"] == 0 and c["derived_dim"] == 8
    return False


def intersection_dim(a: Subalgebra, b: Subalgebra) -> int:
    return len(intersect(a.coords, b.coords, a.g2.dim))


__all__ = [
    "LABELS",
    "EXPECTED_DIMS",
    "CONSTRAINTS",
    "Subalgebra",
    "SubalgebraError",
    "ReductivePair",
    "solve_constraint",
    "explicit_presentations",
    "presentation_generators",
    "h_left",
    "h_right",
    "h8_generators",
    "h8_relations",
    "build_h8",
    "subalgebra",
    "grading_parts",
    "grading_check",
    "reductive_complement",
    "structure_certificate",
    "certificate_ok",
    "intersection_dim",
]
