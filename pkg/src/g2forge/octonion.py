"""The octonions with coordinates in the basis ``1, e1, ..., e7``.

Two multiplication rules are built independently and reconciled once at
import time:

* the index rule ``e_a e_{a+1} = e_{a+3}`` (indices mod 7) with its cyclic
  consequences, and
* the doubling ``O = H + H l`` with
  ``q1 (q2 l) = (q2 q1) l``, ``(q2 l) q1 = (q2 conj(q1)) l``,
  ``(q1 l)(q2 l) = -conj(q2) q1``.

The frozen dictionary sends each named unit ``1, i, j, k, l, il, jl, kl``
to a signed ``e``-basis vector so that both rules give the same algebra.
"""

from __future__ import annotations

from itertools import permutations, product

from .exact_field import as_scalar, mpq

ZERO = mpq(0)
NAMES = ("1", "i", "j", "k", "l", "il", "jl", "kl")

# ---------------------------------------------------------------------------
# quaternions as 4-tuples over (1, i, j, k)

_QTABLE = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def qmul(p, q):
    out = [ZERO] * 4
    for a in range(4):
        if not p[a]:
            continue
        for b in range(4):
            if not q[b]:
                continue
            s, c = _QTABLE[a, b]
            out[c] = out[c] + s * p[a] * q[b]
    return tuple(out)


def qconj(q):
    return (q[0], -q[1], -q[2], -q[3])


def _cd_mul(x, y):
    """Doubling product on named coordinates ``(q1, q2)``."""
    p1, p2 = x[:4], x[4:]
    q1, q2 = y[:4], y[4:]
    first = tuple(a - b for a, b in zip(qmul(p1, q1), qmul(qconj(q2), p2)))
    second = tuple(a + b for a, b in zip(qmul(q2, p1), qmul(p2, qconj(q1))))
    return first + second


def _unit(n, k, s=1):
    return tuple(mpq(s) if t == k else ZERO for t in range(n))


def _signed_index(v):
    nz = [(t, x) for t, x in enumerate(v) if x]
    assert len(nz) == 1 and abs(nz[0][1]) == 1
    return (1 if nz[0][1] > 0 else -1), nz[0][0]


def _cd_table():
    return {(a, b): _signed_index(_cd_mul(_unit(8, a), _unit(8, b))) for a in range(8) for b in range(8)}


def _index_rule_table():
    """Products of basis units under ``e_a e_{a+1} = e_{a+3}`` (mod 7)."""
    table = {}
    for a in range(8):
        table[0, a] = (1, a)
        table[a, 0] = (1, a)
    for a in range(1, 8):
        table[a, a] = (-1, 0)

    def idx(t):
        return (t - 1) % 7 + 1

    for a in range(1, 8):
        x, y, z = idx(a), idx(a + 1), idx(a + 3)
        for p, q, r in ((x, y, z), (y, z, x), (z, x, y)):
            table[p, q] = (1, r)
            table[q, p] = (-1, r)
    assert len(table) == 64
    return table


E_TABLE = _index_rule_table()
CD_TABLE = _cd_table()


def _e_mul_signed(u, v):
    (su, iu), (sv, iv) = u, v
    s, c = E_TABLE[iu, iv]
    return su * sv * s, c


def _try_dictionary(img_i, img_j, img_l):
    img = {0: (1, 0), 1: img_i, 2: img_j, 4: img_l}
    img[3] = _e_mul_signed(img[1], img[2])  # k = ij
    img[5] = _e_mul_signed(img[1], img[4])  # il
    img[6] = _e_mul_signed(img[2], img[4])  # jl
    img[7] = _e_mul_signed(img[3], img[4])  # kl
    if len({c for _, c in img.values()}) != 8:
        return None
    for a in range(8):
        for b in range(8):
            s, c = CD_TABLE[a, b]
            es, ec = _e_mul_signed(img[a], img[b])
            ts, tc = img[c]
            if ec != tc or es != s * ts:
                return None
    return img


def _build_dictionary():
    preferred = [((1, 1), (1, 2), (1, 3))]
    rest = (
        tuple(zip(signs, idxs))
        for idxs in permutations(range(1, 8), 3)
        for signs in product((1, -1), repeat=3)
    )
    for cand in (*preferred, *rest):
        found = _try_dictionary(*cand)
        if found is not None:
            return tuple(found[a] for a in range(8))
    raise AssertionError("no signed dictionary reconciles the two multiplication rules")


#: named unit index -> (sign, e-index)
DICTIONARY = _build_dictionary()

# structure constants: signed e-index of e_a e_b
MUL = tuple(tuple(E_TABLE[a, b] for b in range(8)) for a in range(8))


class Octonion:
    """Element of O; ``coords[0]`` is the real part, ``coords[a]`` multiplies ``e_a``."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        cs = tuple(as_scalar(c) for c in coords)
        if len(cs) != 8:
            raise ValueError("an octonion has 8 coordinates")
        self.coords = cs

    @classmethod
    def _raw(cls, coords):
        o = cls.__new__(cls)
        o.coords = coords
        return o

    @classmethod
    def named(cls, **kw):
        """Build from named units, e.g. ``Octonion.named(i=1, kl=-2)``; use ``one`` for 1."""
        out = [ZERO] * 8
        for name, c in kw.items():
            a = NAMES.index("1" if name == "one" else name)
            s, e = DICTIONARY[a]
            out[e] = out[e] + s * as_scalar(c)
        return cls._raw(tuple(out))

    @classmethod
    def from_named_coords(cls, v):
        out = [ZERO] * 8
        for a, c in enumerate(v):
            if c:
                s, e = DICTIONARY[a]
                out[e] = out[e] + s * as_scalar(c)
        return cls._raw(tuple(out))

    def named_coords(self):
        return tuple(s * self.coords[e] for s, e in DICTIONARY)

    def split(self):
        """Quaternion pair ``(q1, q2)`` with ``x = q1 + q2 l``."""
        v = self.named_coords()
        return v[:4], v[4:]

    @classmethod
    def join(cls, q1, q2):
        return cls.from_named_coords(tuple(q1) + tuple(q2))

    # -- vector space -------------------------------------------------------
    def __add__(self, other):
        return Octonion._raw(tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Octonion._raw(tuple(x - y for x, y in zip(self.coords, other.coords)))

    def __neg__(self):
        return Octonion._raw(tuple(-x for x in self.coords))

    def scale(self, c):
        c = as_scalar(c)
        return Octonion._raw(tuple(x * c for x in self.coords))

    def __mul__(self, other):
        if not isinstance(other, Octonion):
            return self.scale(other)
        out = [ZERO] * 8
        x, y = self.coords, other.coords
        for a in range(8):
            xa = x[a]
            if not xa:
                continue
            row = MUL[a]
            for b in range(8):
                yb = y[b]
                if not yb:
                    continue
                s, c = row[b]
                if s > 0:
                    out[c] = out[c] + xa * yb
                else:
                    out[c] = out[c] - xa * yb
        return Octonion._raw(tuple(out))

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if not isinstance(other, Octonion):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __bool__(self):
        return any(self.coords)

    # -- quadratic structure -------------------------------------------------
    def conj(self):
        c = self.coords
        return Octonion._raw((c[0],) + tuple(-x for x in c[1:]))

    def trace(self):
        return 2 * self.coords[0]

    def norm(self):
        acc = ZERO
        for x in self.coords:
            if x:
                acc = acc + x * x
        return acc

    def real(self):
        return self.coords[0]

    def imag(self):
        return Octonion._raw((ZERO,) + self.coords[1:])

    def is_imaginary(self) -> bool:
        return not self.coords[0]

    def imag_vector(self):
        """Coordinates in O_0 with respect to ``e1, ..., e7``."""
        return self.coords[1:]

    def __repr__(self):
        terms = []
        for name, c in zip(NAMES, self.named_coords()):
            if c:
                terms.append(f"{c}" if name == "1" else f"({c}){name}")
        return "Octonion(" + (" + ".join(terms) or "0") + ")"


def imaginary(v7) -> Octonion:
    """Element of O_0 from its 7 coordinates on ``e1..e7``."""
    return Octonion((ZERO,) + tuple(v7))


ONE = Octonion.named(one=1)
I = Octonion.named(i=1)
J = Octonion.named(j=1)
K = Octonion.named(k=1)
L = Octonion.named(l=1)
IL = Octonion.named(il=1)
JL = Octonion.named(jl=1)
KL = Octonion.named(kl=1)
NAMED = {"1": ONE, "i": I, "j": J, "k": K, "l": L, "il": IL, "jl": JL, "kl": KL}
E = tuple(Octonion(_unit(8, a)) for a in range(8))
IMAGINARY_BASIS = E[1:]


def conj_trace_norm(x: Octonion):
    return x.conj(), x.trace(), x.norm()


def inner(x: Octonion, y: Octonion):
    """Polar form ``n(x, y) = (n(x+y) - n(x) - n(y)) / 2``."""
    acc = ZERO
    for a, b in zip(x.coords, y.coords):
        if a and b:
            acc = acc + a * b
    return acc


def cross(x: Octonion, y: Octonion) -> Octonion:
    """Seven-dimensional cross product: imaginary part of ``xy``."""
    return (x * y).imag()


def omega(x: Octonion, y: Octonion, z: Octonion):
    return inner(x, cross(y, z))


def associator(x: Octonion, y: Octonion, z: Octonion) -> Octonion:
    return (x * y) * z - x * (y * z)


def commutator(x: Octonion, y: Octonion) -> Octonion:
    return x * y - y * x


__all__ = [
    "Octonion",
    "NAMES",
    "DICTIONARY",
    "E_TABLE",
    "CD_TABLE",
    "MUL",
    "ONE", "I", "J", "K", "L", "IL", "JL", "KL", "NAMED", "E",
    "IMAGINARY_BASIS",
    "imaginary",
    "qmul",
    "qconj",
    "conj_trace_norm",
    "inner",
    "cross",
    "omega",
    "associator",
    "commutator",
]
