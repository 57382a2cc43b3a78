"""Exact scalars: rationals (``gmpy2.mpq``) and the quadratic field Q(sqrt 15).

Scalars are plain ``mpq`` whenever the irrational part vanishes, so rational
computations never pay for the extension.  :func:`quad` is the canonical
constructor.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

from gmpy2 import mpq

__all__ = [
    "mpq",
    "Rational",
    "QuadScalar",
    "SQRT15",
    "quad",
    "as_scalar",
    "is_rational",
    "parts",
    "UniPoly",
    "LAMBDA",
    "char_poly",
    "factor_weights",
    "weight_polynomial",
]

Rational = type(mpq(0))
_RATIONAL_TYPES = (int, Rational, Fraction)


def _to_mpq(x):
    if isinstance(x, Rational):
        return x
    if isinstance(x, (int, Fraction)) or isinstance(x, _RationalABC):
        return mpq(x.numerator, x.denominator) if not isinstance(x, int) else mpq(x)
    raise TypeError(f"not an exact rational: {x!r}")


class QuadScalar:
    """``a + b*sqrt(15)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _to_mpq(a)
        self.b = _to_mpq(b)

    # -- coercion ---------------------------------------------------------
    @staticmethod
    def _parts(x):
        if isinstance(x, QuadScalar):
            return x.a, x.b
        if isinstance(x, _RATIONAL_TYPES):
            return _to_mpq(x), mpq(0)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return quad(self.a + p[0], self.b + p[1])

    __radd__ = __add__

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return quad(self.a - p[0], self.b - p[1])

    def __rsub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return quad(p[0] - self.a, p[1] - self.b)

    def __mul__(self, other):
        if isinstance(other, _RATIONAL_TYPES):
            if not other:
                return mpq(0)
            o = _to_mpq(other)
            return QuadScalar(self.a * o, self.b * o)
        p = self._parts(other)
        if p is None:
            return NotImplemented
        c, d = p
        return quad(self.a * c + 15 * self.b * d, self.a * d + self.b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self * _inverse(*p)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return quad(*p) * _inverse(self.a, self.b)

    def __neg__(self):
        return QuadScalar(-self.a, -self.b)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.a == p[0] and self.b == p[1]

    def __hash__(self):
        if not self.b:
            return hash(self.a)
        return hash((self.a, self.b))

    def conjugate(self):
        """Galois conjugate ``a - b*sqrt(15)``."""
        return quad(self.a, -self.b)

    def field_norm(self):
        return self.a * self.a - 15 * self.b * self.b

    def __repr__(self):
        return f"QuadScalar({self.a}, {self.b})"

    def __str__(self):
        if not self.b:
            return str(self.a)
        s = "" if not self.a else f"{self.a} + "
        return f"{s}({self.b})√15"


SQRT15 = QuadScalar(0, 1)


def _inverse(a, b):
    n = a * a - 15 * b * b
    if not n:
        raise ZeroDivisionError("division by zero in Q(sqrt 15)")
    return quad(a / n, -b / n)


def quad(a, b=0):
    """Return ``a + b*sqrt(15)``; a plain ``mpq`` when ``b == 0``."""
    if not b:
        return _to_mpq(a)
    return QuadScalar(a, b)


def as_scalar(x):
    """Normalise ints, Fractions and zero-irrational QuadScalars."""
    if isinstance(x, QuadScalar):
        return quad(x.a, x.b)
    return _to_mpq(x)


def is_rational(x) -> bool:
    return isinstance(x, _RATIONAL_TYPES) or (isinstance(x, QuadScalar) and not x.b)


def parts(x):
    """``(a, b)`` with ``x = a + b*sqrt(15)``."""
    if isinstance(x, QuadScalar):
        return x.a, x.b
    return _to_mpq(x), mpq(0)


# ---------------------------------------------------------------------------
# Univariate polynomials


class UniPoly:
    """Polynomial in one variable; ``coeffs[k]`` multiplies ``λ**k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        cs = [as_scalar(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else mpq(0)

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly([x + y for x, y in zip(a, b)])

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return UniPoly([])
        out = [mpq(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = UniPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading()
        quo = [mpq(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq] / lead
            if not c:
                continue
            quo[k] = c
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return UniPoly(quo), UniPoly(rem)

    def __call__(self, x):
        acc = mpq(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            mono = "" if k == 0 else ("λ" if k == 1 else f"λ^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{c}{mono}" if not mono else f"({c}){mono}")
        return " + ".join(terms)


LAMBDA = UniPoly([0, 1])


def char_poly(m) -> UniPoly:
    """Monic ``det(λI - m)`` by Faddeev-LeVerrier.

    ``m`` is a square matrix given as a sequence of rows.
    """
    rows = [[as_scalar(x) for x in row] for row in m]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("char_poly needs a square matrix")
    coeffs = [mpq(0)] * (n + 1)
    coeffs[n] = mpq(1)
    am = None
    for k in range(1, n + 1):
        if k == 1:
            mk = [[mpq(1) if i == j else mpq(0) for j in range(n)] for i in range(n)]
        else:
            c_prev = coeffs[n - k + 1]
            mk = [[am[i][j] + (c_prev if i == j else 0) for j in range(n)] for i in range(n)]
        am = _matmul(rows, mk)
        tr = sum((am[i][i] for i in range(n)), mpq(0))
        coeffs[n - k] = as_scalar(-tr / k)
    return UniPoly(coeffs)


def _matmul(a, b):
    bt = list(zip(*b))
    out = []
    for row in a:
        out.append([_dot(row, col) for col in bt])
    return out


def _dot(u, v):
    acc = mpq(0)
    for x, y in zip(u, v):
        if x and y:
            acc = acc + x * y
    return acc


def weight_polynomial(m0: int, mult: dict[int, int]) -> UniPoly:
    """``λ**m0 * prod_k (λ² + k²)**m_k``."""
    p = LAMBDA ** m0
    for k, m in sorted(mult.items()):
        p = p * UniPoly([k * k, 0, 1]) ** m
    return p


def factor_weights(p: UniPoly, kmax: int = 10):
    """Split ``p`` as ``λ**m0 * prod_{k<=kmax} (λ²+k²)**m_k`` by trial division.

    Returns ``(m0, {k: m_k})``; keys with ``m_k == 0`` are omitted.  Raises
    ``ValueError`` when anything other than a unit remains.
    """
    if kmax < 1:
        raise ValueError("kmax must be >= 1")
    if p.is_zero():
        raise ValueError("not a compact-weight polynomial: zero polynomial")
    cs = list(p.coeffs)
    m0 = 0
    while cs and not cs[0]:
        cs.pop(0)
        m0 += 1
    rest = UniPoly(cs)
    mult: dict[int, int] = {}
    for k in range(1, kmax + 1):
        factor = UniPoly([k * k, 0, 1])
        while rest.degree >= 2:
            q, r = rest.divmod(factor)
            if not r.is_zero():
                break
            rest = q
            mult[k] = mult.get(k, 0) + 1
    if rest.degree != 0 or rest.coeffs[0] != 1:
        raise ValueError(f"not a compact-weight polynomial: residue {rest!r}")
    return m0, mult
