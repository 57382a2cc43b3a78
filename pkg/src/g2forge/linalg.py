"""Dense exact matrices and fraction-free elimination over Q(sqrt 15).

Elimination clears denominators row by row, hands integer (or
``Z[sqrt 15]``) rows to the kernel in :mod:`g2forge._backend`, and maps the
result back to field elements.
"""

from __future__ import annotations

from math import lcm
from ._backend import ff_gauss_jordan
from .exact_field import as_scalar, mpq, parts, quad

ZERO = mpq(0)
ONE = mpq(1)


class Mat:
    """Immutable dense matrix with exact entries."""

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows):
        rs = tuple(tuple(as_scalar(x) for x in row) for row in rows)
        self.rows = rs
        self.nrows = len(rs)
        self.ncols = len(rs[0]) if rs else 0
        self._hash = None

    @classmethod
    def _raw(cls, rows):
        m = cls.__new__(cls)
        m.rows = rows
        m.nrows = len(rows)
        m.ncols = len(rows[0]) if rows else 0
        m._hash = None
        return m

    @classmethod
    def zeros(cls, n, m=None):
        m = n if m is None else m
        return cls._raw(tuple((ZERO,) * m for _ in range(n)))

    @classmethod
    def identity(cls, n):
        return cls._raw(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, cols):
        return cls._raw(tuple(zip(*[tuple(as_scalar(x) for x in c) for c in cols])))

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def columns(self):
        return list(zip(*self.rows))

    @property
    def T(self):
        return type(self)._raw(tuple(zip(*self.rows)))

    def flat(self):
        return tuple(x for r in self.rows for x in r)

    def __add__(self, other):
        return self._like(tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __sub__(self, other):
        return self._like(tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self.rows, other.rows)))

    def __neg__(self):
        return self._like(tuple(tuple(-x for x in r) for r in self.rows))

    def __mul__(self, c):
        if isinstance(c, Mat):
            raise TypeError("use @ for matrix products")
        c = as_scalar(c)
        return self._like(tuple(tuple(x * c for x in r) for r in self.rows))

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Mat):
            cols = list(zip(*other.rows))
            return self._like(tuple(tuple(dot(r, c) for c in cols) for r in self.rows))
        return tuple(dot(r, other) for r in self.rows)

    def _like(self, rows):
        # results of arithmetic keep the subclass only when shape is preserved
        cls = type(self)
        if cls is not Mat and rows and (len(rows), len(rows[0])) != self.shape:
            cls = Mat
        return cls._raw(rows)

    def bracket(self, other):
        return self @ other - other @ self

    def trace(self):
        acc = ZERO
        for i in range(min(self.nrows, self.ncols)):
            acc = acc + self.rows[i][i]
        return acc

    def is_zero(self):
        return not any(x for r in self.rows for x in r)

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def __repr__(self):
        body = ",\n ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self.rows)
        return f"{type(self).__name__}([{body}])"


def dot(u, v):
    acc = ZERO
    for x, y in zip(u, v):
        if x and y:
            acc = acc + x * y
    return acc


def lin_comb(coeffs, vectors):
    """``sum_i coeffs[i] * vectors[i]`` for tuples of scalars."""
    n = len(vectors[0])
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if not c:
            continue
        for k in range(n):
            if v[k]:
                out[k] = out[k] + c * v[k]
    return tuple(out)


# ---------------------------------------------------------------------------
# elimination


def _integer_rows(rows):
    """Scale each row to integer parts; returns (a_rows, b_rows or None)."""
    a_rows, b_rows = [], []
    quadratic = False
    for row in rows:
        ps = [parts(x) for x in row]
        den = 1
        for a, b in ps:
            if a:
                den = lcm(den, int(a.denominator))
            if b:
                den = lcm(den, int(b.denominator))
                quadratic = True
        a_rows.append([int(a * den) for a, _ in ps])
        b_rows.append([int(b * den) for _, b in ps])
    return a_rows, (b_rows if quadratic else None)


class Echelon:
    """Result of fraction-free Gauss-Jordan on a matrix.

    ``reduced`` holds the reduced row echelon form over the field (pivot
    entries equal to one).
    """

    __slots__ = ("rank", "pivots", "ncols", "_a", "_b", "_d", "swaps")

    def __init__(self, rows, ncols=None):
        rows = [list(r) for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        self.ncols = ncols
        a, b = _integer_rows(rows)
        rank, pivots, d, swaps = ff_gauss_jordan(a, b, ncols)
        self.rank = rank
        self.pivots = pivots
        self._a = a[:rank]
        self._b = None if b is None else b[:rank]
        self._d = d
        self.swaps = swaps

    def entry(self, r, j):
        """Entry of the reduced row echelon form."""
        da, db = self._d
        ea = self._a[r][j]
        eb = 0 if self._b is None else self._b[r][j]
        if not ea and not eb:
            return ZERO
        return quad(ea, eb) / quad(da, db)

    @property
    def reduced(self):
        return [tuple(self.entry(r, j) for j in range(self.ncols)) for r in range(self.rank)]

    def nullspace(self):
        free = [j for j in range(self.ncols) if j not in set(self.pivots)]
        basis = []
        for f in free:
            v = [ZERO] * self.ncols
            v[f] = ONE
            for r, p in enumerate(self.pivots):
                v[p] = -self.entry(r, f)
            basis.append(tuple(v))
        return basis


def rank(rows, ncols=None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    return Echelon(rows, ncols).rank


def rref(rows, ncols=None):
    e = Echelon(list(rows), ncols)
    return e.rank, e.pivots, e.reduced


def nullspace(rows, ncols: int):
    """Basis of ``{x : A x = 0}`` for ``A`` given by ``rows``."""
    rows = list(rows)
    if not rows:
        return [tuple(ONE if i == j else ZERO for j in range(ncols)) for i in range(ncols)]
    return Echelon(rows, ncols).nullspace()


def solve(a_rows, rhs):
    """One solution of ``A x = rhs`` or ``None`` when inconsistent."""
    n = len(a_rows[0])
    aug = [tuple(r) + (as_scalar(c),) for r, c in zip(a_rows, rhs)]
    e = Echelon(aug, n + 1)
    if e.pivots and e.pivots[-1] == n:
        return None
    x = [ZERO] * n
    for r, p in enumerate(e.pivots):
        x[p] = e.entry(r, n)
    return tuple(x)


def det(m) -> object:
    rows = [list(r) for r in (m.rows if isinstance(m, Mat) else m)]
    n = len(rows)
    if n == 0:
        return ONE
    # undo the per-row scaling applied before elimination
    scale = ONE
    for row in rows:
        den = 1
        for x in row:
            a, b = parts(x)
            if a:
                den = lcm(den, int(a.denominator))
            if b:
                den = lcm(den, int(b.denominator))
        scale = scale * den
    e = Echelon(rows, n)
    if e.rank < n:
        return ZERO
    d = quad(*e._d)
    if e.swaps % 2:
        d = -d
    return d / scale


def leading_minors(m: Mat):
    return [det([r[:k] for r in m.rows[:k]]) for k in range(1, m.nrows + 1)]


def is_independent(vectors) -> bool:
    vectors = list(vectors)
    return rank(vectors) == len(vectors)


def independent_subset(vectors):
    """Indices of a maximal independent subset, chosen greedily in order."""
    vectors = list(vectors)
    if not vectors:
        return []
    # pivots of the transpose pick the first independent columns
    e = Echelon([list(c) for c in zip(*vectors)], len(vectors))
    return list(e.pivots)


def span_basis(vectors):
    vectors = list(vectors)
    return [vectors[i] for i in independent_subset(vectors)]


def in_span(basis, v) -> bool:
    basis = list(basis)
    if not basis:
        return not any(v)
    return rank(basis + [tuple(v)]) == rank(basis)


def span_contains(big, small) -> bool:
    big, small = list(big), list(small)
    r = rank(big) if big else 0
    return (rank(big + small) if (big or small) else 0) == r


def span_equal(u, v) -> bool:
    u, v = list(u), list(v)
    ru = rank(u) if u else 0
    rv = rank(v) if v else 0
    return ru == rv and span_contains(u, v)


def intersect(u, v, n):
    """Basis of span(u) ∩ span(v) inside a space of dimension ``n``."""
    u, v = list(u), list(v)
    if not u or not v:
        return []
    cols = [tuple(x) for x in u] + [tuple(-y for y in w) for w in v]
    ker = nullspace(list(zip(*cols)), len(cols))
    out = [lin_comb(k[: len(u)], u) for k in ker]
    return span_basis(out) if out else []


def orthogonal_complement(vectors, form, n):
    """``{x : form(x, v) = 0 for v in vectors}`` for a bilinear ``form`` matrix."""
    rows = [tuple(dot(v, col) for col in form.columns()) for v in vectors]
    return nullspace(rows, n)


class CoordinateSystem:
    """Coordinates with respect to a fixed independent family of vectors."""

    def __init__(self, basis):
        self.basis = [tuple(as_scalar(x) for x in b) for b in basis]
        self.dim = len(self.basis)
        n = len(self.basis[0])
        # coordinate positions where the basis restricts to an invertible block
        e = Echelon([list(b) for b in self.basis], n)
        if e.rank != self.dim:
            raise ValueError("basis vectors are linearly dependent")
        self.rows_used = list(e.pivots)
        block = [[self.basis[j][i] for j in range(self.dim)] for i in self.rows_used]
        self.inverse = invert(block)

    def coords(self, v, check: bool = True):
        v = tuple(v)
        c = tuple(dot(row, [v[i] for i in self.rows_used]) for row in self.inverse)
        if check and lin_comb(c, self.basis) != tuple(as_scalar(x) for x in v):
            raise ValueError("vector not in span")
        return c

    def contains(self, v) -> bool:
        try:
            self.coords(v)
        except ValueError:
            return False
        return True


def invert(block):
    n = len(block)
    aug = [list(block[i]) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
    e = Echelon(aug, 2 * n)
    if e.rank < n or e.pivots[n - 1] != n - 1:
        raise ZeroDivisionError("singular matrix")
    return [tuple(e.entry(r, n + j) for j in range(n)) for r in range(n)]


def signature(form: Mat):
    """``(n_plus, n_minus, n_zero)`` of a symmetric form, by congruence."""
    a = [list(r) for r in form.rows]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        i = next((j for j in active if a[j][j]), None)
        if i is None:
            # all diagonal entries vanish: pair up via x_i + x_j
            pair = next(((p, q) for p in active for q in active if p != q and a[p][q]), None)
            if pair is None:
                break
            p, q = pair
            for t in range(n):
                a[p][t] = a[p][t] + a[q][t]
            for t in range(n):
                a[t][p] = a[t][p] + a[t][q]
            continue
        piv = a[i][i]
        if _positive(piv):
            pos += 1
        else:
            neg += 1
        active.remove(i)
        for j in active:
            f = a[j][i] / piv
            if not f:
                continue
            for t in range(n):
                a[j][t] = a[j][t] - f * a[i][t]
            for t in range(n):
                a[t][j] = a[t][j] - f * a[t][i]
    return pos, neg, n - pos - neg


def _positive(x) -> bool:
    a, b = parts(x)
    if not b:
        return a > 0
    # sign of a + b*sqrt(15)
    if a >= 0 and b >= 0:
        return True
    if a <= 0 and b <= 0:
        return False
    if a > 0:
        return a * a > 15 * b * b
    return 15 * b * b > a * a


def is_positive(x) -> bool:
    return bool(x) and _positive(x)


__all__ = [
    "Mat",
    "Echelon",
    "CoordinateSystem",
    "dot",
    "lin_comb",
    "rank",
    "rref",
    "nullspace",
    "solve",
    "det",
    "leading_minors",
    "invert",
    "is_independent",
    "independent_subset",
    "span_basis",
    "in_span",
    "span_contains",
    "span_equal",
    "intersect",
    "orthogonal_complement",
    "signature",
    "is_positive",
]
