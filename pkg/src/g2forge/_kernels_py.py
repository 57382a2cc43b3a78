"""Pure-Python elimination kernel (fallback for the compiled ``_kernels``).

Entries are Python ints.  A matrix over Z[sqrt(15)] is passed as two
integer matrices ``a`` and ``b`` meaning ``a + b*sqrt(15)``; ``b`` is
``None`` for integer input.
"""

from __future__ import annotations


def ff_gauss_jordan(a, b, ncols):
    """Fraction-free Gauss-Jordan elimination, in place.

    After the call every pivot row has the same pivot value ``d`` (returned),
    all other entries of pivot columns are zero, and the rows below ``rank``
    are zero.  Returns ``(rank, pivots, (d_a, d_b), swaps)``.
    """
    nrows = len(a)
    pivots = []
    swaps = 0
    pa, pb = 1, 0
    r = 0
    quad = b is not None
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if a[i][c] or (quad and b[i][c]):
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            a[piv], a[r] = a[r], a[piv]
            if quad:
                b[piv], b[r] = b[r], b[piv]
            swaps += 1
        ka = a[r][c]
        rka = a[r]
        if not quad:
            for i in range(nrows):
                if i == r:
                    continue
                e = a[i][c]
                row = a[i]
                if pa == 1:
                    a[i] = [ka * x - e * y for x, y in zip(row, rka)]
                else:
                    a[i] = [(ka * x - e * y) // pa for x, y in zip(row, rka)]
            pa = ka
        else:
            kb = b[r][c]
            rkb = b[r]
            norm = pa * pa - 15 * pb * pb
            trivial = pa == 1 and pb == 0
            for i in range(nrows):
                if i == r:
                    continue
                ea, eb = a[i][c], b[i][c]
                xa_row, xb_row = a[i], b[i]
                na_row = []
                nb_row = []
                for j in range(ncols):
                    xa = xa_row[j]
                    xb = xb_row[j]
                    ya = rka[j]
                    yb = rkb[j]
                    # k*x - e*y
                    ta = ka * xa + 15 * kb * xb - ea * ya - 15 * eb * yb
                    tb = ka * xb + kb * xa - ea * yb - eb * ya
                    if not trivial:
                        # divide by the previous pivot via its conjugate
                        ta, tb = (ta * pa - 15 * tb * pb) // norm, (tb * pa - ta * pb) // norm
                    na_row.append(ta)
                    nb_row.append(tb)
                a[i] = na_row
                b[i] = nb_row
            pa, pb = ka, kb
        pivots.append(c)
        r += 1
    return r, pivots, (pa, pb), swaps
