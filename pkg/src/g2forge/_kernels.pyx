# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled elimination kernel.  Same contract as ``_kernels_py``."""


def ff_gauss_jordan(list a, b, Py_ssize_t ncols):
    cdef Py_ssize_t nrows = len(a)
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef bint quad = b is not None
    cdef bint trivial
    cdef list pivots = []
    cdef list rka, rkb, xa_row, xb_row, na_row, nb_row
    cdef list bl
    cdef object pa = 1, pb = 0, ka, kb, ea, eb, norm
    cdef object xa, xb, ya, yb, ta, tb
    cdef Py_ssize_t swaps = 0
    if quad:
        bl = b
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if (<list>a[i])[c] or (quad and (<list>bl[i])[c]):
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            a[piv], a[r] = a[r], a[piv]
            if quad:
                bl[piv], bl[r] = bl[r], bl[piv]
            swaps += 1
        rka = a[r]
        ka = rka[c]
        if not quad:
            trivial = pa == 1
            for i in range(nrows):
                if i == r:
                    continue
                xa_row = a[i]
                ea = xa_row[c]
                na_row = [None] * ncols
                if trivial:
                    for j in range(ncols):
                        na_row[j] = ka * xa_row[j] - ea * rka[j]
                else:
                    for j in range(ncols):
                        na_row[j] = (ka * xa_row[j] - ea * rka[j]) // pa
                a[i] = na_row
            pa = ka
        else:
            rkb = bl[r]
            kb = rkb[c]
            norm = pa * pa - 15 * pb * pb
            trivial = pa == 1 and pb == 0
            for i in range(nrows):
                if i == r:
                    continue
                xa_row = a[i]
                xb_row = bl[i]
                ea = xa_row[c]
                eb = xb_row[c]
                na_row = [None] * ncols
                nb_row = [None] * ncols
                for j in range(ncols):
                    xa = xa_row[j]
                    xb = xb_row[j]
                    ya = rka[j]
                    yb = rkb[j]
                    ta = ka * xa + 15 * kb * xb - ea * ya - 15 * eb * yb
                    tb = ka * xb + kb * xa - ea * yb - eb * ya
                    if not trivial:
                        ta, tb = (ta * pa - 15 * tb * pb) // norm, (tb * pa - ta * pb) // norm
                    na_row[j] = ta
                    nb_row[j] = tb
                a[i] = na_row
                bl[i] = nb_row
            pa, pb = ka, kb
        pivots.append(c)
        r += 1
    return r, pivots, (pa, pb), swaps
