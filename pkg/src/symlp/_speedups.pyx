# cython: language_level=3
# cython: binding=False
"""Compiled rational kernels.

Same algorithms and signatures as `symlp._kernels_py`; values stay Python
ints (arbitrary precision is non-negotiable), the win comes from compiling
the loop bookkeeping.  Keep the two modules in lockstep.
"""

from math import gcd

IMPLEMENTATION = "c"


def mat_mul_q(Py_ssize_t m, Py_ssize_t k, Py_ssize_t n,
              list an, list ad, list bn, list bd):
    """Exact product of an (m x k) and a (k x n) rational matrix."""
    cdef Py_ssize_t i, j, t, arow, crow
    cdef list cn = [0] * (m * n)
    cdef list cd = [1] * (m * n)
    cdef object x, xd, y, yd, g1, g2, pn, pd, g, t2, gg, sn, sd
    for i in range(m):
        arow = i * k
        crow = i * n
        for j in range(n):
            sn = 0
            sd = 1
            for t in range(k):
                x = an[arow + t]
                if not x:
                    continue
                y = bn[t * n + j]
                if not y:
                    continue
                xd = ad[arow + t]
                yd = bd[t * n + j]
                g1 = gcd(x, yd)
                g2 = gcd(y, xd)
                pn = (x // g1) * (y // g2)
                pd = (xd // g2) * (yd // g1)
                g = gcd(sd, pd)
                if g == 1:
                    sn = sn * pd + pn * sd
                    sd = sd * pd
                else:
                    t2 = sn * (pd // g) + pn * (sd // g)
                    gg = gcd(t2, g)
                    sn = t2 // gg
                    sd = (sd // g) * (pd // gg)
            cn[crow + j] = sn
            cd[crow + j] = sd
    return cn, cd


def pivot_q(Py_ssize_t nrows, Py_ssize_t ncols,
            list tn, list td, Py_ssize_t pr, Py_ssize_t pc):
    """Gauss-Jordan pivot on a flat rational tableau, in place."""
    cdef Py_ssize_t base = pr * ncols
    cdef Py_ssize_t i, j, rbase
    cdef object pn, pd, inv_n, inv_d, x, xd, y, yd, g1, g2
    cdef object fn, fd, mn, md, a, b, g, t2, gg
    pn = tn[base + pc]
    pd = td[base + pc]
    if not pn:
        raise ZeroDivisionError("pivot on a zero entry")
    if pn < 0:
        inv_n = -pd
        inv_d = -pn
    else:
        inv_n = pd
        inv_d = pn
    for j in range(ncols):
        x = tn[base + j]
        if not x:
            continue
        xd = td[base + j]
        g1 = gcd(x, inv_d)
        g2 = gcd(inv_n, xd)
        tn[base + j] = (x // g1) * (inv_n // g2)
        td[base + j] = (xd // g2) * (inv_d // g1)
    for i in range(nrows):
        if i == pr:
            continue
        rbase = i * ncols
        fn = tn[rbase + pc]
        if not fn:
            continue
        fd = td[rbase + pc]
        for j in range(ncols):
            y = tn[base + j]
            if not y:
                continue
            yd = td[base + j]
            g1 = gcd(fn, yd)
            g2 = gcd(y, fd)
            mn = (fn // g1) * (y // g2)
            md = (fd // g2) * (yd // g1)
            a = tn[rbase + j]
            b = td[rbase + j]
            g = gcd(b, md)
            if g == 1:
                tn[rbase + j] = a * md - mn * b
                td[rbase + j] = b * md
            else:
                t2 = a * (md // g) - mn * (b // g)
                gg = gcd(t2, g)
                tn[rbase + j] = t2 // gg
                td[rbase + j] = (b // g) * (md // gg)
        tn[rbase + pc] = 0
        td[rbase + pc] = 1
