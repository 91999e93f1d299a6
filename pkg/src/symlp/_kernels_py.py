"""Pure-Python rational kernels.

The two hot loops of the package, matrix multiplication and the tableau
pivot, operate on parallel flat lists of numerators and denominators
(arbitrary-precision ints, denominators positive, every pair reduced).
`symlp._speedups` is the compiled twin of this module with the same
signatures and bit-identical results; `symlp.kernels` picks one at import
time.

Reduction discipline: inputs reduced in, outputs reduced out.  Products
cross-cancel before multiplying and sums reduce against the denominator
gcd, which keeps intermediate ints small during long pivot sequences.
"""

from math import gcd

IMPLEMENTATION = "python"


def mat_mul_q(m, k, n, an, ad, bn, bd):
    """Exact product of an (m x k) and a (k x n) rational matrix.

    `an`/`ad` and `bn`/`bd` are row-major numerator/denominator lists.
    Returns the (cn, cd) lists for the (m x n) product.
    """
    cn = [0] * (m * n)
    cd = [1] * (m * n)
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


def pivot_q(nrows, ncols, tn, td, pr, pc):
    """Gauss-Jordan pivot on a flat rational tableau, in place.

    Scales row `pr` so the pivot entry becomes 1, then eliminates column
    `pc` from every other row.  The pivot entry must be nonzero.
    """
    base = pr * ncols
    pn = tn[base + pc]
    pd = td[base + pc]
    if not pn:
        raise ZeroDivisionError("pivot on a zero entry")
    # Multiply row pr by pd/pn (sign-normalised so denominators stay > 0).
    if pn < 0:
        inv_n, inv_d = -pd, -pn
    else:
        inv_n, inv_d = pd, pn
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
