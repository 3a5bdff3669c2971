# cython: language_level=3
"""Compiled term-map kernel.

Behavioural twin of hooklab._kernel_py: same four functions, same
contract (canonical term maps in, canonical term maps out, exact int or
Fraction coefficients).  Only the loop bookkeeping is compiled; the
coefficient arithmetic stays in Python object space so arbitrary
precision is preserved.
"""


cdef inline tuple _add_exps(tuple ea, tuple eb):
    cdef Py_ssize_t i, n = len(ea)
    cdef list out = [None] * n
    for i in range(n):
        out[i] = ea[i] + eb[i]
    return tuple(out)


def mul_terms(dict a, dict b):
    """Return the product of two term maps as a new term map."""
    cdef dict out = {}
    cdef tuple ea, eb, key
    cdef object ca, cb, c
    if len(a) > len(b):
        a, b = b, a
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = _add_exps(ea, eb)
            c = out.get(key)
            if c is None:
                out[key] = ca * cb
            else:
                c = c + ca * cb
                if c:
                    out[key] = c
                else:
                    del out[key]
    return out


def iadd_terms(dict acc, dict b):
    """Add term map b into acc in place and return acc."""
    cdef tuple e
    cdef object c, cb
    for e, cb in b.items():
        c = acc.get(e)
        if c is None:
            acc[e] = cb
        else:
            c = c + cb
            if c:
                acc[e] = c
            else:
                del acc[e]
    return acc


def scale_terms(dict a, s):
    """Return term map a scaled by a nonzero scalar s."""
    cdef dict out = {}
    cdef tuple e
    cdef object c
    if not s:
        raise ValueError("scale_terms requires a nonzero scalar")
    for e, c in a.items():
        out[e] = c * s
    return out


def mul_monomial(dict a, tuple exps, coeff=1):
    """Return term map a times the single term coeff * x^exps."""
    cdef dict out = {}
    cdef tuple e
    cdef object c
    if not coeff:
        return out
    for e, c in a.items():
        out[_add_exps(e, exps)] = c * coeff
    return out
