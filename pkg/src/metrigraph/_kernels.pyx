# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the enumeration loops in ``_kernels_py``."""

from array import array

from cpython.array cimport array as carray

from metrigraph._kernels_py import BudgetExceeded, POLY_F, POLY_G, ARITY  # noqa: F401


cdef inline long long f_c(long long s, long long t, long long k, long long m, long long n) nogil:
    cdef long long a = s + t + k + m + n + 4
    return (a * a + 2 * (s * k + s * t + k * t + m * n + k * n + s * n)
            + (n + 2) * (s + k) + (m + 2) * (s + k + t + 1) + n * (t + 5))


cdef inline long long g_c(long long s, long long t, long long k, long long m, long long n,
                          long long h) nogil:
    cdef long long a = s + t + k + m + n + h + 5
    return (a * a + 2 * (s * k + s * t + k * t + m * n + k * n + s * n)
            + (n + 4) * (s + k) + (m + 2) * (s + k + t + 2) + n * (t + 6)
            + h * (3 * s + 3 * k + 2 * n + 2 * m + t + 6))


def f_poly(s, t, k, m, n):
    return f_c(s, t, k, m, n)


def g_poly(s, t, k, m, n, h):
    return g_c(s, t, k, m, n, h)


cdef long long _f_loops(long long bound, long long s_lo, long long s_hi, long long budget,
                        unsigned char[:] att, long long[:] wit) nogil:
    cdef long long s, t, k, m, n, val, evals = 0
    s = s_lo
    while s < s_hi and f_c(s, 0, 0, 0, 0) <= bound:
        t = 0
        while f_c(s, t, 0, 0, 0) <= bound:
            k = 0
            while f_c(s, t, k, 0, 0) <= bound:
                m = 0
                while f_c(s, t, k, m, 0) <= bound:
                    n = 0
                    while True:
                        val = f_c(s, t, k, m, n)
                        if val > bound:
                            break
                        evals += 1
                        if att[val] == 0:
                            att[val] = 1
                            wit[val * 6] = s
                            wit[val * 6 + 1] = t
                            wit[val * 6 + 2] = k
                            wit[val * 6 + 3] = m
                            wit[val * 6 + 4] = n
                        n += 1
                    if evals > budget:
                        return -evals
                    m += 1
                k += 1
            t += 1
        s += 1
    return evals


cdef long long _g_loops(long long bound, long long s_lo, long long s_hi, long long budget,
                        unsigned char[:] att, long long[:] wit) nogil:
    cdef long long s, t, k, m, n, h, val, evals = 0
    s = s_lo
    while s < s_hi and g_c(s, 0, 0, 0, 0, 0) <= bound:
        t = 0
        while g_c(s, t, 0, 0, 0, 0) <= bound:
            k = 0
            while g_c(s, t, k, 0, 0, 0) <= bound:
                m = 0
                while g_c(s, t, k, m, 0, 0) <= bound:
                    n = 0
                    while g_c(s, t, k, m, n, 0) <= bound:
                        h = 0
                        while True:
                            val = g_c(s, t, k, m, n, h)
                            if val > bound:
                                break
                            evals += 1
                            if att[val] == 0:
                                att[val] = 1
                                wit[val * 6] = s
                                wit[val * 6 + 1] = t
                                wit[val * 6 + 2] = k
                                wit[val * 6 + 3] = m
                                wit[val * 6 + 4] = n
                                wit[val * 6 + 5] = h
                            h += 1
                        if evals > budget:
                            return -evals
                        n += 1
                    m += 1
                k += 1
            t += 1
        s += 1
    return evals


def poly_attained(int which, long long bound, long long s_lo, long long s_hi, long long budget):
    """Same contract as ``_kernels_py.poly_attained``."""
    attained = bytearray(bound + 1)
    witness = array("q", bytes(8 * 6 * (bound + 1)))
    cdef unsigned char[:] att = attained
    cdef long long[:] wit = witness
    cdef long long evals
    with nogil:
        if which == 0:
            evals = _f_loops(bound, s_lo, s_hi, budget, att, wit)
        else:
            evals = _g_loops(bound, s_lo, s_hi, budget, att, wit)
    if evals < 0:
        raise BudgetExceeded(-evals)
    return attained, witness, evals


def wiener_from_levels(levels):
    """Wiener index of the unit tree with the given level sequence."""
    cdef Py_ssize_t n = len(levels), i, top = 0, done
    cdef long long total = 0
    cdef carray lv = array("q", levels)
    cdef carray size = array("q", [1]) * n
    cdef carray stack = array("q", [0]) * (n + 1)
    cdef long long[:] L = lv
    cdef long long[:] S = size
    cdef long long[:] st = stack
    for i in range(n):
        while top > 0 and L[st[top - 1]] >= L[i]:
            top -= 1
            done = st[top]
            S[st[top - 1]] += S[done]
            total += S[done] * (n - S[done])
        st[top] = i
        top += 1
    while top > 1:
        top -= 1
        done = st[top]
        S[st[top - 1]] += S[done]
        total += S[done] * (n - S[done])
    return total
