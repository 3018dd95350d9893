"""Pure-Python versions of the hot loops in ``_kernels.pyx``.

Both modules expose the same functions with the same results; see
:mod:`metrigraph.kernels` for how one is picked.
"""

from array import array

POLY_F = 0
POLY_G = 1
ARITY = {POLY_F: 5, POLY_G: 6}


def f_poly(s, t, k, m, n):
    return ((s + t + k + m + n + 4) ** 2 + 2 * (s * k + s * t + k * t + m * n + k * n + s * n)
            + (n + 2) * (s + k) + (m + 2) * (s + k + t + 1) + n * (t + 5))


def g_poly(s, t, k, m, n, h):
    return ((s + t + k + m + n + h + 5) ** 2 + 2 * (s * k + s * t + k * t + m * n + k * n + s * n)
            + (n + 4) * (s + k) + (m + 2) * (s + k + t + 2) + n * (t + 6)
            + h * (3 * s + 3 * k + 2 * n + 2 * m + t + 6))


class BudgetExceeded(Exception):
    pass


def _new_tables(bound):
    return bytearray(bound + 1), array("q", bytes(8 * 6 * (bound + 1)))


def _f_loops(bound, s_lo, s_hi, budget, attained, witness):
    evals = 0
    F = f_poly
    for s in range(s_lo, s_hi):
        if F(s, 0, 0, 0, 0) > bound:
            break
        t = 0
        while F(s, t, 0, 0, 0) <= bound:
            k = 0
            while F(s, t, k, 0, 0) <= bound:
                m = 0
                while F(s, t, k, m, 0) <= bound:
                    n = 0
                    while True:
                        val = F(s, t, k, m, n)
                        if val > bound:
                            break
                        evals += 1
                        if not attained[val]:
                            attained[val] = 1
                            witness[val * 6:val * 6 + 5] = array("q", (s, t, k, m, n))
                        n += 1
                    if evals > budget:
                        raise BudgetExceeded(evals)
                    m += 1
                k += 1
            t += 1
    return evals


def _g_loops(bound, s_lo, s_hi, budget, attained, witness):
    evals = 0
    G = g_poly
    for s in range(s_lo, s_hi):
        if G(s, 0, 0, 0, 0, 0) > bound:
            break
        t = 0
        while G(s, t, 0, 0, 0, 0) <= bound:
            k = 0
            while G(s, t, k, 0, 0, 0) <= bound:
                m = 0
                while G(s, t, k, m, 0, 0) <= bound:
                    n = 0
                    while G(s, t, k, m, n, 0) <= bound:
                        h = 0
                        while True:
                            val = G(s, t, k, m, n, h)
                            if val > bound:
                                break
                            evals += 1
                            if not attained[val]:
                                attained[val] = 1
                                witness[val * 6:val * 6 + 6] = array("q", (s, t, k, m, n, h))
                            h += 1
                        if evals > budget:
                            raise BudgetExceeded(evals)
                        n += 1
                    m += 1
                k += 1
            t += 1
    return evals


def poly_attained(which, bound, s_lo, s_hi, budget):
    """Mark every value <= ``bound`` taken by F (``which=0``) or G (``which=1``).

    The first argument runs over ``[s_lo, s_hi)``.  Both polynomials increase
    in every argument, so each loop stops at the first value past ``bound``.
    Returns ``(attained, witness, evaluations)``: ``attained[w]`` is 1 when
    ``w`` is hit and ``witness[6*w:6*w+6]`` holds the lexicographically first
    argument tuple, zero padded.  Raises :class:`BudgetExceeded` once more than
    ``budget`` values have been evaluated.
    """
    attained, witness = _new_tables(bound)
    loops = _f_loops if which == POLY_F else _g_loops
    evals = loops(bound, s_lo, s_hi, budget, attained, witness)
    return attained, witness, evals


def wiener_from_levels(levels):
    """Wiener index of the unit tree with the given level sequence."""
    n = len(levels)
    size = [1] * n
    stack = []
    total = 0
    for i in range(n):
        while stack and levels[stack[-1]] >= levels[i]:
            done = stack.pop()
            size[stack[-1]] += size[done]
            total += size[done] * (n - size[done])
        stack.append(i)
    while len(stack) > 1:
        done = stack.pop()
        size[stack[-1]] += size[done]
        total += size[done] * (n - size[done])
    return total
