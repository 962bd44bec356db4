"""Pure-numpy elimination kernels.

Fallback backend. Pivoting policy and failure reporting are identical to
the jit kernels in ``_kernels_numba`` so the two are interchangeable.
"""

import numpy as np


def lu_factor(a, piv, tol_abs):
    """Row-pivoted LU decomposition of ``a``, in place.

    On success returns -1 and leaves the combined L (unit diagonal implied)
    and U factors in ``a``, with ``piv[k]`` the row swapped into position k.
    Returns the failing column index when no pivot exceeds ``tol_abs``.
    """
    n = a.shape[0]
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) <= tol_abs:
            return k
        if p != k:
            a[[k, p]] = a[[p, k]]
        piv[k] = p
        a[k + 1:, k] /= a[k, k]
        a[k + 1:, k + 1:] -= np.outer(a[k + 1:, k], a[k, k + 1:])
    return -1


def lu_solve(lu, piv, b):
    """Solve for every column of ``b`` in place, given ``lu_factor`` output."""
    n = lu.shape[0]
    for k in range(n):
        p = piv[k]
        if p != k:
            b[[k, p]] = b[[p, k]]
    for i in range(1, n):
        b[i] -= lu[i, :i] @ b[:i]
    for i in range(n - 1, -1, -1):
        b[i] -= lu[i, i + 1:] @ b[i + 1:]
        b[i] /= lu[i, i]
