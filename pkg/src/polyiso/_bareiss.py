"""Pure-Python fraction-free integer determinant (fallback kernel).

Bareiss-style elimination: every interior division is exact, so the whole
computation stays in arbitrary-precision integers with no rounding anywhere.
Intermediate entries are bounded by minors of the input (Hadamard), which
keeps integer growth to O(n log n + n log max|a_ij|) digits.
"""

from __future__ import annotations


def det_inplace(a: list[list[int]]) -> int:
    """Determinant of an integer matrix.  Destroys `a`."""
    n = len(a)
    if n == 0:
        return 1
    if n == 1:
        return a[0][0]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]
