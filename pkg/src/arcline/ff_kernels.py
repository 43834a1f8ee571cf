"""numba kernel for the finite-field containment mask.

Kept in its own module so importing the package never pays the numba import
unless this backend is actually selected.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def containment_mask(values, coeffs, exps, offsets, p):
    """values: (L, width) int64 entries already reduced mod p.
    coeffs/exps/offsets: concatenated term data; poly q owns the term rows
    offsets[q]..offsets[q+1]. Returns the boolean mask of rows where every
    polynomial vanishes mod p."""
    num = values.shape[0]
    width = exps.shape[1]
    mask = np.ones(num, dtype=np.bool_)
    for i in range(num):
        for q in range(offsets.shape[0] - 1):
            acc = np.int64(0)
            for t in range(offsets[q], offsets[q + 1]):
                v = coeffs[t]
                for c in range(width):
                    e = exps[t, c]
                    for _ in range(e):
                        v = v * values[i, c] % p
                acc = (acc + v) % p
            if acc != 0:
                mask[i] = False
                break
    return mask
