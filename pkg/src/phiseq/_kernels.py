"""Compiled inner loops for completeness testing.

A candidate initial state ``(1, a_1, ..., a_{k-1})`` is complete when the
first ``p - 1`` terms are distinct and nonzero and the next ``k`` terms repeat
the initial state.  ``seen`` is a per-worker stamp array of length ``p``; a
value is marked by writing the current stamp, so no reset is needed between
candidates.
"""

from __future__ import annotations

import numpy as np
from numba import njit


@njit(cache=True)
def _check(p, kappa, init, buf, seen, stamp):
    for i in range(kappa):
        v = init[i]
        if v == 0 or seen[v] == stamp:
            return False
        seen[v] = stamp
        buf[i] = v
    # buf[i] holds a_{n-kappa+i'} where i' cycles; pos is the slot of a_{n-kappa}.
    pos = 0
    for n in range(kappa, p - 1):
        nxt = pos + 1
        if nxt == kappa:
            nxt = 0
        v = buf[pos] + buf[nxt]
        if v >= p:
            v -= p
        if v == 0 or seen[v] == stamp:
            return False
        seen[v] = stamp
        buf[pos] = v
        pos = nxt
    for i in range(kappa):
        nxt = pos + 1
        if nxt == kappa:
            nxt = 0
        v = buf[pos] + buf[nxt]
        if v >= p:
            v -= p
        if v != init[i]:
            return False
        buf[pos] = v
        pos = nxt
    return True


@njit(cache=True)
def check_candidates(p, kappa, states):
    """Boolean mask of complete rows in ``states`` (shape ``(m, kappa)``)."""
    m = states.shape[0]
    out = np.zeros(m, dtype=np.bool_)
    seen = np.zeros(p, dtype=np.int64)
    buf = np.empty(kappa, dtype=np.int64)
    for r in range(m):
        out[r] = _check(p, kappa, states[r], buf, seen, r + 1)
    return out


@njit(cache=True)
def exhaustive(p, kappa):
    """Every complete initial state, in lexicographic order.

    Enumerates all ``p**(kappa-1)`` states ``(1, a_1, ..., a_{k-1})`` with an
    odometer over ``a_1..a_{k-1}``.
    """
    cap = 16
    found = np.empty((cap, kappa), dtype=np.int64)
    count = 0
    seen = np.zeros(p, dtype=np.int64)
    buf = np.empty(kappa, dtype=np.int64)
    state = np.zeros(kappa, dtype=np.int64)
    state[0] = 1
    stamp = 0
    while True:
        stamp += 1
        if _check(p, kappa, state, buf, seen, stamp):
            if count == cap:
                cap *= 2
                grown = np.empty((cap, kappa), dtype=np.int64)
                grown[:count] = found[:count]
                found = grown
            found[count] = state
            count += 1
        i = kappa - 1
        while i >= 1:
            state[i] += 1
            if state[i] < p:
                break
            state[i] = 0
            i -= 1
        if i == 0:
            break
    return found[:count].copy()


def warmup() -> None:
    """Compile (or load cached) kernels."""
    exhaustive(5, 2)
    check_candidates(5, 2, np.array([[1, 3]], dtype=np.int64))
