"""Bulk statistic sweeps over full symmetric groups.

The verification sweeps need every statistic of every permutation of 1..n for
n up to 9 or so, which is too hot for the per-object API in :mod:`.core`.
This module holds one table-at-a-time kernel in two interchangeable builds: a
numba-compiled loop and a vectorised pure-numpy twin.  Set
``PERMSHUFFLE_NO_NUMBA=1`` to force the numpy build; otherwise numba is used
when it imports cleanly.  Both produce identical arrays.

``udr`` is counted directly from the run structure of the 0-prefixed word, not
through its closed formula, so sweeps can be used to test that formula.
"""

from __future__ import annotations

import math
import os
from itertools import chain, permutations
from typing import NamedTuple, Optional

import numpy as np

ENV_FLAG = "PERMSHUFFLE_NO_NUMBA"


class SweepResult(NamedTuple):
    """Per-row statistic arrays for one permutation table."""

    des: np.ndarray
    maj: np.ndarray
    pk: np.ndarray
    epk: np.ndarray
    udr: np.ndarray
    bir: np.ndarray
    chi_plus: np.ndarray
    chi_minus: np.ndarray
    des_mask: np.ndarray


def perm_table(n: int) -> np.ndarray:
    """All permutations of 1..n, one per row, in lexicographic order.

    >>> perm_table(3)
    array([[1, 2, 3],
           [1, 3, 2],
           [2, 1, 3],
           [2, 3, 1],
           [3, 1, 2],
           [3, 2, 1]])
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    count = math.factorial(n)
    flat = np.fromiter(
        chain.from_iterable(permutations(range(1, n + 1))),
        dtype=np.int64,
        count=count * n,
    )
    return flat.reshape(count, n)


def _sweep_numpy(table: np.ndarray) -> SweepResult:
    rows, n = table.shape
    zeros = np.zeros(rows, dtype=np.int64)
    if n == 1:
        ones = np.ones(rows, dtype=np.int64)
        return SweepResult(
            zeros.copy(), zeros.copy(), zeros.copy(), ones.copy(), ones.copy(),
            ones, zeros.copy(), zeros.copy(), zeros.copy(),
        )
    asc = table[:, :-1] < table[:, 1:]
    desc = ~asc
    des = desc.sum(axis=1).astype(np.int64)
    positions = np.arange(1, n, dtype=np.int64)
    maj = (desc * positions).sum(axis=1).astype(np.int64)
    pk = (asc[:, :-1] & desc[:, 1:]).sum(axis=1).astype(np.int64)
    chi_plus = desc[:, 0].astype(np.int64)
    chi_minus = asc[:, -1].astype(np.int64)
    epk = pk + chi_plus + chi_minus
    bir = 1 + (asc[:, 1:] != asc[:, :-1]).sum(axis=1).astype(np.int64)
    padded = np.concatenate([np.ones((rows, 1), dtype=bool), asc], axis=1)
    udr = 1 + (padded[:, 1:] != padded[:, :-1]).sum(axis=1).astype(np.int64)
    weights = np.int64(1) << (positions - 1)
    des_mask = (desc * weights).sum(axis=1).astype(np.int64)
    return SweepResult(des, maj, pk, epk, udr, bir, chi_plus, chi_minus, des_mask)


def _kernel_source():
    import numba

    @numba.njit(cache=True)
    def sweep(table, out):
        rows, n = table.shape
        for r in range(rows):
            des = 0
            maj = 0
            pk = 0
            bir = 1
            udr = 1
            mask = 0
            prev_up = True
            for q in range(n - 1):
                up = table[r, q] < table[r, q + 1]
                if not up:
                    des += 1
                    maj += q + 1
                    mask |= 1 << q
                if q > 0:
                    if prev_up and not up:
                        pk += 1
                    if up != prev_up:
                        bir += 1
                if (q == 0 and not up) or (q > 0 and up != prev_up):
                    udr += 1
                prev_up = up
            chi_plus = 1 if table[r, 0] > table[r, 1] else 0
            chi_minus = 1 if table[r, n - 2] < table[r, n - 1] else 0
            out[r, 0] = des
            out[r, 1] = maj
            out[r, 2] = pk
            out[r, 3] = pk + chi_plus + chi_minus
            out[r, 4] = udr
            out[r, 5] = bir
            out[r, 6] = chi_plus
            out[r, 7] = chi_minus
            out[r, 8] = mask

    return sweep


_NUMBA_KERNEL = None


def _sweep_numba(table: np.ndarray) -> SweepResult:
    global _NUMBA_KERNEL
    if _NUMBA_KERNEL is None:
        _NUMBA_KERNEL = _kernel_source()
    rows, n = table.shape
    if n == 1:
        return _sweep_numpy(table)
    out = np.empty((rows, 9), dtype=np.int64)
    _NUMBA_KERNEL(table, out)
    return SweepResult(*(out[:, c].copy() for c in range(9)))


def numba_available() -> bool:
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


def active_backend(backend: Optional[str] = None) -> str:
    """Resolve a backend request against the env flag and numba presence."""
    if backend not in (None, "numba", "numpy"):
        raise ValueError(f"backend must be 'numba' or 'numpy', got {backend!r}")
    if backend is not None:
        return backend
    if os.environ.get(ENV_FLAG, "") not in ("", "0"):
        return "numpy"
    return "numba" if numba_available() else "numpy"


def stat_sweep(table: np.ndarray, backend: Optional[str] = None) -> SweepResult:
    """Row-wise statistics of a permutation table.

    ``des_mask`` packs the descent set as bits (bit i-1 set iff a descent at
    position i); rows must hold at most 64 columns for it to fit.
    """
    if table.ndim != 2:
        raise ValueError("expected a 2-d table, one permutation per row")
    if table.shape[1] > 64:
        raise ValueError("descent masks only support up to 64 columns")
    chosen = active_backend(backend)
    if chosen == "numba":
        return _sweep_numba(table)
    return _sweep_numpy(table)
