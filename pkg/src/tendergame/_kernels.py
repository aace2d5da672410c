"""Hot counting kernel for the Monte Carlo engine, numba-jitted when allowed.

Backend selection: the TENDERGAME_BACKEND environment variable may be set to
"numba", "numpy" or "auto" (default).  "auto" uses numba when it imports,
otherwise the pure-numpy path.  Both paths return identical integer counts,
so every downstream statistic is bit-identical across backends.
"""

from __future__ import annotations

import os

import numpy as np

_ENV_VAR = "TENDERGAME_BACKEND"


def count_classes_numpy(u: np.ndarray, gamma: float, p_able: float,
                        p_unable: float) -> np.ndarray:
    """Tally (type, signal) outcome classes from uniform draws.

    Row i of ``u`` holds the draws of replication i; column 0 decides the
    type (able iff u < gamma), column 1 the benchmark signal (says-able iff
    u < p(type)).  Class index = 2 * able + says_able.
    """
    able = u[:, 0] < gamma
    says = u[:, 1] < np.where(able, p_able, p_unable)
    idx = 2 * able.astype(np.int64) + says.astype(np.int64)
    return np.bincount(idx, minlength=4).astype(np.int64)


def _build_numba_kernel():
    from numba import njit

    @njit(cache=True, nogil=True)
    def count_classes_numba(u, gamma, p_able, p_unable):
        counts = np.zeros(4, dtype=np.int64)
        for i in range(u.shape[0]):
            able = u[i, 0] < gamma
            p = p_able if able else p_unable
            says = u[i, 1] < p
            counts[2 * int(able) + int(says)] += 1
        return counts

    return count_classes_numba


def _resolve(choice: str | None = None):
    choice = (choice or os.environ.get(_ENV_VAR, "auto")).lower()
    if choice == "numpy":
        return count_classes_numpy, "numpy"
    if choice == "numba":
        return _build_numba_kernel(), "numba"
    if choice == "auto":
        try:
            return _build_numba_kernel(), "numba"
        except ImportError:
            return count_classes_numpy, "numpy"
    raise ValueError(f"{_ENV_VAR} must be 'numba', 'numpy' or 'auto', got {choice!r}")


count_classes, BACKEND_NAME = _resolve()


def get_kernel(backend: str | None = None):
    """The counting kernel and its name; ``backend`` overrides the env flag."""
    if backend is None:
        return count_classes, BACKEND_NAME
    return _resolve(backend)
